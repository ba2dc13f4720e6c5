#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qdos/effects.hpp"

namespace qdos {

enum class Likelihood { improbable, remote, probable, frequent };
enum class Impact { negligible, marginal, critical, catastrophic };
enum class RiskGrade { none, low, medium, serious, high };

/// 4x4 likelihood/impact matrix lookup.
RiskGrade risk_class(Likelihood likelihood, Impact impact);

/// Effect-name -> impact grouping used to grade a classification outcome.
/// Overridable; the default groups dazzle-class effects as Marginal,
/// detector/optics damage as Critical and melting as Catastrophic.
using ImpactGrouping = std::map<std::string, Impact>;

ImpactGrouping default_impact_grouping();

/// Worst impact implied by the triggered effects (Negligible when empty).
Impact impact_from_effects(const EffectReport& report,
                           const ImpactGrouping& grouping = default_impact_grouping());

enum class AttackType { in_fov, out_of_fov };

/// One qualitative scenario assessment. Likelihood/impact are inputs, not
/// computed; absent values mark an inapplicable attack (risk "None").
struct RiskAssessment {
    std::string scenario;
    AttackType attack;
    std::optional<Likelihood> likelihood;
    std::optional<Impact> impact;
};

struct RiskRow {
    RiskAssessment assessment;
    RiskGrade risk;
};

/// Applies risk_class per row.
std::vector<RiskRow> scenario_risk_table(const std::vector<RiskAssessment>& assessments);

/// The published 18-row assessment (9 scenarios x in/out-of-FOV).
std::vector<RiskAssessment> default_risk_assessment();

std::string to_string(Likelihood likelihood);
std::string to_string(Impact impact);
std::string to_string(RiskGrade grade);
std::string to_string(AttackType attack);

std::optional<Likelihood> likelihood_from_string(const std::string& text);
std::optional<Impact> impact_from_string(const std::string& text);
std::optional<AttackType> attack_from_string(const std::string& text);

} // namespace qdos
