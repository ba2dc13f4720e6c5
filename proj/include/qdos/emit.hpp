#pragma once

#include <string>
#include <vector>

#include "qdos/calibrate.hpp"
#include "qdos/effects.hpp"
#include "qdos/risk.hpp"
#include "qdos/scenario.hpp"

namespace qdos {

enum class EmitFormat { csv, json };

/// Shortest decimal form that round-trips to the same double.
std::string format_double(double value);

std::string emit_sweep(const SweepResult& result, EmitFormat format);
std::string emit_effects(const EffectReport& report, EmitFormat format);
std::string emit_risk(const std::vector<RiskRow>& rows, EmitFormat format);
std::string emit_chain(const ScenarioSpec& spec, double p_ini, const ChainResult& chain,
                       EmitFormat format);
std::string emit_calibration(const CalibrationResult& result, EmitFormat format);
std::string emit_fov_table(const std::vector<double>& angles_rad,
                           const std::vector<double>& distances_m, EmitFormat format);
std::string emit_footprint(const ScenarioSpec& spec, double p_ini,
                           const FootprintResult& footprint, EmitFormat format);
std::string emit_threshold(const ScenarioSpec& spec, const std::string& effect,
                           BandEdge edge, const std::optional<double>& power,
                           EmitFormat format);

} // namespace qdos
