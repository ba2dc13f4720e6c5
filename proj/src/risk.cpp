#include "qdos/risk.hpp"

namespace qdos {

RiskGrade risk_class(Likelihood likelihood, Impact impact) {
    static constexpr RiskGrade table[4][4] = {
        // Negligible        Marginal            Critical            Catastrophic
        {RiskGrade::low, RiskGrade::low, RiskGrade::medium, RiskGrade::medium},      // Improbable
        {RiskGrade::low, RiskGrade::medium, RiskGrade::serious, RiskGrade::serious}, // Remote
        {RiskGrade::medium, RiskGrade::serious, RiskGrade::serious, RiskGrade::high},// Probable
        {RiskGrade::medium, RiskGrade::serious, RiskGrade::high, RiskGrade::high},   // Frequent
    };
    return table[static_cast<int>(likelihood)][static_cast<int>(impact)];
}

ImpactGrouping default_impact_grouping() {
    return {
        {"Too high noise for SPD", Impact::marginal},
        {"Non-gated SPD APD blinding", Impact::marginal},
        {"APD thermal blinding", Impact::marginal},
        {"CCD image transducer saturation", Impact::marginal},
        {"APD permanent blinding, lower sensitivity", Impact::critical},
        {"APD structural damage, complete insensitivity", Impact::critical},
        {"Attenuators damage", Impact::critical},
        {"Polarisation spatial filter degradation", Impact::critical},
        {"Optical glass melting", Impact::catastrophic},
        {"Melting initiation threshold for aluminium", Impact::catastrophic},
    };
}

Impact impact_from_effects(const EffectReport& report, const ImpactGrouping& grouping) {
    Impact worst = Impact::negligible;
    for (const auto& effect : report.triggered) {
        const auto it = grouping.find(effect.name);
        if (it == grouping.end())
            continue;
        if (static_cast<int>(it->second) > static_cast<int>(worst))
            worst = it->second;
    }
    return worst;
}

std::vector<RiskRow> scenario_risk_table(const std::vector<RiskAssessment>& assessments) {
    std::vector<RiskRow> rows;
    rows.reserve(assessments.size());
    for (const auto& a : assessments) {
        const RiskGrade grade = (a.likelihood && a.impact)
                                    ? risk_class(*a.likelihood, *a.impact)
                                    : RiskGrade::none;
        rows.push_back({a, grade});
    }
    return rows;
}

std::vector<RiskAssessment> default_risk_assessment() {
    using L = Likelihood;
    using I = Impact;
    const auto in = AttackType::in_fov;
    const auto out = AttackType::out_of_fov;
    return {
        {"Ground-LEO-Ground", in, std::nullopt, std::nullopt},
        {"Ground-LEO", in, L::improbable, I::catastrophic},
        {"Ground-GEO", in, L::improbable, I::critical},
        {"Air-Ground", in, L::improbable, I::critical},
        {"Air-LEO", in, L::improbable, I::critical},
        {"LEO-Ground", in, L::improbable, I::marginal},
        {"LEO-LEO", in, L::improbable, I::critical},
        {"LEO-GEO", in, L::improbable, I::marginal},
        {"GEO-Ground", in, L::improbable, I::marginal},
        {"Ground-LEO-Ground", out, L::frequent, I::marginal},
        {"Ground-LEO", out, L::probable, I::marginal},
        {"Ground-GEO", out, L::frequent, I::marginal},
        {"Air-Ground", out, L::remote, I::marginal},
        {"Air-LEO", out, L::frequent, I::marginal},
        {"LEO-Ground", out, L::probable, I::marginal},
        {"LEO-LEO", out, L::remote, I::marginal},
        {"LEO-GEO", out, L::remote, I::marginal},
        {"GEO-Ground", out, L::frequent, I::marginal},
    };
}

std::string to_string(Likelihood likelihood) {
    switch (likelihood) {
    case Likelihood::improbable: return "Improbable";
    case Likelihood::remote: return "Remote";
    case Likelihood::probable: return "Probable";
    case Likelihood::frequent: return "Frequent";
    }
    return "?";
}

std::string to_string(Impact impact) {
    switch (impact) {
    case Impact::negligible: return "Negligible";
    case Impact::marginal: return "Marginal";
    case Impact::critical: return "Critical";
    case Impact::catastrophic: return "Catastrophic";
    }
    return "?";
}

std::string to_string(RiskGrade grade) {
    switch (grade) {
    case RiskGrade::none: return "None";
    case RiskGrade::low: return "Low";
    case RiskGrade::medium: return "Medium";
    case RiskGrade::serious: return "Serious";
    case RiskGrade::high: return "High";
    }
    return "?";
}

std::string to_string(AttackType attack) {
    return attack == AttackType::in_fov ? "in_fov" : "out_of_fov";
}

std::optional<Likelihood> likelihood_from_string(const std::string& text) {
    if (text == "Improbable") return Likelihood::improbable;
    if (text == "Remote") return Likelihood::remote;
    if (text == "Probable") return Likelihood::probable;
    if (text == "Frequent") return Likelihood::frequent;
    return std::nullopt;
}

std::optional<Impact> impact_from_string(const std::string& text) {
    if (text == "Negligible") return Impact::negligible;
    if (text == "Marginal") return Impact::marginal;
    if (text == "Critical") return Impact::critical;
    if (text == "Catastrophic") return Impact::catastrophic;
    return std::nullopt;
}

std::optional<AttackType> attack_from_string(const std::string& text) {
    if (text == "in_fov") return AttackType::in_fov;
    if (text == "out_of_fov") return AttackType::out_of_fov;
    return std::nullopt;
}

} // namespace qdos
