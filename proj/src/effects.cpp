#include "qdos/effects.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qdos/errors.hpp"
#include "qdos/units.hpp"

namespace qdos {

std::vector<EffectThreshold> default_effect_ladder() {
    return {
        {"Too high noise for SPD", ThresholdKind::power_w, 1e-15, std::nullopt},
        {"Non-gated SPD APD blinding", ThresholdKind::power_w, 1e-11, 1e-8},
        {"APD thermal blinding", ThresholdKind::power_w, 1e-3, std::nullopt},
        {"CCD image transducer saturation", ThresholdKind::density_w_per_cm2, 0.1,
         std::nullopt},
        {"APD permanent blinding, lower sensitivity", ThresholdKind::power_w, 1.2,
         std::nullopt},
        {"APD structural damage, complete insensitivity", ThresholdKind::power_w, 2.0,
         std::nullopt},
        {"Attenuators damage", ThresholdKind::power_w, 4.0, std::nullopt},
        {"Polarisation spatial filter degradation", ThresholdKind::power_w, 3.0,
         std::nullopt},
        {"Optical glass melting", ThresholdKind::density_w_per_cm2, 3e2, std::nullopt},
        {"Melting initiation threshold for aluminium", ThresholdKind::density_w_per_cm2,
         1e3, std::nullopt},
    };
}

void validate(const EffectThreshold& threshold) {
    if (threshold.name.empty())
        throw std::domain_error("effect threshold requires a name");
    if (!(threshold.onset > 0.0))
        throw std::domain_error("effect onset must be positive: " + threshold.name);
    if (threshold.onset_upper && !(*threshold.onset_upper > threshold.onset))
        throw std::domain_error("effect upper onset must exceed the onset: " +
                                threshold.name);
}

double density_to_power(double density_w_per_cm2, double aperture_diameter_m) {
    if (density_w_per_cm2 < 0.0)
        throw std::domain_error("density_to_power: density must be nonnegative");
    if (!(aperture_diameter_m > 0.0))
        throw std::domain_error("density_to_power: aperture must be positive");
    const double radius_cm = aperture_diameter_m * 50.0;
    return density_w_per_cm2 * units::pi * radius_cm * radius_cm;
}

EffectReport classify_effects(double received_power, const Receiver& receiver,
                              const std::vector<EffectThreshold>& ladder) {
    if (received_power < 0.0)
        throw std::domain_error("classify_effects: power must be nonnegative");
    if (ladder.empty())
        throw config_error("effects.ladder: empty effect ladder");

    const double radius_cm = receiver.aperture_diameter * 50.0;
    const double aperture_cm2 = units::pi * radius_cm * radius_cm;

    struct Converted {
        const EffectThreshold* rung;
        double onset_w;
        std::optional<double> upper_w;
    };
    std::vector<Converted> converted;
    converted.reserve(ladder.size());
    for (const auto& rung : ladder) {
        validate(rung);
        const double scale = rung.kind == ThresholdKind::power_w ? 1.0 : aperture_cm2;
        converted.push_back({&rung, rung.onset * scale,
                             rung.onset_upper ? std::optional<double>(*rung.onset_upper * scale)
                                              : std::nullopt});
    }
    std::stable_sort(converted.begin(), converted.end(),
                     [](const Converted& a, const Converted& b) { return a.onset_w < b.onset_w; });

    EffectReport report;
    report.input_power = received_power;
    report.equivalent_density = received_power / aperture_cm2;
    for (const auto& c : converted) {
        if (received_power < c.onset_w)
            continue;
        const Certainty certainty = (c.upper_w && received_power < *c.upper_w)
                                        ? Certainty::possible
                                        : Certainty::definite;
        report.triggered.push_back({c.rung->name, certainty, c.onset_w});
    }
    if (!report.triggered.empty())
        report.max_severity = report.triggered.back().name;
    return report;
}

std::string to_string(Certainty certainty) {
    return certainty == Certainty::possible ? "possible" : "definite";
}

} // namespace qdos
