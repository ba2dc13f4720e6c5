#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qdos/core.hpp"

namespace qdos {

enum class ThresholdKind { power_w, density_w_per_cm2 };

enum class Certainty { possible, definite };

/// One rung of the damage/dazzle ladder. Ranged entries carry an upper
/// onset; between the two the effect is graded "possible".
struct EffectThreshold {
    std::string name;
    ThresholdKind kind = ThresholdKind::power_w;
    double onset = 0.0;
    std::optional<double> onset_upper;
};

struct TriggeredEffect {
    std::string name;
    Certainty certainty;
    double onset_power; // onset converted to received power [W]
};

/// Classification outcome, ordered by ascending onset.
struct EffectReport {
    std::vector<TriggeredEffect> triggered;
    std::string max_severity;   // empty when nothing triggered
    double input_power = 0.0;   // [W]
    double equivalent_density = 0.0; // [W/cm^2] over the receiver aperture
};

/// Built-in ladder: the ten published power / power-density rungs, from the
/// SPD noise floor up to aluminium melting.
std::vector<EffectThreshold> default_effect_ladder();

void validate(const EffectThreshold& threshold);

/// Converts a power density [W/cm^2] to power through the receiver aperture
/// (radius D_r/2 expressed in cm).
double density_to_power(double density_w_per_cm2, double aperture_diameter_m);

/// Every rung whose converted onset lies at or below the received power,
/// ordered by onset; ranged rungs are "possible" below their upper onset
/// and "definite" at or above it.
EffectReport classify_effects(double received_power, const Receiver& receiver,
                              const std::vector<EffectThreshold>& ladder);

std::string to_string(Certainty certainty);

} // namespace qdos
