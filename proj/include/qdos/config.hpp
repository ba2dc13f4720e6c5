#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qdos/atmosphere.hpp"
#include "qdos/effects.hpp"
#include "qdos/quadrature.hpp"
#include "qdos/risk.hpp"
#include "qdos/scattering.hpp"
#include "qdos/turbulence.hpp"

namespace qdos {

struct BeamDefaults {
    double theta_rms = 2.0e-6;
    double thermal_distortion_number = 0.0;
};

struct SweepGrid {
    double p_min = 1.0;
    double p_max = 1e6;
    int points_per_decade = 25;
};

struct ReceiverPreset {
    double aperture = 0.2;
    double optical_loss = 0.02;
    double fov_angle = 10e-6;
};

/// Named-preset overrides; anything unset falls back to the preset. Used
/// both for per-scenario config blocks and for CLI flags (flags win).
struct ScenarioOverrides {
    std::optional<AttackType> attack;
    std::optional<double> wavelength;
    std::optional<double> zenith;
    std::optional<double> source_altitude;
    std::optional<double> target_altitude;
    std::optional<PlatformKind> source_platform;
    std::optional<double> source_aperture;
    std::optional<double> receiver_aperture;
    std::optional<double> receiver_optical_loss;
    std::optional<bool> adaptive_optics;
    std::optional<double> beam_quality;
    std::optional<double> pointing_variance;
    std::optional<double> theta_rms;
    std::optional<AOConfig> ao;
};

/// Field-wise fallback: anything `primary` leaves unset comes from `base`.
ScenarioOverrides merge_overrides(const ScenarioOverrides& base,
                                  const ScenarioOverrides& primary);

/// Full simulation configuration. The built-in defaults embed the published
/// tables (effect ladder, risk matrix inputs, aperture presets) so the tool
/// runs with no external files.
struct Config {
    std::string schema_version = "1";

    TurbulenceProfile profile;
    TransmittanceModel transmittance;
    QuadratureOptions quadrature;
    AOConfig ao;
    BeamDefaults beam;
    OutOfFovParams out_of_fov;
    SatelliteSurface surface;
    std::vector<EffectThreshold> ladder;
    ImpactGrouping impact_grouping;
    std::vector<RiskAssessment> risk_preset;
    SweepGrid sweep;

    ReceiverPreset ground_receiver{0.6, 0.02, 10e-6};
    ReceiverPreset leo_receiver{0.2, 0.02, 10e-6};
    ReceiverPreset geo_receiver{0.2, 0.02, 10e-6};

    std::map<std::string, Platform> platforms;                  // keyed by kind name
    std::map<std::string, ScenarioOverrides> scenario_overrides; // keyed by scenario name
};

/// Defaults with the calibrated zenith transmittances for 810 and 1550 nm.
Config default_config();

/// Strict parse: unknown keys are rejected, every numeric field is
/// range-checked, missing blocks fall back to the built-in defaults.
/// Throws config_error naming the offending path.
Config parse_config(const std::string& json_text);

/// Canonical JSON form; serialize(parse(x)) is idempotent.
std::string serialize_config(const Config& config);

} // namespace qdos
