#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qdos/beam.hpp"
#include "qdos/config.hpp"
#include "qdos/core.hpp"
#include "qdos/risk.hpp"

namespace qdos {

/// Received power below which quantum communication is considered denied.
inline constexpr double kDosNoiseFloor = 1e-15; // [W]

/// One attack configuration: platforms, path, source, receiver, attack type.
/// For the reflection scenario `geometry` is the uplink leg and
/// `reflection_downlink` the satellite-to-receiver leg.
struct ScenarioSpec {
    std::string name;
    AttackType attack = AttackType::in_fov;
    LaserSource source;
    Platform source_platform;
    Receiver target;
    Platform target_platform;
    PathGeometry geometry;
    std::optional<PathGeometry> reflection_downlink;
    std::optional<double> theta_rms;  // overrides the configured jitter
    std::optional<AOConfig> ao;       // overrides the configured AO loop

    bool uses_reflection() const { return reflection_downlink.has_value(); }
};

const std::vector<std::string>& scenario_names();

/// Builds one of the nine named scenarios with the published defaults
/// (apertures, platform presets, zenith conventions) applied, then the
/// config's per-scenario block, then the caller's overrides on top.
ScenarioSpec build_scenario(const std::string& name, const ScenarioOverrides& overrides,
                            const Config& config);

enum class BandEdge { low, nominal, high };

struct ChainResult {
    double p_recv = 0.0;
    BeamState state;
};

/// Runs the full propagation chain for one initial power.
ChainResult evaluate_scenario(const ScenarioSpec& spec, double p_ini, BandEdge edge,
                              const Config& config);

struct SweepPoint {
    double p_ini = 0.0;
    double p_low = 0.0;
    double p_nominal = 0.0;
    double p_high = 0.0;
    EffectReport report; // classified at the nominal edge
};

struct SweepResult {
    std::string scenario;
    AttackType attack = AttackType::in_fov;
    double wavelength = 0.0;
    bool adaptive_optics = false;
    std::vector<SweepPoint> points;
};

/// Log-spaced power grid from the configured sweep block.
std::vector<double> make_power_grid(const SweepGrid& grid);

/// Evaluates the chain over a power grid, with band edges from the
/// out-of-FOV kappa band or the satellite-surface band as applicable.
SweepResult run_sweep(const ScenarioSpec& spec, const std::vector<double>& grid,
                      const Config& config);

/// Minimal initial power whose received power reaches the named effect's
/// onset, by bisection to 1% in power; nullopt when unreachable at the
/// sweep maximum.
std::optional<double> find_threshold_power(const ScenarioSpec& spec,
                                           const std::string& effect_name, BandEdge edge,
                                           const Config& config);

struct FootprintResult {
    double radius = 0.0; // [m]
    bool saturated = false;
};

/// Ground radius inside which the received power stays at or above the DoS
/// noise floor, for a space-based out-of-FOV attack. The ground offset maps
/// to zenith atan(x/h) and range sqrt(x^2 + h^2); the search is capped at
/// the spherical-Earth line-of-sight arc, and `saturated` is set when the
/// floor is exceeded everywhere inside the cap.
FootprintResult dazzle_footprint(const ScenarioSpec& spec, double p_ini,
                                 const Config& config);

} // namespace qdos
