#include "qdos/scenario.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "qdos/errors.hpp"
#include "qdos/scattering.hpp"
#include "qdos/turbulence.hpp"
#include "qdos/units.hpp"

namespace qdos {

namespace {

constexpr double kGroundLwsAperture = 1.0;
constexpr double kSpaceLwsAperture = 0.2; // also airborne
constexpr double kEarthRadius = 6371e3;

Receiver receiver_from_preset(const ReceiverPreset& preset) {
    return {preset.aperture, preset.optical_loss, preset.fov_angle};
}

PathGeometry make_leg(double source_alt, double target_alt, double zenith) {
    const bool up = source_alt < target_alt;
    return PathGeometry(std::min(source_alt, target_alt), std::max(source_alt, target_alt),
                        zenith, up ? LinkDirection::uplink : LinkDirection::downlink);
}

struct PresetShape {
    PlatformKind source;
    PlatformKind target;
    double source_aperture;
    bool glg = false;
};

bool is_preset(const std::string& name) {
    const auto& names = scenario_names();
    return std::find(names.begin(), names.end(), name) != names.end();
}

PresetShape preset_shape(const std::string& name) {
    if (name == "Ground-LEO-Ground")
        return {PlatformKind::ground_fixed, PlatformKind::ground_fixed, kGroundLwsAperture,
                true};
    if (name == "Ground-LEO")
        return {PlatformKind::ground_fixed, PlatformKind::leo_sat, kGroundLwsAperture};
    if (name == "Ground-GEO")
        return {PlatformKind::ground_fixed, PlatformKind::geo_sat, kGroundLwsAperture};
    if (name == "Air-Ground")
        return {PlatformKind::plane, PlatformKind::ground_fixed, kSpaceLwsAperture};
    if (name == "Air-LEO")
        return {PlatformKind::plane, PlatformKind::leo_sat, kSpaceLwsAperture};
    if (name == "LEO-Ground")
        return {PlatformKind::leo_sat, PlatformKind::ground_fixed, kSpaceLwsAperture};
    if (name == "LEO-LEO")
        return {PlatformKind::leo_sat, PlatformKind::leo_sat, kSpaceLwsAperture};
    if (name == "LEO-GEO")
        return {PlatformKind::leo_sat, PlatformKind::geo_sat, kSpaceLwsAperture};
    if (name == "GEO-Ground")
        return {PlatformKind::geo_sat, PlatformKind::ground_fixed, kSpaceLwsAperture};
    throw config_error("unknown scenario '" + name + "'");
}

const ReceiverPreset& receiver_preset_for(PlatformKind kind, const Config& config) {
    switch (kind) {
    case PlatformKind::leo_sat: return config.leo_receiver;
    case PlatformKind::geo_sat: return config.geo_receiver;
    default: return config.ground_receiver;
    }
}

} // namespace

const std::vector<std::string>& scenario_names() {
    static const std::vector<std::string> names = {
        "Ground-LEO-Ground", "Ground-LEO", "Ground-GEO", "Air-Ground", "Air-LEO",
        "LEO-Ground",        "LEO-LEO",    "LEO-GEO",    "GEO-Ground",
    };
    return names;
}

ScenarioSpec build_scenario(const std::string& name, const ScenarioOverrides& caller,
                            const Config& config) {
    ScenarioOverrides overrides = caller;
    if (const auto block = config.scenario_overrides.find(name);
        block != config.scenario_overrides.end())
        overrides = merge_overrides(block->second, caller);

    PresetShape shape;
    if (is_preset(name)) {
        shape = preset_shape(name);
    } else {
        // custom scenario: demand a full body
        if (!overrides.source_platform || !overrides.source_aperture ||
            !overrides.receiver_aperture || !overrides.target_altitude)
            throw config_error("unknown scenario '" + name +
                               "' without a full custom body (source_platform, "
                               "source_aperture_m, receiver_aperture_m, target_altitude_m)");
        shape.source = *overrides.source_platform;
        const double target_alt = *overrides.target_altitude;
        shape.target = target_alt <= 0.0        ? PlatformKind::ground_fixed
                       : target_alt <= 2000e3   ? PlatformKind::leo_sat
                                                : PlatformKind::geo_sat;
        shape.source_aperture = *overrides.source_aperture;
    }

    const auto platform_for = [&](PlatformKind kind) {
        const auto it = config.platforms.find(to_string(kind));
        return it != config.platforms.end() ? it->second : platform_preset(kind);
    };
    Platform source_platform = platform_for(overrides.source_platform.value_or(shape.source));
    Platform target_platform = platform_for(shape.target);
    if (overrides.source_altitude)
        source_platform.altitude = *overrides.source_altitude;

    const AttackType attack = overrides.attack.value_or(
        shape.glg ? AttackType::out_of_fov : AttackType::in_fov);
    if (shape.glg && attack == AttackType::in_fov)
        throw config_error(name + ": only the out-of-FOV attack is applicable");

    // Zenith convention: in-FOV attacks run at 0 deg, out-of-FOV at 60 deg.
    const double zenith = overrides.zenith.value_or(
        attack == AttackType::in_fov ? 0.0 : units::deg(60.0));

    LaserSource source;
    source.power = source_platform.power.max_w;
    source.aperture_diameter = overrides.source_aperture.value_or(shape.source_aperture);
    source.wavelength = overrides.wavelength.value_or(810e-9);
    source.beam_quality = overrides.beam_quality.value_or(1.0);
    source.has_adaptive_optics = overrides.adaptive_optics.value_or(false);
    source.pointing_variance = overrides.pointing_variance.value_or(0.0);
    validate(source);

    Receiver target = receiver_from_preset(receiver_preset_for(shape.target, config));
    if (overrides.receiver_aperture)
        target.aperture_diameter = *overrides.receiver_aperture;
    if (overrides.receiver_optical_loss)
        target.optical_loss = *overrides.receiver_optical_loss;
    validate(target);

    double source_alt = source_platform.altitude;
    double target_alt = overrides.target_altitude.value_or(target_platform.altitude);
    if (name == "LEO-LEO") {
        // Inter-satellite leg: 1000 km exoatmospheric separation by default.
        target_alt = overrides.target_altitude.value_or(source_alt + 1000e3);
    }
    if (shape.glg) {
        // Uplink to the reflecting satellite; the receiver sits under it.
        const double sat_alt = overrides.target_altitude.value_or(500e3);
        const double up_zenith = overrides.zenith.value_or(units::deg(60.0));
        ScenarioSpec spec{name,
                          attack,
                          source,
                          source_platform,
                          target,
                          target_platform,
                          make_leg(source_alt, sat_alt, up_zenith),
                          make_leg(sat_alt, 0.0, 0.0),
                          overrides.theta_rms,
                          overrides.ao};
        return spec;
    }

    if (source_alt == target_alt)
        throw config_error(name + ": source and target altitudes coincide");

    ScenarioSpec spec{name,
                      attack,
                      source,
                      source_platform,
                      target,
                      target_platform,
                      make_leg(source_alt, target_alt, zenith),
                      std::nullopt,
                      overrides.theta_rms,
                      overrides.ao};
    return spec;
}

namespace {

BeamState propagate(const ScenarioSpec& spec, const Config& config) {
    const PathGeometry& leg = spec.geometry;
    BeamState state;
    state.range = slant_range(leg);
    state.theta_rms = spec.theta_rms.value_or(config.beam.theta_rms);
    state.distortion_number = config.beam.thermal_distortion_number;

    const LaserSource& src = spec.source;
    state.w0 = initial_waist(src.aperture_diameter);
    state.w_diffraction = diffraction_waist(state.range, state.w0, src.wavelength,
                                            src.beam_quality, src.focal_range);

    const bool touches_atmosphere = leg.h0 < config.transmittance.ceiling;
    if (touches_atmosphere) {
        state.moment = turbulence_moment(leg, config.profile, leg.direction,
                                         config.quadrature, config.transmittance.ceiling);
    }
    if (state.moment > 0.0) {
        state.fried_length = fried_parameter(src.wavelength, leg.zenith, state.moment);
        const bool ao_active =
            src.has_adaptive_optics && is_ground(spec.source_platform.kind);
        if (ao_active) {
            const AOConfig& ao = spec.ao.value_or(config.ao);
            const double variance = ao_residual_variance(ao, state.fried_length);
            state.strehl_ao = ao_strehl(variance);
            state.w_turbulence =
                turbulence_waist_from_strehl(state.w_diffraction, state.strehl_ao);
        } else {
            state.w_turbulence = turbulence_waist(state.w_diffraction, src.beam_quality,
                                                  src.aperture_diameter, state.fried_length);
        }
    }

    state.w_jitter = jitter_waist(state.range, state.theta_rms);
    state.w_total = total_waist(state.w_diffraction, state.w_turbulence, state.w_jitter);

    state.tau_atmosphere = transmittance(leg, src.wavelength, config.transmittance);
    state.tau_transmitter = config.transmittance.tau_transmitter;
    state.tau_pointing = pointing_factor(state.w_turbulence, src.pointing_variance);
    state.tau_total = state.tau_atmosphere * state.tau_transmitter * state.tau_pointing;

    // The AO residual already acts through the turbulence waist; only the
    // thermal-blooming factor enters the combined Strehl ratio.
    state.strehl_thermal = thermal_blooming_strehl(state.distortion_number);
    const std::array<double, 1> factors{state.strehl_thermal};
    state.strehl_total = strehl_total(factors);
    return state;
}

double kappa_at(BandEdge edge, const OutOfFovParams& params) {
    switch (edge) {
    case BandEdge::low: return params.kappa_low;
    case BandEdge::high: return params.kappa_high;
    default: return params.kappa;
    }
}

SatelliteSurface surface_at(BandEdge edge, const SatelliteSurface& surface) {
    SatelliteSurface s = surface;
    if (edge == BandEdge::low) {
        s.area = surface.area_low;
        s.albedo = surface.albedo_low;
    } else if (edge == BandEdge::high) {
        s.area = surface.area_high;
        s.albedo = surface.albedo_high;
    }
    return s;
}

} // namespace

ChainResult evaluate_scenario(const ScenarioSpec& spec, double p_ini, BandEdge edge,
                              const Config& config) {
    ChainResult result;
    result.state = propagate(spec, config);

    if (spec.uses_reflection()) {
        result.p_recv = ground_leo_ground_power(
            result.state, p_ini, surface_at(edge, config.surface), spec.geometry,
            *spec.reflection_downlink, spec.target, spec.source.wavelength,
            config.transmittance);
    } else if (spec.attack == AttackType::out_of_fov) {
        result.p_recv = out_of_fov_power(result.state, p_ini, spec.target,
                                         spec.geometry.zenith,
                                         kappa_at(edge, config.out_of_fov));
    } else {
        result.p_recv = received_power_in_fov(result.state, p_ini, spec.target);
    }
    return result;
}

std::vector<double> make_power_grid(const SweepGrid& grid) {
    const double decades = std::log10(grid.p_max / grid.p_min);
    const int steps = std::max(1, static_cast<int>(std::ceil(decades * grid.points_per_decade)));
    std::vector<double> powers;
    powers.reserve(steps + 1);
    for (int i = 0; i <= steps; ++i) {
        const double fraction = static_cast<double>(i) / steps;
        powers.push_back(grid.p_min * std::pow(grid.p_max / grid.p_min, fraction));
    }
    return powers;
}

SweepResult run_sweep(const ScenarioSpec& spec, const std::vector<double>& grid,
                      const Config& config) {
    SweepResult result;
    result.scenario = spec.name;
    result.attack = spec.attack;
    result.wavelength = spec.source.wavelength;
    result.adaptive_optics =
        spec.source.has_adaptive_optics && is_ground(spec.source_platform.kind);

    // The chain is linear in the initial power, so each band edge is one
    // evaluation at unit power scaled across the grid.
    const double low1 = evaluate_scenario(spec, 1.0, BandEdge::low, config).p_recv;
    const double nom1 = evaluate_scenario(spec, 1.0, BandEdge::nominal, config).p_recv;
    const double high1 = evaluate_scenario(spec, 1.0, BandEdge::high, config).p_recv;

    result.points.reserve(grid.size());
    for (double p : grid) {
        SweepPoint point;
        point.p_ini = p;
        point.p_low = low1 * p;
        point.p_nominal = nom1 * p;
        point.p_high = high1 * p;
        point.report = classify_effects(point.p_nominal, spec.target, config.ladder);
        result.points.push_back(std::move(point));
    }
    return result;
}

std::optional<double> find_threshold_power(const ScenarioSpec& spec,
                                           const std::string& effect_name, BandEdge edge,
                                           const Config& config) {
    const auto rung = std::find_if(config.ladder.begin(), config.ladder.end(),
                                   [&](const EffectThreshold& t) { return t.name == effect_name; });
    if (rung == config.ladder.end())
        throw config_error("effects.ladder: unknown effect '" + effect_name + "'");
    const double onset = rung->kind == ThresholdKind::power_w
                             ? rung->onset
                             : density_to_power(rung->onset, spec.target.aperture_diameter);

    const double p_max = config.sweep.p_max;
    double lo = std::min(config.sweep.p_min, 1.0);
    if (evaluate_scenario(spec, p_max, edge, config).p_recv < onset)
        return std::nullopt;
    while (evaluate_scenario(spec, lo, edge, config).p_recv >= onset && lo > 1e-12)
        lo /= 10.0;

    double hi = p_max;
    while (hi / lo > 1.01) {
        const double mid = std::sqrt(lo * hi);
        if (evaluate_scenario(spec, mid, edge, config).p_recv >= onset)
            hi = mid;
        else
            lo = mid;
    }
    return hi;
}

FootprintResult dazzle_footprint(const ScenarioSpec& spec, double p_ini,
                                 const Config& config) {
    if (spec.attack != AttackType::out_of_fov || spec.uses_reflection())
        throw config_error("dazzle_footprint: requires an out-of-FOV space-to-ground spec");
    if (p_ini < 0.0)
        throw std::domain_error("dazzle_footprint: power must be nonnegative");
    if (p_ini == 0.0)
        return {0.0, false};

    const double h = spec.geometry.h1 - spec.geometry.h0;
    const auto power_at_offset = [&](double offset) {
        ScenarioSpec probe = spec;
        probe.geometry = PathGeometry(spec.geometry.h0, spec.geometry.h1,
                                      std::atan2(offset, h), spec.geometry.direction);
        return evaluate_scenario(probe, p_ini, BandEdge::nominal, config).p_recv;
    };

    if (power_at_offset(0.0) < kDosNoiseFloor)
        return {0.0, false};

    // Cap the search at the spherical-Earth line-of-sight ground arc.
    const double x_max = kEarthRadius * std::acos(kEarthRadius / (kEarthRadius + h));
    if (power_at_offset(x_max) >= kDosNoiseFloor)
        return {x_max, true};

    double lo = 0.0;
    double hi = x_max;
    while (hi - lo > 0.01 * hi) {
        const double mid = 0.5 * (lo + hi);
        if (power_at_offset(mid) >= kDosNoiseFloor)
            lo = mid;
        else
            hi = mid;
    }
    return {0.5 * (lo + hi), false};
}

} // namespace qdos
