#include <doctest.h>

#include <cmath>
#include <limits>

#include "qdos/calibrate.hpp"
#include "qdos/errors.hpp"
#include "qdos/scenario.hpp"
#include "qdos/units.hpp"

using namespace qdos;

namespace {
const Config kConfig = default_config();
}

TEST_CASE("build_scenario applies the published apertures and conventions") {
    SUBCASE("Ground-LEO") {
        const auto spec = build_scenario("Ground-LEO", {}, kConfig);
        CHECK(spec.source.aperture_diameter == 1.0);
        CHECK(spec.target.aperture_diameter == 0.2);
        CHECK(spec.geometry.h1 == doctest::Approx(500e3));
        CHECK(spec.geometry.zenith == 0.0); // in-FOV convention
        CHECK(spec.geometry.direction == LinkDirection::uplink);
        CHECK(spec.source_platform.power.max_w == doctest::Approx(1e6));
    }

    SUBCASE("Ground-LEO out-of-FOV uses 60 degrees") {
        ScenarioOverrides overrides;
        overrides.attack = AttackType::out_of_fov;
        const auto spec = build_scenario("Ground-LEO", overrides, kConfig);
        CHECK(spec.geometry.zenith == doctest::Approx(units::deg(60)));
    }

    SUBCASE("Air-Ground with a drone") {
        ScenarioOverrides overrides;
        overrides.source_platform = PlatformKind::drone;
        const auto spec = build_scenario("Air-Ground", overrides, kConfig);
        CHECK(spec.source_platform.altitude == doctest::Approx(5e3));
        CHECK(spec.source_platform.power.min_w == doctest::Approx(100.0));
        CHECK(spec.source_platform.power.max_w == doctest::Approx(2e3));
        CHECK(spec.source.aperture_diameter == doctest::Approx(0.2));
        CHECK(spec.target.aperture_diameter == doctest::Approx(0.6));
        CHECK(spec.geometry.direction == LinkDirection::downlink);
    }

    SUBCASE("Ground-GEO reaches geostationary altitude") {
        const auto spec = build_scenario("Ground-GEO", {}, kConfig);
        CHECK(spec.geometry.h1 == doctest::Approx(35800e3));
    }

    SUBCASE("Ground-LEO-Ground carries both legs") {
        const auto spec = build_scenario("Ground-LEO-Ground", {}, kConfig);
        CHECK(spec.uses_reflection());
        CHECK(spec.geometry.zenith == doctest::Approx(units::deg(60)));
        CHECK(spec.reflection_downlink->zenith == 0.0);
        CHECK(spec.target.aperture_diameter == doctest::Approx(0.6));
        ScenarioOverrides overrides;
        overrides.attack = AttackType::in_fov;
        CHECK_THROWS_AS(build_scenario("Ground-LEO-Ground", overrides, kConfig),
                        config_error);
    }

    SUBCASE("unknown name rejected") {
        CHECK_THROWS_AS(build_scenario("Ground-Mars", {}, kConfig), config_error);
    }

    SUBCASE("config scenario blocks apply under CLI-style overrides") {
        const Config config = parse_config(R"({
            "scenarios": {"Ground-LEO": {"target_altitude_m": 1000000.0,
                                          "adaptive_optics": true}}
        })");
        const auto spec = build_scenario("Ground-LEO", {}, config);
        CHECK(spec.geometry.h1 == doctest::Approx(1e6));
        CHECK(spec.source.has_adaptive_optics);

        // the caller still wins over the config block
        ScenarioOverrides caller;
        caller.target_altitude = 500e3;
        const auto overridden = build_scenario("Ground-LEO", caller, config);
        CHECK(overridden.geometry.h1 == doctest::Approx(500e3));
        CHECK(overridden.source.has_adaptive_optics); // untouched field survives
    }

    SUBCASE("a full custom body defines a new scenario") {
        ScenarioOverrides custom;
        custom.source_platform = PlatformKind::leo_sat;
        custom.source_aperture = 0.3;
        custom.receiver_aperture = 0.5;
        custom.target_altitude = 0.0;
        const auto spec = build_scenario("My-Custom-Link", custom, kConfig);
        CHECK(spec.source.aperture_diameter == doctest::Approx(0.3));
        CHECK(spec.target.aperture_diameter == doctest::Approx(0.5));
        CHECK(spec.geometry.direction == LinkDirection::downlink);
        CHECK(evaluate_scenario(spec, 1e3, BandEdge::nominal, kConfig).p_recv > 0.0);

        // partial custom bodies stay rejected
        ScenarioOverrides partial;
        partial.source_platform = PlatformKind::leo_sat;
        CHECK_THROWS_AS(build_scenario("My-Custom-Link", partial, kConfig), config_error);
    }

    SUBCASE("platform overrides flow into built scenarios") {
        const Config config = parse_config(R"({
            "platforms": {"plane": {"altitude_m": 12000.0}}
        })");
        const auto spec = build_scenario("Air-Ground", {}, config);
        CHECK(spec.source_platform.altitude == doctest::Approx(12e3));
        CHECK(spec.geometry.h1 == doctest::Approx(12e3));
    }
}

TEST_CASE("chain composition keeps the waist quadrature invariant") {
    for (const auto& name : scenario_names()) {
        ScenarioOverrides overrides;
        if (name != "Ground-LEO-Ground")
            overrides.attack = AttackType::out_of_fov;
        const auto spec = build_scenario(name, overrides, kConfig);
        const auto chain = evaluate_scenario(spec, 1e3, BandEdge::nominal, kConfig);
        const BeamState& s = chain.state;
        CHECK(s.w_total * s.w_total ==
              doctest::Approx(s.w_diffraction * s.w_diffraction +
                              s.w_turbulence * s.w_turbulence + s.w_jitter * s.w_jitter)
                  .epsilon(1e-12));
        CHECK(s.tau_total <= 1.0);
        CHECK(s.strehl_total <= 1.0);
        CHECK(chain.p_recv > 0.0);
        CHECK(chain.p_recv <= 1e3 * spec.target.optical_loss);
    }
}

TEST_CASE("exoatmospheric legs skip turbulence") {
    const auto leo_leo = build_scenario("LEO-LEO", {}, kConfig);
    const auto chain = evaluate_scenario(leo_leo, 1e3, BandEdge::nominal, kConfig);
    CHECK(chain.state.w_turbulence == 0.0);
    CHECK(chain.state.tau_atmosphere == 1.0);
    CHECK(std::isinf(chain.state.fried_length));

    const auto leo_geo = build_scenario("LEO-GEO", {}, kConfig);
    CHECK(evaluate_scenario(leo_geo, 1e3, BandEdge::nominal, kConfig).state.tau_atmosphere ==
          1.0);
}

TEST_CASE("in-FOV suppression ratio stays below one") {
    ScenarioOverrides vertical;
    vertical.attack = AttackType::in_fov;
    ScenarioOverrides slanted = vertical;
    slanted.zenith = units::deg(60);
    for (double altitude : {500e3, 1000e3}) {
        vertical.target_altitude = altitude;
        slanted.target_altitude = altitude;
        const auto p0 = evaluate_scenario(build_scenario("Ground-LEO", vertical, kConfig),
                                          1e3, BandEdge::nominal, kConfig);
        const auto p60 = evaluate_scenario(build_scenario("Ground-LEO", slanted, kConfig),
                                           1e3, BandEdge::nominal, kConfig);
        CHECK(p60.p_recv / p0.p_recv < 1.0);
    }
}

TEST_CASE("waist grows and captured power shrinks with range") {
    ScenarioOverrides overrides;
    overrides.attack = AttackType::in_fov;
    double previous_waist = 0.0;
    double previous_power = std::numeric_limits<double>::infinity();
    for (double altitude : {300e3, 500e3, 800e3, 1000e3, 1500e3}) {
        overrides.target_altitude = altitude;
        const auto spec = build_scenario("Ground-LEO", overrides, kConfig);
        const auto chain = evaluate_scenario(spec, 1e3, BandEdge::nominal, kConfig);
        CHECK(chain.state.w_total >= previous_waist);
        CHECK(chain.p_recv <= previous_power);
        previous_waist = chain.state.w_total;
        previous_power = chain.p_recv;
    }
}

TEST_CASE("captured power grows with the receiver aperture") {
    ScenarioOverrides overrides;
    overrides.attack = AttackType::in_fov;
    double previous = 0.0;
    for (double aperture : {0.1, 0.2, 0.4, 0.8, 1.6}) {
        overrides.receiver_aperture = aperture;
        const auto spec = build_scenario("Ground-LEO", overrides, kConfig);
        const double p = evaluate_scenario(spec, 1e3, BandEdge::nominal, kConfig).p_recv;
        CHECK(p >= previous);
        previous = p;
    }
}

TEST_CASE("run_sweep produces ordered bands and linear power columns") {
    ScenarioOverrides overrides;
    overrides.attack = AttackType::out_of_fov;
    const auto spec = build_scenario("Ground-LEO", overrides, kConfig);
    const auto grid = make_power_grid(kConfig.sweep);
    CHECK(grid.front() == doctest::Approx(1.0));
    CHECK(grid.back() == doctest::Approx(1e6));
    CHECK(grid.size() == 151); // 25 points per decade over six decades

    const auto result = run_sweep(spec, grid, kConfig);
    REQUIRE(result.points.size() == grid.size());
    for (size_t i = 0; i < result.points.size(); ++i) {
        const auto& point = result.points[i];
        CHECK(point.p_low <= point.p_nominal);
        CHECK(point.p_nominal <= point.p_high);
        if (i > 0) {
            CHECK(result.points[i - 1].p_ini < point.p_ini);
            CHECK(result.points[i - 1].p_nominal < point.p_nominal);
        }
    }

    // linearity: the received column scales exactly with the grid
    const double ratio = result.points[25].p_nominal / result.points[0].p_nominal;
    CHECK(ratio == doctest::Approx(result.points[25].p_ini / result.points[0].p_ini)
                       .epsilon(1e-12));
}

TEST_CASE("out-of-FOV DoS floor is reachable with one watt") {
    ScenarioOverrides overrides;
    overrides.attack = AttackType::out_of_fov;
    const auto spec = build_scenario("Ground-LEO", overrides, kConfig);
    const auto high = evaluate_scenario(spec, 1.0, BandEdge::high, kConfig);
    CHECK(high.p_recv >= kDosNoiseFloor);
}

TEST_CASE("find_threshold_power") {
    ScenarioOverrides overrides;
    overrides.attack = AttackType::in_fov;
    const auto spec = build_scenario("LEO-Ground", overrides, kConfig);

    SUBCASE("matches a sweep crossing within one grid cell") {
        const auto threshold = find_threshold_power(
            spec, "APD structural damage, complete insensitivity", BandEdge::nominal,
            kConfig);
        REQUIRE(threshold.has_value());
        const auto grid = make_power_grid(kConfig.sweep);
        const auto sweep = run_sweep(spec, grid, kConfig);
        const double onset = 2.0;
        double crossing = 0.0;
        for (const auto& point : sweep.points) {
            if (point.p_nominal >= onset) {
                crossing = point.p_ini;
                break;
            }
        }
        REQUIRE(crossing > 0.0);
        const double cell = std::pow(10.0, 1.0 / kConfig.sweep.points_per_decade);
        CHECK(*threshold <= crossing * cell * 1.02);
        CHECK(*threshold >= crossing / cell / 1.02);
    }

    SUBCASE("round trip: the threshold power triggers the effect") {
        const auto threshold = find_threshold_power(
            spec, "APD structural damage, complete insensitivity", BandEdge::nominal,
            kConfig);
        REQUIRE(threshold.has_value());
        const auto chain = evaluate_scenario(spec, *threshold, BandEdge::nominal, kConfig);
        const auto report = classify_effects(chain.p_recv, spec.target, kConfig.ladder);
        CHECK(std::any_of(report.triggered.begin(), report.triggered.end(),
                          [](const TriggeredEffect& e) {
                              return e.name == "APD structural damage, complete insensitivity";
                          }));
    }

    SUBCASE("unreachable effects return nothing") {
        ScenarioOverrides geo;
        geo.attack = AttackType::out_of_fov;
        const auto weak = build_scenario("LEO-GEO", geo, kConfig);
        const auto threshold = find_threshold_power(
            weak, "Melting initiation threshold for aluminium", BandEdge::nominal, kConfig);
        CHECK(!threshold.has_value());
    }

    SUBCASE("unknown effect raises a configuration error") {
        CHECK_THROWS_AS(
            find_threshold_power(spec, "Total vaporisation", BandEdge::nominal, kConfig),
            config_error);
    }
}

TEST_CASE("uplink needs more power than downlink at 1000 km") {
    ScenarioOverrides up;
    up.attack = AttackType::in_fov;
    up.target_altitude = 1000e3;
    up.adaptive_optics = true;
    ScenarioOverrides down;
    down.attack = AttackType::in_fov;
    down.source_altitude = 1000e3;
    const auto ground_leo = build_scenario("Ground-LEO", up, kConfig);
    const auto leo_ground = build_scenario("LEO-Ground", down, kConfig);
    const double delivered_up =
        evaluate_scenario(ground_leo, 1e3, BandEdge::nominal, kConfig).p_recv;
    const double delivered_down =
        evaluate_scenario(leo_ground, 1e3, BandEdge::nominal, kConfig).p_recv;
    CHECK(delivered_up < delivered_down);
}

TEST_CASE("ground-satellite-ground chain end to end") {
    const auto spec = build_scenario("Ground-LEO-Ground", {}, kConfig);

    SUBCASE("golden value frozen from the stage-by-stage oracle") {
        // P = 1 kW, Micius-like surface (4 m^2, albedo 1): the oracle chains
        // uplink intensity x cross-section x Lambertian spread x downlink
        // transmittance x aperture x receiver loss.
        const auto chain = evaluate_scenario(spec, 1e3, BandEdge::high, kConfig);
        CHECK(chain.p_recv == doctest::Approx(2.6356367686356773e-13).epsilon(1e-3));
    }

    SUBCASE("band edges preserve order and a kilowatt denies service") {
        const auto low = evaluate_scenario(spec, 1e3, BandEdge::low, kConfig);
        const auto high = evaluate_scenario(spec, 1e3, BandEdge::high, kConfig);
        CHECK(low.p_recv <= high.p_recv);
        CHECK(high.p_recv >= kDosNoiseFloor);
    }

    SUBCASE("threshold for the noise floor sits at a few watts") {
        const auto threshold =
            find_threshold_power(spec, "Too high noise for SPD", BandEdge::high, kConfig);
        REQUIRE(threshold.has_value());
        CHECK(*threshold > 1.0);
        CHECK(*threshold < 100.0);
    }
}

TEST_CASE("dazzle_footprint geometry") {
    ScenarioOverrides overrides;
    overrides.attack = AttackType::out_of_fov;
    const auto spec = build_scenario("GEO-Ground", overrides, kConfig);

    SUBCASE("zero power yields zero radius") {
        const auto footprint = dazzle_footprint(spec, 0.0, kConfig);
        CHECK(footprint.radius == 0.0);
        CHECK_FALSE(footprint.saturated);
    }

    SUBCASE("no trigger at zero offset yields zero radius") {
        const auto footprint = dazzle_footprint(spec, 1e-9, kConfig);
        CHECK(footprint.radius == 0.0);
        CHECK_FALSE(footprint.saturated);
    }

    SUBCASE("ten watts saturates the line-of-sight cap") {
        const auto footprint = dazzle_footprint(spec, 10.0, kConfig);
        CHECK(footprint.saturated);
        CHECK(footprint.radius > 1e6);
    }

    SUBCASE("in-FOV specs are rejected") {
        ScenarioOverrides in_fov;
        in_fov.attack = AttackType::in_fov;
        const auto bad = build_scenario("GEO-Ground", in_fov, kConfig);
        CHECK_THROWS_AS(dazzle_footprint(bad, 10.0, kConfig), config_error);
    }
}

TEST_CASE("calibration fits the zenith transmittance inside the search range") {
    const auto result =
        calibrate_transmittance(default_calibration_targets(), 810e-9, kConfig);
    CHECK(result.t0 > 0.5);
    CHECK(result.t0 <= 1.0);
    CHECK(result.t0 == doctest::Approx(0.9222818532167218).epsilon(1e-3));
    REQUIRE(result.achieved.size() == 2);
    CHECK(result.achieved[0].achieved == doctest::Approx(0.37).epsilon(0.05));
    CHECK(result.achieved[1].achieved == doctest::Approx(0.58).epsilon(0.05));

    SUBCASE("degenerate zenith constraint returns the upper bound") {
        const std::vector<CalibrationTarget> degenerate{{500e3, 0.0, 1.0}};
        const auto fit = calibrate_transmittance(degenerate, 810e-9, kConfig);
        // ratio(0 deg)/ratio(0 deg) = 1 for every T0; residual is flat
        CHECK(fit.residual == doctest::Approx(0.0).epsilon(1e-9));
        CHECK(fit.t0 > 0.5);
        CHECK(fit.t0 <= 1.0);
    }

    SUBCASE("fit converges from a deliberately wrong prior") {
        Config skewed = kConfig;
        set_zenith_transmittance(skewed.transmittance, 810e-9, 0.7);
        const auto fit =
            calibrate_transmittance(default_calibration_targets(), 810e-9, skewed);
        CHECK(fit.t0 == doctest::Approx(0.9222818532167218).epsilon(1e-3));
    }

    SUBCASE("a wavelength that differs by rounding updates the existing entry") {
        // 810 * 1e-9 is one ulp away from the literal 810e-9
        const double wavelength = 810.0 * 1e-9;
        const auto fit =
            calibrate_transmittance(default_calibration_targets(), wavelength, kConfig);
        const Config applied = apply_calibration(kConfig, fit);
        CHECK(applied.transmittance.zenith_transmittance.size() ==
              kConfig.transmittance.zenith_transmittance.size());
        CHECK(zenith_transmittance(810e-9, applied.transmittance) ==
              doctest::Approx(fit.t0));
        CHECK(fit.t0 == doctest::Approx(0.9222818532167218).epsilon(1e-3));
    }
}
