#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <random>

#include "qdos/config.hpp"
#include "qdos/errors.hpp"

using namespace qdos;

TEST_CASE("empty document falls back to full defaults") {
    const Config config = parse_config("{}");
    CHECK(config.ground_receiver.aperture == doctest::Approx(0.6));
    CHECK(config.leo_receiver.aperture == doctest::Approx(0.2));
    CHECK(config.geo_receiver.aperture == doctest::Approx(0.2));
    CHECK(config.ladder.size() == 10);
    CHECK(config.risk_preset.size() == 18);
    CHECK(config.profile.ground_strength == doctest::Approx(1.7e-14));
    CHECK(config.profile.wind_rms == doctest::Approx(21.0));
    CHECK(config.ao.fitting_coefficient == doctest::Approx(0.34));
    CHECK(config.beam.theta_rms == doctest::Approx(2e-6));
    CHECK(config.out_of_fov.kappa_low == doctest::Approx(1e-9));
    CHECK(config.out_of_fov.kappa_high == doctest::Approx(1e-6));
    CHECK(config.surface.area_low == doctest::Approx(0.01));
    CHECK(config.sweep.points_per_decade == 25);
    CHECK(config.transmittance.zenith_transmittance.size() == 2);
}

TEST_CASE("out-of-range values are rejected with the offending path") {
    SUBCASE("transmittance above one") {
        try {
            parse_config(R"({"atmosphere": {"T0": {"810e-9": 1.5}}})");
            FAIL("expected config_error");
        } catch (const config_error& e) {
            CHECK(std::string(e.what()).find("T0") != std::string::npos);
        }
    }

    SUBCASE("unknown keys anywhere") {
        CHECK_THROWS_AS(parse_config(R"({"atmospheric": {}})"), config_error);
        CHECK_THROWS_AS(parse_config(R"({"atmosphere": {"TO": {}}})"), config_error);
        CHECK_THROWS_AS(parse_config(R"({"beam": {"jitter": 1.0}})"), config_error);
    }

    SUBCASE("malformed JSON") {
        CHECK_THROWS_AS(parse_config("{"), config_error);
        CHECK_THROWS_AS(parse_config("[1, 2]"), config_error);
    }

    SUBCASE("invariants from other modules are enforced") {
        CHECK_THROWS_AS(parse_config(R"({"adaptive_optics": {"sensor_snr": 0.0}})"),
                        config_error);
        CHECK_THROWS_AS(parse_config(R"({"out_of_fov": {"kappa_band": [1e-3, 1e-6]}})"),
                        config_error);
        CHECK_THROWS_AS(parse_config(R"({"satellite_surface": {"albedo": 2.0}})"),
                        config_error);
        CHECK_THROWS_AS(parse_config(R"({"receivers": {"ground": {"optical_loss": 0.0}}})"),
                        config_error);
        CHECK_THROWS_AS(
            parse_config(R"({"effects": {"ladder": [{"name": "x", "kind": "power_w",
                            "onset": -1.0}]}})"),
            config_error);
        CHECK_THROWS_AS(parse_config(R"({"sweep": {"p_min_w": 10.0, "p_max_w": 1.0}})"),
                        config_error);
        CHECK_THROWS_AS(parse_config(R"({"risk": {"preset": [{"scenario": "X",
                            "attack": "sideways"}]}})"),
                        config_error);
    }
}

TEST_CASE("serialization round trip is idempotent on the canonical form") {
    const Config defaults = default_config();
    const std::string once = serialize_config(defaults);
    const std::string twice = serialize_config(parse_config(once));
    CHECK(once == twice);

    // a partial override survives the round trip
    const Config custom = parse_config(R"({"beam": {"theta_rms_rad": 3.5e-6}})");
    const std::string dumped = serialize_config(custom);
    const Config reparsed = parse_config(dumped);
    CHECK(reparsed.beam.theta_rms == doctest::Approx(3.5e-6));
    CHECK(serialize_config(reparsed) == dumped);
}

TEST_CASE("randomized invalid documents never slip through") {
    // every mutation injects one invariant violation somewhere
    const std::vector<std::string> bad_documents = {
        R"({"atmosphere": {"T0": {"810e-9": 0.0}}})",
        R"({"atmosphere": {"T0": {"-810e-9": 0.9}}})",
        R"({"atmosphere": {"T0": {"abc": 0.9}}})",
        R"({"atmosphere": {"tau_transmitter": 1.4}})",
        R"({"atmosphere": {"ceiling_m": -1.0}})",
        R"({"atmosphere": {"hufnagel_valley": {"ground_strength": 0.0}}})",
        R"({"atmosphere": {"quadrature": {"rel_tol": -1e-6}}})",
        R"({"atmosphere": {"quadrature": {"max_depth": 0}}})",
        R"({"adaptive_optics": {"actuator_spacing_m": -0.1}})",
        R"({"beam": {"theta_rms_rad": -2e-6}})",
        R"({"out_of_fov": {"kappa": 0.0}})",
        R"({"out_of_fov": {"kappa_band": [0.0, 1e-6]}})",
        R"({"satellite_surface": {"area_m2": 0.0}})",
        R"({"satellite_surface": {"area_band_m2": [4.0, 0.01]}})",
        R"({"receivers": {"ground": {"aperture_m": 0.0}}})",
        R"({"receivers": {"leo": {"fov_angle_rad": -1e-6}}})",
        R"({"effects": {"ladder": []}})",
        R"({"effects": {"ladder": [{"name": "", "kind": "power_w", "onset": 1.0}]}})",
        R"({"effects": {"ladder": [{"name": "x", "kind": "power_w", "onset": 1.0,
            "onset_upper": 0.5}]}})",
        R"({"risk": {"impact_grouping": {"x": "Devastating"}}})",
        R"({"sweep": {"points_per_decade": 0}})",
        R"({"schema_version": "2"})",
    };
    for (const auto& doc : bad_documents) {
        CAPTURE(doc);
        CHECK_THROWS_AS(parse_config(doc), config_error);
    }
}

TEST_CASE("randomized valid documents round-trip idempotently") {
    std::mt19937_64 rng(97);
    std::uniform_real_distribution<double> unit(0.05, 1.0);
    std::uniform_real_distribution<double> positive(1e-7, 10.0);
    std::uniform_int_distribution<int> ppd(1, 100);

    for (int i = 0; i < 50; ++i) {
        const double kappa_low = unit(rng) * 1e-9;
        const double kappa_high = kappa_low * (1.0 + positive(rng) * 100.0);
        const double area_low = positive(rng);
        const double albedo_high = unit(rng);
        char doc[1024];
        std::snprintf(doc, sizeof doc,
                      R"({
                        "atmosphere": {"T0": {"810e-9": %.17g}, "tau_transmitter": %.17g},
                        "adaptive_optics": {"sensor_snr": %.17g},
                        "beam": {"theta_rms_rad": %.17g},
                        "out_of_fov": {"kappa": %.17g, "kappa_band": [%.17g, %.17g]},
                        "satellite_surface": {"area_m2": %.17g, "albedo": %.17g,
                                              "area_band_m2": [%.17g, %.17g],
                                              "albedo_band": [%.17g, %.17g]},
                        "receivers": {"ground": {"optical_loss": %.17g}},
                        "sweep": {"points_per_decade": %d}
                      })",
                      unit(rng), unit(rng), 1.0 + positive(rng) * 10.0, positive(rng) * 1e-6,
                      std::min(kappa_high, kappa_low * 2.0), kappa_low,
                      std::min(kappa_high, 1.0), area_low * 2.0, albedo_high * 0.9,
                      area_low, area_low * 4.0, albedo_high * 0.5, albedo_high, unit(rng),
                      ppd(rng));
        CAPTURE(doc);
        const Config parsed = parse_config(doc);
        const std::string canonical = serialize_config(parsed);
        CHECK(serialize_config(parse_config(canonical)) == canonical);
    }
}

TEST_CASE("valid overrides are accepted and applied") {
    const Config config = parse_config(R"({
        "atmosphere": {"T0": {"810e-9": 0.85, "1.55e-06": 0.97}},
        "adaptive_optics": {"greenwood_frequency_hz": 8.0},
        "out_of_fov": {"kappa": 1e-8},
        "receivers": {"ground": {"optical_loss": 0.05}},
        "sweep": {"points_per_decade": 10}
    })");
    CHECK(config.transmittance.zenith_transmittance.at(810e-9) == doctest::Approx(0.85));
    CHECK(config.ao.greenwood_frequency == doctest::Approx(8.0));
    CHECK(config.out_of_fov.kappa == doctest::Approx(1e-8));
    CHECK(config.ground_receiver.optical_loss == doctest::Approx(0.05));
    CHECK(config.sweep.points_per_decade == 10);
}

TEST_CASE("platform presets are config-overridable") {
    const Config config = parse_config(R"({
        "platforms": {"drone": {"altitude_m": 8000.0, "power_max_w": 5000.0}}
    })");
    CHECK(config.platforms.at("drone").altitude == doctest::Approx(8000.0));
    CHECK(config.platforms.at("drone").power.max_w == doctest::Approx(5000.0));
    // untouched presets keep their defaults
    CHECK(config.platforms.at("plane").altitude == doctest::Approx(10e3));

    CHECK_THROWS_AS(parse_config(R"({"platforms": {"zeppelin": {}}})"), config_error);
    CHECK_THROWS_AS(
        parse_config(R"({"platforms": {"drone": {"power_min_w": 10.0, "power_max_w": 1.0}}})"),
        config_error);
}

TEST_CASE("scenario blocks are parsed, validated and serialized") {
    const std::string doc = R"({
        "scenarios": {
            "Ground-LEO": {"target_altitude_m": 1000000.0, "adaptive_optics": true},
            "My-Custom-Link": {"source_platform": "leo_sat", "source_aperture_m": 0.3,
                               "receiver_aperture_m": 0.5, "target_altitude_m": 0.0}
        }
    })";
    const Config config = parse_config(doc);
    REQUIRE(config.scenario_overrides.count("Ground-LEO") == 1);
    CHECK(config.scenario_overrides.at("Ground-LEO").target_altitude ==
          doctest::Approx(1e6));
    CHECK(config.scenario_overrides.at("Ground-LEO").adaptive_optics == true);
    REQUIRE(config.scenario_overrides.count("My-Custom-Link") == 1);

    const std::string canonical = serialize_config(config);
    CHECK(serialize_config(parse_config(canonical)) == canonical);

    CHECK_THROWS_AS(parse_config(R"({"scenarios": {"Ground-LEO": {"zenith_deg": 60}}})"),
                    config_error);
    CHECK_THROWS_AS(
        parse_config(R"({"scenarios": {"Ground-LEO": {"beam_quality": 0.5}}})"),
        config_error);
}
