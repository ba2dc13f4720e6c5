#include "qdos/config.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <set>

#include <json.hpp>

#include "qdos/errors.hpp"

namespace qdos {

using ordered_json = nlohmann::ordered_json;

namespace {

// Calibrated against the 60-degree suppression factors for a ground-to-LEO
// reference link; `qdos calibrate` reproduces the 810 nm value.
constexpr double kDefaultT0_810 = 0.922282;
constexpr double kDefaultT0_1550 = 0.96;

void require_keys(const ordered_json& obj, const std::string& path,
                  const std::set<std::string>& allowed) {
    for (const auto& item : obj.items()) {
        if (!allowed.count(item.key()))
            throw config_error(path + "." + item.key() + ": unknown key");
    }
}

const ordered_json* child_object(const ordered_json& obj, const char* key,
                                 const std::string& path) {
    auto it = obj.find(key);
    if (it == obj.end())
        return nullptr;
    if (!it->is_object())
        throw config_error(path + "." + key + ": expected an object");
    return &*it;
}

double read_number(const ordered_json& obj, const char* key, const std::string& path,
                   double fallback) {
    auto it = obj.find(key);
    if (it == obj.end())
        return fallback;
    if (!it->is_number())
        throw config_error(path + "." + key + ": expected a number");
    return it->get<double>();
}

int read_int(const ordered_json& obj, const char* key, const std::string& path,
             int fallback) {
    auto it = obj.find(key);
    if (it == obj.end())
        return fallback;
    if (!it->is_number_integer())
        throw config_error(path + "." + key + ": expected an integer");
    return it->get<int>();
}

void check(bool ok, const std::string& path, const std::string& what) {
    if (!ok)
        throw config_error(path + ": " + what);
}

std::string wavelength_key(double wavelength) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", wavelength);
    return buf;
}

void parse_atmosphere(const ordered_json& obj, const std::string& path, Config& config) {
    require_keys(obj, path,
                 {"T0", "tau_transmitter", "ceiling_m", "extinction_scale_height_m",
                  "hufnagel_valley", "quadrature"});

    if (const auto* t0 = child_object(obj, "T0", path)) {
        config.transmittance.zenith_transmittance.clear();
        for (const auto& item : t0->items()) {
            const std::string t0_path = path + ".T0." + item.key();
            char* end = nullptr;
            const double lambda = std::strtod(item.key().c_str(), &end);
            check(end && *end == '\0' && lambda > 0.0, t0_path,
                  "key must be a positive wavelength in metres");
            check(item.value().is_number(), t0_path, "expected a number");
            const double value = item.value().get<double>();
            check(value > 0.0 && value <= 1.0, path + ".T0",
                  "zenith transmittance must lie in (0, 1]");
            config.transmittance.zenith_transmittance[lambda] = value;
        }
        check(!config.transmittance.zenith_transmittance.empty(), path + ".T0",
              "at least one wavelength required");
    }

    auto& t = config.transmittance;
    t.tau_transmitter = read_number(obj, "tau_transmitter", path, t.tau_transmitter);
    check(t.tau_transmitter > 0.0 && t.tau_transmitter <= 1.0, path + ".tau_transmitter",
          "must lie in (0, 1]");
    t.ceiling = read_number(obj, "ceiling_m", path, t.ceiling);
    check(t.ceiling > 0.0, path + ".ceiling_m", "must be positive");
    t.extinction_scale_height = read_number(obj, "extinction_scale_height_m", path,
                                            t.extinction_scale_height);
    check(t.extinction_scale_height > 0.0, path + ".extinction_scale_height_m",
          "must be positive");

    if (const auto* hv = child_object(obj, "hufnagel_valley", path)) {
        const std::string hv_path = path + ".hufnagel_valley";
        require_keys(*hv, hv_path, {"ground_strength", "wind_rms_m_s"});
        config.profile.ground_strength =
            read_number(*hv, "ground_strength", hv_path, config.profile.ground_strength);
        check(config.profile.ground_strength > 0.0, hv_path + ".ground_strength",
              "must be positive");
        config.profile.wind_rms =
            read_number(*hv, "wind_rms_m_s", hv_path, config.profile.wind_rms);
        check(config.profile.wind_rms > 0.0, hv_path + ".wind_rms_m_s", "must be positive");
    }

    if (const auto* quad = child_object(obj, "quadrature", path)) {
        const std::string quad_path = path + ".quadrature";
        require_keys(*quad, quad_path, {"rel_tol", "max_depth"});
        config.quadrature.rel_tol =
            read_number(*quad, "rel_tol", quad_path, config.quadrature.rel_tol);
        check(config.quadrature.rel_tol > 0.0, quad_path + ".rel_tol", "must be positive");
        config.quadrature.max_depth =
            read_int(*quad, "max_depth", quad_path, config.quadrature.max_depth);
        check(config.quadrature.max_depth >= 1, quad_path + ".max_depth", "must be >= 1");
    }
}

void parse_ao(const ordered_json& obj, const std::string& path, AOConfig& ao) {
    require_keys(obj, path,
                 {"fitting_coefficient", "actuator_spacing_m", "control_bandwidth_hz",
                  "greenwood_frequency_hz", "sensor_snr"});
    ao.fitting_coefficient =
        read_number(obj, "fitting_coefficient", path, ao.fitting_coefficient);
    ao.actuator_spacing = read_number(obj, "actuator_spacing_m", path, ao.actuator_spacing);
    ao.control_bandwidth =
        read_number(obj, "control_bandwidth_hz", path, ao.control_bandwidth);
    ao.greenwood_frequency =
        read_number(obj, "greenwood_frequency_hz", path, ao.greenwood_frequency);
    ao.sensor_snr = read_number(obj, "sensor_snr", path, ao.sensor_snr);
    check(ao.fitting_coefficient > 0.0 && ao.actuator_spacing > 0.0 &&
              ao.control_bandwidth > 0.0 && ao.greenwood_frequency > 0.0 &&
              ao.sensor_snr > 0.0,
          path, "all adaptive-optics fields must be positive");
}

void parse_band(const ordered_json& obj, const char* key, const std::string& path,
                double& low, double& high) {
    auto it = obj.find(key);
    if (it == obj.end())
        return;
    const std::string band_path = path + "." + key;
    check(it->is_array() && it->size() == 2 && (*it)[0].is_number() && (*it)[1].is_number(),
          band_path, "expected [low, high]");
    low = (*it)[0].get<double>();
    high = (*it)[1].get<double>();
}

void parse_receiver(const ordered_json& obj, const std::string& path, ReceiverPreset& preset) {
    require_keys(obj, path, {"aperture_m", "optical_loss", "fov_angle_rad"});
    preset.aperture = read_number(obj, "aperture_m", path, preset.aperture);
    check(preset.aperture > 0.0, path + ".aperture_m", "must be positive");
    preset.optical_loss = read_number(obj, "optical_loss", path, preset.optical_loss);
    check(preset.optical_loss > 0.0 && preset.optical_loss <= 1.0, path + ".optical_loss",
          "must lie in (0, 1]");
    preset.fov_angle = read_number(obj, "fov_angle_rad", path, preset.fov_angle);
    check(preset.fov_angle > 0.0, path + ".fov_angle_rad", "must be positive");
}

ThresholdKind threshold_kind_from_string(const std::string& text, const std::string& path) {
    if (text == "power_w")
        return ThresholdKind::power_w;
    if (text == "density_w_per_cm2")
        return ThresholdKind::density_w_per_cm2;
    throw config_error(path + ": unknown threshold kind '" + text + "'");
}

PlatformKind platform_kind_from_string(const std::string& text, const std::string& path) {
    for (auto kind : {PlatformKind::ground_fixed, PlatformKind::ground_mobile,
                      PlatformKind::drone, PlatformKind::plane, PlatformKind::stratospheric,
                      PlatformKind::leo_sat, PlatformKind::geo_sat}) {
        if (to_string(kind) == text)
            return kind;
    }
    throw config_error(path + ": unknown platform '" + text + "'");
}

void parse_platforms(const ordered_json& obj, const std::string& path, Config& config) {
    for (const auto& item : obj.items()) {
        const std::string block_path = path + "." + item.key();
        const PlatformKind kind = platform_kind_from_string(item.key(), block_path);
        check(item.value().is_object(), block_path, "expected an object");
        require_keys(item.value(), block_path,
                     {"altitude_m", "speed_m_s", "power_min_w", "power_max_w"});
        Platform& platform = config.platforms[to_string(kind)];
        platform.altitude = read_number(item.value(), "altitude_m", block_path,
                                        platform.altitude);
        check(platform.altitude >= 0.0, block_path + ".altitude_m", "must be nonnegative");
        platform.speed = read_number(item.value(), "speed_m_s", block_path, platform.speed);
        check(platform.speed >= 0.0, block_path + ".speed_m_s", "must be nonnegative");
        platform.power.min_w =
            read_number(item.value(), "power_min_w", block_path, platform.power.min_w);
        platform.power.max_w =
            read_number(item.value(), "power_max_w", block_path, platform.power.max_w);
        check(platform.power.min_w > 0.0 && platform.power.min_w <= platform.power.max_w,
              block_path, "requires 0 < power_min_w <= power_max_w");
    }
}

void parse_scenario_overrides(const ordered_json& obj, const std::string& path,
                              Config& config) {
    for (const auto& item : obj.items()) {
        const std::string block_path = path + "." + item.key();
        check(item.value().is_object(), block_path, "expected an object");
        require_keys(item.value(), block_path,
                     {"attack", "wavelength_m", "zenith_rad", "source_altitude_m",
                      "target_altitude_m", "source_platform", "source_aperture_m",
                      "receiver_aperture_m", "receiver_optical_loss", "adaptive_optics",
                      "beam_quality", "pointing_variance_m", "theta_rms_rad"});
        ScenarioOverrides block;
        const auto& entry = item.value();
        if (entry.contains("attack")) {
            check(entry["attack"].is_string(), block_path + ".attack", "expected a string");
            block.attack = attack_from_string(entry["attack"].get<std::string>());
            check(block.attack.has_value(), block_path + ".attack",
                  "must be 'in_fov' or 'out_of_fov'");
        }
        const auto positive = [&](const char* key, std::optional<double>& out) {
            if (!entry.contains(key))
                return;
            check(entry[key].is_number(), block_path + "." + key, "expected a number");
            const double value = entry[key].get<double>();
            check(value > 0.0, block_path + "." + key, "must be positive");
            out = value;
        };
        positive("wavelength_m", block.wavelength);
        positive("source_aperture_m", block.source_aperture);
        positive("receiver_aperture_m", block.receiver_aperture);
        if (entry.contains("target_altitude_m")) {
            const double altitude = read_number(entry, "target_altitude_m", block_path, 0.0);
            check(altitude >= 0.0, block_path + ".target_altitude_m", "must be nonnegative");
            block.target_altitude = altitude;
        }
        if (entry.contains("zenith_rad")) {
            const double zenith = read_number(entry, "zenith_rad", block_path, 0.0);
            check(zenith >= 0.0 && zenith < 1.5707963267948966, block_path + ".zenith_rad",
                  "must lie in [0, pi/2)");
            block.zenith = zenith;
        }
        if (entry.contains("source_altitude_m")) {
            const double altitude = read_number(entry, "source_altitude_m", block_path, 0.0);
            check(altitude >= 0.0, block_path + ".source_altitude_m", "must be nonnegative");
            block.source_altitude = altitude;
        }
        if (entry.contains("source_platform")) {
            check(entry["source_platform"].is_string(), block_path + ".source_platform",
                  "expected a string");
            block.source_platform = platform_kind_from_string(
                entry["source_platform"].get<std::string>(), block_path + ".source_platform");
        }
        if (entry.contains("receiver_optical_loss")) {
            const double loss = read_number(entry, "receiver_optical_loss", block_path, 1.0);
            check(loss > 0.0 && loss <= 1.0, block_path + ".receiver_optical_loss",
                  "must lie in (0, 1]");
            block.receiver_optical_loss = loss;
        }
        if (entry.contains("adaptive_optics")) {
            check(entry["adaptive_optics"].is_boolean(), block_path + ".adaptive_optics",
                  "expected a boolean");
            block.adaptive_optics = entry["adaptive_optics"].get<bool>();
        }
        if (entry.contains("beam_quality")) {
            const double m = read_number(entry, "beam_quality", block_path, 1.0);
            check(m >= 1.0, block_path + ".beam_quality", "must be >= 1");
            block.beam_quality = m;
        }
        if (entry.contains("pointing_variance_m")) {
            const double sigma = read_number(entry, "pointing_variance_m", block_path, 0.0);
            check(sigma >= 0.0, block_path + ".pointing_variance_m", "must be nonnegative");
            block.pointing_variance = sigma;
        }
        if (entry.contains("theta_rms_rad")) {
            const double theta = read_number(entry, "theta_rms_rad", block_path, 0.0);
            check(theta >= 0.0, block_path + ".theta_rms_rad", "must be nonnegative");
            block.theta_rms = theta;
        }
        config.scenario_overrides[item.key()] = std::move(block);
    }
}

void parse_effects(const ordered_json& obj, const std::string& path, Config& config) {
    require_keys(obj, path, {"ladder"});
    auto it = obj.find("ladder");
    if (it == obj.end())
        return;
    check(it->is_array() && !it->empty(), path + ".ladder", "expected a nonempty array");
    std::vector<EffectThreshold> ladder;
    int index = 0;
    for (const auto& entry : *it) {
        const std::string entry_path = path + ".ladder[" + std::to_string(index++) + "]";
        check(entry.is_object(), entry_path, "expected an object");
        require_keys(entry, entry_path, {"name", "kind", "onset", "onset_upper"});
        EffectThreshold rung;
        check(entry.contains("name") && entry["name"].is_string(), entry_path + ".name",
              "required string");
        rung.name = entry["name"].get<std::string>();
        check(entry.contains("kind") && entry["kind"].is_string(), entry_path + ".kind",
              "required string");
        rung.kind = threshold_kind_from_string(entry["kind"].get<std::string>(),
                                               entry_path + ".kind");
        check(entry.contains("onset") && entry["onset"].is_number(), entry_path + ".onset",
              "required number");
        rung.onset = entry["onset"].get<double>();
        if (entry.contains("onset_upper") && !entry["onset_upper"].is_null()) {
            check(entry["onset_upper"].is_number(), entry_path + ".onset_upper",
                  "expected a number");
            rung.onset_upper = entry["onset_upper"].get<double>();
        }
        try {
            validate(rung);
        } catch (const std::exception& e) {
            throw config_error(entry_path + ": " + e.what());
        }
        ladder.push_back(std::move(rung));
    }
    config.ladder = std::move(ladder);
}

void parse_risk(const ordered_json& obj, const std::string& path, Config& config) {
    require_keys(obj, path, {"preset", "impact_grouping"});
    if (auto it = obj.find("preset"); it != obj.end()) {
        check(it->is_array(), path + ".preset", "expected an array");
        std::vector<RiskAssessment> rows;
        int index = 0;
        for (const auto& entry : *it) {
            const std::string row_path = path + ".preset[" + std::to_string(index++) + "]";
            check(entry.is_object(), row_path, "expected an object");
            require_keys(entry, row_path, {"scenario", "attack", "likelihood", "impact"});
            RiskAssessment row;
            check(entry.contains("scenario") && entry["scenario"].is_string(),
                  row_path + ".scenario", "required string");
            row.scenario = entry["scenario"].get<std::string>();
            check(entry.contains("attack") && entry["attack"].is_string(),
                  row_path + ".attack", "required string");
            const auto attack = attack_from_string(entry["attack"].get<std::string>());
            check(attack.has_value(), row_path + ".attack",
                  "must be 'in_fov' or 'out_of_fov'");
            row.attack = *attack;
            if (entry.contains("likelihood") && !entry["likelihood"].is_null()) {
                check(entry["likelihood"].is_string(), row_path + ".likelihood",
                      "expected a string or null");
                row.likelihood = likelihood_from_string(entry["likelihood"].get<std::string>());
                check(row.likelihood.has_value(), row_path + ".likelihood",
                      "unknown likelihood");
            }
            if (entry.contains("impact") && !entry["impact"].is_null()) {
                check(entry["impact"].is_string(), row_path + ".impact",
                      "expected a string or null");
                row.impact = impact_from_string(entry["impact"].get<std::string>());
                check(row.impact.has_value(), row_path + ".impact", "unknown impact");
            }
            rows.push_back(std::move(row));
        }
        config.risk_preset = std::move(rows);
    }
    if (auto it = obj.find("impact_grouping"); it != obj.end()) {
        check(it->is_object(), path + ".impact_grouping", "expected an object");
        ImpactGrouping grouping;
        for (const auto& item : it->items()) {
            const std::string key_path = path + ".impact_grouping." + item.key();
            check(item.value().is_string(), key_path, "expected an impact string");
            const auto impact = impact_from_string(item.value().get<std::string>());
            check(impact.has_value(), key_path, "unknown impact");
            grouping[item.key()] = *impact;
        }
        config.impact_grouping = std::move(grouping);
    }
}

} // namespace

ScenarioOverrides merge_overrides(const ScenarioOverrides& base,
                                  const ScenarioOverrides& primary) {
    ScenarioOverrides merged = base;
    const auto take = [](auto& dst, const auto& src) {
        if (src)
            dst = src;
    };
    take(merged.attack, primary.attack);
    take(merged.wavelength, primary.wavelength);
    take(merged.zenith, primary.zenith);
    take(merged.source_altitude, primary.source_altitude);
    take(merged.target_altitude, primary.target_altitude);
    take(merged.source_platform, primary.source_platform);
    take(merged.source_aperture, primary.source_aperture);
    take(merged.receiver_aperture, primary.receiver_aperture);
    take(merged.receiver_optical_loss, primary.receiver_optical_loss);
    take(merged.adaptive_optics, primary.adaptive_optics);
    take(merged.beam_quality, primary.beam_quality);
    take(merged.pointing_variance, primary.pointing_variance);
    take(merged.theta_rms, primary.theta_rms);
    take(merged.ao, primary.ao);
    return merged;
}

Config default_config() {
    Config config;
    config.transmittance.zenith_transmittance = {{810e-9, kDefaultT0_810},
                                                 {1550e-9, kDefaultT0_1550}};
    config.ladder = default_effect_ladder();
    config.impact_grouping = default_impact_grouping();
    config.risk_preset = default_risk_assessment();
    for (auto kind : {PlatformKind::ground_fixed, PlatformKind::ground_mobile,
                      PlatformKind::drone, PlatformKind::plane, PlatformKind::stratospheric,
                      PlatformKind::leo_sat, PlatformKind::geo_sat})
        config.platforms[to_string(kind)] = platform_preset(kind);
    return config;
}

Config parse_config(const std::string& json_text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw config_error(std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object())
        throw config_error("config root must be a JSON object");

    Config config = default_config();
    require_keys(doc, "config",
                 {"schema_version", "atmosphere", "adaptive_optics", "beam", "out_of_fov",
                  "satellite_surface", "receivers", "effects", "risk", "sweep", "platforms",
                  "scenarios"});

    if (auto it = doc.find("schema_version"); it != doc.end()) {
        check(it->is_string(), "config.schema_version", "expected a string");
        config.schema_version = it->get<std::string>();
        check(config.schema_version == "1", "config.schema_version",
              "unsupported schema version '" + config.schema_version + "'");
    }

    if (const auto* atm = child_object(doc, "atmosphere", "config"))
        parse_atmosphere(*atm, "config.atmosphere", config);

    if (const auto* ao = child_object(doc, "adaptive_optics", "config"))
        parse_ao(*ao, "config.adaptive_optics", config.ao);

    if (const auto* beam = child_object(doc, "beam", "config")) {
        const std::string path = "config.beam";
        require_keys(*beam, path, {"theta_rms_rad", "thermal_distortion_number"});
        config.beam.theta_rms = read_number(*beam, "theta_rms_rad", path, config.beam.theta_rms);
        check(config.beam.theta_rms >= 0.0, path + ".theta_rms_rad", "must be nonnegative");
        config.beam.thermal_distortion_number = read_number(
            *beam, "thermal_distortion_number", path, config.beam.thermal_distortion_number);
        check(config.beam.thermal_distortion_number >= 0.0,
              path + ".thermal_distortion_number", "must be nonnegative");
    }

    if (const auto* oof = child_object(doc, "out_of_fov", "config")) {
        const std::string path = "config.out_of_fov";
        require_keys(*oof, path, {"kappa", "kappa_band"});
        config.out_of_fov.kappa = read_number(*oof, "kappa", path, config.out_of_fov.kappa);
        parse_band(*oof, "kappa_band", path, config.out_of_fov.kappa_low,
                   config.out_of_fov.kappa_high);
        try {
            validate(config.out_of_fov);
        } catch (const std::exception& e) {
            throw config_error(path + ": " + e.what());
        }
    }

    if (const auto* surf = child_object(doc, "satellite_surface", "config")) {
        const std::string path = "config.satellite_surface";
        require_keys(*surf, path, {"area_m2", "albedo", "area_band_m2", "albedo_band"});
        config.surface.area = read_number(*surf, "area_m2", path, config.surface.area);
        config.surface.albedo = read_number(*surf, "albedo", path, config.surface.albedo);
        parse_band(*surf, "area_band_m2", path, config.surface.area_low,
                   config.surface.area_high);
        parse_band(*surf, "albedo_band", path, config.surface.albedo_low,
                   config.surface.albedo_high);
        try {
            validate(config.surface);
        } catch (const std::exception& e) {
            throw config_error(path + ": " + e.what());
        }
    }

    if (const auto* recv = child_object(doc, "receivers", "config")) {
        const std::string path = "config.receivers";
        require_keys(*recv, path, {"ground", "leo", "geo"});
        if (const auto* ground = child_object(*recv, "ground", path))
            parse_receiver(*ground, path + ".ground", config.ground_receiver);
        if (const auto* leo = child_object(*recv, "leo", path))
            parse_receiver(*leo, path + ".leo", config.leo_receiver);
        if (const auto* geo = child_object(*recv, "geo", path))
            parse_receiver(*geo, path + ".geo", config.geo_receiver);
    }

    if (const auto* effects = child_object(doc, "effects", "config"))
        parse_effects(*effects, "config.effects", config);

    if (const auto* risk = child_object(doc, "risk", "config"))
        parse_risk(*risk, "config.risk", config);

    if (const auto* platforms = child_object(doc, "platforms", "config"))
        parse_platforms(*platforms, "config.platforms", config);

    if (const auto* scenarios = child_object(doc, "scenarios", "config"))
        parse_scenario_overrides(*scenarios, "config.scenarios", config);

    if (const auto* sweep = child_object(doc, "sweep", "config")) {
        const std::string path = "config.sweep";
        require_keys(*sweep, path, {"p_min_w", "p_max_w", "points_per_decade"});
        config.sweep.p_min = read_number(*sweep, "p_min_w", path, config.sweep.p_min);
        config.sweep.p_max = read_number(*sweep, "p_max_w", path, config.sweep.p_max);
        config.sweep.points_per_decade =
            read_int(*sweep, "points_per_decade", path, config.sweep.points_per_decade);
        check(config.sweep.p_min > 0.0 && config.sweep.p_max > config.sweep.p_min,
              path, "requires 0 < p_min_w < p_max_w");
        check(config.sweep.points_per_decade >= 1, path + ".points_per_decade",
              "must be >= 1");
    }

    return config;
}

std::string serialize_config(const Config& config) {
    ordered_json doc;
    doc["schema_version"] = config.schema_version;

    ordered_json t0 = ordered_json::object();
    for (const auto& [lambda, value] : config.transmittance.zenith_transmittance)
        t0[wavelength_key(lambda)] = value;
    doc["atmosphere"] = {
        {"T0", t0},
        {"tau_transmitter", config.transmittance.tau_transmitter},
        {"ceiling_m", config.transmittance.ceiling},
        {"extinction_scale_height_m", config.transmittance.extinction_scale_height},
        {"hufnagel_valley",
         {{"ground_strength", config.profile.ground_strength},
          {"wind_rms_m_s", config.profile.wind_rms}}},
        {"quadrature",
         {{"rel_tol", config.quadrature.rel_tol},
          {"max_depth", config.quadrature.max_depth}}},
    };

    doc["adaptive_optics"] = {
        {"fitting_coefficient", config.ao.fitting_coefficient},
        {"actuator_spacing_m", config.ao.actuator_spacing},
        {"control_bandwidth_hz", config.ao.control_bandwidth},
        {"greenwood_frequency_hz", config.ao.greenwood_frequency},
        {"sensor_snr", config.ao.sensor_snr},
    };

    doc["beam"] = {
        {"theta_rms_rad", config.beam.theta_rms},
        {"thermal_distortion_number", config.beam.thermal_distortion_number},
    };

    doc["out_of_fov"] = {
        {"kappa", config.out_of_fov.kappa},
        {"kappa_band", {config.out_of_fov.kappa_low, config.out_of_fov.kappa_high}},
    };

    doc["satellite_surface"] = {
        {"area_m2", config.surface.area},
        {"albedo", config.surface.albedo},
        {"area_band_m2", {config.surface.area_low, config.surface.area_high}},
        {"albedo_band", {config.surface.albedo_low, config.surface.albedo_high}},
    };

    const auto receiver_json = [](const ReceiverPreset& preset) {
        return ordered_json{{"aperture_m", preset.aperture},
                            {"optical_loss", preset.optical_loss},
                            {"fov_angle_rad", preset.fov_angle}};
    };
    doc["receivers"] = {
        {"ground", receiver_json(config.ground_receiver)},
        {"leo", receiver_json(config.leo_receiver)},
        {"geo", receiver_json(config.geo_receiver)},
    };

    ordered_json ladder = ordered_json::array();
    for (const auto& rung : config.ladder) {
        ordered_json entry = {
            {"name", rung.name},
            {"kind", rung.kind == ThresholdKind::power_w ? "power_w" : "density_w_per_cm2"},
            {"onset", rung.onset},
        };
        if (rung.onset_upper)
            entry["onset_upper"] = *rung.onset_upper;
        ladder.push_back(std::move(entry));
    }
    doc["effects"] = {{"ladder", ladder}};

    ordered_json preset = ordered_json::array();
    for (const auto& row : config.risk_preset) {
        ordered_json entry = {{"scenario", row.scenario},
                              {"attack", to_string(row.attack)}};
        entry["likelihood"] =
            row.likelihood ? ordered_json(to_string(*row.likelihood)) : ordered_json(nullptr);
        entry["impact"] =
            row.impact ? ordered_json(to_string(*row.impact)) : ordered_json(nullptr);
        preset.push_back(std::move(entry));
    }
    ordered_json grouping = ordered_json::object();
    for (const auto& [name, impact] : config.impact_grouping)
        grouping[name] = to_string(impact);
    doc["risk"] = {{"preset", preset}, {"impact_grouping", grouping}};

    ordered_json platforms = ordered_json::object();
    for (const auto& [name, platform] : config.platforms) {
        platforms[name] = {{"altitude_m", platform.altitude},
                           {"speed_m_s", platform.speed},
                           {"power_min_w", platform.power.min_w},
                           {"power_max_w", platform.power.max_w}};
    }
    doc["platforms"] = platforms;

    if (!config.scenario_overrides.empty()) {
        ordered_json scenarios = ordered_json::object();
        for (const auto& [name, block] : config.scenario_overrides) {
            ordered_json entry = ordered_json::object();
            if (block.attack)
                entry["attack"] = to_string(*block.attack);
            if (block.wavelength)
                entry["wavelength_m"] = *block.wavelength;
            if (block.zenith)
                entry["zenith_rad"] = *block.zenith;
            if (block.source_altitude)
                entry["source_altitude_m"] = *block.source_altitude;
            if (block.target_altitude)
                entry["target_altitude_m"] = *block.target_altitude;
            if (block.source_platform)
                entry["source_platform"] = to_string(*block.source_platform);
            if (block.source_aperture)
                entry["source_aperture_m"] = *block.source_aperture;
            if (block.receiver_aperture)
                entry["receiver_aperture_m"] = *block.receiver_aperture;
            if (block.receiver_optical_loss)
                entry["receiver_optical_loss"] = *block.receiver_optical_loss;
            if (block.adaptive_optics)
                entry["adaptive_optics"] = *block.adaptive_optics;
            if (block.beam_quality)
                entry["beam_quality"] = *block.beam_quality;
            if (block.pointing_variance)
                entry["pointing_variance_m"] = *block.pointing_variance;
            if (block.theta_rms)
                entry["theta_rms_rad"] = *block.theta_rms;
            scenarios[name] = std::move(entry);
        }
        doc["scenarios"] = scenarios;
    }

    doc["sweep"] = {
        {"p_min_w", config.sweep.p_min},
        {"p_max_w", config.sweep.p_max},
        {"points_per_decade", config.sweep.points_per_decade},
    };

    return doc.dump(2) + "\n";
}

} // namespace qdos
