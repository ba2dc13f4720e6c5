// qdos: link-budget simulator for laser denial-of-service attacks on
// free-space quantum communication links.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "qdos/calibrate.hpp"
#include "qdos/config.hpp"
#include "qdos/emit.hpp"
#include "qdos/errors.hpp"
#include "qdos/scenario.hpp"
#include "qdos/units.hpp"

namespace {

using namespace qdos;

struct GlobalOptions {
    std::string config_path;
    std::string format = "csv";
    std::string out_path;
    double wavelength_nm = 810.0;
};

struct ScenarioFlags {
    std::string name;
    std::string attack;
    double power_w = 0.0;
    double power_kw = 0.0;
    double zenith_deg = -1.0;
    double target_altitude_km = -1.0;
    double source_altitude_km = -1.0;
    std::string source_platform;
    bool adaptive_optics = false;
    double theta_rms = -1.0;
    double source_aperture_m = 0.0;
    double receiver_aperture_m = 0.0;
    double receiver_loss = 0.0;
};

EmitFormat parse_format(const std::string& format) {
    if (format == "csv")
        return EmitFormat::csv;
    if (format == "json")
        return EmitFormat::json;
    throw config_error("--format must be 'csv' or 'json'");
}

Config load_config(const GlobalOptions& options) {
    if (options.config_path.empty())
        return default_config();
    std::ifstream in(options.config_path);
    if (!in)
        throw config_error("cannot open config file '" + options.config_path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_config(buffer.str());
}

void write_output(const GlobalOptions& options, const std::string& text) {
    if (options.out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(options.out_path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot open output file '" + options.out_path + "'");
    out << text;
}

PlatformKind platform_from_string(const std::string& text) {
    for (auto kind : {PlatformKind::ground_fixed, PlatformKind::ground_mobile,
                      PlatformKind::drone, PlatformKind::plane, PlatformKind::stratospheric,
                      PlatformKind::leo_sat, PlatformKind::geo_sat}) {
        if (to_string(kind) == text)
            return kind;
    }
    throw config_error("unknown platform '" + text + "'");
}

ScenarioSpec spec_from_flags(const ScenarioFlags& flags, const GlobalOptions& options,
                             const Config& config) {
    ScenarioOverrides overrides;
    if (!flags.attack.empty()) {
        const auto attack = attack_from_string(flags.attack);
        if (!attack)
            throw config_error("--attack must be 'in_fov' or 'out_of_fov'");
        overrides.attack = attack;
    }
    if (flags.zenith_deg >= 0.0)
        overrides.zenith = units::deg(flags.zenith_deg);
    if (flags.target_altitude_km >= 0.0)
        overrides.target_altitude = units::km(flags.target_altitude_km);
    if (flags.source_altitude_km >= 0.0)
        overrides.source_altitude = units::km(flags.source_altitude_km);
    if (!flags.source_platform.empty())
        overrides.source_platform = platform_from_string(flags.source_platform);
    if (flags.adaptive_optics)
        overrides.adaptive_optics = true;
    if (flags.theta_rms >= 0.0)
        overrides.theta_rms = flags.theta_rms;
    if (flags.source_aperture_m > 0.0)
        overrides.source_aperture = flags.source_aperture_m;
    if (flags.receiver_aperture_m > 0.0)
        overrides.receiver_aperture = flags.receiver_aperture_m;
    if (flags.receiver_loss > 0.0)
        overrides.receiver_optical_loss = flags.receiver_loss;
    overrides.wavelength = units::nm(options.wavelength_nm);
    return build_scenario(flags.name, overrides, config);
}

double power_from_flags(const ScenarioFlags& flags, double fallback) {
    if (flags.power_kw > 0.0)
        return units::kw(flags.power_kw);
    if (flags.power_w > 0.0)
        return flags.power_w;
    return fallback;
}

void add_scenario_flags(CLI::App* cmd, ScenarioFlags& flags) {
    cmd->add_option("--scenario", flags.name, "Scenario preset name")->required();
    cmd->add_option("--attack", flags.attack, "Attack type: in_fov | out_of_fov");
    auto* p = cmd->add_option("--power", flags.power_w, "Initial laser power [W]");
    cmd->add_option("--power-kw", flags.power_kw, "Initial laser power [kW]")->excludes(p);
    cmd->add_option("--zenith", flags.zenith_deg, "Zenith angle [deg]");
    cmd->add_option("--target-altitude", flags.target_altitude_km, "Target altitude [km]");
    cmd->add_option("--source-altitude", flags.source_altitude_km, "Source altitude [km]");
    cmd->add_option("--source-platform", flags.source_platform,
                    "Source platform preset (drone, plane, ...)");
    cmd->add_flag("--ao", flags.adaptive_optics, "Enable adaptive optics on the source");
    cmd->add_option("--theta-rms", flags.theta_rms, "Jitter angle [rad]");
    cmd->add_option("--source-aperture", flags.source_aperture_m, "Source aperture [m]");
    cmd->add_option("--receiver-aperture", flags.receiver_aperture_m,
                    "Receiver aperture [m]");
    cmd->add_option("--receiver-loss", flags.receiver_loss,
                    "Receiver internal optical loss (0, 1]");
}

int dispatch(int argc, char** argv) {
    CLI::App app{"Free-space laser DoS link-budget simulator for quantum links"};
    app.require_subcommand(1);

    GlobalOptions options;
    app.add_option("--config", options.config_path, "JSON configuration file");
    app.add_option("--format", options.format, "Output format: csv | json")
        ->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--out", options.out_path, "Write output to a file");
    app.add_option("--wavelength", options.wavelength_nm, "Laser wavelength [nm]");

    // fov
    auto* fov_cmd = app.add_subcommand("fov", "FOV diameter calculator");
    double fov_angle_urad = 0.0;
    double fov_distance_km = 0.0;
    bool fov_table = false;
    fov_cmd->add_option("--angle", fov_angle_urad, "FOV full-cone angle [urad]");
    fov_cmd->add_option("--distance", fov_distance_km, "Distance [km]");
    fov_cmd->add_flag("--table", fov_table, "Print the published 4x4 grid");

    // propagate
    auto* prop_cmd = app.add_subcommand("propagate", "Single-point chain dump");
    ScenarioFlags prop_flags;
    add_scenario_flags(prop_cmd, prop_flags);

    // sweep
    auto* sweep_cmd = app.add_subcommand("sweep", "Scenario power sweep");
    ScenarioFlags sweep_flags;
    add_scenario_flags(sweep_cmd, sweep_flags);

    // threshold
    auto* thr_cmd = app.add_subcommand("threshold", "Minimal power triggering an effect");
    ScenarioFlags thr_flags;
    add_scenario_flags(thr_cmd, thr_flags);
    std::string thr_effect;
    std::string thr_edge = "nominal";
    thr_cmd->add_option("--effect", thr_effect, "Effect name from the ladder")->required();
    thr_cmd->add_option("--edge", thr_edge, "Band edge: low | nominal | high")
        ->check(CLI::IsMember({"low", "nominal", "high"}));

    // footprint
    auto* foot_cmd = app.add_subcommand("footprint", "Dazzle footprint radius");
    ScenarioFlags foot_flags;
    foot_flags.name = "GEO-Ground";
    foot_cmd->add_option("--scenario", foot_flags.name, "Scenario preset name");
    auto* fp = foot_cmd->add_option("--power", foot_flags.power_w, "Initial power [W]");
    foot_cmd->add_option("--power-kw", foot_flags.power_kw, "Initial power [kW]")
        ->excludes(fp);

    // effects
    auto* eff_cmd = app.add_subcommand("effects", "Classify a received power");
    double eff_power = 0.0;
    std::string eff_receiver = "ground";
    eff_cmd->add_option("--power", eff_power, "Received power [W]")->required();
    eff_cmd->add_option("--receiver", eff_receiver, "Receiver preset: ground | leo | geo")
        ->check(CLI::IsMember({"ground", "leo", "geo"}));

    // risk
    auto* risk_cmd = app.add_subcommand("risk", "Scenario risk table");
    std::string risk_custom;
    risk_cmd->add_option("--custom", risk_custom,
                         "JSON file with custom assessment rows (config risk.preset shape)");

    // calibrate
    auto* cal_cmd = app.add_subcommand("calibrate", "Fit the zenith transmittance");
    std::vector<double> cal_targets; // flat (altitude_km, zenith_deg, ratio) triples
    cal_cmd->add_option("--targets", cal_targets,
                        "Constraints as altitude_km zenith_deg ratio triples");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    const EmitFormat format = parse_format(options.format);
    const Config config = load_config(options);

    if (fov_cmd->parsed()) {
        if (fov_table) {
            const std::vector<double> angles = {units::urad(1), units::urad(10),
                                                units::urad(100), units::urad(1000)};
            const std::vector<double> distances = {units::km(10), units::km(500),
                                                   units::km(1000), units::km(35000)};
            write_output(options, emit_fov_table(angles, distances, format));
        } else {
            write_output(options, emit_fov_table({units::urad(fov_angle_urad)},
                                                 {units::km(fov_distance_km)}, format));
        }
        return 0;
    }

    if (prop_cmd->parsed()) {
        const ScenarioSpec spec = spec_from_flags(prop_flags, options, config);
        const double power = power_from_flags(prop_flags, spec.source.power);
        const ChainResult chain = evaluate_scenario(spec, power, BandEdge::nominal, config);
        write_output(options, emit_chain(spec, power, chain, format));
        return 0;
    }

    if (sweep_cmd->parsed()) {
        const ScenarioSpec spec = spec_from_flags(sweep_flags, options, config);
        const SweepResult result =
            run_sweep(spec, make_power_grid(config.sweep), config);
        write_output(options, emit_sweep(result, format));
        return 0;
    }

    if (thr_cmd->parsed()) {
        const ScenarioSpec spec = spec_from_flags(thr_flags, options, config);
        const BandEdge edge = thr_edge == "low" ? BandEdge::low
                              : thr_edge == "high" ? BandEdge::high
                                                   : BandEdge::nominal;
        const auto power = find_threshold_power(spec, thr_effect, edge, config);
        write_output(options, emit_threshold(spec, thr_effect, edge, power, format));
        return 0;
    }

    if (foot_cmd->parsed()) {
        ScenarioFlags flags = foot_flags;
        flags.attack = "out_of_fov";
        const ScenarioSpec spec = spec_from_flags(flags, options, config);
        const double power = power_from_flags(flags, 10.0);
        const FootprintResult footprint = dazzle_footprint(spec, power, config);
        write_output(options, emit_footprint(spec, power, footprint, format));
        return 0;
    }

    if (eff_cmd->parsed()) {
        const ReceiverPreset& preset = eff_receiver == "leo"   ? config.leo_receiver
                                       : eff_receiver == "geo" ? config.geo_receiver
                                                               : config.ground_receiver;
        const Receiver receiver{preset.aperture, preset.optical_loss, preset.fov_angle};
        const EffectReport report = classify_effects(eff_power, receiver, config.ladder);
        write_output(options, emit_effects(report, format));
        return 0;
    }

    if (risk_cmd->parsed()) {
        std::vector<RiskAssessment> rows = config.risk_preset;
        if (!risk_custom.empty()) {
            std::ifstream in(risk_custom);
            if (!in)
                throw config_error("cannot open risk file '" + risk_custom + "'");
            std::ostringstream buffer;
            buffer << in.rdbuf();
            const Config custom = parse_config("{\"risk\": {\"preset\": " + buffer.str() + "}}");
            rows = custom.risk_preset;
        }
        write_output(options, emit_risk(scenario_risk_table(rows), format));
        return 0;
    }

    if (cal_cmd->parsed()) {
        std::vector<CalibrationTarget> targets = default_calibration_targets();
        if (!cal_targets.empty()) {
            if (cal_targets.size() % 3 != 0)
                throw config_error("--targets expects altitude_km zenith_deg ratio triples");
            targets.clear();
            for (size_t i = 0; i < cal_targets.size(); i += 3)
                targets.push_back({units::km(cal_targets[i]), units::deg(cal_targets[i + 1]),
                                   cal_targets[i + 2]});
        }
        const CalibrationResult result =
            calibrate_transmittance(targets, units::nm(options.wavelength_nm), config);
        write_output(options, emit_calibration(result, format));
        return 0;
    }

    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return dispatch(argc, argv);
    } catch (const qdos::config_error& e) {
        std::cerr << "configuration error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
