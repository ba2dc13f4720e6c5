#include "qdos/emit.hpp"

#include <charconv>
#include <sstream>

#include <json.hpp>

#include "qdos/core.hpp"

namespace qdos {

using ordered_json = nlohmann::ordered_json;

namespace {

constexpr const char* kSchemaVersion = "1";

std::string edge_name(BandEdge edge) {
    switch (edge) {
    case BandEdge::low: return "low";
    case BandEdge::high: return "high";
    default: return "nominal";
    }
}

// RFC 4180: quote fields containing separators or quotes.
std::string csv_field(const std::string& text) {
    if (text.find_first_of(",\"\n") == std::string::npos)
        return text;
    std::string quoted = "\"";
    for (char c : text) {
        if (c == '"')
            quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

ordered_json effects_json(const EffectReport& report) {
    ordered_json triggered = ordered_json::array();
    for (const auto& effect : report.triggered) {
        triggered.push_back({{"effect", effect.name},
                             {"certainty", to_string(effect.certainty)},
                             {"onset_w", effect.onset_power}});
    }
    return {{"input_power_w", report.input_power},
            {"equivalent_density_w_cm2", report.equivalent_density},
            {"max_effect", report.max_severity},
            {"triggered", triggered}};
}

std::string dump(ordered_json doc) {
    return doc.dump(2) + "\n";
}

} // namespace

std::string format_double(double value) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, ptr);
}

std::string emit_sweep(const SweepResult& result, EmitFormat format) {
    if (format == EmitFormat::csv) {
        std::ostringstream out;
        out << "p_ini_w,p_recv_low_w,p_recv_w,p_recv_high_w,max_effect\n";
        for (const auto& point : result.points) {
            out << format_double(point.p_ini) << ',' << format_double(point.p_low) << ','
                << format_double(point.p_nominal) << ',' << format_double(point.p_high)
                << ',' << csv_field(point.report.max_severity) << '\n';
        }
        return out.str();
    }
    ordered_json points = ordered_json::array();
    for (const auto& point : result.points) {
        points.push_back({{"p_ini_w", point.p_ini},
                          {"p_recv_low_w", point.p_low},
                          {"p_recv_w", point.p_nominal},
                          {"p_recv_high_w", point.p_high},
                          {"max_effect", point.report.max_severity}});
    }
    return dump({{"schema_version", kSchemaVersion},
                 {"kind", "sweep"},
                 {"scenario", result.scenario},
                 {"attack", to_string(result.attack)},
                 {"wavelength_m", result.wavelength},
                 {"adaptive_optics", result.adaptive_optics},
                 {"points", points}});
}

std::string emit_effects(const EffectReport& report, EmitFormat format) {
    if (format == EmitFormat::csv) {
        std::ostringstream out;
        out << "input_power_w,equivalent_density_w_cm2,effect,certainty\n";
        for (const auto& effect : report.triggered) {
            out << format_double(report.input_power) << ','
                << format_double(report.equivalent_density) << ','
                << csv_field(effect.name) << ',' << to_string(effect.certainty) << '\n';
        }
        return out.str();
    }
    ordered_json doc = {{"schema_version", kSchemaVersion}, {"kind", "effects"}};
    doc.update(effects_json(report));
    return dump(doc);
}

std::string emit_risk(const std::vector<RiskRow>& rows, EmitFormat format) {
    if (format == EmitFormat::csv) {
        std::ostringstream out;
        out << "scenario,attack,likelihood,impact,risk\n";
        for (const auto& row : rows) {
            out << csv_field(row.assessment.scenario) << ','
                << to_string(row.assessment.attack) << ','
                << (row.assessment.likelihood ? to_string(*row.assessment.likelihood) : "No")
                << ','
                << (row.assessment.impact ? to_string(*row.assessment.impact) : "No") << ','
                << to_string(row.risk) << '\n';
        }
        return out.str();
    }
    ordered_json entries = ordered_json::array();
    for (const auto& row : rows) {
        entries.push_back(
            {{"scenario", row.assessment.scenario},
             {"attack", to_string(row.assessment.attack)},
             {"likelihood", row.assessment.likelihood
                                ? ordered_json(to_string(*row.assessment.likelihood))
                                : ordered_json(nullptr)},
             {"impact", row.assessment.impact
                            ? ordered_json(to_string(*row.assessment.impact))
                            : ordered_json(nullptr)},
             {"risk", to_string(row.risk)}});
    }
    return dump({{"schema_version", kSchemaVersion}, {"kind", "risk_table"},
                 {"rows", entries}});
}

std::string emit_chain(const ScenarioSpec& spec, double p_ini, const ChainResult& chain,
                       EmitFormat format) {
    const BeamState& s = chain.state;
    if (format == EmitFormat::csv) {
        std::ostringstream out;
        out << "field,value\n"
            << "scenario," << csv_field(spec.name) << '\n'
            << "attack," << to_string(spec.attack) << '\n'
            << "p_ini_w," << format_double(p_ini) << '\n'
            << "range_m," << format_double(s.range) << '\n'
            << "w0_m," << format_double(s.w0) << '\n'
            << "w_diffraction_m," << format_double(s.w_diffraction) << '\n'
            << "w_turbulence_m," << format_double(s.w_turbulence) << '\n'
            << "w_jitter_m," << format_double(s.w_jitter) << '\n'
            << "w_total_m," << format_double(s.w_total) << '\n'
            << "fried_length_m," << format_double(s.fried_length) << '\n'
            << "turbulence_moment," << format_double(s.moment) << '\n'
            << "tau_atmosphere," << format_double(s.tau_atmosphere) << '\n'
            << "tau_transmitter," << format_double(s.tau_transmitter) << '\n'
            << "tau_pointing," << format_double(s.tau_pointing) << '\n'
            << "tau_total," << format_double(s.tau_total) << '\n'
            << "strehl_ao," << format_double(s.strehl_ao) << '\n'
            << "strehl_thermal," << format_double(s.strehl_thermal) << '\n'
            << "strehl_total," << format_double(s.strehl_total) << '\n'
            << "p_recv_w," << format_double(chain.p_recv) << '\n';
        return out.str();
    }
    return dump({{"schema_version", kSchemaVersion},
                 {"kind", "chain"},
                 {"scenario", spec.name},
                 {"attack", to_string(spec.attack)},
                 {"p_ini_w", p_ini},
                 {"state",
                  {{"range_m", s.range},
                   {"w0_m", s.w0},
                   {"w_diffraction_m", s.w_diffraction},
                   {"w_turbulence_m", s.w_turbulence},
                   {"w_jitter_m", s.w_jitter},
                   {"w_total_m", s.w_total},
                   {"fried_length_m", s.fried_length},
                   {"turbulence_moment", s.moment},
                   {"tau_atmosphere", s.tau_atmosphere},
                   {"tau_transmitter", s.tau_transmitter},
                   {"tau_pointing", s.tau_pointing},
                   {"tau_total", s.tau_total},
                   {"strehl_ao", s.strehl_ao},
                   {"strehl_thermal", s.strehl_thermal},
                   {"strehl_total", s.strehl_total}}},
                 {"p_recv_w", chain.p_recv}});
}

std::string emit_calibration(const CalibrationResult& result, EmitFormat format) {
    if (format == EmitFormat::csv) {
        std::ostringstream out;
        out << "wavelength_m,t0,residual,altitude_m,zenith_rad,target_ratio,achieved_ratio\n";
        for (const auto& a : result.achieved) {
            out << format_double(result.wavelength) << ',' << format_double(result.t0) << ','
                << format_double(result.residual) << ',' << format_double(a.target.altitude)
                << ',' << format_double(a.target.zenith) << ','
                << format_double(a.target.ratio) << ',' << format_double(a.achieved) << '\n';
        }
        return out.str();
    }
    ordered_json achieved = ordered_json::array();
    for (const auto& a : result.achieved) {
        achieved.push_back({{"altitude_m", a.target.altitude},
                            {"zenith_rad", a.target.zenith},
                            {"target_ratio", a.target.ratio},
                            {"achieved_ratio", a.achieved}});
    }
    return dump({{"schema_version", kSchemaVersion},
                 {"kind", "calibration"},
                 {"wavelength_m", result.wavelength},
                 {"t0", result.t0},
                 {"residual", result.residual},
                 {"constraints", achieved}});
}

std::string emit_fov_table(const std::vector<double>& angles_rad,
                           const std::vector<double>& distances_m, EmitFormat format) {
    if (format == EmitFormat::csv) {
        std::ostringstream out;
        out << "fov_angle_rad,distance_m,diameter_m\n";
        for (double angle : angles_rad)
            for (double distance : distances_m)
                out << format_double(angle) << ',' << format_double(distance) << ','
                    << format_double(fov_diameter(angle, distance)) << '\n';
        return out.str();
    }
    ordered_json cells = ordered_json::array();
    for (double angle : angles_rad)
        for (double distance : distances_m)
            cells.push_back({{"fov_angle_rad", angle},
                             {"distance_m", distance},
                             {"diameter_m", fov_diameter(angle, distance)}});
    return dump({{"schema_version", kSchemaVersion}, {"kind", "fov_table"},
                 {"cells", cells}});
}

std::string emit_footprint(const ScenarioSpec& spec, double p_ini,
                           const FootprintResult& footprint, EmitFormat format) {
    if (format == EmitFormat::csv) {
        std::ostringstream out;
        out << "scenario,p_ini_w,radius_m,saturated\n";
        out << csv_field(spec.name) << ',' << format_double(p_ini) << ','
            << format_double(footprint.radius) << ','
            << (footprint.saturated ? "true" : "false") << '\n';
        return out.str();
    }
    return dump({{"schema_version", kSchemaVersion},
                 {"kind", "footprint"},
                 {"scenario", spec.name},
                 {"p_ini_w", p_ini},
                 {"radius_m", footprint.radius},
                 {"saturated", footprint.saturated}});
}

std::string emit_threshold(const ScenarioSpec& spec, const std::string& effect,
                           BandEdge edge, const std::optional<double>& power,
                           EmitFormat format) {
    if (format == EmitFormat::csv) {
        std::ostringstream out;
        out << "scenario,attack,effect,band_edge,threshold_p_ini_w\n";
        out << csv_field(spec.name) << ',' << to_string(spec.attack) << ','
            << csv_field(effect) << ','
            << edge_name(edge) << ',' << (power ? format_double(*power) : "none") << '\n';
        return out.str();
    }
    return dump({{"schema_version", kSchemaVersion},
                 {"kind", "threshold"},
                 {"scenario", spec.name},
                 {"attack", to_string(spec.attack)},
                 {"effect", effect},
                 {"band_edge", edge_name(edge)},
                 {"threshold_p_ini_w", power ? ordered_json(*power) : ordered_json(nullptr)}});
}

} // namespace qdos
