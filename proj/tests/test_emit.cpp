#include <doctest.h>

#include <charconv>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "qdos/emit.hpp"

using namespace qdos;
using nlohmann::json;

namespace {

const Config kConfig = default_config();

SweepResult single_point_sweep() {
    ScenarioOverrides overrides;
    overrides.attack = AttackType::out_of_fov;
    const auto spec = build_scenario("Ground-LEO", overrides, kConfig);
    return run_sweep(spec, {1000.0}, kConfig);
}

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);)
        lines.push_back(line);
    return lines;
}

double parse_double(const std::string& text) {
    double value = 0.0;
    std::from_chars(text.data(), text.data() + text.size(), value);
    return value;
}

} // namespace

TEST_CASE("format_double round trips") {
    for (double value : {1.0, 0.1, 2.6356367686356773e-13, 1e-15, 35000.0, 0.9222818}) {
        const std::string text = format_double(value);
        CHECK(parse_double(text) == value);
    }
}

TEST_CASE("single-point sweep emits a two-line CSV") {
    const auto result = single_point_sweep();
    const auto lines = split_lines(emit_sweep(result, EmitFormat::csv));
    REQUIRE(lines.size() == 2);
    CHECK(lines[0] == "p_ini_w,p_recv_low_w,p_recv_w,p_recv_high_w,max_effect");
    CHECK(lines[1].substr(0, 5) == "1000,");
}

TEST_CASE("CSV and JSON emissions carry identical numeric values") {
    const auto result = single_point_sweep();
    const auto csv_lines = split_lines(emit_sweep(result, EmitFormat::csv));
    const json doc = json::parse(emit_sweep(result, EmitFormat::json));

    REQUIRE(doc["points"].size() == 1);
    const auto& point = doc["points"][0];

    std::istringstream row(csv_lines[1]);
    std::string field;
    std::getline(row, field, ',');
    CHECK(parse_double(field) == point["p_ini_w"].get<double>());
    std::getline(row, field, ',');
    CHECK(parse_double(field) == point["p_recv_low_w"].get<double>());
    std::getline(row, field, ',');
    CHECK(parse_double(field) == point["p_recv_w"].get<double>());
    std::getline(row, field, ',');
    CHECK(parse_double(field) == point["p_recv_high_w"].get<double>());
}

TEST_CASE("JSON output re-parsed equals the in-memory record") {
    const auto result = single_point_sweep();
    const json doc = json::parse(emit_sweep(result, EmitFormat::json));
    CHECK(doc["schema_version"] == "1");
    CHECK(doc["kind"] == "sweep");
    CHECK(doc["scenario"] == result.scenario);
    CHECK(doc["attack"] == to_string(result.attack));
    CHECK(doc["points"][0]["p_ini_w"].get<double>() == result.points[0].p_ini);
    CHECK(doc["points"][0]["p_recv_w"].get<double>() == result.points[0].p_nominal);
    CHECK(doc["points"][0]["p_recv_low_w"].get<double>() == result.points[0].p_low);
    CHECK(doc["points"][0]["p_recv_high_w"].get<double>() == result.points[0].p_high);
}

TEST_CASE("risk table CSV carries the published row values") {
    const auto rows = scenario_risk_table(default_risk_assessment());
    const std::string csv = emit_risk(rows, EmitFormat::csv);
    CHECK(csv.find("Ground-LEO,out_of_fov,Probable,Marginal,Serious") != std::string::npos);
    CHECK(csv.find("Ground-LEO-Ground,in_fov,No,No,None") != std::string::npos);
    CHECK(csv.find("LEO-GEO,in_fov,Improbable,Marginal,Low") != std::string::npos);

    const json doc = json::parse(emit_risk(rows, EmitFormat::json));
    REQUIRE(doc["rows"].size() == 18);
    CHECK(doc["rows"][0]["likelihood"].is_null());
}

TEST_CASE("emission is deterministic") {
    const auto result = single_point_sweep();
    CHECK(emit_sweep(result, EmitFormat::csv) == emit_sweep(result, EmitFormat::csv));
    CHECK(emit_sweep(result, EmitFormat::json) == emit_sweep(result, EmitFormat::json));

    const Receiver receiver{0.6, 1.0, 1e-5};
    const auto report = classify_effects(2.5, receiver, kConfig.ladder);
    CHECK(emit_effects(report, EmitFormat::json) == emit_effects(report, EmitFormat::json));

    const json doc = json::parse(emit_effects(report, EmitFormat::json));
    CHECK(doc["max_effect"] == report.max_severity);
    CHECK(doc["input_power_w"].get<double>() == report.input_power);
    CHECK(doc["triggered"].size() == report.triggered.size());
}

TEST_CASE("effects CSV lists one triggered rung per row") {
    const Receiver receiver{0.6, 1.0, 1e-5};
    const auto report = classify_effects(2.5, receiver, kConfig.ladder);
    const auto lines = split_lines(emit_effects(report, EmitFormat::csv));
    REQUIRE(lines.size() == 1 + report.triggered.size());
    CHECK(lines[0] == "input_power_w,equivalent_density_w_cm2,effect,certainty");
}

TEST_CASE("CSV fields containing commas are quoted") {
    const Receiver receiver{0.6, 1.0, 1e-5};
    const auto report = classify_effects(2.5, receiver, kConfig.ladder);
    const std::string csv = emit_effects(report, EmitFormat::csv);
    // rung names such as the structural-damage row contain a comma
    CHECK(csv.find("\"APD structural damage, complete insensitivity\"") !=
          std::string::npos);

    // a sweep's max_effect column gets the same treatment
    const auto sweep = single_point_sweep();
    const auto lines = split_lines(emit_sweep(sweep, EmitFormat::csv));
    const auto commas = std::count(lines[1].begin(), lines[1].end(), ',');
    const bool quoted = lines[1].find('"') != std::string::npos;
    CHECK((commas == 4 || quoted));
}
