/*
* Copyright (C) 2026 coopsim developers
*
* Licensed under the Apache License, Version 2.0 (the "License");
* you may not use this file except in compliance with the License.
* You may obtain a copy of the License at
*
*     http://www.apache.org/licenses/LICENSE-2.0
*
* Unless required by applicable law or agreed to in writing, software
* distributed under the License is distributed on an "AS IS" BASIS,
* WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
* See the License for the specific language governing permissions and
* limitations under the License.
*/
#include "coopsim/report_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace coopsim {

namespace {

constexpr const char* kRunCsvHeader = "term,mean_complement,mean_similar,alive_complement,alive_similar";
constexpr const char* kSweepCsvHeader = "alpha,beta,replications,win_rate,degenerate_runs";

void append_row(std::string& out, const TermReport& term)
{
    out += std::to_string(term.term);
    out += ',';
    out += format_double(term.mean_complement);
    out += ',';
    out += format_double(term.mean_similar);
    out += ',';
    out += std::to_string(term.alive_complement);
    out += ',';
    out += std::to_string(term.alive_similar);
    out += '\n';
}

double parse_double_field(const std::string& field, const char* what)
{
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc{} || ptr != field.data() + field.size()) {
        throw std::invalid_argument(std::string("sweep csv: bad ") + what + " value '" + field + "'");
    }
    return value;
}

int parse_int_field(const std::string& field, const char* what)
{
    int value = 0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc{} || ptr != field.data() + field.size()) {
        throw std::invalid_argument(std::string("sweep csv: bad ") + what + " value '" + field + "'");
    }
    return value;
}

void write_file(const std::filesystem::path& path, const std::string& content)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw std::runtime_error("cannot open for writing: " + path.string());
    }
    out << content;
    if (!out) {
        throw std::runtime_error("write failed: " + path.string());
    }
}

} // namespace

std::string format_double(double value)
{
    char buffer[32];
    const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
    if (ec != std::errc{}) {
        throw std::runtime_error("format_double: conversion failed");
    }
    return std::string(buffer, ptr);
}

std::string winner_name(Winner winner)
{
    switch (winner) {
    case Winner::Complement:
        return "complement";
    case Winner::Similar:
        return "similar";
    case Winner::Tie:
        return "tie";
    }
    return "tie";
}

std::string run_csv(const RunReport& report)
{
    std::string out = kRunCsvHeader;
    out += '\n';
    append_row(out, report.initial);
    for (const TermReport& term : report.terms) {
        append_row(out, term);
    }
    return out;
}

std::string sweep_csv(const SweepReport& report)
{
    std::string out = kSweepCsvHeader;
    out += '\n';
    for (const SweepCell& cell : report.cells) {
        out += format_double(cell.alpha);
        out += ',';
        out += format_double(cell.beta);
        out += ',';
        out += std::to_string(cell.replications);
        out += ',';
        out += format_double(cell.win_rate());
        out += ',';
        out += std::to_string(cell.degenerate_runs);
        out += '\n';
    }
    return out;
}

nlohmann::json run_json(const RunReport& report)
{
    auto term_to_json = [](const TermReport& term) {
        return nlohmann::json{{"term", term.term},
                              {"mean_complement", term.mean_complement},
                              {"mean_similar", term.mean_similar},
                              {"alive_complement", term.alive_complement},
                              {"alive_similar", term.alive_similar},
                              {"group_size_counts", term.group_size_counts},
                              {"edges_added", term.edges_added}};
    };

    nlohmann::json j;
    j["config"] = config_to_json(report.config);
    j["initial"] = nlohmann::json{{"term", 0},
                                  {"mean_complement", report.initial.mean_complement},
                                  {"mean_similar", report.initial.mean_similar},
                                  {"alive_complement", report.initial.alive_complement},
                                  {"alive_similar", report.initial.alive_similar}};
    j["terms"] = nlohmann::json::array();
    for (const TermReport& term : report.terms) {
        j["terms"].push_back(term_to_json(term));
    }
    j["final_winner"] = winner_name(report.final_winner);
    if (report.degenerate()) {
        j["early_stop"] = nlohmann::json{{"term", report.early_stop_term}, {"reason", report.early_stop}};
    }
    else {
        j["early_stop"] = nullptr;
    }
    return j;
}

nlohmann::json sweep_json(const SweepReport& report)
{
    nlohmann::json j;
    j["spec"] = nlohmann::json{{"alphas", report.spec.alphas},
                               {"betas", report.spec.betas},
                               {"replications", report.spec.replications},
                               {"master_seed", report.spec.master_seed},
                               {"base", config_to_json(report.spec.base)}};
    j["cells"] = nlohmann::json::array();
    for (const SweepCell& cell : report.cells) {
        j["cells"].push_back(nlohmann::json{{"alpha", cell.alpha},
                                            {"beta", cell.beta},
                                            {"replications", cell.replications},
                                            {"complement_wins", cell.complement_wins},
                                            {"win_rate", cell.win_rate()},
                                            {"degenerate_runs", cell.degenerate_runs}});
    }
    return j;
}

std::vector<SweepCell> parse_sweep_csv(const std::string& csv)
{
    std::istringstream in(csv);
    std::string line;
    if (!std::getline(in, line) || line != kSweepCsvHeader) {
        throw std::invalid_argument("sweep csv: missing or unexpected header");
    }
    std::vector<SweepCell> cells;
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        std::istringstream row(line);
        std::string field;
        std::vector<std::string> fields;
        while (std::getline(row, field, ',')) {
            fields.push_back(field);
        }
        if (fields.size() != 5) {
            throw std::invalid_argument("sweep csv: expected 5 fields, got row '" + line + "'");
        }
        SweepCell cell;
        cell.alpha = parse_double_field(fields[0], "alpha");
        cell.beta = parse_double_field(fields[1], "beta");
        cell.replications = parse_int_field(fields[2], "replications");
        const double win_rate = parse_double_field(fields[3], "win_rate");
        cell.degenerate_runs = parse_int_field(fields[4], "degenerate_runs");
        cell.complement_wins = static_cast<int>(std::lround(win_rate * cell.replications));
        cells.push_back(cell);
    }
    return cells;
}

std::vector<std::filesystem::path> write_outputs(const RunReport& report, const std::filesystem::path& directory)
{
    std::filesystem::create_directories(directory);
    const std::filesystem::path csv_path = directory / "run.csv";
    const std::filesystem::path json_path = directory / "run.json";
    write_file(csv_path, run_csv(report));
    write_file(json_path, run_json(report).dump(2) + "\n");
    return {csv_path, json_path};
}

std::vector<std::filesystem::path> write_outputs(const SweepReport& report, const std::filesystem::path& directory)
{
    report.spec.validate(); // an empty grid is rejected before any file is touched
    std::filesystem::create_directories(directory);
    const std::filesystem::path csv_path = directory / "sweep.csv";
    const std::filesystem::path json_path = directory / "sweep.json";
    write_file(csv_path, sweep_csv(report));
    write_file(json_path, sweep_json(report).dump(2) + "\n");
    return {csv_path, json_path};
}

} // namespace coopsim
