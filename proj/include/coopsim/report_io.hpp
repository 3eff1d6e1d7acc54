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
#ifndef COOPSIM_REPORT_IO_HPP
#define COOPSIM_REPORT_IO_HPP

#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "coopsim/engine.hpp"
#include "coopsim/sweep.hpp"

namespace coopsim {

/// Shortest representation that parses back to the same double.
std::string format_double(double value);

std::string winner_name(Winner winner);

/// Time series `term,mean_complement,mean_similar,alive_complement,
/// alive_similar`, one row for the initial state (term 0) and one per term.
std::string run_csv(const RunReport& report);

/// Matrix `alpha,beta,replications,win_rate,degenerate_runs`, one row per
/// cell in report order.
std::string sweep_csv(const SweepReport& report);

nlohmann::json run_json(const RunReport& report);
nlohmann::json sweep_json(const SweepReport& report);

/// Inverse of sweep_csv, for consumers of emitted matrices. Rejects
/// malformed headers or rows.
std::vector<SweepCell> parse_sweep_csv(const std::string& csv);

/// Writes run.csv and run.json (or sweep.csv and sweep.json) under
/// `directory`, creating it if needed. Identical reports produce identical
/// bytes. Returns the written paths; I/O failures carry the path.
std::vector<std::filesystem::path> write_outputs(const RunReport& report, const std::filesystem::path& directory);
std::vector<std::filesystem::path> write_outputs(const SweepReport& report, const std::filesystem::path& directory);

} // namespace coopsim

#endif // COOPSIM_REPORT_IO_HPP
