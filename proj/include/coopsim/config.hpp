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
#ifndef COOPSIM_CONFIG_HPP
#define COOPSIM_CONFIG_HPP

#include <cstdint>
#include <filesystem>
#include <string>

#include <nlohmann/json_fwd.hpp>

namespace coopsim {

/// All constants of one simulation run. Defaults are the reference setup:
/// 200 agents, 40 initiators per term, 8 formation ticks, capacity 10,
/// initial savings 200, consumption 2 per term, choosiness base 3.
struct SimConfig {
    int n = 200;              ///< population size
    int k = 40;               ///< group initiators per term
    int formation_ticks = 8;  ///< T, offers per initiator per term
    double gamma0 = 3.0;      ///< choosiness base
    double c0 = 10.0;         ///< per-agent harvest capacity (food units)
    double s0 = 200.0;        ///< initial savings (food units)
    double consumption = 2.0; ///< food consumed per agent per term
    double alpha = 1.0;       ///< preference spread in [0,1]
    double beta = 0.5;        ///< complement-preferring fraction in [0,1]
    int max_term = 1000;      ///< terms per run (may stop early)
    double d0 = 10.0;         ///< initial mean friend-network degree
    std::uint64_t seed = 1;   ///< run seed

    /// Largest achievable group: the initiator plus one acceptance per tick.
    int max_group_size() const { return formation_ticks + 1; }

    /// Throws std::invalid_argument naming every violated field.
    void validate() const;
};

/// Strict parse of the flat config object; unknown or mistyped keys are
/// errors. Key names: n, k, T, gamma0, c0, s0, consumption, alpha, beta,
/// maxTerm, d0, seed. Missing keys keep the defaults in `base`.
SimConfig config_from_json(const nlohmann::json& j, const SimConfig& base = SimConfig{});

nlohmann::json config_to_json(const SimConfig& config);

SimConfig load_config_file(const std::filesystem::path& path, const SimConfig& base = SimConfig{});

} // namespace coopsim

#endif // COOPSIM_CONFIG_HPP
