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
#include "coopsim/config.hpp"

#include <fstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace coopsim {

void SimConfig::validate() const
{
    std::string errors;
    auto complain = [&errors](const std::string& message) {
        if (!errors.empty()) {
            errors += "; ";
        }
        errors += message;
    };

    if (n < 2) {
        complain("n must be at least 2");
    }
    if (k < 1) {
        complain("k must be at least 1");
    }
    if (k >= n) {
        complain("k must be smaller than n");
    }
    if (formation_ticks < 1) {
        complain("T must be at least 1");
    }
    if (!(gamma0 > 0.0)) {
        complain("gamma0 must be positive");
    }
    if (c0 < 0.0) {
        complain("c0 must be nonnegative");
    }
    if (s0 < 0.0) {
        complain("s0 must be nonnegative");
    }
    if (consumption < 0.0) {
        complain("consumption must be nonnegative");
    }
    if (!(alpha >= 0.0 && alpha <= 1.0)) {
        complain("alpha must be in [0,1]");
    }
    if (!(beta >= 0.0 && beta <= 1.0)) {
        complain("beta must be in [0,1]");
    }
    if (max_term < 0) {
        complain("maxTerm must be nonnegative");
    }
    if (!(d0 >= 0.0 && d0 < static_cast<double>(n))) {
        complain("d0 must satisfy 0 <= d0 < n");
    }
    if (!errors.empty()) {
        throw std::invalid_argument("invalid config: " + errors);
    }
}

namespace {

template <typename T>
void read_field(const nlohmann::json& j, const char* key, T& out)
{
    if (const auto it = j.find(key); it != j.end()) {
        try {
            out = it->get<T>();
        }
        catch (const nlohmann::json::exception&) {
            throw std::invalid_argument(std::string("config field '") + key + "' has the wrong type");
        }
    }
}

} // namespace

SimConfig config_from_json(const nlohmann::json& j, const SimConfig& base)
{
    if (!j.is_object()) {
        throw std::invalid_argument("config must be a JSON object");
    }
    static const char* const known[] = {"n",     "k",    "T",       "gamma0", "c0",   "s0",
                                        "consumption", "alpha", "beta", "maxTerm", "d0",   "seed"};
    for (const auto& [key, value] : j.items()) {
        bool recognized = false;
        for (const char* name : known) {
            if (key == name) {
                recognized = true;
                break;
            }
        }
        if (!recognized) {
            throw std::invalid_argument("unknown config field '" + key + "'");
        }
    }

    SimConfig config = base;
    read_field(j, "n", config.n);
    read_field(j, "k", config.k);
    read_field(j, "T", config.formation_ticks);
    read_field(j, "gamma0", config.gamma0);
    read_field(j, "c0", config.c0);
    read_field(j, "s0", config.s0);
    read_field(j, "consumption", config.consumption);
    read_field(j, "alpha", config.alpha);
    read_field(j, "beta", config.beta);
    read_field(j, "maxTerm", config.max_term);
    read_field(j, "d0", config.d0);
    read_field(j, "seed", config.seed);
    return config;
}

nlohmann::json config_to_json(const SimConfig& config)
{
    return nlohmann::json{{"n", config.n},
                          {"k", config.k},
                          {"T", config.formation_ticks},
                          {"gamma0", config.gamma0},
                          {"c0", config.c0},
                          {"s0", config.s0},
                          {"consumption", config.consumption},
                          {"alpha", config.alpha},
                          {"beta", config.beta},
                          {"maxTerm", config.max_term},
                          {"d0", config.d0},
                          {"seed", config.seed}};
}

SimConfig load_config_file(const std::filesystem::path& path, const SimConfig& base)
{
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open config file: " + path.string());
    }
    nlohmann::json j;
    try {
        in >> j;
    }
    catch (const nlohmann::json::exception& e) {
        throw std::runtime_error("cannot parse config file " + path.string() + ": " + e.what());
    }
    return config_from_json(j, base);
}

} // namespace coopsim
