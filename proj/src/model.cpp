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
#include "coopsim/model.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>

namespace coopsim {

namespace {

bool contains_sorted(const std::vector<int>& sorted, int value)
{
    return std::binary_search(sorted.begin(), sorted.end(), value);
}

void insert_sorted(std::vector<int>& sorted, int value)
{
    sorted.insert(std::upper_bound(sorted.begin(), sorted.end(), value), value);
}

void erase_sorted(std::vector<int>& sorted, int value)
{
    const auto it = std::lower_bound(sorted.begin(), sorted.end(), value);
    if (it != sorted.end() && *it == value) {
        sorted.erase(it);
    }
}

} // namespace

bool FriendNetwork::has_edge(int u, int v) const
{
    if (u == v) {
        return false;
    }
    return contains_sorted(adjacency_[static_cast<std::size_t>(u)], v);
}

bool FriendNetwork::add_edge(int u, int v)
{
    if (u == v) {
        throw std::invalid_argument("FriendNetwork: self-loops are not allowed");
    }
    if (has_edge(u, v)) {
        return false;
    }
    insert_sorted(adjacency_[static_cast<std::size_t>(u)], v);
    insert_sorted(adjacency_[static_cast<std::size_t>(v)], u);
    ++edges_;
    return true;
}

void FriendNetwork::remove_vertex(int v)
{
    auto& own = adjacency_[static_cast<std::size_t>(v)];
    for (int u : own) {
        erase_sorted(adjacency_[static_cast<std::size_t>(u)], v);
    }
    edges_ -= own.size();
    own.clear();
}

int Population::alive_count() const
{
    return static_cast<int>(std::count_if(agents.begin(), agents.end(), [](const Agent& a) { return a.alive; }));
}

int Population::alive_count(Strategy strategy) const
{
    return static_cast<int>(std::count_if(agents.begin(), agents.end(),
                                          [strategy](const Agent& a) { return a.alive && a.strategy == strategy; }));
}

PreferenceVector build_preference_vector(const BehaviorVector& b, Strategy strategy, double alpha)
{
    if (!(alpha >= 0.0 && alpha <= 1.0)) {
        throw std::invalid_argument("build_preference_vector: alpha must be in [0,1]");
    }
    const double sum = b(kReliability) + b(kEfficiency);
    if (sum <= 0.0) {
        throw std::invalid_argument("build_preference_vector: behavior vector must be nonzero");
    }

    // Similar-preferring keeps the agent's own proportions, complement-
    // preferring mirrors them.
    const double own_r = b(kReliability) / sum;
    const double base_r = strategy == Strategy::ComplementPreferring ? 1.0 - own_r : own_r;
    const double base_e = 1.0 - base_r;

    // The spread moves mass from the smaller component to the larger one.
    const double delta = (1.0 - std::max(b(kReliability), b(kEfficiency))) * alpha;
    double r;
    double e;
    if (base_r > base_e) {
        r = base_r + delta;
        e = base_e - delta;
    }
    else {
        r = base_r - delta;
        e = base_e + delta;
    }
    if (r < 0.0) {
        r = 0.0;
        e = 1.0;
    }
    else if (e < 0.0) {
        e = 0.0;
        r = 1.0;
    }
    return PreferenceVector(r, e);
}

FriendNetwork init_friend_network(int n, double d0, RandomSource& rng)
{
    if (n < 0 || d0 < 0.0 || d0 >= static_cast<double>(n)) {
        throw std::invalid_argument("init_friend_network: need 0 <= d0 < n");
    }
    FriendNetwork network(n);

    const std::size_t all_pairs = static_cast<std::size_t>(n) * (static_cast<std::size_t>(n) - 1) / 2;
    std::size_t target = static_cast<std::size_t>(std::llround(static_cast<double>(n) * d0 / 2.0));
    target = std::min(target, all_pairs);
    if (target == 0) {
        return network;
    }

    // Uniform m-subset of the pair enumeration via a partial Fisher-Yates.
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(all_pairs);
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            pairs.emplace_back(u, v);
        }
    }
    for (std::size_t i = 0; i < target; ++i) {
        const std::size_t j = i + static_cast<std::size_t>(rng.below(pairs.size() - i));
        std::swap(pairs[i], pairs[j]);
        network.add_edge(pairs[i].first, pairs[i].second);
    }
    return network;
}

Population init_population(const SimConfig& config, RandomSource& rng)
{
    if (config.n < 2) {
        throw std::invalid_argument("init_population: population size must be at least 2");
    }

    Population population;
    population.agents.resize(static_cast<std::size_t>(config.n));
    for (int i = 0; i < config.n; ++i) {
        Agent& a = population.agents[static_cast<std::size_t>(i)];
        a.id = i;
        a.capacity = config.c0;
        a.savings = config.s0;
        a.alive = true;
        do {
            a.behavior = BehaviorVector(rng.uniform01(), rng.uniform01());
        } while (a.behavior.sum() <= 0.0);
    }

    // Exactly round(beta * n) complement-preferring agents, drawn uniformly.
    const int complements = static_cast<int>(std::lround(config.beta * static_cast<double>(config.n)));
    std::vector<int> ids(static_cast<std::size_t>(config.n));
    std::iota(ids.begin(), ids.end(), 0);
    for (int i = 0; i < complements; ++i) {
        const auto j = static_cast<std::size_t>(i) + rng.below(static_cast<std::uint64_t>(config.n - i));
        std::swap(ids[static_cast<std::size_t>(i)], ids[j]);
        population.agent(ids[static_cast<std::size_t>(i)]).strategy = Strategy::ComplementPreferring;
    }

    for (Agent& a : population.agents) {
        a.preference = build_preference_vector(a.behavior, a.strategy, config.alpha);
    }

    population.network = init_friend_network(config.n, config.d0, rng);
    return population;
}

std::vector<int> consume_and_cull(Population& population, double amount)
{
    assert(amount >= 0.0);
    std::vector<int> dead;
    for (Agent& a : population.agents) {
        if (!a.alive) {
            continue;
        }
        a.savings -= amount;
        if (a.savings < 0.0) {
            a.alive = false;
            population.network.remove_vertex(a.id);
            dead.push_back(a.id);
        }
    }
    return dead;
}

} // namespace coopsim
