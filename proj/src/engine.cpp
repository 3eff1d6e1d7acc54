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
#include "coopsim/engine.hpp"

#include <cassert>
#include <numeric>
#include <stdexcept>

#include "coopsim/economy.hpp"
#include "coopsim/formation.hpp"
#include "coopsim/friendship.hpp"

namespace coopsim {

namespace {

void fill_class_metrics(const Population& population, TermReport& report)
{
    double sum_complement = 0.0;
    double sum_similar = 0.0;
    int alive_complement = 0;
    int alive_similar = 0;
    for (const Agent& a : population.agents) {
        if (!a.alive) {
            continue;
        }
        if (a.strategy == Strategy::ComplementPreferring) {
            sum_complement += a.savings;
            ++alive_complement;
        }
        else {
            sum_similar += a.savings;
            ++alive_similar;
        }
    }
    report.alive_complement = alive_complement;
    report.alive_similar = alive_similar;
    report.mean_complement = alive_complement > 0 ? sum_complement / alive_complement : 0.0;
    report.mean_similar = alive_similar > 0 ? sum_similar / alive_similar : 0.0;
}

std::vector<int> draw_initiators(const Population& population, int k, RandomSource& rng)
{
    std::vector<int> alive_ids;
    alive_ids.reserve(population.agents.size());
    for (const Agent& a : population.agents) {
        if (a.alive) {
            alive_ids.push_back(a.id);
        }
    }
    const int count = std::min<int>(k, static_cast<int>(alive_ids.size()));
    for (int i = 0; i < count; ++i) {
        const auto j = static_cast<std::size_t>(i) + rng.below(alive_ids.size() - static_cast<std::size_t>(i));
        std::swap(alive_ids[static_cast<std::size_t>(i)], alive_ids[j]);
    }
    alive_ids.resize(static_cast<std::size_t>(count));
    return alive_ids;
}

} // namespace

Winner decide_winner(int alive_complement, int alive_similar, double mean_complement, double mean_similar)
{
    if (alive_complement > 0 && alive_similar == 0) {
        return Winner::Complement;
    }
    if (alive_similar > 0 && alive_complement == 0) {
        return Winner::Similar;
    }
    if (alive_complement == 0 && alive_similar == 0) {
        return Winner::Tie;
    }
    if (mean_complement > mean_similar) {
        return Winner::Complement;
    }
    if (mean_similar > mean_complement) {
        return Winner::Similar;
    }
    return Winner::Tie;
}

SimState init_sim(const SimConfig& config)
{
    config.validate();
    RandomSource rng(config.seed);
    Population population = init_population(config, rng);
    return SimState{std::move(population), std::move(rng), 0};
}

TermReport run_term(SimState& state, const SimConfig& config)
{
    Population& population = state.population;
    if (population.alive_count() < 2) {
        throw std::logic_error("run_term: needs at least 2 living agents");
    }
    ++state.term;

    // t = 0
    consume_and_cull(population, config.consumption);
    const std::vector<int> initiators = draw_initiators(population, config.k, state.rng);

    // t = 1..T
    std::vector<Group> groups =
        run_formation_phase(population, initiators, config.formation_ticks, config.gamma0, state.rng, state.term);

    // t = T+1 and T+2
    settle_term(groups, population, config.c0, config.max_group_size(), state.rng);

    // t = T+3
    const int edges_added = update_friendships(groups, population);

    TermReport report;
    report.term = state.term;
    report.edges_added = edges_added;
    report.group_size_counts.assign(static_cast<std::size_t>(config.max_group_size()), 0);
    for (const Group& group : groups) {
        ++report.group_size_counts[static_cast<std::size_t>(group.size() - 1)];
    }
    fill_class_metrics(population, report);
    return report; // groups go out of scope here; nobody keeps membership state
}

RunReport run_simulation(const SimConfig& config)
{
    SimState state = init_sim(config);

    RunReport report;
    report.config = config;
    report.initial.term = 0;
    fill_class_metrics(state.population, report.initial);

    report.terms.reserve(static_cast<std::size_t>(config.max_term));
    for (int term = 1; term <= config.max_term; ++term) {
        const TermReport& last = report.last();
        if (last.alive_complement + last.alive_similar < 2) {
            report.early_stop = "fewer than 2 agents alive";
            report.early_stop_term = state.term;
            break;
        }
        if (last.alive_complement == 0 || last.alive_similar == 0) {
            report.early_stop = "strategy class extinct";
            report.early_stop_term = state.term;
            break;
        }
        report.terms.push_back(run_term(state, config));
    }

    const TermReport& final_term = report.last();
    report.final_winner = decide_winner(final_term.alive_complement, final_term.alive_similar,
                                        final_term.mean_complement, final_term.mean_similar);
    return report;
}

} // namespace coopsim
