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
#include "coopsim/formation.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace coopsim {

double choosiness_gamma(int t, int ticks, int group_size, double gamma0)
{
    assert(t >= 1 && t <= ticks);
    assert(group_size >= 1);
    return gamma0 * static_cast<double>(ticks - t + group_size) / static_cast<double>(ticks);
}

std::vector<double> selection_probabilities(const Agent& initiator, const std::vector<int>& eligible,
                                            const Population& population, double gamma)
{
    assert(!eligible.empty());
    std::vector<double> weights(eligible.size());
    double total = 0.0;
    for (std::size_t i = 0; i < eligible.size(); ++i) {
        const double v = behavior_value(initiator.preference, population.agent(eligible[i]).behavior);
        weights[i] = std::pow(v, gamma);
        total += weights[i];
    }
    if (total <= 0.0) {
        // All candidate values are exactly zero; no preference signal left.
        std::fill(weights.begin(), weights.end(), 1.0 / static_cast<double>(eligible.size()));
        return weights;
    }
    for (double& w : weights) {
        w /= total;
    }
    return weights;
}

int select_offer_target(const Agent& initiator, const std::vector<int>& eligible, const Population& population,
                        double gamma, RandomSource& rng)
{
    if (eligible.empty()) {
        throw std::invalid_argument("select_offer_target: eligible list must be nonempty");
    }
    const std::vector<double> probabilities = selection_probabilities(initiator, eligible, population, gamma);
    const double u = rng.uniform01();
    double cumulative = 0.0;
    for (std::size_t i = 0; i < probabilities.size(); ++i) {
        cumulative += probabilities[i];
        if (u < cumulative) {
            return eligible[i];
        }
    }
    return eligible.back(); // u landed in the rounding gap below 1
}

BehaviorVector group_behavior_mean(const Group& group, const Population& population)
{
    assert(!group.member_ids.empty());
    BehaviorVector sum = BehaviorVector::Zero();
    for (int id : group.member_ids) {
        sum += population.agent(id).behavior;
    }
    return sum / static_cast<double>(group.member_ids.size());
}

double adjusted_offer_value(const Agent& receiver, const BehaviorVector& group_mean, int t, int ticks, double gamma0)
{
    assert(t >= 1 && t <= ticks);
    const double offer = behavior_value(receiver.preference, group_mean);
    const int remaining = std::max(ticks - t, 1);
    return offer + std::log(gamma0 * static_cast<double>(remaining) / static_cast<double>(ticks));
}

bool accept_offer(double adjusted, OfferStats& stats)
{
    // The rule compares against previous offers only, so decide first and
    // record afterwards.
    const bool accepted = stats.count == 0 || adjusted > stats.mean - 1.5 * stats.sigma();
    stats.add(adjusted);
    return accepted;
}

std::vector<Group> run_formation_phase(Population& population, const std::vector<int>& initiator_ids, int ticks,
                                       double gamma0, RandomSource& rng, int term_index)
{
    std::vector<Group> groups;
    groups.reserve(initiator_ids.size());

    // group_of[id] is the index of the group an agent belongs to, -1 if none.
    // Initiators belong to their own group from the start, which also makes
    // them ineligible as targets.
    std::vector<int> group_of(population.agents.size(), -1);
    for (int id : initiator_ids) {
        assert(population.agent(id).alive);
        assert(group_of[static_cast<std::size_t>(id)] == -1);
        group_of[static_cast<std::size_t>(id)] = static_cast<int>(groups.size());
        groups.push_back(Group{id, {id}, term_index});
    }

    std::vector<int> order(groups.size());
    std::iota(order.begin(), order.end(), 0);
    std::vector<int> eligible;

    for (int t = 1; t <= ticks; ++t) {
        rng.shuffle(order);
        for (int group_index : order) {
            Group& group = groups[static_cast<std::size_t>(group_index)];
            const Agent& initiator = population.agent(group.initiator_id);

            eligible.clear();
            for (int friend_id : population.network.neighbors(initiator.id)) {
                if (population.agent(friend_id).alive && group_of[static_cast<std::size_t>(friend_id)] == -1) {
                    eligible.push_back(friend_id);
                }
            }
            if (eligible.empty()) {
                continue;
            }

            const double gamma = choosiness_gamma(t, ticks, group.size(), gamma0);
            const int target_id = select_offer_target(initiator, eligible, population, gamma, rng);

            Agent& target = population.agent(target_id);
            const double adjusted =
                adjusted_offer_value(target, group_behavior_mean(group, population), t, ticks, gamma0);
            if (accept_offer(adjusted, target.offer_stats)) {
                group.member_ids.push_back(target_id);
                group_of[static_cast<std::size_t>(target_id)] = group_index;
            }
        }
    }
    return groups;
}

} // namespace coopsim
