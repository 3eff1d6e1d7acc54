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
#include "coopsim/economy.hpp"

#include <cassert>
#include <cmath>
#include <stdexcept>

namespace coopsim {

double field_capacity(int group_size, double c0, double noise)
{
    return std::max(static_cast<double>(group_size) * c0 - std::abs(noise), 0.0);
}

double gross_harvest(double c0, bool reliable, double noise)
{
    return reliable ? c0 : std::max(c0 - std::abs(noise), 0.0);
}

double assign_field(int group_size, double c0, RandomSource& rng)
{
    if (group_size < 2) {
        throw std::invalid_argument("assign_field: fields are only assigned to groups of size >= 2");
    }
    const double noise = rng.normal(0.0, std::sqrt(static_cast<double>(group_size)));
    return field_capacity(group_size, c0, noise);
}

HarvestOutcome harvest_agent(const Agent& agent, double c0, RandomSource& rng)
{
    const bool reliable = rng.bernoulli(agent.behavior(kReliability));
    const double noise = reliable ? 0.0 : rng.normal(0.0, std::sqrt(2.0));
    const double gross = gross_harvest(c0, reliable, noise);
    return HarvestOutcome{agent.id, gross, gross * agent.behavior(kEfficiency)};
}

std::vector<double> share_awards(const Group& group, const std::vector<HarvestOutcome>& outcomes, int g_max)
{
    assert(outcomes.size() == group.member_ids.size());
    double gross_total = 0.0;
    for (const HarvestOutcome& o : outcomes) {
        gross_total += o.gross;
    }
    std::vector<double> awards(outcomes.size(), 0.0);
    if (gross_total <= 0.0) {
        return awards;
    }
    const double bonus = 1.0 + static_cast<double>(group.size()) / static_cast<double>(g_max);
    for (std::size_t i = 0; i < outcomes.size(); ++i) {
        awards[i] = outcomes[i].net * (outcomes[i].gross / gross_total) * bonus;
    }
    return awards;
}

std::vector<double> apply_punishment(const Group& group, const std::vector<HarvestOutcome>& outcomes,
                                     double field_cap, int g_max)
{
    assert(outcomes.size() == group.member_ids.size());
    double gross_total = 0.0;
    double net_total = 0.0;
    for (const HarvestOutcome& o : outcomes) {
        gross_total += o.gross;
        net_total += o.net;
    }
    if (gross_total >= field_cap) {
        return std::vector<double>(outcomes.size(), 0.0);
    }
    const double bonus = 1.0 + static_cast<double>(group.size()) / static_cast<double>(g_max);
    const double per_member =
        std::max((field_cap - net_total * bonus) / static_cast<double>(group.size()), 0.0);
    return std::vector<double>(outcomes.size(), per_member);
}

std::vector<Settlement> settle_term(const std::vector<Group>& groups, Population& population, double c0, int g_max,
                                    RandomSource& rng)
{
    std::vector<Settlement> settlements;
    std::vector<HarvestOutcome> outcomes;
    for (const Group& group : groups) {
        if (group.size() < 2) {
            continue;
        }
        const double field = assign_field(group.size(), c0, rng);
        outcomes.clear();
        for (int id : group.member_ids) {
            outcomes.push_back(harvest_agent(population.agent(id), c0, rng));
        }
        const std::vector<double> awards = share_awards(group, outcomes, g_max);
        const std::vector<double> penalties = apply_punishment(group, outcomes, field, g_max);
        for (std::size_t i = 0; i < outcomes.size(); ++i) {
            population.agent(outcomes[i].agent_id).savings += awards[i] - penalties[i];
            settlements.push_back(Settlement{outcomes[i].agent_id, awards[i], penalties[i]});
        }
    }
    return settlements;
}

} // namespace coopsim
