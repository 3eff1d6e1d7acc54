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
#ifndef COOPSIM_ECONOMY_HPP
#define COOPSIM_ECONOMY_HPP

#include <vector>

#include "coopsim/formation.hpp"
#include "coopsim/model.hpp"
#include "coopsim/rng.hpp"

namespace coopsim {

struct HarvestOutcome {
    int agent_id = -1;
    double gross = 0.0; ///< amount collected, in [0, c0]
    double net = 0.0;   ///< gross * efficiency
};

struct Settlement {
    int agent_id = -1;
    double award = 0.0;
    double penalty = 0.0;
};

/// Field capacity from a given noise value: max(size * c0 - |noise|, 0).
double field_capacity(int group_size, double c0, double noise);

/// Gross harvest from a given noise value: full capacity when reliable,
/// otherwise max(c0 - |noise|, 0).
double gross_harvest(double c0, bool reliable, double noise);

/// Field for a group of size >= 2: slightly below the group's total capacity,
/// size * c0 - |x| with x ~ Normal(0, variance = size).
double assign_field(int group_size, double c0, RandomSource& rng);

/// One member's harvest: the full capacity c0 with probability b.r, otherwise
/// c0 - |y| with y ~ Normal(0, variance = 2); net = gross * b.e. One
/// bernoulli draw, plus the normal draw on the unreliable branch.
HarvestOutcome harvest_agent(const Agent& agent, double c0, RandomSource& rng);

/// Award per member, aligned with outcomes: net * (gross / gross_total) *
/// (1 + size / g_max). All zero when the group harvested nothing.
std::vector<double> share_awards(const Group& group, const std::vector<HarvestOutcome>& outcomes, int g_max);

/// Penalty per member. Zero when the gross total covers the field; otherwise
/// every member owes the same share max((field - net_total * (1 + size /
/// g_max)) / size, 0). The shortfall test uses gross totals while the
/// magnitude uses net totals; that asymmetry is part of the model, and the
/// clamp keeps the penalty channel from paying out.
std::vector<double> apply_punishment(const Group& group, const std::vector<HarvestOutcome>& outcomes,
                                     double field_cap, int g_max);

/// Settles every group of size >= 2 in creation order: field assignment,
/// member harvests in join order, awards and penalties applied to savings.
/// Singleton groups harvest nothing and receive nothing. Returns one
/// settlement per member of each settled group.
std::vector<Settlement> settle_term(const std::vector<Group>& groups, Population& population, double c0, int g_max,
                                    RandomSource& rng);

} // namespace coopsim

#endif // COOPSIM_ECONOMY_HPP
