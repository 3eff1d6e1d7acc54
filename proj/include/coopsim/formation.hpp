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
#ifndef COOPSIM_FORMATION_HPP
#define COOPSIM_FORMATION_HPP

#include <vector>

#include "coopsim/model.hpp"
#include "coopsim/rng.hpp"

namespace coopsim {

/// One initiator's group for one term. Members are listed in join order,
/// initiator first; a group never exceeds formation_ticks + 1 members.
struct Group {
    int initiator_id = -1;
    std::vector<int> member_ids;
    int term_index = 0;

    int size() const { return static_cast<int>(member_ids.size()); }
};

/// Choosiness exponent gamma0 * (T - t + group_size) / T for tick t in 1..T.
/// Strictly decreasing in t, strictly increasing in group size.
double choosiness_gamma(int t, int ticks, int group_size, double gamma0);

/// Normalized selection weights v^gamma / sum(v^gamma) over the eligible
/// agents, where v = behavior_value(initiator.preference, candidate.behavior).
/// If every weight vanishes (all v == 0 with gamma > 0) the distribution
/// falls back to uniform so a target can still be drawn.
std::vector<double> selection_probabilities(const Agent& initiator, const std::vector<int>& eligible,
                                            const Population& population, double gamma);

/// Samples one id from `eligible` with the selection_probabilities weights.
/// Consumes exactly one uniform draw. `eligible` must be nonempty.
int select_offer_target(const Agent& initiator, const std::vector<int>& eligible, const Population& population,
                        double gamma, RandomSource& rng);

/// Component-wise mean behavior over the group's current members,
/// initiator included.
BehaviorVector group_behavior_mean(const Group& group, const Population& population);

/// Receiver's valuation of the offering group plus the time-pressure term
/// ln(gamma0 * (T - t) / T). T - t is clamped below at 1 so the final tick
/// stays finite instead of hitting ln(0).
double adjusted_offer_value(const Agent& receiver, const BehaviorVector& group_mean, int t, int ticks, double gamma0);

/// The receiver's accept rule: with no history the offer is accepted;
/// otherwise accept iff adjusted > mean - 1.5 * sigma over all previous
/// offers. The new value is folded into `stats` after the decision, accepted
/// or not.
bool accept_offer(double adjusted, OfferStats& stats);

/// Runs the T-tick formation phase. Each tick the initiators act in a
/// freshly shuffled order; an initiator with at least one eligible friend
/// (alive and in no group) makes one offer, and an accepted target joins
/// immediately, leaving the eligible pool for the rest of the tick. Rejected
/// targets stay eligible for later offers. Returns one group per initiator,
/// in initiator order.
///
/// Draw order per tick: the initiator shuffle, then one selection draw per
/// offering initiator.
std::vector<Group> run_formation_phase(Population& population, const std::vector<int>& initiator_ids, int ticks,
                                       double gamma0, RandomSource& rng, int term_index = 0);

} // namespace coopsim

#endif // COOPSIM_FORMATION_HPP
