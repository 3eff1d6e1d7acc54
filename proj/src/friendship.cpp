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
#include "coopsim/friendship.hpp"

#include <cassert>

namespace coopsim {

std::vector<FriendCandidate> candidate_pairs(const Group& group, const FriendNetwork& network)
{
    std::vector<FriendCandidate> pairs;
    const std::vector<int>& members = group.member_ids;
    for (std::size_t i = 0; i < members.size(); ++i) {
        for (std::size_t j = i + 1; j < members.size(); ++j) {
            if (!network.has_edge(members[i], members[j])) {
                pairs.push_back(FriendCandidate{members[i], members[j]});
            }
        }
    }
    return pairs;
}

bool evaluate_candidate(const Agent& self, const Agent& candidate, const FriendNetwork& network,
                        const Population& population)
{
    assert(self.alive && candidate.alive);
    const std::vector<int>& friends = network.neighbors(self.id);
    if (friends.empty()) {
        return true;
    }
    double mean = 0.0;
    for (int id : friends) {
        mean += behavior_value(self.preference, population.agent(id).behavior);
    }
    mean /= static_cast<double>(friends.size());
    double variance = 0.0;
    for (int id : friends) {
        const double d = behavior_value(self.preference, population.agent(id).behavior) - mean;
        variance += d * d;
    }
    variance /= static_cast<double>(friends.size());

    const double candidate_value = behavior_value(self.preference, candidate.behavior);
    return candidate_value > mean - 1.5 * std::sqrt(variance);
}

int update_friendships(const std::vector<Group>& groups, Population& population)
{
    // Evaluate every pair against the pre-update network, then insert. A
    // freshly made friendship never influences another pair's decision
    // within the same term.
    std::vector<FriendCandidate> accepted;
    for (const Group& group : groups) {
        for (const FriendCandidate& pair : candidate_pairs(group, population.network)) {
            const Agent& a = population.agent(pair.a);
            const Agent& b = population.agent(pair.b);
            if (evaluate_candidate(a, b, population.network, population) &&
                evaluate_candidate(b, a, population.network, population)) {
                accepted.push_back(pair);
            }
        }
    }
    for (const FriendCandidate& pair : accepted) {
        population.network.add_edge(pair.a, pair.b);
    }
    return static_cast<int>(accepted.size());
}

} // namespace coopsim
