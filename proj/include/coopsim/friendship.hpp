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
#ifndef COOPSIM_FRIENDSHIP_HPP
#define COOPSIM_FRIENDSHIP_HPP

#include <vector>

#include "coopsim/formation.hpp"
#include "coopsim/model.hpp"

namespace coopsim {

/// A co-member pair that is not yet connected in the friend network.
struct FriendCandidate {
    int a = -1;
    int b = -1;
};

/// All unordered co-member pairs of the group that lack an edge, in member
/// order. No duplicates: membership is exclusive per term, so a pair can
/// come from one group only.
std::vector<FriendCandidate> candidate_pairs(const Group& group, const FriendNetwork& network);

/// Whether `self` accepts `candidate` as a new friend: the candidate's value
/// under self's preference must exceed mean - 1.5 * sigma of the values of
/// self's current friends. With no friends every candidate is accepted.
/// Unlike offer evaluation there is no time-pressure term here.
bool evaluate_candidate(const Agent& self, const Agent& candidate, const FriendNetwork& network,
                        const Population& population);

/// End-of-term network growth: every candidate pair whose two agents accept
/// each other becomes friends. All evaluations read the network as it stood
/// at phase start; edges are inserted afterwards, so the result does not
/// depend on group or pair order. Returns the number of edges added.
int update_friendships(const std::vector<Group>& groups, Population& population);

} // namespace coopsim

#endif // COOPSIM_FRIENDSHIP_HPP
