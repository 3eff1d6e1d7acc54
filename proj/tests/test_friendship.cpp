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
#include <doctest.h>

#include <algorithm>
#include <set>
#include <utility>
#include <vector>

#include "coopsim/friendship.hpp"
#include "coopsim/model.hpp"
#include "coopsim/rng.hpp"
#include "test_support.hpp"

using namespace coopsim;
using coopsim::testing::edge_set;
using coopsim::testing::make_agent;
using coopsim::testing::make_population;

namespace {

Group make_group(std::vector<int> members)
{
    Group g;
    g.initiator_id = members.front();
    g.member_ids = std::move(members);
    return g;
}

} // namespace

TEST_SUITE("examples")
{
    TEST_CASE("a singleton group offers no candidate pairs")
    {
        const Population pop = make_population({make_agent(0, 0.5, 0.5), make_agent(1, 0.5, 0.5)});
        CHECK(candidate_pairs(make_group({0}), pop.network).empty());
    }

    TEST_CASE("an unconnected pair yields exactly one candidate")
    {
        Population pop = make_population({make_agent(0, 0.5, 0.5), make_agent(1, 0.5, 0.5)});
        const std::vector<FriendCandidate> pairs = candidate_pairs(make_group({0, 1}), pop.network);
        REQUIRE(pairs.size() == 1);
        CHECK(pairs[0].a == 0);
        CHECK(pairs[0].b == 1);

        pop.network.add_edge(0, 1);
        CHECK(candidate_pairs(make_group({0, 1}), pop.network).empty());
    }

    TEST_CASE("a four-member group with no edges yields all six pairs")
    {
        Population pop = make_population({make_agent(0, 0.5, 0.5), make_agent(1, 0.5, 0.5),
                                          make_agent(2, 0.5, 0.5), make_agent(3, 0.5, 0.5)});
        CHECK(candidate_pairs(make_group({0, 1, 2, 3}), pop.network).size() == 6);

        pop.network.add_edge(1, 3);
        pop.network.add_edge(0, 2);
        const std::vector<FriendCandidate> pairs = candidate_pairs(make_group({0, 1, 2, 3}), pop.network);
        CHECK(pairs.size() == 4);
        for (const FriendCandidate& p : pairs) {
            CHECK_FALSE(pop.network.has_edge(p.a, p.b));
        }
    }

    TEST_CASE("an agent with no friends accepts any candidate")
    {
        const Population pop = make_population({make_agent(0, 0.9, 0.9, 1.0, 0.0),
                                                make_agent(1, 0.0, 0.0)});
        CHECK(evaluate_candidate(pop.agent(0), pop.agent(1), pop.network, pop));
    }

    TEST_CASE("identical friends pin the acceptance threshold at their value")
    {
        // Friends 1 and 2 are both worth 0.5 to agent 0, so sigma is zero and
        // the bar sits exactly at 0.5.
        Population pop = make_population({make_agent(0, 0.5, 0.5, 1.0, 0.0),
                                          make_agent(1, 0.5, 0.1), make_agent(2, 0.5, 0.9),
                                          make_agent(3, 0.49, 0.5), make_agent(4, 0.51, 0.5)});
        pop.network.add_edge(0, 1);
        pop.network.add_edge(0, 2);
        CHECK_FALSE(evaluate_candidate(pop.agent(0), pop.agent(3), pop.network, pop));
        CHECK(evaluate_candidate(pop.agent(0), pop.agent(4), pop.network, pop));
    }

    TEST_CASE("a spread of friend values lowers the bar below the mean")
    {
        // Friend values {0.2, 0.8}: mean 0.5, sigma 0.3, threshold 0.05.
        Population pop = make_population({make_agent(0, 0.5, 0.5, 1.0, 0.0),
                                          make_agent(1, 0.2, 0.5), make_agent(2, 0.8, 0.5),
                                          make_agent(3, 0.06, 0.5), make_agent(4, 0.04, 0.5)});
        pop.network.add_edge(0, 1);
        pop.network.add_edge(0, 2);
        CHECK(evaluate_candidate(pop.agent(0), pop.agent(3), pop.network, pop));
        CHECK_FALSE(evaluate_candidate(pop.agent(0), pop.agent(4), pop.network, pop));
    }

    TEST_CASE("mutual acceptance creates the edge")
    {
        Population pop = make_population({make_agent(0, 0.7, 0.7), make_agent(1, 0.6, 0.6)});
        const std::vector<Group> groups{make_group({0, 1})};
        CHECK(update_friendships(groups, pop) == 1);
        CHECK(pop.network.has_edge(0, 1));
    }

    TEST_CASE("one-sided acceptance creates nothing")
    {
        // Agent 0 requires at least 0.5 (two identical friends); candidate 3
        // is worth 0.1 to it. Candidate 3 has no friends and would accept.
        Population pop = make_population({make_agent(0, 0.5, 0.5, 1.0, 0.0),
                                          make_agent(1, 0.5, 0.5), make_agent(2, 0.5, 0.5),
                                          make_agent(3, 0.1, 0.9)});
        pop.network.add_edge(0, 1);
        pop.network.add_edge(0, 2);
        const std::size_t before = pop.network.edge_count();
        const std::vector<Group> groups{make_group({0, 3})};
        CHECK(update_friendships(groups, pop) == 0);
        CHECK(pop.network.edge_count() == before);
        CHECK_FALSE(pop.network.has_edge(0, 3));
    }

    TEST_CASE("singleton groups add no friendships")
    {
        Population pop = make_population({make_agent(0, 0.5, 0.5), make_agent(1, 0.5, 0.5)});
        const std::vector<Group> groups{make_group({0}), make_group({1})};
        CHECK(update_friendships(groups, pop) == 0);
        CHECK(pop.network.edge_count() == 0);
    }
}

TEST_SUITE("properties")
{
    TEST_CASE("evaluations read the network as it stood at phase start")
    {
        // Agent 0 starts friendless, so it must accept both 1 and 2 even
        // though befriending 1 (value 0.9) first would push its bar far above
        // 2's value of 0.1. All three pairs in the triangle connect.
        Population pop = make_population({make_agent(0, 0.5, 0.5, 1.0, 0.0),
                                          make_agent(1, 0.9, 0.5), make_agent(2, 0.1, 0.5)});
        const std::vector<Group> groups{make_group({0, 1, 2})};
        CHECK(update_friendships(groups, pop) == 3);
        CHECK(pop.network.has_edge(0, 1));
        CHECK(pop.network.has_edge(0, 2));
        CHECK(pop.network.has_edge(1, 2));
    }

    TEST_CASE("the result does not depend on group order")
    {
        std::vector<Agent> agents;
        RandomSource rng(404);
        for (int i = 0; i < 12; ++i) {
            agents.push_back(make_agent(i, rng.uniform01(), rng.uniform01(), 1.0, 0.0));
        }
        std::vector<Group> groups{make_group({0, 1, 2, 3}), make_group({4, 5, 6}),
                                  make_group({7, 8}), make_group({9, 10, 11})};

        Population forward = make_population(agents);
        forward.network.add_edge(0, 1);
        forward.network.add_edge(4, 6);
        Population backward = forward;

        const int added_forward = update_friendships(groups, forward);
        std::reverse(groups.begin(), groups.end());
        for (Group& g : groups) {
            std::reverse(g.member_ids.begin(), g.member_ids.end());
            g.initiator_id = g.member_ids.front();
        }
        const int added_backward = update_friendships(groups, backward);

        CHECK(added_forward == added_backward);
        CHECK(edge_set(forward.network) == edge_set(backward.network));
    }

    TEST_CASE("new edges connect co-members only")
    {
        SimConfig cfg;
        cfg.n = 30;
        cfg.k = 6;
        cfg.d0 = 4.0;
        RandomSource rng(405);
        Population pop = init_population(cfg, rng);
        const std::set<std::pair<int, int>> before = edge_set(pop.network);

        const std::vector<Group> groups{make_group({0, 5, 9, 14}), make_group({1, 2}),
                                        make_group({20, 21, 22, 23, 24})};
        std::set<std::pair<int, int>> allowed;
        for (const Group& g : groups) {
            for (std::size_t i = 0; i < g.member_ids.size(); ++i) {
                for (std::size_t j = i + 1; j < g.member_ids.size(); ++j) {
                    const int a = std::min(g.member_ids[i], g.member_ids[j]);
                    const int b = std::max(g.member_ids[i], g.member_ids[j]);
                    allowed.emplace(a, b);
                }
            }
        }

        const int added = update_friendships(groups, pop);
        const std::set<std::pair<int, int>> after = edge_set(pop.network);
        CHECK(static_cast<int>(after.size() - before.size()) == added);
        for (const std::pair<int, int>& e : after) {
            if (before.count(e) == 0) {
                CHECK(allowed.count(e) == 1);
            }
        }
    }

    TEST_CASE("candidate pairs never include existing friends or self pairs")
    {
        SimConfig cfg;
        cfg.n = 16;
        cfg.k = 4;
        cfg.d0 = 6.0;
        RandomSource rng(406);
        const Population pop = init_population(cfg, rng);
        const Group group = make_group({2, 3, 5, 7, 11, 13});
        std::set<std::pair<int, int>> seen;
        for (const FriendCandidate& p : candidate_pairs(group, pop.network)) {
            CHECK(p.a != p.b);
            CHECK_FALSE(pop.network.has_edge(p.a, p.b));
            const std::pair<int, int> key{std::min(p.a, p.b), std::max(p.a, p.b)};
            CHECK(seen.insert(key).second);
        }
    }

    TEST_CASE("update count matches the network edge delta")
    {
        RandomSource rng(407);
        for (int trial = 0; trial < 50; ++trial) {
            std::vector<Agent> agents;
            for (int i = 0; i < 10; ++i) {
                agents.push_back(make_agent(i, rng.uniform01(), rng.uniform01(),
                                            rng.uniform01(), 0.0));
            }
            for (Agent& a : agents) {
                a.preference[kEfficiency] = 1.0 - a.preference[kReliability];
            }
            Population pop = make_population(agents);
            const std::size_t before = pop.network.edge_count();
            const std::vector<Group> groups{make_group({0, 1, 2, 3, 4}), make_group({5, 6, 7})};
            const int added = update_friendships(groups, pop);
            CHECK(pop.network.edge_count() == before + static_cast<std::size_t>(added));
        }
    }
}
