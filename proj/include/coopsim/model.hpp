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
#ifndef COOPSIM_MODEL_HPP
#define COOPSIM_MODEL_HPP

#include <cmath>
#include <cstdint>
#include <vector>

#include <Eigen/Core>

#include "coopsim/config.hpp"
#include "coopsim/rng.hpp"

namespace coopsim {

/// Agent trait vectors are dense 2-vectors indexed by component.
/// BehaviorVector holds [reliability, efficiency], both in [0,1].
/// PreferenceVector holds the weights an agent puts on a partner's
/// reliability vs efficiency; components sum to 1.
using BehaviorVector = Eigen::Vector2d;
using PreferenceVector = Eigen::Vector2d;

inline constexpr Eigen::Index kReliability = 0;
inline constexpr Eigen::Index kEfficiency = 1;

enum class Strategy {
    SimilarPreferring,
    ComplementPreferring,
};

/// Running mean and population sigma over every offer value an agent has
/// received, Welford form. sigma() = sqrt(m2 / count), 0 while count <= 1.
struct OfferStats {
    std::int64_t count = 0;
    double mean = 0.0;
    double m2 = 0.0;

    void add(double x)
    {
        ++count;
        const double delta = x - mean;
        mean += delta / static_cast<double>(count);
        m2 += delta * (x - mean);
    }

    double sigma() const { return count <= 1 ? 0.0 : std::sqrt(m2 / static_cast<double>(count)); }
};

struct Agent {
    int id = 0;
    double capacity = 0.0;
    BehaviorVector behavior = BehaviorVector::Zero();
    PreferenceVector preference = PreferenceVector::Zero();
    Strategy strategy = Strategy::SimilarPreferring;
    double savings = 0.0; // may go negative between settlement and the next consumption
    bool alive = true;
    OfferStats offer_stats;
};

/// Undirected simple graph over agent ids. Neighbor lists are kept sorted so
/// that every iteration order is reproducible. Dead agents are removed and
/// keep degree 0 forever.
class FriendNetwork
{
public:
    FriendNetwork() = default;
    explicit FriendNetwork(int n)
        : adjacency_(static_cast<std::size_t>(n))
    {
    }

    int vertex_count() const { return static_cast<int>(adjacency_.size()); }
    std::size_t edge_count() const { return edges_; }

    bool has_edge(int u, int v) const;

    /// Inserts the undirected edge {u, v}; returns false if it already
    /// existed. Self-loops are rejected.
    bool add_edge(int u, int v);

    /// Drops every edge incident to v.
    void remove_vertex(int v);

    const std::vector<int>& neighbors(int v) const { return adjacency_[static_cast<std::size_t>(v)]; }
    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

private:
    std::vector<std::vector<int>> adjacency_;
    std::size_t edges_ = 0;
};

struct Population {
    std::vector<Agent> agents;
    FriendNetwork network;

    Agent& agent(int id) { return agents[static_cast<std::size_t>(id)]; }
    const Agent& agent(int id) const { return agents[static_cast<std::size_t>(id)]; }
    int alive_count() const;
    int alive_count(Strategy strategy) const;
};

/// Value agent `p` assigns to behavior `b`: the dot product p . b, in [0,1]
/// for valid inputs.
inline double behavior_value(const PreferenceVector& p, const BehaviorVector& b)
{
    return p.dot(b);
}

/// Builds an agent's preference vector from its behavior vector.
///
/// The base vector carries the agent's own behavior proportions
/// (similar-preferring) or their mirror image (complement-preferring); the
/// spread alpha then widens the gap by (1 - max(b)) * alpha, clamped to [0,1]
/// while preserving sum 1. When b.r == b.e the push goes toward the
/// efficiency side, a fixed convention for an event of measure zero.
///
/// Throws std::invalid_argument for alpha outside [0,1] or b == [0,0].
PreferenceVector build_preference_vector(const BehaviorVector& b, Strategy strategy, double alpha);

/// G(n, m) friend network with m = round(n * d0 / 2) edges placed uniformly
/// at random among the distinct pairs (capped at the complete graph).
FriendNetwork init_friend_network(int n, double d0, RandomSource& rng);

/// Fresh population: behavior components i.i.d. U(0,1), exactly
/// round(beta * n) agents complement-preferring (chosen uniformly), savings
/// s0, and an init_friend_network graph. Draw order: behavior pairs in id
/// order, then the strategy assignment, then the network edges.
Population init_population(const SimConfig& config, RandomSource& rng);

/// Subtracts `amount` from every living agent's savings; agents left below
/// zero die and are removed from the friend network. Returns the ids culled
/// by this call, in id order.
std::vector<int> consume_and_cull(Population& population, double amount);

} // namespace coopsim

#endif // COOPSIM_MODEL_HPP
