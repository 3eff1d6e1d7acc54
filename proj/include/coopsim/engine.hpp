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
#ifndef COOPSIM_ENGINE_HPP
#define COOPSIM_ENGINE_HPP

#include <string>
#include <vector>

#include "coopsim/config.hpp"
#include "coopsim/model.hpp"
#include "coopsim/rng.hpp"

namespace coopsim {

/// Per-term metrics: savings averaged over the living agents of each
/// strategy class (0 when the class is empty), alive counts, the group-size
/// histogram (index size-1, one entry per initiator), and the number of
/// friendships formed.
struct TermReport {
    int term = 0;
    double mean_complement = 0.0;
    double mean_similar = 0.0;
    int alive_complement = 0;
    int alive_similar = 0;
    std::vector<int> group_size_counts;
    int edges_added = 0;
};

enum class Winner {
    Complement,
    Similar,
    Tie,
};

/// A class with living agents beats an extinct one; between two living
/// classes the higher mean savings wins; everything else is a tie.
Winner decide_winner(int alive_complement, int alive_similar, double mean_complement, double mean_similar);

struct RunReport {
    SimConfig config;
    TermReport initial; ///< state right after initialization, term 0
    std::vector<TermReport> terms;
    Winner final_winner = Winner::Tie;
    std::string early_stop; ///< reason, empty if the run reached maxTerm
    int early_stop_term = -1;

    /// The run ended without both classes alive, or could not run at all.
    bool degenerate() const { return !early_stop.empty(); }
    const TermReport& last() const { return terms.empty() ? initial : terms.back(); }
};

/// Population plus the run's single random source. All draws of a run come
/// from this generator in a fixed order: initiator selection, formation
/// draws tick by tick, then economy draws group by group.
struct SimState {
    Population population;
    RandomSource rng;
    int term = 0;
};

SimState init_sim(const SimConfig& config);

/// One term, the full phase schedule:
///   t = 0        consumption and deaths, then initiator selection
///   t = 1..T     group formation
///   t = T+1, T+2 field assignment, harvest, awards and punishment
///   t = T+3      friendship updates, groups dissolve
/// Initiators are drawn after the death check so that every initiator
/// survives its own term and every drawn initiator yields a group. Requires
/// at least 2 living agents.
TermReport run_term(SimState& state, const SimConfig& config);

/// Runs maxTerm terms from a fresh population, stopping early when a
/// strategy class dies out or fewer than 2 agents remain. Identical configs
/// produce identical reports, bit for bit.
RunReport run_simulation(const SimConfig& config);

} // namespace coopsim

#endif // COOPSIM_ENGINE_HPP
