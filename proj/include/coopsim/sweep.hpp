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
#ifndef COOPSIM_SWEEP_HPP
#define COOPSIM_SWEEP_HPP

#include <cstdint>
#include <vector>

#include "coopsim/config.hpp"
#include "coopsim/engine.hpp"

namespace coopsim {

/// A replicated run grid over (alpha, beta). Every replication's seed is
/// derive_run_seed(masterSeed, alphaIndex, betaIndex, replicationIndex);
/// alpha, beta and seed of `base` are overwritten per run.
struct SweepSpec {
    std::vector<double> alphas;
    std::vector<double> betas;
    int replications = 1;
    SimConfig base;
    std::uint64_t master_seed = 0;
    int jobs = 1;

    void validate() const;
};

/// One (alpha, beta) cell: the fraction of replications in which the
/// complement-preferring class ends with the higher mean savings, plus how
/// many runs ended degenerate (a class extinct or the population gone).
struct SweepCell {
    double alpha = 0.0;
    double beta = 0.0;
    int replications = 0;
    int complement_wins = 0;
    int degenerate_runs = 0;

    double win_rate() const
    {
        return replications > 0 ? static_cast<double>(complement_wins) / static_cast<double>(replications) : 0.0;
    }
};

/// Cells in alpha-major, then beta, order.
struct SweepReport {
    SweepSpec spec;
    std::vector<SweepCell> cells;

    const SweepCell& cell(std::size_t alpha_index, std::size_t beta_index) const
    {
        return cells[alpha_index * spec.betas.size() + beta_index];
    }
};

/// Runs every (cell, replication) and aggregates win rates. Replications are
/// distributed over `spec.jobs` worker threads; per-replication seeding and
/// an index-ordered fold make the result independent of the execution order,
/// so any jobs value yields the same report. A failed run aborts the sweep
/// with the offending cell, replication and seed in the error message.
SweepReport run_sweep(const SweepSpec& spec);

} // namespace coopsim

#endif // COOPSIM_SWEEP_HPP
