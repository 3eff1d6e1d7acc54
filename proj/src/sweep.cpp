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
#include "coopsim/sweep.hpp"

#include <atomic>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>

namespace coopsim {

void SweepSpec::validate() const
{
    if (alphas.empty() || betas.empty()) {
        throw std::invalid_argument("sweep: alpha and beta grids must be nonempty");
    }
    if (replications < 1) {
        throw std::invalid_argument("sweep: replications must be at least 1");
    }
    if (jobs < 1) {
        throw std::invalid_argument("sweep: jobs must be at least 1");
    }
    for (double a : alphas) {
        if (!(a >= 0.0 && a <= 1.0)) {
            throw std::invalid_argument("sweep: every alpha must be in [0,1]");
        }
    }
    for (double b : betas) {
        if (!(b >= 0.0 && b <= 1.0)) {
            throw std::invalid_argument("sweep: every beta must be in [0,1]");
        }
    }
    SimConfig probe = base;
    probe.alpha = alphas.front();
    probe.beta = betas.front();
    probe.validate();
}

namespace {

struct RunOutcome {
    bool complement_won = false;
    bool degenerate = false;
};

} // namespace

SweepReport run_sweep(const SweepSpec& spec)
{
    spec.validate();

    const std::size_t cell_count = spec.alphas.size() * spec.betas.size();
    const std::size_t reps = static_cast<std::size_t>(spec.replications);
    const std::size_t total_runs = cell_count * reps;

    // Each run writes to its own slot; the fold below is index-ordered, so
    // the report cannot depend on scheduling.
    std::vector<RunOutcome> outcomes(total_runs);
    std::atomic<std::size_t> next{0};
    std::mutex failure_mutex;
    std::string failure;

    auto worker = [&]() {
        for (std::size_t job = next.fetch_add(1); job < total_runs; job = next.fetch_add(1)) {
            const std::size_t cell_index = job / reps;
            const std::size_t replication = job % reps;
            const std::size_t alpha_index = cell_index / spec.betas.size();
            const std::size_t beta_index = cell_index % spec.betas.size();

            SimConfig config = spec.base;
            config.alpha = spec.alphas[alpha_index];
            config.beta = spec.betas[beta_index];
            config.seed = derive_run_seed(spec.master_seed, alpha_index, beta_index, replication);
            try {
                const RunReport report = run_simulation(config);
                outcomes[job] = RunOutcome{report.final_winner == Winner::Complement, report.degenerate()};
            }
            catch (const std::exception& e) {
                std::scoped_lock lock(failure_mutex);
                if (failure.empty()) {
                    failure = "sweep run failed at alpha=" + std::to_string(config.alpha) +
                              " beta=" + std::to_string(config.beta) +
                              " replication=" + std::to_string(replication) +
                              " seed=" + std::to_string(config.seed) + ": " + e.what();
                }
                next.store(total_runs); // stop handing out work
                return;
            }
        }
    };

    const int thread_count = std::min<std::size_t>(static_cast<std::size_t>(spec.jobs), total_runs);
    if (thread_count <= 1) {
        worker();
    }
    else {
        std::vector<std::thread> threads;
        threads.reserve(static_cast<std::size_t>(thread_count));
        for (int i = 0; i < thread_count; ++i) {
            threads.emplace_back(worker);
        }
        for (std::thread& t : threads) {
            t.join();
        }
    }
    if (!failure.empty()) {
        throw std::runtime_error(failure);
    }

    SweepReport report;
    report.spec = spec;
    report.cells.reserve(cell_count);
    for (std::size_t alpha_index = 0; alpha_index < spec.alphas.size(); ++alpha_index) {
        for (std::size_t beta_index = 0; beta_index < spec.betas.size(); ++beta_index) {
            SweepCell cell;
            cell.alpha = spec.alphas[alpha_index];
            cell.beta = spec.betas[beta_index];
            cell.replications = spec.replications;
            const std::size_t cell_index = alpha_index * spec.betas.size() + beta_index;
            for (std::size_t r = 0; r < reps; ++r) {
                const RunOutcome& outcome = outcomes[cell_index * reps + r];
                cell.complement_wins += outcome.complement_won ? 1 : 0;
                cell.degenerate_runs += outcome.degenerate ? 1 : 0;
            }
            report.cells.push_back(cell);
        }
    }
    return report;
}

} // namespace coopsim
