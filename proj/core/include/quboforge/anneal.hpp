#pragma once

#include <cstdint>
#include <optional>

#include "quboforge/model.hpp"
#include "quboforge/sampleset.hpp"

namespace quboforge {

/// Metropolis annealing schedule. The temperature cools geometrically from
/// T0 (auto-scaled to the model unless set) down to final_temperature over
/// the course of each restart.
struct AnnealConfig {
    int sweeps = 1000;
    int restarts = 10;
    std::optional<double> initial_temperature;  // auto when unset
    double final_temperature = 0.1;
    std::uint64_t seed = 0;
    int threads = 1;  // restarts run in parallel; output is schedule-independent

    void validate() const;
};

/// Largest single-flip |dE| possible anywhere in the model:
/// max_i (|linear_i| + sum_j |Q_ij|). Starting there keeps the initial
/// acceptance probability of any uphill move at or above 1/e. All-zero
/// models fall back to 1.
double auto_temperature(const QuboModel& model);

/// Simulated annealing. Per restart r: a generator seeded from
/// (master seed, r) draws a random initial assignment, then each sweep
/// proposes single-bit flips in index order, accepting with probability
/// min(1, exp(-dE/T)); T is multiplied by (Tf/T0)^(1/sweeps) after every
/// sweep. Returns the deduplicated, energy-sorted per-restart bests.
/// Identical (model, cfg) gives bit-identical output at any thread count.
SampleSet solve_sa(const QuboModel& model, const AnnealConfig& cfg = {});

}  // namespace quboforge
