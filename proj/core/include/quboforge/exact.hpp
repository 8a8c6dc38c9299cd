#pragma once

#include <vector>

#include "quboforge/model.hpp"
#include "quboforge/sampleset.hpp"

namespace quboforge {

/// Largest n solve_exact will enumerate (2^26 assignments).
inline constexpr int kExactMaxVariables = 26;
/// Largest n spectrum() will materialize (2^16 energies).
inline constexpr int kSpectrumMaxVariables = 16;

/// Exhaustive ground-truth solver. Walks all 2^n assignments along a
/// binary-reflected Gray code so each step updates the energy in O(degree
/// of the flipped variable), and keeps the top_k lowest-energy assignments
/// in a bounded heap. Ties resolve to the lexicographically smallest
/// bitstring. Throws CapacityError above n = 26 (use simulated annealing).
SampleSet solve_exact(const QuboModel& model, std::size_t top_k = 1);

/// All 2^n energies, indexed by basis index z (bit i of z = variable i).
/// n <= 16.
std::vector<double> spectrum(const QuboModel& model);

namespace detail {
/// Gray-code energy table over basis indices; shared with the QAOA
/// simulator, which needs it up to its own cap. `limit` guards 2^n.
std::vector<double> energy_table(const QuboModel& model, int limit);
}  // namespace detail

}  // namespace quboforge
