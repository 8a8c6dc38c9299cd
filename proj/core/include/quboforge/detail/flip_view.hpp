#pragma once

#include <cmath>
#include <utility>
#include <vector>

#include "quboforge/model.hpp"

namespace quboforge::detail {

/// Per-variable view of a normalized model: dense linear coefficients and
/// neighbor lists, so the energy change of a single-bit flip costs
/// O(degree of the flipped variable).
struct FlipView {
    std::vector<double> linear;
    std::vector<std::vector<std::pair<int, double>>> neighbors;

    explicit FlipView(const QuboModel& m)
        : linear(static_cast<std::size_t>(m.n), 0.0),
          neighbors(static_cast<std::size_t>(m.n)) {
        for (const auto& [i, c] : m.linear) linear[i] = c;
        for (const auto& [key, c] : m.quadratic) {
            neighbors[key.first].emplace_back(key.second, c);
            neighbors[key.second].emplace_back(key.first, c);
        }
    }

    /// evaluate(after flip of bit i) - evaluate(before).
    double flip_delta(const Assignment& bits, int i) const {
        double field = linear[i];
        for (const auto& [j, c] : neighbors[i]) {
            if (bits[j]) field += c;
        }
        return bits[i] ? -field : field;
    }

    /// Largest single-flip |dE| reachable from any assignment.
    double max_flip_magnitude() const {
        double best = 0.0;
        for (std::size_t i = 0; i < linear.size(); ++i) {
            double reach = std::abs(linear[i]);
            for (const auto& [j, c] : neighbors[i]) reach += std::abs(c);
            best = std::max(best, reach);
        }
        return best;
    }
};

}  // namespace quboforge::detail
