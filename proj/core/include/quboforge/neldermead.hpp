#pragma once

#include <functional>
#include <vector>

namespace quboforge {

/// Nelder-Mead downhill simplex: derivative-free, bounded by an iteration
/// budget, fully deterministic for a given starting point.
struct NelderMeadResult {
    std::vector<double> best_point;
    double best_value = 0.0;
    int iterations = 0;
};

struct NelderMeadOptions {
    int max_iterations = 200;
    double initial_step = 0.5;      // offset of the non-origin simplex vertices
    double value_tolerance = 1e-10; // stop when the simplex f-spread collapses
    double reflection = 1.0;
    double expansion = 2.0;
    double contraction = 0.5;
    double shrink = 0.5;
};

NelderMeadResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                             std::vector<double> start, const NelderMeadOptions& opt = {});

}  // namespace quboforge
