#include "quboforge/neldermead.hpp"

#include <algorithm>
#include <cmath>

namespace quboforge {

NelderMeadResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                             std::vector<double> start, const NelderMeadOptions& opt) {
    const std::size_t dim = start.size();
    std::vector<std::vector<double>> x(dim + 1, start);
    for (std::size_t i = 0; i < dim; ++i) x[i + 1][i] += opt.initial_step;
    std::vector<double> fx(dim + 1);
    for (std::size_t v = 0; v <= dim; ++v) fx[v] = f(x[v]);

    auto order = [&] {
        std::vector<std::size_t> idx(dim + 1);
        for (std::size_t i = 0; i <= dim; ++i) idx[i] = i;
        std::stable_sort(idx.begin(), idx.end(),
                         [&](std::size_t a, std::size_t b) { return fx[a] < fx[b]; });
        std::vector<std::vector<double>> x2(dim + 1);
        std::vector<double> fx2(dim + 1);
        for (std::size_t i = 0; i <= dim; ++i) {
            x2[i] = std::move(x[idx[i]]);
            fx2[i] = fx[idx[i]];
        }
        x = std::move(x2);
        fx = std::move(fx2);
    };

    int iter = 0;
    for (; iter < opt.max_iterations; ++iter) {
        order();
        if (std::abs(fx[dim] - fx[0]) <= opt.value_tolerance) break;

        std::vector<double> centroid(dim, 0.0);
        for (std::size_t v = 0; v < dim; ++v) {
            for (std::size_t i = 0; i < dim; ++i) centroid[i] += x[v][i];
        }
        for (double& c : centroid) c /= static_cast<double>(dim);

        auto along = [&](double scale) {
            std::vector<double> p(dim);
            for (std::size_t i = 0; i < dim; ++i) p[i] = centroid[i] + scale * (centroid[i] - x[dim][i]);
            return p;
        };

        auto xr = along(opt.reflection);
        const double fr = f(xr);
        if (fr < fx[0]) {
            auto xe = along(opt.reflection * opt.expansion);
            const double fe = f(xe);
            if (fe < fr) {
                x[dim] = std::move(xe);
                fx[dim] = fe;
            } else {
                x[dim] = std::move(xr);
                fx[dim] = fr;
            }
        } else if (fr < fx[dim - 1]) {
            x[dim] = std::move(xr);
            fx[dim] = fr;
        } else {
            auto xc = along(-opt.contraction);
            const double fc = f(xc);
            if (fc < fx[dim]) {
                x[dim] = std::move(xc);
                fx[dim] = fc;
            } else {
                for (std::size_t v = 1; v <= dim; ++v) {
                    for (std::size_t i = 0; i < dim; ++i) {
                        x[v][i] = x[0][i] + opt.shrink * (x[v][i] - x[0][i]);
                    }
                    fx[v] = f(x[v]);
                }
            }
        }
    }
    order();
    return NelderMeadResult{x[0], fx[0], iter};
}

}  // namespace quboforge
