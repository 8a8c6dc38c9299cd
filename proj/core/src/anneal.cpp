#include "quboforge/anneal.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "quboforge/detail/flip_view.hpp"
#include "quboforge/errors.hpp"
#include "quboforge/random.hpp"

namespace quboforge {

void AnnealConfig::validate() const {
    if (sweeps < 1) throw ConfigError("sweeps must be >= 1");
    if (restarts < 1) throw ConfigError("restarts must be >= 1");
    if (!(final_temperature > 0.0)) throw ConfigError("final temperature must be > 0");
    if (initial_temperature && !(*initial_temperature >= final_temperature)) {
        throw ConfigError("initial temperature must be >= final temperature");
    }
    if (threads < 1) throw ConfigError("threads must be >= 1");
}

double auto_temperature(const QuboModel& model) {
    const QuboModel m = model.is_normalized() ? model : model.normalized();
    const double t = detail::FlipView(m).max_flip_magnitude();
    return t > 0.0 ? t : 1.0;
}

namespace {

Sample run_restart(const QuboModel& m, const detail::FlipView& view, double t0, double cool,
                   int sweeps, std::uint64_t restart_seed) {
    Rng rng(restart_seed);
    const int n = m.n;
    Assignment bits(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) bits[i] = static_cast<std::uint8_t>(rng.next() & 1u);

    double energy = evaluate(m, bits);
    Assignment best_bits = bits;
    double best_energy = energy;

    double temperature = t0;
    for (int sweep = 0; sweep < sweeps; ++sweep) {
        for (int i = 0; i < n; ++i) {
            const double delta = view.flip_delta(bits, i);
            // exactly one draw per proposal keeps the stream position
            // independent of which branch accepts
            const double u = rng.uniform();
            if (delta <= 0.0 || u < std::exp(-delta / temperature)) {
                bits[i] ^= 1;
                energy += delta;
                if (energy < best_energy) {
                    best_energy = energy;
                    best_bits = bits;
                }
            }
        }
        temperature *= cool;
    }
    // report the exact energy of the best assignment, not the drifted sum
    return Sample{best_bits, evaluate(m, best_bits), 1, "sa"};
}

}  // namespace

SampleSet solve_sa(const QuboModel& model, const AnnealConfig& cfg) {
    cfg.validate();
    const QuboModel m = model.is_normalized() ? model : model.normalized();
    const detail::FlipView view(m);

    double t0 = cfg.initial_temperature.value_or(auto_temperature(m));
    t0 = std::max(t0, cfg.final_temperature);
    const double cool = std::pow(cfg.final_temperature / t0, 1.0 / cfg.sweeps);

    std::vector<Sample> bests(static_cast<std::size_t>(cfg.restarts));
    auto run_range = [&](int lo, int hi) {
        for (int r = lo; r < hi; ++r) {
            bests[r] = run_restart(m, view, t0, cool, cfg.sweeps, derive_seed(cfg.seed, r));
        }
    };

    const int threads = std::min(cfg.threads, cfg.restarts);
    if (threads <= 1) {
        run_range(0, cfg.restarts);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        const int chunk = (cfg.restarts + threads - 1) / threads;
        for (int t = 0; t < threads; ++t) {
            const int lo = t * chunk;
            const int hi = std::min(cfg.restarts, lo + chunk);
            if (lo < hi) pool.emplace_back(run_range, lo, hi);
        }
        for (auto& th : pool) th.join();
    }

    nlohmann::json meta = {{"solver", "sa"},
                           {"seed", cfg.seed},
                           {"sweeps", cfg.sweeps},
                           {"restarts", cfg.restarts},
                           {"initial_temperature", t0},
                           {"final_temperature", cfg.final_temperature},
                           {"schedule", "geometric"}};
    return SampleSet::collect(std::move(bests), fingerprint(m), std::move(meta));
}

}  // namespace quboforge
