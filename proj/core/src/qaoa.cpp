#include "quboforge/qaoa.hpp"

#include <algorithm>
#include <cmath>

#include "quboforge/errors.hpp"
#include "quboforge/exact.hpp"
#include "quboforge/neldermead.hpp"
#include "quboforge/random.hpp"

namespace quboforge {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

// rng stream tags for the independent draws inside optimize()
constexpr std::uint64_t kStreamFinalCounts = 999;
constexpr std::uint64_t kStreamRestartBase = 10'000;
constexpr std::uint64_t kStreamShotBase = 1'000'000;

void check_qubits(int n) {
    if (n < 1) throw InstanceError("statevector needs at least one qubit");
    if (n > kQaoaMaxQubits) {
        throw CapacityError("n = " + std::to_string(n) + " exceeds the statevector cap of " +
                            std::to_string(kQaoaMaxQubits) + " qubits");
    }
}

/// Ising energies for every basis state, Gray-code incremental like the
/// exact solver's table. Spins read sigma_i = 2 bit_i - 1.
std::vector<double> ising_energy_table(const IsingModel& model) {
    const IsingModel m = model.normalized();
    check_qubits(m.n);
    std::vector<double> h(static_cast<std::size_t>(m.n), 0.0);
    std::vector<std::vector<std::pair<int, double>>> adj(static_cast<std::size_t>(m.n));
    for (const auto& [i, c] : m.fields_h) h[i] = c;
    for (const auto& [key, c] : m.couplings_J) {
        adj[key.first].emplace_back(key.second, c);
        adj[key.second].emplace_back(key.first, c);
    }

    const std::size_t dim = std::size_t{1} << m.n;
    std::vector<double> energies(dim);
    std::vector<std::int8_t> spins(static_cast<std::size_t>(m.n), -1);
    double e = m.offset;
    for (int i = 0; i < m.n; ++i) e -= h[i];
    for (const auto& [key, c] : m.couplings_J) e += c;  // (-1)(-1) = +1
    std::uint64_t z = 0;
    energies[0] = e;
    for (std::uint64_t t = 1; t < dim; ++t) {
        const int bit = std::countr_zero(t);
        double field = h[bit];
        for (const auto& [j, c] : adj[bit]) field += c * spins[j];
        e -= 2.0 * spins[bit] * field;
        spins[bit] = static_cast<std::int8_t>(-spins[bit]);
        z ^= (std::uint64_t{1} << bit);
        energies[z] = e;
    }
    return energies;
}

std::map<std::uint64_t, std::uint64_t> sample_indices(const Statevector& s, int shots,
                                                      std::uint64_t seed) {
    Rng rng(seed);
    std::vector<double> draws(static_cast<std::size_t>(shots));
    for (auto& d : draws) d = rng.uniform();
    std::sort(draws.begin(), draws.end());

    std::map<std::uint64_t, std::uint64_t> counts;
    double cum = 0.0;
    std::size_t k = 0;
    std::uint64_t last_nonzero = 0;
    for (std::uint64_t z = 0; z < s.dimension() && k < draws.size(); ++z) {
        const double p = std::norm(s.amplitudes[z]);
        if (p > 0.0) last_nonzero = z;
        cum += p;
        while (k < draws.size() && draws[k] < cum) {
            ++counts[z];
            ++k;
        }
    }
    // the cumulative sum rounds to slightly below 1; tail draws belong to
    // the last reachable state
    if (k < draws.size()) counts[last_nonzero] += draws.size() - k;
    return counts;
}

}  // namespace

Statevector Statevector::zero_state(int qubit_count) {
    check_qubits(qubit_count);
    Statevector s;
    s.qubit_count = qubit_count;
    s.amplitudes.assign(std::size_t{1} << qubit_count, {0.0, 0.0});
    s.amplitudes[0] = {1.0, 0.0};
    return s;
}

double Statevector::norm() const {
    double total = 0.0;
    for (const auto& a : amplitudes) total += std::norm(a);
    return std::sqrt(total);
}

std::vector<double> Statevector::probabilities() const {
    std::vector<double> p(amplitudes.size());
    for (std::size_t z = 0; z < amplitudes.size(); ++z) p[z] = std::norm(amplitudes[z]);
    return p;
}

void hadamard_layer(Statevector& s) {
    const std::size_t dim = s.dimension();
    for (int q = 0; q < s.qubit_count; ++q) {
        const std::size_t stride = std::size_t{1} << q;
        for (std::size_t base = 0; base < dim; base += 2 * stride) {
            for (std::size_t off = 0; off < stride; ++off) {
                auto& a0 = s.amplitudes[base + off];
                auto& a1 = s.amplitudes[base + off + stride];
                const auto sum = (a0 + a1) * kInvSqrt2;
                const auto diff = (a0 - a1) * kInvSqrt2;
                a0 = sum;
                a1 = diff;
            }
        }
    }
}

void apply_cost_phases(Statevector& s, std::span<const double> energies, double gamma) {
    if (energies.size() != s.dimension()) {
        throw DimensionError("energy table size does not match statevector dimension");
    }
    for (std::size_t z = 0; z < s.dimension(); ++z) {
        s.amplitudes[z] *= std::polar(1.0, -gamma * energies[z]);
    }
}

void cost_layer(Statevector& s, const IsingModel& m, double gamma) {
    if (m.n != s.qubit_count) {
        throw DimensionError("Ising model size does not match statevector qubit count");
    }
    const auto energies = ising_energy_table(m);
    apply_cost_phases(s, energies, gamma);
}

void mixer_layer(Statevector& s, double beta) {
    const double c = std::cos(beta);
    const std::complex<double> ms{0.0, -std::sin(beta)};  // -i sin(beta)
    const std::size_t dim = s.dimension();
    for (int q = 0; q < s.qubit_count; ++q) {
        const std::size_t stride = std::size_t{1} << q;
        for (std::size_t base = 0; base < dim; base += 2 * stride) {
            for (std::size_t off = 0; off < stride; ++off) {
                auto& a0 = s.amplitudes[base + off];
                auto& a1 = s.amplitudes[base + off + stride];
                const auto b0 = c * a0 + ms * a1;
                const auto b1 = ms * a0 + c * a1;
                a0 = b0;
                a1 = b1;
            }
        }
    }
}

Statevector run_circuit(const QuboModel& model, std::span<const double> gammas,
                        std::span<const double> betas) {
    check_qubits(model.n);
    if (gammas.size() != betas.size() || gammas.empty()) {
        throw ConfigError("need one gamma and one beta per layer");
    }
    const auto energies = ising_energy_table(to_ising(model));
    Statevector s = Statevector::zero_state(model.n);
    hadamard_layer(s);
    for (std::size_t layer = 0; layer < gammas.size(); ++layer) {
        apply_cost_phases(s, energies, gammas[layer]);
        mixer_layer(s, betas[layer]);
    }
    return s;
}

double expectation_exact(const QuboModel& model, const Statevector& s) {
    if (model.n != s.qubit_count) {
        throw DimensionError("model size does not match statevector qubit count");
    }
    const auto energies = detail::energy_table(model, kQaoaMaxQubits);
    double e = 0.0;
    for (std::size_t z = 0; z < s.dimension(); ++z) {
        e += std::norm(s.amplitudes[z]) * energies[z];
    }
    return e;
}

std::map<std::string, std::uint64_t> sample(const Statevector& s, int shots, std::uint64_t seed) {
    if (shots < 1) throw ConfigError("shots must be >= 1");
    std::map<std::string, std::uint64_t> counts;
    for (const auto& [z, c] : sample_indices(s, shots, seed)) {
        counts[to_bitstring(assignment_from_index(z, s.qubit_count))] = c;
    }
    return counts;
}

void QaoaConfig::validate() const {
    if (layers < 1) throw ConfigError("layers must be >= 1");
    if (shots < 1) throw ConfigError("shots must be >= 1");
    if (max_iterations < 1) throw ConfigError("max iterations must be >= 1");
    if (restarts < 1) throw ConfigError("restarts must be >= 1");
}

QaoaResult optimize(const QuboModel& model, const QaoaConfig& cfg) {
    cfg.validate();
    check_qubits(model.n);
    const QuboModel m = model.is_normalized() ? model : model.normalized();
    const auto phase_energies = ising_energy_table(to_ising(m));
    const auto value_energies = detail::energy_table(m, kQaoaMaxQubits);
    const int p = cfg.layers;

    auto circuit = [&](const std::vector<double>& params) {
        Statevector s = Statevector::zero_state(m.n);
        hadamard_layer(s);
        for (int layer = 0; layer < p; ++layer) {
            apply_cost_phases(s, phase_energies, params[layer]);
            mixer_layer(s, params[p + layer]);
        }
        return s;
    };

    QaoaResult result;
    int evaluations = 0;
    auto objective = [&](const std::vector<double>& params) {
        const Statevector s = circuit(params);
        double e = 0.0;
        if (cfg.expectation == QaoaConfig::Expectation::exact) {
            for (std::size_t z = 0; z < s.dimension(); ++z) {
                e += std::norm(s.amplitudes[z]) * value_energies[z];
            }
        } else {
            const auto counts =
                sample_indices(s, cfg.shots, derive_seed(cfg.seed, kStreamShotBase + evaluations));
            for (const auto& [z, c] : counts) {
                e += static_cast<double>(c) * value_energies[z];
            }
            e /= static_cast<double>(cfg.shots);
        }
        ++evaluations;
        result.trace.push_back(e);
        return e;
    };

    NelderMeadOptions nm;
    nm.max_iterations = cfg.max_iterations;
    std::vector<double> best_params;
    double best_value = 0.0;
    bool have_best = false;
    for (int r = 0; r < cfg.restarts; ++r) {
        std::vector<double> start(static_cast<std::size_t>(2 * p), cfg.initial_angle);
        if (r > 0) {
            Rng rng(derive_seed(cfg.seed, kStreamRestartBase + r));
            for (auto& v : start) v += rng.uniform(-0.5, 0.5);
        }
        const auto nm_result = nelder_mead(objective, std::move(start), nm);
        if (!have_best || nm_result.best_value < best_value) {
            best_value = nm_result.best_value;
            best_params = nm_result.best_point;
            have_best = true;
        }
    }

    result.gammas.assign(best_params.begin(), best_params.begin() + p);
    result.betas.assign(best_params.begin() + p, best_params.end());

    const Statevector final_state = circuit(best_params);
    const auto counts = sample_indices(final_state, cfg.shots, derive_seed(cfg.seed, kStreamFinalCounts));
    bool have_sample = false;
    std::uint64_t best_z = 0;
    for (const auto& [z, c] : counts) {
        result.counts[to_bitstring(assignment_from_index(z, m.n))] = c;
        if (!have_sample || value_energies[z] < value_energies[best_z] ||
            (value_energies[z] == value_energies[best_z] &&
             lex_less(assignment_from_index(z, m.n), assignment_from_index(best_z, m.n)))) {
            best_z = z;
            have_sample = true;
        }
    }
    result.best = Sample{assignment_from_index(best_z, m.n), value_energies[best_z],
                         counts.at(best_z), "qaoa"};
    return result;
}

nlohmann::json to_json(const QaoaResult& r) {
    return {{"gammas", r.gammas},
            {"betas", r.betas},
            {"counts", r.counts},
            {"trace", r.trace},
            {"best",
             {{"bitstring", to_bitstring(r.best.assignment)},
              {"energy", r.best.energy},
              {"multiplicity", r.best.multiplicity},
              {"source", r.best.source}}}};
}

}  // namespace quboforge
