#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "quboforge/model.hpp"
#include "quboforge/sampleset.hpp"

namespace quboforge {

/// Statevector cap: 2^20 amplitudes.
inline constexpr int kQaoaMaxQubits = 20;

/// Full 2^n complex state. Basis index z encodes bits with variable 0 as
/// the least-significant bit, matching assignment_from_index.
struct Statevector {
    int qubit_count = 0;
    std::vector<std::complex<double>> amplitudes;

    static Statevector zero_state(int qubit_count);

    std::size_t dimension() const { return amplitudes.size(); }
    double norm() const;
    std::vector<double> probabilities() const;
};

/// H on every qubit. From |0...0> this yields the uniform superposition.
void hadamard_layer(Statevector& s);

/// Exact diagonal cost unitary: amp(z) *= exp(-i gamma E(z)) with E the
/// Ising energy of basis state z. Equal, up to global phase, to the
/// textbook RZ + ZZ gate network for the same Hamiltonian.
void cost_layer(Statevector& s, const IsingModel& m, double gamma);

/// Phase application against a precomputed diagonal; lets a circuit reuse
/// one energy table across layers and optimizer iterations.
void apply_cost_phases(Statevector& s, std::span<const double> energies, double gamma);

/// RX(2 beta) = exp(-i beta X) on every qubit:
/// [[cos b, -i sin b], [-i sin b, cos b]].
void mixer_layer(Statevector& s, double beta);

/// Hadamards, then p alternating cost/mixer layers with per-layer angles.
/// The cost Hamiltonian is to_ising(model).
Statevector run_circuit(const QuboModel& model, std::span<const double> gammas,
                        std::span<const double> betas);

/// sum_z |amp(z)|^2 evaluate(model, z) - the shot-free limit of the
/// sampled estimate. At the uniform state this is the spectrum mean.
double expectation_exact(const QuboModel& model, const Statevector& s);

/// Multinomial measurement: `shots` draws from |amp|^2, deterministic for
/// a given seed. Keys are bitstrings with variable 0 leftmost.
std::map<std::string, std::uint64_t> sample(const Statevector& s, int shots, std::uint64_t seed);

struct QaoaConfig {
    int layers = 1;               // p
    double initial_angle = 0.5;   // gamma = beta = 0.5 at the first restart
    int shots = 1000;
    int max_iterations = 200;
    int restarts = 3;
    enum class Expectation { exact, sampled };
    Expectation expectation = Expectation::exact;
    std::uint64_t seed = 0;

    void validate() const;
};

struct QaoaResult {
    std::vector<double> gammas;   // best parameters, one per layer
    std::vector<double> betas;
    std::map<std::string, std::uint64_t> counts;  // final sampled counts
    Sample best;                  // lowest-energy sampled bitstring
    std::vector<double> trace;    // every expectation the optimizer evaluated
};

/// Derivative-free (Nelder-Mead) search over the 2p angles, started from
/// the 0.5 initialization; restarts past the first perturb the start point
/// deterministically from the seed. The best-expectation parameters are
/// sampled once for the final counts.
QaoaResult optimize(const QuboModel& model, const QaoaConfig& cfg = {});

nlohmann::json to_json(const QaoaResult& r);

}  // namespace quboforge
