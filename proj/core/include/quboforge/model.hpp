#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace quboforge {

/// Binary assignment, one 0/1 value per variable. The spin view of bit b
/// is sigma = 2b - 1.
using Assignment = std::vector<std::uint8_t>;

inline int spin_of(std::uint8_t bit) { return 2 * static_cast<int>(bit) - 1; }

/// Bitstring with variable 0 leftmost ("index 0 = most significant").
/// This is the key format used in counts maps and CLI output, and the
/// string whose lexicographic order breaks energy ties.
std::string to_bitstring(const Assignment& a);
Assignment assignment_from_bitstring(const std::string& s);

/// Assignment encoded as a basis index: bit i of z is variable i, so
/// variable 0 is the least-significant bit. This matches the statevector
/// basis ordering of the QAOA simulator.
Assignment assignment_from_index(std::uint64_t z, int n);
std::uint64_t index_of(const Assignment& a);

/// True if `a` precedes `b` in the bitstring order above.
bool lex_less(const Assignment& a, const Assignment& b);

/// Quadratic unconstrained binary model
///
///   E(x) = sum_{(i,j)} Q_ij x_i x_j + sum_i linear_i x_i + constant
///
/// Canonical (normalized) form stores the strict upper triangle only:
/// every quadratic key satisfies i < j, diagonal entries live in `linear`
/// (x^2 = x), and no zero coefficient is kept. Construction helpers accept
/// arbitrary (i, j) keys; call normalized() to reach canonical form.
/// Evaluation is defined over whatever terms are stored, so it is
/// unchanged by normalization.
struct QuboModel {
    int n = 0;
    std::map<int, double> linear;
    std::map<std::pair<int, int>, double> quadratic;
    double constant = 0.0;

    QuboModel() = default;
    explicit QuboModel(int num_variables);

    /// Adds c to the coefficient at exactly the key given (no folding).
    void add_term(int i, int j, double c);
    void add_linear(int i, double c);

    /// Canonical form: fold (i,i) into linear, (j,i) with j > i into
    /// (i,j) by addition, drop zeros. Idempotent.
    QuboModel normalized() const;
    bool is_normalized() const;

    std::size_t term_count() const { return linear.size() + quadratic.size(); }
};

/// Spin twin of QuboModel. Internal energy convention uses positive signs,
///
///   E(sigma) = sum_{i<j} J_ij sigma_i sigma_j + sum_i h_i sigma_i + offset
///
/// so the QUBO round trip is sign-free. Sources written in the common
/// physics convention E = -sum J ss - sum h s are imported by negating
/// h and J at the file boundary (see read_ising).
struct IsingModel {
    int n = 0;
    std::map<int, double> fields_h;
    std::map<std::pair<int, int>, double> couplings_J;
    double offset = 0.0;

    IsingModel() = default;
    explicit IsingModel(int num_spins);

    void add_field(int i, double c);
    void add_coupling(int i, int j, double c);

    /// Fold (j,i) into (i,j); a diagonal coupling is a constant
    /// (sigma^2 = 1) and folds into the offset. Drops zeros.
    IsingModel normalized() const;

    /// Energy of a spin configuration given as bits (sigma_i = 2 a_i - 1).
    double energy(const Assignment& a) const;
};

/// E(a) for the stored terms, summed in key order: quadratic terms first,
/// then linear, then the constant.
double evaluate(const QuboModel& model, const Assignment& a);

/// Exact substitution x_i = (sigma_i + 1) / 2, term by term. Energies agree
/// pointwise with the source model.
IsingModel to_ising(const QuboModel& q);

/// Exact inverse of to_ising via sigma_i = 2 x_i - 1. For models produced
/// by to_ising the round trip is coefficient-exact.
QuboModel from_ising(const IsingModel& m);

/// Stable 64-bit FNV-1a digest of the canonical form. Used to stamp
/// SampleSets with the model they were solved against.
std::uint64_t fingerprint(const QuboModel& model);

}  // namespace quboforge
