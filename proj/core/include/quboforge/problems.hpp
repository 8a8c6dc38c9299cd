#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "quboforge/graph.hpp"
#include "quboforge/model.hpp"

namespace quboforge {

// ---------------------------------------------------------------------------
// Number partitioning

/// Set of positive integers to split into two equal-sum halves.
struct PartitionInstance {
    std::vector<std::int64_t> values;

    std::int64_t total() const;
    void validate() const;
};

/// QUBO whose value at any assignment is exactly d^2, the squared
/// difference of the two subset sums:
///
///   linear_i = 4 s_i (s_i - c),  quadratic_{i<j} = 8 s_i s_j,  constant = c^2
///
/// where c is the total. The minimum is 0 iff a perfect partition exists.
/// Integer inputs give exactly representable coefficients.
QuboModel number_partitioning(const PartitionInstance& inst);

struct PartitionDecoding {
    std::vector<std::int64_t> set_a;  // values with bit 1
    std::vector<std::int64_t> set_b;
    std::int64_t difference = 0;  // |sum(A) - sum(B)|
};
PartitionDecoding decode_partition(const PartitionInstance& inst, const Assignment& a);

// ---------------------------------------------------------------------------
// Max-Cut

/// Per edge (i, j): quadratic += 2, linear_i -= 1, linear_j -= 1. The model
/// value at any assignment equals -(cut size).
QuboModel max_cut(const Graph& g);

struct CutDecoding {
    std::vector<int> set_a;  // nodes with bit 1
    std::vector<int> set_b;
    std::int64_t cut_size = 0;
};
CutDecoding decode_cut(const Graph& g, const Assignment& a);

// ---------------------------------------------------------------------------
// Minimum vertex cover

/// linear_i = 1 - P deg(i), quadratic = P per edge, constant = P |E|.
/// The model value equals |selected| + P * (uncovered edge count).
QuboModel min_vertex_cover(const Graph& g, double penalty);

struct CoverCheck {
    bool is_cover = true;
    std::vector<std::pair<int, int>> uncovered;
};
/// Independent cover oracle: an edge is covered iff at least one endpoint
/// is selected.
CoverCheck verify_cover(const Graph& g, const Assignment& a);

// ---------------------------------------------------------------------------
// Cancer pathways

/// Coverage/exclusivity data for pathway identification: D counts patients
/// per gene (diagonal), A counts patients per co-mutated gene pair
/// (symmetric, zero diagonal). adjacency is stored row-major n x n.
///
/// coverage_weight is the alpha multiplying the D term of the
/// single-pathway objective; orthogonality_weight is the alpha multiplying
/// Q_orth in the multi-pathway objective. The source formulation reuses
/// one symbol for both, so they default to the same value but stay
/// independently configurable.
struct PathwayInstance {
    std::vector<std::int64_t> degree;
    std::vector<std::int64_t> adjacency;
    std::vector<std::string> labels;
    double coverage_weight = 1.0;
    double orthogonality_weight = 1.0;
    int pathway_count = 1;

    int gene_count() const { return static_cast<int>(labels.size()); }
    std::int64_t adj(int i, int j) const { return adjacency[static_cast<std::size_t>(i) * labels.size() + j]; }
    void validate() const;
};

/// Single pathway: x'Ax - alpha x'Dx, i.e. quadratic_{i<j} = 2 a_ij,
/// linear_i = -alpha d_ii.
QuboModel cancer_single(const PathwayInstance& inst);

/// k >= 2 pathways over k*n variables, variable (p, i) at index p*n + i.
/// With L = A + D, the model is the symmetric fold of
///
///   Q_main + alpha Q_orth,  Q_main = -I_k (x) L,  Q_orth = (J_k - I_k) (x) I_n.
///
/// Note the sign: -L includes -A, so the multi-pathway objective rewards
/// the co-occurrence term that the single-pathway objective penalizes.
/// This mirrors the source formulation verbatim; see README.
QuboModel cancer_multi(const PathwayInstance& inst);

/// Slices the k*n bitstring into k blocks and maps set bits to gene labels
/// in index order.
std::vector<std::vector<std::string>> decode_pathways(const PathwayInstance& inst,
                                                      const Assignment& a);

// ---------------------------------------------------------------------------
// Order partitioning

/// n stocks worth q_j dollars each (total T) and m risk-factor exposures
/// p_ij, to be split into two books balancing both money and every factor.
struct OrderPartitionInstance {
    std::vector<std::string> stock_names;
    std::vector<double> stock_values;               // q_j > 0
    std::vector<std::vector<double>> risk;          // m rows of n exposures
    double weight_money = 1.0;                      // a
    double weight_risk = 1.0;                       // b

    int stock_count() const { return static_cast<int>(stock_values.size()); }
    int factor_count() const { return static_cast<int>(risk.size()); }
    double total() const;
    void validate() const;
};

/// Expansion of  a (T - 2 sum_j q_j x_j)^2 + b sum_i (sum_j p_ij (2 x_j - 1))^2
/// into canonical form.
QuboModel order_partitioning(const OrderPartitionInstance& inst);

struct OrderPartitionDecoding {
    std::vector<int> set_a;  // stock indices with bit 1
    std::vector<int> set_b;
    double money_gap = 0.0;                 // |sum_A q - sum_B q|
    std::vector<double> factor_gaps;        // per factor |sum_A p - sum_B p|
};
OrderPartitionDecoding decode_order_partition(const OrderPartitionInstance& inst,
                                              const Assignment& a);

/// Direct, unexpanded objective; the oracle the generator is tested against.
double order_partition_objective(const OrderPartitionInstance& inst, const Assignment& a);

// ---------------------------------------------------------------------------
// Instance files

/// Stocks file: CSV with header "stock,value", one stock per row.
void read_stocks_csv(const std::filesystem::path& path, OrderPartitionInstance& inst);

/// Risk file: CSV whose header row is the stock names (matching the stocks
/// file order) and whose data rows are one factor each.
void read_risks_csv(const std::filesystem::path& path, OrderPartitionInstance& inst);

}  // namespace quboforge
