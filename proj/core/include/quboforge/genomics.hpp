#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "quboforge/problems.hpp"

namespace quboforge {

/// Patient -> mutated-gene-set map with a stable gene index: genes are
/// numbered by first appearance in insertion order, which for files is
/// file order. The variable <-> gene mapping used by decoders depends on
/// this index being reproducible.
class MutationTable {
 public:
    /// Records one (patient, gene) incidence; duplicates collapse.
    void add(const std::string& patient, const std::string& gene);

    /// Registers a patient with no incidences (contributes nothing to the
    /// matrices but is kept for bookkeeping).
    void add_patient(const std::string& patient);

    const std::vector<std::string>& genes() const { return gene_order_; }
    int gene_count() const { return static_cast<int>(gene_order_.size()); }
    std::size_t patient_count() const { return patient_order_.size(); }
    const std::vector<std::string>& patient_ids() const { return patient_order_; }
    const std::set<std::string>& genes_of(const std::string& patient) const;

 private:
    std::vector<std::string> patient_order_;
    std::map<std::string, std::set<std::string>> by_patient_;
    std::vector<std::string> gene_order_;
    std::map<std::string, int> gene_index_;
};

/// Mutation TSV: UTF-8, header line "patient\tgene", one incidence per
/// line, LF line endings, no quoting.
MutationTable parse_mutations(const std::filesystem::path& path);

/// d_ii = number of patients whose gene set contains gene i.
std::vector<std::int64_t> degree_matrix(const MutationTable& t);

/// a_ij = number of patients carrying both gene i and gene j (i != j);
/// zero diagonal; symmetric. Row-major n x n.
std::vector<std::int64_t> adjacency_matrix(const MutationTable& t);

/// Assembles matrices and labels into a PathwayInstance. Both alpha roles
/// (coverage and orthogonality) are set to `alpha`; adjust the fields
/// afterwards to separate them. alpha < 1 gets a stderr warning since
/// coverage is meant to outweigh exclusivity.
PathwayInstance build_pathway_instance(const MutationTable& t, double alpha, int pathway_count);

}  // namespace quboforge
