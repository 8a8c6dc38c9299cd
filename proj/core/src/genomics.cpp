#include "quboforge/genomics.hpp"

#include <fstream>
#include <iostream>

#include "quboforge/errors.hpp"

namespace quboforge {

void MutationTable::add_patient(const std::string& patient) {
    if (patient.empty()) throw InstanceError("empty patient id");
    if (by_patient_.emplace(patient, std::set<std::string>{}).second) {
        patient_order_.push_back(patient);
    }
}

void MutationTable::add(const std::string& patient, const std::string& gene) {
    if (gene.empty()) throw InstanceError("empty gene symbol");
    add_patient(patient);
    by_patient_[patient].insert(gene);
    if (gene_index_.emplace(gene, static_cast<int>(gene_order_.size())).second) {
        gene_order_.push_back(gene);
    }
}

const std::set<std::string>& MutationTable::genes_of(const std::string& patient) const {
    auto it = by_patient_.find(patient);
    if (it == by_patient_.end()) throw InstanceError("unknown patient id " + patient);
    return it->second;
}

MutationTable parse_mutations(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path.string());

    std::string line;
    int line_no = 0;
    if (!std::getline(in, line)) throw ParseError(path.string() + ": empty file");
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != "patient\tgene") {
        throw ParseError(path.string() + ":1: expected header \"patient\\tgene\"");
    }

    MutationTable table;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const std::string where = path.string() + ":" + std::to_string(line_no);
        const auto tab = line.find('\t');
        if (tab == std::string::npos || line.find('\t', tab + 1) != std::string::npos) {
            throw ParseError(where + ": expected exactly two tab-separated columns");
        }
        const std::string patient = line.substr(0, tab);
        const std::string gene = line.substr(tab + 1);
        if (patient.empty()) throw ParseError(where + ": empty patient field");
        if (gene.empty()) throw ParseError(where + ": empty gene field");
        table.add(patient, gene);
    }
    return table;
}

std::vector<std::int64_t> degree_matrix(const MutationTable& t) {
    std::vector<std::int64_t> d(static_cast<std::size_t>(t.gene_count()), 0);
    std::map<std::string, int> index;
    for (int i = 0; i < t.gene_count(); ++i) index[t.genes()[i]] = i;
    for (const auto& patient : t.patient_ids()) {
        for (const auto& gene : t.genes_of(patient)) ++d[index.at(gene)];
    }
    return d;
}

std::vector<std::int64_t> adjacency_matrix(const MutationTable& t) {
    const auto n = static_cast<std::size_t>(t.gene_count());
    std::vector<std::int64_t> a(n * n, 0);
    std::map<std::string, int> index;
    for (int i = 0; i < t.gene_count(); ++i) index[t.genes()[i]] = i;
    for (const auto& patient : t.patient_ids()) {
        const auto& genes = t.genes_of(patient);
        // each patient contributes 1 to every unordered gene pair it carries
        for (auto it = genes.begin(); it != genes.end(); ++it) {
            auto jt = it;
            for (++jt; jt != genes.end(); ++jt) {
                const auto i = static_cast<std::size_t>(index.at(*it));
                const auto j = static_cast<std::size_t>(index.at(*jt));
                ++a[i * n + j];
                ++a[j * n + i];
            }
        }
    }
    return a;
}

PathwayInstance build_pathway_instance(const MutationTable& t, double alpha, int pathway_count) {
    if (t.gene_count() == 0) throw InstanceError("mutation table has no genes");
    if (pathway_count < 1) throw InstanceError("pathway count must be >= 1");
    if (alpha < 1.0) {
        std::cerr << "warning: alpha = " << alpha
                  << " < 1; coverage is meant to outweigh exclusivity\n";
    }
    PathwayInstance inst;
    inst.labels = t.genes();
    inst.degree = degree_matrix(t);
    inst.adjacency = adjacency_matrix(t);
    inst.coverage_weight = alpha;
    inst.orthogonality_weight = alpha;
    inst.pathway_count = pathway_count;
    inst.validate();
    return inst;
}

}  // namespace quboforge
