#include "quboforge/problems.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "quboforge/errors.hpp"

namespace quboforge {

// ---------------------------------------------------------------------------
// Number partitioning

std::int64_t PartitionInstance::total() const {
    std::int64_t c = 0;
    for (auto v : values) c += v;
    return c;
}

void PartitionInstance::validate() const {
    if (values.empty()) throw InstanceError("partition instance has no values");
    for (auto v : values) {
        if (v < 1) throw InstanceError("partition values must be positive, got " + std::to_string(v));
    }
}

QuboModel number_partitioning(const PartitionInstance& inst) {
    inst.validate();
    const int n = static_cast<int>(inst.values.size());
    const auto c = static_cast<double>(inst.total());
    QuboModel m(n);
    m.constant = c * c;
    for (int i = 0; i < n; ++i) {
        const auto si = static_cast<double>(inst.values[i]);
        m.add_linear(i, 4.0 * si * (si - c));
        for (int j = i + 1; j < n; ++j) {
            // full symmetric s_i s_j folded into the upper triangle
            m.add_term(i, j, 8.0 * si * static_cast<double>(inst.values[j]));
        }
    }
    return m.normalized();
}

PartitionDecoding decode_partition(const PartitionInstance& inst, const Assignment& a) {
    if (a.size() != inst.values.size()) {
        throw DimensionError("assignment length does not match value count");
    }
    PartitionDecoding d;
    std::int64_t sum_a = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i]) {
            d.set_a.push_back(inst.values[i]);
            sum_a += inst.values[i];
        } else {
            d.set_b.push_back(inst.values[i]);
        }
    }
    d.difference = std::abs(inst.total() - 2 * sum_a);
    return d;
}

// ---------------------------------------------------------------------------
// Max-Cut

QuboModel max_cut(const Graph& g) {
    if (g.node_count < 1) throw InstanceError("graph has no nodes");
    QuboModel m(g.node_count);
    for (const auto& [u, v] : g.edges) {
        m.add_term(u, v, 2.0);
        m.add_linear(u, -1.0);
        m.add_linear(v, -1.0);
    }
    return m.normalized();
}

CutDecoding decode_cut(const Graph& g, const Assignment& a) {
    if (static_cast<int>(a.size()) != g.node_count) {
        throw DimensionError("assignment length does not match node count");
    }
    CutDecoding d;
    for (int v = 0; v < g.node_count; ++v) (a[v] ? d.set_a : d.set_b).push_back(v);
    for (const auto& [u, v] : g.edges) {
        if (a[u] != a[v]) ++d.cut_size;
    }
    return d;
}

// ---------------------------------------------------------------------------
// Minimum vertex cover

QuboModel min_vertex_cover(const Graph& g, double penalty) {
    if (!(penalty > 0.0)) throw ConfigError("vertex cover penalty must be > 0");
    if (g.node_count < 1) throw InstanceError("graph has no nodes");
    QuboModel m(g.node_count);
    for (int v = 0; v < g.node_count; ++v) m.add_linear(v, 1.0);
    // P per edge: + P - P x_u - P x_v + P x_u x_v
    for (const auto& [u, v] : g.edges) {
        m.constant += penalty;
        m.add_linear(u, -penalty);
        m.add_linear(v, -penalty);
        m.add_term(u, v, penalty);
    }
    return m.normalized();
}

CoverCheck verify_cover(const Graph& g, const Assignment& a) {
    if (static_cast<int>(a.size()) != g.node_count) {
        throw DimensionError("assignment length does not match node count");
    }
    CoverCheck c;
    for (const auto& e : g.edges) {
        if (!a[e.first] && !a[e.second]) c.uncovered.push_back(e);
    }
    c.is_cover = c.uncovered.empty();
    return c;
}

// ---------------------------------------------------------------------------
// Cancer pathways

void PathwayInstance::validate() const {
    const auto n = labels.size();
    if (n == 0) throw InstanceError("pathway instance has no genes");
    if (degree.size() != n) throw InstanceError("degree matrix size does not match label count");
    if (adjacency.size() != n * n) {
        throw InstanceError("adjacency matrix size does not match label count");
    }
    for (auto d : degree) {
        if (d < 0) throw InstanceError("negative degree entry");
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (adj(static_cast<int>(i), static_cast<int>(i)) != 0) {
            throw InstanceError("adjacency diagonal must be zero");
        }
        for (std::size_t j = 0; j < i; ++j) {
            const auto v = adj(static_cast<int>(i), static_cast<int>(j));
            if (v < 0) throw InstanceError("negative adjacency entry");
            if (v != adj(static_cast<int>(j), static_cast<int>(i))) {
                throw InstanceError("adjacency matrix is not symmetric");
            }
        }
    }
    if (pathway_count < 1) throw InstanceError("pathway count must be >= 1");
}

QuboModel cancer_single(const PathwayInstance& inst) {
    inst.validate();
    if (inst.pathway_count != 1) {
        throw InstanceError("cancer_single expects a single-pathway instance");
    }
    const int n = inst.gene_count();
    QuboModel m(n);
    for (int i = 0; i < n; ++i) {
        m.add_linear(i, -inst.coverage_weight * static_cast<double>(inst.degree[i]));
        for (int j = i + 1; j < n; ++j) {
            const auto aij = inst.adj(i, j);
            if (aij != 0) m.add_term(i, j, 2.0 * static_cast<double>(aij));
        }
    }
    return m.normalized();
}

QuboModel cancer_multi(const PathwayInstance& inst) {
    inst.validate();
    const int k = inst.pathway_count;
    if (k < 2) throw InstanceError("cancer_multi expects pathway count >= 2; use cancer_single");
    const int n = inst.gene_count();
    QuboModel m(k * n);
    // Q_main = -I_k (x) L with L = A + D: within each pathway block,
    // diagonal -d_ii and off-diagonal -a_ij (folded to -2 a_ij).
    for (int p = 0; p < k; ++p) {
        const int base = p * n;
        for (int i = 0; i < n; ++i) {
            m.add_linear(base + i, -static_cast<double>(inst.degree[i]));
            for (int j = i + 1; j < n; ++j) {
                const auto aij = inst.adj(i, j);
                if (aij != 0) m.add_term(base + i, base + j, -2.0 * static_cast<double>(aij));
            }
        }
    }
    // alpha Q_orth = alpha (J_k - I_k) (x) I_n: same gene in two different
    // pathways, folded to 2 alpha per unordered block pair.
    for (int p = 0; p < k; ++p) {
        for (int q = p + 1; q < k; ++q) {
            for (int i = 0; i < n; ++i) {
                m.add_term(p * n + i, q * n + i, 2.0 * inst.orthogonality_weight);
            }
        }
    }
    return m.normalized();
}

std::vector<std::vector<std::string>> decode_pathways(const PathwayInstance& inst,
                                                      const Assignment& a) {
    const int n = inst.gene_count();
    const int k = inst.pathway_count;
    if (static_cast<int>(a.size()) != k * n) {
        throw DimensionError("assignment length does not match pathway_count * gene_count");
    }
    std::vector<std::vector<std::string>> pathways(static_cast<std::size_t>(k));
    for (int p = 0; p < k; ++p) {
        for (int i = 0; i < n; ++i) {
            if (a[p * n + i]) pathways[p].push_back(inst.labels[i]);
        }
    }
    return pathways;
}

// ---------------------------------------------------------------------------
// Order partitioning

double OrderPartitionInstance::total() const {
    double t = 0.0;
    for (double q : stock_values) t += q;
    return t;
}

void OrderPartitionInstance::validate() const {
    if (stock_values.empty()) throw InstanceError("order partition instance has no stocks");
    for (double q : stock_values) {
        if (!(q > 0.0) || !std::isfinite(q)) {
            throw InstanceError("stock values must be positive finite numbers");
        }
    }
    if (!stock_names.empty() && stock_names.size() != stock_values.size()) {
        throw InstanceError("stock name count does not match value count");
    }
    if (risk.empty()) throw InstanceError("order partition instance has no risk factors");
    for (const auto& row : risk) {
        if (row.size() != stock_values.size()) {
            throw InstanceError("risk matrix row length does not match stock count");
        }
        for (double p : row) {
            if (!std::isfinite(p)) throw InstanceError("non-finite risk exposure");
        }
    }
    if (!(weight_money > 0.0) || !(weight_risk >= 0.0)) {
        throw InstanceError("weights must satisfy a > 0, b >= 0");
    }
}

QuboModel order_partitioning(const OrderPartitionInstance& inst) {
    inst.validate();
    const int n = inst.stock_count();
    const double a = inst.weight_money;
    const double b = inst.weight_risk;
    const double t = inst.total();
    QuboModel m(n);

    // a (T - 2 sum q_j x_j)^2 = a T^2 + sum_j a (4 q_j^2 - 4 T q_j) x_j
    //                           + sum_{j<l} 8 a q_j q_l x_j x_l
    m.constant += a * t * t;
    for (int j = 0; j < n; ++j) {
        const double qj = inst.stock_values[j];
        m.add_linear(j, a * (4.0 * qj * qj - 4.0 * t * qj));
        for (int l = j + 1; l < n; ++l) {
            m.add_term(j, l, 8.0 * a * qj * inst.stock_values[l]);
        }
    }

    // b sum_i (sum_j p_ij (2 x_j - 1))^2, one factor at a time with
    // R_i = sum_j p_ij:
    //   b R_i^2 + sum_j b (4 p_ij^2 - 4 R_i p_ij) x_j + sum_{j<l} 8 b p_ij p_il x_j x_l
    for (const auto& row : inst.risk) {
        double r = 0.0;
        for (double p : row) r += p;
        m.constant += b * r * r;
        for (int j = 0; j < n; ++j) {
            const double pj = row[j];
            m.add_linear(j, b * (4.0 * pj * pj - 4.0 * r * pj));
            for (int l = j + 1; l < n; ++l) {
                m.add_term(j, l, 8.0 * b * pj * row[l]);
            }
        }
    }
    return m.normalized();
}

OrderPartitionDecoding decode_order_partition(const OrderPartitionInstance& inst,
                                              const Assignment& a) {
    if (static_cast<int>(a.size()) != inst.stock_count()) {
        throw DimensionError("assignment length does not match stock count");
    }
    OrderPartitionDecoding d;
    double sum_a = 0.0;
    for (int j = 0; j < inst.stock_count(); ++j) {
        if (a[j]) {
            d.set_a.push_back(j);
            sum_a += inst.stock_values[j];
        } else {
            d.set_b.push_back(j);
        }
    }
    d.money_gap = std::abs(inst.total() - 2.0 * sum_a);
    d.factor_gaps.reserve(inst.risk.size());
    for (const auto& row : inst.risk) {
        double gap = 0.0;
        for (int j = 0; j < inst.stock_count(); ++j) gap += row[j] * spin_of(a[j]);
        d.factor_gaps.push_back(std::abs(gap));
    }
    return d;
}

double order_partition_objective(const OrderPartitionInstance& inst, const Assignment& a) {
    if (static_cast<int>(a.size()) != inst.stock_count()) {
        throw DimensionError("assignment length does not match stock count");
    }
    double money = inst.total();
    for (int j = 0; j < inst.stock_count(); ++j) {
        if (a[j]) money -= 2.0 * inst.stock_values[j];
    }
    double value = inst.weight_money * money * money;
    for (const auto& row : inst.risk) {
        double h = 0.0;
        for (int j = 0; j < inst.stock_count(); ++j) h += row[j] * spin_of(a[j]);
        value += inst.weight_risk * h * h;
    }
    return value;
}

// ---------------------------------------------------------------------------
// Instance files

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream ss(line);
    while (std::getline(ss, field, ',')) {
        if (!field.empty() && field.back() == '\r') field.pop_back();
        fields.push_back(field);
    }
    if (!line.empty() && line.back() == ',') fields.emplace_back();
    return fields;
}

double parse_number(const std::string& s, const std::string& where) {
    std::size_t pos = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &pos);
    } catch (const std::exception&) {
        throw ParseError(where + ": expected a number, got \"" + s + "\"");
    }
    if (pos != s.size()) throw ParseError(where + ": trailing characters in number \"" + s + "\"");
    if (!std::isfinite(v)) throw ParseError(where + ": non-finite number");
    return v;
}

}  // namespace

void read_stocks_csv(const std::filesystem::path& path, OrderPartitionInstance& inst) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path.string());
    std::string line;
    int line_no = 0;
    if (!std::getline(in, line)) throw ParseError(path.string() + ": empty file");
    ++line_no;
    if (split_csv_line(line) != std::vector<std::string>{"stock", "value"}) {
        throw ParseError(path.string() + ":1: expected header \"stock,value\"");
    }
    inst.stock_names.clear();
    inst.stock_values.clear();
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        const std::string where = path.string() + ":" + std::to_string(line_no);
        auto fields = split_csv_line(line);
        if (fields.size() != 2) throw ParseError(where + ": expected two fields");
        if (fields[0].empty()) throw ParseError(where + ": empty stock name");
        inst.stock_names.push_back(fields[0]);
        inst.stock_values.push_back(parse_number(fields[1], where));
    }
    if (inst.stock_values.empty()) throw ParseError(path.string() + ": no stock rows");
}

void read_risks_csv(const std::filesystem::path& path, OrderPartitionInstance& inst) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path.string());
    std::string line;
    int line_no = 0;
    if (!std::getline(in, line)) throw ParseError(path.string() + ": empty file");
    ++line_no;
    const auto header = split_csv_line(line);
    if (header != inst.stock_names) {
        throw ParseError(path.string() + ":1: header row must list the stock names in the stocks"
                         " file order");
    }
    inst.risk.clear();
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        const std::string where = path.string() + ":" + std::to_string(line_no);
        auto fields = split_csv_line(line);
        if (fields.size() != header.size()) {
            throw ParseError(where + ": expected " + std::to_string(header.size()) + " fields, got " +
                             std::to_string(fields.size()));
        }
        std::vector<double> row;
        row.reserve(fields.size());
        for (const auto& f : fields) row.push_back(parse_number(f, where));
        inst.risk.push_back(std::move(row));
    }
    if (inst.risk.empty()) throw ParseError(path.string() + ": no factor rows");
}

}  // namespace quboforge
