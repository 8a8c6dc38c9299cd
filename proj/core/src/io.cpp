#include "quboforge/io.hpp"

#include <cmath>
#include <fstream>
#include <set>

#include "quboforge/errors.hpp"

namespace quboforge {

namespace {

nlohmann::json parse_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path.string());
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
}

void reject_unknown_keys(const nlohmann::json& j, const std::set<std::string>& allowed,
                         const std::string& origin) {
    for (const auto& [key, value] : j.items()) {
        (void)value;
        if (!allowed.contains(key)) throw ParseError(origin + ": unknown key \"" + key + "\"");
    }
}

int read_n(const nlohmann::json& j, const std::string& origin) {
    if (!j.is_object()) throw ParseError(origin + ": top level must be an object");
    if (!j.contains("n")) throw ParseError(origin + ": missing field \"n\"");
    if (!j["n"].is_number_integer()) throw ParseError(origin + ": field \"n\" must be an integer");
    const int n = j["n"].get<int>();
    if (n < 1) throw ParseError(origin + ": field \"n\" must be >= 1");
    return n;
}

double read_constant(const nlohmann::json& j, const char* field, const std::string& origin) {
    if (!j.contains(field)) return 0.0;
    if (!j[field].is_number()) {
        throw ParseError(origin + ": field \"" + field + "\" must be a number");
    }
    const double c = j[field].get<double>();
    if (!std::isfinite(c)) throw ParseError(origin + ": field \"" + field + "\" is not finite");
    return c;
}

/// Shared reader for the [[i, j, coeff], ...] term lists.
template <typename Emit>
void read_terms(const nlohmann::json& j, int n, const std::string& origin, Emit emit) {
    if (!j.contains("terms")) return;
    const auto& terms = j["terms"];
    if (!terms.is_array()) throw ParseError(origin + ": field \"terms\" must be an array");
    std::set<std::pair<int, int>> seen;
    for (std::size_t k = 0; k < terms.size(); ++k) {
        const std::string where = origin + ": terms[" + std::to_string(k) + "]";
        const auto& t = terms[k];
        if (!t.is_array() || t.size() != 3) throw ParseError(where + " must be [i, j, coeff]");
        if (!t[0].is_number_integer() || !t[1].is_number_integer()) {
            throw ParseError(where + ": indices must be integers");
        }
        const int i = t[0].get<int>();
        const int jj = t[1].get<int>();
        if (i < 0 || jj < 0 || i >= n || jj >= n) {
            throw ParseError(where + ": index out of range [0, " + std::to_string(n) + ")");
        }
        if (i > jj) throw ParseError(where + ": indices must satisfy i <= j");
        if (!t[2].is_number()) throw ParseError(where + ": coefficient must be a number");
        const double c = t[2].get<double>();
        if (!std::isfinite(c)) throw ParseError(where + ": coefficient is not finite");
        if (!seen.insert({i, jj}).second) {
            throw ParseError(where + ": duplicate term (" + std::to_string(i) + ", " +
                             std::to_string(jj) + ")");
        }
        emit(i, jj, c);
    }
}

}  // namespace

QuboModel qubo_from_json(const nlohmann::json& j, const std::string& origin) {
    const int n = read_n(j, origin);
    reject_unknown_keys(j, {"n", "constant", "terms"}, origin);
    QuboModel model(n);
    model.constant = read_constant(j, "constant", origin);
    read_terms(j, n, origin, [&](int i, int jj, double c) { model.add_term(i, jj, c); });
    return model.normalized();
}

nlohmann::json qubo_to_json(const QuboModel& model) {
    const QuboModel m = model.is_normalized() ? model : model.normalized();
    nlohmann::json terms = nlohmann::json::array();
    // Linear terms first as [i, i, c], then the strict upper triangle,
    // both in index order: a canonical, reproducible layout.
    for (const auto& [i, c] : m.linear) terms.push_back({i, i, c});
    for (const auto& [key, c] : m.quadratic) terms.push_back({key.first, key.second, c});
    return {{"n", m.n}, {"constant", m.constant}, {"terms", terms}};
}

QuboModel read_qubo(const std::filesystem::path& path) {
    return qubo_from_json(parse_file(path), path.string());
}

void write_qubo(const QuboModel& model, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open " + path.string() + " for writing");
    out << qubo_to_json(model).dump(2) << '\n';
    if (!out) throw ParseError("write to " + path.string() + " failed");
}

IsingModel ising_from_json(const nlohmann::json& j, const std::string& origin) {
    const int n = read_n(j, origin);
    reject_unknown_keys(j, {"n", "offset", "terms", "from_paper_convention"}, origin);
    bool negate = false;
    if (j.contains("from_paper_convention")) {
        if (!j["from_paper_convention"].is_boolean()) {
            throw ParseError(origin + ": field \"from_paper_convention\" must be a boolean");
        }
        negate = j["from_paper_convention"].get<bool>();
    }
    IsingModel model(n);
    model.offset = read_constant(j, "offset", origin);
    const double sign = negate ? -1.0 : 1.0;
    read_terms(j, n, origin, [&](int i, int jj, double c) {
        if (i == jj) {
            model.add_field(i, sign * c);
        } else {
            model.add_coupling(i, jj, sign * c);
        }
    });
    return model.normalized();
}

IsingModel read_ising(const std::filesystem::path& path) {
    return ising_from_json(parse_file(path), path.string());
}

}  // namespace quboforge
