#include "quboforge/model.hpp"

#include <cmath>
#include <cstring>
#include <stdexcept>

#include "quboforge/errors.hpp"

namespace quboforge {

namespace {

void check_index(int i, int n) {
    if (i < 0 || i >= n) {
        throw DimensionError("variable index " + std::to_string(i) + " out of range [0, " +
                             std::to_string(n) + ")");
    }
}

void check_finite(double c) {
    if (!std::isfinite(c)) throw InstanceError("non-finite coefficient");
}

}  // namespace

std::string to_bitstring(const Assignment& a) {
    std::string s;
    s.reserve(a.size());
    for (auto bit : a) s.push_back(bit ? '1' : '0');
    return s;
}

Assignment assignment_from_bitstring(const std::string& s) {
    Assignment a;
    a.reserve(s.size());
    for (char c : s) {
        if (c != '0' && c != '1') throw ParseError("bitstring contains character other than 0/1");
        a.push_back(c == '1' ? 1 : 0);
    }
    return a;
}

Assignment assignment_from_index(std::uint64_t z, int n) {
    Assignment a(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) a[i] = static_cast<std::uint8_t>((z >> i) & 1u);
    return a;
}

std::uint64_t index_of(const Assignment& a) {
    std::uint64_t z = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i]) z |= (std::uint64_t{1} << i);
    }
    return z;
}

bool lex_less(const Assignment& a, const Assignment& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

QuboModel::QuboModel(int num_variables) : n(num_variables) {
    if (num_variables < 1) throw InstanceError("QUBO model needs at least one variable");
}

void QuboModel::add_term(int i, int j, double c) {
    check_index(i, n);
    check_index(j, n);
    check_finite(c);
    if (i == j) {
        linear[i] += c;
    } else {
        quadratic[{i, j}] += c;
    }
}

void QuboModel::add_linear(int i, double c) {
    check_index(i, n);
    check_finite(c);
    linear[i] += c;
}

QuboModel QuboModel::normalized() const {
    QuboModel out(n);
    out.constant = constant;
    for (const auto& [i, c] : linear) {
        check_index(i, n);
        check_finite(c);
        out.linear[i] += c;
    }
    for (const auto& [key, c] : quadratic) {
        auto [i, j] = key;
        check_index(i, n);
        check_index(j, n);
        check_finite(c);
        if (i == j) {
            out.linear[i] += c;  // x^2 = x
        } else if (i < j) {
            out.quadratic[{i, j}] += c;
        } else {
            out.quadratic[{j, i}] += c;
        }
    }
    std::erase_if(out.linear, [](const auto& kv) { return kv.second == 0.0; });
    std::erase_if(out.quadratic, [](const auto& kv) { return kv.second == 0.0; });
    return out;
}

bool QuboModel::is_normalized() const {
    for (const auto& [i, c] : linear) {
        if (i < 0 || i >= n || c == 0.0) return false;
    }
    for (const auto& [key, c] : quadratic) {
        auto [i, j] = key;
        if (i < 0 || j >= n || i >= j || c == 0.0) return false;
    }
    return true;
}

IsingModel::IsingModel(int num_spins) : n(num_spins) {
    if (num_spins < 1) throw InstanceError("Ising model needs at least one spin");
}

void IsingModel::add_field(int i, double c) {
    check_index(i, n);
    check_finite(c);
    fields_h[i] += c;
}

void IsingModel::add_coupling(int i, int j, double c) {
    check_index(i, n);
    check_index(j, n);
    check_finite(c);
    if (i == j) {
        offset += c;  // sigma^2 = 1
    } else if (i < j) {
        couplings_J[{i, j}] += c;
    } else {
        couplings_J[{j, i}] += c;
    }
}

IsingModel IsingModel::normalized() const {
    IsingModel out(n);
    out.offset = offset;
    for (const auto& [i, c] : fields_h) {
        check_index(i, n);
        out.fields_h[i] += c;
    }
    for (const auto& [key, c] : couplings_J) {
        auto [i, j] = key;
        check_index(i, n);
        check_index(j, n);
        if (i == j) {
            out.offset += c;
        } else if (i < j) {
            out.couplings_J[{i, j}] += c;
        } else {
            out.couplings_J[{j, i}] += c;
        }
    }
    std::erase_if(out.fields_h, [](const auto& kv) { return kv.second == 0.0; });
    std::erase_if(out.couplings_J, [](const auto& kv) { return kv.second == 0.0; });
    return out;
}

double IsingModel::energy(const Assignment& a) const {
    if (static_cast<int>(a.size()) != n) {
        throw DimensionError("assignment length " + std::to_string(a.size()) +
                             " does not match spin count " + std::to_string(n));
    }
    double e = 0.0;
    for (const auto& [key, c] : couplings_J) {
        e += c * spin_of(a[key.first]) * spin_of(a[key.second]);
    }
    for (const auto& [i, c] : fields_h) {
        e += c * spin_of(a[i]);
    }
    return e + offset;
}

double evaluate(const QuboModel& model, const Assignment& a) {
    if (static_cast<int>(a.size()) != model.n) {
        throw DimensionError("assignment length " + std::to_string(a.size()) +
                             " does not match variable count " + std::to_string(model.n));
    }
    double e = 0.0;
    for (const auto& [key, c] : model.quadratic) {
        if (a[key.first] && a[key.second]) e += c;
    }
    for (const auto& [i, c] : model.linear) {
        if (a[i]) e += c;
    }
    return e + model.constant;
}

IsingModel to_ising(const QuboModel& q) {
    const QuboModel m = q.is_normalized() ? q : q.normalized();
    IsingModel out(m.n);
    out.offset = m.constant;
    // Q_ij x_i x_j = Q_ij/4 (s_i s_j + s_i + s_j + 1)
    for (const auto& [key, c] : m.quadratic) {
        const double quarter = c / 4.0;
        out.couplings_J[key] += quarter;
        out.fields_h[key.first] += quarter;
        out.fields_h[key.second] += quarter;
        out.offset += quarter;
    }
    // Q_ii x_i = Q_ii/2 (s_i + 1)
    for (const auto& [i, c] : m.linear) {
        out.fields_h[i] += c / 2.0;
        out.offset += c / 2.0;
    }
    std::erase_if(out.fields_h, [](const auto& kv) { return kv.second == 0.0; });
    std::erase_if(out.couplings_J, [](const auto& kv) { return kv.second == 0.0; });
    return out;
}

QuboModel from_ising(const IsingModel& m) {
    const IsingModel s = m.normalized();
    QuboModel out(s.n);
    out.constant = s.offset;
    // J_ij s_i s_j = J_ij (4 x_i x_j - 2 x_i - 2 x_j + 1)
    for (const auto& [key, c] : s.couplings_J) {
        out.quadratic[key] += 4.0 * c;
        out.linear[key.first] -= 2.0 * c;
        out.linear[key.second] -= 2.0 * c;
        out.constant += c;
    }
    // h_i s_i = h_i (2 x_i - 1)
    for (const auto& [i, c] : s.fields_h) {
        out.linear[i] += 2.0 * c;
        out.constant -= c;
    }
    std::erase_if(out.linear, [](const auto& kv) { return kv.second == 0.0; });
    std::erase_if(out.quadratic, [](const auto& kv) { return kv.second == 0.0; });
    return out;
}

namespace {

struct Fnv1a {
    std::uint64_t state = 0xCBF29CE484222325ull;

    void feed_bytes(const void* data, std::size_t len) {
        const auto* p = static_cast<const unsigned char*>(data);
        for (std::size_t k = 0; k < len; ++k) {
            state ^= p[k];
            state *= 0x100000001B3ull;
        }
    }
    void feed(std::int64_t v) { feed_bytes(&v, sizeof v); }
    void feed(double v) {
        std::uint64_t bits;
        std::memcpy(&bits, &v, sizeof bits);
        feed_bytes(&bits, sizeof bits);
    }
};

}  // namespace

std::uint64_t fingerprint(const QuboModel& model) {
    const QuboModel m = model.is_normalized() ? model : model.normalized();
    Fnv1a h;
    h.feed(std::int64_t{m.n});
    h.feed(m.constant);
    h.feed(static_cast<std::int64_t>(m.linear.size()));
    for (const auto& [i, c] : m.linear) {
        h.feed(std::int64_t{i});
        h.feed(c);
    }
    h.feed(static_cast<std::int64_t>(m.quadratic.size()));
    for (const auto& [key, c] : m.quadratic) {
        h.feed(std::int64_t{key.first});
        h.feed(std::int64_t{key.second});
        h.feed(c);
    }
    return h.state;
}

}  // namespace quboforge
