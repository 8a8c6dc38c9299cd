#include "quboforge/exact.hpp"

#include <algorithm>
#include <bit>
#include <queue>

#include "quboforge/detail/flip_view.hpp"
#include "quboforge/errors.hpp"

namespace quboforge {

namespace {

std::uint64_t reverse_bits(std::uint64_t z, int n) {
    std::uint64_t r = 0;
    for (int i = 0; i < n; ++i) {
        r = (r << 1) | ((z >> i) & 1u);
    }
    return r;
}

/// Walks assignments 0, g(1), g(2), ... with g(t) = t ^ (t >> 1); the bit
/// flipped between g(t-1) and g(t) is the trailing-zero count of t.
template <typename Visit>
void gray_walk(const QuboModel& m, Visit visit) {
    const detail::FlipView view(m);
    const std::uint64_t count = std::uint64_t{1} << m.n;
    Assignment bits(static_cast<std::size_t>(m.n), 0);
    std::uint64_t z = 0;
    double energy = m.constant;
    visit(z, energy);
    for (std::uint64_t t = 1; t < count; ++t) {
        const int bit = std::countr_zero(t);
        energy += view.flip_delta(bits, bit);
        bits[bit] ^= 1;
        z ^= (std::uint64_t{1} << bit);
        visit(z, energy);
    }
}

}  // namespace

namespace detail {

std::vector<double> energy_table(const QuboModel& model, int limit) {
    if (model.n > limit) {
        throw CapacityError("n = " + std::to_string(model.n) + " exceeds the 2^" +
                            std::to_string(limit) + " enumeration cap");
    }
    const QuboModel m = model.is_normalized() ? model : model.normalized();
    std::vector<double> energies(std::size_t{1} << m.n);
    gray_walk(m, [&](std::uint64_t z, double e) { energies[z] = e; });
    return energies;
}

}  // namespace detail

SampleSet solve_exact(const QuboModel& model, std::size_t top_k) {
    if (model.n > kExactMaxVariables) {
        throw CapacityError("n = " + std::to_string(model.n) + " exceeds the exact solver cap of " +
                            std::to_string(kExactMaxVariables) + "; use simulated annealing");
    }
    if (top_k < 1) throw ConfigError("top_k must be >= 1");
    const QuboModel m = model.is_normalized() ? model : model.normalized();

    struct Entry {
        double energy;
        std::uint64_t zrev;  // bit-reversed index: numeric order == bitstring order
        std::uint64_t z;
    };
    // Max-heap on (energy, bitstring): top() is the worst kept entry.
    auto better = [](const Entry& a, const Entry& b) {
        if (a.energy != b.energy) return a.energy < b.energy;
        return a.zrev < b.zrev;
    };
    std::priority_queue<Entry, std::vector<Entry>, decltype(better)> heap(better);

    gray_walk(m, [&](std::uint64_t z, double e) {
        const Entry entry{e, reverse_bits(z, m.n), z};
        if (heap.size() < top_k) {
            heap.push(entry);
        } else if (better(entry, heap.top())) {
            heap.pop();
            heap.push(entry);
        }
    });

    std::vector<Sample> samples;
    samples.reserve(heap.size());
    while (!heap.empty()) {
        Assignment a = assignment_from_index(heap.top().z, m.n);
        // re-evaluate directly: incremental drift must not leak into results
        const double energy = evaluate(m, a);
        samples.push_back(Sample{std::move(a), energy, 1, "exact"});
        heap.pop();
    }
    return SampleSet::collect(std::move(samples), fingerprint(m),
                              {{"solver", "exact"}, {"top_k", top_k}});
}

std::vector<double> spectrum(const QuboModel& model) {
    return detail::energy_table(model, kSpectrumMaxVariables);
}

}  // namespace quboforge
