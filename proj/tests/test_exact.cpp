#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "quboforge/errors.hpp"
#include "quboforge/exact.hpp"
#include "quboforge/graph.hpp"
#include "quboforge/problems.hpp"
#include "quboforge/random.hpp"
#include "support/oracles.hpp"

using namespace quboforge;

namespace {

Graph triangle() { return Graph::from_edges(3, {{0, 1}, {0, 2}, {1, 2}}); }

}  // namespace

TEST_CASE("solve_exact: perfect partition of {1,5,5,11}") {
    const QuboModel m = number_partitioning(PartitionInstance{{1, 5, 5, 11}});
    const SampleSet set = solve_exact(m, 2);
    REQUIRE(set.size() == 2);
    CHECK(set.samples[0].energy == 0.0);
    CHECK(set.samples[1].energy == 0.0);
    CHECK(to_bitstring(set.samples[0].assignment) == "0001");
    CHECK(to_bitstring(set.samples[1].assignment) == "1110");
}

TEST_CASE("solve_exact: triangle max cut has energy -2") {
    const SampleSet set = solve_exact(max_cut(triangle()), 1);
    CHECK(set.lowest().energy == -2.0);
    CHECK(oracles::brute_force_min(max_cut(triangle())) == -2.0);
}

TEST_CASE("solve_exact: constant-only model ties break to all-zeros") {
    QuboModel m(4);
    m.constant = 3.5;
    const SampleSet set = solve_exact(m, 1);
    CHECK(set.lowest().energy == 3.5);
    CHECK(to_bitstring(set.lowest().assignment) == "0000");
}

TEST_CASE("gray-code energies equal direct evaluation everywhere") {
    Rng rng(31);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 1 + static_cast<int>(rng.below(12));
        const QuboModel m = oracles::random_integer_model(rng, n);
        if (m.n > kSpectrumMaxVariables) continue;
        const auto table = spectrum(m);
        const auto direct = oracles::all_energies(m);
        REQUIRE(table.size() == direct.size());
        for (std::size_t z = 0; z < table.size(); ++z) {
            CHECK(table[z] == doctest::Approx(direct[z]).epsilon(1e-12));
        }
    }
}

TEST_CASE("solve_exact with top_k = 2^n is a sorted permutation of spectrum") {
    Rng rng(37);
    const QuboModel m = oracles::random_integer_model(rng, 6);
    const SampleSet set = solve_exact(m, 64);
    auto energies = spectrum(m);
    std::sort(energies.begin(), energies.end());
    REQUIRE(set.size() == 64);
    for (std::size_t k = 0; k < 64; ++k) {
        CHECK(set.samples[k].energy == doctest::Approx(energies[k]).epsilon(1e-12));
    }
    CHECK(std::is_sorted(set.samples.begin(), set.samples.end(), sample_before));
}

TEST_CASE("spectrum spot values") {
    SUBCASE("n=1, linear 3, constant 1") {
        QuboModel m(1);
        m.add_linear(0, 3.0);
        m.constant = 1.0;
        CHECK(spectrum(m) == std::vector<double>{1.0, 4.0});
    }
    SUBCASE("single-edge max cut") {
        const Graph g = Graph::from_edges(2, {{0, 1}});
        CHECK(spectrum(max_cut(g)) == std::vector<double>{0.0, -1.0, -1.0, 0.0});
    }
}

TEST_CASE("capacity limits") {
    QuboModel big(27);
    CHECK_THROWS_AS(solve_exact(big, 1), CapacityError);
    QuboModel wide(17);
    CHECK_THROWS_AS(spectrum(wide), CapacityError);
    QuboModel ok(4);
    CHECK_THROWS_AS(solve_exact(ok, 0), ConfigError);
}

TEST_CASE("top_k larger than the space returns every assignment") {
    QuboModel m(3);
    m.add_linear(1, -1.0);
    const SampleSet set = solve_exact(m, 1000);
    CHECK(set.size() == 8);
}
