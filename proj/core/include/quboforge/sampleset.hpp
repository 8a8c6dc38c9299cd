#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "quboforge/model.hpp"

namespace quboforge {

/// One solver output: an assignment, its energy under the model that
/// produced it, how many times it was seen, and which solver emitted it.
struct Sample {
    Assignment assignment;
    double energy = 0.0;
    std::uint64_t multiplicity = 1;
    std::string source;
};

/// Energy-sorted, deduplicated collection of samples. Ties are broken by
/// the lexicographically smallest bitstring (variable 0 most significant),
/// so the first element is a deterministic "best".
struct SampleSet {
    std::vector<Sample> samples;
    std::uint64_t model_fingerprint = 0;
    nlohmann::json metadata;

    /// Merges duplicate assignments (multiplicities add), sorts by
    /// (energy, bitstring).
    static SampleSet collect(std::vector<Sample> raw, std::uint64_t fingerprint,
                             nlohmann::json metadata);

    bool empty() const { return samples.empty(); }
    std::size_t size() const { return samples.size(); }

    /// First sample of the sorted set.
    const Sample& lowest() const;
};

/// True if `a` ranks before `b`: lower energy first, lexicographically
/// smaller bitstring among equal energies.
bool sample_before(const Sample& a, const Sample& b);

nlohmann::json to_json(const SampleSet& s);

}  // namespace quboforge
