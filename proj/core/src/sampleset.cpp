#include "quboforge/sampleset.hpp"

#include <algorithm>
#include <map>

#include "quboforge/errors.hpp"

namespace quboforge {

bool sample_before(const Sample& a, const Sample& b) {
    if (a.energy != b.energy) return a.energy < b.energy;
    return lex_less(a.assignment, b.assignment);
}

SampleSet SampleSet::collect(std::vector<Sample> raw, std::uint64_t fp, nlohmann::json metadata) {
    std::map<Assignment, Sample> merged;
    for (auto& s : raw) {
        auto it = merged.find(s.assignment);
        if (it == merged.end()) {
            merged.emplace(s.assignment, std::move(s));
        } else {
            it->second.multiplicity += s.multiplicity;
        }
    }
    SampleSet out;
    out.model_fingerprint = fp;
    out.metadata = std::move(metadata);
    out.samples.reserve(merged.size());
    for (auto& [bits, s] : merged) out.samples.push_back(std::move(s));
    std::sort(out.samples.begin(), out.samples.end(), sample_before);
    return out;
}

const Sample& SampleSet::lowest() const {
    if (samples.empty()) throw Error("sample set is empty");
    return samples.front();
}

nlohmann::json to_json(const SampleSet& s) {
    nlohmann::json samples = nlohmann::json::array();
    for (const auto& sample : s.samples) {
        samples.push_back({{"bitstring", to_bitstring(sample.assignment)},
                           {"energy", sample.energy},
                           {"multiplicity", sample.multiplicity},
                           {"source", sample.source}});
    }
    return {{"fingerprint", s.model_fingerprint},
            {"metadata", s.metadata},
            {"samples", samples}};
}

}  // namespace quboforge
