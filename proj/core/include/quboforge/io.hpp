#pragma once

#include <filesystem>

#include <nlohmann/json.hpp>

#include "quboforge/model.hpp"

namespace quboforge {

/// QUBO JSON format (bit-exact contract):
///
///   {"n": <int>, "constant": <float>, "terms": [[i, j, coeff], ...]}
///
/// with 0 <= i <= j < n; an i == j entry is a linear term. Unknown keys
/// are rejected, "constant" and "terms" default to 0 and []. Files are
/// UTF-8 and newline-terminated. Coefficients survive a write/read round
/// trip bit-exactly.
QuboModel read_qubo(const std::filesystem::path& path);
void write_qubo(const QuboModel& model, const std::filesystem::path& path);

QuboModel qubo_from_json(const nlohmann::json& j, const std::string& origin = "json");
nlohmann::json qubo_to_json(const QuboModel& model);

/// Ising JSON mirrors the QUBO layout with "offset" instead of "constant";
/// an i == j term is a field h_i, i < j a coupling J_ij. The optional flag
/// "from_paper_convention": true negates h and J on input, importing models
/// written in the E = -sum J ss - sum h s convention into the library's
/// positive-sign convention.
IsingModel read_ising(const std::filesystem::path& path);
IsingModel ising_from_json(const nlohmann::json& j, const std::string& origin = "json");

}  // namespace quboforge
