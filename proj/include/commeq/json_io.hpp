#pragma once

#include <json.hpp>

#include <vector>

#include "commeq/equation.hpp"
#include "commeq/ladder.hpp"
#include "commeq/matrix.hpp"
#include "commeq/poly.hpp"
#include "commeq/two_eig.hpp"
#include "commeq/variety_dims.hpp"

namespace commeq {

// Wire formats. Rationals travel as base-10 "num" or "num/den" strings.
//   RatMatrix:     {"rows": n, "cols": m, "data": [["1", "1/2", ...], ...]}
//   DensePoly:     {"coeffs": ["a0", "a1", ...]}
//   FactoredPoly:  {"lead": "c", "roots": [{"root": "r", "mult": k}, ...]}
// Malformed documents are rejected with ValidationError.

nlohmann::json matrix_to_json(const RatMatrix& m);
RatMatrix matrix_from_json(const nlohmann::json& j);

nlohmann::json dense_poly_to_json(const DensePoly& p);
DensePoly dense_poly_from_json(const nlohmann::json& j);

nlohmann::json factored_poly_to_json(const FactoredPoly& f);
FactoredPoly factored_poly_from_json(const nlohmann::json& j);

std::vector<Rational> rationals_from_json(const nlohmann::json& j);
nlohmann::json rationals_to_json(const std::vector<Rational>& values);

nlohmann::json residual_report_to_json(const ResidualReport& report);
nlohmann::json solution_family_to_json(const SolutionFamily& family);
nlohmann::json ladder_partition_to_json(const LadderPartition& part);
nlohmann::json decomposition_report_to_json(const DecompositionReport& report);
nlohmann::json dim_report_to_json(const DimReport& report);
nlohmann::json extend_outcome_to_json(const ExtendOutcome& outcome);
nlohmann::json support_report_to_json(const SupportReport& report);

} // namespace commeq
