#include "commeq/json_io.hpp"

#include "commeq/error.hpp"

namespace commeq {

using nlohmann::json;

namespace {

Rational rat_field(const json& j) {
    if (!j.is_string()) throw ValidationError("rational entries must be strings");
    return rat_from_string(j.get<std::string>());
}

std::size_t count_field(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number_unsigned())
        throw ValidationError(std::string("missing or invalid count field '") + key + "'");
    return j[key].get<std::size_t>();
}

} // namespace

json matrix_to_json(const RatMatrix& m) {
    json data = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(rat_to_string(m(i, j)));
        data.push_back(std::move(row));
    }
    return {{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(data)}};
}

RatMatrix matrix_from_json(const json& j) {
    if (!j.is_object()) throw ValidationError("matrix document must be an object");
    const std::size_t rows = count_field(j, "rows");
    const std::size_t cols = count_field(j, "cols");
    if (!j.contains("data") || !j["data"].is_array() || j["data"].size() != rows)
        throw ValidationError("matrix 'data' must be an array of 'rows' rows");
    RatMatrix out(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        const json& row = j["data"][i];
        if (!row.is_array() || row.size() != cols)
            throw ValidationError("matrix row length does not match 'cols'");
        for (std::size_t c = 0; c < cols; ++c) out(i, c) = rat_field(row[c]);
    }
    return out;
}

json dense_poly_to_json(const DensePoly& p) {
    json coeffs = json::array();
    for (const auto& c : p.coeffs()) coeffs.push_back(rat_to_string(c));
    return {{"coeffs", std::move(coeffs)}};
}

DensePoly dense_poly_from_json(const json& j) {
    if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_array())
        throw ValidationError("polynomial document must contain a 'coeffs' array");
    std::vector<Rational> coeffs;
    for (const auto& c : j["coeffs"]) coeffs.push_back(rat_field(c));
    return DensePoly(std::move(coeffs));
}

json factored_poly_to_json(const FactoredPoly& f) {
    json roots = json::array();
    for (const auto& [root, mult] : f.roots)
        roots.push_back({{"root", rat_to_string(root)}, {"mult", mult}});
    return {{"lead", rat_to_string(f.lead)}, {"roots", std::move(roots)}};
}

FactoredPoly factored_poly_from_json(const json& j) {
    if (!j.is_object() || !j.contains("lead") || !j.contains("roots") ||
        !j["roots"].is_array())
        throw ValidationError("factored polynomial must contain 'lead' and 'roots'");
    FactoredPoly f;
    f.lead = rat_field(j["lead"]);
    for (const auto& entry : j["roots"]) {
        if (!entry.is_object() || !entry.contains("root"))
            throw ValidationError("each root entry needs 'root' and 'mult'");
        f.roots.emplace_back(rat_field(entry["root"]),
                             static_cast<unsigned>(count_field(entry, "mult")));
    }
    f.validate();
    return f;
}

std::vector<Rational> rationals_from_json(const json& j) {
    if (!j.is_array()) throw ValidationError("expected a JSON array of rationals");
    std::vector<Rational> out;
    for (const auto& v : j) out.push_back(rat_field(v));
    return out;
}

json rationals_to_json(const std::vector<Rational>& values) {
    json out = json::array();
    for (const auto& v : values) out.push_back(rat_to_string(v));
    return out;
}

json residual_report_to_json(const ResidualReport& report) {
    json j = {{"residual", matrix_to_json(report.residual)},
              {"is_solution", report.is_solution},
              {"f_of_X_nilpotent", report.f_of_x_nilpotent}};
    if (report.nilpotency_index)
        j["nilpotency_index"] = *report.nilpotency_index;
    else
        j["nilpotency_index"] = nullptr;
    return j;
}

json solution_family_to_json(const SolutionFamily& family) {
    json qb = json::array();
    for (const auto& m : family.q_basis) qb.push_back(matrix_to_json(m));
    json rb = json::array();
    for (const auto& m : family.r_basis) rb.push_back(matrix_to_json(m));
    return {{"P", matrix_to_json(family.p_block)},
            {"S", matrix_to_json(family.s_block)},
            {"Q_basis", std::move(qb)},
            {"R_basis", std::move(rb)},
            {"dim_linear", family.dim_linear()},
            {"bilinear_constrained", family.bilinear_constrained}};
}

json ladder_partition_to_json(const LadderPartition& part) {
    json ladders = json::array();
    for (const auto& ladder : part.ladders) {
        json rungs = json::array();
        for (const auto& rung : ladder.rungs)
            rungs.push_back(
                {{"value", rat_to_string(rung.value)}, {"mult", rung.multiplicity}});
        ladders.push_back({{"base", rat_to_string(ladder.base)},
                           {"height", ladder.height},
                           {"rungs", std::move(rungs)}});
    }
    return {{"ladders", std::move(ladders)}, {"permutation", part.permutation}};
}

json decomposition_report_to_json(const DecompositionReport& report) {
    json per_ladder = json::array();
    for (const auto& lr : report.per_ladder)
        per_ladder.push_back({{"block_triangular", lr.block_triangular},
                              {"rung_certificates", lr.rung_certificates}});
    return {{"conforms", report.conforms},
            {"cross_ladder_block_diagonal", report.cross_ladder_block_diagonal},
            {"per_ladder", std::move(per_ladder)}};
}

json dim_report_to_json(const DimReport& report) {
    return {{"p", report.p},
            {"q", report.q},
            {"rho", report.rho},
            {"nu", report.nu},
            {"case1_dim", report.case1_dim},
            {"case2_dim", report.case2_dim},
            {"argmax",
             {{"k1", report.k1}, {"k2", report.k2}, {"tau1", report.tau1}, {"tau2", report.tau2}}},
            {"in_exception_table", report.in_exception_table}};
}

json extend_outcome_to_json(const ExtendOutcome& outcome) {
    if (!outcome.feasible)
        return {{"feasible", false},
                {"offending_distance", outcome.offending_distance},
                {"offending_blocks", {outcome.offending_i, outcome.offending_j}}};
    json families = json::array();
    for (const auto& family : outcome.families) {
        json kernel = json::array();
        for (const auto& k : family.kernel) kernel.push_back(matrix_to_json(k));
        families.push_back({{"distance", family.distance},
                            {"block_i", family.block_i},
                            {"block_j", family.block_j},
                            {"kernel", std::move(kernel)}});
    }
    return {{"feasible", true},
            {"X", matrix_to_json(outcome.x)},
            {"free_dims", outcome.free_dims},
            {"families", std::move(families)}};
}

json support_report_to_json(const SupportReport& report) {
    return {{"passes", report.passes},
            {"support", rationals_to_json(report.support)},
            {"window", report.window}};
}

} // namespace commeq
