#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "commeq/equation.hpp"
#include "commeq/error.hpp"
#include "commeq/json_io.hpp"
#include "commeq/ladder.hpp"
#include "commeq/polyrec.hpp"
#include "commeq/two_eig.hpp"
#include "commeq/variety_dims.hpp"

namespace {

using commeq::Rational;
using commeq::RatMatrix;
using nlohmann::json;

constexpr int kOk = 0;
constexpr int kValidationFailure = 1;
constexpr int kMathRejection = 2;

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw commeq::ValidationError("cannot open '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw commeq::ValidationError("invalid JSON in '" + path + "': " + e.what());
    }
    return j;
}

void emit(const json& payload) { std::cout << payload.dump(2) << "\n"; }

struct VerifyOpts {
    std::string a_path, x_path, f_path;
    bool ladder = false;
};

int run_verify(const VerifyOpts& opts) {
    const RatMatrix a = commeq::matrix_from_json(load_json(opts.a_path));
    const RatMatrix x = commeq::matrix_from_json(load_json(opts.x_path));
    const commeq::FactoredPoly f = commeq::factored_poly_from_json(load_json(opts.f_path));

    const commeq::EquationInstance inst{a, f, std::nullopt};
    const commeq::ResidualReport report = commeq::residual(inst, x);

    json out;
    out["residual_report"] = commeq::residual_report_to_json(report);
    bool ok = report.is_solution;

    if (opts.ladder) {
        if (!a.is_diagonal())
            throw commeq::ValidationError("--ladder requires a diagonal A");
        if (f.expand() != commeq::square_cube_poly().expand())
            throw commeq::ValidationError("--ladder applies to f(x) = x^2 - x^3 only");
        const commeq::LadderPartition part =
            commeq::partition_spectrum(a.diagonal_entries());
        out["ladder_partition"] = commeq::ladder_partition_to_json(part);
        if (report.is_solution) {
            const RatMatrix a_ord = RatMatrix::diagonal(
                commeq::permute_values(a.diagonal_entries(), part.permutation));
            const RatMatrix x_ord = commeq::permute_symmetric(x, part.permutation);
            const commeq::DecompositionReport dec =
                commeq::verify_decomposition(a_ord, x_ord, part);
            out["decomposition_report"] = commeq::decomposition_report_to_json(dec);
            ok = ok && dec.conforms;
        } else {
            out["decomposition_report"] = nullptr;
        }
    }

    emit(out);
    return ok ? kOk : kMathRejection;
}

struct SolveOpts {
    std::size_t p = 0, q = 0;
    std::string mu, lambda, f_path;
    bool enumerate = false;
    std::string p_path, s_path;
    std::size_t cap = 10000;
    // degenerate only
    std::size_t samples = 20;
    unsigned long long seed = 12345;
};

commeq::TwoEigInstance instance_of(const SolveOpts& opts) {
    return {opts.p, opts.q, commeq::rat_from_string(opts.mu),
            commeq::rat_from_string(opts.lambda),
            commeq::factored_poly_from_json(load_json(opts.f_path))};
}

std::vector<std::pair<RatMatrix, RatMatrix>> pairs_of(const commeq::TwoEigInstance& inst,
                                                      const SolveOpts& opts) {
    if (opts.enumerate == (!opts.p_path.empty() || !opts.s_path.empty()))
        throw commeq::ValidationError("give either --enumerate or both --P and --S");
    if (opts.enumerate) return commeq::enumerate_diagonal_pairs(inst, opts.cap);
    if (opts.p_path.empty() || opts.s_path.empty())
        throw commeq::ValidationError("both --P and --S are required");
    return {{commeq::matrix_from_json(load_json(opts.p_path)),
             commeq::matrix_from_json(load_json(opts.s_path))}};
}

commeq::SolutionFamily family_for(const commeq::TwoEigInstance& inst, commeq::Regime regime,
                                  const RatMatrix& p, const RatMatrix& s) {
    switch (regime) {
        case commeq::Regime::Degenerate:
            return commeq::solve_degenerate(inst, p, s);
        case commeq::Regime::LowerTriangular: {
            // Mirror of the upper-triangular case: solve for the (2,1) block in
            // the swapped instance and reinterpret its Q side as R.
            const commeq::TwoEigInstance swapped{inst.q, inst.p, inst.lambda, inst.mu,
                                                 inst.f};
            commeq::SolutionFamily mirrored = commeq::solve_triangular(swapped, s, p);
            commeq::SolutionFamily family;
            family.p_block = p;
            family.s_block = s;
            family.r_basis = std::move(mirrored.q_basis);
            return family;
        }
        default:
            return commeq::solve_triangular(inst, p, s);
    }
}

int run_solve2(const SolveOpts& opts) {
    const commeq::TwoEigInstance inst = instance_of(opts);
    const commeq::Regime regime = commeq::classify(inst);

    json families = json::array();
    for (const auto& [p, s] : pairs_of(inst, opts))
        families.push_back(
            commeq::solution_family_to_json(family_for(inst, regime, p, s)));

    emit({{"regime", commeq::regime_name(regime)}, {"families", std::move(families)}});
    return kOk;
}

int run_degenerate(const SolveOpts& opts) {
    const commeq::TwoEigInstance inst = instance_of(opts);
    const commeq::Regime regime = commeq::classify(inst);
    if (regime != commeq::Regime::Degenerate)
        throw commeq::MathRejection(std::string("regime is ") + commeq::regime_name(regime) +
                                    ", not Degenerate");

    std::mt19937_64 rng(opts.seed);
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 9);
    auto draw = [&rng, &num, &den]() { return commeq::rat(num(rng), den(rng)); };

    json families = json::array();
    for (const auto& [p, s] : pairs_of(inst, opts)) {
        const commeq::SolutionFamily family = commeq::solve_degenerate(inst, p, s);
        json jf = commeq::solution_family_to_json(family);
        json samples = json::array();
        for (std::size_t k = 0; k < opts.samples; ++k) {
            std::vector<Rational> qc(family.q_basis.size());
            std::vector<Rational> rc(family.r_basis.size());
            for (auto& c : qc) c = draw();
            for (auto& c : rc) c = draw();

            const RatMatrix member = commeq::assemble(family, qc, rc);
            const RatMatrix qblock = member.block(0, inst.p, inst.p, inst.q);
            const RatMatrix rblock = member.block(inst.p, 0, inst.q, inst.p);
            const bool bilinear = commeq::check_bilinear(qblock, rblock);
            const bool solves =
                commeq::residual({inst.a_matrix(), inst.f, std::nullopt}, member)
                    .is_solution;
            samples.push_back({{"q_coeffs", commeq::rationals_to_json(qc)},
                               {"r_coeffs", commeq::rationals_to_json(rc)},
                               {"bilinear_ok", bilinear},
                               {"residual_zero", solves}});
        }
        jf["samples"] = std::move(samples);
        families.push_back(std::move(jf));
    }

    emit({{"regime", commeq::regime_name(regime)}, {"families", std::move(families)}});
    return kOk;
}

int run_ladder(const std::string& spectrum_path) {
    const std::vector<Rational> values =
        commeq::rationals_from_json(load_json(spectrum_path));
    emit(commeq::ladder_partition_to_json(commeq::partition_spectrum(values)));
    return kOk;
}

int run_extend(const std::string& a_path, const std::vector<std::string>& y_paths) {
    const RatMatrix a = commeq::matrix_from_json(load_json(a_path));
    std::vector<RatMatrix> blocks;
    blocks.reserve(y_paths.size());
    for (const auto& path : y_paths)
        blocks.push_back(commeq::matrix_from_json(load_json(path)));

    const commeq::ExtendOutcome outcome = commeq::extend_diagonal_to_solution(a, blocks);
    emit(commeq::extend_outcome_to_json(outcome));
    return outcome.feasible ? kOk : kMathRejection;
}

struct DimsOpts {
    long long p = 0, q = 0;
    std::vector<long long> scan;
    std::string ratio = "5";
    bool serial = false;
};

int run_dims(const DimsOpts& opts) {
    if (!opts.scan.empty()) {
        if (opts.scan.size() != 2)
            throw commeq::ValidationError("--scan expects PMAX QMAX");
        const commeq::ScanReport report =
            commeq::scan_dims(opts.scan[0], opts.scan[1],
                              commeq::rat_from_string(opts.ratio), !opts.serial);
        std::cout << "p,q,rho,nu,gap,in_table\n";
        for (const auto& row : report.rows)
            std::cout << row.p << ',' << row.q << ',' << row.rho << ',' << row.nu << ','
                      << (row.rho - row.nu) << ',' << (row.in_table ? 1 : 0) << '\n';
        char fraction[32];
        std::snprintf(fraction, sizeof fraction, "%.6f", report.fraction);
        std::cout << "# couples=" << report.couples << " exceptions=" << report.exceptions
                  << " fraction=" << fraction
                  << " table_mismatches=" << report.table_mismatches.size()
                  << " range_violations=" << report.range_violations.size() << "\n";
        const bool clean =
            report.table_mismatches.empty() && report.range_violations.empty();
        return clean ? kOk : kMathRejection;
    }
    if (opts.p < 1 || opts.q < 1)
        throw commeq::ValidationError("give --p and --q, or --scan PMAX QMAX");
    emit(commeq::dim_report_to_json(commeq::nu(opts.p, opts.q)));
    return kOk;
}

int run_polyrec(std::size_t s_max) {
    for (const auto& row : commeq::recurrence_table(s_max)) {
        json line = {{"s", row.s},
                     {"P_coeffs", commeq::dense_poly_to_json(row.p)["coeffs"]},
                     {"phi_coeffs", commeq::dense_poly_to_json(row.phi)["coeffs"]},
                     {"P_at_1", commeq::rat_to_string(row.p_at_one)}};
        std::cout << line.dump() << "\n";
    }
    return kOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact toolkit for the matrix equation X*A - A*X = f(X) over the rationals"};
    app.require_subcommand(1);

    VerifyOpts verify_opts;
    auto* verify = app.add_subcommand("verify", "check a candidate solution X");
    verify->add_option("--A", verify_opts.a_path, "matrix A (JSON)")->required();
    verify->add_option("--X", verify_opts.x_path, "candidate X (JSON)")->required();
    verify->add_option("--f", verify_opts.f_path, "factored polynomial f (JSON)")->required();
    verify->add_flag("--ladder", verify_opts.ladder,
                     "also check the ladder block decomposition (f = x^2 - x^3)");

    SolveOpts solve_opts;
    auto* solve2 = app.add_subcommand(
        "solve2", "solution families for A = diag(mu*I_p, lambda*I_q)");
    auto add_solve_flags = [&solve_opts](CLI::App* cmd) {
        cmd->add_option("--p", solve_opts.p, "size of the mu block")->required();
        cmd->add_option("--q", solve_opts.q, "size of the lambda block")->required();
        cmd->add_option("--mu", solve_opts.mu, "eigenvalue of the first block")->required();
        cmd->add_option("--lambda", solve_opts.lambda, "eigenvalue of the second block")
            ->required();
        cmd->add_option("--f", solve_opts.f_path, "factored polynomial f (JSON)")->required();
        cmd->add_flag("--enumerate", solve_opts.enumerate,
                      "enumerate all diagonal (P,S) with entries among the roots of f");
        cmd->add_option("--cap", solve_opts.cap, "enumeration size guard");
        cmd->add_option("--P", solve_opts.p_path, "explicit P block (JSON)");
        cmd->add_option("--S", solve_opts.s_path, "explicit S block (JSON)");
    };
    add_solve_flags(solve2);

    auto* degenerate = app.add_subcommand(
        "degenerate", "degenerate-regime families with sampled bilinear checks");
    add_solve_flags(degenerate);
    degenerate->add_option("--samples", solve_opts.samples, "members to sample per family");
    degenerate->add_option("--seed", solve_opts.seed, "sampling seed");

    std::string spectrum_path;
    auto* ladder = app.add_subcommand("ladder", "partition a spectrum into ladders");
    ladder->add_option("--spectrum", spectrum_path, "JSON list of rational eigenvalues")
        ->required();

    std::string extend_a;
    std::vector<std::string> extend_y;
    auto* extend = app.add_subcommand(
        "extend", "extend rung blocks to a full solution over a single-ladder A");
    extend->add_option("--A", extend_a, "single-ladder diagonal A (JSON)")->required();
    extend->add_option("--Y", extend_y, "rung blocks, highest rung first (JSON files)")
        ->required()
        ->expected(-1);

    DimsOpts dims_opts;
    auto* dims = app.add_subcommand("dims", "solution-variety dimension arithmetic");
    dims->add_option("--p", dims_opts.p, "first block size");
    dims->add_option("--q", dims_opts.q, "second block size");
    dims->add_option("--scan", dims_opts.scan, "scan all couples up to PMAX QMAX (CSV)")
        ->expected(2);
    dims->add_option("--ratio", dims_opts.ratio, "aspect-ratio bound for the scan");
    dims->add_flag("--serial", dims_opts.serial, "disable the parallel scan");

    std::size_t s_max = 0;
    auto* polyrec = app.add_subcommand("polyrec", "recurrence table of P_s and phi_s");
    polyrec->add_option("--s-max", s_max, "last row to compute")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kValidationFailure;
    }

    try {
        if (verify->parsed()) return run_verify(verify_opts);
        if (solve2->parsed()) return run_solve2(solve_opts);
        if (degenerate->parsed()) return run_degenerate(solve_opts);
        if (ladder->parsed()) return run_ladder(spectrum_path);
        if (extend->parsed()) return run_extend(extend_a, extend_y);
        if (dims->parsed()) return run_dims(dims_opts);
        if (polyrec->parsed()) return run_polyrec(s_max);
    } catch (const commeq::MathRejection& e) {
        emit({{"error", {{"kind", "rejection"}, {"message", e.what()}}}});
        std::cerr << "rejected: " << e.what() << "\n";
        return kMathRejection;
    } catch (const commeq::ValidationError& e) {
        emit({{"error", {{"kind", "validation"}, {"message", e.what()}}}});
        std::cerr << "invalid input: " << e.what() << "\n";
        return kValidationFailure;
    }
    return kValidationFailure;
}
