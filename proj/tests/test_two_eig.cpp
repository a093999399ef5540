#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "commeq/equation.hpp"
#include "commeq/error.hpp"
#include "commeq/linalg.hpp"
#include "commeq/two_eig.hpp"
#include "test_util.hpp"

using namespace commeq;
using testutil::make_rng;

namespace {

std::size_t ones_on_diagonal(const RatMatrix& m) {
    std::size_t count = 0;
    for (std::size_t i = 0; i < m.rows(); ++i)
        if (m(i, i) == 1) ++count;
    return count;
}

} // namespace

TEST_CASE("regime classification") {
    const FactoredPoly cube = testutil::cube_poly();
    CHECK(classify({1, 1, rat(1), rat(0), cube}) == Regime::UpperTriangular);
    CHECK(classify({1, 1, rat(0), rat(1), cube}) == Regime::LowerTriangular);
    CHECK(classify({1, 1, rat(5), rat(0), cube}) == Regime::TrivialOnly);
    CHECK(classify({2, 2, rat(2), rat(0), testutil::square_minus_one()}) ==
          Regime::Degenerate);

    CHECK_THROWS_AS(classify({1, 1, rat(1), rat(1), cube}), ValidationError);
    CHECK_THROWS_AS(classify({0, 1, rat(1), rat(0), cube}), ValidationError);
}

TEST_CASE("triangular families at identity blocks span everything") {
    for (std::size_t p = 1; p <= 3; ++p)
        for (std::size_t q = 1; q <= 3; ++q) {
            const TwoEigInstance inst{p, q, rat(1), rat(0), testutil::cube_poly()};
            const SolutionFamily family =
                solve_triangular(inst, RatMatrix::identity(p), RatMatrix::identity(q));
            CHECK(family.q_basis.size() == p * q);
            CHECK(family.r_basis.empty());
            CHECK_FALSE(family.bilinear_constrained);
        }
}

TEST_CASE("triangular family fixtures") {
    const TwoEigInstance inst{2, 1, rat(1), rat(0), testutil::cube_poly()};
    const SolutionFamily family =
        solve_triangular(inst, RatMatrix::diagonal({rat(1), rat(0)}), RatMatrix::identity(1));
    CHECK(family.q_basis.size() == 1);

    // disjoint spectra force Q = 0
    const TwoEigInstance big{2, 2, rat(1), rat(0), testutil::cube_poly()};
    const SolutionFamily empty =
        solve_triangular(big, RatMatrix(2, 2), RatMatrix::identity(2));
    CHECK(empty.q_basis.empty());

    // f(P) != 0 is a mathematical rejection
    CHECK_THROWS_AS(
        solve_triangular(big, RatMatrix::diagonal({rat(2), rat(0)}), RatMatrix::identity(2)),
        MathRejection);
}

TEST_CASE("every assembled triangular member solves the equation") {
    auto rng = make_rng(20);
    for (std::size_t p = 1; p <= 3; ++p)
        for (std::size_t q = 1; q <= 3; ++q) {
            const TwoEigInstance inst{p, q, rat(1), rat(0), testutil::cube_poly()};
            const EquationInstance eq{inst.a_matrix(), inst.f, std::nullopt};
            for (const auto& [pb, sb] : enumerate_diagonal_pairs(inst)) {
                const SolutionFamily family = solve_triangular(inst, pb, sb);
                for (int rep = 0; rep < 3; ++rep) {
                    const RatMatrix x = assemble(
                        family, testutil::rand_coeffs(rng, family.q_basis.size()), {});
                    CHECK(residual(eq, x).is_solution);

                    // the commutation condition P*Q = Q*S comes for free
                    const RatMatrix qblock = x.block(0, p, p, q);
                    CHECK(pb * qblock == qblock * sb);
                }
            }
        }
}

TEST_CASE("trivial-only regime yields no off-diagonal freedom") {
    for (std::size_t p = 1; p <= 3; ++p)
        for (std::size_t q = 1; q <= 3; ++q) {
            const TwoEigInstance inst{p, q, rat(5), rat(0), testutil::cube_poly()};
            CHECK(classify(inst) == Regime::TrivialOnly);
            for (const auto& [pb, sb] : enumerate_diagonal_pairs(inst)) {
                CHECK(solve_triangular(inst, pb, sb).q_basis.empty());
                const SolutionFamily hull = solve_degenerate(inst, pb, sb);
                CHECK(hull.q_basis.empty());
                CHECK(hull.r_basis.empty());
            }
        }
}

TEST_CASE("nontrivial solutions exist exactly when the eigengap is critical") {
    // P = alpha I, S = alpha I at the root with f'(alpha) = lambda - mu
    const TwoEigInstance inst{2, 3, rat(1), rat(0), testutil::cube_poly()};
    CHECK(classify(inst) == Regime::UpperTriangular);
    bool found = false;
    for (const auto& [pb, sb] : enumerate_diagonal_pairs(inst))
        found = found || !solve_triangular(inst, pb, sb).q_basis.empty();
    CHECK(found);
    const SolutionFamily at_one =
        solve_triangular(inst, RatMatrix::identity(2), RatMatrix::identity(3));
    CHECK(at_one.q_basis.size() == 6);
}

TEST_CASE("kernel dimension law: dim Q = dim ker(P-I) * dim ker(S-I)") {
    for (std::size_t p = 1; p <= 3; ++p)
        for (std::size_t q = 1; q <= 3; ++q) {
            const TwoEigInstance inst{p, q, rat(1), rat(0), testutil::cube_poly()};
            for (const auto& [pb, sb] : enumerate_diagonal_pairs(inst)) {
                const SolutionFamily family = solve_triangular(inst, pb, sb);
                const std::size_t tau1 = nullspace(pb - RatMatrix::identity(p)).size();
                const std::size_t tau2 = nullspace(sb - RatMatrix::identity(q)).size();
                CHECK(family.q_basis.size() == tau1 * tau2);
                CHECK(tau1 == ones_on_diagonal(pb));
                CHECK(tau2 == ones_on_diagonal(sb));
            }
        }
}

TEST_CASE("degenerate instance reproduces the two-parameter family") {
    const TwoEigInstance inst{2, 2, rat(2), rat(0), testutil::square_minus_one()};
    CHECK(classify(inst) == Regime::Degenerate);
    const RatMatrix ps = RatMatrix::diagonal({rat(1), rat(-1)});
    const SolutionFamily family = solve_degenerate(inst, ps, ps);

    RatMatrix e22(2, 2);
    e22(1, 1) = 1;
    RatMatrix e11(2, 2);
    e11(0, 0) = 1;
    REQUIRE(family.q_basis.size() == 1);
    REQUIRE(family.r_basis.size() == 1);
    CHECK(family.q_basis[0] == e22);
    CHECK(family.r_basis[0] == e11);
    CHECK(family.bilinear_constrained);

    // R = E11 lies in both defining kernels: S*R = R*P and f'(S)*R = 2R
    CHECK(ps * e11 == e11 * ps);
    const DensePoly fprime = inst.f.expand().derivative();
    CHECK(fprime.eval_matrix(ps) * e11 == rat(2) * e11);

    // every (u, v) member passes bilinear and residual checks
    auto rng = make_rng(21);
    const EquationInstance eq{inst.a_matrix(), inst.f, std::nullopt};
    for (int trial = 0; trial < 10; ++trial) {
        const Rational u = testutil::rand_rational(rng);
        const Rational v = testutil::rand_rational(rng);
        CHECK(check_bilinear(u * e22, v * e11));
        CHECK(residual(eq, assemble(family, {u}, {v})).is_solution);
    }
}

TEST_CASE("degenerate hull is empty on mismatched eigenvalue pairing") {
    const TwoEigInstance inst{2, 2, rat(2), rat(0), testutil::square_minus_one()};
    const SolutionFamily family =
        solve_degenerate(inst, RatMatrix::identity(2), RatMatrix::identity(2));
    CHECK(family.q_basis.empty());
    // R needs f'(S)R = 2R, and f'(I) = 2I, so R is only constrained by SR = RP
    // which identity blocks satisfy: the R hull is full.
    CHECK(family.r_basis.size() == 4);
}

TEST_CASE("bilinear check") {
    RatMatrix e22(2, 2);
    e22(1, 1) = 1;
    RatMatrix e11(2, 2);
    e11(0, 0) = 1;
    CHECK(check_bilinear(RatMatrix(2, 2), e11));
    CHECK(check_bilinear(rat(7) * e22, rat(-3) * e11));
    CHECK_FALSE(check_bilinear(RatMatrix::identity(2), RatMatrix::identity(2)));
    CHECK_THROWS_AS(check_bilinear(RatMatrix(2, 3), RatMatrix(2, 3)), ValidationError);
}

TEST_CASE("diagonal enumeration") {
    const FactoredPoly cube = testutil::cube_poly();
    const TwoEigInstance one{1, 1, rat(1), rat(0), cube};
    CHECK(enumerate_diagonal_pairs(one).size() == 4); // {0,1} x {0,1}

    const TwoEigInstance two{2, 1, rat(1), rat(0), cube};
    const auto pairs = enumerate_diagonal_pairs(two);
    CHECK(pairs.size() == 6); // 3 nondecreasing diagonals x 2
    CHECK(pairs[0].first == RatMatrix(2, 2));16
    CHECK(pairs[2].first == RatMatrix::diagonal({rat(0), rat(1)}));
    CHECK(pairs[4].first == RatMatrix::identity(2));

    const FactoredPoly shifted{rat(1), {{rat(5), 1}}}; // f = x - 5
    const TwoEigInstance single{2, 1, rat(1), rat(0), shifted};
    const auto only = enumerate_diagonal_pairs(single);
    REQUIRE(only.size() == 1);
    CHECK(only[0].first == rat(5) * RatMatrix::identity(2));

    CHECK_THROWS_AS(enumerate_diagonal_pairs({6, 6, rat(1), rat(0), cube}, 10),
                    ValidationError);
}

TEST_CASE("lower-triangular regime via the mirrored instance") {
    const TwoEigInstance inst{2, 2, rat(0), rat(1), testutil::cube_poly()};
    CHECK(classify(inst) == Regime::LowerTriangular);

    // mirror: upper-triangular solve on the swapped instance
    const TwoEigInstance swapped{inst.q, inst.p, inst.lambda, inst.mu, inst.f};
    CHECK(classify(swapped) == Regime::UpperTriangular);
    const SolutionFamily mirrored =
        solve_triangular(swapped, RatMatrix::identity(2), RatMatrix::identity(2));
    CHECK(mirrored.q_basis.size() == 4);

    // reassemble as lower-triangular members of the original instance
    const EquationInstance eq{inst.a_matrix(), inst.f, std::nullopt};
    auto rng = make_rng(22);
    for (int trial = 0; trial < 5; ++trial) {
        RatMatrix rblock(2, 2);
        for (const auto& k : mirrored.q_basis)
            rblock = rblock + testutil::rand_rational(rng) * k;
        RatMatrix x(4, 4);
        x.set_block(0, 0, RatMatrix::identity(2));
        x.set_block(2, 0, rblock);
        x.set_block(2, 2, RatMatrix::identity(2));
        CHECK(residual(eq, x).is_solution);
    }
}

TEST_CASE("degenerate and triangular hulls agree on the Q side") {
    // For fixed (P,S) with f(P) = f(S) = 0 the two characterizations of the
    // Q block cut out the same subspace.
    const TwoEigInstance inst{2, 2, rat(2), rat(0), testutil::square_minus_one()};
    const auto pairs = enumerate_diagonal_pairs(inst);
    for (const auto& [pb, sb] : pairs) {
        const auto tri = solve_triangular(inst, pb, sb).q_basis;
        const auto hull = solve_degenerate(inst, pb, sb).q_basis;
        REQUIRE(tri.size() == hull.size());
        for (std::size_t k = 0; k < tri.size(); ++k) CHECK(tri[k] == hull[k]);
    }
}
