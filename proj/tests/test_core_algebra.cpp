#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "commeq/error.hpp"
#include "commeq/linalg.hpp"
#include "commeq/matrix.hpp"
#include "commeq/poly.hpp"
#include "commeq/reference.hpp"
#include "test_util.hpp"

using namespace commeq;
using testutil::make_rng;
using testutil::rand_matrix;

TEST_CASE("rationals are always reduced with positive denominator") {
    CHECK(rat(2, 4) == rat(1, 2));
    CHECK(rat(3, -6) == rat(-1, 2));
    CHECK(rat_to_string(rat(-10, 4)) == "-5/2");
    CHECK(rat_to_string(rat(7)) == "7");
    CHECK(rat_from_string("-3/6") == rat(-1, 2));
    CHECK(rat_from_string("42") == rat(42));
    CHECK(is_integer(rat(8, 4)));
    CHECK_FALSE(is_integer(rat(1, 3)));

    CHECK_THROWS_AS(rat(1, 0), ValidationError);
    CHECK_THROWS_AS(rat_from_string("1/0"), ValidationError);
    CHECK_THROWS_AS(rat_from_string("1.5"), ValidationError);
    CHECK_THROWS_AS(rat_from_string("1/-2"), ValidationError);
    CHECK_THROWS_AS(rat_from_string(""), ValidationError);
    CHECK_THROWS_AS(rat_from_string("x"), ValidationError);
    CHECK_THROWS_AS(rat_from_string(" 1"), ValidationError);
}

TEST_CASE("matrix product basics") {
    auto rng = make_rng(1);
    const RatMatrix m = rand_matrix(rng, 3, 3);
    CHECK(RatMatrix::identity(3) * m == m);

    const RatMatrix nil(2, 2, {rat(0), rat(1), rat(0), rat(0)});
    CHECK((nil * nil).is_zero());

    const RatMatrix a(2, 2, {rat(1), rat(1), rat(0), rat(1)});
    const RatMatrix b(2, 2, {rat(1), rat(2), rat(0), rat(1)});
    const RatMatrix expect(2, 2, {rat(1), rat(3), rat(0), rat(1)});
    CHECK(a * b == expect);

    CHECK_THROWS_AS(rand_matrix(rng, 2, 3) * rand_matrix(rng, 2, 3), ValidationError);
}

TEST_CASE("openmp product and kron agree with the serial references") {
    auto rng = make_rng(2);
    for (const std::size_t n : {3u, 17u, 52u}) {
        const RatMatrix a = rand_matrix(rng, n, n + 1);
        const RatMatrix b = rand_matrix(rng, n + 1, n);
        CHECK(a * b == reference::mat_mul(a, b));
    }
    const RatMatrix a = rand_matrix(rng, 7, 5);
    const RatMatrix b = rand_matrix(rng, 8, 9);
    CHECK(kron(a, b) == reference::kron(a, b));
}

TEST_CASE("nullspace fixtures") {
    CHECK(nullspace(RatMatrix(2, 2)).size() == 2);
    CHECK(nullspace(RatMatrix::identity(4)).empty());

    const RatMatrix m(2, 2, {rat(1), rat(2), rat(2), rat(4)});
    const auto basis = nullspace(m);
    REQUIRE(basis.size() == 1);
    CHECK(basis[0] == RatMatrix(2, 1, {rat(-2), rat(1)}));
}

TEST_CASE("nullspace: exactness, rank-nullity, and the fraction-free route") {
    auto rng = make_rng(3);
    for (int trial = 0; trial < 40; ++trial) {
        std::uniform_int_distribution<std::size_t> size(1, 7);
        const std::size_t rows = size(rng);
        const std::size_t cols = size(rng);
        // Half the trials get a forced rank deficiency.
        RatMatrix m = rand_matrix(rng, rows, cols);
        if (trial % 2 == 0 && cols >= 2)
            for (std::size_t i = 0; i < rows; ++i) m(i, cols - 1) = m(i, 0);

        const auto basis = nullspace(m);
        CHECK(rank(m) + basis.size() == cols);
        for (const auto& v : basis) CHECK((m * v).is_zero());
        CHECK(basis == reference::nullspace(m));
        CHECK(basis == nullspace(m)); // deterministic
    }
}

TEST_CASE("kron fixtures and the vec contract") {
    CHECK(kron(RatMatrix::identity(2), RatMatrix::identity(3)) == RatMatrix::identity(6));

    const RatMatrix d = RatMatrix::diagonal({rat(2), rat(3)});
    CHECK(kron(d, RatMatrix::identity(2)) ==
          RatMatrix::diagonal({rat(2), rat(2), rat(3), rat(3)}));

    auto rng = make_rng(4);
    for (int trial = 0; trial < 25; ++trial) {
        std::uniform_int_distribution<std::size_t> size(1, 4);
        const std::size_t m = size(rng), n = size(rng), r = size(rng), s = size(rng);
        const RatMatrix a = rand_matrix(rng, m, n);
        const RatMatrix x = rand_matrix(rng, n, r);
        const RatMatrix b = rand_matrix(rng, r, s);
        CHECK(vec(a * x * b) == kron(b.transpose(), a) * vec(x));
    }
}

TEST_CASE("vec and unvec follow the column-stacking convention") {
    const RatMatrix m(2, 2, {rat(1), rat(2), rat(3), rat(4)}); // [[a,b],[c,d]] = [[1,2],[3,4]]
    CHECK(vec(m) == RatMatrix(4, 1, {rat(1), rat(3), rat(2), rat(4)}));
    CHECK(unvec(vec(m), 2, 2) == m);
    CHECK(vec(RatMatrix::identity(2)) == RatMatrix(4, 1, {rat(1), rat(0), rat(0), rat(1)}));
    CHECK_THROWS_AS(unvec(RatMatrix(3, 1), 2, 2), ValidationError);
}

TEST_CASE("affine solve and inverse") {
    auto rng = make_rng(5);
    const RatMatrix m = rand_matrix(rng, 4, 4);
    const auto inv = inverse(m);
    if (inv) CHECK(*inv * m == RatMatrix::identity(4));

    const RatMatrix singular(2, 2, {rat(1), rat(2), rat(2), rat(4)});
    CHECK_FALSE(inverse(singular).has_value());

    // consistent underdetermined system
    const auto sol = solve_affine(singular, RatMatrix(2, 1, {rat(3), rat(6)}));
    REQUIRE(sol.consistent);
    CHECK(singular * sol.particular == RatMatrix(2, 1, {rat(3), rat(6)}));
    CHECK(sol.kernel.size() == 1);

    const auto bad = solve_affine(singular, RatMatrix(2, 1, {rat(3), rat(7)}));
    CHECK_FALSE(bad.consistent);
}

TEST_CASE("matrix polynomial evaluation") {
    const DensePoly f({rat(0), rat(0), rat(1), rat(-1)}); // x^2 - x^3
    CHECK(f.eval_matrix(RatMatrix(3, 3)).is_zero());
    CHECK(f.eval_matrix(RatMatrix::identity(3)).is_zero());

    const DensePoly g({rat(-1), rat(0), rat(1)}); // x^2 - 1
    CHECK(g.eval_matrix(RatMatrix::diagonal({rat(1), rat(-1)})).is_zero());

    CHECK_THROWS_AS(f.eval_matrix(RatMatrix(2, 3)), ValidationError);
}

TEST_CASE("factored polynomials expand exactly and expose the critical set") {
    const FactoredPoly cube = testutil::cube_poly();
    CHECK(cube.expand() == DensePoly({rat(0), rat(0), rat(1), rat(-1)}));
    CHECK(cube.critical_set() == std::vector<Rational>{rat(-1)});

    const FactoredPoly sq = testutil::square_minus_one();
    CHECK(sq.expand() == DensePoly({rat(-1), rat(0), rat(1)}));
    CHECK(sq.critical_set() == std::vector<Rational>{rat(-2), rat(2)});

    const FactoredPoly linear{rat(1), {{rat(0), 1}}}; // f = x
    CHECK(linear.critical_set() == std::vector<Rational>{rat(1)});

    CHECK_THROWS_AS((FactoredPoly{rat(0), {}}.validate()), ValidationError);
    CHECK_THROWS_AS((FactoredPoly{rat(1), {{rat(1), 1}, {rat(1), 2}}}.validate()),
                    ValidationError);

    auto rng = make_rng(6);
    for (int trial = 0; trial < 20; ++trial) {
        FactoredPoly f{testutil::rand_rational(rng, 5, 3), {}};
        if (f.lead == 0) f.lead = 1;
        std::uniform_int_distribution<int> nroots(0, 3);
        std::uniform_int_distribution<unsigned> mult(1, 3);
        const int k = nroots(rng);
        for (int i = 0; i < k; ++i) {
            const Rational r = testutil::rand_rational(rng, 4, 3);
            bool dup = false;
            for (const auto& [seen, m] : f.roots) dup = dup || seen == r;
            if (!dup) f.roots.emplace_back(r, mult(rng));
        }
        const DensePoly dense = f.expand();
        for (const auto& [root, m] : f.roots) CHECK(dense.eval(root) == 0);
    }
}

TEST_CASE("dense polynomial arithmetic") {
    const DensePoly p({rat(1), rat(2), rat(3)});
    CHECK(p.degree() == 2);
    CHECK(p.derivative() == DensePoly({rat(2), rat(6)}));
    CHECK(DensePoly().degree() == -1);
    CHECK(DensePoly({rat(0)}).is_zero());
    CHECK(p * DensePoly() == DensePoly());
    CHECK(p + DensePoly({rat(0), rat(0), rat(-3)}) == DensePoly({rat(1), rat(2)}));
    CHECK(p.eval(rat(1, 2)) == rat(11, 4));
}
