#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "commeq/matrix.hpp"
#include "commeq/poly.hpp"

namespace commeq {

// A = diag(mu*I_p, lambda*I_q) with mu != lambda.
struct TwoEigInstance {
    std::size_t p = 0;
    std::size_t q = 0;
    Rational mu;
    Rational lambda;
    FactoredPoly f;

    void validate() const;
    RatMatrix a_matrix() const;
};

// Which solution shapes exist, decided by membership of +-(lambda-mu) in the
// critical set f'(f^{-1}(0)) \ {0}.
enum class Regime { TrivialOnly, UpperTriangular, LowerTriangular, Degenerate };

const char* regime_name(Regime regime);

// A fixed (P,S) pair together with kernel bases for the off-diagonal blocks.
// Members are X = [[P, Q], [R, S]] with Q in span(q_basis), R in span(r_basis);
// when bilinear_constrained, members must additionally satisfy QR = RQ = 0.
struct SolutionFamily {
    RatMatrix p_block;
    RatMatrix s_block;
    std::vector<RatMatrix> q_basis; // p x q
    std::vector<RatMatrix> r_basis; // q x p
    bool bilinear_constrained = false;

    std::size_t dim_linear() const { return q_basis.size() + r_basis.size(); }
};

Regime classify(const TwoEigInstance& inst);

// Kernel of the off-diagonal block operator minus (lambda-mu): the block
// upper-triangular families. Rejects P, S unless f(P) = 0 and f(S) = 0.
SolutionFamily solve_triangular(const TwoEigInstance& inst, const RatMatrix& p,
                                const RatMatrix& s);

// Degenerate regime: both off-diagonal blocks can be nonzero. Returns the
// linear hull for Q and R; members must be filtered with check_bilinear.
SolutionFamily solve_degenerate(const TwoEigInstance& inst, const RatMatrix& p,
                                const RatMatrix& s);

bool check_bilinear(const RatMatrix& q, const RatMatrix& r);

// All diagonal (P,S) with entries among the roots of f, one representative per
// multiset (nondecreasing diagonals). Throws when the pair count exceeds cap.
std::vector<std::pair<RatMatrix, RatMatrix>> enumerate_diagonal_pairs(
    const TwoEigInstance& inst, std::size_t cap = 10000);

// X = [[P, sum c_i Q_i], [sum d_j R_j, S]].
RatMatrix assemble(const SolutionFamily& family, const std::vector<Rational>& q_coeffs,
                   const std::vector<Rational>& r_coeffs);

} // namespace commeq
