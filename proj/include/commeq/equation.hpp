#pragma once

#include <optional>
#include <vector>

#include "commeq/linalg.hpp"
#include "commeq/matrix.hpp"
#include "commeq/poly.hpp"

namespace commeq {

// One instance of the equation X*A - A*X = f(X). A may be given directly in
// diagonal form, or with an explicit diagonalizer (an invertible basis whose
// conjugate of A is exactly diagonal).
struct EquationInstance {
    RatMatrix a;
    FactoredPoly f;
    std::optional<RatMatrix> diagonalizer;

    void validate() const;
};

struct ResidualReport {
    RatMatrix residual; // X*A - A*X - f(X)
    bool is_solution = false;
    bool f_of_x_nilpotent = false;
    std::optional<std::size_t> nilpotency_index;
};

ResidualReport residual(const EquationInstance& inst, const RatMatrix& x);

// Matrix of the linear map Q -> (1,2) block of f([[P,Q],[0,S]]) in the
// column-stacking convention: sum_k a_k sum_{i+j=k-1} kron((S^T)^j, P^i).
RatMatrix block_poly_operator(const DensePoly& f, const RatMatrix& p, const RatMatrix& s);
RatMatrix block_poly_operator(const FactoredPoly& f, const RatMatrix& p, const RatMatrix& s);

struct IdentityCheck {
    bool precondition_ok = false;
    bool holds = false; // meaningful only when precondition_ok
};

// Given a solution X of X*A - A*X = X^p * g(X) with p >= 2, checks the derived
// identity  P(X)*A - A*P(X) = P'(X) * X^p * g(X)  for an arbitrary polynomial P.
IdentityCheck check_poly_commutator(const EquationInstance& inst, const RatMatrix& x,
                                    const DensePoly& poly, unsigned p_exp,
                                    const DensePoly& g);

// Whether ker(X^k) is invariant under A (exact rank test on a kernel basis).
bool check_kernel_invariance(const EquationInstance& inst, const RatMatrix& x,
                             std::size_t k);

struct SupportReport {
    bool passes = false;
    std::vector<Rational> support; // eigenvalues of A carrying a nonzero component of X*u
    std::size_t window = 0;        // smallest s >= 0 with lambda+s not an eigenvalue
};

// Decomposes X*u over the eigenspaces of A (u an eigenvector for lambda) and
// checks the support stays inside {lambda, ..., lambda + window - 1}.
SupportReport check_eigenspace_support(const EquationInstance& inst, const RatMatrix& x,
                                       const Rational& lambda, const RatMatrix& u);

} // namespace commeq
