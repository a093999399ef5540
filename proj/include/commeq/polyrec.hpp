#pragma once

#include <cstddef>
#include <vector>

#include "commeq/equation.hpp"
#include "commeq/poly.hpp"

namespace commeq {

struct RecurrenceRow {
    std::size_t s = 0;
    DensePoly p;      // P_s: degree s, strictly positive coefficients
    DensePoly phi;    // phi_s = (-1)^(s+1) * P_s
    Rational p_at_one;
};

// P_0 = 1, P_s = x^2 P'_{s-1} + ((s+2)x + s) P_{s-1};
// phi_0 = -1, phi_s = -x^2 phi'_{s-1} - 2x phi_{s-1} - s(x+1) phi_{s-1}.
std::vector<RecurrenceRow> recurrence_table(std::size_t s_max);

std::vector<DensePoly> phi_sequence(std::size_t s_max);

// psi = -phi' x^2 (1-x) - 2 phi x (1-x) + t phi x^2 - s phi, which satisfies
// psi(1) = (t-s) * phi(1). Rejects s == t.
DensePoly shift_absorption_poly(const DensePoly& phi, std::size_t s, std::size_t t);

// For a solution X of X*A - A*X = X^2 - X^3 with A diagonal and u in ker(A):
// checks (A - sI) ... (A - I) A X u = phi_s(X) X^2 (I - X)^(s+1) u.
IdentityCheck check_shift_chain_identity(const RatMatrix& a_diag, const RatMatrix& x,
                                         const RatMatrix& u, std::size_t s);

} // namespace commeq
