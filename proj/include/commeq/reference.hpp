#pragma once

#include <vector>

#include "commeq/matrix.hpp"

namespace commeq::reference {

// Serial reference kernels. Tests cross-check the OpenMP paths against these;
// the benchmark target compares their running times. nullspace takes an
// independent route: rows are scaled to integers and eliminated fraction-free
// (Bareiss), then normalized to the same canonical reduced-echelon
// parameterization.

RatMatrix mat_mul(const RatMatrix& a, const RatMatrix& b);
RatMatrix kron(const RatMatrix& a, const RatMatrix& b);
std::vector<RatMatrix> nullspace(const RatMatrix& m);

} // namespace commeq::reference
