#pragma once

#include <optional>
#include <vector>

#include "commeq/matrix.hpp"

namespace commeq {

struct RrefResult {
    RatMatrix reduced;
    std::vector<std::size_t> pivot_cols;
};

// Reduced row-echelon form by exact Gauss-Jordan elimination. The result is
// the canonical RREF, so the output is independent of pivot strategy; the
// per-step row updates run under OpenMP for large matrices.
RrefResult rref(RatMatrix m);

std::size_t rank(const RatMatrix& m);

// Exact kernel basis in reduced-echelon parameter form: one column vector per
// free column f, with entry 1 at f and -reduced(r, f) at each pivot column.
// Empty iff m is injective.
std::vector<RatMatrix> nullspace(const RatMatrix& m);

struct AffineSolution {
    bool consistent = false;
    RatMatrix particular; // free parameters set to zero
    std::vector<RatMatrix> kernel;
};

// Solves m*x = rhs exactly (rhs a column vector).
AffineSolution solve_affine(const RatMatrix& m, const RatMatrix& rhs);

std::optional<RatMatrix> inverse(const RatMatrix& m);

// Kronecker product with block (i,j) equal to a(i,j)*b.
RatMatrix kron(const RatMatrix& a, const RatMatrix& b);

// Column-stacking vectorization, so vec(A*X*B) = kron(B^T, A) * vec(X).
RatMatrix vec(const RatMatrix& m);
RatMatrix unvec(const RatMatrix& v, std::size_t rows, std::size_t cols);

// Exact membership of each column of candidates in the span of basis.
bool in_span(const std::vector<RatMatrix>& basis, const RatMatrix& candidate);

} // namespace commeq
