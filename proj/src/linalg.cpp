#include "commeq/linalg.hpp"

#include <algorithm>
#include <utility>

#include "commeq/error.hpp"

namespace commeq {

RrefResult rref(RatMatrix m) {
    const std::size_t nrows = m.rows();
    const std::size_t ncols = m.cols();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < nrows; ++c) {
        std::size_t prow = nrows;
        for (std::size_t i = r; i < nrows; ++i) {
            if (m(i, c) != 0) {
                prow = i;
                break;
            }
        }
        if (prow == nrows) continue;
        if (prow != r)
            for (std::size_t j = 0; j < ncols; ++j) std::swap(m(r, j), m(prow, j));

        if (m(r, c) != 1) {
            const Rational pivot = m(r, c);
            for (std::size_t j = c; j < ncols; ++j) m(r, j) /= pivot;
        }

        // Each remaining row is updated independently against the pivot row.
#pragma omp parallel for schedule(static) if (nrows >= 64)
        for (long long i = 0; i < static_cast<long long>(nrows); ++i) {
            if (static_cast<std::size_t>(i) == r) continue;
            if (m(i, c) == 0) continue;
            const Rational factor = m(i, c);
            for (std::size_t j = c; j < ncols; ++j) m(i, j) -= factor * m(r, j);
        }

        pivots.push_back(c);
        ++r;
    }
    return {std::move(m), std::move(pivots)};
}

std::size_t rank(const RatMatrix& m) { return rref(m).pivot_cols.size(); }

namespace {

std::vector<RatMatrix> kernel_from_rref(const RrefResult& rr, std::size_t ncols) {
    std::vector<bool> is_pivot(ncols, false);
    for (std::size_t c : rr.pivot_cols) is_pivot[c] = true;
    std::vector<RatMatrix> basis;
    for (std::size_t f = 0; f < ncols; ++f) {
        if (is_pivot[f]) continue;
        RatMatrix v(ncols, 1);
        v(f, 0) = 1;
        for (std::size_t k = 0; k < rr.pivot_cols.size(); ++k)
            v(rr.pivot_cols[k], 0) = -rr.reduced(k, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace

std::vector<RatMatrix> nullspace(const RatMatrix& m) {
    return kernel_from_rref(rref(m), m.cols());
}

AffineSolution solve_affine(const RatMatrix& m, const RatMatrix& rhs) {
    if (rhs.cols() != 1 || rhs.rows() != m.rows())
        throw ValidationError("solve_affine expects a conformable column rhs");
    const std::size_t n = m.cols();
    RrefResult rr = rref(hcat(m, rhs));

    AffineSolution out;
    for (std::size_t c : rr.pivot_cols) {
        if (c == n) return out; // pivot in the rhs column: inconsistent
    }
    out.consistent = true;
    out.particular = RatMatrix(n, 1);
    for (std::size_t k = 0; k < rr.pivot_cols.size(); ++k)
        out.particular(rr.pivot_cols[k], 0) = rr.reduced(k, n);
    // The left block of the augmented RREF is the RREF of m itself.
    out.kernel = kernel_from_rref(rr, n);
    return out;
}

std::optional<RatMatrix> inverse(const RatMatrix& m) {
    if (!m.is_square()) throw ValidationError("inverse of a non-square matrix");
    const std::size_t n = m.rows();
    RrefResult rr = rref(hcat(m, RatMatrix::identity(n)));
    if (rr.pivot_cols.size() != n) return std::nullopt;
    for (std::size_t k = 0; k < n; ++k)
        if (rr.pivot_cols[k] != k) return std::nullopt;
    return rr.reduced.block(0, n, n, n);
}

RatMatrix kron(const RatMatrix& a, const RatMatrix& b) {
    RatMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    const long long blocks = static_cast<long long>(a.rows()) * static_cast<long long>(a.cols());
#pragma omp parallel for schedule(static) if (blocks * static_cast<long long>(b.rows() * b.cols()) >= 2048)
    for (long long idx = 0; idx < blocks; ++idx) {
        const std::size_t i = static_cast<std::size_t>(idx) / a.cols();
        const std::size_t j = static_cast<std::size_t>(idx) % a.cols();
        for (std::size_t k = 0; k < b.rows(); ++k)
            for (std::size_t l = 0; l < b.cols(); ++l)
                out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
    return out;
}

RatMatrix vec(const RatMatrix& m) {
    RatMatrix out(m.rows() * m.cols(), 1);
    std::size_t idx = 0;
    for (std::size_t j = 0; j < m.cols(); ++j)
        for (std::size_t i = 0; i < m.rows(); ++i) out(idx++, 0) = m(i, j);
    return out;
}

RatMatrix unvec(const RatMatrix& v, std::size_t rows, std::size_t cols) {
    if (v.cols() != 1 || v.rows() != rows * cols)
        throw ValidationError("unvec size mismatch");
    RatMatrix out(rows, cols);
    std::size_t idx = 0;
    for (std::size_t j = 0; j < cols; ++j)
        for (std::size_t i = 0; i < rows; ++i) out(i, j) = v(idx++, 0);
    return out;
}

bool in_span(const std::vector<RatMatrix>& basis, const RatMatrix& candidate) {
    if (candidate.cols() != 1) throw ValidationError("in_span expects a column vector");
    if (basis.empty()) return candidate.is_zero();
    RatMatrix stacked(candidate.rows(), basis.size());
    for (std::size_t k = 0; k < basis.size(); ++k) {
        if (basis[k].rows() != candidate.rows() || basis[k].cols() != 1)
            throw ValidationError("in_span basis shape mismatch");
        for (std::size_t i = 0; i < candidate.rows(); ++i) stacked(i, k) = basis[k](i, 0);
    }
    return rank(stacked) == rank(hcat(stacked, candidate));
}

} // namespace commeq
