#include "commeq/matrix.hpp"

#include <utility>

#include "commeq/error.hpp"

namespace commeq {

namespace {
// OpenMP pays off only once the entry count is past this; below it the
// thread fork costs more than the GMP work.
constexpr long long kParallelEntries = 2048;
} // namespace

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_)
        throw ValidationError("matrix entry count does not match rows*cols");
}

RatMatrix RatMatrix::identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

RatMatrix RatMatrix::diagonal(const std::vector<Rational>& entries) {
    RatMatrix m(entries.size(), entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
    return m;
}

RatMatrix RatMatrix::transpose() const {
    RatMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
}

bool RatMatrix::is_zero() const {
    for (const auto& e : entries_)
        if (e != 0) return false;
    return true;
}

bool RatMatrix::is_diagonal() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (i != j && (*this)(i, j) != 0) return false;
    return true;
}

std::vector<Rational> RatMatrix::diagonal_entries() const {
    std::vector<Rational> out;
    const std::size_t n = rows_ < cols_ ? rows_ : cols_;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back((*this)(i, i));
    return out;
}

RatMatrix RatMatrix::block(std::size_t row0, std::size_t col0, std::size_t nrows,
                           std::size_t ncols) const {
    if (row0 + nrows > rows_ || col0 + ncols > cols_)
        throw ValidationError("block range out of bounds");
    RatMatrix out(nrows, ncols);
    for (std::size_t i = 0; i < nrows; ++i)
        for (std::size_t j = 0; j < ncols; ++j) out(i, j) = (*this)(row0 + i, col0 + j);
    return out;
}

void RatMatrix::set_block(std::size_t row0, std::size_t col0, const RatMatrix& value) {
    if (row0 + value.rows() > rows_ || col0 + value.cols() > cols_)
        throw ValidationError("block range out of bounds");
    for (std::size_t i = 0; i < value.rows(); ++i)
        for (std::size_t j = 0; j < value.cols(); ++j)
            (*this)(row0 + i, col0 + j) = value(i, j);
}

RatMatrix operator+(const RatMatrix& a, const RatMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw ValidationError("matrix sum dimension mismatch");
    RatMatrix out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) + b(i, j);
    return out;
}

RatMatrix operator-(const RatMatrix& a, const RatMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw ValidationError("matrix difference dimension mismatch");
    RatMatrix out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j) - b(i, j);
    return out;
}

RatMatrix operator-(const RatMatrix& a) {
    RatMatrix out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = -a(i, j);
    return out;
}

RatMatrix operator*(const Rational& scale, const RatMatrix& a) {
    RatMatrix out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = scale * a(i, j);
    return out;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
    if (a.cols() != b.rows()) throw ValidationError("matrix product dimension mismatch");
    RatMatrix out(a.rows(), b.cols());
    const long long total = static_cast<long long>(a.rows()) * static_cast<long long>(b.cols());
    const std::size_t inner = a.cols();
    const std::size_t bcols = b.cols();
#pragma omp parallel for schedule(static) if (total >= kParallelEntries)
    for (long long idx = 0; idx < total; ++idx) {
        const std::size_t i = static_cast<std::size_t>(idx) / bcols;
        const std::size_t j = static_cast<std::size_t>(idx) % bcols;
        Rational acc;
        for (std::size_t k = 0; k < inner; ++k) acc += a(i, k) * b(k, j);
        out(i, j) = std::move(acc);
    }
    return out;
}

RatMatrix mat_pow(const RatMatrix& a, std::size_t exponent) {
    if (!a.is_square()) throw ValidationError("matrix power of a non-square matrix");
    RatMatrix out = RatMatrix::identity(a.rows());
    for (std::size_t k = 0; k < exponent; ++k) out = out * a;
    return out;
}

RatMatrix hcat(const RatMatrix& left, const RatMatrix& right) {
    if (left.rows() != right.rows()) throw ValidationError("hcat row mismatch");
    RatMatrix out(left.rows(), left.cols() + right.cols());
    out.set_block(0, 0, left);
    out.set_block(0, left.cols(), right);
    return out;
}

RatMatrix vcat(const RatMatrix& top, const RatMatrix& bottom) {
    if (top.cols() != bottom.cols()) throw ValidationError("vcat column mismatch");
    RatMatrix out(top.rows() + bottom.rows(), top.cols());
    out.set_block(0, 0, top);
    out.set_block(top.rows(), 0, bottom);
    return out;
}

} // namespace commeq
