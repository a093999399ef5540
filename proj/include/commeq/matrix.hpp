#pragma once

#include <cstddef>
#include <vector>

#include "commeq/rational.hpp"

namespace commeq {

// Dense row-major matrix over exact rationals. Equality is exact entrywise
// equality; all arithmetic is exact.
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(std::size_t rows, std::size_t cols);
    RatMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);

    static RatMatrix identity(std::size_t n);
    static RatMatrix diagonal(const std::vector<Rational>& entries);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const {
        return entries_[i * cols_ + j];
    }

    bool operator==(const RatMatrix& other) const = default;

    RatMatrix transpose() const;
    bool is_square() const { return rows_ == cols_; }
    bool is_zero() const;
    bool is_diagonal() const;
    std::vector<Rational> diagonal_entries() const;

    RatMatrix block(std::size_t row0, std::size_t col0, std::size_t nrows,
                    std::size_t ncols) const;
    void set_block(std::size_t row0, std::size_t col0, const RatMatrix& value);

    const std::vector<Rational>& entries() const { return entries_; }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> entries_;
};

RatMatrix operator+(const RatMatrix& a, const RatMatrix& b);
RatMatrix operator-(const RatMatrix& a, const RatMatrix& b);
RatMatrix operator-(const RatMatrix& a);
RatMatrix operator*(const Rational& scale, const RatMatrix& a);

// Exact matrix product; runs the entry loop under OpenMP once the output is
// large enough to pay for it.
RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
inline RatMatrix mat_mul(const RatMatrix& a, const RatMatrix& b) { return a * b; }

RatMatrix mat_pow(const RatMatrix& a, std::size_t exponent);

RatMatrix hcat(const RatMatrix& left, const RatMatrix& right);
RatMatrix vcat(const RatMatrix& top, const RatMatrix& bottom);

} // namespace commeq
