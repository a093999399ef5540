#include "commeq/reference.hpp"

#include <utility>

#include "commeq/error.hpp"

namespace commeq::reference {

RatMatrix mat_mul(const RatMatrix& a, const RatMatrix& b) {
    if (a.cols() != b.rows()) throw ValidationError("matrix product dimension mismatch");
    RatMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) {
            Rational acc;
            for (std::size_t k = 0; k < a.cols(); ++k) acc += a(i, k) * b(k, j);
            out(i, j) = std::move(acc);
        }
    return out;
}

RatMatrix kron(const RatMatrix& a, const RatMatrix& b) {
    RatMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    return out;
}

std::vector<RatMatrix> nullspace(const RatMatrix& m) {
    const std::size_t nrows = m.rows();
    const std::size_t ncols = m.cols();

    // Scale each row by the lcm of its denominators; the kernel is unchanged.
    std::vector<mpz_class> w(nrows * ncols);
    for (std::size_t i = 0; i < nrows; ++i) {
        mpz_class scale = 1;
        for (std::size_t j = 0; j < ncols; ++j)
            mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), m(i, j).get_den_mpz_t());
        for (std::size_t j = 0; j < ncols; ++j) {
            mpz_class factor = scale / mpz_class(m(i, j).get_den());
            w[i * ncols + j] = mpz_class(m(i, j).get_num()) * factor;
        }
    }

    // Fraction-free forward elimination (Bareiss): every division is exact.
    std::vector<std::size_t> pivots;
    mpz_class prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < nrows; ++c) {
        std::size_t prow = nrows;
        for (std::size_t i = r; i < nrows; ++i) {
            if (w[i * ncols + c] != 0) {
                prow = i;
                break;
            }
        }
        if (prow == nrows) continue;
        if (prow != r)
            for (std::size_t j = 0; j < ncols; ++j)
                std::swap(w[r * ncols + j], w[prow * ncols + j]);
        for (std::size_t i = r + 1; i < nrows; ++i) {
            for (std::size_t j = c + 1; j < ncols; ++j) {
                mpz_class t = w[r * ncols + c] * w[i * ncols + j] -
                              w[i * ncols + c] * w[r * ncols + j];
                mpz_divexact(w[i * ncols + j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            w[i * ncols + c] = 0;
        }
        prev = w[r * ncols + c];
        pivots.push_back(c);
        ++r;
    }

    // Normalize the echelon rows to reduced form (rational from here on).
    const std::size_t npiv = pivots.size();
    RatMatrix red(npiv, ncols);
    for (std::size_t i = 0; i < npiv; ++i)
        for (std::size_t j = 0; j < ncols; ++j) red(i, j) = Rational(w[i * ncols + j]);
    for (std::size_t k = npiv; k-- > 0;) {
        const Rational pivot = red(k, pivots[k]);
        for (std::size_t j = pivots[k]; j < ncols; ++j) red(k, j) /= pivot;
        for (std::size_t i = 0; i < k; ++i) {
            if (red(i, pivots[k]) == 0) continue;
            const Rational factor = red(i, pivots[k]);
            for (std::size_t j = pivots[k]; j < ncols; ++j)
                red(i, j) -= factor * red(k, j);
        }
    }

    std::vector<bool> is_pivot(ncols, false);
    for (std::size_t c : pivots) is_pivot[c] = true;
    std::vector<RatMatrix> basis;
    for (std::size_t f = 0; f < ncols; ++f) {
        if (is_pivot[f]) continue;
        RatMatrix v(ncols, 1);
        v(f, 0) = 1;
        for (std::size_t k = 0; k < npiv; ++k) v(pivots[k], 0) = -red(k, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace commeq::reference
