#include "commeq/polyrec.hpp"

#include "commeq/error.hpp"
#include "commeq/ladder.hpp"

namespace commeq {

std::vector<RecurrenceRow> recurrence_table(std::size_t s_max) {
    std::vector<RecurrenceRow> rows;
    rows.reserve(s_max + 1);

    DensePoly p = DensePoly::constant(Rational(1));
    DensePoly phi = DensePoly::constant(Rational(-1));
    rows.push_back({0, p, phi, p.eval(Rational(1))});

    const DensePoly x = DensePoly::monomial(1);
    const DensePoly x2 = DensePoly::monomial(2);
    for (std::size_t s = 1; s <= s_max; ++s) {
        const Rational sc(static_cast<long>(s));
        p = x2 * p.derivative() + DensePoly({sc, sc + 2}) * p;
        phi = Rational(-1) * (x2 * phi.derivative()) - Rational(2) * (x * phi) -
              sc * (DensePoly({Rational(1), Rational(1)}) * phi);
        rows.push_back({s, p, phi, p.eval(Rational(1))});
    }
    return rows;
}

std::vector<DensePoly> phi_sequence(std::size_t s_max) {
    std::vector<DensePoly> out;
    out.reserve(s_max + 1);
    for (auto& row : recurrence_table(s_max)) out.push_back(std::move(row.phi));
    return out;
}

DensePoly shift_absorption_poly(const DensePoly& phi, std::size_t s, std::size_t t) {
    if (s == t) throw ValidationError("shift_absorption_poly requires distinct s and t");
    const DensePoly x = DensePoly::monomial(1);
    const DensePoly x2 = DensePoly::monomial(2);
    const DensePoly one_minus_x({Rational(1), Rational(-1)});
    return Rational(-1) * (phi.derivative() * x2 * one_minus_x) -
           Rational(2) * (phi * x * one_minus_x) +
           Rational(static_cast<long>(t)) * (phi * x2) -
           Rational(static_cast<long>(s)) * phi;
}

IdentityCheck check_shift_chain_identity(const RatMatrix& a_diag, const RatMatrix& x,
                                         const RatMatrix& u, std::size_t s) {
    const std::size_t n = a_diag.rows();
    if (!a_diag.is_square() || x.rows() != n || x.cols() != n)
        throw ValidationError("A and X must be square of the same size");
    if (u.rows() != n || u.cols() != 1) throw ValidationError("u must be an n x 1 column");

    IdentityCheck result;
    const bool pre = a_diag.is_diagonal() && (a_diag * u).is_zero() &&
                     residual({a_diag, square_cube_poly(), std::nullopt}, x).is_solution;
    result.precondition_ok = pre;
    if (!pre) return result;

    RatMatrix chain = RatMatrix::identity(n);
    for (std::size_t j = 0; j <= s; ++j) {
        RatMatrix shifted = a_diag;
        for (std::size_t i = 0; i < n; ++i) shifted(i, i) -= Rational(static_cast<long>(j));
        chain = chain * shifted;
    }
    const RatMatrix lhs = chain * (x * u);

    const DensePoly phi = phi_sequence(s)[s];
    const RatMatrix identity = RatMatrix::identity(n);
    const RatMatrix rhs =
        phi.eval_matrix(x) * mat_pow(x, 2) * mat_pow(identity - x, s + 1) * u;

    result.holds = lhs == rhs;
    return result;
}

} // namespace commeq
