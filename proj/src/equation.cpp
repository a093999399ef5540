#include "commeq/equation.hpp"

#include <algorithm>
#include <map>

#include "commeq/error.hpp"

namespace commeq {

void EquationInstance::validate() const {
    if (!a.is_square()) throw ValidationError("A must be square");
    f.validate();
    if (diagonalizer) {
        if (diagonalizer->rows() != a.rows() || diagonalizer->cols() != a.cols())
            throw ValidationError("diagonalizer shape mismatch");
        const auto inv = inverse(*diagonalizer);
        if (!inv) throw ValidationError("diagonalizer is singular");
        if (!((*inv) * a * (*diagonalizer)).is_diagonal())
            throw ValidationError("diagonalizer does not diagonalize A");
    }
}

ResidualReport residual(const EquationInstance& inst, const RatMatrix& x) {
    inst.validate();
    const std::size_t n = inst.a.rows();
    if (x.rows() != n || x.cols() != n)
        throw ValidationError("X must match the size of A");

    const DensePoly f = inst.f.expand();
    const RatMatrix fx = f.eval_matrix(x);

    ResidualReport report;
    report.residual = x * inst.a - inst.a * x - fx;
    report.is_solution = report.residual.is_zero();

    RatMatrix power = fx;
    for (std::size_t k = 1; k <= n; ++k) {
        if (power.is_zero()) {
            report.f_of_x_nilpotent = true;
            report.nilpotency_index = k;
            break;
        }
        if (k < n) power = power * fx;
    }
    return report;
}

RatMatrix block_poly_operator(const DensePoly& f, const RatMatrix& p, const RatMatrix& s) {
    if (!p.is_square() || !s.is_square())
        throw ValidationError("block operator expects square diagonal blocks");
    const std::size_t np = p.rows();
    const std::size_t ns = s.rows();
    const std::size_t dim = np * ns;
    RatMatrix out(dim, dim);
    if (f.degree() < 1) return out;

    const std::size_t deg = static_cast<std::size_t>(f.degree());
    const RatMatrix st = s.transpose();
    std::vector<RatMatrix> p_pows{RatMatrix::identity(np)};
    std::vector<RatMatrix> st_pows{RatMatrix::identity(ns)};
    for (std::size_t k = 1; k < deg; ++k) {
        p_pows.push_back(p_pows.back() * p);
        st_pows.push_back(st_pows.back() * st);
    }

    for (std::size_t k = 1; k <= deg; ++k) {
        const Rational ak = f.coeff(k);
        if (ak == 0) continue;
        for (std::size_t i = 0; i < k; ++i) {
            const std::size_t j = k - 1 - i;
            out = out + ak * kron(st_pows[j], p_pows[i]);
        }
    }
    return out;
}

RatMatrix block_poly_operator(const FactoredPoly& f, const RatMatrix& p, const RatMatrix& s) {
    return block_poly_operator(f.expand(), p, s);
}

IdentityCheck check_poly_commutator(const EquationInstance& inst, const RatMatrix& x,
                                    const DensePoly& poly, unsigned p_exp,
                                    const DensePoly& g) {
    if (p_exp < 2) throw ValidationError("check_poly_commutator requires p >= 2");
    const RatMatrix& a = inst.a;
    if (!a.is_square() || x.rows() != a.rows() || x.cols() != a.cols())
        throw ValidationError("A and X must be square of the same size");

    const RatMatrix rhs_core = mat_pow(x, p_exp) * g.eval_matrix(x);

    IdentityCheck result;
    result.precondition_ok = (x * a - a * x) == rhs_core;
    if (!result.precondition_ok) return result;

    const RatMatrix px = poly.eval_matrix(x);
    const RatMatrix lhs = px * a - a * px;
    const RatMatrix rhs = poly.derivative().eval_matrix(x) * rhs_core;
    result.holds = lhs == rhs;
    return result;
}

bool check_kernel_invariance(const EquationInstance& inst, const RatMatrix& x,
                             std::size_t k) {
    const RatMatrix& a = inst.a;
    if (!a.is_square() || x.rows() != a.rows() || x.cols() != a.cols())
        throw ValidationError("A and X must be square of the same size");

    const std::vector<RatMatrix> basis = nullspace(mat_pow(x, k));
    if (basis.empty()) return true;

    RatMatrix stacked(a.rows(), basis.size());
    for (std::size_t c = 0; c < basis.size(); ++c)
        for (std::size_t i = 0; i < a.rows(); ++i) stacked(i, c) = basis[c](i, 0);
    // span(B) is A-invariant iff rank([B | A*B]) = rank(B) = |B|.
    return rank(hcat(stacked, a * stacked)) == basis.size();
}

SupportReport check_eigenspace_support(const EquationInstance& inst, const RatMatrix& x,
                                       const Rational& lambda, const RatMatrix& u) {
    inst.validate();
    const std::size_t n = inst.a.rows();
    if (x.rows() != n || x.cols() != n)
        throw ValidationError("X must match the size of A");
    if (u.rows() != n || u.cols() != 1)
        throw ValidationError("u must be an n x 1 column");
    if (u.is_zero() || !(inst.a * u == lambda * u))
        throw ValidationError("u is not an eigenvector of A for lambda");

    RatMatrix d = inst.a;
    RatMatrix image; // X*u expressed in the eigenbasis of A
    if (inst.a.is_diagonal()) {
        image = x * u;
    } else if (inst.diagonalizer) {
        const RatMatrix basis_inv = *inverse(*inst.diagonalizer);
        d = basis_inv * inst.a * (*inst.diagonalizer);
        image = basis_inv * (x * u);
    } else {
        throw ValidationError("A is not diagonal and no diagonalizer was supplied");
    }

    const std::vector<Rational> diag = d.diagonal_entries();
    std::map<Rational, bool> nonzero;
    for (std::size_t i = 0; i < n; ++i)
        if (image(i, 0) != 0) nonzero[diag[i]] = true;

    SupportReport report;
    for (const auto& [value, flag] : nonzero) report.support.push_back(value);

    std::size_t window = 0;
    while (std::find(diag.begin(), diag.end(), lambda + Rational(static_cast<long>(window))) !=
           diag.end())
        ++window;
    report.window = window;

    report.passes = true;
    for (const Rational& value : report.support) {
        const Rational offset = value - lambda;
        if (!is_integer(offset) || offset < 0 ||
            offset >= Rational(static_cast<long>(window))) {
            report.passes = false;
            break;
        }
    }
    return report;
}

} // namespace commeq
