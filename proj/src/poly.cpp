#include "commeq/poly.hpp"

#include <algorithm>
#include <utility>

#include "commeq/error.hpp"

namespace commeq {

namespace {
void strip(std::vector<Rational>& coeffs) {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}
} // namespace

DensePoly::DensePoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    strip(coeffs_);
}

DensePoly DensePoly::constant(const Rational& c) { return DensePoly({c}); }

DensePoly DensePoly::monomial(std::size_t power, const Rational& c) {
    std::vector<Rational> coeffs(power + 1);
    coeffs[power] = c;
    return DensePoly(std::move(coeffs));
}

Rational DensePoly::coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : Rational(0);
}

Rational DensePoly::eval(const Rational& x) const {
    Rational acc;
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
    return acc;
}

RatMatrix DensePoly::eval_matrix(const RatMatrix& x) const {
    if (!x.is_square()) throw ValidationError("polynomial evaluation at a non-square matrix");
    const std::size_t n = x.rows();
    RatMatrix acc(n, n);
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        acc = acc * x;
        for (std::size_t d = 0; d < n; ++d) acc(d, d) += coeffs_[i];
    }
    return acc;
}

DensePoly DensePoly::derivative() const {
    if (coeffs_.size() <= 1) return DensePoly();
    std::vector<Rational> out(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        out[i - 1] = Rational(static_cast<long>(i)) * coeffs_[i];
    return DensePoly(std::move(out));
}

DensePoly operator+(const DensePoly& a, const DensePoly& b) {
    std::vector<Rational> out(std::max(a.coeffs().size(), b.coeffs().size()));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coeff(i) + b.coeff(i);
    return DensePoly(std::move(out));
}

DensePoly operator-(const DensePoly& a, const DensePoly& b) {
    std::vector<Rational> out(std::max(a.coeffs().size(), b.coeffs().size()));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coeff(i) - b.coeff(i);
    return DensePoly(std::move(out));
}

DensePoly operator*(const DensePoly& a, const DensePoly& b) {
    if (a.is_zero() || b.is_zero()) return DensePoly();
    std::vector<Rational> out(a.coeffs().size() + b.coeffs().size() - 1);
    for (std::size_t i = 0; i < a.coeffs().size(); ++i)
        for (std::size_t j = 0; j < b.coeffs().size(); ++j)
            out[i + j] += a.coeffs()[i] * b.coeffs()[j];
    return DensePoly(std::move(out));
}

DensePoly operator*(const Rational& scale, const DensePoly& a) {
    std::vector<Rational> out(a.coeffs());
    for (auto& c : out) c *= scale;
    return DensePoly(std::move(out));
}

void FactoredPoly::validate() const {
    if (lead == 0) throw ValidationError("factored polynomial with zero leading coefficient");
    for (std::size_t i = 0; i < roots.size(); ++i) {
        if (roots[i].second == 0)
            throw ValidationError("factored polynomial root with zero multiplicity");
        for (std::size_t j = i + 1; j < roots.size(); ++j)
            if (roots[i].first == roots[j].first)
                throw ValidationError("factored polynomial with repeated root entry");
    }
}

DensePoly FactoredPoly::expand() const {
    validate();
    DensePoly out = DensePoly::constant(lead);
    for (const auto& [root, mult] : roots) {
        const DensePoly factor({-root, Rational(1)});
        for (unsigned k = 0; k < mult; ++k) out = out * factor;
    }
    return out;
}

std::vector<Rational> FactoredPoly::critical_set() const {
    const DensePoly deriv = expand().derivative();
    std::vector<Rational> out;
    for (const auto& [root, mult] : roots) {
        const Rational value = deriv.eval(root);
        if (value != 0) out.push_back(value);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace commeq
