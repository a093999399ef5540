#pragma once

#include <utility>
#include <vector>

#include "commeq/matrix.hpp"
#include "commeq/rational.hpp"

namespace commeq {

// Dense polynomial over the rationals; coeffs[i] multiplies x^i and trailing
// zeros are stripped, so degree() is coeffs.size()-1 (-1 for the zero
// polynomial).
class DensePoly {
public:
    DensePoly() = default;
    explicit DensePoly(std::vector<Rational> coeffs);

    static DensePoly constant(const Rational& c);
    static DensePoly monomial(std::size_t power, const Rational& c = Rational(1));

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    Rational coeff(std::size_t i) const;
    bool is_zero() const { return coeffs_.empty(); }

    Rational eval(const Rational& x) const;
    // Horner evaluation at a square matrix.
    RatMatrix eval_matrix(const RatMatrix& x) const;

    DensePoly derivative() const;

    bool operator==(const DensePoly& other) const = default;

private:
    std::vector<Rational> coeffs_;
};

DensePoly operator+(const DensePoly& a, const DensePoly& b);
DensePoly operator-(const DensePoly& a, const DensePoly& b);
DensePoly operator*(const DensePoly& a, const DensePoly& b);
DensePoly operator*(const Rational& scale, const DensePoly& a);

// Polynomial given by leading coefficient and rational roots with
// multiplicities: lead * prod (x - root)^mult.
struct FactoredPoly {
    Rational lead;
    std::vector<std::pair<Rational, unsigned>> roots;

    void validate() const; // lead != 0, roots distinct, multiplicities >= 1
    DensePoly expand() const;
    // { f'(r) : r a root } with 0 removed, sorted ascending.
    std::vector<Rational> critical_set() const;
};

} // namespace commeq
