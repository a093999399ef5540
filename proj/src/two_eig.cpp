#include "commeq/two_eig.hpp"

#include <algorithm>

#include "commeq/equation.hpp"
#include "commeq/error.hpp"
#include "commeq/linalg.hpp"

namespace commeq {

void TwoEigInstance::validate() const {
    if (p == 0 || q == 0) throw ValidationError("block sizes must be at least 1");
    if (mu == lambda) throw ValidationError("the two eigenvalues must be distinct");
    f.validate();
}

RatMatrix TwoEigInstance::a_matrix() const {
    std::vector<Rational> diag(p + q, mu);
    for (std::size_t i = p; i < p + q; ++i) diag[i] = lambda;
    return RatMatrix::diagonal(diag);
}

const char* regime_name(Regime regime) {
    switch (regime) {
        case Regime::TrivialOnly: return "TrivialOnly";
        case Regime::UpperTriangular: return "UpperTriangular";
        case Regime::LowerTriangular: return "LowerTriangular";
        case Regime::Degenerate: return "Degenerate";
    }
    return "?";
}

Regime classify(const TwoEigInstance& inst) {
    inst.validate();
    const std::vector<Rational> critical = inst.f.critical_set();
    const Rational gap = inst.lambda - inst.mu;
    const bool up = std::binary_search(critical.begin(), critical.end(), gap);
    const bool down = std::binary_search(critical.begin(), critical.end(), -gap);
    if (up && down) return Regime::Degenerate;
    if (up) return Regime::UpperTriangular;
    if (down) return Regime::LowerTriangular;
    return Regime::TrivialOnly;
}

namespace {

void require_annihilated(const FactoredPoly& f, const RatMatrix& m, const char* name) {
    if (!m.is_square()) throw ValidationError(std::string(name) + " must be square");
    if (!f.expand().eval_matrix(m).is_zero())
        throw MathRejection(std::string("f(") + name + ") != 0");
}

std::vector<RatMatrix> unvec_all(const std::vector<RatMatrix>& vectors, std::size_t rows,
                                 std::size_t cols) {
    std::vector<RatMatrix> out;
    out.reserve(vectors.size());
    for (const auto& v : vectors) out.push_back(unvec(v, rows, cols));
    return out;
}

} // namespace

SolutionFamily solve_triangular(const TwoEigInstance& inst, const RatMatrix& p,
                                const RatMatrix& s) {
    inst.validate();
    require_annihilated(inst.f, p, "P");
    require_annihilated(inst.f, s, "S");
    if (p.rows() != inst.p || s.rows() != inst.q)
        throw ValidationError("P and S must match the instance block sizes");

    const std::size_t dim = inst.p * inst.q;
    RatMatrix system = block_poly_operator(inst.f, p, s);
    const Rational gap = inst.lambda - inst.mu;
    for (std::size_t i = 0; i < dim; ++i) system(i, i) -= gap;

    SolutionFamily family;
    family.p_block = p;
    family.s_block = s;
    family.q_basis = unvec_all(nullspace(system), inst.p, inst.q);
    family.bilinear_constrained = false;
    return family;
}

SolutionFamily solve_degenerate(const TwoEigInstance& inst, const RatMatrix& p,
                                const RatMatrix& s) {
    inst.validate();
    require_annihilated(inst.f, p, "P");
    require_annihilated(inst.f, s, "S");
    if (p.rows() != inst.p || s.rows() != inst.q)
        throw ValidationError("P and S must match the instance block sizes");

    const DensePoly fprime = inst.f.expand().derivative();
    const Rational gap = inst.lambda - inst.mu;

    // Q is constrained by P*Q = Q*S and f'(P)*Q = (lambda-mu)*Q, both read in
    // the column-stacking convention.
    auto hull = [&fprime](const RatMatrix& left, const RatMatrix& right,
                          const Rational& eigen_gap) {
        const std::size_t rows = left.rows();
        const std::size_t cols = right.rows();
        const std::size_t dim = rows * cols;
        const RatMatrix commute = kron(RatMatrix::identity(cols), left) -
                                  kron(right.transpose(), RatMatrix::identity(rows));
        RatMatrix eig = kron(RatMatrix::identity(cols), fprime.eval_matrix(left));
        for (std::size_t i = 0; i < dim; ++i) eig(i, i) -= eigen_gap;
        return unvec_all(nullspace(vcat(commute, eig)), rows, cols);
    };

    SolutionFamily family;
    family.p_block = p;
    family.s_block = s;
    family.q_basis = hull(p, s, gap);
    family.r_basis = hull(s, p, -gap);
    family.bilinear_constrained = true;
    return family;
}

bool check_bilinear(const RatMatrix& q, const RatMatrix& r) {
    if (q.rows() != r.cols() || q.cols() != r.rows())
        throw ValidationError("Q and R are not conformable");
    return (q * r).is_zero() && (r * q).is_zero();
}

namespace {

std::vector<RatMatrix> diagonal_representatives(std::size_t size,
                                                const std::vector<Rational>& roots) {
    std::vector<RatMatrix> out;
    std::vector<std::size_t> idx(size, 0);
    while (true) {
        std::vector<Rational> diag(size);
        for (std::size_t i = 0; i < size; ++i) diag[i] = roots[idx[i]];
        out.push_back(RatMatrix::diagonal(diag));
        // next nondecreasing index sequence
        std::size_t k = size;
        while (k-- > 0) {
            if (idx[k] + 1 < roots.size()) {
                const std::size_t next = idx[k] + 1;
                for (std::size_t j = k; j < size; ++j) idx[j] = next;
                break;
            }
            if (k == 0) return out;
        }
    }
}

mpz_class multiset_count(std::size_t size, std::size_t nroots) {
    mpz_class count;
    mpz_bin_uiui(count.get_mpz_t(), size + nroots - 1, size);
    return count;
}

} // namespace

std::vector<std::pair<RatMatrix, RatMatrix>> enumerate_diagonal_pairs(
    const TwoEigInstance& inst, std::size_t cap) {
    inst.validate();
    if (inst.f.roots.empty())
        throw MathRejection("f has no rational roots: no diagonal solutions exist");

    std::vector<Rational> roots;
    for (const auto& [root, mult] : inst.f.roots) roots.push_back(root);
    std::sort(roots.begin(), roots.end());

    const mpz_class total =
        multiset_count(inst.p, roots.size()) * multiset_count(inst.q, roots.size());
    if (total > static_cast<unsigned long>(cap))
        throw ValidationError("enumeration would produce " + total.get_str() +
                              " pairs, beyond the cap of " + std::to_string(cap));

    const std::vector<RatMatrix> ps = diagonal_representatives(inst.p, roots);
    const std::vector<RatMatrix> ss = diagonal_representatives(inst.q, roots);
    std::vector<std::pair<RatMatrix, RatMatrix>> out;
    out.reserve(ps.size() * ss.size());
    for (const auto& p : ps)
        for (const auto& s : ss) out.emplace_back(p, s);
    return out;
}

RatMatrix assemble(const SolutionFamily& family, const std::vector<Rational>& q_coeffs,
                   const std::vector<Rational>& r_coeffs) {
    if (q_coeffs.size() != family.q_basis.size() || r_coeffs.size() != family.r_basis.size())
        throw ValidationError("coefficient counts do not match the family bases");
    const std::size_t p = family.p_block.rows();
    const std::size_t q = family.s_block.rows();

    RatMatrix qblock(p, q);
    for (std::size_t k = 0; k < q_coeffs.size(); ++k)
        qblock = qblock + q_coeffs[k] * family.q_basis[k];
    RatMatrix rblock(q, p);
    for (std::size_t k = 0; k < r_coeffs.size(); ++k)
        rblock = rblock + r_coeffs[k] * family.r_basis[k];

    RatMatrix x(p + q, p + q);
    x.set_block(0, 0, family.p_block);
    x.set_block(0, p, qblock);
    x.set_block(p, 0, rblock);
    x.set_block(p, p, family.s_block);
    return x;
}

} // namespace commeq
