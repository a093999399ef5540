#include "commeq/ladder.hpp"

#include <map>
#include <utility>

#include "commeq/equation.hpp"
#include "commeq/error.hpp"
#include "commeq/linalg.hpp"

namespace commeq {

FactoredPoly square_cube_poly() {
    return FactoredPoly{Rational(-1), {{Rational(0), 2}, {Rational(1), 1}}};
}

std::size_t Ladder::size() const {
    std::size_t total = 0;
    for (const auto& rung : rungs) total += rung.multiplicity;
    return total;
}

std::vector<Rational> LadderPartition::ordered_values() const {
    std::vector<Rational> out;
    for (const auto& ladder : ladders)
        for (const auto& rung : ladder.rungs)
            out.insert(out.end(), rung.multiplicity, rung.value);
    return out;
}

LadderPartition partition_spectrum(const std::vector<Rational>& values) {
    // distinct values ascending, each with its input positions in input order
    std::map<Rational, std::vector<std::size_t>> positions;
    for (std::size_t i = 0; i < values.size(); ++i) positions[values[i]].push_back(i);

    std::vector<Rational> distinct;
    distinct.reserve(positions.size());
    for (const auto& [value, idx] : positions) distinct.push_back(value);

    LadderPartition part;
    std::size_t run_start = 0;
    for (std::size_t i = 0; i <= distinct.size(); ++i) {
        const bool closes = i == distinct.size() || (i > run_start && distinct[i] - distinct[i - 1] != 1);
        if (!closes) continue;
        if (i > run_start) {
            Ladder ladder;
            ladder.base = distinct[run_start];
            ladder.height = i - 1 - run_start;
            for (std::size_t k = i; k-- > run_start;)
                ladder.rungs.push_back({distinct[k], positions[distinct[k]].size()});
            part.ladders.push_back(std::move(ladder));
        }
        run_start = i;
    }

    for (const auto& ladder : part.ladders)
        for (const auto& rung : ladder.rungs)
            for (std::size_t idx : positions[rung.value]) part.permutation.push_back(idx);
    return part;
}

namespace {

struct BlockLayout {
    std::vector<std::size_t> offsets; // per ladder
    std::vector<std::vector<std::size_t>> rung_offsets;
};

BlockLayout layout_of(const LadderPartition& part) {
    BlockLayout layout;
    std::size_t offset = 0;
    for (const auto& ladder : part.ladders) {
        layout.offsets.push_back(offset);
        std::vector<std::size_t> rung_offs;
        for (const auto& rung : ladder.rungs) {
            rung_offs.push_back(offset);
            offset += rung.multiplicity;
        }
        layout.rung_offsets.push_back(std::move(rung_offs));
    }
    return layout;
}

} // namespace

DecompositionReport verify_decomposition(const RatMatrix& a_diag, const RatMatrix& x,
                                         const LadderPartition& part) {
    if (!a_diag.is_diagonal()) throw ValidationError("A must be diagonal");
    if (a_diag.diagonal_entries() != part.ordered_values())
        throw ValidationError("A is not ordered according to the partition");

    const ResidualReport res = residual({a_diag, square_cube_poly(), std::nullopt}, x);
    if (!res.is_solution)
        throw MathRejection("X does not solve X*A - A*X = X^2 - X^3");

    const BlockLayout layout = layout_of(part);
    DecompositionReport report;
    report.cross_ladder_block_diagonal = true;
    for (std::size_t r = 0; r < part.ladders.size(); ++r) {
        for (std::size_t s = 0; s < part.ladders.size(); ++s) {
            if (r == s) continue;
            if (!x.block(layout.offsets[r], layout.offsets[s], part.ladders[r].size(),
                         part.ladders[s].size())
                     .is_zero())
                report.cross_ladder_block_diagonal = false;
        }
    }

    report.conforms = report.cross_ladder_block_diagonal;
    for (std::size_t r = 0; r < part.ladders.size(); ++r) {
        const Ladder& ladder = part.ladders[r];
        LadderReport lr;
        lr.block_triangular = true;
        for (std::size_t i = 0; i < ladder.rungs.size(); ++i) {
            for (std::size_t j = 0; j < i; ++j) {
                if (!x.block(layout.rung_offsets[r][i], layout.rung_offsets[r][j],
                             ladder.rungs[i].multiplicity, ladder.rungs[j].multiplicity)
                         .is_zero())
                    lr.block_triangular = false;
            }
            const RatMatrix y =
                x.block(layout.rung_offsets[r][i], layout.rung_offsets[r][i],
                        ladder.rungs[i].multiplicity, ladder.rungs[i].multiplicity);
            lr.rung_certificates.push_back((mat_pow(y, 2) - mat_pow(y, 3)).is_zero());
        }
        bool ok = lr.block_triangular;
        for (bool cert : lr.rung_certificates) ok = ok && cert;
        report.conforms = report.conforms && ok;
        report.per_ladder.push_back(std::move(lr));
    }
    return report;
}

namespace {

// Multiplicities of a single-ladder diagonal, highest rung first; validates
// the shape diag((b+c)I, ..., (b+1)I, b*I).
std::vector<std::size_t> single_ladder_sizes(const RatMatrix& ladder_a) {
    if (!ladder_a.is_diagonal() || ladder_a.rows() == 0)
        throw ValidationError("ladder matrix must be diagonal and nonempty");
    const std::vector<Rational> diag = ladder_a.diagonal_entries();
    std::vector<std::size_t> sizes{1};
    for (std::size_t i = 1; i < diag.size(); ++i) {
        if (diag[i] == diag[i - 1]) {
            ++sizes.back();
        } else if (diag[i - 1] - diag[i] == 1) {
            sizes.push_back(1);
        } else {
            throw ValidationError("diagonal is not a single descending ladder");
        }
    }
    return sizes;
}

} // namespace

ExtendOutcome extend_diagonal_to_solution(const RatMatrix& ladder_a,
                                          const std::vector<RatMatrix>& y_blocks) {
    const std::vector<std::size_t> sizes = single_ladder_sizes(ladder_a);
    const std::size_t nblocks = sizes.size();
    if (y_blocks.size() != nblocks)
        throw ValidationError("expected one rung block per rung of the ladder");
    for (std::size_t b = 0; b < nblocks; ++b) {
        if (!y_blocks[b].is_square() || y_blocks[b].rows() != sizes[b])
            throw ValidationError("rung block size mismatch at block " + std::to_string(b));
        if (!(mat_pow(y_blocks[b], 2) - mat_pow(y_blocks[b], 3)).is_zero())
            throw MathRejection("rung block " + std::to_string(b) +
                                " does not satisfy Y^2 = Y^3");
    }

    std::vector<std::size_t> offsets(nblocks, 0);
    for (std::size_t b = 1; b < nblocks; ++b) offsets[b] = offsets[b - 1] + sizes[b - 1];
    const std::size_t n = offsets.back() + sizes.back();

    ExtendOutcome outcome;
    outcome.x = RatMatrix(n, n);
    for (std::size_t b = 0; b < nblocks; ++b) outcome.x.set_block(offsets[b], offsets[b], y_blocks[b]);

    const DensePoly f = square_cube_poly().expand();
    outcome.free_dims.assign(nblocks - 1, 0);

    for (std::size_t d = 1; d < nblocks; ++d) {
        // With all blocks at distance >= d still zero, the (i, i+d) block of
        // X^2 - X^3 is exactly the inhomogeneous term of the distance-d system.
        const RatMatrix carried = mat_pow(outcome.x, 2) - mat_pow(outcome.x, 3);
        for (std::size_t i = 0; i + d < nblocks; ++i) {
            const std::size_t j = i + d;
            const RatMatrix rhs =
                -carried.block(offsets[i], offsets[j], sizes[i], sizes[j]);
            RatMatrix system = block_poly_operator(f, y_blocks[i], y_blocks[j]);
            for (std::size_t k = 0; k < system.rows(); ++k)
                system(k, k) += Rational(static_cast<long>(d));

            const AffineSolution sol = solve_affine(system, vec(rhs));
            if (!sol.consistent) {
                outcome.feasible = false;
                outcome.offending_distance = d;
                outcome.offending_i = i;
                outcome.offending_j = j;
                return outcome;
            }
            outcome.x.set_block(offsets[i], offsets[j], unvec(sol.particular, sizes[i], sizes[j]));
            outcome.free_dims[d - 1] += sol.kernel.size();

            DistanceFamily family;
            family.distance = d;
            family.block_i = i;
            family.block_j = j;
            for (const auto& k : sol.kernel) family.kernel.push_back(unvec(k, sizes[i], sizes[j]));
            outcome.families.push_back(std::move(family));
        }
    }
    outcome.feasible = true;
    return outcome;
}

RatMatrix permute_symmetric(const RatMatrix& x, const std::vector<std::size_t>& perm) {
    if (!x.is_square() || x.rows() != perm.size())
        throw ValidationError("permutation size mismatch");
    RatMatrix out(x.rows(), x.cols());
    for (std::size_t i = 0; i < perm.size(); ++i)
        for (std::size_t j = 0; j < perm.size(); ++j) out(i, j) = x(perm[i], perm[j]);
    return out;
}

std::vector<Rational> permute_values(const std::vector<Rational>& values,
                                     const std::vector<std::size_t>& perm) {
    if (values.size() != perm.size()) throw ValidationError("permutation size mismatch");
    std::vector<Rational> out(values.size());
    for (std::size_t i = 0; i < perm.size(); ++i) out[i] = values[perm[i]];
    return out;
}

} // namespace commeq
