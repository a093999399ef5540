#pragma once

#include <cstddef>
#include <vector>

#include "commeq/matrix.hpp"
#include "commeq/poly.hpp"
#include "commeq/rational.hpp"

namespace commeq {

struct Rung {
    Rational value;
    std::size_t multiplicity = 0;
};

// A maximal chain base, base+1, ..., base+height of eigenvalues, stored with
// rungs in descending order (value base+height first).
struct Ladder {
    Rational base;
    std::size_t height = 0;
    std::vector<Rung> rungs;

    std::size_t size() const;
};

struct LadderPartition {
    std::vector<Ladder> ladders; // sorted by base ascending
    // ordered[j] = input[permutation[j]]: reorders the input spectrum so the
    // ladders are contiguous and internally ordered by descending rung.
    std::vector<std::size_t> permutation;

    std::vector<Rational> ordered_values() const;
};

// Splits a spectrum into ladders: maximal runs of distinct values at exact
// integer step 1. Values whose difference is not an integer never share a
// ladder, and distinct ladders never contain values at distance exactly 1.
LadderPartition partition_spectrum(const std::vector<Rational>& values);

struct LadderReport {
    bool block_triangular = false;
    std::vector<bool> rung_certificates; // Y^2 - Y^3 = 0 per diagonal rung block
};

struct DecompositionReport {
    bool conforms = false;
    bool cross_ladder_block_diagonal = false;
    std::vector<LadderReport> per_ladder;
};

// For a solution X of X*A - A*X = X^2 - X^3 with A diagonal in ladder order:
// checks X is block-diagonal across ladders, block upper-triangular within
// each ladder, and that every diagonal rung block Y satisfies Y^2 = Y^3.
// Throws MathRejection when X is not a solution.
DecompositionReport verify_decomposition(const RatMatrix& a_diag, const RatMatrix& x,
                                         const LadderPartition& part);

struct DistanceFamily {
    std::size_t distance = 0;
    std::size_t block_i = 0;
    std::size_t block_j = 0;
    std::vector<RatMatrix> kernel; // block-local homogeneous solutions
};

struct ExtendOutcome {
    bool feasible = false;
    RatMatrix x;                        // particular solution, free parameters zeroed
    std::vector<std::size_t> free_dims; // kernel dimension totals per distance 1..height
    std::vector<DistanceFamily> families;
    // set when infeasible
    std::size_t offending_distance = 0;
    std::size_t offending_i = 0;
    std::size_t offending_j = 0;
};

// A single-ladder diagonal ladder_a = diag((b+c)I, ..., (b+1)I, b*I) and rung
// blocks y_blocks (same order) with Y^2 = Y^3: solves the strictly-upper block
// equations distance by distance, taking the particular solution with all free
// parameters set to zero.
ExtendOutcome extend_diagonal_to_solution(const RatMatrix& ladder_a,
                                          const std::vector<RatMatrix>& y_blocks);

// X'(j,k) = X(perm[j], perm[k]): conjugation by the permutation that realizes
// the ladder ordering.
RatMatrix permute_symmetric(const RatMatrix& x, const std::vector<std::size_t>& perm);
std::vector<Rational> permute_values(const std::vector<Rational>& values,
                                     const std::vector<std::size_t>& perm);

// The polynomial x^2 - x^3 in factored form, the fixed right-hand side of the
// ladder machinery.
FactoredPoly square_cube_poly();

} // namespace commeq
