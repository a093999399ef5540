#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "commeq/rational.hpp"

namespace commeq {

// Dimension of the similarity class of diag(J2 x k, 0_t, I_{n-2k-t}):
// 2n(t+2k) - 6k^2 - 6kt - 2t^2. Rejects infeasible (k,t).
long long similarity_class_dim(long long n, long long k, long long t);

// max_k 2k(n-k) over 0 <= k <= n/2; equals floor(n^2/2).
long long nilpotent_variety_dim(long long n);

struct CubeDim {
    long long dim = 0; // floor(2n^2/3)
    long long k = 0;
    long long t = 0;
};

// Exhaustive maximization of similarity_class_dim over the feasible grid; the
// reported argmax is the canonical point (k = n/3 rounded down, t = 1 iff
// n = 2 mod 3) whenever that point attains the maximum.
CubeDim cube_variety_dim(long long n);

// floor((11p^2 + 11q^2 + 2pq) / 16).
long long rho(long long p, long long q);

struct DimReport {
    long long p = 0, q = 0;
    long long rho = 0;
    long long nu = 0;
    long long case1_dim = 0; // commuting stratum bound
    long long case2_dim = 0; // max of r_p(k1,t1) + r_q(k2,t2) + tau1*tau2, tau >= 1
    long long k1 = 0, k2 = 0, tau1 = 0, tau2 = 0;
    bool in_exception_table = false;
};

DimReport nu(long long p, long long q);

// Membership in the mod-16 table of couples with nu = rho - 1. A row
// "eps p = a, eps q = b" matches (p = a and q = b) or (p = -a and q = -b)
// mod 16; the rows with a = 0 and a = 8 carry no sign.
bool exception_table_member(long long p, long long q);

struct ScanRow {
    long long p = 0, q = 0;
    long long rho = 0, nu = 0;
    bool in_table = false;
};

struct ScanReport {
    std::vector<ScanRow> rows; // (p, q) ascending
    std::size_t couples = 0;
    std::size_t exceptions = 0; // nu = rho - 1
    double fraction = 0.0;
    std::vector<std::pair<long long, long long>> table_mismatches;
    std::vector<std::pair<long long, long long>> range_violations; // nu outside {rho, rho-1}
};

// All couples 1 <= p <= p_max, 1 <= q <= q_max with 1/ratio <= p/q <= ratio.
// Cells are independent and run under OpenMP when parallel is set; rows are
// merged in deterministic (p, q) order either way.
ScanReport scan_dims(long long p_max, long long q_max,
                     const Rational& ratio_bound = Rational(5), bool parallel = true);

} // namespace commeq
