#include "commeq/variety_dims.hpp"

#include <array>

#include "commeq/error.hpp"

namespace commeq {

long long similarity_class_dim(long long n, long long k, long long t) {
    if (n < 0 || k < 0 || t < 0 || 2 * k + t > n)
        throw ValidationError("infeasible Jordan profile (n, k, t)");
    return 2 * n * (t + 2 * k) - 6 * k * k - 6 * k * t - 2 * t * t;
}

long long nilpotent_variety_dim(long long n) {
    if (n < 0) throw ValidationError("negative size");
    long long best = 0;
    for (long long k = 0; 2 * k <= n; ++k) {
        const long long v = 2 * k * (n - k);
        if (v > best) best = v;
    }
    return best;
}

CubeDim cube_variety_dim(long long n) {
    if (n < 0) throw ValidationError("negative size");
    CubeDim out;
    for (long long k = 0; 2 * k <= n; ++k) {
        for (long long t = 0; 2 * k + t <= n; ++t) {
            const long long v = similarity_class_dim(n, k, t);
            if (v > out.dim) {
                out.dim = v;
                out.k = k;
                out.t = t;
            }
        }
    }
    const long long ck = n / 3;
    const long long ct = (n % 3 == 2) ? 1 : 0;
    if (2 * ck + ct <= n && similarity_class_dim(n, ck, ct) == out.dim) {
        out.k = ck;
        out.t = ct;
    }
    return out;
}

long long rho(long long p, long long q) {
    return (11 * p * p + 11 * q * q + 2 * p * q) / 16;
}

namespace {

struct BestPerTau {
    // best[tau] = (max over k of r_m(k, m - 2k - tau), smallest maximizing k),
    // for tau = 1..m.
    std::vector<std::pair<long long, long long>> best;
};

BestPerTau best_stratum_table(long long m) {
    BestPerTau out;
    out.best.assign(static_cast<std::size_t>(m) + 1, {0, 0});
    for (long long tau = 1; tau <= m; ++tau) {
        long long bv = 0, bk = 0;
        bool first = true;
        for (long long k = 0; 2 * k + tau <= m; ++k) {
            const long long v = similarity_class_dim(m, k, m - 2 * k - tau);
            if (first || v > bv) {
                bv = v;
                bk = k;
                first = false;
            }
        }
        out.best[static_cast<std::size_t>(tau)] = {bv, bk};
    }
    return out;
}

DimReport nu_with_tables(long long p, long long q, const BestPerTau& bp,
                         const BestPerTau& bq, long long cube_p, long long cube_q) {
    DimReport report;
    report.p = p;
    report.q = q;
    report.rho = rho(p, q);
    report.case1_dim = cube_p + cube_q;

    bool first = true;
    for (long long tau1 = 1; tau1 <= p; ++tau1) {
        const auto& [v1, k1] = bp.best[static_cast<std::size_t>(tau1)];
        for (long long tau2 = 1; tau2 <= q; ++tau2) {
            const auto& [v2, k2] = bq.best[static_cast<std::size_t>(tau2)];
            const long long v = v1 + v2 + tau1 * tau2;
            if (first || v > report.case2_dim) {
                report.case2_dim = v;
                report.k1 = k1;
                report.k2 = k2;
                report.tau1 = tau1;
                report.tau2 = tau2;
                first = false;
            }
        }
    }

    report.nu = report.case1_dim > report.case2_dim ? report.case1_dim : report.case2_dim;
    report.in_exception_table = exception_table_member(p, q);
    return report;
}

} // namespace

DimReport nu(long long p, long long q) {
    if (p < 1 || q < 1) throw ValidationError("p and q must be at least 1");
    return nu_with_tables(p, q, best_stratum_table(p), best_stratum_table(q),
                          cube_variety_dim(p).dim, cube_variety_dim(q).dim);
}

bool exception_table_member(long long p, long long q) {
    struct Row {
        int a;
        std::array<int, 5> b;
        int nb;
        bool signed_row;
    };
    static constexpr Row rows[] = {
        {0, {4, 5, 8, 11, 12}, 5, false},
        {1, {11, 12, 14, 15, 0}, 4, true},
        {2, {2, 5, 6, 14, 15}, 5, true},
        {3, {5, 6, 8, 9, 0}, 4, true},
        {4, {0, 8, 9, 12, 15}, 5, true},
        {5, {0, 2, 3, 15, 0}, 4, true},
        {6, {2, 3, 6, 9, 10}, 5, true},
        {7, {9, 10, 12, 13, 0}, 4, true},
        {8, {0, 3, 4, 12, 13}, 5, false},
    };
    const int pm = static_cast<int>(((p % 16) + 16) % 16);
    const int qm = static_cast<int>(((q % 16) + 16) % 16);
    for (const Row& row : rows) {
        for (int i = 0; i < row.nb; ++i) {
            const int b = row.b[static_cast<std::size_t>(i)];
            if (pm == row.a && qm == b) return true;
            if (row.signed_row && pm == (16 - row.a) % 16 && qm == (16 - b) % 16) return true;
        }
    }
    return false;
}

ScanReport scan_dims(long long p_max, long long q_max, const Rational& ratio_bound,
                     bool parallel) {
    if (p_max < 1 || q_max < 1) throw ValidationError("scan bounds must be at least 1");
    if (ratio_bound <= 0) throw ValidationError("ratio bound must be positive");
    const mpz_class rnum = ratio_bound.get_num();
    const mpz_class rden = ratio_bound.get_den();

    const long long m_max = p_max > q_max ? p_max : q_max;
    std::vector<BestPerTau> tables(static_cast<std::size_t>(m_max) + 1);
    std::vector<long long> cubes(static_cast<std::size_t>(m_max) + 1, 0);
    for (long long m = 1; m <= m_max; ++m) {
        tables[static_cast<std::size_t>(m)] = best_stratum_table(m);
        cubes[static_cast<std::size_t>(m)] = cube_variety_dim(m).dim;
    }

    auto in_ratio = [&rnum, &rden](long long p, long long q) {
        // p/q <= ratio and q/p <= ratio, exactly.
        const mpz_class zp(static_cast<long>(p));
        const mpz_class zq(static_cast<long>(q));
        return zp * rden <= zq * rnum && zq * rden <= zp * rnum;
    };

    std::vector<std::vector<ScanRow>> per_p(static_cast<std::size_t>(p_max) + 1);
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (long long p = 1; p <= p_max; ++p) {
        auto& bucket = per_p[static_cast<std::size_t>(p)];
        for (long long q = 1; q <= q_max; ++q) {
            if (!in_ratio(p, q)) continue;
            const DimReport rep =
                nu_with_tables(p, q, tables[static_cast<std::size_t>(p)],
                               tables[static_cast<std::size_t>(q)],
                               cubes[static_cast<std::size_t>(p)],
                               cubes[static_cast<std::size_t>(q)]);
            bucket.push_back({p, q, rep.rho, rep.nu, rep.in_exception_table});
        }
    }

    ScanReport report;
    for (long long p = 1; p <= p_max; ++p) {
        for (const ScanRow& row : per_p[static_cast<std::size_t>(p)]) {
            ++report.couples;
            const bool is_exception = row.nu == row.rho - 1;
            if (is_exception) ++report.exceptions;
            if (row.nu != row.rho && row.nu != row.rho - 1)
                report.range_violations.emplace_back(row.p, row.q);
            if (is_exception != row.in_table)
                report.table_mismatches.emplace_back(row.p, row.q);
            report.rows.push_back(row);
        }
    }
    report.fraction = report.couples == 0
                          ? 0.0
                          : static_cast<double>(report.exceptions) /
                                static_cast<double>(report.couples);
    return report;
}

} // namespace commeq
