// Timing comparison of the OpenMP kernels against the serial references:
// rational matrix multiply, Kronecker product, kernel extraction, and the
// dimension scan. Not a correctness test (the test suite covers agreement);
// run it by hand to see what the parallel paths buy on this machine.

#include <omp.h>

#include <cstdio>
#include <random>

#include "commeq/linalg.hpp"
#include "commeq/matrix.hpp"
#include "commeq/reference.hpp"
#include "commeq/variety_dims.hpp"

using commeq::RatMatrix;

namespace {

RatMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
    std::uniform_int_distribution<long> num(-20, 20);
    std::uniform_int_distribution<long> den(1, 12);
    RatMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = commeq::rat(num(rng), den(rng));
    return m;
}

template <typename F>
double timed(F&& body) {
    const double start = omp_get_wtime();
    body();
    return omp_get_wtime() - start;
}

void report(const char* name, double serial, double parallel) {
    std::printf("%-28s serial %8.3fs   openmp %8.3fs   speedup %5.2fx\n", name, serial,
                parallel, parallel > 0 ? serial / parallel : 0.0);
}

} // namespace

int main() {
    std::printf("threads: %d\n", omp_get_max_threads());
    std::mt19937_64 rng(20240811);

    {
        const RatMatrix a = random_matrix(rng, 100, 100);
        const RatMatrix b = random_matrix(rng, 100, 100);
        RatMatrix out_serial, out_parallel;
        const double ts = timed([&] { out_serial = commeq::reference::mat_mul(a, b); });
        const double tp = timed([&] { out_parallel = a * b; });
        if (!(out_serial == out_parallel)) std::printf("mat_mul MISMATCH\n");
        report("mat_mul 100x100", ts, tp);
    }

    {
        const RatMatrix a = random_matrix(rng, 24, 24);
        const RatMatrix b = random_matrix(rng, 24, 24);
        RatMatrix out_serial, out_parallel;
        const double ts = timed([&] { out_serial = commeq::reference::kron(a, b); });
        const double tp = timed([&] { out_parallel = commeq::kron(a, b); });
        if (!(out_serial == out_parallel)) std::printf("kron MISMATCH\n");
        report("kron 24x24 (x) 24x24", ts, tp);
    }

    {
        // Rank-deficient by construction so the kernel is nontrivial.
        const RatMatrix left = random_matrix(rng, 120, 60);
        const RatMatrix right = random_matrix(rng, 60, 150);
        const RatMatrix m = left * right;
        std::vector<RatMatrix> ks, kp;
        const double ts = timed([&] { ks = commeq::reference::nullspace(m); });
        const double tp = timed([&] { kp = commeq::nullspace(m); });
        if (!(ks == kp)) std::printf("nullspace MISMATCH\n");
        report("nullspace 120x150 rank 60", ts, tp);
    }

    {
        commeq::ScanReport rs, rp;
        const double ts = timed([&] { rs = commeq::scan_dims(160, 160, commeq::rat(5), false); });
        const double tp = timed([&] { rp = commeq::scan_dims(160, 160, commeq::rat(5), true); });
        if (!(rs.couples == rp.couples && rs.exceptions == rp.exceptions))
            std::printf("scan MISMATCH\n");
        report("dims scan 160x160", ts, tp);
    }

    return 0;
}
