// Compares the serial elimination reference against the parallel kernel on
// the two workloads the library actually runs: dense rank of random rational
// matrices, and the consequence-chain build whose row evaluation is the
// OpenMP-parallel hot loop.

#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "zinbiel/linalg.hpp"
#include "zinbiel/rng.hpp"
#include "zinbiel/tortkara.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace zinbiel;

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::vector<std::vector<Scalar>> random_matrix(SplitMix64& rng, std::size_t rows,
                                               std::size_t cols) {
    std::vector<std::vector<Scalar>> m(rows, std::vector<Scalar>(cols, Scalar(0)));
    for (auto& row : m)
        for (auto& x : row)
            if (rng.below(3) != 0) x = random_nonzero_coeff(rng, 9);
    return m;
}

}  // namespace

int main(int argc, char** argv) {
    std::size_t size = argc > 1 ? static_cast<std::size_t>(std::atoi(argv[1])) : 160;
    int scan_n = argc > 2 ? std::atoi(argv[2]) : 5;

#ifdef _OPENMP
    std::printf("openmp: %d thread(s)\n", omp_get_max_threads());
#else
    std::printf("openmp: not compiled in\n");
#endif

    SplitMix64 rng(12345);
    std::vector<std::vector<Scalar>> m = random_matrix(rng, size, size + size / 4);

    auto t0 = std::chrono::steady_clock::now();
    std::size_t r_serial = dense_rank_serial(m);
    double dt_serial = seconds_since(t0);

    t0 = std::chrono::steady_clock::now();
    std::size_t r_parallel = dense_rank(m);
    double dt_parallel = seconds_since(t0);

    std::printf("dense rank %zux%zu: serial %.3fs, parallel %.3fs, ranks %zu/%zu %s\n", size,
                size + size / 4, dt_serial, dt_parallel, r_serial, r_parallel,
                r_serial == r_parallel ? "agree" : "DISAGREE");
    if (r_serial != r_parallel) return 1;

    t0 = std::chrono::steady_clock::now();
    ConsequenceSpan chain = tortkara_consequence_span(scan_n);
    double dt_chain = seconds_since(t0);
    std::printf("consequence chain n=%d: %.3fs, rank %zu over dimension %zu\n", scan_n, dt_chain,
                chain.span.rank(), chain.coords.dimension());
    return 0;
}
