// Times the serial and OpenMP row-elimination kernels on random dense
// rational matrices and cross-checks that ranks agree. Entry magnitudes are
// kept small so the comparison measures elimination, not GMP reallocation.
#include <chrono>
#include <cstdio>

#include "bgg/linalg.hpp"
#include "bgg/rng.hpp"

using namespace bgg;

namespace {

RationalMatrix random_matrix(SplitMix64& rng, int rows, int cols) {
    RationalMatrix m(rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) m.at(r, c) = Rational(rng.uniform(-9, 9));
    return m;
}

double seconds(RrefResult (*kernel)(const RationalMatrix&), const RationalMatrix& m, int* rank) {
    auto start = std::chrono::steady_clock::now();
    RrefResult res = kernel(m);
    auto stop = std::chrono::steady_clock::now();
    *rank = res.rank;
    return std::chrono::duration<double>(stop - start).count();
}

}  // namespace

int main() {
    SplitMix64 rng(0x5eedULL);
    std::printf("%8s %8s %12s %12s %9s\n", "rows", "cols", "serial(s)", "parallel(s)", "speedup");
    for (int n : {30, 60, 90, 120}) {
        RationalMatrix m = random_matrix(rng, n, n + n / 4);
        int rank_serial = 0, rank_parallel = 0;
        double ts = seconds(rref_serial, m, &rank_serial);
        double tp = seconds(rref_parallel, m, &rank_parallel);
        if (rank_serial != rank_parallel) {
            std::printf("rank mismatch at n=%d: %d vs %d\n", n, rank_serial, rank_parallel);
            return 1;
        }
        std::printf("%8d %8d %12.4f %12.4f %8.2fx\n", n, n + n / 4, ts, tp,
                    tp > 0 ? ts / tp : 0.0);
    }
    return 0;
}
