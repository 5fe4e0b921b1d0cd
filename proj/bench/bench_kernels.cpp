// Timing comparison of the serial reference kernels against the OpenMP
// paths, with an equality check so the reference stays authoritative.

#include <chrono>
#include <cstdio>
#include <random>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "qspectra/kernels.hpp"
#include "qspectra/statevector.hpp"

using qspectra::cdouble;
namespace kernels = qspectra::kernels;

namespace {

std::vector<cdouble> random_vector(std::size_t len, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<cdouble> v(len);
    for (cdouble& a : v) {
        const double re = static_cast<double>(rng() >> 11) * 0x1.0p-53 - 0.5;
        const double im = static_cast<double>(rng() >> 11) * 0x1.0p-53 - 0.5;
        a = {re, im};
    }
    return v;
}

template <typename Fn>
double time_best_of(int reps, Fn&& fn) {
    double best = 1e30;
    for (int r = 0; r < reps; ++r) {
        const auto t0 = std::chrono::steady_clock::now();
        fn();
        const auto t1 = std::chrono::steady_clock::now();
        best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
    }
    return best;
}

bool equal(const std::vector<cdouble>& a, const std::vector<cdouble>& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return false;
    return true;
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads %d\n\n", omp_get_max_threads());
#else
    std::printf("OpenMP disabled; parallel columns fall back to the serial path\n\n");
#endif

    std::printf("%-24s %12s %12s %9s %6s\n", "kernel", "serial (ms)", "parallel (ms)", "speedup", "equal");
    for (int logn : {16, 18, 20, 22}) {
        const std::size_t len = std::size_t(1) << logn;
        const std::vector<cdouble> input = random_vector(len, 7);

        std::vector<cdouble> a = input;
        const double ts = time_best_of(3, [&] {
            a = input;
            kernels::fwht_serial(std::span<cdouble>(a));
        });
        std::vector<cdouble> b = input;
        const double tp = time_best_of(3, [&] {
            b = input;
            kernels::fwht(std::span<cdouble>(b), kernels::Exec::Parallel);
        });
        std::printf("fwht 2^%-18d %12.2f %12.2f %8.2fx %6s\n", logn, ts, tp, ts / tp,
                    equal(a, b) ? "yes" : "NO");
    }

    std::printf("\n");
    for (int q : {18, 20, 22}) {
        const std::size_t len = std::size_t(1) << q;
        const std::vector<cdouble> input = random_vector(len, 11);
        const auto gate = qspectra::sim::gate_omega(5);

        std::vector<cdouble> a = input;
        const double ts = time_best_of(3, [&] {
            a = input;
            for (int bit = 0; bit < q; ++bit)
                kernels::apply_gate_1q_serial(a, bit, gate.u.data());
        });
        std::vector<cdouble> b = input;
        const double tp = time_best_of(3, [&] {
            b = input;
            for (int bit = 0; bit < q; ++bit)
                kernels::apply_gate_1q(b, bit, gate.u.data());
        });
        std::printf("gate layer q=%-10d %12.2f %12.2f %8.2fx %6s\n", q, ts, tp, ts / tp,
                    equal(a, b) ? "yes" : "NO");
    }
    return 0;
}
