#include "qspectra/kernels.hpp"

#include <cstdint>

namespace qspectra::kernels {

namespace {

template <typename T>
void fwht_serial_impl(std::span<T> a) {
    const std::size_t len = a.size();
    for (std::size_t h = 1; h < len; h <<= 1) {
        for (std::size_t i = 0; i < len; i += 2 * h) {
            for (std::size_t j = i; j < i + h; ++j) {
                const T x = a[j];
                const T y = a[j + h];
                a[j] = x + y;
                a[j + h] = x - y;
            }
        }
    }
}

// Same butterfly, flattened to one loop of len/2 independent pairs per stage
// so every stage parallelizes evenly.
template <typename T>
void fwht_parallel_impl(std::span<T> a) {
    const std::size_t len = a.size();
    T* data = a.data();
    const std::ptrdiff_t pairs = static_cast<std::ptrdiff_t>(len / 2);
    for (std::size_t h = 1; h < len; h <<= 1) {
        const std::size_t mask = h - 1;
#pragma omp parallel for schedule(static)
        for (std::ptrdiff_t p = 0; p < pairs; ++p) {
            const std::size_t up = static_cast<std::size_t>(p);
            const std::size_t i0 = ((up & ~mask) << 1) | (up & mask);
            const std::size_t i1 = i0 + h;
            const T x = data[i0];
            const T y = data[i1];
            data[i0] = x + y;
            data[i1] = x - y;
        }
    }
}

template <typename T>
void fwht_dispatch(std::span<T> a, Exec exec) {
    if (exec == Exec::Parallel && a.size() >= kParallelCutoff)
        fwht_parallel_impl(a);
    else
        fwht_serial_impl(a);
}

inline bool mask_ok(std::size_t idx, int mask_bit, int mask_val) {
    return mask_bit < 0 ||
           static_cast<int>((idx >> mask_bit) & 1u) == mask_val;
}

}  // namespace

void fwht(std::span<cdouble> a, Exec exec) { fwht_dispatch(a, exec); }
void fwht(std::span<double> a, Exec exec) { fwht_dispatch(a, exec); }
void fwht_serial(std::span<cdouble> a) { fwht_serial_impl(a); }
void fwht_serial(std::span<double> a) { fwht_serial_impl(a); }

void apply_gate_1q_serial(std::span<cdouble> amps, int target_bit, const cdouble gate[4],
                          int mask_bit, int mask_val) {
    const std::size_t len = amps.size();
    const std::size_t h = std::size_t(1) << target_bit;
    const std::size_t mask = h - 1;
    for (std::size_t p = 0; p < len / 2; ++p) {
        const std::size_t i0 = ((p & ~mask) << 1) | (p & mask);
        if (!mask_ok(i0, mask_bit, mask_val)) continue;
        const std::size_t i1 = i0 + h;
        const cdouble a0 = amps[i0];
        const cdouble a1 = amps[i1];
        amps[i0] = gate[0] * a0 + gate[2] * a1;
        amps[i1] = gate[1] * a0 + gate[3] * a1;
    }
}

void apply_gate_1q(std::span<cdouble> amps, int target_bit, const cdouble gate[4],
                   int mask_bit, int mask_val, Exec exec) {
    const std::size_t len = amps.size();
    if (exec != Exec::Parallel || len < kParallelCutoff) {
        apply_gate_1q_serial(amps, target_bit, gate, mask_bit, mask_val);
        return;
    }
    cdouble* data = amps.data();
    const std::size_t h = std::size_t(1) << target_bit;
    const std::size_t mask = h - 1;
    const std::ptrdiff_t pairs = static_cast<std::ptrdiff_t>(len / 2);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t p = 0; p < pairs; ++p) {
        const std::size_t up = static_cast<std::size_t>(p);
        const std::size_t i0 = ((up & ~mask) << 1) | (up & mask);
        if (!mask_ok(i0, mask_bit, mask_val)) continue;
        const std::size_t i1 = i0 + h;
        const cdouble a0 = data[i0];
        const cdouble a1 = data[i1];
        data[i0] = gate[0] * a0 + gate[2] * a1;
        data[i1] = gate[1] * a0 + gate[3] * a1;
    }
}

}  // namespace qspectra::kernels
