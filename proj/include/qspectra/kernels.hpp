#pragma once

#include <complex>
#include <cstddef>
#include <span>

#include "qspectra/common.hpp"

namespace qspectra::kernels {

enum class Exec { Serial, Parallel };

/// Arrays below this size always run the serial path; the fork/join
/// overhead dominates on small transforms.
inline constexpr std::size_t kParallelCutoff = std::size_t(1) << 12;

// In-place unnormalized Walsh-Hadamard butterfly:
// out[w] = sum_x (-1)^{<x,w>} in[x]. Length must be a power of two
// (validated by the callers).
void fwht(std::span<cdouble> a, Exec exec = Exec::Parallel);
void fwht(std::span<double> a, Exec exec = Exec::Parallel);
void fwht_serial(std::span<cdouble> a);
void fwht_serial(std::span<double> a);

/// One single-qubit gate on the amplitude array. `target_bit` counts from the
/// least significant index bit; `gate` is column-major (g00,g10,g01,g11).
/// With mask_bit >= 0 the gate acts only on basis states whose mask bit
/// equals mask_val (branch-controlled application).
void apply_gate_1q(std::span<cdouble> amps, int target_bit, const cdouble gate[4],
                   int mask_bit = -1, int mask_val = 0, Exec exec = Exec::Parallel);
void apply_gate_1q_serial(std::span<cdouble> amps, int target_bit, const cdouble gate[4],
                          int mask_bit = -1, int mask_val = 0);

}  // namespace qspectra::kernels
