#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "qspectra/common.hpp"

namespace qspectra::gf2 {

/// Square bit matrix over F_2. Row i (1-based variable i) is stored at
/// rows[i-1] as an n-bit vector in index form, so (A*x)_i = <row_i, x>.
struct BitMatrix {
    int n = 0;
    std::vector<std::uint32_t> rows;

    static BitMatrix identity(int n);

    std::uint32_t mul_vec(std::uint32_t x) const;
    BitMatrix transposed() const;
    BitMatrix operator*(const BitMatrix& other) const;
    bool operator==(const BitMatrix&) const = default;
};

bool is_identity(const BitMatrix& a);

/// A * A^T = A^T * A = I over F_2.
bool is_orthogonal(const BitMatrix& a);

/// Permutation matrix sending variable i to variable perm[i-1].
BitMatrix permutation_matrix(std::span<const int> perm);

BitMatrix random_permutation_matrix(int n, std::mt19937_64& rng);

/// Solution of a linear system rows_z * u = rhs_b over F_2: an affine
/// subspace offset + span(basis), or consistent=false.
struct AffineSolution {
    bool consistent = true;
    int n = 0;
    std::uint32_t offset = 0;
    std::vector<std::uint32_t> basis;
};

AffineSolution solve(std::span<const std::uint32_t> rows_z,
                     std::span<const std::uint8_t> rhs_b, int n);

/// Incremental rank tracker for the same system, used by the sampling loop.
class IncrementalSolver {
public:
    explicit IncrementalSolver(int n) : n_(n) {}

    /// Adds row z * u = b. Returns true if the rank increased.
    bool add(std::uint32_t z, int b);
    int rank() const { return static_cast<int>(rows_.size()); }
    bool consistent() const { return consistent_; }
    AffineSolution solution() const;

private:
    int n_;
    bool consistent_ = true;
    std::vector<std::uint32_t> rows_;  // echelon rows, z-part
    std::vector<std::uint8_t> rhs_;
};

}  // namespace qspectra::gf2
