#include "qspectra/gf2.hpp"

#include <algorithm>
#include <numeric>

namespace qspectra::gf2 {

BitMatrix BitMatrix::identity(int n) {
    BitMatrix a;
    a.n = n;
    a.rows.resize(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) a.rows[static_cast<std::size_t>(i - 1)] = var_mask(n, i);
    return a;
}

std::uint32_t BitMatrix::mul_vec(std::uint32_t x) const {
    std::uint32_t out = 0;
    for (int i = 1; i <= n; ++i)
        if (dot_parity(rows[static_cast<std::size_t>(i - 1)], x)) out |= var_mask(n, i);
    return out;
}

BitMatrix BitMatrix::transposed() const {
    BitMatrix t;
    t.n = n;
    t.rows.assign(static_cast<std::size_t>(n), 0);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (rows[static_cast<std::size_t>(i - 1)] & var_mask(n, j))
                t.rows[static_cast<std::size_t>(j - 1)] |= var_mask(n, i);
    return t;
}

BitMatrix BitMatrix::operator*(const BitMatrix& other) const {
    if (n != other.n) fail("size", "bit matrix dimension mismatch");
    const BitMatrix bt = other.transposed();
    BitMatrix c;
    c.n = n;
    c.rows.assign(static_cast<std::size_t>(n), 0);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (dot_parity(rows[static_cast<std::size_t>(i - 1)],
                           bt.rows[static_cast<std::size_t>(j - 1)]))
                c.rows[static_cast<std::size_t>(i - 1)] |= var_mask(n, j);
    return c;
}

bool is_identity(const BitMatrix& a) { return a == BitMatrix::identity(a.n); }

bool is_orthogonal(const BitMatrix& a) {
    const BitMatrix at = a.transposed();
    return is_identity(a * at) && is_identity(at * a);
}

BitMatrix permutation_matrix(std::span<const int> perm) {
    const int n = static_cast<int>(perm.size());
    BitMatrix a;
    a.n = n;
    a.rows.assign(static_cast<std::size_t>(n), 0);
    for (int i = 1; i <= n; ++i) {
        const int j = perm[static_cast<std::size_t>(i - 1)];
        if (j < 1 || j > n) fail("index_range", "permutation entry out of range");
        a.rows[static_cast<std::size_t>(i - 1)] = var_mask(n, j);
    }
    return a;
}

BitMatrix random_permutation_matrix(int n, std::mt19937_64& rng) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    for (int i = n - 1; i > 0; --i) {
        const auto j = static_cast<std::size_t>(rng() % static_cast<std::uint64_t>(i + 1));
        std::swap(perm[static_cast<std::size_t>(i)], perm[j]);
    }
    return permutation_matrix(perm);
}

bool IncrementalSolver::add(std::uint32_t z, int b) {
    std::uint8_t r = static_cast<std::uint8_t>(b & 1);
    // reduce z against the echelon rows
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        const std::uint32_t pivot = std::uint32_t(1)
                                    << (31 - std::countl_zero(rows_[k]));
        if (z & pivot) {
            z ^= rows_[k];
            r ^= rhs_[k];
        }
    }
    if (z == 0) {
        if (r) consistent_ = false;
        return false;
    }
    rows_.push_back(z);
    rhs_.push_back(r);
    // keep rows sorted by leading bit, highest first
    for (std::size_t k = rows_.size() - 1; k > 0; --k) {
        if (rows_[k - 1] < rows_[k]) {
            std::swap(rows_[k - 1], rows_[k]);
            std::swap(rhs_[k - 1], rhs_[k]);
        } else {
            break;
        }
    }
    return true;
}

AffineSolution IncrementalSolver::solution() const {
    return solve(rows_, rhs_, n_);
}

AffineSolution solve(std::span<const std::uint32_t> rows_z,
                     std::span<const std::uint8_t> rhs_b, int n) {
    AffineSolution sol;
    sol.n = n;
    std::vector<std::uint32_t> rows(rows_z.begin(), rows_z.end());
    std::vector<std::uint8_t> rhs(rhs_b.begin(), rhs_b.end());
    if (rows.size() != rhs.size()) fail("size", "row/rhs count mismatch");

    std::vector<int> pivot_col_of_row;  // 1-based variable index per pivot row
    std::size_t rank = 0;
    for (int col = 1; col <= n && rank < rows.size(); ++col) {
        const std::uint32_t mask = var_mask(n, col);
        std::size_t pivot = rank;
        while (pivot < rows.size() && !(rows[pivot] & mask)) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        std::swap(rhs[rank], rhs[pivot]);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r != rank && (rows[r] & mask)) {
                rows[r] ^= rows[rank];
                rhs[r] ^= rhs[rank];
            }
        }
        pivot_col_of_row.push_back(col);
        ++rank;
    }
    for (std::size_t r = rank; r < rows.size(); ++r) {
        if (rows[r] == 0 && rhs[r]) {
            sol.consistent = false;
            return sol;
        }
    }

    std::vector<bool> is_pivot(static_cast<std::size_t>(n + 1), false);
    for (int c : pivot_col_of_row) is_pivot[static_cast<std::size_t>(c)] = true;

    // particular solution: free variables zero
    sol.offset = 0;
    for (std::size_t r = 0; r < rank; ++r)
        if (rhs[r]) sol.offset |= var_mask(n, pivot_col_of_row[r]);

    // basis: one vector per free variable
    for (int c = 1; c <= n; ++c) {
        if (is_pivot[static_cast<std::size_t>(c)]) continue;
        std::uint32_t v = var_mask(n, c);
        for (std::size_t r = 0; r < rank; ++r)
            if (rows[r] & var_mask(n, c)) v |= var_mask(n, pivot_col_of_row[r]);
        sol.basis.push_back(v);
    }
    return sol;
}

}  // namespace qspectra::gf2
