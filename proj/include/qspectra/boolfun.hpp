#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qspectra/common.hpp"
#include "qspectra/gf2.hpp"

namespace qspectra {

/// n-variable Boolean function as a bit-packed truth table of 2^n bits.
/// Bit idx(x) holds f(x) with x_1 the most significant index bit.
struct BooleanFunction {
    int n = 0;
    std::vector<std::uint64_t> words;

    static BooleanFunction zeros(int n);

    std::uint32_t domain_size() const { return std::uint32_t(1) << n; }

    bool test(std::uint32_t x) const {
        return (words[x >> 6] >> (x & 63u)) & 1u;
    }
    bool operator()(std::uint32_t x) const { return test(x); }

    void set(std::uint32_t x, bool v) {
        const std::uint64_t m = std::uint64_t(1) << (x & 63u);
        if (v)
            words[x >> 6] |= m;
        else
            words[x >> 6] &= ~m;
    }

    bool operator==(const BooleanFunction&) const = default;
};

struct PointSet {
    int n = 0;
    std::vector<std::uint32_t> points;  // sorted, unique
};

PointSet make_point_set(int n, std::vector<std::uint32_t> points);

/// g(x) = f(A*x xor b) xor <c,x> xor d.
struct AffineTransform {
    gf2::BitMatrix a;
    std::uint32_t b = 0;
    std::uint32_t c = 0;
    int d = 0;

    static AffineTransform identity(int n);
};

// -- constructors -----------------------------------------------------------

BooleanFunction make_function(int n, std::span<const std::uint8_t> table);
BooleanFunction make_function(int n, std::string_view bits);

/// ANF grammar: terms joined by '+', each term "1" or a product of variables
/// "xIxJ..."; whitespace is ignored. Example: "x1x3 + x1x4 + 1".
BooleanFunction from_anf(int n, std::string_view anf);
BooleanFunction from_anf_masks(int n, std::span<const std::uint32_t> monomials);

BooleanFunction linear_fn(int n, std::uint32_t y);
BooleanFunction indicator_fn(const PointSet& s);

/// Elementary symmetric quadratic s2(x) = xor_{i<j} x_i x_j.
BooleanFunction symmetric_s2(int n);

/// The linear function s2(x xor u) xor s2(x) xor s2(u) of x.
BooleanFunction s2_shift_residual(int n, std::uint32_t u);

// -- transformations --------------------------------------------------------

BooleanFunction apply_affine(const BooleanFunction& f, const AffineTransform& t);
BooleanFunction shift(const BooleanFunction& f, std::uint32_t u);
BooleanFunction xor_fn(const BooleanFunction& f, const BooleanFunction& g);
BooleanFunction direct_sum_fn(const BooleanFunction& f, const BooleanFunction& g);

/// Dual of a bent function: (-1)^{dual(f)(x)} = W_f(x). Throws a "not_bent"
/// error when the normalized Walsh spectrum is not flat at +-1.
BooleanFunction dual(const BooleanFunction& f);

// -- queries ----------------------------------------------------------------

int hamming_weight(const BooleanFunction& f);
bool is_balanced(const BooleanFunction& f);
bool is_constant(const BooleanFunction& f);

/// Monomial masks of the algebraic normal form (binary Moebius transform).
std::vector<std::uint32_t> anf_monomials(const BooleanFunction& f);
int algebraic_degree(const BooleanFunction& f);
bool is_affine(const BooleanFunction& f);

// -- hex truth-table codec --------------------------------------------------
// Bit j of the table maps to bit (3 - j mod 4) of hex digit j/4, i.e. index 0
// is the MSB of the leftmost nibble. Tables shorter than a nibble (n=1) are
// zero-padded on the right.

std::string to_hex(const BooleanFunction& f);
BooleanFunction from_hex(int n, std::string_view hex);

}  // namespace qspectra
