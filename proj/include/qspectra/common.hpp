#pragma once

#include <bit>
#include <complex>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qspectra {

using cdouble = std::complex<double>;

inline constexpr int kMaxArity = 16;   // truth tables up to 64 KiB
inline constexpr int kMaxQubits = 24;  // dense statevector cap

/// Error with a stable category string, surfaced verbatim by the CLI.
class Error : public std::runtime_error {
public:
    Error(std::string category, const std::string& what)
        : std::runtime_error(what), category_(std::move(category)) {}
    const std::string& category() const noexcept { return category_; }

private:
    std::string category_;
};

[[noreturn]] inline void fail(std::string category, const std::string& msg) {
    throw Error(std::move(category), msg);
}

// ---------------------------------------------------------------------------
// Bit conventions. An n-bit vector x = (x_1,...,x_n) is stored as an unsigned
// integer with x_1 in the most significant position: idx(x) = sum x_i 2^(n-i).
// Qubit 1 is likewise the top wire / most significant index bit.
// ---------------------------------------------------------------------------

inline int weight(std::uint32_t x) { return std::popcount(x); }

inline int dot_parity(std::uint32_t a, std::uint32_t b) {
    return std::popcount(a & b) & 1;
}

/// Mask of variable i (1-based) within an n-bit vector.
inline std::uint32_t var_mask(int n, int i) { return 1u << (n - i); }

inline bool get_var(std::uint32_t x, int n, int i) {
    return (x >> (n - i)) & 1u;
}

/// MSB-first bit string, x_1 printed first.
inline std::string bit_string(std::uint32_t x, int n) {
    std::string s(static_cast<std::size_t>(n), '0');
    for (int i = 0; i < n; ++i)
        if ((x >> (n - 1 - i)) & 1u) s[static_cast<std::size_t>(i)] = '1';
    return s;
}

inline std::uint32_t parse_bit_string(const std::string& s) {
    std::uint32_t x = 0;
    for (char ch : s) {
        if (ch != '0' && ch != '1') fail("parse", "invalid bit string: " + s);
        x = (x << 1) | static_cast<std::uint32_t>(ch - '0');
    }
    return x;
}

// ---------------------------------------------------------------------------
// Roots of unity. zeta(m) = exp(2*pi*i/m); quarter turns are returned exactly
// so the m in {1,2,4} reductions hold bit-for-bit.
// ---------------------------------------------------------------------------

inline cdouble zeta_pow(int m, long long k) {
    long long r = k % m;
    if (r < 0) r += m;
    if ((4 * r) % m == 0) {
        switch ((4 * r) / m) {
            case 0: return {1.0, 0.0};
            case 1: return {0.0, 1.0};
            case 2: return {-1.0, 0.0};
            case 3: return {0.0, -1.0};
        }
    }
    const double theta = 2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(m);
    return {std::cos(theta), std::sin(theta)};
}

inline cdouble zeta(int m) { return zeta_pow(m, 1); }

}  // namespace qspectra
