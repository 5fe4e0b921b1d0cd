#include "qspectra/boolfun.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

#include "qspectra/kernels.hpp"

namespace qspectra {

namespace {

void check_arity(int n) {
    if (n < 1 || n > kMaxArity)
        fail("size", "arity must be in [1," + std::to_string(kMaxArity) + "], got " + std::to_string(n));
}

std::size_t word_count(int n) { return (std::size_t(1) << n) <= 64 ? 1 : (std::size_t(1) << n) / 64; }

}  // namespace

BooleanFunction BooleanFunction::zeros(int n) {
    check_arity(n);
    BooleanFunction f;
    f.n = n;
    f.words.assign(word_count(n), 0);
    return f;
}

PointSet make_point_set(int n, std::vector<std::uint32_t> points) {
    check_arity(n);
    for (std::uint32_t p : points)
        if (p >= (std::uint32_t(1) << n))
            fail("index_range", "point " + std::to_string(p) + " outside F_2^" + std::to_string(n));
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    return PointSet{n, std::move(points)};
}

AffineTransform AffineTransform::identity(int n) {
    return AffineTransform{gf2::BitMatrix::identity(n), 0, 0, 0};
}

BooleanFunction make_function(int n, std::span<const std::uint8_t> table) {
    check_arity(n);
    if (table.size() != (std::size_t(1) << n))
        fail("size", "truth table must have 2^" + std::to_string(n) + " entries, got " +
                         std::to_string(table.size()));
    BooleanFunction f = BooleanFunction::zeros(n);
    for (std::uint32_t x = 0; x < f.domain_size(); ++x) f.set(x, table[x] & 1);
    return f;
}

BooleanFunction make_function(int n, std::string_view bits) {
    check_arity(n);
    if (bits.size() != (std::size_t(1) << n))
        fail("size", "truth table must have 2^" + std::to_string(n) + " bits, got " +
                         std::to_string(bits.size()));
    BooleanFunction f = BooleanFunction::zeros(n);
    for (std::uint32_t x = 0; x < f.domain_size(); ++x) {
        const char ch = bits[x];
        if (ch != '0' && ch != '1') fail("parse", "truth table bits must be 0/1");
        f.set(x, ch == '1');
    }
    return f;
}

BooleanFunction from_anf_masks(int n, std::span<const std::uint32_t> monomials) {
    check_arity(n);
    BooleanFunction coeff = BooleanFunction::zeros(n);
    for (std::uint32_t t : monomials) {
        if (t >= (std::uint32_t(1) << n)) fail("index_range", "monomial outside domain");
        coeff.set(t, !coeff.test(t));  // repeated terms cancel
    }
    // binary Moebius transform: truth table from ANF coefficients
    BooleanFunction f = coeff;
    for (int bit = 0; bit < n; ++bit) {
        const std::uint32_t m = std::uint32_t(1) << bit;
        for (std::uint32_t x = 0; x < f.domain_size(); ++x)
            if (x & m) f.set(x, f.test(x) ^ f.test(x ^ m));
    }
    return f;
}

BooleanFunction from_anf(int n, std::string_view anf) {
    check_arity(n);
    std::vector<std::uint32_t> monomials;
    std::size_t i = 0;
    const auto skip_ws = [&] { while (i < anf.size() && std::isspace(static_cast<unsigned char>(anf[i]))) ++i; };
    skip_ws();
    if (i == anf.size()) fail("parse", "empty ANF expression");
    bool expect_term = true;
    std::uint32_t term = 0;
    bool term_has_var = false, term_is_one = false, in_term = false;
    const auto flush_term = [&] {
        if (!in_term) fail("parse", "malformed ANF expression: '" + std::string(anf) + "'");
        monomials.push_back(term_is_one ? 0u : term);
        term = 0;
        term_has_var = term_is_one = in_term = false;
    };
    while (i < anf.size()) {
        skip_ws();
        if (i == anf.size()) break;
        const char ch = anf[i];
        if (ch == '+') {
            flush_term();
            expect_term = true;
            ++i;
        } else if (ch == '1') {
            if (term_has_var || term_is_one) fail("parse", "constant '1' cannot be part of a product");
            term_is_one = in_term = true;
            expect_term = false;
            ++i;
        } else if (ch == 'x' || ch == 'X') {
            ++i;
            std::size_t start = i;
            while (i < anf.size() && std::isdigit(static_cast<unsigned char>(anf[i]))) ++i;
            if (start == i) fail("parse", "variable index missing after 'x'");
            const int v = std::stoi(std::string(anf.substr(start, i - start)));
            if (v < 1 || v > n)
                fail("index_range", "variable x" + std::to_string(v) + " out of range 1.." + std::to_string(n));
            if (term_is_one) fail("parse", "constant '1' cannot be part of a product");
            term |= var_mask(n, v);
            term_has_var = in_term = true;
            expect_term = false;
        } else {
            fail("parse", std::string("unexpected character '") + ch + "' in ANF");
        }
    }
    if (expect_term || !in_term) fail("parse", "dangling '+' in ANF");
    flush_term();
    return from_anf_masks(n, monomials);
}

BooleanFunction linear_fn(int n, std::uint32_t y) {
    check_arity(n);
    BooleanFunction f = BooleanFunction::zeros(n);
    for (std::uint32_t x = 0; x < f.domain_size(); ++x) f.set(x, dot_parity(x, y));
    return f;
}

BooleanFunction indicator_fn(const PointSet& s) {
    BooleanFunction f = BooleanFunction::zeros(s.n);
    for (std::uint32_t p : s.points) f.set(p, true);
    return f;
}

BooleanFunction symmetric_s2(int n) {
    check_arity(n);
    BooleanFunction f = BooleanFunction::zeros(n);
    for (std::uint32_t x = 0; x < f.domain_size(); ++x) {
        const int w = weight(x);
        f.set(x, (w * (w - 1) / 2) & 1);  // C(w,2) mod 2
    }
    return f;
}

BooleanFunction s2_shift_residual(int n, std::uint32_t u) {
    const BooleanFunction s2 = symmetric_s2(n);
    const bool s2u = s2.test(u);
    BooleanFunction f = BooleanFunction::zeros(n);
    for (std::uint32_t x = 0; x < f.domain_size(); ++x)
        f.set(x, s2.test(x ^ u) ^ s2.test(x) ^ s2u);
    return f;
}

BooleanFunction apply_affine(const BooleanFunction& f, const AffineTransform& t) {
    if (t.a.n != f.n) fail("size", "affine transform dimension mismatch");
    BooleanFunction g = BooleanFunction::zeros(f.n);
    for (std::uint32_t x = 0; x < g.domain_size(); ++x)
        g.set(x, f.test(t.a.mul_vec(x) ^ t.b) ^ dot_parity(t.c, x) ^ (t.d & 1));
    return g;
}

BooleanFunction shift(const BooleanFunction& f, std::uint32_t u) {
    BooleanFunction g = BooleanFunction::zeros(f.n);
    for (std::uint32_t x = 0; x < g.domain_size(); ++x) g.set(x, f.test(x ^ u));
    return g;
}

BooleanFunction xor_fn(const BooleanFunction& f, const BooleanFunction& g) {
    if (f.n != g.n) fail("arity_mismatch", "xor_fn requires equal arity");
    BooleanFunction h = f;
    for (std::size_t i = 0; i < h.words.size(); ++i) h.words[i] ^= g.words[i];
    return h;
}

BooleanFunction direct_sum_fn(const BooleanFunction& f, const BooleanFunction& g) {
    check_arity(f.n + g.n);
    BooleanFunction h = BooleanFunction::zeros(f.n + g.n);
    for (std::uint32_t x = 0; x < f.domain_size(); ++x)
        for (std::uint32_t y = 0; y < g.domain_size(); ++y)
            h.set((x << g.n) | y, f.test(x) ^ g.test(y));
    return h;
}

BooleanFunction dual(const BooleanFunction& f) {
    const std::uint32_t size = f.domain_size();
    std::vector<double> v(size);
    for (std::uint32_t x = 0; x < size; ++x) v[x] = f.test(x) ? -1.0 : 1.0;
    kernels::fwht(std::span<double>(v));
    const double scale = std::pow(2.0, -f.n / 2.0);
    BooleanFunction g = BooleanFunction::zeros(f.n);
    for (std::uint32_t x = 0; x < size; ++x) {
        const double w = v[x] * scale;
        if (std::abs(std::abs(w) - 1.0) > 1e-6)
            fail("not_bent", "Walsh value at " + bit_string(x, f.n) + " is " + std::to_string(w) +
                                 ", function is not bent");
        g.set(x, w < 0.0);
    }
    return g;
}

int hamming_weight(const BooleanFunction& f) {
    int w = 0;
    for (std::uint64_t word : f.words) w += std::popcount(word);
    return w;
}

bool is_balanced(const BooleanFunction& f) {
    return hamming_weight(f) == static_cast<int>(f.domain_size() / 2);
}

bool is_constant(const BooleanFunction& f) {
    const int w = hamming_weight(f);
    return w == 0 || w == static_cast<int>(f.domain_size());
}

std::vector<std::uint32_t> anf_monomials(const BooleanFunction& f) {
    // Moebius transform is an involution; running it on the truth table
    // yields the ANF coefficients.
    BooleanFunction coeff = f;
    for (int bit = 0; bit < f.n; ++bit) {
        const std::uint32_t m = std::uint32_t(1) << bit;
        for (std::uint32_t x = 0; x < coeff.domain_size(); ++x)
            if (x & m) coeff.set(x, coeff.test(x) ^ coeff.test(x ^ m));
    }
    std::vector<std::uint32_t> monomials;
    for (std::uint32_t t = 0; t < coeff.domain_size(); ++t)
        if (coeff.test(t)) monomials.push_back(t);
    return monomials;
}

int algebraic_degree(const BooleanFunction& f) {
    int deg = 0;
    for (std::uint32_t t : anf_monomials(f)) deg = std::max(deg, weight(t));
    return deg;
}

bool is_affine(const BooleanFunction& f) { return algebraic_degree(f) <= 1; }

std::string to_hex(const BooleanFunction& f) {
    static const char* digits = "0123456789abcdef";
    const std::uint32_t size = f.domain_size();
    const std::uint32_t ndigits = (size + 3) / 4;
    std::string out(ndigits, '0');
    for (std::uint32_t d = 0; d < ndigits; ++d) {
        int v = 0;
        for (std::uint32_t r = 0; r < 4; ++r) {
            const std::uint32_t j = d * 4 + r;
            if (j < size && f.test(j)) v |= 8 >> r;
        }
        out[d] = digits[v];
    }
    return out;
}

BooleanFunction from_hex(int n, std::string_view hex) {
    check_arity(n);
    const std::uint32_t size = std::uint32_t(1) << n;
    const std::uint32_t ndigits = (size + 3) / 4;
    if (hex.size() != ndigits)
        fail("size", "hex truth table for n=" + std::to_string(n) + " needs " +
                         std::to_string(ndigits) + " digits, got " + std::to_string(hex.size()));
    BooleanFunction f = BooleanFunction::zeros(n);
    for (std::uint32_t d = 0; d < ndigits; ++d) {
        const char ch = hex[d];
        int v;
        if (ch >= '0' && ch <= '9')
            v = ch - '0';
        else if (ch >= 'a' && ch <= 'f')
            v = ch - 'a' + 10;
        else if (ch >= 'A' && ch <= 'F')
            v = ch - 'A' + 10;
        else
            fail("parse", std::string("invalid hex digit '") + ch + "'");
        for (std::uint32_t r = 0; r < 4; ++r) {
            const std::uint32_t j = d * 4 + r;
            const bool bit = (v >> (3 - r)) & 1;
            if (j >= size) {
                if (bit) fail("parse", "hex truth table has padding bits set");
                continue;
            }
            f.set(j, bit);
        }
    }
    return f;
}

}  // namespace qspectra
