// Acceptance suite: every criterion prints one PASS/FAIL line; the process
// exits nonzero if any of them fails.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "qspectra/circuits.hpp"
#include "qspectra/forrelation.hpp"
#include "qspectra/io.hpp"
#include "qspectra/spectra.hpp"
#include "oracles.hpp"

using namespace qspectra;
using namespace qspectra::circuits;
namespace fs = std::filesystem;

namespace {

struct Check {
    int failures = 0;
    std::string first_failure;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            ++failures;
            if (first_failure.empty()) first_failure = what;
        }
    }
    void close(double a, double b, double tol, const std::string& what) {
        require(std::abs(a - b) <= tol, what + " (|" + std::to_string(a) + " - " +
                                            std::to_string(b) + "| > " + std::to_string(tol) + ")");
    }
};

std::string read_file(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// ---- criterion 1: m=1 / m=4 reduction to the direct Walsh and nega sums ----
void criterion_reductions(Check& c) {
    std::mt19937_64 rng(101);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 1 + trial % 8;
        const BooleanFunction f = oracles::random_function(n, rng);
        for (int m : {1, 4}) {
            const Spectrum h = m_hadamard(f, PhaseOrder(m));
            for (std::uint32_t w = 0; w < f.domain_size(); ++w) {
                const cdouble direct = oracles::direct_m_hadamard_at(f, m, w);
                c.require(std::abs(h.values[w] - direct) <= 1e-9, "reduction at m=" + std::to_string(m));
            }
        }
    }
    for (int n = 1; n <= 6; ++n) {
        std::mt19937_64 rng2(102);
        const BooleanFunction f = oracles::random_function(n, rng2);
        const Spectrum h2 = m_hadamard(f, PhaseOrder(2));
        const Spectrum w = m_hadamard(f, PhaseOrder(1));
        const std::uint32_t ones = f.domain_size() - 1;
        for (std::uint32_t omega = 0; omega < f.domain_size(); ++omega)
            c.require(std::abs(h2.values[omega] - w.values[omega ^ ones]) <= 1e-9,
                      "m=2 complement identity");
    }
}

// ---- criterion 2: m-Parseval ----
void criterion_parseval(Check& c) {
    std::mt19937_64 rng(103);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 1 + trial % 10;
        const BooleanFunction f = oracles::random_function(n, rng);
        for (int m : {1, 2, 3, 4, 5, 6, 7, 8, 12}) {
            const Spectrum h = m_hadamard(f, PhaseOrder(m));
            double sum = 0.0;
            for (const cdouble& v : h.values) sum += std::norm(v);
            c.close(sum, static_cast<double>(f.domain_size()), 1e-6,
                    "Parseval m=" + std::to_string(m) + " n=" + std::to_string(n));
        }
    }
}

// ---- criterion 3: inversion round-trip ----
void criterion_inversion(Check& c) {
    std::mt19937_64 rng(104);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 1 + trial % 10;
        const BooleanFunction f = oracles::random_function(n, rng);
        for (int m : {1, 2, 3, 4, 5, 6, 7, 8, 12}) {
            try {
                c.require(invert_m_hadamard(m_hadamard(f, PhaseOrder(m))) == f,
                          "inversion round-trip m=" + std::to_string(m));
            } catch (const Error& e) {
                c.require(false, std::string("inversion raised: ") + e.what());
            }
        }
    }
}

// ---- criterion 4: transform-properties lemma (a)-(d) ----
void criterion_lemma(Check& c) {
    std::mt19937_64 rng(105);
    for (int trial = 0; trial < 50; ++trial) {  // (a)
        const int n = 1 + trial % 8;
        const int m = 1 + static_cast<int>(rng() % 8);
        const BooleanFunction f = oracles::random_function(n, rng);
        AffineTransform t = AffineTransform::identity(n);
        t.c = oracles::random_point(n, rng);
        t.d = static_cast<int>(rng() & 1);
        const Spectrum hg = m_hadamard(apply_affine(f, t), PhaseOrder(m));
        const Spectrum hf = m_hadamard(f, PhaseOrder(m));
        for (std::uint32_t u = 0; u < f.domain_size(); ++u)
            c.require(std::abs(hg.values[u] - (t.d ? -1.0 : 1.0) * hf.values[u ^ t.c]) <= 1e-9,
                      "(a) phase shift");
    }
    for (int trial = 0; trial < 50; ++trial) {  // (b), both orders
        const int n = 1 + trial % 8;
        const int m = 1 + static_cast<int>(rng() % 8);
        const BooleanFunction g = oracles::random_function(n, rng);
        const BooleanFunction h = oracles::random_function(n, rng);
        const Spectrum lhs = m_hadamard(xor_fn(g, h), PhaseOrder(m));
        const Spectrum hg = m_hadamard(g, PhaseOrder(m));
        const Spectrum hh = m_hadamard(h, PhaseOrder(m));
        const Spectrum wg = m_hadamard(g, PhaseOrder(1));
        const Spectrum wh = m_hadamard(h, PhaseOrder(1));
        const double scale = std::pow(2.0, -n / 2.0);
        for (std::uint32_t u = 0; u < g.domain_size(); ++u) {
            cdouble acc1 = 0.0, acc2 = 0.0;
            for (std::uint32_t v = 0; v < g.domain_size(); ++v) {
                acc1 += hg.values[v] * wh.values[u ^ v];
                acc2 += wg.values[v] * hh.values[u ^ v];
            }
            c.require(std::abs(lhs.values[u] - scale * acc1) <= 1e-9, "(b) H*W convolution");
            c.require(std::abs(lhs.values[u] - scale * acc2) <= 1e-9, "(b) W*H convolution");
        }
    }
    for (int trial = 0; trial < 50; ++trial) {  // (c)
        const int n = 2 + trial % 7;
        const int m = 1 + static_cast<int>(rng() % 8);
        const BooleanFunction f = oracles::random_function(n, rng);
        AffineTransform t;
        t.a = gf2::random_permutation_matrix(n, rng);
        const Spectrum hg = m_hadamard(apply_affine(f, t), PhaseOrder(m));
        const Spectrum hf = m_hadamard(f, PhaseOrder(m));
        for (std::uint32_t u = 0; u < f.domain_size(); ++u)
            c.require(std::abs(hg.values[u] - hf.values[t.a.mul_vec(u)]) <= 1e-9,
                      "(c) orthogonal conjugation");
    }
    for (int trial = 0; trial < 50; ++trial) {  // (d)
        const int nf = 1 + trial % 4;
        const int ng = 1 + static_cast<int>(rng() % 4);
        const int m = 1 + static_cast<int>(rng() % 8);
        const BooleanFunction f = oracles::random_function(nf, rng);
        const BooleanFunction g = oracles::random_function(ng, rng);
        const Spectrum hh = m_hadamard(direct_sum_fn(f, g), PhaseOrder(m));
        const Spectrum hf = m_hadamard(f, PhaseOrder(m));
        const Spectrum hg = m_hadamard(g, PhaseOrder(m));
        for (std::uint32_t u = 0; u < f.domain_size(); ++u)
            for (std::uint32_t v = 0; v < g.domain_size(); ++v)
                c.require(std::abs(hh.values[(u << ng) | v] - hf.values[u] * hg.values[v]) <= 1e-9,
                          "(d) direct sum product");
    }
}

// ---- criterion 5: crosscorrelation theorem + autocorrelation vanishing ----
void criterion_crosscorr(Check& c) {
    std::mt19937_64 rng(106);
    for (int m : {1, 2, 3, 4, 5, 8}) {
        for (int trial = 0; trial < 8; ++trial) {
            const int n = 1 + trial % 8;
            const BooleanFunction f = oracles::random_function(n, rng);
            const BooleanFunction g = oracles::random_function(n, rng);
            const Spectrum direct = m_crosscorrelation(f, g, PhaseOrder(m));
            const Spectrum via = crosscorr_via_spectra(f, g, PhaseOrder(m));
            for (std::uint32_t y = 0; y < f.domain_size(); ++y)
                c.require(std::abs(direct.values[y] - via.values[y]) <= 1e-6,
                          "theorem form m=" + std::to_string(m));
        }
    }
    const BooleanFunction bent4 = from_anf(4, "x1x2 + x3x4");
    const BooleanFunction nb4 = xor_fn(bent4, symmetric_s2(4));
    const BooleanFunction nb6 = from_anf(6, "x1x3 + x1x4");
    const auto check_vanishing = [&](const BooleanFunction& f, int m, const char* what) {
        const Spectrum a = m_crosscorrelation(f, f, PhaseOrder(m));
        c.close(a.values[0].real(), static_cast<double>(f.domain_size()), 1e-9,
                std::string(what) + " origin");
        for (std::uint32_t z = 1; z < f.domain_size(); ++z)
            c.require(std::abs(a.values[z]) <= 1e-6, std::string(what) + " off-origin");
    };
    check_vanishing(bent4, 1, "bent autocorr");
    check_vanishing(nb4, 4, "negabent autocorr");
    check_vanishing(nb6, 4, "negabent-6 autocorr");
}

// ---- criterion 6: circuit probabilities vs closed form ----
void criterion_circuits(Check& c) {
    std::mt19937_64 rng(107);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 1 + trial % 6;
        for (int m : {1, 2, 3, 4, 5, 8}) {
            const BooleanFunction f1 = oracles::random_function(n, rng);
            const BooleanFunction f2 = oracles::random_function(n, rng);
            const BooleanFunction f3 = oracles::random_function(n, rng);
            const cdouble phi = m_forrelation3(f1, f2, f3, PhaseOrder(m)).value;
            const auto d3 = run_mforr_3q(f1, f2, f3, PhaseOrder(m));
            c.close(d3.probs[0], std::norm(phi), 1e-9, "3q vs |Phi|^2");
            const auto r2 = run_mforr_2q(f1, f2, f3, PhaseOrder(m));
            c.close(r2.p0, 0.5 * (1.0 + phi.real()), 1e-9, "2q vs (1+Re Phi)/2");
        }
    }
}

// ---- criterion 7: sampling theorems ----
void criterion_sampling(Check& c) {
    std::mt19937_64 rng(108);
    for (int n = 1; n <= 4; ++n) {
        const BooleanFunction f = oracles::random_function(n, rng);
        for (int m : {1, 3, 4}) {
            const Spectrum h = m_hadamard(f, PhaseOrder(m));
            const std::uint32_t size = f.domain_size();
            for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << size); ++mask) {
                std::vector<std::uint32_t> pts;
                for (std::uint32_t x = 0; x < size; ++x)
                    if ((mask >> x) & 1u) pts.push_back(x);
                double p = 0.0;
                for (std::uint32_t x : pts) p += std::norm(h.values[x]);
                p /= size;
                const BooleanFunction g = indicator_fn(make_point_set(n, pts));
                const auto d3 = run_mforr_3q(g, f, f, PhaseOrder(m));
                c.close(1.0 - d3.probs[0], 4 * p - 4 * p * p, 1e-9, "3q nonzero outcome = 4p-4p^2");
                const auto r2 = run_mforr_2q(g, f, f, PhaseOrder(m));
                c.close(1.0 - r2.p0, p, 1e-9, "2q P(|1>) = p");
            }
        }
    }
    for (int n = 1; n <= 5; ++n) {
        for (int m : {1, 2, 3, 4, 5, 8}) {
            const BooleanFunction f = oracles::random_function(n, rng);
            const BooleanFunction g = oracles::random_function(n, rng);
            const Spectrum cc = m_crosscorrelation(f, g, PhaseOrder(m));
            for (std::uint32_t y = 0; y < f.domain_size(); ++y) {
                const auto d3 = run_mforr_3q(linear_fn(n, y), f, g, PhaseOrder(m));
                c.close(d3.probs[0], std::norm(cc.values[y]) * std::pow(2.0, -2.0 * n), 1e-9,
                        "3q crosscorrelation point");
                const auto r2 = run_mforr_2q(linear_fn(n, y), f, g, PhaseOrder(m));
                const cdouble scaled = zeta_pow(m, -weight(y)) * cc.values[y] / std::pow(2.0, n);
                c.close(r2.p0, 0.5 * (1.0 + scaled.real()), 1e-9, "2q crosscorrelation point");
            }
        }
    }
}

// ---- criterion 8: full-spectrum sampler ----
void criterion_sampler(Check& c) {
    std::mt19937_64 rng(109);
    for (int n = 1; n <= 5; ++n) {
        for (int m : {1, 3, 4}) {
            const BooleanFunction f = oracles::random_function(n, rng);
            const BooleanFunction g = oracles::random_function(n, rng);
            const Spectrum cc = m_crosscorrelation(f, g, PhaseOrder(m));
            const auto dist = run_spectrum_sampler(f, g, PhaseOrder(m), SamplerPrep::hadamard());
            for (std::uint32_t y = 0; y < f.domain_size(); ++y)
                c.close(dist.probs[y << n], std::pow(2.0, -3.0 * n) * std::norm(cc.values[y]),
                        1e-9, "Hadamard prep cell");
            for (int k = 0; k <= n; ++k) {
                const auto dd = run_spectrum_sampler(f, g, PhaseOrder(m), SamplerPrep::dicke(k));
                double binom = 1.0;
                for (int j = 1; j <= k; ++j) binom = binom * (n - k + j) / j;
                for (std::uint32_t y = 0; y < f.domain_size(); ++y) {
                    if (weight(y) == k)
                        c.close(dd.probs[y << n],
                                std::norm(cc.values[y]) / (binom * std::pow(2.0, 2.0 * n)), 1e-9,
                                "Dicke prep cell");
                    else
                        c.require(dd.probs[y << n] <= 1e-9, "Dicke off-weight cell");
                }
            }
        }
    }
    const BooleanFunction bent4 = from_anf(4, "x1x2 + x3x4");
    const auto dist = run_spectrum_sampler(bent4, bent4, PhaseOrder(1), SamplerPrep::hadamard());
    c.close(dist.probs[0], std::pow(2.0, -4.0), 1e-9, "m-bent P(|0^n>|0^n>) = 2^-n");
    for (std::uint32_t y = 1; y < 16; ++y)
        c.require(dist.probs[y << 4] <= 1e-9, "m-bent off-origin zero column");
}

// ---- criterion 9: bent hidden shift ----
void criterion_bent_shift(Check& c) {
    const BooleanFunction f = from_anf(4, "x1x2 + x3x4");
    const BooleanFunction fd = dual(f);
    std::mt19937_64 rng(110);
    for (std::uint32_t b = 0; b < 16; ++b) {
        const auto r = run_bent_shift(f, shift(f, b));
        c.close(r.dist.probs[b], 1.0, 1e-9, "pure shift certainty");
    }
    for (std::uint32_t cvec = 1; cvec < 16; ++cvec) {
        AffineTransform t = AffineTransform::identity(4);
        t.c = cvec;
        const auto r = run_bent_shift(f, apply_affine(f, t));
        c.require(r.dist.probs[0] <= 1e-9, "b=0, c!=0 zero state never observed");
    }
    for (int trial = 0; trial < 24; ++trial) {
        AffineTransform t = AffineTransform::identity(4);
        t.b = oracles::random_point(4, rng);
        t.c = oracles::random_point(4, rng);
        t.d = static_cast<int>(rng() & 1);
        const auto r = run_bent_shift(f, apply_affine(f, t));
        for (std::uint32_t z = 0; z < 16; ++z) {
            double acc = 0.0;
            for (std::uint32_t y = 0; y < 16; ++y)
                acc += oracles::sign_of(fd.test(y ^ t.c) ^ fd.test(y) ^ dot_parity(y, z ^ t.b));
            c.close(r.dist.probs[z], acc * acc * std::pow(2.0, -8.0), 1e-9,
                    "affine case distribution");
        }
    }
}

// ---- criterion 10: negabent hidden shift, the published experiment ----
void criterion_negabent_shift(Check& c) {
    const BooleanFunction f = from_anf(6, "x1x3 + x1x4");
    const BooleanFunction g = from_anf(6, "x1x3 + x1x4 + x3 + x4");
    const auto r = run_negabent_shift(f, g, 4096, 0);
    const std::vector<std::uint32_t> support{0b0000000, 0b1100000, 0b0001100, 0b1101100};
    for (std::uint32_t o = 0; o < r.analytic.probs.size(); ++o) {
        const bool in = std::find(support.begin(), support.end(), o) != support.end();
        if (in)
            c.close(r.analytic.probs[o], 0.25, 1e-9, "support probability");
        else
            c.require(r.analytic.probs[o] <= 1e-9, "outside analytic support");
    }
    for (std::uint32_t o : support)
        c.require(std::abs(static_cast<double>(r.counts[o]) / 4096.0 - 0.25) <= 0.05,
                  "empirical frequency within 0.05");
    c.require(r.solution.size() == 16, "solution space has 16 elements");
    c.require(r.solution.contains(0b100001), "contains 100001");
    c.require(r.solution.verified.size() == 16, "all candidates enumerated");
    for (const auto& [u, ok] : r.solution.verified)
        c.require(ok, "candidate " + bit_string(u, 6) + " verifies");
}

// ---- criterion 11: counterexample classification ----
void criterion_counterexample(Check& c) {
    const std::vector<int> orders{1, 4};
    const BooleanFunction f = from_anf(6, "x1x3 + x1x4");
    const ClassifyRecord rf = classify(f, orders);
    c.require(rf.negabent && !rf.bent && !rf.affine, "x1x3+x1x4 negabent, not bent, not affine");
    const ClassifyRecord rg = classify(shift(f, 0b100001), orders);
    c.require(rg.negabent && !rg.bent && !rg.affine, "its 100001-shift likewise");
    for (int n : {2, 4, 6}) {
        for (std::uint32_t a = 0; a < (std::uint32_t(1) << n); ++a) {
            for (int d = 0; d <= 1; ++d) {
                BooleanFunction aff = linear_fn(n, a);
                if (d) aff = xor_fn(aff, from_anf(n, "1"));
                c.require(classify(aff, orders).negabent,
                          "affine negabent n=" + std::to_string(n));
            }
        }
    }
}

// ---- criterion 12: fold consistency ----
void criterion_fold(Check& c) {
    std::mt19937_64 rng(111);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 1 + trial % 4;
        const BooleanFunction a = oracles::random_function(n, rng);
        const BooleanFunction b = oracles::random_function(n, rng);
        const BooleanFunction cc = oracles::random_function(n, rng);
        const cdouble phi1 = m_forrelation3(a, b, cc, PhaseOrder(1)).value;
        const std::vector<BooleanFunction> chain{b, a, cc};
        const cdouble chained = forrelation_k(chain).value;
        c.require(std::abs(phi1 - chained) <= 1e-9, "Phi^(1) = chain relabeling");
        const double brute = oracles::brute_forrelation3(b, a, cc);
        c.close(chained.real(), brute, 1e-9, "chain vs brute triple sum");
        c.close(phi1.real(), brute, 1e-9, "Phi^(1) vs brute triple sum");
    }
}

// ---- criterion 13: CLI determinism ----
void criterion_determinism(Check& c) {
    const std::string bin = QSPECTRA_CLI_PATH;
    const fs::path dir = fs::temp_directory_path() / "qspectra_acceptance";
    fs::create_directories(dir);
    const std::vector<std::string> invocations{
        "spectrum --f anf:x1x2+x3x4@4 --m 4",
        "corr --f anf:x1x3+x1x4@6 --m 4",
        "simulate --circuit 2q --f1 anf:x1@3 --f2 anf:x1x2@3 --f3 anf:x2x3@3 --m 5 --shots 2048 --seed 9",
        "hidden-shift --mode negabent --f anf:x1x3+x1x4@6 --g anf:x1x3+x1x4+x3+x4@6 --shots 4096 --seed 0",
        "curves --grid 101",
    };
    int idx = 0;
    for (const std::string& args : invocations) {
        const fs::path a = dir / ("a" + std::to_string(idx) + ".out");
        const fs::path b = dir / ("b" + std::to_string(idx) + ".out");
        const fs::path t = dir / ("t" + std::to_string(idx) + ".out");
        const std::string run_a = bin + " " + args + " --out " + a.string() + " > /dev/null";
        const std::string run_b = bin + " " + args + " --out " + b.string() + " > /dev/null";
        // artifacts must not depend on the kernel thread count either
        const std::string run_t =
            "OMP_NUM_THREADS=1 " + bin + " " + args + " --out " + t.string() + " > /dev/null";
        c.require(std::system(run_a.c_str()) == 0, "invocation succeeds: " + args);
        c.require(std::system(run_b.c_str()) == 0, "second invocation succeeds: " + args);
        c.require(std::system(run_t.c_str()) == 0, "single-thread invocation succeeds: " + args);
        c.require(read_file(a) == read_file(b) && !read_file(a).empty(),
                  "byte-identical artifacts: " + args);
        c.require(read_file(a) == read_file(t), "thread-count independent artifacts: " + args);
        ++idx;
    }
}

struct Criterion {
    int id;
    const char* name;
    std::function<void(Check&)> fn;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "reduction identities (m=1 Walsh, m=4 nega, m=2 complement)", criterion_reductions},
        {2, "m-Parseval identity", criterion_parseval},
        {3, "inversion round-trip", criterion_inversion},
        {4, "transform-properties lemma (a)-(d)", criterion_lemma},
        {5, "crosscorrelation theorem and autocorrelation vanishing", criterion_crosscorr},
        {6, "circuit probabilities vs closed-form Forrelation", criterion_circuits},
        {7, "sampling theorems (indicator sets and point estimates)", criterion_sampling},
        {8, "full-spectrum sampler (Hadamard and Dicke preparations)", criterion_sampler},
        {9, "bent hidden shift distributions", criterion_bent_shift},
        {10, "negabent hidden shift recovery experiment", criterion_negabent_shift},
        {11, "counterexample and affine classification", criterion_counterexample},
        {12, "Forrelation fold consistency", criterion_fold},
        {13, "CLI determinism", criterion_determinism},
    };

    int failed = 0;
    for (const Criterion& cr : criteria) {
        Check check;
        try {
            cr.fn(check);
        } catch (const std::exception& e) {
            check.require(false, std::string("exception: ") + e.what());
        }
        if (check.failures == 0) {
            std::printf("[PASS] criterion %2d: %s\n", cr.id, cr.name);
        } else {
            ++failed;
            std::printf("[FAIL] criterion %2d: %s: %d check(s) failed, first: %s\n", cr.id,
                        cr.name, check.failures, check.first_failure.c_str());
        }
        std::fflush(stdout);
    }
    if (failed) std::printf("%d criterion(s) failed\n", failed);
    return failed == 0 ? 0 : 1;
}
