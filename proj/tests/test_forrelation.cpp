#include <doctest.h>

#include <random>

#include "qspectra/forrelation.hpp"
#include "oracles.hpp"

using namespace qspectra;

TEST_CASE("2-fold chain on constant zero functions") {
    for (int n = 1; n <= 6; ++n) {
        const std::vector<BooleanFunction> fs(2, BooleanFunction::zeros(n));
        const ForrelationValue phi = forrelation_k(fs);
        CHECK(phi.fold == 2);
        CHECK(std::abs(phi.value - cdouble{std::pow(2.0, -n / 2.0), 0.0}) < 1e-12);
    }
}

TEST_CASE("3-fold chain equals the brute-force triple sum") {
    std::mt19937_64 rng(20);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 4);
        const std::vector<BooleanFunction> fs{oracles::random_function(n, rng),
                                              oracles::random_function(n, rng),
                                              oracles::random_function(n, rng)};
        const ForrelationValue phi = forrelation_k(fs);
        CHECK(std::abs(phi.value.real() - oracles::brute_forrelation3(fs[0], fs[1], fs[2])) < 1e-9);
        CHECK(std::abs(phi.value.imag()) < 1e-12);
    }
}

TEST_CASE("|Phi| <= 1 for random tuples up to fold 4") {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 5);
        const int k = 2 + static_cast<int>(rng() % 3);
        std::vector<BooleanFunction> fs;
        for (int j = 0; j < k; ++j) fs.push_back(oracles::random_function(n, rng));
        CHECK(std::abs(forrelation_k(fs).value) <= 1.0 + 1e-9);
    }
}

TEST_CASE("forrelation_k input validation") {
    std::mt19937_64 rng(22);
    const std::vector<BooleanFunction> one{oracles::random_function(2, rng)};
    CHECK_THROWS_AS(forrelation_k(one), Error);
    const std::vector<BooleanFunction> mixed{oracles::random_function(2, rng),
                                             oracles::random_function(3, rng)};
    CHECK_THROWS_AS(forrelation_k(mixed), Error);
}

TEST_CASE("m_forrelation3") {
    std::mt19937_64 rng(23);
    SUBCASE("Parseval case: f1 = 0, f2 = f3") {
        for (int m : {1, 3, 4, 7}) {
            const BooleanFunction f = oracles::random_function(4, rng);
            const ForrelationValue phi =
                m_forrelation3(BooleanFunction::zeros(4), f, f, PhaseOrder(m));
            CHECK(std::abs(phi.value - cdouble{1.0, 0.0}) < 1e-9);
        }
    }
    SUBCASE("matches the decomposed triple sum with phases") {
        for (int m : {1, 2, 3, 4, 5, 8}) {  // m=4 is the nega decomposition
            for (int trial = 0; trial < 4; ++trial) {
                const int n = 1 + trial % 3;
                const BooleanFunction f1 = oracles::random_function(n, rng);
                const BooleanFunction f2 = oracles::random_function(n, rng);
                const BooleanFunction f3 = oracles::random_function(n, rng);
                const ForrelationValue phi = m_forrelation3(f1, f2, f3, PhaseOrder(m));
                CHECK(std::abs(phi.value - oracles::brute_m_forrelation3(f1, f2, f3, m)) < 1e-9);
            }
        }
    }
    SUBCASE("m=1 equals the chain with the first two functions swapped") {
        for (int trial = 0; trial < 50; ++trial) {
            const int n = 1 + static_cast<int>(rng() % 4);
            const BooleanFunction a = oracles::random_function(n, rng);
            const BooleanFunction b = oracles::random_function(n, rng);
            const BooleanFunction c = oracles::random_function(n, rng);
            const ForrelationValue lhs = m_forrelation3(a, b, c, PhaseOrder(1));
            const std::vector<BooleanFunction> chain{b, a, c};
            CHECK(std::abs(lhs.value - forrelation_k(chain).value) < 1e-9);
        }
    }
    SUBCASE("real whenever f2 = f3") {
        for (int trial = 0; trial < 40; ++trial) {
            const int n = 1 + static_cast<int>(rng() % 5);
            const int m = 1 + static_cast<int>(rng() % 12);
            const BooleanFunction f1 = oracles::random_function(n, rng);
            const BooleanFunction f2 = oracles::random_function(n, rng);
            const ForrelationValue phi = m_forrelation3(f1, f2, f2, PhaseOrder(m));
            CHECK(std::abs(phi.value.imag()) < 1e-9);
            CHECK(std::abs(phi.value) <= 1.0 + 1e-9);
        }
    }
}

TEST_CASE("indicator identity Phi = 1 - 2p, exhaustive over S") {
    std::mt19937_64 rng(24);
    for (int m : {1, 3, 4}) {
        for (int n = 1; n <= 4; ++n) {
            const BooleanFunction f = oracles::random_function(n, rng);
            const Spectrum h = m_hadamard(f, PhaseOrder(m));
            const std::uint32_t size = f.domain_size();
            for (std::uint32_t mask = 0; mask < (std::uint32_t(1) << size); ++mask) {
                std::vector<std::uint32_t> pts;
                for (std::uint32_t x = 0; x < size; ++x)
                    if ((mask >> x) & 1u) pts.push_back(x);
                const PointSet s = make_point_set(n, pts);
                double p = 0.0;
                for (std::uint32_t x : s.points) p += std::norm(h.values[x]);
                p /= size;
                const ForrelationValue phi = m_forrelation3(indicator_fn(s), f, f, PhaseOrder(m));
                CHECK(std::abs(phi.value.real() - (1.0 - 2.0 * p)) < 1e-9);
            }
        }
    }
}

TEST_CASE("sampling_report") {
    std::mt19937_64 rng(25);
    SUBCASE("empty set") {
        const BooleanFunction f = oracles::random_function(3, rng);
        const SamplingReport r = sampling_report(f, make_point_set(3, {}), PhaseOrder(4));
        CHECK(r.p == 0.0);
        CHECK(r.dj_twice == 0.0);
        CHECK(r.forr_3q == 0.0);
        CHECK(std::abs(r.phi.value - cdouble{1.0, 0.0}) < 1e-9);
    }
    SUBCASE("full set gives p = 1 by Parseval") {
        const BooleanFunction f = oracles::random_function(3, rng);
        std::vector<std::uint32_t> all;
        for (std::uint32_t x = 0; x < 8; ++x) all.push_back(x);
        const SamplingReport r = sampling_report(f, make_point_set(3, all), PhaseOrder(5));
        CHECK(std::abs(r.p - 1.0) < 1e-9);
        CHECK(std::abs(r.forr_3q) < 1e-9);
    }
    SUBCASE("bent function: p = |S| / 2^n") {
        const BooleanFunction bent4 = from_anf(4, "x1x2 + x3x4");
        const PointSet s = make_point_set(4, {1, 5, 9});
        const SamplingReport r = sampling_report(bent4, s, PhaseOrder(1));
        CHECK(std::abs(r.p - 3.0 / 16.0) < 1e-9);
    }
    SUBCASE("derived curves and the p identity") {
        for (int trial = 0; trial < 30; ++trial) {
            const int n = 1 + static_cast<int>(rng() % 4);
            const int m = 1 + static_cast<int>(rng() % 6);
            const BooleanFunction f = oracles::random_function(n, rng);
            std::vector<std::uint32_t> pts;
            for (std::uint32_t x = 0; x < f.domain_size(); ++x)
                if (rng() & 1) pts.push_back(x);
            const SamplingReport r = sampling_report(f, make_point_set(n, pts), PhaseOrder(m));
            CHECK(std::abs(r.p - 0.5 * (1.0 - r.phi.value.real())) < 1e-9);
            CHECK(r.dj_once == r.p);
            CHECK(std::abs(r.dj_twice - (2 * r.p - r.p * r.p)) < 1e-12);
            CHECK(std::abs(r.forr_3q - (4 * r.p - 4 * r.p * r.p)) < 1e-12);
            // 4p - 4p^2 = 1 - Phi^2 with Phi = 1 - 2p
            const double phi = 1.0 - 2.0 * r.p;
            CHECK(std::abs(r.forr_3q - (1.0 - phi * phi)) < 1e-12);
            CHECK(std::abs(r.amp_amp_paper - std::sin(3 * std::asin(std::clamp(r.p, 0.0, 1.0)))) < 1e-12);
            const double s = std::sin(3 * std::asin(std::sqrt(std::clamp(r.p, 0.0, 1.0))));
            CHECK(std::abs(r.amp_amp_standard - s * s) < 1e-12);
        }
    }
}
