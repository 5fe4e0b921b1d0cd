#pragma once

#include <span>

#include "qspectra/boolfun.hpp"
#include "qspectra/spectra.hpp"

namespace qspectra {

struct ForrelationValue {
    cdouble value;
    int m = 1;
    int fold = 3;
};

/// k-fold Forrelation of the chain f1 -> f2 -> ... -> fk, computed with k-1
/// interleaved Walsh passes in O(k n 2^n).
ForrelationValue forrelation_k(std::span<const BooleanFunction> fs);

/// 3-fold m-Forrelation
/// Phi^(m) = 2^{-n} sum_x (-1)^{f1(x)} H^(m)_{f2}(x) conj(H^(m)_{f3}(x)).
ForrelationValue m_forrelation3(const BooleanFunction& f1, const BooleanFunction& f2,
                                const BooleanFunction& f3, PhaseOrder m);

/// Sampling probability of the m-Hadamard mass on S together with the
/// success curves of the competing query strategies.
struct SamplingReport {
    double p = 0.0;
    ForrelationValue phi;         // Phi^(m)_{indicator(S), f, f}
    double dj_once = 0.0;         // p
    double dj_twice = 0.0;        // 2p - p^2
    double amp_amp_paper = 0.0;   // sin(3 asin(p))
    double amp_amp_standard = 0.0;// sin^2(3 asin(sqrt(p)))
    double forr_3q = 0.0;         // 4p - 4p^2
};

SamplingReport sampling_report(const BooleanFunction& f, const PointSet& s, PhaseOrder m);

/// The pure curve set over a given p (no function involved).
SamplingReport sampling_curves(double p);

}  // namespace qspectra
