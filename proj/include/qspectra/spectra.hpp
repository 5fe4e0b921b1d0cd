#pragma once

#include <span>
#include <string>
#include <vector>

#include "qspectra/boolfun.hpp"
#include "qspectra/common.hpp"

namespace qspectra {

/// Order of the root of unity weighting the transforms; m=1 gives the Walsh
/// spectrum, m=4 the nega spectrum.
struct PhaseOrder {
    int m;
    explicit PhaseOrder(int order) : m(order) {
        if (order < 1) fail("size", "phase order must be >= 1");
    }
};

enum class SpectrumKind { mHadamard, conjMHadamard, mCross, mAuto };

std::string to_string(SpectrumKind kind);
SpectrumKind spectrum_kind_from_string(const std::string& s);

/// Length-2^n complex spectrum indexed by idx(omega). Transforms carry the
/// 2^{-n/2} normalization; correlations are raw sums.
struct Spectrum {
    int n = 0;
    int m = 1;
    SpectrumKind kind = SpectrumKind::mHadamard;
    std::vector<cdouble> values;
    bool normalized = false;
};

/// In-place unnormalized Walsh-Hadamard butterfly; length must be a power of
/// two. out[w] = sum_x (-1)^{<x,w>} in[x].
void fwht(std::span<cdouble> values);
void fwht(std::span<double> values);

/// H^(m)_f(w) = 2^{-n/2} sum_x (-1)^{f(x) xor <x,w>} zeta_m^{wt(x)};
/// conjugate=true uses zeta_m^{-wt(x)}.
Spectrum m_hadamard(const BooleanFunction& f, PhaseOrder m, bool conjugate = false);

/// Recovers f from its m-Hadamard spectrum; every reconstructed value must be
/// within 1e-6 of +-1 before thresholding.
BooleanFunction invert_m_hadamard(const Spectrum& spec);

/// C^(m)_{f,g}(y) = sum_x (-1)^{f(x) xor g(x xor y)} (zeta_m^2)^{<x,y>_Z},
/// with the integer-valued dot product in the exponent. f == g yields kind
/// mAuto.
Spectrum m_crosscorrelation(const BooleanFunction& f, const BooleanFunction& g, PhaseOrder m);
Spectrum m_autocorrelation(const BooleanFunction& f, PhaseOrder m);

/// Same spectrum through the transform product
/// zeta^{wt(z)} sum_u H_f(u) conj(H_g(u)) (-1)^{<u,z>}.
Spectrum crosscorr_via_spectra(const BooleanFunction& f, const BooleanFunction& g, PhaseOrder m);

struct MBentVerdict {
    int m = 1;
    bool flat_transform = false;    // all |H^(m)| == 1
    bool autocorr_vanishes = false; // C^(m)(z) == 0 off the origin
};

struct ClassifyRecord {
    int n = 0;
    int weight = 0;
    bool balanced = false;
    bool constant = false;
    bool affine = false;
    bool bent = false;      // m = 1 verdict
    bool negabent = false;  // m = 4 verdict
    std::vector<MBentVerdict> per_m;
};

/// Classifies f for each listed order; the transform-flatness and
/// autocorrelation verdicts are computed independently and must agree.
ClassifyRecord classify(const BooleanFunction& f, std::span<const int> m_list);

}  // namespace qspectra
