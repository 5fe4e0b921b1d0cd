#include "qspectra/spectra.hpp"

#include <algorithm>
#include <cmath>

#include "qspectra/kernels.hpp"

namespace qspectra {

namespace {

constexpr double kFlatTol = 1e-6;

bool is_power_of_two(std::size_t v) { return v != 0 && (v & (v - 1)) == 0; }

std::vector<cdouble> signed_phase_vector(const BooleanFunction& f, int m, int sign) {
    std::vector<cdouble> v(f.domain_size());
    std::vector<cdouble> zp(static_cast<std::size_t>(f.n) + 1);
    for (int k = 0; k <= f.n; ++k) zp[static_cast<std::size_t>(k)] = zeta_pow(m, sign * k);
    for (std::uint32_t x = 0; x < f.domain_size(); ++x) {
        const cdouble z = zp[static_cast<std::size_t>(weight(x))];
        v[x] = f.test(x) ? -z : z;
    }
    return v;
}

}  // namespace

std::string to_string(SpectrumKind kind) {
    switch (kind) {
        case SpectrumKind::mHadamard: return "mHadamard";
        case SpectrumKind::conjMHadamard: return "conjMHadamard";
        case SpectrumKind::mCross: return "mCross";
        case SpectrumKind::mAuto: return "mAuto";
    }
    fail("parse", "bad spectrum kind");
}

SpectrumKind spectrum_kind_from_string(const std::string& s) {
    if (s == "mHadamard") return SpectrumKind::mHadamard;
    if (s == "conjMHadamard") return SpectrumKind::conjMHadamard;
    if (s == "mCross") return SpectrumKind::mCross;
    if (s == "mAuto") return SpectrumKind::mAuto;
    fail("parse", "unknown spectrum kind '" + s + "'");
}

void fwht(std::span<cdouble> values) {
    if (!is_power_of_two(values.size())) fail("size", "fwht length must be a power of two");
    kernels::fwht(values);
}

void fwht(std::span<double> values) {
    if (!is_power_of_two(values.size())) fail("size", "fwht length must be a power of two");
    kernels::fwht(values);
}

Spectrum m_hadamard(const BooleanFunction& f, PhaseOrder m, bool conjugate) {
    Spectrum s;
    s.n = f.n;
    s.m = m.m;
    s.kind = conjugate ? SpectrumKind::conjMHadamard : SpectrumKind::mHadamard;
    s.values = signed_phase_vector(f, m.m, conjugate ? -1 : 1);
    kernels::fwht(std::span<cdouble>(s.values));
    const double scale = std::pow(2.0, -f.n / 2.0);
    for (cdouble& v : s.values) v *= scale;
    s.normalized = true;
    return s;
}

BooleanFunction invert_m_hadamard(const Spectrum& spec) {
    if (spec.kind != SpectrumKind::mHadamard)
        fail("size", "inversion requires an mHadamard spectrum");
    if (!is_power_of_two(spec.values.size()) ||
        spec.values.size() != (std::size_t(1) << spec.n))
        fail("size", "spectrum length does not match arity");
    std::vector<cdouble> v = spec.values;
    kernels::fwht(std::span<cdouble>(v));
    const double scale = std::pow(2.0, -spec.n / 2.0);
    BooleanFunction f = BooleanFunction::zeros(spec.n);
    for (std::uint32_t y = 0; y < f.domain_size(); ++y) {
        const cdouble r = scale * zeta_pow(spec.m, -weight(y)) * v[y];
        if (std::abs(r.imag()) > kFlatTol ||
            std::abs(std::abs(r.real()) - 1.0) > kFlatTol)
            fail("reconstruction_not_boolean",
                 "recovered value at " + bit_string(y, spec.n) + " is not +-1");
        f.set(y, r.real() < 0.0);
    }
    return f;
}

Spectrum m_crosscorrelation(const BooleanFunction& f, const BooleanFunction& g, PhaseOrder m) {
    if (f.n != g.n) fail("arity_mismatch", "crosscorrelation requires equal arity");
    const int n = f.n;
    const std::uint32_t size = f.domain_size();
    Spectrum s;
    s.n = n;
    s.m = m.m;
    s.kind = (f == g) ? SpectrumKind::mAuto : SpectrumKind::mCross;
    s.values.assign(size, cdouble{});
    s.normalized = false;
    std::vector<cdouble> z2(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) z2[static_cast<std::size_t>(k)] = zeta_pow(m.m, 2 * k);
    cdouble* out = s.values.data();
#pragma omp parallel for schedule(static) if (size >= 256)
    for (std::int64_t yi = 0; yi < static_cast<std::int64_t>(size); ++yi) {
        const auto y = static_cast<std::uint32_t>(yi);
        cdouble acc = 0.0;
        for (std::uint32_t x = 0; x < size; ++x) {
            const cdouble term = z2[static_cast<std::size_t>(weight(x & y))];
            acc += (f.test(x) ^ g.test(x ^ y)) ? -term : term;
        }
        out[y] = acc;
    }
    return s;
}

Spectrum m_autocorrelation(const BooleanFunction& f, PhaseOrder m) {
    return m_crosscorrelation(f, f, m);
}

Spectrum crosscorr_via_spectra(const BooleanFunction& f, const BooleanFunction& g, PhaseOrder m) {
    if (f.n != g.n) fail("arity_mismatch", "crosscorrelation requires equal arity");
    const Spectrum hf = m_hadamard(f, m);
    const Spectrum hg = m_hadamard(g, m);
    Spectrum s;
    s.n = f.n;
    s.m = m.m;
    s.kind = (f == g) ? SpectrumKind::mAuto : SpectrumKind::mCross;
    s.values.resize(f.domain_size());
    for (std::uint32_t u = 0; u < f.domain_size(); ++u)
        s.values[u] = hf.values[u] * std::conj(hg.values[u]);
    kernels::fwht(std::span<cdouble>(s.values));
    for (std::uint32_t z = 0; z < f.domain_size(); ++z)
        s.values[z] *= zeta_pow(m.m, weight(z));
    s.normalized = false;
    return s;
}

namespace {

MBentVerdict m_bent_verdict(const BooleanFunction& f, int m) {
    MBentVerdict v;
    v.m = m;
    const Spectrum h = m_hadamard(f, PhaseOrder(m));
    v.flat_transform = std::all_of(h.values.begin(), h.values.end(), [](cdouble c) {
        return std::abs(std::abs(c) - 1.0) <= kFlatTol;
    });
    const Spectrum auto_corr = m_crosscorrelation(f, f, PhaseOrder(m));
    v.autocorr_vanishes = true;
    for (std::uint32_t z = 1; z < f.domain_size(); ++z)
        if (std::abs(auto_corr.values[z]) > kFlatTol) {
            v.autocorr_vanishes = false;
            break;
        }
    if (v.flat_transform != v.autocorr_vanishes)
        fail("verdict_mismatch",
             "transform-flatness and autocorrelation verdicts disagree at m=" + std::to_string(m));
    return v;
}

}  // namespace

ClassifyRecord classify(const BooleanFunction& f, std::span<const int> m_list) {
    ClassifyRecord rec;
    rec.n = f.n;
    rec.weight = hamming_weight(f);
    rec.balanced = is_balanced(f);
    rec.constant = is_constant(f);
    rec.affine = is_affine(f);
    bool saw_1 = false, saw_4 = false;
    for (int m : m_list) {
        const MBentVerdict v = m_bent_verdict(f, m);
        if (m == 1) { rec.bent = v.flat_transform; saw_1 = true; }
        if (m == 4) { rec.negabent = v.flat_transform; saw_4 = true; }
        rec.per_m.push_back(v);
    }
    if (!saw_1) rec.bent = m_bent_verdict(f, 1).flat_transform;
    if (!saw_4) rec.negabent = m_bent_verdict(f, 4).flat_transform;
    return rec;
}

}  // namespace qspectra
