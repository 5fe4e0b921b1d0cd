#include "qspectra/forrelation.hpp"

#include <algorithm>
#include <cmath>

#include "qspectra/kernels.hpp"

namespace qspectra {

ForrelationValue forrelation_k(std::span<const BooleanFunction> fs) {
    const int k = static_cast<int>(fs.size());
    if (k < 2) fail("size", "forrelation needs at least two functions");
    const int n = fs[0].n;
    for (const BooleanFunction& f : fs)
        if (f.n != n) fail("arity_mismatch", "forrelation requires equal arity");

    const std::uint32_t size = fs[0].domain_size();
    std::vector<double> v(size);
    for (std::uint32_t x = 0; x < size; ++x) v[x] = fs[static_cast<std::size_t>(k - 1)].test(x) ? -1.0 : 1.0;
    for (int j = k - 2; j >= 0; --j) {
        kernels::fwht(std::span<double>(v));
        for (std::uint32_t x = 0; x < size; ++x)
            if (fs[static_cast<std::size_t>(j)].test(x)) v[x] = -v[x];
    }
    double sum = 0.0;
    for (double t : v) sum += t;
    const double scale = std::pow(2.0, -static_cast<double>((k + 1) * n) / 2.0);
    return ForrelationValue{cdouble{sum * scale, 0.0}, 1, k};
}

ForrelationValue m_forrelation3(const BooleanFunction& f1, const BooleanFunction& f2,
                                const BooleanFunction& f3, PhaseOrder m) {
    if (f1.n != f2.n || f1.n != f3.n) fail("arity_mismatch", "m-Forrelation requires equal arity");
    const Spectrum h2 = m_hadamard(f2, m);
    const Spectrum h3 = m_hadamard(f3, m);
    cdouble sum = 0.0;
    for (std::uint32_t x = 0; x < f1.domain_size(); ++x) {
        const cdouble term = h2.values[x] * std::conj(h3.values[x]);
        sum += f1.test(x) ? -term : term;
    }
    return ForrelationValue{sum / static_cast<double>(f1.domain_size()), m.m, 3};
}

SamplingReport sampling_curves(double p) {
    SamplingReport r;
    r.p = p;
    r.phi = ForrelationValue{cdouble{1.0 - 2.0 * p, 0.0}, 1, 3};
    r.dj_once = p;
    r.dj_twice = 2.0 * p - p * p;
    const double pc = std::clamp(p, 0.0, 1.0);  // guard asin against FP dust
    r.amp_amp_paper = std::sin(3.0 * std::asin(pc));
    const double s = std::sin(3.0 * std::asin(std::sqrt(pc)));
    r.amp_amp_standard = s * s;
    r.forr_3q = 4.0 * p - 4.0 * p * p;
    return r;
}

SamplingReport sampling_report(const BooleanFunction& f, const PointSet& s, PhaseOrder m) {
    if (s.n != f.n) fail("arity_mismatch", "point set arity mismatch");
    const Spectrum h = m_hadamard(f, m);
    double mass = 0.0;
    for (std::uint32_t x : s.points) mass += std::norm(h.values[x]);
    SamplingReport r = sampling_curves(mass / static_cast<double>(f.domain_size()));
    // phi recomputed through the Forrelation route rather than 1-2p, so the
    // proposition p = (1 - Phi)/2 stays an observable identity
    r.phi = m_forrelation3(indicator_fn(s), f, f, m);
    return r;
}

}  // namespace qspectra
