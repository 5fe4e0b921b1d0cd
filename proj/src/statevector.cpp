#include "qspectra/statevector.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "qspectra/kernels.hpp"

namespace qspectra::sim {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

void check_qubit(const StateVector& st, int qubit) {
    if (qubit < 1 || qubit > st.q)
        fail("index_range", "qubit " + std::to_string(qubit) + " out of range 1.." + std::to_string(st.q));
}

void check_register(const StateVector& st, std::span<const int> qubits) {
    for (int qb : qubits) check_qubit(st, qb);
    std::vector<int> sorted(qubits.begin(), qubits.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        fail("index_range", "duplicate qubit in register");
}

inline int index_bit(const StateVector& st, int qubit) { return st.q - qubit; }

/// x read from basis index i at the listed qubits, first listed = MSB of x.
inline std::uint32_t extract_bits(std::size_t i, std::span<const int> positions) {
    std::uint32_t x = 0;
    for (int pos : positions) x = (x << 1) | static_cast<std::uint32_t>((i >> pos) & 1u);
    return x;
}

std::vector<int> bit_positions(const StateVector& st, std::span<const int> qubits) {
    std::vector<int> pos(qubits.size());
    for (std::size_t j = 0; j < qubits.size(); ++j) pos[j] = index_bit(st, qubits[j]);
    return pos;
}

}  // namespace

double StateVector::norm_sq() const {
    double s = 0.0;
    for (const cdouble& a : amps) s += std::norm(a);
    return s;
}

StateVector init_state(int q) {
    if (q < 1 || q > kMaxQubits)
        fail("size", "qubit count must be in [1," + std::to_string(kMaxQubits) + "], got " + std::to_string(q));
    StateVector st;
    st.q = q;
    st.amps.assign(std::size_t(1) << q, cdouble{});
    st.amps[0] = 1.0;
    return st;
}

Gate1Q gate_h() {
    return Gate1Q{{cdouble{kInvSqrt2, 0}, cdouble{kInvSqrt2, 0}, cdouble{kInvSqrt2, 0},
                   cdouble{-kInvSqrt2, 0}},
                  "H"};
}

Gate1Q gate_x() {
    return Gate1Q{{cdouble{0, 0}, cdouble{1, 0}, cdouble{1, 0}, cdouble{0, 0}}, "X"};
}

Gate1Q gate_omega(int m) {
    const cdouble z = zeta(m);
    return Gate1Q{{kInvSqrt2, kInvSqrt2, kInvSqrt2 * z, -kInvSqrt2 * z},
                  "Omega(" + std::to_string(m) + ")"};
}

Gate1Q gate_omega_conj(int m) {
    const cdouble z = std::conj(zeta(m));
    return Gate1Q{{kInvSqrt2, kInvSqrt2, kInvSqrt2 * z, -kInvSqrt2 * z},
                  "OmegaConj(" + std::to_string(m) + ")"};
}

Gate1Q gate_sphase(int m) {
    return Gate1Q{{cdouble{1, 0}, cdouble{0, 0}, cdouble{0, 0}, zeta(m)},
                  "SPhase(" + std::to_string(m) + ")"};
}

Gate1Q adjoint(const Gate1Q& g) {
    return Gate1Q{{std::conj(g.u[0]), std::conj(g.u[2]), std::conj(g.u[1]), std::conj(g.u[3])},
                  g.name + "^dag"};
}

bool is_unitary(const Gate1Q& g, double tol) {
    // columns orthonormal
    const cdouble c00 = std::conj(g.u[0]) * g.u[0] + std::conj(g.u[1]) * g.u[1];
    const cdouble c11 = std::conj(g.u[2]) * g.u[2] + std::conj(g.u[3]) * g.u[3];
    const cdouble c01 = std::conj(g.u[0]) * g.u[2] + std::conj(g.u[1]) * g.u[3];
    return std::abs(c00 - 1.0) <= tol && std::abs(c11 - 1.0) <= tol && std::abs(c01) <= tol;
}

void apply_gate(StateVector& st, const Gate1Q& g, int qubit, MaskOpt mask) {
    check_qubit(st, qubit);
    int mask_bit = -1, mask_val = 0;
    if (mask) {
        check_qubit(st, mask->control);
        if (mask->control == qubit) fail("index_range", "branch subprogram references control qubit");
        mask_bit = index_bit(st, mask->control);
        mask_val = mask->value & 1;
    }
    kernels::apply_gate_1q(st.amps, index_bit(st, qubit), g.u.data(), mask_bit, mask_val);
}

void apply_gate_layer(StateVector& st, const Gate1Q& g, std::span<const int> qubits, MaskOpt mask) {
    check_register(st, qubits);
    for (int qb : qubits) apply_gate(st, g, qb, mask);
}

void apply_phase_oracle(StateVector& st, const BooleanFunction& f,
                        std::span<const int> qubits, MaskOpt mask) {
    check_register(st, qubits);
    if (static_cast<int>(qubits.size()) != f.n)
        fail("size", "oracle register size does not match function arity");
    int mask_bit = -1, mask_val = 0;
    if (mask) {
        check_qubit(st, mask->control);
        for (int qb : qubits)
            if (qb == mask->control) fail("index_range", "branch subprogram references control qubit");
        mask_bit = index_bit(st, mask->control);
        mask_val = mask->value & 1;
    }
    const std::vector<int> pos = bit_positions(st, qubits);
    cdouble* amps = st.amps.data();
    const auto dim = static_cast<std::int64_t>(st.dim());
#pragma omp parallel for schedule(static) if (dim >= (1 << 12))
    for (std::int64_t i = 0; i < dim; ++i) {
        const auto ui = static_cast<std::size_t>(i);
        if (mask_bit >= 0 && static_cast<int>((ui >> mask_bit) & 1u) != mask_val) continue;
        if (f.test(extract_bits(ui, pos))) amps[ui] = -amps[ui];
    }
}

void apply_xor_oracle(StateVector& st, const BooleanFunction& f,
                      std::span<const int> qubits, int target) {
    check_register(st, qubits);
    check_qubit(st, target);
    for (int qb : qubits)
        if (qb == target) fail("index_range", "oracle target overlaps input register");
    if (static_cast<int>(qubits.size()) != f.n)
        fail("size", "oracle register size does not match function arity");
    const std::vector<int> pos = bit_positions(st, qubits);
    const std::size_t tbit = std::size_t(1) << index_bit(st, target);
    // swap |x,a> with |x, a xor f(x)> for f(x)=1
    for (std::size_t i = 0; i < st.dim(); ++i) {
        if (i & tbit) continue;
        if (f.test(extract_bits(i, pos))) std::swap(st.amps[i], st.amps[i | tbit]);
    }
}

void apply_pairwise_cz(StateVector& st, std::span<const int> reg_a,
                       std::span<const int> reg_b, MaskOpt mask) {
    if (reg_a.size() != reg_b.size()) fail("size", "pairwise CZ registers must have equal size");
    std::vector<int> all(reg_a.begin(), reg_a.end());
    all.insert(all.end(), reg_b.begin(), reg_b.end());
    check_register(st, all);  // also rejects overlap
    int mask_bit = -1, mask_val = 0;
    if (mask) {
        check_qubit(st, mask->control);
        for (int qb : all)
            if (qb == mask->control) fail("index_range", "branch subprogram references control qubit");
        mask_bit = index_bit(st, mask->control);
        mask_val = mask->value & 1;
    }
    const std::vector<int> pa = bit_positions(st, reg_a);
    const std::vector<int> pb = bit_positions(st, reg_b);
    cdouble* amps = st.amps.data();
    const auto dim = static_cast<std::int64_t>(st.dim());
    const int* pa_data = pa.data();
    const int* pb_data = pb.data();
    const std::size_t k = pa.size();
#pragma omp parallel for schedule(static) if (dim >= (1 << 12))
    for (std::int64_t i = 0; i < dim; ++i) {
        const auto ui = static_cast<std::size_t>(i);
        if (mask_bit >= 0 && static_cast<int>((ui >> mask_bit) & 1u) != mask_val) continue;
        unsigned acc = 0;
        for (std::size_t j = 0; j < k; ++j)
            acc ^= static_cast<unsigned>((ui >> pa_data[j]) & (ui >> pb_data[j]) & 1u);
        if (acc) amps[ui] = -amps[ui];
    }
}

void apply_branch(StateVector& st, int control, int value, std::span<const QOp> program) {
    check_qubit(st, control);
    const BranchMask mask{control, value & 1};
    for (const QOp& op : program) {
        std::visit(
            [&](const auto& step) {
                using T = std::decay_t<decltype(step)>;
                if constexpr (std::is_same_v<T, GateLayerOp>)
                    apply_gate_layer(st, step.gate, step.qubits, mask);
                else if constexpr (std::is_same_v<T, PhaseOracleOp>)
                    apply_phase_oracle(st, step.f, step.qubits, mask);
                else
                    apply_pairwise_cz(st, step.reg_a, step.reg_b, mask);
            },
            op);
    }
}

void prepare_dicke(StateVector& st, std::span<const int> reg, int k) {
    check_register(st, reg);
    const int r = static_cast<int>(reg.size());
    if (k < 0 || k > r) fail("size", "Dicke weight out of range");
    const std::vector<int> pos = bit_positions(st, reg);
    std::size_t reg_mask = 0;
    for (int p : pos) reg_mask |= std::size_t(1) << p;
    for (std::size_t i = 0; i < st.dim(); ++i)
        if ((i & reg_mask) != 0 && st.amps[i] != cdouble{})
            fail("state", "Dicke preparation requires the register in |0...0>");
    if (k == 0) return;

    // C(r,k) and the weight-k patterns of r bits
    double binom = 1.0;
    for (int j = 1; j <= k; ++j) binom = binom * (r - k + j) / j;
    const double amp_scale = 1.0 / std::sqrt(binom);
    std::vector<std::size_t> scattered;  // pattern bits placed at reg positions
    for (std::uint32_t w = 0; w < (std::uint32_t(1) << r); ++w) {
        if (weight(w) != k) continue;
        std::size_t s = 0;
        for (int j = 0; j < r; ++j)
            if ((w >> (r - 1 - j)) & 1u) s |= std::size_t(1) << pos[static_cast<std::size_t>(j)];
        scattered.push_back(s);
    }

    std::vector<cdouble> out(st.dim(), cdouble{});
    for (std::size_t i = 0; i < st.dim(); ++i) {
        const cdouble a = st.amps[i];
        if (a == cdouble{}) continue;
        for (std::size_t s : scattered) out[i | s] += a * amp_scale;
    }
    st.amps.swap(out);
}

double MeasurementDistribution::total() const {
    return std::accumulate(probs.begin(), probs.end(), 0.0);
}

MeasurementDistribution measure_distribution(const StateVector& st, std::span<const int> qubits) {
    if (qubits.empty()) fail("size", "measurement register is empty");
    check_register(st, qubits);
    const std::vector<int> pos = bit_positions(st, qubits);
    MeasurementDistribution dist;
    dist.reg.assign(qubits.begin(), qubits.end());
    dist.probs.assign(std::size_t(1) << qubits.size(), 0.0);
    for (std::size_t i = 0; i < st.dim(); ++i)
        dist.probs[extract_bits(i, pos)] += std::norm(st.amps[i]);
    return dist;
}

std::vector<std::uint32_t> draw_samples(const MeasurementDistribution& dist,
                                        std::int64_t shots, std::uint64_t seed) {
    if (shots < 0) fail("size", "shot count must be non-negative");
    std::vector<double> cdf(dist.probs.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < dist.probs.size(); ++i) {
        acc += dist.probs[i];
        cdf[i] = acc;
    }
    std::mt19937_64 rng(seed);
    std::vector<std::uint32_t> out;
    out.reserve(static_cast<std::size_t>(shots));
    for (std::int64_t s = 0; s < shots; ++s) {
        const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53 * acc;
        const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
        const std::size_t idx = std::min(static_cast<std::size_t>(it - cdf.begin()), cdf.size() - 1);
        out.push_back(static_cast<std::uint32_t>(idx));
    }
    return out;
}

std::vector<std::uint64_t> sample(const StateVector& st, std::span<const int> qubits,
                                  std::int64_t shots, std::uint64_t seed) {
    const MeasurementDistribution dist = measure_distribution(st, qubits);
    std::vector<std::uint64_t> counts(dist.probs.size(), 0);
    for (std::uint32_t o : draw_samples(dist, shots, seed)) ++counts[o];
    return counts;
}

}  // namespace qspectra::sim
