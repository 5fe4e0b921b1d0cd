#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "qspectra/boolfun.hpp"
#include "qspectra/spectra.hpp"
#include "qspectra/statevector.hpp"

namespace qspectra::circuits {

/// Per-qubit gate orders for the generalized Deutsch-Jozsa layer: qubit i
/// gets Omega_{d_i}.
struct DJPlan {
    std::vector<int> d;

    static DJPlan uniform(int n, int m) { return DJPlan{std::vector<int>(static_cast<std::size_t>(n), m)}; }
};

/// H layer, oracle f, per-qubit Omega_{d_i}, measure all n qubits.
/// With a uniform plan d_i = m the distribution is 2^{-n} |H^(m)_f(y)|^2.
sim::MeasurementDistribution run_generalized_dj(const BooleanFunction& f, const DJPlan& plan);

/// 3-query m-Forrelation circuit:
/// H -> U_{f2} -> Omega_m -> U_{f1} -> H -> U_{f3} -> conj-Omega_m, measure.
/// P(0^n) = |Phi^(m)_{f1,f2,f3}|^2.
sim::MeasurementDistribution run_mforr_3q(const BooleanFunction& f1, const BooleanFunction& f2,
                                          const BooleanFunction& f3, PhaseOrder m);

struct MForr2qResult {
    double p0 = 0.0;  // driving qubit measured |0>
    sim::MeasurementDistribution dist;  // all n+1 qubits, driving first
};

/// 2-query m-Forrelation circuit with the driving qubit selecting between
/// the branches U_{f2}->Omega_m->U_{f1}->H (control 0) and S_m->U_{f3}
/// (control 1). P(|0>) = (1 + Re Phi)/2.
MForr2qResult run_mforr_2q(const BooleanFunction& f1, const BooleanFunction& f2,
                           const BooleanFunction& f3, PhaseOrder m);

struct SamplerPrep {
    enum class Kind { Hadamard, Dicke } kind = Kind::Hadamard;
    int k = 0;  // Dicke weight

    static SamplerPrep hadamard() { return {}; }
    static SamplerPrep dicke(int k) { return SamplerPrep{Kind::Dicke, k}; }
};

/// Full-spectrum sampler over 2n qubits. With Hadamard preparation
/// P(|y>|0^n>) = 2^{-3n} |C^(m)_{f,g}(y)|^2; with Dicke(k) preparation the
/// C(n,k)-scaled form restricted to wt(y) = k.
sim::MeasurementDistribution run_spectrum_sampler(const BooleanFunction& f,
                                                  const BooleanFunction& g, PhaseOrder m,
                                                  SamplerPrep prep);

/// Case analysis of the bent-shift output distribution.
struct ShiftInterpretation {
    enum class Case { AllZeroOnly, SingleNonzeroState, MissingState, Mixed };
    Case kind = Case::Mixed;
    std::optional<std::uint32_t> state;  // the certain / missing outcome
};

struct BentShiftResult {
    sim::MeasurementDistribution dist;
    ShiftInterpretation interpretation;
};

/// H -> U_g -> H -> U_{dual(f)} -> H, measure. For g(x) = f(x xor b) the
/// outcome |b> appears with probability 1.
BentShiftResult run_bent_shift(const BooleanFunction& f, const BooleanFunction& g);

/// Affine subspace offset + span(basis) of shift candidates, with
/// per-candidate truth-table verification when enumerable.
struct ShiftSolutionSet {
    int n = 0;
    std::uint32_t offset = 0;
    std::vector<std::uint32_t> basis;
    std::vector<std::pair<std::uint32_t, bool>> verified;  // candidate -> g==shift(f,.)

    std::size_t size() const { return std::size_t(1) << basis.size(); }
    std::vector<std::uint32_t> enumerate() const;
    bool contains(std::uint32_t u) const;
};

/// Gaussian elimination over F_2 on samples (b,z) constraining <z,u> = b.
/// Samples are (n+1)-bit values with b in the most significant bit. An
/// inconsistent system raises an "inconsistent_system" error.
ShiftSolutionSet solve_shift_system(std::span<const std::uint32_t> samples, int n);

struct NegabentShiftResult {
    ShiftSolutionSet solution;
    sim::MeasurementDistribution analytic;   // all n+1 qubits
    std::vector<std::uint64_t> counts;       // empirical histogram over shots
    std::int64_t shots = 0;
    std::uint64_t seed = 0;
    int samples_used = 0;                    // consumed by the elimination
};

/// Hidden-shift recovery: (n+1)-qubit circuit H -> select-phase oracle
/// (f on the b=0 branch, g on the b=1 branch) -> H, sampled with the given
/// seed. Samples feed the orthogonality system until the rank stabilizes
/// (three consecutive non-increasing draws) or 10(n+1) draws are consumed;
/// candidates are truth-table verified when the solution space has at most
/// 2^12 elements.
NegabentShiftResult run_negabent_shift(const BooleanFunction& f, const BooleanFunction& g,
                                       std::int64_t shots, std::uint64_t seed);

}  // namespace qspectra::circuits
