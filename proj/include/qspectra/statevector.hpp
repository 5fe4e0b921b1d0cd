#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "qspectra/boolfun.hpp"
#include "qspectra/common.hpp"

namespace qspectra::sim {

/// Dense amplitude vector over q qubits; qubit 1 is the most significant
/// index bit (top circuit wire).
struct StateVector {
    int q = 0;
    std::vector<cdouble> amps;

    std::size_t dim() const { return std::size_t(1) << q; }
    double norm_sq() const;
};

StateVector init_state(int q);

/// Single-qubit gate, column-major: column j is the image of basis state j.
struct Gate1Q {
    std::array<cdouble, 4> u;  // u[0]=g00 u[1]=g10 u[2]=g01 u[3]=g11
    std::string name;
};

Gate1Q gate_h();
Gate1Q gate_x();
/// Omega_m = 1/sqrt(2) [[1, zeta_m], [1, -zeta_m]].
Gate1Q gate_omega(int m);
/// Entrywise conjugate of Omega_m.
Gate1Q gate_omega_conj(int m);
/// S_m = diag(1, zeta_m); S_1=I, S_2=Z, S_4=S, S_8=T.
Gate1Q gate_sphase(int m);
Gate1Q adjoint(const Gate1Q& g);

bool is_unitary(const Gate1Q& g, double tol = 1e-12);

/// Restriction of an operation to the subspace where `control` equals
/// `value`; the other branch is untouched.
struct BranchMask {
    int control = 0;  // 1-based qubit
    int value = 0;
};
using MaskOpt = std::optional<BranchMask>;

void apply_gate(StateVector& st, const Gate1Q& g, int qubit, MaskOpt mask = {});
void apply_gate_layer(StateVector& st, const Gate1Q& g, std::span<const int> qubits,
                      MaskOpt mask = {});

/// Phase oracle: amplitudes whose restriction to `qubits` reads x gain the
/// factor (-1)^{f(x)}. The |-> ancilla of the textbook construction is
/// elided; apply_xor_oracle is the explicit (n+1)-qubit form.
void apply_phase_oracle(StateVector& st, const BooleanFunction& f,
                        std::span<const int> qubits, MaskOpt mask = {});
void apply_xor_oracle(StateVector& st, const BooleanFunction& f,
                      std::span<const int> qubits, int target);

/// Multiplies the basis state (y,x) by (-1)^{y . x} across two equal-size
/// disjoint registers.
void apply_pairwise_cz(StateVector& st, std::span<const int> reg_a,
                       std::span<const int> reg_b, MaskOpt mask = {});

// Subprogram steps accepted by apply_branch.
struct GateLayerOp {
    Gate1Q gate;
    std::vector<int> qubits;
};
struct PhaseOracleOp {
    BooleanFunction f;
    std::vector<int> qubits;
};
struct PairwiseCZOp {
    std::vector<int> reg_a;
    std::vector<int> reg_b;
};
using QOp = std::variant<GateLayerOp, PhaseOracleOp, PairwiseCZOp>;

/// Runs the subprogram on the subspace where `control` equals `value`.
void apply_branch(StateVector& st, int control, int value, std::span<const QOp> program);

/// Injects the uniform weight-k superposition on `reg`, which must currently
/// hold |0...0>.
void prepare_dicke(StateVector& st, std::span<const int> reg, int k);

struct MeasurementDistribution {
    std::vector<int> reg;       // measured qubits, first listed = MSB
    std::vector<double> probs;  // indexed by outcome in that bit order

    double total() const;
};

MeasurementDistribution measure_distribution(const StateVector& st, std::span<const int> qubits);

/// Seeded outcome sequence via inverse CDF over the marginal distribution.
/// Generator: mt19937_64 seeded directly, doubles from the top 53 bits
/// ("mt19937_64/inverse-cdf/v1"); identical inputs give identical draws.
std::vector<std::uint32_t> draw_samples(const MeasurementDistribution& dist,
                                        std::int64_t shots, std::uint64_t seed);
std::vector<std::uint64_t> sample(const StateVector& st, std::span<const int> qubits,
                                  std::int64_t shots, std::uint64_t seed);

}  // namespace qspectra::sim
