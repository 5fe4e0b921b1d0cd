#include "qspectra/circuits.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace qspectra::circuits {

using sim::gate_h;
using sim::gate_omega;
using sim::gate_omega_conj;
using sim::gate_sphase;
using sim::MeasurementDistribution;
using sim::StateVector;

namespace {

std::vector<int> iota_register(int first, int count) {
    std::vector<int> reg(static_cast<std::size_t>(count));
    std::iota(reg.begin(), reg.end(), first);
    return reg;
}

void check_equal_arity(const BooleanFunction& a, const BooleanFunction& b) {
    if (a.n != b.n) fail("arity_mismatch", "functions must share arity");
}

constexpr double kProbTol = 1e-9;

}  // namespace

MeasurementDistribution run_generalized_dj(const BooleanFunction& f, const DJPlan& plan) {
    if (static_cast<int>(plan.d.size()) != f.n)
        fail("size", "plan length must equal function arity");
    for (int di : plan.d)
        if (di < 1) fail("size", "gate orders must be >= 1");
    const int n = f.n;
    const std::vector<int> reg = iota_register(1, n);
    StateVector st = sim::init_state(n);
    sim::apply_gate_layer(st, gate_h(), reg);
    sim::apply_phase_oracle(st, f, reg);
    for (int i = 1; i <= n; ++i)
        sim::apply_gate(st, gate_omega(plan.d[static_cast<std::size_t>(i - 1)]), i);
    return sim::measure_distribution(st, reg);
}

MeasurementDistribution run_mforr_3q(const BooleanFunction& f1, const BooleanFunction& f2,
                                     const BooleanFunction& f3, PhaseOrder m) {
    check_equal_arity(f1, f2);
    check_equal_arity(f1, f3);
    const int n = f1.n;
    const std::vector<int> reg = iota_register(1, n);
    StateVector st = sim::init_state(n);
    sim::apply_gate_layer(st, gate_h(), reg);
    sim::apply_phase_oracle(st, f2, reg);
    sim::apply_gate_layer(st, gate_omega(m.m), reg);
    sim::apply_phase_oracle(st, f1, reg);
    sim::apply_gate_layer(st, gate_h(), reg);
    sim::apply_phase_oracle(st, f3, reg);
    sim::apply_gate_layer(st, gate_omega_conj(m.m), reg);
    return sim::measure_distribution(st, reg);
}

MForr2qResult run_mforr_2q(const BooleanFunction& f1, const BooleanFunction& f2,
                           const BooleanFunction& f3, PhaseOrder m) {
    check_equal_arity(f1, f2);
    check_equal_arity(f1, f3);
    const int n = f1.n;
    const std::vector<int> query = iota_register(2, n);  // driving qubit is 1
    StateVector st = sim::init_state(n + 1);
    sim::apply_gate(st, gate_h(), 1);
    sim::apply_gate_layer(st, gate_h(), query);

    const std::vector<sim::QOp> branch0{
        sim::PhaseOracleOp{f2, query},
        sim::GateLayerOp{gate_omega(m.m), query},
        sim::PhaseOracleOp{f1, query},
        sim::GateLayerOp{gate_h(), query},
    };
    const std::vector<sim::QOp> branch1{
        sim::GateLayerOp{gate_sphase(m.m), query},
        sim::PhaseOracleOp{f3, query},
    };
    sim::apply_branch(st, 1, 0, branch0);
    sim::apply_branch(st, 1, 1, branch1);
    sim::apply_gate(st, gate_h(), 1);

    MForr2qResult result;
    const std::vector<int> all = iota_register(1, n + 1);
    result.dist = sim::measure_distribution(st, all);
    const std::vector<int> driving{1};
    result.p0 = sim::measure_distribution(st, driving).probs[0];
    return result;
}

MeasurementDistribution run_spectrum_sampler(const BooleanFunction& f, const BooleanFunction& g,
                                             PhaseOrder m, SamplerPrep prep) {
    check_equal_arity(f, g);
    const int n = f.n;
    if (2 * n > kMaxQubits) fail("size", "sampler register of 2n qubits exceeds the simulator cap");
    const std::vector<int> reg_a = iota_register(1, n);
    const std::vector<int> reg_b = iota_register(n + 1, n);
    StateVector st = sim::init_state(2 * n);

    if (prep.kind == SamplerPrep::Kind::Hadamard)
        sim::apply_gate_layer(st, gate_h(), reg_a);
    else
        sim::prepare_dicke(st, reg_a, prep.k);

    sim::apply_gate_layer(st, gate_h(), reg_b);
    sim::apply_phase_oracle(st, f, reg_b);
    sim::apply_gate_layer(st, gate_omega(m.m), reg_b);
    sim::apply_pairwise_cz(st, reg_a, reg_b);
    sim::apply_gate_layer(st, gate_h(), reg_b);
    sim::apply_phase_oracle(st, g, reg_b);
    sim::apply_gate_layer(st, gate_omega_conj(m.m), reg_b);

    const std::vector<int> all = iota_register(1, 2 * n);
    return sim::measure_distribution(st, all);
}

BentShiftResult run_bent_shift(const BooleanFunction& f, const BooleanFunction& g) {
    check_equal_arity(f, g);
    const BooleanFunction fdual = dual(f);  // raises not_bent for non-bent f
    const int n = f.n;
    const std::vector<int> reg = iota_register(1, n);
    StateVector st = sim::init_state(n);
    sim::apply_gate_layer(st, gate_h(), reg);
    sim::apply_phase_oracle(st, g, reg);
    sim::apply_gate_layer(st, gate_h(), reg);
    sim::apply_phase_oracle(st, fdual, reg);
    sim::apply_gate_layer(st, gate_h(), reg);

    BentShiftResult result;
    result.dist = sim::measure_distribution(st, reg);

    std::vector<std::uint32_t> support, zeros;
    for (std::uint32_t y = 0; y < (std::uint32_t(1) << n); ++y) {
        if (result.dist.probs[y] > kProbTol)
            support.push_back(y);
        else
            zeros.push_back(y);
    }
    ShiftInterpretation& interp = result.interpretation;
    if (support.size() == 1 && support[0] == 0) {
        interp.kind = ShiftInterpretation::Case::AllZeroOnly;
        interp.state = 0;
    } else if (support.size() == 1) {
        interp.kind = ShiftInterpretation::Case::SingleNonzeroState;
        interp.state = support[0];
    } else if (zeros.size() == 1) {
        interp.kind = ShiftInterpretation::Case::MissingState;
        interp.state = zeros[0];
    } else {
        interp.kind = ShiftInterpretation::Case::Mixed;
    }
    return result;
}

std::vector<std::uint32_t> ShiftSolutionSet::enumerate() const {
    std::vector<std::uint32_t> all;
    all.reserve(size());
    for (std::uint32_t sel = 0; sel < (std::uint32_t(1) << basis.size()); ++sel) {
        std::uint32_t u = offset;
        for (std::size_t j = 0; j < basis.size(); ++j)
            if ((sel >> j) & 1u) u ^= basis[j];
        all.push_back(u);
    }
    std::sort(all.begin(), all.end());
    return all;
}

bool ShiftSolutionSet::contains(std::uint32_t u) const {
    // membership test: u xor offset reducible to zero by the basis
    std::vector<std::uint32_t> rows = basis;
    std::uint32_t v = u ^ offset;
    for (std::size_t k = 0; k < rows.size(); ++k) {
        // eliminate greedily on each row's leading bit
        std::uint32_t best = 0;
        std::size_t best_idx = 0;
        for (std::size_t j = k; j < rows.size(); ++j)
            if (rows[j] > best) { best = rows[j]; best_idx = j; }
        if (best == 0) break;
        std::swap(rows[k], rows[best_idx]);
        const std::uint32_t lead = std::uint32_t(1) << (31 - std::countl_zero(rows[k]));
        for (std::size_t j = k + 1; j < rows.size(); ++j)
            if (rows[j] & lead) rows[j] ^= rows[k];
        if (v & lead) v ^= rows[k];
    }
    return v == 0;
}

ShiftSolutionSet solve_shift_system(std::span<const std::uint32_t> samples, int n) {
    std::vector<std::uint32_t> rows;
    std::vector<std::uint8_t> rhs;
    rows.reserve(samples.size());
    rhs.reserve(samples.size());
    const std::uint32_t zmask = (std::uint32_t(1) << n) - 1;
    for (std::uint32_t s : samples) {
        rows.push_back(s & zmask);
        rhs.push_back(static_cast<std::uint8_t>((s >> n) & 1u));
    }
    const gf2::AffineSolution sol = gf2::solve(rows, rhs, n);
    if (!sol.consistent)
        fail("inconsistent_system", "orthogonality system has no solution; no shift u exists");
    ShiftSolutionSet set;
    set.n = n;
    set.offset = sol.offset;
    set.basis = sol.basis;
    return set;
}

NegabentShiftResult run_negabent_shift(const BooleanFunction& f, const BooleanFunction& g,
                                       std::int64_t shots, std::uint64_t seed) {
    check_equal_arity(f, g);
    const int n = f.n;
    const std::vector<int> all = iota_register(1, n + 1);
    const std::vector<int> query = iota_register(2, n);

    StateVector st = sim::init_state(n + 1);
    sim::apply_gate_layer(st, gate_h(), all);
    const std::vector<sim::QOp> oracle_f{sim::PhaseOracleOp{f, query}};
    const std::vector<sim::QOp> oracle_g{sim::PhaseOracleOp{g, query}};
    sim::apply_branch(st, 1, 0, oracle_f);
    sim::apply_branch(st, 1, 1, oracle_g);
    sim::apply_gate_layer(st, gate_h(), all);

    NegabentShiftResult result;
    result.shots = shots;
    result.seed = seed;
    result.analytic = sim::measure_distribution(st, all);

    const std::vector<std::uint32_t> outcomes = sim::draw_samples(result.analytic, shots, seed);
    result.counts.assign(result.analytic.probs.size(), 0);
    for (std::uint32_t o : outcomes) ++result.counts[o];

    // run the elimination over a prefix of the draws: budget 10(n+1), early
    // stop once the rank has not grown for three consecutive samples
    gf2::IncrementalSolver solver(n);
    const std::uint32_t zmask = (std::uint32_t(1) << n) - 1;
    const auto budget = static_cast<std::int64_t>(10 * (n + 1));
    int stale = 0;
    std::int64_t used = 0;
    for (std::uint32_t o : outcomes) {
        if (used >= budget || stale >= 3 || solver.rank() == n) break;
        ++used;
        const bool grew = solver.add(o & zmask, static_cast<int>((o >> n) & 1u));
        stale = grew ? 0 : stale + 1;
    }
    result.samples_used = static_cast<int>(used);
    if (!solver.consistent())
        fail("inconsistent_system", "orthogonality system has no solution; no shift u exists");

    const gf2::AffineSolution sol = solver.solution();
    result.solution.n = n;
    result.solution.offset = sol.offset;
    result.solution.basis = sol.basis;
    if (result.solution.basis.size() <= 12) {
        for (std::uint32_t u : result.solution.enumerate())
            result.solution.verified.emplace_back(u, shift(f, u) == g);
    }
    return result;
}

}  // namespace qspectra::circuits
