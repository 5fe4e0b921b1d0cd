#include "qspectra/io.hpp"

#include <charconv>
#include <fstream>

namespace qspectra::io {

std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), normalize_zero(v));
    return std::string(buf, res.ptr);
}

ojson truthtable_to_json(const BooleanFunction& f) {
    ojson j;
    j["n"] = f.n;
    j["hex"] = to_hex(f);
    return j;
}

BooleanFunction truthtable_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("hex"))
        fail("parse", "truth-table file must be an object with \"n\" and \"hex\"");
    if (!j["n"].is_number_integer() || !j["hex"].is_string())
        fail("parse", "truth-table file has wrong field types");
    return from_hex(j["n"].get<int>(), j["hex"].get<std::string>());
}

BooleanFunction load_function_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail("io", "cannot open function file '" + path + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        fail("parse", "invalid JSON in '" + path + "': " + e.what());
    }
    return truthtable_from_json(j);
}

ojson spectrum_to_json(const Spectrum& s) {
    ojson j;
    j["n"] = s.n;
    j["m"] = s.m;
    j["kind"] = to_string(s.kind);
    j["normalized"] = s.normalized;
    ojson values = ojson::array();
    for (const cdouble& v : s.values) values.push_back({normalize_zero(v.real()), normalize_zero(v.imag())});
    j["values"] = std::move(values);
    return j;
}

std::string spectrum_to_csv(const Spectrum& s) {
    std::string out = "omega,re,im\n";
    for (std::uint32_t w = 0; w < s.values.size(); ++w) {
        out += bit_string(w, s.n);
        out += ',';
        out += format_double(s.values[w].real());
        out += ',';
        out += format_double(s.values[w].imag());
        out += '\n';
    }
    return out;
}

ojson forrelation_to_json(const ForrelationValue& v) {
    ojson j;
    j["m"] = v.m;
    j["fold"] = v.fold;
    j["re"] = normalize_zero(v.value.real());
    j["im"] = normalize_zero(v.value.imag());
    return j;
}

std::string report_csv_header() {
    return "p,dj_once,dj_twice,amp_amp_paper,amp_amp_standard,forr_3q\n";
}

std::string report_csv_row(const SamplingReport& r) {
    std::string out;
    out += format_double(r.p);
    for (double v : {r.dj_once, r.dj_twice, r.amp_amp_paper, r.amp_amp_standard, r.forr_3q}) {
        out += ',';
        out += format_double(v);
    }
    out += '\n';
    return out;
}

ojson report_to_json(const SamplingReport& r) {
    ojson j;
    j["p"] = r.p;
    j["phi"] = forrelation_to_json(r.phi);
    j["dj_once"] = r.dj_once;
    j["dj_twice"] = r.dj_twice;
    j["amp_amp_paper"] = r.amp_amp_paper;
    j["amp_amp_standard"] = r.amp_amp_standard;
    j["forr_3q"] = r.forr_3q;
    return j;
}

namespace {

constexpr double kEmitTol = 1e-12;

// keys arrive unique and pre-sorted, so append to the underlying vector of
// the ordered map instead of going through its linear-probing emplace
template <typename Fn>
ojson outcome_map(std::size_t count, int bits, Fn&& keep_value) {
    ojson::object_t obj;
    for (std::uint32_t o = 0; o < count; ++o) {
        ojson v;
        if (keep_value(o, v)) obj.emplace_back(bit_string(o, bits), std::move(v));
    }
    return ojson(std::move(obj));
}

}  // namespace

ojson distribution_to_json(const sim::MeasurementDistribution& d) {
    ojson j;
    j["qubits"] = d.reg;
    const int bits = static_cast<int>(d.reg.size());
    j["probs"] = outcome_map(d.probs.size(), bits, [&](std::uint32_t o, ojson& v) {
        if (d.probs[o] <= kEmitTol) return false;
        v = d.probs[o];
        return true;
    });
    return j;
}

std::string distribution_to_csv(const sim::MeasurementDistribution& d) {
    std::string out = "outcome,probability\n";
    const int bits = static_cast<int>(d.reg.size());
    for (std::uint32_t o = 0; o < d.probs.size(); ++o) {
        if (d.probs[o] <= kEmitTol) continue;
        out += bit_string(o, bits);
        out += ',';
        out += format_double(d.probs[o]);
        out += '\n';
    }
    return out;
}

ojson counts_to_json(const sim::MeasurementDistribution& d,
                     std::span<const std::uint64_t> counts) {
    const int bits = static_cast<int>(d.reg.size());
    return outcome_map(counts.size(), bits, [&](std::uint32_t o, ojson& v) {
        if (counts[o] == 0) return false;
        v = counts[o];
        return true;
    });
}

ojson classify_to_json(const ClassifyRecord& rec) {
    ojson j;
    j["n"] = rec.n;
    j["weight"] = rec.weight;
    j["balanced"] = rec.balanced;
    j["constant"] = rec.constant;
    j["affine"] = rec.affine;
    j["bent"] = rec.bent;
    j["negabent"] = rec.negabent;
    ojson per_m = ojson::array();
    for (const MBentVerdict& v : rec.per_m) {
        ojson e;
        e["m"] = v.m;
        e["m_bent"] = v.flat_transform;
        e["m_bent_autocorr"] = v.autocorr_vanishes;
        per_m.push_back(std::move(e));
    }
    j["per_m"] = std::move(per_m);
    return j;
}

std::string interpretation_case_name(circuits::ShiftInterpretation::Case c) {
    using Case = circuits::ShiftInterpretation::Case;
    switch (c) {
        case Case::AllZeroOnly: return "all_zero_only";
        case Case::SingleNonzeroState: return "single_nonzero_state";
        case Case::MissingState: return "missing_state";
        case Case::Mixed: return "mixed";
    }
    fail("parse", "bad interpretation case");
}

ojson bent_shift_to_json(const circuits::BentShiftResult& r) {
    ojson j = distribution_to_json(r.dist);
    ojson interp;
    interp["case"] = interpretation_case_name(r.interpretation.kind);
    if (r.interpretation.state)
        interp["state"] = bit_string(*r.interpretation.state, static_cast<int>(r.dist.reg.size()));
    j["interpretation"] = std::move(interp);
    return j;
}

ojson shift_solution_to_json(const circuits::ShiftSolutionSet& s) {
    ojson j;
    j["offset"] = bit_string(s.offset, s.n);
    ojson basis = ojson::array();
    for (std::uint32_t b : s.basis) basis.push_back(bit_string(b, s.n));
    j["basis"] = std::move(basis);
    std::size_t verified = 0;
    for (const auto& [u, ok] : s.verified)
        if (ok) ++verified;
    j["verified_count"] = verified;
    j["solution_count"] = s.size();
    return j;
}

ojson negabent_shift_to_json(const circuits::NegabentShiftResult& r) {
    ojson j = shift_solution_to_json(r.solution);
    j["samples_used"] = r.samples_used;
    j["shots"] = r.shots;
    j["seed"] = r.seed;
    j["probs"] = distribution_to_json(r.analytic)["probs"];
    j["counts"] = counts_to_json(r.analytic, r.counts);
    return j;
}

ojson error_record(const std::string& category, const std::string& message) {
    ojson j;
    j["error"] = ojson{{"category", category}, {"message", message}};
    return j;
}

std::string dump(const ojson& j) { return j.dump(2) + "\n"; }

}  // namespace qspectra::io
