#pragma once

#include <string>

#include <json.hpp>

#include "qspectra/boolfun.hpp"
#include "qspectra/circuits.hpp"
#include "qspectra/forrelation.hpp"
#include "qspectra/spectra.hpp"
#include "qspectra/statevector.hpp"

namespace qspectra::io {

using ojson = nlohmann::ordered_json;

/// Shortest round-trip decimal form of a double ("1" for 1.0).
std::string format_double(double v);

/// Negative zero from cancelling sums serializes as plain zero.
inline double normalize_zero(double v) { return v == 0.0 ? 0.0 : v; }

// Truth-table file: {"n": <int>, "hex": "..."} with the bit packing
// documented in boolfun.hpp.
ojson truthtable_to_json(const BooleanFunction& f);
BooleanFunction truthtable_from_json(const nlohmann::json& j);
BooleanFunction load_function_file(const std::string& path);

// {"n","m","kind","normalized","values":[[re,im],...]} ordered by idx(omega).
ojson spectrum_to_json(const Spectrum& s);
std::string spectrum_to_csv(const Spectrum& s);

// {"m","fold","re","im"}
ojson forrelation_to_json(const ForrelationValue& v);

// columns p,dj_once,dj_twice,amp_amp_paper,amp_amp_standard,forr_3q
std::string report_csv_header();
std::string report_csv_row(const SamplingReport& r);
ojson report_to_json(const SamplingReport& r);

// {"qubits":[...], "probs": {"<bitstring>": p, ...}}; probabilities at or
// below 1e-12 are omitted from the map.
ojson distribution_to_json(const sim::MeasurementDistribution& d);
std::string distribution_to_csv(const sim::MeasurementDistribution& d);
ojson counts_to_json(const sim::MeasurementDistribution& d,
                     std::span<const std::uint64_t> counts);

ojson classify_to_json(const ClassifyRecord& rec);

std::string interpretation_case_name(circuits::ShiftInterpretation::Case c);
ojson bent_shift_to_json(const circuits::BentShiftResult& r);

// {"offset": "<bits>", "basis": ["<bits>",...], "verified_count": k, ...}
ojson shift_solution_to_json(const circuits::ShiftSolutionSet& s);
ojson negabent_shift_to_json(const circuits::NegabentShiftResult& r);

ojson error_record(const std::string& category, const std::string& message);

/// Canonical dump used for every artifact: two-space indent plus newline.
std::string dump(const ojson& j);

}  // namespace qspectra::io
