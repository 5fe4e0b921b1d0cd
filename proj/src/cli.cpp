#include "qspectra/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "qspectra/circuits.hpp"
#include "qspectra/forrelation.hpp"
#include "qspectra/io.hpp"
#include "qspectra/spectra.hpp"

namespace qspectra::cli {

namespace {

const std::vector<std::string> kCommands = {
    "spectrum", "corr", "forrelation", "dj", "simulate",
    "sample-spectrum", "hidden-shift", "classify", "curves"};

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : text) {
        if (ch == sep) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    parts.push_back(cur);
    return parts;
}

int parse_int(const std::string& text, const std::string& what) {
    try {
        std::size_t used = 0;
        const int v = std::stoi(text, &used);
        if (used != text.size()) throw std::invalid_argument(text);
        return v;
    } catch (const std::exception&) {
        fail("parse", "invalid " + what + ": '" + text + "'");
    }
}

std::uint32_t parse_hex_point(const std::string& text, int n) {
    if (text.empty() || text.size() > 8) fail("parse", "invalid hex point '" + text + "'");
    std::uint32_t v = 0;
    for (char ch : text) {
        v <<= 4;
        if (ch >= '0' && ch <= '9')
            v |= static_cast<std::uint32_t>(ch - '0');
        else if (ch >= 'a' && ch <= 'f')
            v |= static_cast<std::uint32_t>(ch - 'a' + 10);
        else if (ch >= 'A' && ch <= 'F')
            v |= static_cast<std::uint32_t>(ch - 'A' + 10);
        else
            fail("parse", "invalid hex point '" + text + "'");
    }
    if (v >= (std::uint32_t(1) << n))
        fail("index_range", "point 0x" + text + " outside F_2^" + std::to_string(n));
    return v;
}

// anf:/hex: specs are normalized to their space-free canonical form;
// file: paths pass through untouched
std::string strip_spaces(const std::string& text) {
    if (text.rfind("file:", 0) == 0) return text;
    std::string out;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) out += ch;
    return out;
}

}  // namespace

BooleanFunction parse_function_spec(const std::string& text) {
    const auto at = text.find(':');
    if (at == std::string::npos)
        fail("parse", "function spec '" + text + "' must be anf:…@n, hex:…@n or file:path");
    const std::string scheme = text.substr(0, at);
    const std::string rest = text.substr(at + 1);
    if (scheme == "file") {
        if (rest.empty()) fail("parse", "empty path in function spec '" + text + "'");
        return io::load_function_file(rest);
    }
    const auto sep = rest.rfind('@');
    if (sep == std::string::npos)
        fail("parse", "function spec '" + text + "' is missing the @n arity suffix");
    const int n = parse_int(rest.substr(sep + 1), "arity in '" + text + "'");
    const std::string body = rest.substr(0, sep);
    if (scheme == "anf") return from_anf(n, body);
    if (scheme == "hex") return from_hex(n, body);
    fail("parse", "unknown function spec scheme '" + scheme + "'");
}

CommandRequest parse_request(const std::vector<std::string>& tokens) {
    if (tokens.empty()) fail("usage", "missing command");
    CommandRequest req;
    req.command = tokens[0];
    if (std::find(kCommands.begin(), kCommands.end(), req.command) == kCommands.end())
        fail("usage", "unknown command '" + req.command + "'");

    std::size_t i = 1;
    const auto value = [&](const std::string& flag) -> std::string {
        if (i + 1 >= tokens.size()) fail("usage", "flag " + flag + " needs a value");
        return tokens[++i];
    };
    for (; i < tokens.size(); ++i) {
        const std::string& t = tokens[i];
        if (t == "--f") req.f = strip_spaces(value(t));
        else if (t == "--g") req.g = strip_spaces(value(t));
        else if (t == "--f1") req.f1 = strip_spaces(value(t));
        else if (t == "--f2") req.f2 = strip_spaces(value(t));
        else if (t == "--f3") req.f3 = strip_spaces(value(t));
        else if (t == "--fs") {
            for (std::string& s : split(strip_spaces(value(t)), ',')) req.fs.push_back(std::move(s));
        } else if (t == "--m") req.m = parse_int(value(t), "--m");
        else if (t == "--m-list") {
            for (const std::string& s : split(value(t), ',')) req.m_list.push_back(parse_int(s, "--m-list"));
        } else if (t == "--y") req.y = value(t);
        else if (t == "--S") {
            for (std::string& s : split(value(t), ',')) req.s_points.push_back(std::move(s));
        } else if (t == "--plan") req.plan = value(t);
        else if (t == "--circuit") req.circuit = value(t);
        else if (t == "--prep") req.prep = value(t);
        else if (t == "--mode") req.mode = value(t);
        else if (t == "--shots") {
            try {
                req.shots = std::stoll(value(t));
            } catch (const std::exception&) {
                fail("parse", "invalid --shots");
            }
        } else if (t == "--seed") {
            try {
                req.seed = std::stoull(value(t));
            } catch (const std::exception&) {
                fail("parse", "invalid --seed");
            }
        } else if (t == "--grid") req.grid = parse_int(value(t), "--grid");
        else if (t == "--svg") req.svg = value(t);
        else if (t == "--conjugate") req.conjugate = true;
        else if (t == "--direct") req.direct = true;
        else if (t == "--format") req.format = value(t);
        else if (t == "--out") req.out = value(t);
        else fail("usage", "unknown flag '" + t + "'");
    }
    if (req.format && *req.format != "json" && *req.format != "csv")
        fail("usage", "--format must be json or csv");
    return req;
}

std::vector<std::string> to_canonical_tokens(const CommandRequest& req) {
    std::vector<std::string> t{req.command};
    const auto add = [&](const char* flag, const std::string& v) {
        t.emplace_back(flag);
        t.push_back(v);
    };
    if (req.f) add("--f", *req.f);
    if (req.g) add("--g", *req.g);
    if (req.f1) add("--f1", *req.f1);
    if (req.f2) add("--f2", *req.f2);
    if (req.f3) add("--f3", *req.f3);
    if (!req.fs.empty()) {
        std::string joined;
        for (std::size_t i = 0; i < req.fs.size(); ++i) joined += (i ? "," : "") + req.fs[i];
        add("--fs", joined);
    }
    if (req.m) add("--m", std::to_string(*req.m));
    if (!req.m_list.empty()) {
        std::string joined;
        for (std::size_t i = 0; i < req.m_list.size(); ++i)
            joined += (i ? "," : "") + std::to_string(req.m_list[i]);
        add("--m-list", joined);
    }
    if (req.y) add("--y", *req.y);
    if (!req.s_points.empty()) {
        std::string joined;
        for (std::size_t i = 0; i < req.s_points.size(); ++i) joined += (i ? "," : "") + req.s_points[i];
        add("--S", joined);
    }
    if (req.plan) add("--plan", *req.plan);
    if (req.circuit) add("--circuit", *req.circuit);
    if (req.prep) add("--prep", *req.prep);
    if (req.mode) add("--mode", *req.mode);
    if (req.shots) add("--shots", std::to_string(*req.shots));
    if (req.seed) add("--seed", std::to_string(*req.seed));
    if (req.grid) add("--grid", std::to_string(*req.grid));
    if (req.svg) add("--svg", *req.svg);
    if (req.conjugate) t.emplace_back("--conjugate");
    if (req.direct) t.emplace_back("--direct");
    if (req.format) add("--format", *req.format);
    add("--out", req.out);
    return t;
}

std::string to_canonical(const CommandRequest& req) {
    std::string s;
    for (const std::string& t : to_canonical_tokens(req)) {
        if (!s.empty()) s += ' ';
        s += t;
    }
    return s;
}

namespace {

std::string effective_format(const CommandRequest& req) {
    if (req.format) return *req.format;
    return req.command == "curves" ? "csv" : "json";
}

void write_artifact(const CommandRequest& req, const std::string& payload) {
    if (req.out == "-") {
        std::cout << payload;
        return;
    }
    std::filesystem::path path(req.out);
    if (path.is_relative()) {
        if (const char* dir = std::getenv("QSPECTRA_OUT_DIR"); dir && *dir)
            path = std::filesystem::path(dir) / path;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) fail("io", "cannot write '" + path.string() + "'");
    out << payload;
}

const std::string& require(const std::optional<std::string>& v, const char* flag) {
    if (!v) fail("usage", std::string("missing required flag ") + flag);
    return *v;
}

int require_m(const CommandRequest& req) {
    if (!req.m) fail("usage", "missing required flag --m");
    if (*req.m < 1) fail("usage", "--m must be >= 1");
    return *req.m;
}

PointSet parse_point_list(const std::vector<std::string>& hexes, int n) {
    std::vector<std::uint32_t> pts;
    pts.reserve(hexes.size());
    for (const std::string& h : hexes) pts.push_back(parse_hex_point(h, n));
    return make_point_set(n, std::move(pts));
}

// minimal line plot: fixed viewport, one polyline per series
std::string curves_svg(const std::vector<SamplingReport>& rows) {
    const double w = 640, h = 480, ml = 60, mr = 20, mt = 20, mb = 45;
    const double px = w - ml - mr, py = h - mt - mb;
    const double ymin = -1.0, ymax = 1.0;
    const auto xmap = [&](double p) { return ml + p * px; };
    const auto ymap = [&](double v) { return mt + (ymax - v) / (ymax - ymin) * py; };
    struct Series {
        const char* name;
        const char* color;
        double SamplingReport::* field;
    };
    const Series series[] = {
        {"dj_once", "#1f77b4", &SamplingReport::dj_once},
        {"dj_twice", "#ff7f0e", &SamplingReport::dj_twice},
        {"amp_amp_paper", "#2ca02c", &SamplingReport::amp_amp_paper},
        {"amp_amp_standard", "#d62728", &SamplingReport::amp_amp_standard},
        {"forr_3q", "#9467bd", &SamplingReport::forr_3q},
    };
    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
        << "\" viewBox=\"0 0 " << w << " " << h << "\">\n";
    svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    for (double v : {-1.0, -0.5, 0.0, 0.5, 1.0}) {
        svg << "<line x1=\"" << xmap(0) << "\" y1=\"" << ymap(v) << "\" x2=\"" << xmap(1)
            << "\" y2=\"" << ymap(v) << "\" stroke=\"#dddddd\"/>\n";
        svg << "<text x=\"" << ml - 8 << "\" y=\"" << ymap(v) + 4
            << "\" font-size=\"12\" text-anchor=\"end\">" << io::format_double(v) << "</text>\n";
    }
    for (double p : {0.0, 0.25, 0.5, 0.75, 1.0}) {
        svg << "<text x=\"" << xmap(p) << "\" y=\"" << h - mb + 18
            << "\" font-size=\"12\" text-anchor=\"middle\">" << io::format_double(p) << "</text>\n";
    }
    svg << "<text x=\"" << ml + px / 2 << "\" y=\"" << h - 8
        << "\" font-size=\"13\" text-anchor=\"middle\">p</text>\n";
    int legend_y = static_cast<int>(mt) + 10;
    for (const Series& s : series) {
        svg << "<polyline fill=\"none\" stroke=\"" << s.color << "\" stroke-width=\"1.5\" points=\"";
        for (const SamplingReport& r : rows)
            svg << xmap(r.p) << "," << ymap(std::clamp(r.*(s.field), ymin, ymax)) << " ";
        svg << "\"/>\n";
        svg << "<line x1=\"" << ml + 10 << "\" y1=\"" << legend_y << "\" x2=\"" << ml + 34
            << "\" y2=\"" << legend_y << "\" stroke=\"" << s.color << "\" stroke-width=\"2\"/>\n";
        svg << "<text x=\"" << ml + 40 << "\" y=\"" << legend_y + 4 << "\" font-size=\"12\">"
            << s.name << "</text>\n";
        legend_y += 16;
    }
    svg << "</svg>\n";
    return svg.str();
}

int run_spectrum(const CommandRequest& req) {
    const BooleanFunction f = parse_function_spec(require(req.f, "--f"));
    const Spectrum s = m_hadamard(f, PhaseOrder(require_m(req)), req.conjugate);
    write_artifact(req, effective_format(req) == "csv" ? io::spectrum_to_csv(s)
                                                       : io::dump(io::spectrum_to_json(s)));
    return 0;
}

int run_corr(const CommandRequest& req) {
    const BooleanFunction f = parse_function_spec(require(req.f, "--f"));
    const BooleanFunction g = req.g ? parse_function_spec(*req.g) : f;
    const PhaseOrder m(require_m(req));
    const Spectrum s = req.direct ? m_crosscorrelation(f, g, m) : crosscorr_via_spectra(f, g, m);
    if (req.y) {
        const std::uint32_t y = parse_hex_point(*req.y, f.n);
        io::ojson j;
        j["n"] = s.n;
        j["m"] = s.m;
        j["kind"] = to_string(s.kind);
        j["y"] = bit_string(y, f.n);
        j["re"] = io::normalize_zero(s.values[y].real());
        j["im"] = io::normalize_zero(s.values[y].imag());
        write_artifact(req, io::dump(j));
        return 0;
    }
    write_artifact(req, effective_format(req) == "csv" ? io::spectrum_to_csv(s)
                                                       : io::dump(io::spectrum_to_json(s)));
    return 0;
}

int run_forrelation(const CommandRequest& req) {
    if (!req.s_points.empty()) {
        // sampling-report mode over the point set S
        const BooleanFunction f = parse_function_spec(require(req.f, "--f"));
        const PointSet s = parse_point_list(req.s_points, f.n);
        const SamplingReport rep = sampling_report(f, s, PhaseOrder(require_m(req)));
        write_artifact(req, effective_format(req) == "csv"
                                ? io::report_csv_header() + io::report_csv_row(rep)
                                : io::dump(io::report_to_json(rep)));
        return 0;
    }
    if (!req.fs.empty()) {
        std::vector<BooleanFunction> chain;
        chain.reserve(req.fs.size());
        for (const std::string& spec : req.fs) chain.push_back(parse_function_spec(spec));
        write_artifact(req, io::dump(io::forrelation_to_json(forrelation_k(chain))));
        return 0;
    }
    const BooleanFunction f1 = parse_function_spec(require(req.f1, "--f1"));
    const BooleanFunction f2 = parse_function_spec(require(req.f2, "--f2"));
    const BooleanFunction f3 = parse_function_spec(require(req.f3, "--f3"));
    const ForrelationValue phi = m_forrelation3(f1, f2, f3, PhaseOrder(require_m(req)));
    write_artifact(req, io::dump(io::forrelation_to_json(phi)));
    return 0;
}

int run_dj(const CommandRequest& req) {
    const BooleanFunction f = parse_function_spec(require(req.f, "--f"));
    circuits::DJPlan plan;
    if (req.plan) {
        for (const std::string& s : split(*req.plan, ','))
            plan.d.push_back(parse_int(s, "--plan"));
    } else {
        plan = circuits::DJPlan::uniform(f.n, require_m(req));
    }
    const auto dist = circuits::run_generalized_dj(f, plan);
    write_artifact(req, effective_format(req) == "csv"
                            ? io::distribution_to_csv(dist)
                            : io::dump(io::distribution_to_json(dist)));
    return 0;
}

int run_simulate(const CommandRequest& req) {
    const std::string circuit = require(req.circuit, "--circuit");
    const BooleanFunction f1 = parse_function_spec(require(req.f1, "--f1"));
    const BooleanFunction f2 = parse_function_spec(require(req.f2, "--f2"));
    const BooleanFunction f3 = parse_function_spec(require(req.f3, "--f3"));
    const PhaseOrder m(require_m(req));
    sim::MeasurementDistribution dist;
    io::ojson extra = io::ojson::object();
    if (circuit == "3q") {
        dist = circuits::run_mforr_3q(f1, f2, f3, m);
    } else if (circuit == "2q") {
        auto r = circuits::run_mforr_2q(f1, f2, f3, m);
        extra["p0_driving"] = r.p0;
        dist = std::move(r.dist);
    } else {
        fail("usage", "--circuit must be 3q or 2q");
    }
    io::ojson j = io::distribution_to_json(dist);
    for (auto& [k, v] : extra.items()) j[k] = v;
    if (req.shots) {
        const std::uint64_t seed = req.seed.value_or(0);
        const auto counts = sim::draw_samples(dist, *req.shots, seed);
        std::vector<std::uint64_t> hist(dist.probs.size(), 0);
        for (std::uint32_t o : counts) ++hist[o];
        j["shots"] = *req.shots;
        j["seed"] = seed;
        j["counts"] = io::counts_to_json(dist, hist);
    }
    write_artifact(req, effective_format(req) == "csv" ? io::distribution_to_csv(dist)
                                                       : io::dump(j));
    return 0;
}

int run_sample_spectrum(const CommandRequest& req) {
    const BooleanFunction f = parse_function_spec(require(req.f, "--f"));
    const BooleanFunction g = req.g ? parse_function_spec(*req.g) : f;
    const std::string prep_text = req.prep.value_or("hadamard");
    circuits::SamplerPrep prep;
    if (prep_text == "hadamard") {
        prep = circuits::SamplerPrep::hadamard();
    } else if (prep_text.rfind("dicke:", 0) == 0) {
        prep = circuits::SamplerPrep::dicke(parse_int(prep_text.substr(6), "--prep dicke weight"));
    } else {
        fail("usage", "--prep must be hadamard or dicke:<k>");
    }
    const auto dist = circuits::run_spectrum_sampler(f, g, PhaseOrder(require_m(req)), prep);
    write_artifact(req, effective_format(req) == "csv"
                            ? io::distribution_to_csv(dist)
                            : io::dump(io::distribution_to_json(dist)));
    return 0;
}

int run_hidden_shift(const CommandRequest& req) {
    const std::string mode = require(req.mode, "--mode");
    const BooleanFunction f = parse_function_spec(require(req.f, "--f"));
    const BooleanFunction g = parse_function_spec(require(req.g, "--g"));
    if (mode == "bent") {
        const auto result = circuits::run_bent_shift(f, g);
        write_artifact(req, io::dump(io::bent_shift_to_json(result)));
        return 0;
    }
    if (mode != "negabent") fail("usage", "--mode must be bent or negabent");
    const std::int64_t shots = req.shots.value_or(10 * (f.n + 1));
    const std::uint64_t seed = req.seed.value_or(0);
    const auto result = circuits::run_negabent_shift(f, g, shots, seed);
    write_artifact(req, io::dump(io::negabent_shift_to_json(result)));
    if (req.out != "-") {
        std::size_t ok = 0;
        for (const auto& [u, v] : result.solution.verified)
            if (v) ++ok;
        std::cout << "solution space size " << result.solution.size() << ", verified " << ok
                  << ", offset " << bit_string(result.solution.offset, f.n) << "\n";
    }
    return 0;
}

int run_classify(const CommandRequest& req) {
    const BooleanFunction f = parse_function_spec(require(req.f, "--f"));
    std::vector<int> orders = req.m_list;
    if (orders.empty()) orders = {1, 2, 4};
    const ClassifyRecord rec = classify(f, orders);
    write_artifact(req, io::dump(io::classify_to_json(rec)));
    return 0;
}

int run_curves(const CommandRequest& req) {
    const int grid = req.grid.value_or(101);
    if (grid < 2) fail("usage", "--grid must be >= 2");
    std::vector<SamplingReport> rows;
    rows.reserve(static_cast<std::size_t>(grid));
    for (int i = 0; i < grid; ++i)
        rows.push_back(sampling_curves(static_cast<double>(i) / (grid - 1)));
    if (effective_format(req) == "csv") {
        std::string csv = io::report_csv_header();
        for (const SamplingReport& r : rows) csv += io::report_csv_row(r);
        write_artifact(req, csv);
    } else {
        io::ojson arr = io::ojson::array();
        for (const SamplingReport& r : rows) arr.push_back(io::report_to_json(r));
        write_artifact(req, io::dump(arr));
    }
    if (req.svg) {
        CommandRequest svg_req = req;
        svg_req.out = *req.svg;
        write_artifact(svg_req, curves_svg(rows));
    }
    return 0;
}

}  // namespace

int run_command(const CommandRequest& req) {
    if (req.command == "spectrum") return run_spectrum(req);
    if (req.command == "corr") return run_corr(req);
    if (req.command == "forrelation") return run_forrelation(req);
    if (req.command == "dj") return run_dj(req);
    if (req.command == "simulate") return run_simulate(req);
    if (req.command == "sample-spectrum") return run_sample_spectrum(req);
    if (req.command == "hidden-shift") return run_hidden_shift(req);
    if (req.command == "classify") return run_classify(req);
    if (req.command == "curves") return run_curves(req);
    fail("usage", "unknown command '" + req.command + "'");
}

int main_entry(int argc, const char* const* argv) {
    std::vector<std::string> tokens;
    tokens.reserve(static_cast<std::size_t>(argc > 0 ? argc - 1 : 0));
    for (int i = 1; i < argc; ++i) tokens.emplace_back(argv[i]);
    try {
        const CommandRequest req = parse_request(tokens);
        return run_command(req);
    } catch (const Error& e) {
        std::cout << io::dump(io::error_record(e.category(), e.what()));
        return e.category() == "usage" ? 2 : 1;
    } catch (const std::exception& e) {
        std::cout << io::dump(io::error_record("internal", e.what()));
        return 1;
    }
}

}  // namespace qspectra::cli
