#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qspectra/boolfun.hpp"

namespace qspectra::cli {

/// One CLI invocation. Fields round-trip through the canonical token form
/// (to_canonical / parse_request).
struct CommandRequest {
    std::string command;  // spectrum|corr|forrelation|dj|simulate|sample-spectrum|hidden-shift|classify|curves

    std::optional<std::string> f, g, f1, f2, f3;
    std::vector<std::string> fs;      // forrelation chain
    std::optional<int> m;
    std::vector<int> m_list;          // classify orders
    std::optional<std::string> y;     // hex point
    std::vector<std::string> s_points;  // hex points of S
    std::optional<std::string> plan;  // dj gate orders "1,4,2"
    std::optional<std::string> circuit;  // 3q|2q
    std::optional<std::string> prep;     // hadamard|dicke:<k>
    std::optional<std::string> mode;     // bent|negabent
    std::optional<std::int64_t> shots;
    std::optional<std::uint64_t> seed;
    std::optional<int> grid;
    std::optional<std::string> svg;
    bool conjugate = false;
    bool direct = false;
    std::optional<std::string> format;  // json|csv; default json (curves: csv)
    std::string out = "-";

    bool operator==(const CommandRequest&) const = default;
};

/// Function spec forms: "anf:<expr>@<n>", "hex:<digits>@<n>", "file:<path>".
BooleanFunction parse_function_spec(const std::string& text);

CommandRequest parse_request(const std::vector<std::string>& tokens);
std::vector<std::string> to_canonical_tokens(const CommandRequest& req);
std::string to_canonical(const CommandRequest& req);

/// Executes the request and writes its artifact (file path or stdout).
/// Throws qspectra::Error on failure; the binary maps that to a JSON error
/// record and a nonzero exit code.
int run_command(const CommandRequest& req);

/// argv entry point used by the binary.
int main_entry(int argc, const char* const* argv);

}  // namespace qspectra::cli
