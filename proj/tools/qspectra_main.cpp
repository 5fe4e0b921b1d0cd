#include <iostream>
#include <string>

#include "qspectra/cli.hpp"

namespace {

const char* kUsage = R"(qspectra: generalized Boolean-function spectra and circuit simulation

usage: qspectra <command> [flags]

commands:
  spectrum         m-Hadamard transform of a function
  corr             m-crosscorrelation / m-autocorrelation spectrum
  forrelation      closed-form (m-)Forrelation or sampling report
  dj               generalized Deutsch-Jozsa circuit distribution
  simulate         3-query / 2-query m-Forrelation circuits
  sample-spectrum  full-spectrum correlation sampler (2n qubits)
  hidden-shift     bent / negabent hidden-shift recovery
  classify         bent / negabent / m-bent classification
  curves           sampling-probability comparison curves

function specs: anf:<expr>@<n> | hex:<digits>@<n> | file:<path>
common flags: --m <int> --format json|csv --out <path|-> (see README)
)";

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2 || std::string(argv[1]) == "--help" || std::string(argv[1]) == "-h") {
        std::cout << kUsage;
        return argc < 2 ? 2 : 0;
    }
    return qspectra::cli::main_entry(argc, argv);
}
