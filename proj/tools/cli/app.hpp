#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "osci/asymcheck.hpp"

namespace osci::cli {

enum class Mode { integrate, table, sweep, oracle };
enum class Format { pretty, csv, json };
enum class Reference { automatic, oracle, ccf };

struct RunConfig {
  Mode mode = Mode::integrate;
  double alpha = 0.0;
  double beta = 0.0;
  double nu = 0.0;
  /// Lists are used by table mode along the varied parameter; other modes
  /// take the first entry.
  std::vector<double> k{0.0};
  std::vector<double> omega{1.0};
  std::vector<int> N{8};
  std::vector<int> s{0};
  std::string f = "one";
  std::string out = "-";
  Format format = Format::pretty;

  asymcheck::SweepVariable vary = asymcheck::SweepVariable::omega;
  Reference reference = Reference::automatic;

  // sweep mode
  asymcheck::Quantity quantity = asymcheck::Quantity::integral_magnitude;
  double lo = 1.0;
  double hi = 1000.0;
  double step = 2.0;
  std::optional<double> exponent;
  int threads = 0;
};

struct HelpRequested {
  std::string text;
};

/// Parses argv into a config. Throws HelpRequested for --help and
/// CLI::ParseError for malformed arguments.
RunConfig parse_args(int argc, const char* const* argv);

/// Runs one configuration and writes the result to `out`.
void run(const RunConfig& cfg, std::ostream& out);

/// Full command-line entry point; returns the process exit status.
///   0 success, 2 usage or expression error, 3 numerical failure, 4 other.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace osci::cli
