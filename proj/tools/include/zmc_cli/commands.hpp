#pragma once

// The zmc subcommands. Each returns its report; CSV output goes to the
// optional path. Bad parameters surface as std::invalid_argument or
// std::domain_error, which the driver maps to exit code 2.

#include "zmc_cli/report.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace zmc::cli {

enum ExitCode : int { kPass = 0, kFail = 1, kUsage = 2 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct VerifyOptions {
  std::string cls = "A";
  int D = 4;
  std::optional<std::string> n;  // rational text; default is the admissible root != -1
};

struct SampleOptions {
  std::string cls = "A";
  int D = 4;
  double C = 1.0;
  double t = 1.0;
  std::optional<double> t_max;  // t drawn from [t, t_max] when given
  std::size_t count = 1000;
  std::uint64_t seed = 0;
  std::optional<std::string> out;
};

struct SliceOptions {
  double C = 1.0;
  int M = 2;
  double t = 1.0;
  int num = 200;
  std::optional<std::string> out;
};

struct OngOptions {
  double C = 1.0;
  int M = 2;
  double t0 = 0.5;
  double t1 = 3.0;
  std::size_t labels = 32;
  double step = 1e-3;
  double band_lo = 0.45;
  double band_hi = 0.55;
  std::optional<std::string> out;
};

struct HydroOptions {
  int M = 2;
  std::string branch = "minus";
  double alpha = 1.0;
};

Report cmd_verify(const VerifyOptions& o);
Report cmd_sample(const SampleOptions& o);
Report cmd_slice(const SliceOptions& o);
Report cmd_ong(const OngOptions& o);
Report cmd_hydro(const HydroOptions& o);

/// Full driver: parses argv, prints the report to out and errors to err,
/// returns the exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace zmc::cli
