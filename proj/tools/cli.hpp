#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "oblique/optimize.hpp"

namespace oblique::cli {

enum ExitCode : int {
  kOk = 0,
  kVerifyFailed = 1,
  kUsage = 2,
  kQuadrature = 3,
  kSolver = 4,
  kIo = 5,
};

enum class Format { json, csv, text };

struct OutputOptions {
  Format format = Format::text;
  int digits = 17;  // significant digits shown; computation is unaffected
};

// One output record: {body, a, b, measures: {...}, provenance} and friends.
// Key order is preserved and fixes the CSV column order.
using Record = nlohmann::ordered_json;

/// `digits` significant digits, '.' as decimal point whatever the locale.
std::string format_number(double x, int digits = 17);

/// Nested keys joined with '_'; the "measures" level is dropped.
std::vector<std::pair<std::string, Record>> flatten(const Record& r);

void write_records(std::ostream& out, const std::vector<Record>& records,
                   const OutputOptions& opt);

Record measures_record(std::string_view body, double a, double b);
Record split_record(double a, double b);
Record solve_record(Problem p);
Record constants_record();

struct SweepSpec {
  std::string body;
  double a_lo = 0.0, a_hi = 0.0;
  double b_lo = 1.0, b_hi = 1.0;
  int steps = 1;
};

/// Grid records in a-major order. Throws DomainError on invalid ranges.
std::vector<Record> sweep_records(const SweepSpec& spec);

struct VerifyCheck {
  std::string suite;
  std::string name;
  double a = 0.0;
  double b = 0.0;
  double error = 0.0;
  double limit = 0.0;
  bool pass = false;
};

/// Closed forms against the oracles. Deterministic in (suite, tol, seed).
/// `tol` replaces the relative threshold of the closed-form-vs-quadrature
/// checks (default 1e-10); Monte Carlo checks always use 3 standard errors.
std::vector<VerifyCheck> run_verify(std::string_view suite, std::optional<double> tol,
                                    std::uint64_t seed);

void write_verify_report(std::ostream& out, std::string_view suite, std::uint64_t seed,
                         const std::vector<VerifyCheck>& checks, const OutputOptions& opt);

/// Entry point shared by the binary and the tests.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace oblique::cli
