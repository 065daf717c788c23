// Command dispatch for the plucker command-line tool, separated from argument
// parsing so it can be driven directly.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace plucker::cli {

enum ExitCode : int { kOk = 0, kInputError = 2, kMismatch = 3, kDegenerate = 4 };

struct Request {
  /// report, dual, assumptions, verify, implicitize or render.
  std::string command;
  /// A file path, "-" for standard input, or an inline JSON array.
  std::string polygon_source;
  std::optional<std::uint64_t> seed;
  std::optional<std::int64_t> coeff_bound;
  /// json, text or svg; empty picks svg for render and json otherwise.
  std::string format;
  /// Run the oracle even when the assumptions are not all verified.
  bool advisory = false;
};

struct Response {
  int exit_code = kOk;
  std::string output;
};

/// Never throws for bad input; failures become exit codes and, in JSON
/// format, an {"error": ...} object.
Response run(const Request& request, std::istream& stdin_stream);
Response run(const Request& request);

}  // namespace plucker::cli
