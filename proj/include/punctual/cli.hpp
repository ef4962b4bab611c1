#pragma once

#include "punctual/json_io.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace punctual {

/// Exit codes of the command-line front end.
enum ExitCode : int {
  kExitOk = 0,
  kExitParse = 1,
  kExitPrecondition = 2,
  kExitSelftestFailed = 3,
};

/// Command-line overrides; unset fields fall back to the input, then to
/// seed 0 and max_dim 5000.
struct JobOptions {
  std::optional<std::uint64_t> seed;
  int truncation = 0;
  std::optional<std::size_t> max_dim;
};

/// Runs one job. `job` holds "command", "algebra", "payload", "seed" and
/// "max_dim" as produced by normalize_job. Returns the certificate
/// {"operation", "input_hash", "result", "witness"}, with the job echoed in
/// result.input.
Json run_job(const Json& job);

/// Fills in defaults and applies option overrides. Throws ParseError on
/// schema violations.
Json normalize_job(const std::string& command, const Json& input, const JobOptions& options);

/// Re-runs certificate.result.input and compares. CertificateMismatch names
/// the first differing JSON pointer.
void verify_certificate(const Json& certificate);

/// The `punctual` executable: argv parsing, input, dispatch, exit codes.
int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace punctual
