#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "torsionlab/types.hpp"

namespace torsionlab {

// Exit conventions: 0 success, 1 verification or numeric failure,
// 2 usage error, 3 empty solver result.
enum ExitCode : int {
  kExitOk = 0,
  kExitNumericFailure = 1,
  kExitUsage = 2,
  kExitNoRepresentation = 3,
};

struct JobConfig {
  std::string command;  // riley-roots | torsion | surgery | verify | table
  int n = 0;
  std::optional<Complex> s;
  std::optional<int> p;
  std::optional<int> q;
  double tol = 1e-8;
  std::string output = "text";  // json | csv | text
  std::uint64_t seed = 0;
  bool with_oracle = false;               // torsion --verify
  std::string relator;                    // optional relator override
  std::vector<std::string> defines;       // name=word macro definitions
  std::string sweep;                      // table: "start:end:count" for x
  int max_iter = 500;
  int starts = 0;
  int trials = 200;  // verify
  int n_max = 3;     // verify
};

struct JobResult {
  int exit_code = kExitOk;
  std::string output;  // rendered report, ends with newline
};

// Parses "re,im" (a bare "re" means zero imaginary part).
Complex parse_complex_arg(const std::string& text);

// Runs a validated config. Configuration errors (bad n, slope, sweep,
// output mode) return kExitUsage with a message; numeric conditions map
// to the exit conventions above.
JobResult run_job(const JobConfig& config);

}  // namespace torsionlab
