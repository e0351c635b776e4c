#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace evenpoint::cli {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kUsage = 2,
  kBound = 3,
};

struct RunConfig {
  std::uint64_t q = 5;
  std::vector<std::uint32_t> modulus;
  std::string model = "p1";
  std::string f;
  std::uint64_t seed = 0;
  std::string format = "auto";
  std::string output;
};

/// Parses argv, runs one subcommand and returns the process exit code.
int run(int argc, char** argv);

}  // namespace evenpoint::cli
