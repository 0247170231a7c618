#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "algdyn/rat.hpp"

namespace algdyn::cli {

struct RunConfig {
  std::string command;
  std::vector<std::string> inputs;
  std::vector<IntVec> n;
  std::uint64_t seed = 0;
  long precision = 128;
  unsigned long index_bound = 120;
  bool json = false;
};

enum ExitCode { kOk = 0, kFailed = 1, kParse = 2, kCertification = 3, kSeparation = 4 };

/// Runs one command, writing the report to `out` and diagnostics to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv into a RunConfig and runs it.
int main(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace algdyn::cli
