#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace polycone::cli {

enum ExitCode { kOk = 0, kInternal = 1, kInputError = 2, kCapExceeded = 3 };

struct Outcome {
  int exit_code = kOk;
  std::string out;        // what the tool prints on stdout
  std::string err;        // what the tool prints on stderr
  nlohmann::json report;  // full report (null on errors)

  // The part of the report that must be byte-identical across runs.
  std::string canonical() const;
};

// Runs one command line (without the program name) in-process.
Outcome run(const std::vector<std::string>& args);

}  // namespace polycone::cli
