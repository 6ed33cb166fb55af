#pragma once

#include "smt/io.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace smt::cli {

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kInputError = 2, kCapExceeded = 3 };

struct Outcome {
  json document;
  bool verified = true;
};

/// Throws InputError unless params match the subcommand's schema.
void validate_parameters(const std::string& subcommand, const json& params);
/// Validated execution of one job.
Outcome execute(const std::string& subcommand, const json& params);
/// JobSpec document: {"subcommand": ..., "parameters": {...}}.
Outcome execute_job(const json& job);

/// Reference examples as a list of named checks.
Outcome selftest(std::uint64_t seed);

/// Full command line; argv[0] is the program name.
int run(const std::vector<std::string>& argv, std::ostream& out);

}  // namespace smt::cli
