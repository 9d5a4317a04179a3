#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "paqa/dsl.hpp"
#include "paqa/oracle.hpp"

namespace paqa {

inline constexpr const char* kToolVersion = "1.0.0";

enum ExitCode : int { kExitOk = 0, kExitInputError = 1, kExitDisagreement = 2 };

struct RunOptions {
  bool json = false;
  std::size_t max_degree = kDefaultMaxDegree;
  std::string graph = "gen";  // gen | gen-perp | rel
  /// center: also solve for the center by elimination and compare.
  bool verify = false;
};

struct RunResult {
  int exit_code = kExitOk;
  std::string out;
  std::string err;
};

const std::vector<std::string>& commands();

/// Runs one command on a parsed document. Never throws; errors become exit codes.
RunResult run(const std::string& command, const SpecDocument& doc, const RunOptions& options);

/// "a^2*b"; runs of one arrow are collapsed into a power.
std::string format_monomial(const Quiver& q, const Word& w);
/// "a*b - b*a"
std::string format_lincomb(const Quiver& q, const LinComb& c);

}  // namespace paqa
