#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace paqa::testing {

struct PropertyConfig {
  std::uint32_t seed = 20240601;
  std::size_t instances = 200;
  std::size_t max_degree = 6;
  std::size_t shorter_path_words = 1000;
};

struct Tally {
  std::size_t checked = 0;
  std::size_t failed = 0;
  std::size_t skipped = 0;
  std::vector<std::string> examples;  // first few failures

  void pass() { ++checked; }
  void fail(std::string example);
  bool ok() const { return failed == 0; }
};

struct PropertyReport {
  std::size_t instances = 0;
  std::size_t commutative = 0;
  std::size_t anticommutative = 0;
  std::size_t hypotheses_held = 0;
  Tally admissibility;    // graph verdict vs long monomials in I
  Tally center;           // theorem basis vs oracle, ungraded and graded
  Tally involution;       // orthogonal(orthogonal(I)) = I
  Tally shorter_path;     // deleting a related letter keeps a word outside I
  Tally square_central;   // a^k central => a (or a^2) central
  Tally oracle_check;     // the oracle-check command never exits 2
  /// The same two checks restricted to quivers without an oriented cycle
  /// through non-loop arrows.
  Tally center_loop_only;
  Tally oracle_check_loop_only;
};

PropertyReport run_property_suite(const PropertyConfig& config);

}  // namespace paqa::testing
