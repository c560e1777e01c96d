#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "we/oracle.hpp"

namespace we {

struct SuiteFailure {
  std::string check;
  std::int64_t n = 0;
  std::string detail;
  DiscreteSystem system;
};

struct SuiteReport {
  std::string suite;
  std::size_t systems = 0;
  std::size_t checks = 0;
  std::vector<SuiteFailure> failures;

  bool ok() const { return failures.empty(); }
};

// Finite-n inequalities on random discrete systems: refinement, union letter,
// wandering union, iterate shift and singular reduction, plus a cross-check of
// the word enumerator against the counter.
SuiteReport lemma_suite(std::uint64_t seed, std::size_t systems = 200, std::int64_t n_max = 32);

// Both separated-set inequalities on random metric systems.
SuiteReport sandwich_suite(std::uint64_t seed, std::size_t systems = 50);

std::vector<std::string> suite_names();
SuiteReport run_suite(const std::string& name, std::uint64_t seed, std::size_t systems);

}  // namespace we
