#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "phidim/corpus.hpp"

namespace phidim {

struct CheckFailure {
  std::size_t case_index;
  std::string property;
  std::string detail;
  std::string quiver_text;
  std::size_t k;
};

struct PropertyTally {
  std::size_t checked = 0;
  std::size_t failed = 0;
};

struct CheckSummary {
  std::size_t cases = 0;
  std::map<std::string, PropertyTally> tallies;
  std::vector<CheckFailure> failures;

  bool passed() const { return failures.empty(); }
  /// Deterministic plain-text report.
  std::string render() const;
};

/// Runs every cross-check over the seeded corpus, fanning cases out to
/// `workers` threads (0 = hardware concurrency). Results do not depend on
/// the worker count.
CheckSummary run_check_suite(const CorpusConfig& config, unsigned workers = 0);

}  // namespace phidim
