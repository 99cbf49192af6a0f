#pragma once

// The acceptance suite: one function per criterion, each returning a
// deterministic summary (no timings) of what was checked.

#include <cstdint>
#include <string>
#include <vector>

#include "weil/json_io.hpp"

namespace weil {

struct CriterionInfo {
  int id = 0;
  std::string title;
  double time_limit_seconds = 0;
};

/// Criteria 1..10. Criterion 10 (byte-identical reports) needs the CLI and
/// is driven from outside the library.
const std::vector<CriterionInfo>& criteria();

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::size_t checks = 0;
  std::vector<std::string> failures;  // first few only
  Json details;

  Json to_json() const;
};

inline constexpr std::uint64_t kSuiteSeed = 20240611;

/// Runs criterion 1..9. Throws DomainError for other ids.
CriterionResult run_criterion(int id, std::uint64_t seed = kSuiteSeed);

}  // namespace weil
