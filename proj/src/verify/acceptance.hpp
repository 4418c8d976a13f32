#pragma once

// Acceptance suite: one check per criterion, each against an independent
// oracle. Shared by `cqkit verify-all` and the acceptance test binary.

#include <cstdint>
#include <string>
#include <vector>

#include "cq/linalg.hpp"
#include "cq/spec_io.hpp"

namespace cq::verify {

struct Options {
  std::uint64_t seed = 20240101;
  /// Scales module tolerances (the CLI's --tol); acceptance thresholds stay fixed.
  double tol_scale = 1.0;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;  // deterministic: no timings
};

/// Criteria 1..10.
std::vector<CriterionResult> run_criteria(const Options& opt);
/// Criterion 11: runs 1..10 twice and compares the rendered reports byte for byte.
CriterionResult determinism(const Options& opt, const std::string& first_report);
/// All eleven, in order.
std::vector<CriterionResult> run_all(const Options& opt);

/// One "PASS|FAIL <id> <name>: <detail>" line per criterion.
std::string render(const std::vector<CriterionResult>& results);
Json to_json(const std::vector<CriterionResult>& results);

}  // namespace cq::verify
