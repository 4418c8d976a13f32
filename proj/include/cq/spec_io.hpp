#pragma once

// JSON spec files and result serialization.
//
// Matrices are arrays of rows; complex entries are [re, im] pairs, plain numbers
// are accepted as real entries. Output numbers use 17 significant digits.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "cq/groups.hpp"
#include "cq/reduction.hpp"
#include "cq/theta.hpp"

namespace cq {

using Json = nlohmann::ordered_json;

Json load_json_file(const std::string& path);
Json parse_json(const std::string& text);

Json to_json(const ComplexMatrix& m);
Json to_json(const RealMatrix& m);
Json to_json(const RealVector& v);
ComplexMatrix complex_matrix_from_json(const Json& j, const std::string& what);
RealMatrix real_matrix_from_json(const Json& j, const std::string& what);
RealVector real_vector_from_json(const Json& j, const std::string& what);

/// {"preset": "S3"} or {"table": [[...]], "labels": [...]}; a bare string is a preset.
GroupPtr group_from_json(const Json& j);
/// {"preset": "regular" | "trivial"}, {"irrep": k} (index into builtin_irreps),
/// or {"matrices": [...]}.
UnitaryRep rep_from_json(const Json& j, const GroupPtr& g);

/// {"group": ..., "U": rep, "rho": rep}, or a scalar module {"gram": matrix}.
struct InductionCase {
  std::optional<GroupPtr> group;
  std::optional<UnitaryRep> u;
  std::optional<UnitaryRep> rho;
  std::optional<ComplexMatrix> gram;
};
InductionCase induction_case_from_json(const Json& j);
/// [matrix, ...] or {"observables": [matrix, ...]}.
std::vector<ComplexMatrix> observables_from_json(const Json& j);

/// Source: "omega" (2n x 2n) or "n" (canonical T*R^n). Momentum map: "J" (k x 2n)
/// with optional "offset", or "directions" (n x k translations).
/// Optional "rho" with the same keys; without it the point realization at "level".
struct ReductionProblem {
  LinearRealization j;
  LinearRealization j_rho;
  bool point_target = true;  // j_rho is the point realization
};
LinearRealization realization_from_json(const Json& j);
ReductionProblem reduction_problem_from_json(const Json& j);

/// {"group": ..., "matrices": [...]}.
ProjectiveRep projective_rep_from_json(const Json& j);

/// 17 significant digits, shortest of %g style; integers print without a point.
std::string format_number(double x);
/// Deterministic pretty printer (2-space indent, key order preserved).
std::string dump_json(const Json& j);
void write_text_file(const std::string& path, const std::string& text);

/// RFC-4180-ish CSV: header + rows, numbers already formatted by the caller.
std::string to_csv(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows);

}  // namespace cq
