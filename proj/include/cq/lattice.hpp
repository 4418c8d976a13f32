#pragma once

// Link configurations on a circle of N links with values in a finite group.
// Gauge transformations act by (g . U)_i = g_i U_i g_{i+1}^{-1}, indices mod N.

#include <cstdint>
#include <optional>
#include <vector>

#include "cq/groups.hpp"

namespace cq {

struct LatticeCircleConfig {
  GroupPtr group;
  std::vector<int> links;  // U_1, ..., U_N as element indices

  int size() const noexcept { return static_cast<int>(links.size()); }
};

/// Validates N >= 1 and element indices.
void validate(const LatticeCircleConfig& c);

/// Ordered product U_1 U_2 ... U_N.
int holonomy(const LatticeCircleConfig& c);
/// Sum of link angles reduced to [0, 2 pi).
double holonomy_angle(const std::vector<double>& angles);

LatticeCircleConfig gauge_transform(const LatticeCircleConfig& c, const std::vector<int>& gauge);

/// |G|^N, throwing BudgetExceeded above `budget`.
std::int64_t configuration_count(const FiniteGroup& g, int links, std::int64_t budget = 1000000);
/// Mixed-radix index sum_i U_i |G|^i.
std::int64_t config_index(const LatticeCircleConfig& c);
LatticeCircleConfig config_from_index(const GroupPtr& g, int links, std::int64_t index);

/// Holonomies lie in the same conjugacy class.
bool holonomies_conjugate(const LatticeCircleConfig& a, const LatticeCircleConfig& b);
/// Brute force over all |G|^N gauge tuples for one with g . a = b.
std::optional<std::vector<int>> find_gauge_transformation(const LatticeCircleConfig& a,
                                                          const LatticeCircleConfig& b,
                                                          std::int64_t budget = 1000000);
/// Gauge equivalence, decided both by holonomy conjugacy and by exhaustive search.
/// Throws ValidationError("gauge_orbit_crosscheck") if the two disagree.
bool gauge_orbit_invariant(const LatticeCircleConfig& a, const LatticeCircleConfig& b);

/// Orbit label of every configuration (by config_index), found by applying every
/// gauge tuple to each unlabeled configuration. Labels count up from 0.
std::vector<int> gauge_orbit_labels(const GroupPtr& g, int links, std::int64_t budget = 1000000);

}  // namespace cq
