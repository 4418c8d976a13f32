#include "cq/lattice.hpp"

#include <cmath>
#include <numbers>

#include "cq/errors.hpp"

namespace cq {

void validate(const LatticeCircleConfig& c) {
  if (!c.group) throw InputError("lattice configuration has no group");
  if (c.links.empty()) throw InputError("lattice configuration needs at least one link");
  for (int u : c.links)
    if (u < 0 || u >= c.group->order()) throw InputError("link value is not a group element");
}

int holonomy(const LatticeCircleConfig& c) {
  validate(c);
  int h = c.group->identity();
  for (int u : c.links) h = c.group->mul(h, u);
  return h;
}

double holonomy_angle(const std::vector<double>& angles) {
  const double two_pi = 2.0 * std::numbers::pi;
  double s = 0.0;
  for (double a : angles) s += a;
  s = std::fmod(s, two_pi);
  if (s < 0) s += two_pi;
  return s;
}

LatticeCircleConfig gauge_transform(const LatticeCircleConfig& c, const std::vector<int>& gauge) {
  validate(c);
  const auto& g = *c.group;
  const std::size_t n = c.links.size();
  if (gauge.size() != n) throw DimensionMismatch("gauge tuple length differs from the number of links");
  LatticeCircleConfig out{c.group, std::vector<int>(n)};
  for (std::size_t i = 0; i < n; ++i) {
    out.links[i] = g.mul(g.mul(gauge[i], c.links[i]), g.inverse(gauge[(i + 1) % n]));
  }
  return out;
}

std::int64_t configuration_count(const FiniteGroup& g, int links, std::int64_t budget) {
  if (links < 1) throw InputError("number of links must be >= 1");
  std::int64_t total = 1;
  for (int i = 0; i < links; ++i) {
    total *= g.order();
    if (total > budget)
      throw BudgetExceeded("|G|^N exceeds the budget of " + std::to_string(budget) +
                           "; use fewer links or a smaller group");
  }
  return total;
}

std::int64_t config_index(const LatticeCircleConfig& c) {
  validate(c);
  std::int64_t idx = 0;
  for (auto it = c.links.rbegin(); it != c.links.rend(); ++it) idx = idx * c.group->order() + *it;
  return idx;
}

LatticeCircleConfig config_from_index(const GroupPtr& g, int links, std::int64_t index) {
  LatticeCircleConfig c{g, std::vector<int>(static_cast<std::size_t>(links))};
  for (int i = 0; i < links; ++i) {
    c.links[static_cast<std::size_t>(i)] = static_cast<int>(index % g->order());
    index /= g->order();
  }
  return c;
}

bool holonomies_conjugate(const LatticeCircleConfig& a, const LatticeCircleConfig& b) {
  if (a.group != b.group && !a.group->same_table(*b.group)) throw DimensionMismatch("configurations use different groups");
  const auto classes = conjugacy_classes(*a.group);
  return classes.class_of[static_cast<std::size_t>(holonomy(a))] ==
         classes.class_of[static_cast<std::size_t>(holonomy(b))];
}

std::optional<std::vector<int>> find_gauge_transformation(const LatticeCircleConfig& a,
                                                          const LatticeCircleConfig& b,
                                                          std::int64_t budget) {
  validate(a);
  validate(b);
  if (a.size() != b.size()) throw DimensionMismatch("configurations have different numbers of links");
  if (!a.group->same_table(*b.group)) throw DimensionMismatch("configurations use different groups");
  const std::int64_t total = configuration_count(*a.group, a.size(), budget);
  for (std::int64_t k = 0; k < total; ++k) {
    const auto gauge = config_from_index(a.group, a.size(), k).links;
    if (gauge_transform(a, gauge).links == b.links) return gauge;
  }
  return std::nullopt;
}

bool gauge_orbit_invariant(const LatticeCircleConfig& a, const LatticeCircleConfig& b) {
  const bool by_holonomy = holonomies_conjugate(a, b);
  const bool by_search = find_gauge_transformation(a, b).has_value();
  if (by_holonomy != by_search)
    throw ValidationError("gauge_orbit_crosscheck", "holonomy test and exhaustive search disagree");
  return by_search;
}

std::vector<int> gauge_orbit_labels(const GroupPtr& g, int links, std::int64_t budget) {
  const std::int64_t total = configuration_count(*g, links, budget);
  std::vector<int> label(static_cast<std::size_t>(total), -1);
  std::vector<std::vector<int>> gauges;
  gauges.reserve(static_cast<std::size_t>(total));
  for (std::int64_t k = 0; k < total; ++k) gauges.push_back(config_from_index(g, links, k).links);
  int next = 0;
  for (std::int64_t k = 0; k < total; ++k) {
    if (label[static_cast<std::size_t>(k)] >= 0) continue;
    const auto c = config_from_index(g, links, k);
    for (const auto& gauge : gauges) label[static_cast<std::size_t>(config_index(gauge_transform(c, gauge)))] = next;
    ++next;
  }
  return label;
}

}  // namespace cq
