#include "cq/gauge_circle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

#include "cq/errors.hpp"

namespace cq {

LatticeGaugeModel LatticeGaugeModel::finite(GroupPtr g, int links, bool based) {
  LatticeGaugeModel m{std::move(g), links, based, 0};
  validate(m);
  return m;
}

LatticeGaugeModel LatticeGaugeModel::u1(int cutoff, int links, bool based) {
  LatticeGaugeModel m{nullptr, links, based, cutoff};
  validate(m);
  return m;
}

Eigen::Index LatticeGaugeModel::hilbert_dim() const {
  if (is_u1()) {
    Eigen::Index d = 1;
    for (int i = 0; i < links; ++i) d *= 2 * u1_cutoff + 1;
    return d;
  }
  return configuration_count(*group, links);
}

void validate(const LatticeGaugeModel& m) {
  if (m.links < 1) throw InputError("number of links must be >= 1");
  if (m.is_u1() && m.u1_cutoff < 1) throw InputError("U(1) Fourier cutoff must be >= 1");
  const double states = m.is_u1() ? std::pow(2.0 * m.u1_cutoff + 1.0, m.links)
                                  : static_cast<double>(configuration_count(*m.group, m.links));
  if (states > static_cast<double>(kDenseBudget))
    throw BudgetExceeded("unconstrained space has " + std::to_string(static_cast<long long>(states)) +
                         " states, above the dense budget of " + std::to_string(kDenseBudget) +
                         "; use fewer links, a smaller group or a smaller cutoff");
}

std::vector<int> u1_mode(const LatticeGaugeModel& m, Eigen::Index index) {
  const int l = 2 * m.u1_cutoff + 1;
  std::vector<int> k(static_cast<std::size_t>(m.links));
  for (auto& ki : k) {
    ki = static_cast<int>(index % l) - m.u1_cutoff;
    index /= l;
  }
  return k;
}

Eigen::Index u1_index(const LatticeGaugeModel& m, const std::vector<int>& k) {
  const int l = 2 * m.u1_cutoff + 1;
  Eigen::Index idx = 0;
  for (auto it = k.rbegin(); it != k.rend(); ++it) {
    if (std::abs(*it) > m.u1_cutoff) return -1;
    idx = idx * l + (*it + m.u1_cutoff);
  }
  return idx;
}

namespace {

int gauge_factor_order(const LatticeGaugeModel& m) {
  return m.is_u1() ? 2 * m.u1_cutoff + 1 : m.group->order();
}

int free_links(const LatticeGaugeModel& m) { return m.based ? m.links - 1 : m.links; }

int gauge_order(const LatticeGaugeModel& m) {
  int n = 1;
  for (int i = 0; i < free_links(m); ++i) n *= gauge_factor_order(m);
  return n;
}

double real_character(const UnitaryRep& rho, int x) { return rho(x).trace().real(); }

}  // namespace

GroupPtr gauge_group(const LatticeGaugeModel& m) {
  validate(m);
  const FiniteGroup factor = m.is_u1() ? FiniteGroup::cyclic(gauge_factor_order(m)) : *m.group;
  const int k = free_links(m);
  if (k == 0) return std::make_shared<const FiniteGroup>(FiniteGroup::cyclic(1));
  FiniteGroup g = factor;
  for (int i = 1; i < k; ++i) g = FiniteGroup::direct_product(g, factor);
  return std::make_shared<const FiniteGroup>(std::move(g));
}

std::vector<int> gauge_tuple(const LatticeGaugeModel& m, int element) {
  const int q = gauge_factor_order(m);
  const int k = free_links(m);
  std::vector<int> t(static_cast<std::size_t>(m.links), m.is_u1() ? 0 : m.group->identity());
  for (int i = m.links - 1; i >= m.links - k; --i) {
    t[static_cast<std::size_t>(i)] = element % q;
    element /= q;
  }
  return t;
}

std::vector<Eigen::Index> gauge_permutation(const LatticeGaugeModel& m, const std::vector<int>& gauge) {
  if (m.is_u1()) throw InputError("U(1) gauge transformations act by phases, not permutations");
  const auto n = static_cast<std::int64_t>(m.hilbert_dim());
  std::vector<Eigen::Index> image(static_cast<std::size_t>(n));
  for (std::int64_t c = 0; c < n; ++c)
    image[static_cast<std::size_t>(c)] = config_index(gauge_transform(config_from_index(m.group, m.links, c), gauge));
  return image;
}

ComplexVector u1_gauge_phases(const LatticeGaugeModel& m, const std::vector<int>& gauge) {
  if (!m.is_u1()) throw InputError("phases are defined for the U(1) model only");
  if (static_cast<int>(gauge.size()) != m.links) throw DimensionMismatch("gauge tuple length differs from the number of links");
  const int l = gauge_factor_order(m);
  const Eigen::Index n = m.hilbert_dim();
  ComplexVector out(n);
  for (Eigen::Index idx = 0; idx < n; ++idx) {
    const auto k = u1_mode(m, idx);
    long long phase = 0;
    for (int i = 0; i < m.links; ++i) {
      const int prev = k[static_cast<std::size_t>((i + m.links - 1) % m.links)];
      phase += static_cast<long long>(gauge[static_cast<std::size_t>(i)]) * (k[static_cast<std::size_t>(i)] - prev);
    }
    phase = ((phase % l) + l) % l;
    const double angle = -2.0 * std::numbers::pi * static_cast<double>(phase) / l;
    out(idx) = std::polar(1.0, angle);
  }
  return out;
}

UnitaryRep gauge_representation(const LatticeGaugeModel& m) {
  const auto gamma = gauge_group(m);
  const Eigen::Index n = m.hilbert_dim();
  if (static_cast<double>(gamma->order()) * static_cast<double>(n) * static_cast<double>(n) > 1e7)
    throw BudgetExceeded("dense gauge representation exceeds 1e7 entries; use gauge_projector instead");
  std::vector<ComplexMatrix> mats;
  mats.reserve(static_cast<std::size_t>(gamma->order()));
  for (int x = 0; x < gamma->order(); ++x) {
    const auto t = gauge_tuple(m, x);
    if (m.is_u1()) {
      mats.emplace_back(u1_gauge_phases(m, t).asDiagonal());
    } else {
      ComplexMatrix u = ComplexMatrix::Zero(n, n);
      const auto image = gauge_permutation(m, t);
      for (Eigen::Index c = 0; c < n; ++c) u(image[static_cast<std::size_t>(c)], c) = 1.0;
      mats.push_back(std::move(u));
    }
  }
  return UnitaryRep(gamma, std::move(mats));
}

HermitianOperator gauge_projector(const LatticeGaugeModel& m) {
  validate(m);
  const Eigen::Index n = m.hilbert_dim();
  const int order = gauge_order(m);
  const double w = 1.0 / order;
  ComplexMatrix p = ComplexMatrix::Zero(n, n);
  for (int x = 0; x < order; ++x) {
    const auto t = gauge_tuple(m, x);
    if (m.is_u1()) {
      p.diagonal() += w * u1_gauge_phases(m, t);
    } else {
      const auto image = gauge_permutation(m, t);
      for (Eigen::Index c = 0; c < n; ++c) p(image[static_cast<std::size_t>(c)], c) += w;
    }
  }
  return HermitianOperator(p, 1e-12);
}

namespace {

// Reference vectors: normalized indicators of holonomy fibers.
void build_reference(PhysicalSpace& s) {
  const auto& m = s.model;
  const Eigen::Index n = m.hilbert_dim();
  if (m.is_u1()) {
    const int k_max = m.u1_cutoff;
    s.reference_vectors = ComplexMatrix::Zero(n, 2 * k_max + 1);
    for (int k = -k_max; k <= k_max; ++k) {
      s.reference_vectors(u1_index(m, std::vector<int>(static_cast<std::size_t>(m.links), k)), k + k_max) = 1.0;
      s.reference_labels.push_back("k=" + std::to_string(k));
    }
    return;
  }
  const auto& g = *m.group;
  const auto classes = conjugacy_classes(g);
  const int d = m.based ? g.order() : classes.count();
  std::vector<int> column(static_cast<std::size_t>(g.order()));
  for (int x = 0; x < g.order(); ++x)
    column[static_cast<std::size_t>(x)] = m.based ? x : classes.class_of[static_cast<std::size_t>(x)];
  s.reference_vectors = ComplexMatrix::Zero(n, d);
  for (Eigen::Index c = 0; c < n; ++c)
    s.reference_vectors(c, column[static_cast<std::size_t>(holonomy(config_from_index(m.group, m.links, c)))]) = 1.0;
  for (Eigen::Index j = 0; j < d; ++j) s.reference_vectors.col(j).normalize();
  for (int j = 0; j < d; ++j)
    s.reference_labels.push_back(g.label(m.based ? j : classes.representatives[static_cast<std::size_t>(j)]));
}

double unitarity_residual(const ComplexMatrix& t) {
  const ComplexMatrix a = t.adjoint() * t - ComplexMatrix::Identity(t.cols(), t.cols());
  const ComplexMatrix b = t * t.adjoint() - ComplexMatrix::Identity(t.rows(), t.rows());
  return std::max(a.cwiseAbs().maxCoeff(), b.cwiseAbs().maxCoeff());
}

}  // namespace

PhysicalSpace physical_space(const LatticeGaugeModel& m, const Tolerances& tol) {
  const HermitianOperator p = gauge_projector(m);
  PhysicalSpace s{m, induce_from_gram(p, m.hilbert_dim(), 1, tol), {}, {}, {}};
  s.projector_residual = (p.matrix() * p.matrix() - p.matrix()).norm();
  build_reference(s);
  if (s.reference_vectors.cols() != s.induction.induced_dim)
    throw ValidationError("physical_dimension", "induced dimension " + std::to_string(s.induction.induced_dim) +
                                                    " differs from the reference model dimension " +
                                                    std::to_string(s.reference_vectors.cols()));
  s.intertwiner = s.reference_vectors.adjoint() * s.induction.v.adjoint();
  s.intertwiner_residual = unitarity_residual(s.intertwiner);
  if (s.intertwiner_residual > 1e-9)
    throw ValidationError("intertwiner_unitary", "intertwiner to the reference model is not unitary");
  return s;
}

std::vector<int> electric_generators(const FiniteGroup& g) {
  std::set<int> s;
  for (int x : g.generators()) {
    for (int y = 0; y < g.order(); ++y) {
      s.insert(g.conjugate(y, x));
      s.insert(g.conjugate(y, g.inverse(x)));
    }
  }
  s.erase(g.identity());
  return {s.begin(), s.end()};
}

namespace {

UnitaryRep wilson_irrep(const GroupPtr& g, int label) {
  auto irreps = builtin_irreps(g);
  if (label < 0 || label >= static_cast<int>(irreps.size()))
    throw InputError("Wilson loop label " + std::to_string(label) + " is not a built-in irrep of " + g->name() +
                     " (0.." + std::to_string(irreps.size() - 1) + ")");
  return irreps[static_cast<std::size_t>(label)];
}

// Group Laplacian (L f)(h) = sum_s f(h) - f(s^-1 h) on functions of G.
ComplexMatrix group_laplacian(const FiniteGroup& g) {
  const auto s = electric_generators(g);
  ComplexMatrix l = ComplexMatrix::Zero(g.order(), g.order());
  for (int h = 0; h < g.order(); ++h) {
    l(h, h) += static_cast<double>(s.size());
    for (int x : s) l(h, g.mul(g.inverse(x), h)) -= 1.0;
  }
  return l;
}

}  // namespace

ComplexMatrix unconstrained_observable(const LatticeGaugeModel& m, const Observable& obs) {
  validate(m);
  const Eigen::Index n = m.hilbert_dim();
  ComplexMatrix a = ComplexMatrix::Zero(n, n);
  if (m.is_u1()) {
    for (Eigen::Index idx = 0; idx < n; ++idx) {
      const auto k = u1_mode(m, idx);
      if (obs.kind == ObservableKind::electric) {
        double e = 0.0;
        for (int ki : k) e += static_cast<double>(ki) * ki;
        a(idx, idx) = e;
      } else {
        for (int sign : {1, -1}) {
          auto shifted = k;
          for (auto& ki : shifted) ki += sign * obs.label;
          const Eigen::Index j = u1_index(m, shifted);
          if (j >= 0) a(j, idx) += 0.5;
        }
      }
    }
    return a;
  }
  const auto& g = *m.group;
  if (obs.kind == ObservableKind::wilson) {
    const auto rho = wilson_irrep(m.group, obs.label);
    for (Eigen::Index c = 0; c < n; ++c) a(c, c) = real_character(rho, holonomy(config_from_index(m.group, m.links, c)));
    return a;
  }
  const auto s = electric_generators(g);
  for (Eigen::Index c = 0; c < n; ++c) {
    const auto cfg = config_from_index(m.group, m.links, c);
    a(c, c) += static_cast<double>(m.links * s.size());
    for (int i = 0; i < m.links; ++i)
      for (int x : s) {
        auto moved = cfg;
        moved.links[static_cast<std::size_t>(i)] = g.mul(g.inverse(x), cfg.links[static_cast<std::size_t>(i)]);
        a(c, config_index(moved)) -= 1.0;
      }
  }
  return a;
}

ComplexMatrix reference_observable(const LatticeGaugeModel& m, const Observable& obs) {
  validate(m);
  if (m.is_u1()) {
    const int k_max = m.u1_cutoff;
    const int d = 2 * k_max + 1;
    ComplexMatrix a = ComplexMatrix::Zero(d, d);
    for (int k = -k_max; k <= k_max; ++k) {
      if (obs.kind == ObservableKind::electric) {
        a(k + k_max, k + k_max) = static_cast<double>(m.links) * k * k;
      } else {
        for (int sign : {1, -1}) {
          const int j = k + sign * obs.label;
          if (std::abs(j) <= k_max) a(j + k_max, k + k_max) += 0.5;
        }
      }
    }
    return a;
  }
  const auto& g = *m.group;
  const auto classes = conjugacy_classes(g);
  // All functions of the holonomy; class functions via the normalized class indicators.
  ComplexMatrix on_group;
  if (obs.kind == ObservableKind::wilson) {
    const auto rho = wilson_irrep(m.group, obs.label);
    on_group = ComplexMatrix::Zero(g.order(), g.order());
    for (int x = 0; x < g.order(); ++x) on_group(x, x) = real_character(rho, x);
  } else {
    on_group = static_cast<double>(m.links) * group_laplacian(g);
  }
  if (m.based) return on_group;
  ComplexMatrix b = ComplexMatrix::Zero(g.order(), classes.count());
  for (int c = 0; c < classes.count(); ++c) {
    const auto& members = classes.members[static_cast<std::size_t>(c)];
    for (int x : members) b(x, c) = 1.0 / std::sqrt(static_cast<double>(members.size()));
  }
  return b.adjoint() * on_group * b;
}

InducedObservable induced_observable(const PhysicalSpace& space, const ComplexMatrix& a, const ComplexMatrix& reference) {
  if (!is_weak_observable_q(a, space.induction.gram))
    throw ValidationError("weak_observable", "observable does not commute with gauge transformations");
  InducedObservable out;
  out.induced = space.induction.induce(a);
  out.reference = reference;
  if (reference.rows() != space.intertwiner.rows())
    throw DimensionMismatch("reference observable does not act on the reference model");
  out.spectrum = eigenvalues(HermitianOperator(out.induced.matrix, 1e-9));
  out.reference_spectrum = eigenvalues(HermitianOperator(reference, 1e-9));
  out.intertwiner_residual = (space.intertwiner * out.induced.matrix - reference * space.intertwiner).norm();
  return out;
}

InducedObservable induced_observable(const PhysicalSpace& space, const Observable& obs) {
  return induced_observable(space, unconstrained_observable(space.model, obs), reference_observable(space.model, obs));
}

}  // namespace cq
