#include "cq/theta.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <queue>

#include "cq/errors.hpp"

namespace cq {

namespace {

GroupPtr cyclic_ptr(int m) { return std::make_shared<const FiniteGroup>(FiniteGroup::cyclic(m)); }

Complex root_of_unity(long k, long n) { return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k) / n); }

}  // namespace

void validate(const ThetaSectorProblem& p) {
  if (p.sites_n < 1 || p.gauge_m < 1) throw InputError("theta sectors need N >= 1 and M >= 1");
  if (p.sector < 0 || p.sector >= p.gauge_m) throw InputError("sector label must lie in 0..M-1");
  if (static_cast<long>(p.sites_n) * p.gauge_m > 4096) throw BudgetExceeded("N * M exceeds the dense budget of 4096 sites");
}

UnitaryRep theta_gauge_rep(int sites_n, int gauge_m) {
  const int sites = sites_n * gauge_m;
  std::vector<ComplexMatrix> mats;
  for (int a = 0; a < gauge_m; ++a) {
    ComplexMatrix u = ComplexMatrix::Zero(sites, sites);
    for (int x = 0; x < sites; ++x) u((x + a * sites_n) % sites, x) = 1.0;
    mats.push_back(std::move(u));
  }
  return UnitaryRep(cyclic_ptr(gauge_m), std::move(mats));
}

UnitaryRep theta_character(int gauge_m, int sector) {
  std::vector<ComplexMatrix> mats;
  for (int a = 0; a < gauge_m; ++a)
    mats.push_back(ComplexMatrix::Constant(1, 1, root_of_unity(static_cast<long>(sector) * a % gauge_m, gauge_m)));
  return UnitaryRep(cyclic_ptr(gauge_m), std::move(mats));
}

ComplexMatrix ring_laplacian(int sites) {
  if (sites < 1) throw InputError("ring needs at least one site");
  ComplexMatrix l = ComplexMatrix::Zero(sites, sites);
  for (int x = 0; x < sites; ++x) {
    l(x, x) += 2.0;
    l((x + 1) % sites, x) -= 1.0;
    l((x + sites - 1) % sites, x) -= 1.0;
  }
  return l;
}

RealVector theta_closed_form(const ThetaSectorProblem& p) {
  validate(p);
  const double sites = static_cast<double>(p.sites_n) * p.gauge_m;
  std::vector<double> ev;
  for (int m = 0; m < p.sites_n; ++m)
    ev.push_back(2.0 - 2.0 * std::cos(2.0 * std::numbers::pi * (p.sector + m * p.gauge_m) / sites));
  std::sort(ev.begin(), ev.end());
  return Eigen::Map<RealVector>(ev.data(), static_cast<Eigen::Index>(ev.size()));
}

ThetaSector theta_sector(const ThetaSectorProblem& p, const Tolerances& tol) {
  validate(p);
  auto induction =
      group_average_induction(theta_gauge_rep(p.sites_n, p.gauge_m), theta_character(p.gauge_m, p.sector), tol);
  auto lap = induction.induce(ring_laplacian(p.sites_n * p.gauge_m));
  const RealVector spectrum = eigenvalues(HermitianOperator(lap.matrix, 1e-9));
  return {p, std::move(induction), std::move(lap), spectrum};
}

StagesReport theta_stages_demo(bool sign, int test_observables, std::uint64_t seed) {
  const auto d4 = std::make_shared<const FiniteGroup>(FiniteGroup::preset("D4"));
  const int r = d4->find("r");
  std::vector<int> rotations;
  for (int k = 0; k < 4; ++k) rotations.push_back(d4->power(r, k));
  const auto emb = SubgroupEmbedding::from_elements(d4, rotations);
  const auto q = quotient_group(emb);
  // Z2 quotient: the nontrivial coset gets -1 under the sign character.
  std::vector<ComplexMatrix> theta;
  for (int c = 0; c < q.group->order(); ++c)
    theta.push_back(ComplexMatrix::Constant(1, 1, (sign && c != q.group->identity()) ? -1.0 : 1.0));
  return induction_in_stages(regular_rep(d4), emb, UnitaryRep(q.group, std::move(theta)), test_observables, seed);
}

// ---------------------------------------------------------------------------

ProjectiveRep multiplier_of(GroupPtr g, std::vector<ComplexMatrix> matrices, double tol) {
  if (!g) throw InputError("projective representation needs a group");
  const int n = g->order();
  if (static_cast<int>(matrices.size()) != n) throw DimensionMismatch("one matrix per group element is required");
  const Eigen::Index d = matrices.front().rows();
  for (const auto& u : matrices) {
    if (u.rows() != d || u.cols() != d) throw DimensionMismatch("projective matrices must be square and equal-sized");
    if (!is_unitary(u, tol)) throw ValidationError("unitary", "projective representation matrices must be unitary");
  }
  ProjectiveRep p{g, std::move(matrices), std::vector<Complex>(static_cast<std::size_t>(n * n)), 0.0};
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const ComplexMatrix& uxy = p.matrices[static_cast<std::size_t>(g->mul(x, y))];
      const ComplexMatrix prod = p.matrices[static_cast<std::size_t>(x)] * p.matrices[static_cast<std::size_t>(y)];
      const Complex w = (uxy.adjoint() * prod).trace() / static_cast<double>(d);
      if ((prod - w * uxy).norm() > tol * std::max(1.0, std::sqrt(static_cast<double>(d))))
        throw ValidationError("projective", "U(" + g->label(x) + ")U(" + g->label(y) +
                                                ") is not proportional to U(" + g->label(g->mul(x, y)) + ")");
      p.multiplier[static_cast<std::size_t>(x * n + y)] = w;
    }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        const Complex lhs = p.omega(x, y) * p.omega(g->mul(x, y), z);
        const Complex rhs = p.omega(y, z) * p.omega(x, g->mul(y, z));
        p.cocycle_defect = std::max(p.cocycle_defect, std::abs(lhs - rhs));
      }
  if (p.cocycle_defect > tol) throw ValidationError("cocycle", "multiplier violates the 2-cocycle identity");
  return p;
}

ProjectiveRep pauli_projective_rep() {
  const auto g = std::make_shared<const FiniteGroup>(FiniteGroup::preset("Z2xZ2"));
  // Element index a * 2 + b for (a, b).
  return multiplier_of(g, {ComplexMatrix::Identity(2, 2), pauli_z(), pauli_x(), pauli_x() * pauli_z()});
}

ProjectiveRep twist(const ProjectiveRep& p, const std::vector<Complex>& beta) {
  if (static_cast<int>(beta.size()) != p.group->order()) throw DimensionMismatch("one phase per group element is required");
  std::vector<ComplexMatrix> mats;
  for (int x = 0; x < p.group->order(); ++x) {
    if (std::abs(std::abs(beta[static_cast<std::size_t>(x)]) - 1.0) > 1e-12) throw InputError("twist phases must have modulus one");
    mats.push_back(beta[static_cast<std::size_t>(x)] * p.matrices[static_cast<std::size_t>(x)]);
  }
  return multiplier_of(p.group, std::move(mats));
}

namespace {

constexpr double kPhaseTol = 1e-9;

bool near(Complex a, Complex b) { return std::abs(a - b) <= kPhaseTol; }

// Elements in BFS order from e along the generators, with the (parent, generator)
// edge used to reach each one. Falls back to all elements as generators.
struct Spanning {
  std::vector<int> gens;
  std::vector<int> order;
  std::vector<std::pair<int, int>> parent;  // element -> (parent element, generator slot)
};

Spanning spanning_tree(const FiniteGroup& g) {
  auto attempt = [&](const std::vector<int>& gens) {
    Spanning s{gens, {}, std::vector<std::pair<int, int>>(static_cast<std::size_t>(g.order()), {-1, -1})};
    std::vector<bool> seen(static_cast<std::size_t>(g.order()), false);
    std::queue<int> queue;
    queue.push(g.identity());
    seen[static_cast<std::size_t>(g.identity())] = true;
    while (!queue.empty()) {
      const int x = queue.front();
      queue.pop();
      s.order.push_back(x);
      for (std::size_t k = 0; k < gens.size(); ++k) {
        const int y = g.mul(x, gens[k]);
        if (!seen[static_cast<std::size_t>(y)]) {
          seen[static_cast<std::size_t>(y)] = true;
          s.parent[static_cast<std::size_t>(y)] = {x, static_cast<int>(k)};
          queue.push(y);
        }
      }
    }
    return s;
  };
  Spanning s = attempt(g.generators());
  if (static_cast<int>(s.order.size()) == g.order()) return s;
  std::vector<int> all;
  for (int x = 0; x < g.order(); ++x)
    if (x != g.identity()) all.push_back(x);
  return attempt(all);
}

}  // namespace

AnomalyVerdict is_anomalous(const ProjectiveRep& p, int max_order) {
  const auto& g = *p.group;
  const int n = g.order();
  const int e = g.identity();

  // Normalize so that omega(e, .) = omega(., e) = 1: U(e) = c I, divide every U by c.
  const Complex c = p.omega(e, e);
  std::vector<Complex> w(p.multiplier.size());
  for (std::size_t i = 0; i < w.size(); ++i) w[i] = p.multiplier[i] / c;
  auto omega = [&](int x, int y) { return w[static_cast<std::size_t>(x * n + y)]; };

  AnomalyVerdict v;
  v.root_order = 0;
  for (int r = 1; r <= max_order && v.root_order == 0; ++r) {
    bool ok = true;
    for (const Complex z : w) ok = ok && near(std::pow(z, r), 1.0);
    if (ok) v.root_order = r;
  }
  if (v.root_order == 0)
    throw ValidationError("root_of_unity", "multiplier is not root-of-unity valued of order <= " + std::to_string(max_order));

  // Commuting-pair witness: omega(x,y)/omega(y,x) is invariant under twists.
  for (int x = 0; x < n && !v.witness_pair; ++x)
    for (int y = 0; y < n; ++y)
      if (g.mul(x, y) == g.mul(y, x) && !near(omega(x, y) / omega(y, x), 1.0)) {
        v.witness_pair = std::make_pair(x, y);
        v.witness_value = omega(x, y) / omega(y, x);
        break;
      }

  if (n > 8 || v.root_order > 8) {
    v.exhaustive = false;
    v.anomalous = v.witness_pair.has_value();
    return v;
  }

  // beta(xs) = beta(x) beta(s) / omega(x, s): beta is fixed by its generator values,
  // which range over the (R |G|)-th roots of unity.
  const Spanning tree = spanning_tree(g);
  const long roots = static_cast<long>(v.root_order) * n;
  const std::size_t k = tree.gens.size();
  std::vector<long> digit(k, 0);
  std::vector<Complex> beta(static_cast<std::size_t>(n));
  while (true) {
    beta[static_cast<std::size_t>(e)] = 1.0;
    for (int x : tree.order) {
      if (x == e) continue;
      const auto [par, slot] = tree.parent[static_cast<std::size_t>(x)];
      const int s = tree.gens[static_cast<std::size_t>(slot)];
      beta[static_cast<std::size_t>(x)] =
          beta[static_cast<std::size_t>(par)] * root_of_unity(digit[static_cast<std::size_t>(slot)], roots) / omega(par, s);
    }
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      for (int y = 0; y < n && ok; ++y)
        ok = near(omega(x, y), beta[static_cast<std::size_t>(x)] * beta[static_cast<std::size_t>(y)] /
                                   beta[static_cast<std::size_t>(g.mul(x, y))]);
    if (ok) {
      v.beta = beta;
      break;
    }
    std::size_t i = 0;
    while (i < k && ++digit[i] == roots) digit[i++] = 0;
    if (i == k) break;
  }
  v.exhaustive = true;
  v.anomalous = !v.beta.has_value();
  return v;
}

InductionProbe anomalous_induction_probe(const ProjectiveRep& p, const std::vector<Complex>& weights) {
  const int n = p.group->order();
  if (static_cast<int>(weights.size()) != n) throw DimensionMismatch("one weight per group element is required");
  ComplexMatrix avg = ComplexMatrix::Zero(p.dim(), p.dim());
  for (int x = 0; x < n; ++x) avg += weights[static_cast<std::size_t>(x)] * p.matrices[static_cast<std::size_t>(x)];
  avg /= static_cast<double>(n);
  InductionProbe probe{avg, 0.0, false};
  probe.idempotency_defect = operator_norm(avg * avg - avg);
  probe.is_projection = probe.idempotency_defect <= 1e-8;
  return probe;
}

InductionProbe anomalous_induction_probe(const ProjectiveRep& p, const UnitaryRep& character) {
  if (character.dim() != 1) throw InputError("the probe takes a one-dimensional character");
  if (!character.group().same_table(*p.group)) throw DimensionMismatch("character of a different group");
  std::vector<Complex> w;
  for (int x = 0; x < p.group->order(); ++x) w.push_back(character(x)(0, 0));
  return anomalous_induction_probe(p, w);
}

}  // namespace cq
