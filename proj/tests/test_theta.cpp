#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "cq/errors.hpp"
#include "cq/theta.hpp"

using namespace cq;

namespace {

GroupPtr make(const char* name) { return std::make_shared<const FiniteGroup>(FiniteGroup::preset(name)); }

RealVector sorted(RealVector v) {
  std::sort(v.data(), v.data() + v.size());
  return v;
}

std::vector<Complex> random_phases(int n, int order, std::mt19937_64& rng, int identity) {
  std::uniform_int_distribution<int> pick(0, order - 1);
  std::vector<Complex> beta;
  for (int x = 0; x < n; ++x) beta.push_back(std::polar(1.0, 2.0 * std::numbers::pi * pick(rng) / order));
  beta[static_cast<std::size_t>(identity)] = 1.0;
  return beta;
}

}  // namespace

TEST_CASE("theta sector N=8 M=4 k=1 matches the closed form") {
  const auto s = theta_sector({8, 4, 1});
  CHECK(s.induction.induced_dim == 8);
  std::vector<double> oracle;
  for (int m = 0; m < 8; ++m) oracle.push_back(2.0 - 2.0 * std::cos(2.0 * std::numbers::pi * (1 + 4 * m) / 32.0));
  std::sort(oracle.begin(), oracle.end());
  for (int i = 0; i < 8; ++i) CHECK(s.spectrum(i) == doctest::Approx(oracle[static_cast<std::size_t>(i)]).epsilon(1e-12));
  CHECK(s.laplacian.residual < 1e-10);
}

TEST_CASE("sector spectra partition the full ring spectrum") {
  for (auto [n, m] : {std::pair{8, 4}, std::pair{3, 5}, std::pair{1, 6}, std::pair{5, 1}}) {
    std::vector<double> all;
    for (int k = 0; k < m; ++k) {
      const auto s = theta_sector({n, m, k});
      CHECK(s.induction.induced_dim == n);
      CHECK((s.spectrum - theta_closed_form({n, m, k})).cwiseAbs().maxCoeff() < 1e-10);
      for (Eigen::Index i = 0; i < s.spectrum.size(); ++i) all.push_back(s.spectrum(i));
    }
    std::sort(all.begin(), all.end());
    const RealVector full = eigenvalues(HermitianOperator(ring_laplacian(n * m)));
    REQUIRE(static_cast<Eigen::Index>(all.size()) == full.size());
    for (Eigen::Index i = 0; i < full.size(); ++i) CHECK(std::abs(all[static_cast<std::size_t>(i)] - full(i)) < 1e-10);
  }
}

TEST_CASE("k = 0 is trivial-representation induction; distinct sectors are disjoint") {
  const auto s0 = theta_sector({8, 4, 0});
  const auto triv = group_average_induction(theta_gauge_rep(8, 4), trivial_rep(theta_gauge_rep(8, 4).group_ptr()));
  CHECK(s0.induction.induced_dim == triv.induced_dim);
  const RealVector direct = eigenvalues(HermitianOperator(triv.induce(ring_laplacian(32)).matrix, 1e-9));
  CHECK((s0.spectrum - direct).cwiseAbs().maxCoeff() < 1e-10);

  // 2 - 2cos(2 pi p / L) is symmetric under p -> -p, so k and M - k share spectra.
  const int n = 3, m = 7;
  for (int k = 0; k < m; ++k)
    for (int l = 0; l < m; ++l) {
      if (l == k || l == (m - k) % m) continue;
      const auto a = theta_closed_form({n, m, k}), b = theta_closed_form({n, m, l});
      double gap = 1e300;
      for (Eigen::Index i = 0; i < a.size(); ++i)
        for (Eigen::Index j = 0; j < b.size(); ++j) gap = std::min(gap, std::abs(a(i) - b(j)));
      CHECK(gap > 1e-6);
    }
}

TEST_CASE("theta problem validation") {
  CHECK_THROWS_AS(theta_sector({0, 4, 0}), InputError);
  CHECK_THROWS_AS(theta_sector({8, 4, 4}), InputError);
}

TEST_CASE("D4 over Z4: staged and direct theta induction agree") {
  for (bool sign : {false, true}) {
    const auto r = theta_stages_demo(sign, 4, 11);
    CHECK(r.equivalent);
    CHECK(r.direct.induced_dim == r.stage2.induced_dim);
    CHECK(r.spectral_mismatch < 1e-9);
  }
}

TEST_CASE("multiplier extraction") {
  SUBCASE("genuine representations have omega = 1") {
    for (const char* name : {"S3", "Q8", "Z2xZ2"}) {
      const auto g = make(name);
      for (const auto& rho : builtin_irreps(g)) {
        const auto p = multiplier_of(g, rho.matrices());
        for (const auto w : p.multiplier) CHECK(std::abs(w - 1.0) < 1e-12);
      }
    }
  }
  SUBCASE("Pauli assignment") {
    const auto p = pauli_projective_rep();
    const auto& g = *p.group;
    const int a = 2, b = 1;  // (1,0), (0,1)
    CHECK(g.mul(a, b) == g.mul(b, a));
    // X Z = -Z X.
    CHECK(std::abs(p.omega(a, b) / p.omega(b, a) + 1.0) < 1e-12);
    CHECK(p.cocycle_defect < 1e-12);
  }
  SUBCASE("twisted genuine representation has a coboundary multiplier") {
    const auto g = make("D4");
    std::mt19937_64 rng(3);
    const auto rho = builtin_irreps(g).back();
    const auto beta = random_phases(g->order(), 4, rng, g->identity());
    const auto p = twist(multiplier_of(g, rho.matrices()), beta);
    for (int x = 0; x < g->order(); ++x)
      for (int y = 0; y < g->order(); ++y)
        CHECK(std::abs(p.omega(x, y) - beta[static_cast<std::size_t>(x)] * beta[static_cast<std::size_t>(y)] /
                                          beta[static_cast<std::size_t>(g->mul(x, y))]) < 1e-12);
  }
  SUBCASE("non-projective input is rejected") {
    const auto g = make("Z2xZ2");
    CHECK_THROWS_AS(multiplier_of(g, {ComplexMatrix::Identity(2, 2), pauli_x(), pauli_y(), pauli_x()}), ValidationError);
  }
}

TEST_CASE("anomaly verdicts") {
  const auto pauli = pauli_projective_rep();
  const auto v = is_anomalous(pauli);
  CHECK(v.anomalous);
  CHECK(v.exhaustive);
  REQUIRE(v.witness_pair.has_value());
  CHECK(std::abs(v.witness_value + 1.0) < 1e-12);
  CHECK_FALSE(v.beta.has_value());

  for (const char* name : {"Z4", "S3", "Q8", "D4", "Z2xZ2"}) {
    const auto g = make(name);
    for (const auto& rho : builtin_irreps(g)) {
      const auto genuine = is_anomalous(multiplier_of(g, rho.matrices()));
      CHECK_FALSE(genuine.anomalous);
      CHECK_FALSE(genuine.witness_pair.has_value());
    }
  }
}

TEST_CASE("verdicts and witnesses are invariant under twists") {
  std::mt19937_64 rng(21);
  for (const char* name : {"Z4", "S3", "Q8", "D4"}) {
    const auto g = make(name);
    for (const auto& rho : builtin_irreps(g))
      for (int trial = 0; trial < 3; ++trial) {
        const auto beta = random_phases(g->order(), 4, rng, g->identity());
        const auto p = twist(multiplier_of(g, rho.matrices()), beta);
        const auto v = is_anomalous(p);
        CHECK_FALSE(v.anomalous);
        REQUIRE(v.beta.has_value());
        // The recovered beta reproduces omega.
        for (int x = 0; x < g->order(); ++x)
          for (int y = 0; y < g->order(); ++y) {
            const auto& b = *v.beta;
            CHECK(std::abs(p.omega(x, y) / p.omega(g->identity(), g->identity()) -
                           b[static_cast<std::size_t>(x)] * b[static_cast<std::size_t>(y)] /
                               b[static_cast<std::size_t>(g->mul(x, y))]) < 1e-9);
          }
      }
  }
  const auto pauli = pauli_projective_rep();
  const auto& g = *pauli.group;
  for (int trial = 0; trial < 10; ++trial) {
    const auto beta = random_phases(g.order(), 8, rng, g.identity());
    const auto t = twist(pauli, beta);
    CHECK(is_anomalous(t).anomalous);
    // Exhaustive identity: omega(x,y)/omega(y,x) on commuting pairs is twist invariant.
    for (int x = 0; x < g.order(); ++x)
      for (int y = 0; y < g.order(); ++y)
        if (g.mul(x, y) == g.mul(y, x))
          CHECK(std::abs(t.omega(x, y) / t.omega(y, x) - pauli.omega(x, y) / pauli.omega(y, x)) < 1e-12);
  }
}

TEST_CASE("non root-of-unity multipliers are out of scope") {
  const auto g = make("Z2xZ2");
  std::vector<Complex> beta = {1.0, std::polar(1.0, 0.123), std::polar(1.0, 0.5), 1.0};
  const auto t = twist(multiplier_of(g, builtin_irreps(g)[0].matrices()), beta);
  CHECK_THROWS_AS(is_anomalous(t), ValidationError);
}

TEST_CASE("induction probe") {
  for (const char* name : {"S3", "D4"}) {
    const auto g = make(name);
    for (const auto& rho : builtin_irreps(g))
      for (const auto& chi : builtin_irreps(g)) {
        if (chi.dim() != 1) continue;
        CHECK(anomalous_induction_probe(multiplier_of(g, rho.matrices()), chi).idempotency_defect <= 1e-10);
      }
  }
  const auto pauli = pauli_projective_rep();
  const auto probe = anomalous_induction_probe(pauli, trivial_rep(pauli.group));
  CHECK(probe.idempotency_defect > 0.1);
  CHECK_FALSE(probe.is_projection);
  // Independent 2x2 computation of P = (I + X + Z + XZ) / 4.
  const ComplexMatrix p = (ComplexMatrix::Identity(2, 2) + pauli_x() + pauli_z() + pauli_x() * pauli_z()) / 4.0;
  CHECK(probe.idempotency_defect == doctest::Approx(operator_norm(p * p - p)).epsilon(1e-12));

  // Absorbing beta into the weights restores a projection.
  const auto g = make("Q8");
  std::mt19937_64 rng(8);
  const auto rho = builtin_irreps(g).back();
  const auto beta = random_phases(g->order(), 8, rng, g->identity());
  const auto twisted = twist(multiplier_of(g, rho.matrices()), beta);
  CHECK_FALSE(anomalous_induction_probe(twisted, trivial_rep(g)).is_projection);
  std::vector<Complex> weights;
  for (const auto b : beta) weights.push_back(std::conj(b));
  CHECK(anomalous_induction_probe(twisted, weights).idempotency_defect <= 1e-10);
}
