#include "doctest.h"

#include <random>

#include "cq/errors.hpp"
#include "cq/reduction.hpp"

using namespace cq;

namespace {

RealMatrix axes(int n, std::initializer_list<int> which) {
  RealMatrix d = RealMatrix::Zero(n, static_cast<Eigen::Index>(which.size()));
  Eigen::Index c = 0;
  for (int a : which) d(a, c++) = 1.0;
  return d;
}

RealMatrix random_directions(int n, int k, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  RealMatrix d(n, k);
  for (Eigen::Index i = 0; i < d.size(); ++i) d.data()[i] = g(rng);
  return d;
}

// Radical vectors lie in C and are Omega-orthogonal to all of C.
double radical_defect(const ReducedSpace& r, const RealMatrix& omega) {
  const RealMatrix& c = r.constraint.basis;
  const RealMatrix in_c = r.radical_basis - c * (c.transpose() * r.radical_basis);
  return std::max(in_c.norm(), (r.radical_basis.transpose() * omega * c).norm());
}

}  // namespace

TEST_CASE("symplectic spaces are validated") {
  CHECK(SymplecticVectorSpace::canonical(2).dim() == 4);
  CHECK(SymplecticVectorSpace::point().dim() == 0);
  CHECK_THROWS_AS(SymplecticVectorSpace(RealMatrix::Identity(2, 2)), ValidationError);
  CHECK_THROWS_AS(SymplecticVectorSpace(RealMatrix::Zero(2, 2)), ValidationError);
  CHECK_THROWS_AS(SymplecticVectorSpace(RealMatrix::Zero(3, 3)), InputError);
  // {q, p} = 1
  const auto s = SymplecticVectorSpace::canonical(1);
  CHECK(s.poisson_tensor()(0, 1) == doctest::Approx(1.0));
  CHECK(s.poisson_tensor()(1, 0) == doctest::Approx(-1.0));
}

TEST_CASE("realizations must Poisson-commute") {
  const auto s = SymplecticVectorSpace::canonical(1);
  RealMatrix a(2, 2);
  a << 1, 0, 0, 1;  // J = (q, p): {q, p} = 1
  CHECK_THROWS_AS(LinearRealization(s, a, RealVector::Zero(2)), ValidationError);
  CHECK_NOTHROW(LinearRealization::translations(3, axes(3, {0, 1})));
}

TEST_CASE("fiber product examples") {
  const auto j = LinearRealization::translations(2, axes(2, {0, 1}));
  const auto c = fiber_product(j, LinearRealization::point(2));
  CHECK(c.dim() == 2);
  // C = {p1 = p2 = 0}
  CHECK(c.basis.bottomRows(2).norm() < 1e-12);

  const auto rank_nullity = fiber_product(LinearRealization::translations(4, axes(4, {1, 3})), LinearRealization::point(2));
  CHECK(rank_nullity.dim() == 8 - 2);

  const LinearRealization zero(SymplecticVectorSpace::canonical(1), RealMatrix::Zero(1, 2), RealVector::Zero(1));
  const LinearRealization zero_rho(SymplecticVectorSpace::canonical(2), RealMatrix::Zero(1, 4), RealVector::Zero(1));
  CHECK(fiber_product(zero, zero_rho).dim() == 6);

  RealVector level(1);
  level << 1.0;
  CHECK_THROWS_AS(fiber_product(zero, LinearRealization::point(1, level)), InputError);
  CHECK_THROWS_AS(fiber_product(j, LinearRealization::point(1)), DimensionMismatch);
}

TEST_CASE("reduce examples") {
  const auto r = reduce(LinearRealization::translations(3, axes(3, {0, 1})), LinearRealization::point(2));
  CHECK(r.quotient_dim == 2);
  // Chart follows the surviving coordinates (q3, p3).
  RealMatrix expected = RealMatrix::Zero(6, 2);
  expected(2, 0) = expected(5, 1) = 1.0;
  CHECK((r.chart - expected).norm() < 1e-12);
  CHECK((r.reduced_omega - SymplecticVectorSpace::canonical(1).omega()).norm() < 1e-12);

  const auto full = reduce(LinearRealization::translations(1, axes(1, {0})), LinearRealization::point(1));
  CHECK(full.quotient_dim == 0);

  // S_rho = S, both realizations zero: nothing is constrained and nothing is null.
  const auto s = SymplecticVectorSpace::canonical(1);
  const LinearRealization zero(s, RealMatrix::Zero(1, 2), RealVector::Zero(1));
  const auto both = reduce(zero, zero);
  CHECK(both.quotient_dim == 4);
  CHECK(both.radical_basis.cols() == 0);
  RealMatrix minus = RealMatrix::Zero(4, 4);
  minus.topLeftCorner(2, 2) = s.omega();
  minus.bottomRightCorner(2, 2) = -s.omega();
  CHECK((both.reduced_omega - minus).norm() < 1e-12);
}

TEST_CASE("reduce against a nontrivial second realization") {
  // J = p1 on T*R^2 against J_rho = p on T*R^1: C = {p1 = p_rho}.
  const auto j = LinearRealization::translations(2, axes(2, {0}));
  const auto rho = LinearRealization::translations(1, axes(1, {0}));
  const auto r = reduce(j, rho);
  CHECK(r.constraint.dim() == 5);
  CHECK(r.radical_basis.cols() == 1);
  CHECK(r.quotient_dim == 4);
  RealMatrix omega = RealMatrix::Zero(6, 6);
  omega.topLeftCorner(4, 4) = SymplecticVectorSpace::canonical(2).omega();
  omega.bottomRightCorner(2, 2) = -SymplecticVectorSpace::canonical(1).omega();
  CHECK(radical_defect(r, omega) < 1e-12);
}

TEST_CASE("nonzero momentum level shifts the constraint set") {
  const auto s = SymplecticVectorSpace::canonical(2);
  RealMatrix a = RealMatrix::Zero(1, 4);
  a(0, 2) = 1.0;
  RealVector b(1);
  b << -1.5;  // J = p1 - 1.5
  const auto r = reduce(LinearRealization(s, a, b), LinearRealization::point(1));
  CHECK(r.constraint.offset(2) == doctest::Approx(1.5));
  CHECK(r.quotient_dim == 2);
}

TEST_CASE("marsden weinstein examples") {
  for (int n = 1; n <= 6; ++n)
    for (int k = 0; k <= n; ++k) {
      std::vector<int> idx;
      RealMatrix d = RealMatrix::Zero(n, k);
      for (int i = 0; i < k; ++i) d(i, i) = 1.0;
      const auto j = LinearRealization::translations(n, d);
      const auto mw = marsden_weinstein(j);
      CHECK(mw.quotient_dim == 2 * (n - k));
      const auto r = reduce(j, LinearRealization::point(k));
      CHECK(r.quotient_dim == mw.quotient_dim);
      CHECK(congruence_residual(mw, r) < 1e-9);
      CHECK(congruence_residual(r, mw) < 1e-9);
    }
  // Dependent components reduce by the rank.
  RealMatrix d(3, 3);
  d << 1, 0, 1, 0, 1, 1, 0, 0, 0;
  const auto dep = LinearRealization::translations(3, d);
  CHECK(marsden_weinstein(dep).quotient_dim == 2);
  CHECK(reduce(dep, LinearRealization::point(3)).quotient_dim == 2);
}

TEST_CASE("generalized reduction and marsden weinstein agree on random problems") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 1 + trial % 6;
    const int k = static_cast<int>(rng() % static_cast<unsigned>(n + 1));
    const auto j = LinearRealization::translations(n, random_directions(n, k, rng));
    const auto mw = marsden_weinstein(j);
    const auto r = reduce(j, LinearRealization::point(k));
    CHECK(mw.quotient_dim == 2 * (n - k));
    CHECK(r.quotient_dim == mw.quotient_dim);
    CHECK(congruence_residual(mw, r) < 1e-9);
    CHECK(radical_defect(r, SymplecticVectorSpace::canonical(n).omega()) < 1e-10);
  }
}

TEST_CASE("congruence residual detects different quotients") {
  const auto a = reduce(LinearRealization::translations(2, axes(2, {0})), LinearRealization::point(1));
  const auto b = reduce(LinearRealization::translations(2, axes(2, {1})), LinearRealization::point(1));
  CHECK(a.quotient_dim == b.quotient_dim);
  CHECK(congruence_residual(a, b) > 0.1);
}

TEST_CASE("reduction in stages") {
  std::mt19937_64 rng(123);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + trial % 5;
    const int k1 = 1 + static_cast<int>(rng() % static_cast<unsigned>(n - 1));
    const int k2 = 1 + static_cast<int>(rng() % static_cast<unsigned>(n - k1));
    const RealMatrix d = random_directions(n, k1 + k2, rng);
    const auto direct = reduce(LinearRealization::translations(n, d), LinearRealization::point(k1 + k2));
    const auto first = reduce(LinearRealization::translations(n, d.leftCols(k1)), LinearRealization::point(k1));
    const auto j2 = descend(LinearRealization::translations(n, d.rightCols(k2)), first);
    const auto second = reduce(j2, LinearRealization::point(k2));
    const auto staged = compose_stages(first, second);
    CHECK(staged.quotient_dim == direct.quotient_dim);
    CHECK(direct.quotient_dim == 2 * (n - k1 - k2));
    CHECK(congruence_residual(staged, direct) < 1e-9);
  }
}

TEST_CASE("descend rejects realizations that vary along leaves") {
  const auto first = reduce(LinearRealization::translations(2, axes(2, {0})), LinearRealization::point(1));
  // J2 = q1 is not constant along the q1 leaves; build it on T*R^2 where it commutes with itself.
  RealMatrix a = RealMatrix::Zero(1, 4);
  a(0, 0) = 1.0;
  const LinearRealization j2(SymplecticVectorSpace::canonical(2), a, RealVector::Zero(1));
  CHECK_THROWS_AS(descend(j2, first), ValidationError);
}

TEST_CASE("weak observables") {
  const auto j = LinearRealization::translations(2, axes(2, {0, 1}));
  CHECK(is_weak_observable(QuadraticObservable::component(j, 0), j));
  CHECK(is_weak_observable(QuadraticObservable::component(j, 1), j));

  RealVector q1 = RealVector::Zero(4);
  q1(0) = 1.0;
  CHECK_FALSE(is_weak_observable(QuadraticObservable::linear(q1), j));

  RealMatrix p1sq = RealMatrix::Zero(4, 4);
  p1sq(2, 2) = 1.0;
  RealVector lin = RealVector::Zero(4);
  lin(3) = 0.7;
  CHECK(is_weak_observable(QuadraticObservable(p1sq, lin, 2.0), j));

  // q1 * p1 is not weak: {p1, q1 p1} = -p1 vanishes on C, but q1^2 fails.
  RealMatrix q1sq = RealMatrix::Zero(4, 4);
  q1sq(0, 0) = 1.0;
  CHECK_FALSE(is_weak_observable(QuadraticObservable(q1sq, RealVector::Zero(4), 0.0), j));
  RealMatrix q1p1 = RealMatrix::Zero(4, 4);
  q1p1(0, 2) = q1p1(2, 0) = 0.5;
  CHECK(is_weak_observable(QuadraticObservable(q1p1, RealVector::Zero(4), 0.0), j));
}

TEST_CASE("induced classical observables") {
  const auto j = LinearRealization::translations(2, axes(2, {0, 1}));
  const auto r = reduce(j, LinearRealization::point(2));
  CHECK(induce_classical(QuadraticObservable::constant(4, 3.25), r).c() == doctest::Approx(3.25));

  RealMatrix p2sq = RealMatrix::Zero(4, 4);
  p2sq(3, 3) = 1.0;
  const auto zero = induce_classical(QuadraticObservable(p2sq, RealVector::Zero(4), 0.0), r);
  CHECK(zero.dim() == 0);
  CHECK(zero.c() == doctest::Approx(0.0));

  // Translations along q1 only: q2 survives as a chart coordinate.
  const auto j1 = LinearRealization::translations(2, axes(2, {0}));
  const auto r1 = reduce(j1, LinearRealization::point(1));
  RealMatrix q2sq = RealMatrix::Zero(4, 4);
  q2sq(1, 1) = 1.0;
  const QuadraticObservable f(q2sq, RealVector::Zero(4), 0.0);
  CHECK(is_weak_observable(f, j1));
  const auto g = induce_classical(f, r1);
  RealMatrix expected = RealMatrix::Zero(2, 2);
  expected(0, 0) = 1.0;
  CHECK((g.q() - expected).norm() < 1e-12);

  RealMatrix q1sq = RealMatrix::Zero(4, 4);
  q1sq(0, 0) = 1.0;
  CHECK_THROWS_AS(induce_classical(QuadraticObservable(q1sq, RealVector::Zero(4), 0.0), r1), ValidationError);
}

TEST_CASE("weak observables descend consistently through random charts") {
  std::mt19937_64 rng(7);
  std::normal_distribution<double> gauss;
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 3;
    const RealMatrix d = random_directions(n, 1, rng);
    const auto j = LinearRealization::translations(n, d);
    const auto r = reduce(j, LinearRealization::point(1));
    // f = (q . v)^2 with v orthogonal to the translation direction is invariant.
    RealVector v = RealVector::NullaryExpr(n, [&] { return gauss(rng); });
    v -= d.col(0) * (d.col(0).dot(v) / d.col(0).squaredNorm());
    RealMatrix qm = RealMatrix::Zero(2 * n, 2 * n);
    qm.topLeftCorner(n, n) = v * v.transpose();
    const QuadraticObservable f(qm, RealVector::Zero(2 * n), 1.0);
    CHECK(is_weak_observable(f, j));
    const auto g = induce_classical(f, r);
    // Evaluate at a random point of C, then at its chart image.
    const RealVector t = RealVector::NullaryExpr(r.constraint.dim(), [&] { return gauss(rng); });
    const RealVector z = r.constraint.offset + r.constraint.basis * t;
    const RealVector y = r.chart.transpose() * (z - r.constraint.offset);
    CHECK(g.evaluate(y) == doctest::Approx(f.evaluate(z)).epsilon(1e-10));
  }
}
