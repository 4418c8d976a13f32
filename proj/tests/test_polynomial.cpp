#include "doctest.h"

#include <cmath>
#include <random>

#include "cq/errors.hpp"
#include "cq/polynomial.hpp"

using namespace cq;

namespace {

using P = PolynomialObservable;

P nx() { return P::coordinate(0); }
P ny() { return P::coordinate(1); }
P nz() { return P::coordinate(2); }

// Central-difference bracket -n . (grad f x grad g) evaluated at a point of the sphere.
double fd_bracket(const P& f, const P& g, const double n[3]) {
  const double h = 1e-5;
  double gf[3], gg[3];
  for (int a = 0; a < 3; ++a) {
    double p[3] = {n[0], n[1], n[2]};
    double m[3] = {n[0], n[1], n[2]};
    p[a] += h;
    m[a] -= h;
    gf[a] = (f.evaluate(p[0], p[1], p[2]) - f.evaluate(m[0], m[1], m[2])) / (2 * h);
    gg[a] = (g.evaluate(p[0], p[1], p[2]) - g.evaluate(m[0], m[1], m[2])) / (2 * h);
  }
  const double cross[3] = {gf[1] * gg[2] - gf[2] * gg[1], gf[2] * gg[0] - gf[0] * gg[2],
                           gf[0] * gg[1] - gf[1] * gg[0]};
  return -(n[0] * cross[0] + n[1] * cross[1] + n[2] * cross[2]);
}

P random_poly(std::mt19937_64& rng, int max_degree) {
  std::uniform_real_distribution<double> coeff(-1.0, 1.0);
  P out;
  for (int a = 0; a <= max_degree; ++a)
    for (int b = 0; a + b <= max_degree; ++b)
      for (int c = 0; a + b + c <= max_degree; ++c) out = out + P::monomial({a, b, c}, coeff(rng));
  return out;
}

void random_unit(std::mt19937_64& rng, double n[3]) {
  std::normal_distribution<double> g;
  double r = 0;
  for (int a = 0; a < 3; ++a) {
    n[a] = g(rng);
    r += n[a] * n[a];
  }
  r = std::sqrt(r);
  for (int a = 0; a < 3; ++a) n[a] /= r;
}

}  // namespace

TEST_CASE("parse and print round trip") {
  const P p = P::parse("2.5*nx^2*nz - ny + 3");
  CHECK(p.degree() == 3);
  CHECK(p.evaluate(0.6, 0.0, 0.8) == doctest::Approx(2.5 * 0.36 * 0.8 + 3));
  CHECK(P::parse(p.to_string()) == p);
  CHECK(P::parse("nx*ny") == nx() * ny());
  CHECK(P::parse("-nz") == -nz());
  CHECK(P::parse("1") == P::constant(1.0));
}

TEST_CASE("parse rejects malformed input") {
  CHECK_THROWS_AS(P::parse(""), InputError);
  CHECK_THROWS_AS(P::parse("nx +"), InputError);
  CHECK_THROWS_AS(P::parse("nw"), InputError);
  CHECK_THROWS_AS(P::parse("nx^-1"), InputError);
  CHECK_THROWS_AS(P::parse("2 nx"), InputError);
}

TEST_CASE("canonical form reduces modulo the sphere relation") {
  CHECK(P::parse("nx^2 + ny^2 + nz^2") == P::constant(1.0));
  CHECK((nz() * nz()) == P::parse("1 - nx^2 - ny^2"));
  const P f = P::parse("nz^5 + nx*nz^4");
  for (const auto& [e, c] : f.terms()) CHECK(e[2] <= 1);
  CHECK(f.evaluate(0.48, 0.6, 0.64) == doctest::Approx(std::pow(0.64, 5) + 0.48 * std::pow(0.64, 4)));
}

TEST_CASE("generator brackets") {
  CHECK(poisson_bracket(nx(), ny()) == -nz());
  CHECK(poisson_bracket(ny(), nz()) == -nx());
  CHECK(poisson_bracket(nz(), nx()) == -ny());
  CHECK(poisson_bracket(nx(), nx()).is_zero());
  CHECK(poisson_bracket(nz(), nx() * nx()) == P::parse("-2*nx*ny"));
  CHECK(poisson_bracket(P::constant(3.0), nx()).is_zero());
}

TEST_CASE("bracket agrees with finite differences on the sphere") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 20; ++trial) {
    const P f = random_poly(rng, 3);
    const P g = random_poly(rng, 3);
    const P b = poisson_bracket(f, g);
    for (int k = 0; k < 5; ++k) {
      double n[3];
      random_unit(rng, n);
      CHECK(b.evaluate(n[0], n[1], n[2]) == doctest::Approx(fd_bracket(f, g, n)).epsilon(1e-6).scale(1.0));
    }
  }
}

TEST_CASE("bracket is antisymmetric, Leibniz and Jacobi") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    const P f = random_poly(rng, 2);
    const P g = random_poly(rng, 2);
    const P h = random_poly(rng, 2);
    const P anti = poisson_bracket(f, g) + poisson_bracket(g, f);
    CHECK(anti.max_abs_coefficient() < 1e-12);
    const P leib = poisson_bracket(f, g * h) - poisson_bracket(f, g) * h - g * poisson_bracket(f, h);
    CHECK(leib.max_abs_coefficient() < 1e-11);
    const P jac = poisson_bracket(f, poisson_bracket(g, h)) + poisson_bracket(g, poisson_bracket(h, f)) +
                  poisson_bracket(h, poisson_bracket(f, g));
    CHECK(jac.max_abs_coefficient() < 1e-10);
  }
}
