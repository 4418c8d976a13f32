#include "doctest.h"

#include <algorithm>

#include "cq/errors.hpp"
#include "cq/linalg.hpp"

using namespace cq;

namespace {

HermitianOperator herm(const ComplexMatrix& m) { return HermitianOperator(m); }

double scale_of(const HermitianOperator& a, const HermitianOperator& b, const HermitianOperator& c) {
  return std::max(1.0, operator_norm(a.matrix()) * operator_norm(b.matrix()) * operator_norm(c.matrix()));
}

}  // namespace

TEST_CASE("jordan product examples") {
  std::mt19937_64 rng(7);
  const auto b = random_hermitian(4, rng);
  const auto a = random_hermitian(4, rng);

  CHECK((jordan(HermitianOperator::identity(4), b).matrix() - b.matrix()).norm() < 1e-14);
  CHECK((jordan(a, a).matrix() - a.matrix() * a.matrix()).norm() < 1e-14);
  // sigma_z o sigma_x = 0 by direct 2x2 multiplication.
  CHECK(jordan(herm(pauli_z()), herm(pauli_x())).matrix().norm() < 1e-15);
}

TEST_CASE("lie bracket examples") {
  std::mt19937_64 rng(11);
  const auto a = random_hermitian(3, rng);
  CHECK(lie_bracket(a, a, ScaledBracketContext(1.0)).matrix().norm() < 1e-15);
  CHECK(lie_bracket(HermitianOperator::identity(3), a, ScaledBracketContext(0.3)).matrix().norm() < 1e-14);

  // [sx/2, sy/2] = i sz/2, so i[sx/2, sy/2] = -sz/2.
  const auto sx = herm(0.5 * pauli_x());
  const auto sy = herm(0.5 * pauli_y());
  const ComplexMatrix expected = -0.5 * pauli_z();
  CHECK((lie_bracket(sx, sy, ScaledBracketContext(1.0)).matrix() - expected).norm() < 1e-15);
}

TEST_CASE("bracket context rejects non-positive hbar") {
  CHECK_THROWS_AS(ScaledBracketContext(0.0), InputError);
  CHECK_THROWS_AS(ScaledBracketContext(-1.0), InputError);
  CHECK(ScaledBracketContext(0.5).jordan_lie_constant() == doctest::Approx(0.0625));
}

TEST_CASE("dimension mismatches are rejected") {
  const auto a = HermitianOperator::identity(2);
  const auto b = HermitianOperator::identity(3);
  const ScaledBracketContext ctx(1.0);
  CHECK_THROWS_AS(jordan(a, b), DimensionMismatch);
  CHECK_THROWS_AS(lie_bracket(a, b, ctx), DimensionMismatch);
  CHECK_THROWS_AS(associator_defect(a, a, b, ctx), DimensionMismatch);
  CHECK_THROWS_AS(jb_inequality_defect(a, b), DimensionMismatch);
}

TEST_CASE("non-Hermitian input is rejected") {
  ComplexMatrix m(2, 2);
  m << 0.0, 1.0, 0.0, 0.0;
  CHECK_THROWS_AS(HermitianOperator{m}, ValidationError);
  CHECK_THROWS_AS(HermitianOperator{ComplexMatrix::Zero(2, 3)}, DimensionMismatch);
}

TEST_CASE("associator defect examples") {
  const ScaledBracketContext ctx(0.7);
  std::mt19937_64 rng(3);

  RealVector d1(3), d2(3), d3(3);
  d1 << 1, 2, 3;
  d2 << -1, 0.5, 4;
  d3 << 2, 2, -7;
  CHECK(associator_defect(HermitianOperator::diagonal(d1), HermitianOperator::diagonal(d2),
                          HermitianOperator::diagonal(d3), ctx) < 1e-13);

  const auto a = random_hermitian(5, rng, 2.0);
  const auto b = random_hermitian(5, rng, 1.5);
  const auto c = random_hermitian(5, rng, 0.8);
  CHECK(associator_defect(a, b, c, ctx) <= 1e-10 * scale_of(a, b, c));

  CHECK(associator_defect(herm(pauli_x()), herm(pauli_y()), herm(pauli_z()), ScaledBracketContext(2.0)) <= 1e-12);
}

TEST_CASE("JB inequality examples") {
  std::mt19937_64 rng(5);
  const auto a = random_hermitian(4, rng, 3.0);
  CHECK(std::abs(jb_inequality_defect(a, HermitianOperator::zero(4))) < 1e-12);
  // sz^2 + sx^2 = 2I, ||sz||^2 = 1.
  CHECK(jb_inequality_defect(herm(pauli_z()), herm(pauli_x())) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("operator norm examples") {
  CHECK(operator_norm(ComplexMatrix::Identity(5, 5)) == doctest::Approx(1.0));
  RealVector d(2);
  d << 3, -5;
  CHECK(operator_norm(HermitianOperator::diagonal(d).matrix()) == doctest::Approx(5.0));
  CHECK(operator_norm(pauli_x()) == doctest::Approx(1.0));
  // Rectangular: largest singular value of [[3, 4]] is 5.
  ComplexMatrix r(1, 2);
  r << 3.0, 4.0;
  CHECK(operator_norm(r) == doctest::Approx(5.0));
}

TEST_CASE("property: Jordan-Lie identity, derivation rule and JB inequality on random samples") {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> dim(2, 8);
  std::uniform_real_distribution<double> mag(0.1, 3.0);
  const double hbars[] = {0.1, 1.0, 2.0};
  for (int trial = 0; trial < 60; ++trial) {
    const int n = dim(rng);
    const auto a = random_hermitian(n, rng, mag(rng));
    const auto b = random_hermitian(n, rng, mag(rng));
    const auto c = random_hermitian(n, rng, mag(rng));
    const ScaledBracketContext ctx(hbars[trial % 3]);
    const double scale = scale_of(a, b, c);
    CHECK(associator_defect(a, b, c, ctx) <= 1e-10 * scale);

    // {A, B o C} = {A,B} o C + B o {A,C}
    const ComplexMatrix lhs = lie_bracket(a, jordan(b, c), ctx).matrix();
    const ComplexMatrix rhs =
        jordan(lie_bracket(a, b, ctx), c).matrix() + jordan(b, lie_bracket(a, c, ctx)).matrix();
    CHECK(operator_norm(lhs - rhs) <= 1e-10 * scale / ctx.hbar());

    CHECK(jb_inequality_defect(a, b) >= -1e-10 * std::max(1.0, operator_norm(a.matrix()) * operator_norm(a.matrix())));
  }
}

TEST_CASE("property: operator norm is submultiplicative and satisfies the C* identity") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    const ComplexMatrix m = random_complex(4, 6, rng);
    const ComplexMatrix k = random_complex(6, 3, rng);
    const double nm = operator_norm(m);
    CHECK(operator_norm(m * k) <= nm * operator_norm(k) * (1 + 1e-12));
    CHECK(std::abs(operator_norm(m.adjoint() * m) - nm * nm) <= 1e-10 * nm * nm);
  }
}

TEST_CASE("eigh returns ascending eigenvalues and a unitary basis") {
  std::mt19937_64 rng(17);
  const auto h = random_hermitian(6, rng);
  const auto eig = eigh(h);
  for (int i = 1; i < 6; ++i) CHECK(eig.values(i - 1) <= eig.values(i));
  CHECK(is_unitary(eig.vectors, 1e-12));
  const ComplexMatrix recon = eig.vectors * eig.values.cast<Complex>().asDiagonal() * eig.vectors.adjoint();
  CHECK((recon - h.matrix()).norm() < 1e-12);
}

TEST_CASE("positivity and projector rank") {
  std::mt19937_64 rng(23);
  const ComplexMatrix g = random_complex(5, 2, rng);
  const HermitianOperator psd(g * g.adjoint());
  CHECK(is_positive(psd));
  CHECK_FALSE(is_positive(HermitianOperator(-psd.matrix())));

  ComplexMatrix p = ComplexMatrix::Zero(3, 3);
  p(0, 0) = 1.0;
  p(2, 2) = 1.0;
  CHECK(projector_rank(HermitianOperator(p)) == 2);
}

TEST_CASE("kron follows the row-major product index convention") {
  ComplexMatrix a(2, 2), b(2, 2);
  a << 1, 2, 3, 4;
  b << 0, 1, 1, 0;
  const ComplexMatrix k = kron(a, b);
  CHECK(k(0, 1) == Complex(1.0));
  CHECK(k(2, 1) == Complex(3.0));
  CHECK(k(3, 2) == Complex(4.0));
}
