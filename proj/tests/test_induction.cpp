#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <random>

#include "cq/errors.hpp"
#include "cq/induction.hpp"

using namespace cq;

namespace {

GroupPtr make(const char* name) { return std::make_shared<const FiniteGroup>(FiniteGroup::preset(name)); }

// Naive dimension of the quotient by the null space: rank via singular values
// of the Gram matrix itself, independent of the eigen-decomposition route.
Eigen::Index svd_rank(const ComplexMatrix& m) {
  Eigen::JacobiSVD<ComplexMatrix> svd(m);
  const auto s = svd.singularValues();
  if (s.size() == 0 || s(0) == 0.0) return 0;
  Eigen::Index r = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s(i) > std::max(1e-8 * s(0), 1e-12)) ++r;
  return r;
}

UnitaryRep two_dim_irrep(const GroupPtr& g) {
  for (const auto& r : builtin_irreps(g))
    if (r.dim() == 2) return r;
  throw InputError("no 2-dim irrep");
}

}  // namespace

TEST_CASE("block algebra products and star") {
  const auto a = FiniteCStarAlgebra::blocks({2, 1});
  CHECK(a->dim() == 5);
  const int e01 = a->matrix_unit(0, 0, 1), e10 = a->matrix_unit(0, 1, 0), e00 = a->matrix_unit(0, 0, 0);
  CHECK(a->product(e01, e10) == e00);
  CHECK_FALSE(a->product(e10, e10).has_value());
  CHECK_FALSE(a->product(e00, a->matrix_unit(1, 0, 0)).has_value());
  CHECK(a->star(e01) == e10);

  const auto x = AlgebraElement::basis(a, e01, Complex(0, 2)) + AlgebraElement::basis(a, e00);
  CHECK((x * x.adjoint()).is_positive());
  CHECK((x.adjoint() * x).is_positive());
  CHECK_FALSE((AlgebraElement::basis(a, e00) - AlgebraElement::basis(a, a->matrix_unit(1, 0, 0))).is_positive());
  const AlgebraElement one(a, a->unit());
  CHECK((one * x).coeffs().isApprox(x.coeffs()));
  CHECK((x * one).coeffs().isApprox(x.coeffs()));
}

TEST_CASE("group algebra left-regular representation is a *-homomorphism") {
  const auto g = make("S3");
  const auto a = FiniteCStarAlgebra::group_algebra(g);
  std::mt19937_64 rng(5);
  const AlgebraElement x(a, random_complex(6, 1, rng));
  const AlgebraElement y(a, random_complex(6, 1, rng));
  CHECK((x * y).left_regular().isApprox(x.left_regular() * y.left_regular(), 1e-12));
  CHECK(x.adjoint().left_regular().isApprox(x.left_regular().adjoint(), 1e-12));
  CHECK((x.adjoint() * x).is_positive());
}

TEST_CASE("algebra representations are validated") {
  const auto a = FiniteCStarAlgebra::blocks({2});
  const auto rho = AlgebraRepresentation::block_weights(a, {2});
  CHECK(rho.dim() == 4);
  std::vector<ComplexMatrix> bad(4, ComplexMatrix::Identity(2, 2));
  CHECK_THROWS_AS(AlgebraRepresentation(a, bad), ValidationError);
  CHECK_THROWS_AS(AlgebraRepresentation(a, {ComplexMatrix::Identity(2, 2)}), DimensionMismatch);
}

TEST_CASE("scalar module with identity Gram induces the module itself") {
  const auto m = HilbertModule::over_scalars(ComplexMatrix::Identity(3, 3));
  const auto rho = AlgebraRepresentation::block_weights(m.algebra(), {1});
  const auto ind = induce(m, rho);
  CHECK(ind.result.induced_dim == 3);
  std::mt19937_64 rng(2);
  const auto h = random_hermitian(3, rng);
  const auto op = ind.result.induce(h.matrix());
  CHECK(op.residual < 1e-12);
  const RealVector a = eigenvalues(h);
  const RealVector b = eigenvalues(HermitianOperator(op.matrix, 1e-9));
  CHECK((a - b).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("rank-deficient scalar module drops the null space") {
  std::mt19937_64 rng(9);
  const ComplexMatrix b = random_complex(5, 2, rng);
  const ComplexMatrix gram = b * b.adjoint();
  const auto m = HilbertModule::over_scalars(gram);
  const auto rho = AlgebraRepresentation::block_weights(m.algebra(), {1});
  const auto ind = induce(m, rho);
  CHECK(ind.result.induced_dim == 2);
  CHECK(ind.result.induced_dim == svd_rank(gram));
  CHECK(ind.result.isometry_residual(rng) < 1e-12);

  // G A = B C B^dag is Hermitian for A = B (B^dag B)^-1 C B^dag.
  const ComplexMatrix c = random_hermitian(2, rng).matrix();
  const ComplexMatrix a = b * (b.adjoint() * b).inverse() * c * b.adjoint();
  CHECK(is_weak_observable_q(a, HermitianOperator(gram, 1e-9)));
  CHECK_NOTHROW(ind.result.induce(a));
  // A generic Hermitian operator is not.
  const ComplexMatrix h = random_hermitian(5, rng).matrix();
  CHECK_FALSE(is_weak_observable_q(h, HermitianOperator(gram, 1e-9)));
  CHECK_THROWS_AS(induce(m, rho, {h}), ValidationError);
}

TEST_CASE("non-PSD Gram is rejected") {
  ComplexMatrix g = ComplexMatrix::Identity(2, 2);
  g(1, 1) = -1.0;
  CHECK_THROWS_AS(induce_from_gram(HermitianOperator(g), 2, 1), ValidationError);
  try {
    induce_from_gram(HermitianOperator(g), 2, 1);
  } catch (const ValidationError& e) {
    CHECK(std::string(e.invariant()) == "gram_psd");
  }
  CHECK_THROWS_AS(HilbertModule::over_scalars(g), ValidationError);
}

TEST_CASE("module validation rejects broken inner products") {
  const auto a = FiniteCStarAlgebra::blocks({1});
  std::vector<ComplexVector> inner = {ComplexVector::Constant(1, 1.0), ComplexVector::Constant(1, Complex(0, 1)),
                                      ComplexVector::Constant(1, Complex(0, 1)), ComplexVector::Constant(1, 1.0)};
  CHECK_THROWS_AS(HilbertModule(a, 2, inner, {ComplexMatrix::Identity(2, 2)}), ValidationError);
  inner[2](0) = Complex(0, -1);
  CHECK_NOTHROW(HilbertModule(a, 2, inner, {ComplexMatrix::Identity(2, 2)}));
  CHECK_THROWS_AS(HilbertModule(a, 2, inner, {2.0 * ComplexMatrix::Identity(2, 2)}), ValidationError);
}

TEST_CASE("S3 regular representation induced from trivial and 2-dim irreps") {
  const auto g = make("S3");
  const auto reg = regular_rep(g);
  const auto triv = group_average_induction(reg, trivial_rep(g));
  CHECK(triv.induced_dim == 1);
  const auto two = two_dim_irrep(g);
  const auto r2 = group_average_induction(reg, two);
  CHECK(r2.induced_dim == 2);
  CHECK(induced_dimension_oracle(reg, two) == doctest::Approx(2.0));
}

TEST_CASE("module route agrees with the group-average route") {
  for (const char* name : {"S3", "Q8", "D4"}) {
    const auto g = make(name);
    const auto alg = FiniteCStarAlgebra::group_algebra(g);
    const auto u = tensor_rep(regular_rep(g), trivial_rep(g));
    const auto module = HilbertModule::group_module(u, alg);
    for (const auto& rho : builtin_irreps(g)) {
      const auto via_module = induce(module, AlgebraRepresentation::from_unitary_rep(alg, rho));
      const auto via_average = group_average_induction(u, rho);
      CHECK(via_module.result.induced_dim == via_average.induced_dim);
      // The module Gram is (1/|G|) sum_x U(x) (x) rho(x) as well.
      CHECK(via_module.result.gram.matrix().isApprox(via_average.gram.matrix(), 1e-12));
    }
  }
}

TEST_CASE("induced operators: isometry and functoriality") {
  const auto g = make("D4");
  const auto u = regular_rep(g);
  std::mt19937_64 rng(17);
  for (const auto& rho : builtin_irreps(g)) {
    const auto r = group_average_induction(u, rho);
    CHECK(r.isometry_residual(rng) < 1e-12);
    // Commutant elements: averaged Hermitian operators.
    auto avg = [&](const ComplexMatrix& h) {
      ComplexMatrix a = ComplexMatrix::Zero(u.dim(), u.dim());
      for (int x = 0; x < g->order(); ++x) a += u(x) * h * u(x).adjoint();
      return ComplexMatrix(a / g->order());
    };
    const ComplexMatrix a = avg(random_hermitian(u.dim(), rng).matrix());
    const ComplexMatrix b = avg(random_hermitian(u.dim(), rng).matrix());
    const auto pa = r.induce(a), pb = r.induce(b), pab = r.induce(a * b);
    CHECK((pab.matrix - pa.matrix * pb.matrix).norm() < 1e-10);
    CHECK((r.induce(a + 2.0 * b).matrix - pa.matrix - 2.0 * pb.matrix).norm() < 1e-10);
    CHECK(r.induce(ComplexMatrix::Identity(u.dim(), u.dim())).matrix.isApprox(
        ComplexMatrix::Identity(r.induced_dim, r.induced_dim), 1e-12));
    // Non-equivariant observables are rejected.
    CHECK_THROWS_AS(r.induce(random_hermitian(u.dim(), rng).matrix()), ValidationError);
  }
}

TEST_CASE("induced dimension matches the character oracle") {
  for (const char* name : {"Z4", "S3", "D4", "Q8"}) {
    const auto g = make(name);
    const auto irreps = builtin_irreps(g);
    std::vector<UnitaryRep> sources = {regular_rep(g), trivial_rep(g, 2)};
    for (const auto& rho : irreps) sources.push_back(tensor_rep(rho, regular_rep(g)));
    for (const auto& u : sources)
      for (const auto& rho : irreps) {
        const auto r = group_average_induction(u, rho);
        const double oracle = induced_dimension_oracle(u, rho);
        CHECK(std::abs(oracle - std::round(oracle)) < 1e-9);
        CHECK(r.induced_dim == static_cast<Eigen::Index>(std::lround(oracle)));
        CHECK(r.induced_dim == svd_rank(r.gram.matrix()));
      }
  }
}

TEST_CASE("induction in stages matches direct induction") {
  SUBCASE("D4 over the rotations with the sign character") {
    const auto g = make("D4");
    std::vector<int> rot;
    for (int k = 0; k < 4; ++k) rot.push_back(g->power(g->find("r"), k));
    const auto emb = SubgroupEmbedding::from_elements(g, rot);
    const auto q = quotient_group(emb);
    for (const auto& theta : characters_of_abelian(q.group)) {
      const auto rep = induction_in_stages(regular_rep(g), emb, theta);
      CHECK(rep.residual_defect < 1e-12);
      CHECK(rep.equivalent);
      CHECK(rep.direct.induced_dim == 1);
    }
  }
  SUBCASE("Z4 over Z2, both characters") {
    const auto g = make("Z4");
    const auto emb = SubgroupEmbedding::from_elements(g, {g->identity(), g->power(g->generators()[0], 2)});
    const auto q = quotient_group(emb);
    for (const auto& theta : characters_of_abelian(q.group)) {
      const auto rep = induction_in_stages(tensor_rep(regular_rep(g), trivial_rep(g, 2)), emb, theta, 4, 3);
      CHECK(rep.equivalent);
      CHECK(rep.spectral_mismatch < 1e-9);
    }
  }
  SUBCASE("non-normal subgroup is rejected") {
    const auto g = make("S3");
    const auto emb = SubgroupEmbedding::from_elements(g, {g->identity(), g->find("s")});
    CHECK_THROWS_AS(induction_in_stages(regular_rep(g), emb, trivial_rep(g)), InputError);
  }
}
