#include "doctest.h"

#include <cmath>
#include <numbers>
#include <set>

#include "cq/errors.hpp"
#include "cq/groups.hpp"

using namespace cq;

namespace {

GroupPtr make(const FiniteGroup& g) { return std::make_shared<const FiniteGroup>(g); }

// Burnside: #classes = (1/|G|) #{(x, y) : xy = yx}.
int class_count_by_commuting_pairs(const FiniteGroup& g) {
  int pairs = 0;
  for (int x = 0; x < g.order(); ++x)
    for (int y = 0; y < g.order(); ++y) pairs += g.mul(x, y) == g.mul(y, x);
  return pairs / g.order();
}

double avg_trace(const UnitaryRep& u) {
  Complex s = 0.0;
  for (const auto& m : u.matrices()) s += m.trace();
  return (s / static_cast<double>(u.group().order())).real();
}

// Conjugation action on functions on G: (C(g) f)(x) = f(g^-1 x g).
UnitaryRep conjugation_rep(const GroupPtr& g) {
  std::vector<ComplexMatrix> mats;
  for (int h = 0; h < g->order(); ++h) {
    ComplexMatrix m = ComplexMatrix::Zero(g->order(), g->order());
    for (int x = 0; x < g->order(); ++x) m(g->conjugate(h, x), x) = 1.0;
    mats.push_back(m);
  }
  return UnitaryRep(g, mats);
}

}  // namespace

TEST_CASE("preset groups satisfy the axioms and have the right orders") {
  for (const char* name : {"Z1", "Z4", "S3", "D4", "Q8", "Z2xZ2", "Z3xS3"}) {
    const auto g = FiniteGroup::preset(name);
    // Re-validating through the public constructor checks associativity exhaustively.
    CHECK_NOTHROW(FiniteGroup(g.table_rows()));
  }
  CHECK(FiniteGroup::preset("S3").order() == 6);
  CHECK(FiniteGroup::preset("D4").order() == 8);
  CHECK(FiniteGroup::preset("Z2xZ2").order() == 4);
  CHECK_THROWS_AS(FiniteGroup::preset("A5"), InputError);
}

TEST_CASE("invalid tables are rejected") {
  CHECK_THROWS_AS(FiniteGroup({{0, 1}, {1, 1}}), InputError);  // not Latin
  CHECK_THROWS_AS(FiniteGroup({{0, 1}, {1}}), InputError);     // ragged
  // Latin square with identity 0 but non-associative (order 5 loop).
  CHECK_THROWS_AS(FiniteGroup({{0, 1, 2, 3, 4},
                               {1, 0, 3, 4, 2},
                               {2, 4, 0, 1, 3},
                               {3, 2, 4, 0, 1},
                               {4, 3, 1, 2, 0}}),
                  InputError);
}

TEST_CASE("dihedral labels and multiplication") {
  const auto s3 = FiniteGroup::symmetric3();
  const int r = s3.find("r"), s = s3.find("s");
  CHECK(r == 1);
  CHECK(s == 3);
  CHECK(s3.mul(s, r) == s3.mul(s3.inverse(r), s));  // s r = r^-1 s
  CHECK(s3.mul(s3.mul(s, r), s) == s3.inverse(r));  // s r s = r^-1
  CHECK(s3.element_order(r) == 3);
  CHECK_FALSE(s3.is_abelian());
}

TEST_CASE("conjugacy classes") {
  CHECK(conjugacy_classes(FiniteGroup::cyclic(4)).count() == 4);
  CHECK(conjugacy_classes(FiniteGroup::symmetric3()).count() == 3);
  CHECK(conjugacy_classes(FiniteGroup::quaternion()).count() == 5);
  for (const char* name : {"Z4", "S3", "D4", "Q8", "D5", "Z2xS3"}) {
    const auto g = FiniteGroup::preset(name);
    const auto cc = conjugacy_classes(g);
    CHECK(cc.count() == class_count_by_commuting_pairs(g));
    for (int x = 0; x < g.order(); ++x)
      for (int h = 0; h < g.order(); ++h)
        CHECK(cc.class_of[static_cast<std::size_t>(g.conjugate(h, x))] == cc.class_of[static_cast<std::size_t>(x)]);
  }
}

TEST_CASE("class count equals rank of the averaged conjugation representation") {
  for (const char* name : {"Z4", "S3", "D4", "Q8"}) {
    const auto g = make(FiniteGroup::preset(name));
    CHECK(projector_rank(average_projector(conjugation_rep(g))) == conjugacy_classes(*g).count());
  }
}

TEST_CASE("average projector examples") {
  const auto s3 = make(FiniteGroup::symmetric3());
  CHECK((average_projector(trivial_rep(s3)).matrix() - ComplexMatrix::Identity(1, 1)).norm() < 1e-15);

  for (int n : {2, 3, 5}) {
    const auto zn = make(FiniteGroup::cyclic(n));
    const auto p = average_projector(regular_rep(zn));
    const ComplexMatrix expected = ComplexMatrix::Constant(n, n, 1.0 / n);
    CHECK((p.matrix() - expected).norm() < 1e-14);
    CHECK(projector_rank(p) == 1);
  }

  const auto irreps = builtin_irreps(s3);
  REQUIRE(irreps.size() == 3);
  CHECK(irreps[2].dim() == 2);
  CHECK(average_projector(irreps[2]).matrix().norm() < 1e-14);
}

TEST_CASE("property: projector rank equals average trace for every built-in rep") {
  for (const char* name : {"Z4", "S3", "D4", "Q8", "Z2xZ2"}) {
    const auto g = make(FiniteGroup::preset(name));
    std::vector<UnitaryRep> reps = builtin_irreps(g);
    reps.push_back(regular_rep(g));
    for (const auto& u : reps) {
      const auto p = average_projector(u);
      CHECK((p.matrix() * p.matrix() - p.matrix()).norm() <= 1e-10);
      const double tr = avg_trace(u);
      CHECK(std::abs(tr - std::round(tr)) < 1e-6);
      CHECK(projector_rank(p) == static_cast<int>(std::lround(tr)));
    }
  }
}

TEST_CASE("tensor representations") {
  const auto z2 = make(FiniteGroup::cyclic(2));
  const auto reg = regular_rep(z2);
  const auto rr = tensor_rep(reg, reg);
  CHECK(rr.dim() == 4);
  // <chi_reg^2, 1> = (4 + 0) / 2 = 2
  CHECK(projector_rank(average_projector(rr)) == 2);

  const auto s3 = make(FiniteGroup::symmetric3());
  const auto std2 = builtin_irreps(s3)[2];
  // <chi^2, 1> = (4 + 2*1 + 3*0) / 6 = 1
  CHECK(projector_rank(average_projector(tensor_rep(std2, std2))) == 1);

  const auto triv_v = tensor_rep(trivial_rep(s3), std2);
  for (int x = 0; x < 6; ++x) CHECK((triv_v(x) - std2(x)).norm() < 1e-15);

  CHECK_THROWS_AS(tensor_rep(reg, std2), DimensionMismatch);
}

TEST_CASE("quotient groups") {
  const auto z4 = make(FiniteGroup::cyclic(4));
  const auto q1 = quotient_group(SubgroupEmbedding::from_elements(z4, {0, 2}));
  CHECK(q1.group->order() == 2);

  const auto s3 = make(FiniteGroup::symmetric3());
  const auto q2 = quotient_group(SubgroupEmbedding::from_elements(s3, {0, 1, 2}));
  CHECK(q2.group->order() == 2);
  CHECK(q2.group->is_abelian());

  const auto d4 = make(FiniteGroup::dihedral(4));
  const auto q3 = quotient_group(SubgroupEmbedding::from_elements(d4, {0, 1, 2, 3}));
  CHECK(q3.group->order() == 2);

  for (const auto* q : {&q1, &q2, &q3}) {
    const auto& ambient = q == &q1 ? *z4 : (q == &q2 ? *s3 : *d4);
    std::set<int> image(q->tau.begin(), q->tau.end());
    CHECK(static_cast<int>(image.size()) == q->group->order());
    for (int x = 0; x < ambient.order(); ++x)
      for (int y = 0; y < ambient.order(); ++y)
        CHECK(q->tau[static_cast<std::size_t>(ambient.mul(x, y))] ==
              q->group->mul(q->tau[static_cast<std::size_t>(x)], q->tau[static_cast<std::size_t>(y)]));
  }
}

TEST_CASE("quotient by a non-normal subgroup fails") {
  const auto s3 = make(FiniteGroup::symmetric3());
  const auto emb = SubgroupEmbedding::from_elements(s3, {0, s3->find("s")});
  CHECK_FALSE(emb.is_normal());
  CHECK_THROWS_AS(quotient_group(emb), InputError);
  CHECK_THROWS_AS(SubgroupEmbedding::from_elements(s3, {0, 1}), InputError);  // not closed
}

TEST_CASE("characters of abelian groups") {
  const auto z2 = make(FiniteGroup::cyclic(2));
  const auto c2 = characters_of_abelian(z2);
  REQUIRE(c2.size() == 2);
  CHECK(std::abs(c2[0](1)(0, 0) - 1.0) < 1e-15);
  CHECK(std::abs(c2[1](1)(0, 0) + 1.0) < 1e-15);

  const auto z3 = make(FiniteGroup::cyclic(3));
  const auto c3 = characters_of_abelian(z3);
  const Complex w = std::polar(1.0, 2.0 * std::numbers::pi / 3.0);
  REQUIRE(c3.size() == 3);
  CHECK(std::abs(c3[0](1)(0, 0) - 1.0) < 1e-15);
  CHECK(std::abs(c3[1](1)(0, 0) - w) < 1e-15);
  CHECK(std::abs(c3[2](1)(0, 0) - w * w) < 1e-15);

  const auto v4 = make(FiniteGroup::preset("Z2xZ2"));
  const auto c4 = characters_of_abelian(v4);
  REQUIRE(c4.size() == 4);
  std::set<std::vector<int>> signs;
  for (const auto& chi : c4) {
    std::vector<int> s;
    for (int x = 0; x < 4; ++x) {
      const Complex v = chi(x)(0, 0);
      CHECK(std::abs(v.imag()) < 1e-15);
      CHECK(std::abs(std::abs(v.real()) - 1.0) < 1e-15);
      s.push_back(v.real() > 0 ? 1 : -1);
    }
    signs.insert(s);
  }
  CHECK(signs.size() == 4);

  CHECK_THROWS_AS(characters_of_abelian(make(FiniteGroup::symmetric3())), InputError);
}

TEST_CASE("property: characters are orthonormal under the group average") {
  for (const char* name : {"Z1", "Z6", "Z2xZ2", "Z2xZ4", "Z3xZ3"}) {
    const auto g = make(FiniteGroup::preset(name));
    const auto chars = characters_of_abelian(g);
    REQUIRE(static_cast<int>(chars.size()) == g->order());
    ComplexMatrix gram(g->order(), g->order());
    for (std::size_t a = 0; a < chars.size(); ++a)
      for (std::size_t b = 0; b < chars.size(); ++b)
        gram(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) =
            chars[a].character().dot(chars[b].character()) / static_cast<double>(g->order());
    CHECK((gram - ComplexMatrix::Identity(g->order(), g->order())).norm() < 1e-12);
  }
}

TEST_CASE("built-in irreps satisfy the sum-of-squares law") {
  for (const char* name : {"Z4", "S3", "D4", "D5", "Q8", "Z2xS3"}) {
    const auto g = make(FiniteGroup::preset(name));
    int sum = 0;
    for (const auto& rho : builtin_irreps(g)) {
      sum += static_cast<int>(rho.dim() * rho.dim());
      // Irreducible: <chi, chi> = 1.
      const auto chi = rho.character();
      CHECK(std::abs(chi.squaredNorm() / g->order() - 1.0) < 1e-12);
    }
    CHECK(sum == g->order());
  }
}

TEST_CASE("projective matrices are not accepted as a UnitaryRep") {
  const auto v4 = make(FiniteGroup::preset("Z2xZ2"));
  // (g,h) -> index 2g + h; sigma_x on (1,0), sigma_z on (0,1).
  std::vector<ComplexMatrix> mats = {ComplexMatrix::Identity(2, 2), pauli_z(), pauli_x(), pauli_x() * pauli_z()};
  CHECK_THROWS_AS(UnitaryRep(v4, mats), ValidationError);
}
