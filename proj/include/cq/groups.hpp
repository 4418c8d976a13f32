#pragma once

// Finite groups given by explicit multiplication tables, their unitary
// representations, and the averaging / quotient machinery built on them.

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "cq/linalg.hpp"

namespace cq {

/// Group on elements {0, ..., order-1} with a full multiplication table.
/// Construction verifies the group axioms exhaustively.
class FiniteGroup {
 public:
  enum class Family { Custom, Cyclic, Dihedral, Quaternion, Product };

  explicit FiniteGroup(std::vector<std::vector<int>> table, std::vector<std::string> labels = {},
                       std::string name = "custom");

  static FiniteGroup cyclic(int n);
  /// Dihedral group of order 2n; element k + n*f is r^k s^f.
  static FiniteGroup dihedral(int n);
  /// Q8 with elements 1, -1, i, -i, j, -j, k, -k in that order.
  static FiniteGroup quaternion();
  /// S3, realized as D3 (elements e, r, r2, s, rs, r2s).
  static FiniteGroup symmetric3();
  /// Element (g, h) has index g * |H| + h.
  static FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h);
  /// Parses "Z4", "D4", "Q8", "S3" and products such as "Z2xZ2".
  static FiniteGroup preset(std::string_view name);

  int order() const noexcept { return order_; }
  int identity() const noexcept { return identity_; }
  int mul(int a, int b) const { return table_[static_cast<std::size_t>(a * order_ + b)]; }
  int inverse(int a) const { return inverse_[static_cast<std::size_t>(a)]; }
  int conjugate(int g, int x) const { return mul(mul(g, x), inverse(g)); }  // g x g^-1
  int power(int a, int k) const;
  int element_order(int a) const;
  bool is_abelian() const;

  const std::string& name() const noexcept { return name_; }
  const std::string& label(int a) const { return labels_.at(static_cast<std::size_t>(a)); }
  /// Index of the element with the given label; throws InputError if absent.
  int find(std::string_view label) const;

  /// A generating set: preset generators, or a greedy choice for custom tables.
  const std::vector<int>& generators() const noexcept { return generators_; }

  Family family() const noexcept { return family_; }
  /// Family parameter: n for Z_n and D_n; unused otherwise.
  int family_parameter() const noexcept { return family_param_; }
  /// Factors of a direct product (empty otherwise).
  const std::vector<std::shared_ptr<const FiniteGroup>>& factors() const noexcept {
    return factors_;
  }

  std::vector<std::vector<int>> table_rows() const;
  bool same_table(const FiniteGroup& other) const { return table_ == other.table_; }

 private:
  struct Trusted {};
  FiniteGroup(Trusted, std::vector<int> flat, int order, std::vector<std::string> labels,
              std::string name);
  void finish_construction(bool check_associativity);

  int order_ = 0;
  int identity_ = 0;
  std::vector<int> table_;
  std::vector<int> inverse_;
  std::vector<std::string> labels_;
  std::vector<int> generators_;
  std::string name_;
  Family family_ = Family::Custom;
  int family_param_ = 0;
  std::vector<std::shared_ptr<const FiniteGroup>> factors_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// Unitary matrices U(x), one per group element, forming a homomorphism.
class UnitaryRep {
 public:
  UnitaryRep(GroupPtr group, std::vector<ComplexMatrix> matrices,
             double tol = Tolerances{}.rep);

  const FiniteGroup& group() const noexcept { return *group_; }
  const GroupPtr& group_ptr() const noexcept { return group_; }
  Eigen::Index dim() const noexcept { return dim_; }
  const ComplexMatrix& operator()(int x) const {
    return matrices_.at(static_cast<std::size_t>(x));
  }
  const std::vector<ComplexMatrix>& matrices() const noexcept { return matrices_; }
  /// chi(x) = trace U(x).
  ComplexVector character() const;

 private:
  GroupPtr group_;
  std::vector<ComplexMatrix> matrices_;
  Eigen::Index dim_ = 0;
};

/// max_{x,y} ||U(x)U(y) - U(xy)||, plus unitarity and U(e) = I defects.
double homomorphism_defect(const FiniteGroup& g, const std::vector<ComplexMatrix>& matrices);

UnitaryRep trivial_rep(const GroupPtr& g, Eigen::Index dim = 1);
/// Left regular representation: U(x) e_y = e_{xy}.
UnitaryRep regular_rep(const GroupPtr& g);

struct ConjugacyClasses {
  std::vector<int> class_of;          // element -> class index
  std::vector<int> representatives;   // smallest element of each class, ascending
  std::vector<std::vector<int>> members;

  int count() const noexcept { return static_cast<int>(representatives.size()); }
};

ConjugacyClasses conjugacy_classes(const FiniteGroup& g);

/// P = (1/|G|) sum_x U(x), the orthogonal projector onto the invariant vectors.
HermitianOperator average_projector(const UnitaryRep& u);

/// (U (x) V)(x) = U(x) (x) V(x); index of e_i (x) e_j is i * dim V + j.
UnitaryRep tensor_rep(const UnitaryRep& u, const UnitaryRep& v);

/// Injective homomorphism subgroup -> ambient.
class SubgroupEmbedding {
 public:
  SubgroupEmbedding(GroupPtr subgroup, GroupPtr ambient, std::vector<int> inclusion);
  /// Subgroup formed by a closed subset of the ambient group's elements.
  static SubgroupEmbedding from_elements(const GroupPtr& ambient, std::vector<int> elements);

  const GroupPtr& subgroup() const noexcept { return subgroup_; }
  const GroupPtr& ambient() const noexcept { return ambient_; }
  const std::vector<int>& inclusion() const noexcept { return inclusion_; }
  bool is_normal() const;

 private:
  GroupPtr subgroup_;
  GroupPtr ambient_;
  std::vector<int> inclusion_;
};

struct QuotientGroup {
  GroupPtr group;
  std::vector<int> tau;  // ambient element -> coset index
};

/// Cosets of a normal subgroup, numbered by first appearance in element order.
QuotientGroup quotient_group(const SubgroupEmbedding& emb);

/// All |G| characters of an abelian group, as one-dimensional reps.
/// Ordering: lexicographic in the exponents assigned to `generators()`.
std::vector<UnitaryRep> characters_of_abelian(const GroupPtr& g);

/// Irreducible unitary reps shipped with the presets (cyclic, dihedral, Q8,
/// and any abelian group through its characters).
std::vector<UnitaryRep> builtin_irreps(const GroupPtr& g);

/// U o tau: pulls a representation of G/G0 back to G.
UnitaryRep pullback(const UnitaryRep& quotient_rep, const QuotientGroup& q, const GroupPtr& ambient);

}  // namespace cq
