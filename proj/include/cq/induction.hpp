#pragma once

// Rieffel induction at finite dimension.
//
// Inner products are antilinear in the first argument. For a Hilbert module L
// over B and a representation pi of B on H_rho, the form on L (x) H_rho is
//   (psi (x) v, phi (x) w)_0 = (v, pi(<psi, phi>_B) w),
// so its Gram matrix in the product basis (index a * dim_rho + i) has blocks
// G[a, b] = pi(<e_a, e_b>_B).

#include <memory>
#include <optional>
#include <random>
#include <vector>

#include "cq/groups.hpp"
#include "cq/linalg.hpp"

namespace cq {

/// Finite-dimensional C*-algebra with a multiplicative basis: the product of two
/// basis elements is another basis element or zero, and * permutes the basis.
/// Covers direct sums of matrix blocks (matrix units) and group algebras.
class FiniteCStarAlgebra {
 public:
  static std::shared_ptr<const FiniteCStarAlgebra> blocks(std::vector<int> block_dims);
  static std::shared_ptr<const FiniteCStarAlgebra> group_algebra(GroupPtr g);

  int dim() const noexcept { return dim_; }
  std::optional<int> product(int i, int j) const;
  int star(int i) const { return star_.at(static_cast<std::size_t>(i)); }
  /// Block sizes (empty for a group algebra).
  const std::vector<int>& block_dims() const noexcept { return block_dims_; }
  /// Underlying group (null for a block algebra).
  const GroupPtr& group() const noexcept { return group_; }
  /// Basis index of the matrix unit e_{ij} in block k.
  int matrix_unit(int k, int i, int j) const;
  /// Coefficients of the unit element.
  ComplexVector unit() const;

 private:
  FiniteCStarAlgebra() = default;

  int dim_ = 0;
  std::vector<int> block_dims_;
  std::vector<int> block_offset_;
  GroupPtr group_;
  std::vector<int> prod_;  // dim x dim, -1 for zero
  std::vector<int> star_;
};

using AlgebraPtr = std::shared_ptr<const FiniteCStarAlgebra>;

/// Element sum_i c_i b_i.
class AlgebraElement {
 public:
  AlgebraElement(AlgebraPtr algebra, ComplexVector coeffs);
  static AlgebraElement zero(const AlgebraPtr& algebra);
  static AlgebraElement basis(const AlgebraPtr& algebra, int i, Complex c = 1.0);

  const AlgebraPtr& algebra() const noexcept { return algebra_; }
  const ComplexVector& coeffs() const noexcept { return coeffs_; }

  AlgebraElement operator*(const AlgebraElement& o) const;
  AlgebraElement operator+(const AlgebraElement& o) const;
  AlgebraElement operator-(const AlgebraElement& o) const;
  AlgebraElement adjoint() const;
  /// Left-regular matrix; a *-representation because the basis is orthonormal
  /// for the canonical trace.
  ComplexMatrix left_regular() const;
  /// Spectral positivity through the (faithful) left-regular representation.
  bool is_positive(double rel_tol = Tolerances{}.positivity) const;

 private:
  AlgebraPtr algebra_;
  ComplexVector coeffs_;
};

class AlgebraRepresentation {
 public:
  /// pi(b_i) = matrices[i]; checked multiplicative and *-preserving within `tol`.
  AlgebraRepresentation(AlgebraPtr algebra, std::vector<ComplexMatrix> matrices, double tol = 1e-10);
  /// Group algebra representation x -> U(x).
  static AlgebraRepresentation from_unitary_rep(const AlgebraPtr& algebra, const UnitaryRep& u);
  /// Block algebra acting by m_k copies of its k-th block.
  static AlgebraRepresentation block_weights(const AlgebraPtr& algebra, const std::vector<int>& multiplicities);

  const AlgebraPtr& algebra() const noexcept { return algebra_; }
  Eigen::Index dim() const noexcept { return dim_; }
  const ComplexMatrix& operator()(int i) const { return matrices_.at(static_cast<std::size_t>(i)); }
  ComplexMatrix apply(const AlgebraElement& a) const;

 private:
  AlgebraPtr algebra_;
  std::vector<ComplexMatrix> matrices_;
  Eigen::Index dim_ = 0;
};

/// Right Hilbert module on C^n over B.
///   inner[a * n + b] = <e_a, e_b>_B
///   action[i] : e_a . b_i = sum_c action[i](c, a) e_c
class HilbertModule {
 public:
  /// Validates hermitian symmetry, B-linearity of the inner product in its second
  /// argument, and positivity (the matrix [L(<e_a, e_b>)] is PSD).
  HilbertModule(AlgebraPtr algebra, Eigen::Index dim, std::vector<ComplexVector> inner,
                std::vector<ComplexMatrix> action);
  /// H over C*(G) with <psi, phi> = sum_x (psi^dag U(x) phi / |G|) x and psi . z = U(z^-1) psi.
  static HilbertModule group_module(const UnitaryRep& u, const AlgebraPtr& group_algebra);
  /// C^n over C with the given positive semidefinite Gram matrix.
  static HilbertModule over_scalars(const ComplexMatrix& gram);

  const AlgebraPtr& algebra() const noexcept { return algebra_; }
  Eigen::Index dim() const noexcept { return dim_; }
  AlgebraElement inner(const ComplexVector& psi, const ComplexVector& phi) const;
  const ComplexVector& inner_basis(Eigen::Index a, Eigen::Index b) const {
    return inner_.at(static_cast<std::size_t>(a * dim_ + b));
  }
  const std::vector<ComplexMatrix>& action() const noexcept { return action_; }

 private:
  AlgebraPtr algebra_;
  Eigen::Index dim_;
  std::vector<ComplexVector> inner_;
  std::vector<ComplexMatrix> action_;
};

struct InducedOperator {
  ComplexMatrix matrix;  // on the induced space
  double residual = 0.0;  // ||pi(A) V - V A~||
};

struct InductionResult {
  HermitianOperator gram;
  Eigen::Index module_dim = 0;  // dim L
  Eigen::Index rho_dim = 1;     // dim H_rho
  RealVector kept_eigenvalues;  // ascending
  ComplexMatrix kept_vectors;   // W, columns
  ComplexMatrix v;              // Sigma^{1/2} W^dag
  Eigen::Index induced_dim = 0;
  double null_threshold = 0.0;    // absolute eigenvalue cutoff used
  double min_gram_eigenvalue = 0.0;

  /// pi(A) for an operator on L (x) H_rho; throws ValidationError("weak_observable")
  /// when the intertwining residual exceeds 1e-9 * max(1, ||A||).
  InducedOperator induce_full(const ComplexMatrix& a_tilde) const;
  /// pi(A) for an operator A on L, acting as A (x) I.
  InducedOperator induce(const ComplexMatrix& a) const;
  /// max |Psi^dag G Phi - (V Psi)^dag (V Phi)| / max(1, ||G||) over random pairs.
  double isometry_residual(std::mt19937_64& rng, int samples = 100) const;
};

/// Core of every induction: eigendecomposition of a PSD Gram matrix, null cutoff
/// `null_rel * lambda_max`, V = Sigma^{1/2} W^dag. Throws ValidationError("gram_psd")
/// if the Gram matrix has eigenvalues below -psd_rel * lambda_max.
InductionResult induce_from_gram(const HermitianOperator& gram, Eigen::Index module_dim, Eigen::Index rho_dim,
                                 const Tolerances& tol = {});

HermitianOperator zero_form_gram(const HilbertModule& module, const AlgebraRepresentation& rho);

struct Induction {
  InductionResult result;
  std::vector<InducedOperator> operators;
};
Induction induce(const HilbertModule& module, const AlgebraRepresentation& rho,
                 const std::vector<ComplexMatrix>& weak_ops = {}, const Tolerances& tol = {});

/// ||(A (x) I)^dag G - G (A (x) I)|| <= 1e-9 ||G|| ||A||; dim rho is inferred from the shapes.
bool is_weak_observable_q(const ComplexMatrix& a, const HermitianOperator& gram);

/// Gram = (1/|G|) sum_x U(x) (x) U_rho(x), then induce_from_gram.
InductionResult group_average_induction(const UnitaryRep& u, const UnitaryRep& u_rho, const Tolerances& tol = {});

/// Character oracle for the induced dimension: (1/|G|) sum_x chi_U(x) chi_rho(x).
double induced_dimension_oracle(const UnitaryRep& u, const UnitaryRep& u_rho);

struct StagesReport {
  InductionResult stage1;     // from the trivial rep of G0
  UnitaryRep residual;        // G/G0 acting on the stage-1 space
  double residual_defect = 0;  // spread of V1 U(x) V1^+ over coset representatives
  InductionResult stage2;     // from theta on the residual action
  InductionResult direct;     // from theta o tau on G
  /// Largest spectral mismatch over the equivariant test observables.
  double spectral_mismatch = 0;
  bool equivalent = false;  // equal dims and spectral_mismatch <= 1e-9
};

/// Induction first from the trivial rep of the normal subgroup G0, then from the
/// representation `theta` of G/G0 (given on quotient_group(embedding).group);
/// compared against direct induction from theta o tau.
StagesReport induction_in_stages(const UnitaryRep& u, const SubgroupEmbedding& embedding, const UnitaryRep& theta,
                                 int test_observables = 3, std::uint64_t seed = 1);

}  // namespace cq
