#pragma once

// Linear symplectic reduction.
//
// Coordinates z = (q, p) on T*R^n, omega = [[0, I], [-I, 0]], Poisson tensor
// Pi = (omega^{-1})^T so that {q_i, p_j} = delta_ij. Momentum maps are affine,
// J(z) = A z + b, with values in an abelian R^k.

#include <optional>
#include <vector>

#include "cq/linalg.hpp"

namespace cq {

class SymplecticVectorSpace {
 public:
  /// Skew and nondegenerate (smallest singular value > 1e-10 * largest).
  /// Dimension 0 is allowed and plays the role of a point.
  explicit SymplecticVectorSpace(RealMatrix omega);
  static SymplecticVectorSpace canonical(int n);  // T*R^n
  static SymplecticVectorSpace point();

  Eigen::Index dim() const noexcept { return omega_.rows(); }
  const RealMatrix& omega() const noexcept { return omega_; }
  /// {f, g} = grad f^T Pi grad g.
  const RealMatrix& poisson_tensor() const noexcept { return pi_; }

 private:
  RealMatrix omega_;
  RealMatrix pi_;
};

class LinearRealization {
 public:
  /// J(z) = A z + b. Rejects A Pi A^T != 0 (components must Poisson-commute).
  LinearRealization(SymplecticVectorSpace source, RealMatrix a, RealVector b);
  /// The point realization {0} -> R^k with value `level` (default 0).
  static LinearRealization point(Eigen::Index k, const RealVector& level = RealVector());
  /// Momentum map of translations along the columns of `directions` (n x k) on T*R^n:
  /// J_i = sum_a directions(a, i) p_a.
  static LinearRealization translations(int n, const RealMatrix& directions);

  const SymplecticVectorSpace& source() const noexcept { return source_; }
  const RealMatrix& a() const noexcept { return a_; }
  const RealVector& b() const noexcept { return b_; }
  Eigen::Index target_dim() const noexcept { return a_.rows(); }

 private:
  SymplecticVectorSpace source_;
  RealMatrix a_;
  RealVector b_;
};

/// Affine subspace offset + span(basis) of S x S_rho, basis orthonormal.
struct AffineSubspace {
  RealVector offset;
  RealMatrix basis;
  Eigen::Index dim() const noexcept { return basis.cols(); }
};

struct ReducedSpace {
  Eigen::Index source_dim = 0;  // dim S; the ambient space is S x S_rho
  Eigen::Index ambient_dim = 0;
  AffineSubspace constraint;
  RealMatrix radical_basis;  // ambient vectors, orthonormal
  RealMatrix chart;          // ambient vectors in C spanning a complement of the radical
  Eigen::Index quotient_dim = 0;
  RealMatrix reduced_omega;  // chart^T Omega chart
  /// Singular values of the restricted form, descending, for rank audits.
  std::vector<double> form_singular_values;
};

/// C = {(x, y) | J(x) = J_rho(y)}. Throws InputError if empty.
AffineSubspace fiber_product(const LinearRealization& j, const LinearRealization& j_rho);

/// Quotient of C by the null foliation of omega (+) (-omega_rho) restricted to C.
ReducedSpace reduce(const LinearRealization& j, const LinearRealization& j_rho);

/// J^{-1}(0) / orbits, computed from the orbit directions Pi A^T (independent of reduce()).
ReducedSpace marsden_weinstein(const LinearRealization& j);

/// Residual of the symplectic congruence between two reductions of the same ambient
/// space: the chart of `a` is written in the chart of `b` modulo the radical of `b`
/// (map M), returning max(|solve residual|, ||M^T omega_b M - omega_a||).
double congruence_residual(const ReducedSpace& a, const ReducedSpace& b);

/// Pushes a second realization J2 on S down to the chart of `reduced`.
/// Throws ValidationError("descends") if J2 is not constant along the radical.
LinearRealization descend(const LinearRealization& j2, const ReducedSpace& reduced);

/// Expresses a reduction of the quotient (`second`, taken of descend(...) against a
/// point) in the coordinates of the original ambient space.
ReducedSpace compose_stages(const ReducedSpace& first, const ReducedSpace& second);

/// f(z) = z^T Q z + l^T z + c on S.
class QuadraticObservable {
 public:
  QuadraticObservable(RealMatrix q, RealVector l, double c);
  static QuadraticObservable constant(Eigen::Index n, double c);
  static QuadraticObservable linear(const RealVector& l, double c = 0.0);
  /// Component i of an affine realization.
  static QuadraticObservable component(const LinearRealization& j, Eigen::Index i);

  Eigen::Index dim() const noexcept { return l_.size(); }
  const RealMatrix& q() const noexcept { return q_; }
  const RealVector& l() const noexcept { return l_; }
  double c() const noexcept { return c_; }
  double evaluate(const RealVector& z) const;

 private:
  RealMatrix q_;
  RealVector l_;
  double c_;
};

/// {J_i, f} restricted to C (for the given second realization, default point at 0)
/// vanishes identically for every i.
bool is_weak_observable(const QuadraticObservable& f, const LinearRealization& j,
                        const std::optional<LinearRealization>& j_rho = std::nullopt);

/// f(base + chart y) as a quadratic in the quotient coordinates y. Throws
/// ValidationError("constant_on_leaves") if f varies along the radical.
QuadraticObservable induce_classical(const QuadraticObservable& f, const ReducedSpace& reduced);

}  // namespace cq
