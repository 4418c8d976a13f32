#pragma once

// Finite-dimensional operator algebra: Jordan and Lie products on Hermitian
// matrices, spectral norms, positivity tests and the identities tying them
// together.

#include <complex>
#include <cstdint>
#include <random>

#include <Eigen/Dense>

namespace cq {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

/// Tolerances shared across modules. `scaled` multiplies every entry, which
/// is what the CLI's global `--tol` factor does.
struct Tolerances {
  double hermiticity = 1e-9;  // relative to the operator norm
  double positivity = 1e-9;   // relative to the largest eigenvalue
  double rep = 1e-10;         // homomorphism / unitarity residuals
  double null_space = 1e-10;  // eigenvalue cutoff relative to lambda_max
  double rank = 1e-10;        // singular-value cutoff relative to sigma_max

  Tolerances scaled(double factor) const {
    return {hermiticity * factor, positivity * factor, rep * factor, null_space * factor,
            rank * factor};
  }
};

/// Square complex matrix that is Hermitian within a relative tolerance.
/// The stored matrix is the exact Hermitian part of the input.
class HermitianOperator {
 public:
  explicit HermitianOperator(const ComplexMatrix& m, double rel_tol = Tolerances{}.hermiticity);

  static HermitianOperator identity(Eigen::Index n);
  static HermitianOperator zero(Eigen::Index n);
  static HermitianOperator diagonal(const RealVector& d);

  const ComplexMatrix& matrix() const noexcept { return m_; }
  Eigen::Index dim() const noexcept { return m_.rows(); }

 private:
  ComplexMatrix m_;
};

/// Deformation parameter of the quantum Lie bracket {A,B} = i(AB - BA)/hbar.
class ScaledBracketContext {
 public:
  explicit ScaledBracketContext(double hbar);

  double hbar() const noexcept { return hbar_; }
  /// Constant k in (A o B) o C - A o (B o C) = k {{A,C},B}.
  double jordan_lie_constant() const noexcept { return hbar_ * hbar_ / 4.0; }

 private:
  double hbar_;
};

HermitianOperator jordan(const HermitianOperator& a, const HermitianOperator& b);
HermitianOperator lie_bracket(const HermitianOperator& a, const HermitianOperator& b,
                              const ScaledBracketContext& ctx);

/// ||(A o B) o C - A o (B o C) - (hbar^2/4) {{A,C},B}||, zero up to rounding.
double associator_defect(const HermitianOperator& a, const HermitianOperator& b,
                         const HermitianOperator& c, const ScaledBracketContext& ctx);

/// ||A^2 + B^2|| - ||A||^2; nonnegative in any C*-algebra.
double jb_inequality_defect(const HermitianOperator& a, const HermitianOperator& b);

/// Largest singular value, from a Hermitian eigensolve of M^dagger M.
double operator_norm(const ComplexMatrix& m);

struct EigenDecomposition {
  RealVector values;     // ascending
  ComplexMatrix vectors;  // columns match `values`
};

/// Dense Hermitian eigensolve; eigenvalues ascending, deterministic.
EigenDecomposition eigh(const HermitianOperator& h);
RealVector eigenvalues(const HermitianOperator& h);

/// ||M - M^dagger|| <= rel_tol * max(1, ||M||).
bool is_hermitian(const ComplexMatrix& m, double rel_tol = Tolerances{}.hermiticity);
/// Smallest eigenvalue >= -rel_tol * max(1, ||H||).
bool is_positive(const HermitianOperator& h, double rel_tol = Tolerances{}.positivity);
/// Number of eigenvalues above 1/2; exact for matrices that are projectors up to rounding.
int projector_rank(const HermitianOperator& p);
bool is_unitary(const ComplexMatrix& m, double tol = Tolerances{}.rep);
bool all_finite(const ComplexMatrix& m);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Hermitian matrix with i.i.d. Gaussian real and imaginary parts, normalized
/// to operator norm `scale`.
HermitianOperator random_hermitian(Eigen::Index n, std::mt19937_64& rng, double scale = 1.0);
ComplexMatrix random_complex(Eigen::Index rows, Eigen::Index cols, std::mt19937_64& rng);

ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();

}  // namespace cq
