#include "cq/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "cq/errors.hpp"

namespace cq {

namespace {

void require_same_dim(const HermitianOperator& a, const HermitianOperator& b, const char* op) {
  if (a.dim() != b.dim()) {
    std::ostringstream msg;
    msg << op << ": dimension mismatch (" << a.dim() << " vs " << b.dim() << ")";
    throw DimensionMismatch(msg.str());
  }
}

}  // namespace

HermitianOperator::HermitianOperator(const ComplexMatrix& m, double rel_tol) {
  if (m.rows() != m.cols()) {
    throw DimensionMismatch("HermitianOperator: matrix is not square");
  }
  if (!all_finite(m)) {
    throw InputError("HermitianOperator: non-finite entries");
  }
  if (!is_hermitian(m, rel_tol)) {
    throw ValidationError("hermiticity", "||M - M^dagger|| exceeds tolerance");
  }
  m_ = 0.5 * (m + m.adjoint());
}

HermitianOperator HermitianOperator::identity(Eigen::Index n) {
  return HermitianOperator(ComplexMatrix::Identity(n, n));
}

HermitianOperator HermitianOperator::zero(Eigen::Index n) {
  return HermitianOperator(ComplexMatrix::Zero(n, n));
}

HermitianOperator HermitianOperator::diagonal(const RealVector& d) {
  return HermitianOperator(d.cast<Complex>().asDiagonal().toDenseMatrix());
}

ScaledBracketContext::ScaledBracketContext(double hbar) : hbar_(hbar) {
  if (!(hbar > 0.0) || !std::isfinite(hbar)) {
    throw InputError("ScaledBracketContext: hbar must be positive and finite");
  }
}

HermitianOperator jordan(const HermitianOperator& a, const HermitianOperator& b) {
  require_same_dim(a, b, "jordan");
  const ComplexMatrix ab = a.matrix() * b.matrix();
  return HermitianOperator(0.5 * (ab + ab.adjoint()));
}

HermitianOperator lie_bracket(const HermitianOperator& a, const HermitianOperator& b,
                              const ScaledBracketContext& ctx) {
  require_same_dim(a, b, "lie_bracket");
  const ComplexMatrix ab = a.matrix() * b.matrix();
  // i(AB - BA) = i(AB - (AB)^dagger) for Hermitian A, B.
  return HermitianOperator((Complex(0.0, 1.0) / ctx.hbar()) * (ab - ab.adjoint()));
}

double associator_defect(const HermitianOperator& a, const HermitianOperator& b,
                         const HermitianOperator& c, const ScaledBracketContext& ctx) {
  require_same_dim(a, b, "associator_defect");
  require_same_dim(a, c, "associator_defect");
  const ComplexMatrix lhs =
      jordan(jordan(a, b), c).matrix() - jordan(a, jordan(b, c)).matrix();
  const ComplexMatrix rhs =
      ctx.jordan_lie_constant() * lie_bracket(lie_bracket(a, c, ctx), b, ctx).matrix();
  return operator_norm(lhs - rhs);
}

double jb_inequality_defect(const HermitianOperator& a, const HermitianOperator& b) {
  require_same_dim(a, b, "jb_inequality_defect");
  const double na = operator_norm(a.matrix());
  const ComplexMatrix sum = a.matrix() * a.matrix() + b.matrix() * b.matrix();
  return operator_norm(sum) - na * na;
}

double operator_norm(const ComplexMatrix& m) {
  if (m.size() == 0) return 0.0;
  const ComplexMatrix gram = m.cols() <= m.rows() ? ComplexMatrix(m.adjoint() * m)
                                                  : ComplexMatrix(m * m.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(gram, Eigen::EigenvaluesOnly);
  return std::sqrt(std::max(0.0, solver.eigenvalues().maxCoeff()));
}

namespace {

// Eigen's complex QR iteration occasionally stalls on highly degenerate
// matrices with exact structural zeros. Real input goes to the real solver;
// a stalled complex solve is retried after a fixed unitary rotation.
EigenDecomposition solve_hermitian(const ComplexMatrix& m, bool vectors) {
  const int options = vectors ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly;
  if (m.imag().cwiseAbs().maxCoeff() == 0.0) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> real(m.real(), options);
    if (real.info() == Eigen::Success)
      return {real.eigenvalues(), vectors ? ComplexMatrix(real.eigenvectors().cast<Complex>()) : ComplexMatrix()};
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(m, options);
  if (solver.info() == Eigen::Success)
    return {solver.eigenvalues(), vectors ? ComplexMatrix(solver.eigenvectors()) : ComplexMatrix()};
  std::mt19937_64 rng(0x5eed);
  const ComplexMatrix q = Eigen::HouseholderQR<ComplexMatrix>(random_complex(m.rows(), m.rows(), rng)).householderQ();
  const ComplexMatrix rotated = q.adjoint() * m * q;
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> retry(0.5 * (rotated + rotated.adjoint()), options);
  if (retry.info() != Eigen::Success) throw ValidationError("eigensolver", "Hermitian eigensolve did not converge");
  return {retry.eigenvalues(), vectors ? ComplexMatrix(q * retry.eigenvectors()) : ComplexMatrix()};
}

}  // namespace

EigenDecomposition eigh(const HermitianOperator& h) {
  if (h.dim() == 0) return {RealVector(0), ComplexMatrix(0, 0)};
  return solve_hermitian(h.matrix(), true);
}

RealVector eigenvalues(const HermitianOperator& h) {
  if (h.dim() == 0) return RealVector(0);
  return solve_hermitian(h.matrix(), false).values;
}

bool is_hermitian(const ComplexMatrix& m, double rel_tol) {
  if (m.rows() != m.cols()) return false;
  if (m.size() == 0) return true;
  const ComplexMatrix diff = m - m.adjoint();
  // ||D||_2 <= ||D||_F and ||M||_2 >= ||M||_F / sqrt(n): cheap sufficient test first.
  const double norm_lower = m.norm() / std::sqrt(static_cast<double>(m.rows()));
  if (diff.norm() <= rel_tol * std::max(1.0, norm_lower)) return true;
  return operator_norm(diff) <= rel_tol * std::max(1.0, operator_norm(m));
}

bool is_positive(const HermitianOperator& h, double rel_tol) {
  if (h.dim() == 0) return true;
  const RealVector ev = eigenvalues(h);
  const double scale = std::max(1.0, ev.cwiseAbs().maxCoeff());
  return ev.minCoeff() >= -rel_tol * scale;
}

int projector_rank(const HermitianOperator& p) {
  const RealVector ev = eigenvalues(p);
  return static_cast<int>((ev.array() > 0.5).count());
}

bool is_unitary(const ComplexMatrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  const ComplexMatrix defect = m.adjoint() * m - ComplexMatrix::Identity(m.rows(), m.cols());
  return defect.cwiseAbs().maxCoeff() <= tol * std::max<double>(1.0, static_cast<double>(m.rows()));
}

bool all_finite(const ComplexMatrix& m) {
  return m.real().allFinite() && m.imag().allFinite();
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

ComplexMatrix random_complex(Eigen::Index rows, Eigen::Index cols, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexMatrix m(rows, cols);
  // Column-major fill order keeps sequences reproducible across Eigen versions.
  for (Eigen::Index j = 0; j < cols; ++j) {
    for (Eigen::Index i = 0; i < rows; ++i) {
      const double re = normal(rng);
      const double im = normal(rng);
      m(i, j) = Complex(re, im);
    }
  }
  return m;
}

HermitianOperator random_hermitian(Eigen::Index n, std::mt19937_64& rng, double scale) {
  const ComplexMatrix g = random_complex(n, n, rng);
  ComplexMatrix h = 0.5 * (g + g.adjoint());
  const double norm = operator_norm(h);
  if (norm > 0.0) h *= scale / norm;
  return HermitianOperator(h);
}

ComplexMatrix pauli_x() {
  ComplexMatrix m(2, 2);
  m << 0.0, 1.0, 1.0, 0.0;
  return m;
}

ComplexMatrix pauli_y() {
  ComplexMatrix m(2, 2);
  m << 0.0, Complex(0.0, -1.0), Complex(0.0, 1.0), 0.0;
  return m;
}

ComplexMatrix pauli_z() {
  ComplexMatrix m(2, 2);
  m << 1.0, 0.0, 0.0, -1.0;
  return m;
}

}  // namespace cq
