#include "cq/reduction.hpp"

#include <cmath>
#include <limits>

#include "cq/errors.hpp"

namespace cq {

namespace {

constexpr double kRankCut = 1e-10;

struct Svd {
  RealMatrix u, v;
  RealVector s;
  Eigen::Index rank = 0;
};

// Singular values at or below rel * max(sigma_max, reference) count as zero; the
// reference keeps an all-noise matrix from being promoted to full rank.
Svd svd(const RealMatrix& m, double reference = 0.0, double rel = kRankCut) {
  Svd out;
  if (m.rows() == 0 || m.cols() == 0) {
    out.u = RealMatrix::Identity(m.rows(), m.rows());
    out.v = RealMatrix::Identity(m.cols(), m.cols());
    out.s = RealVector(0);
    return out;
  }
  Eigen::JacobiSVD<RealMatrix> solver(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  out.u = solver.matrixU();
  out.v = solver.matrixV();
  out.s = solver.singularValues();
  const double cut = rel * std::max(out.s(0), reference);
  for (Eigen::Index i = 0; i < out.s.size(); ++i)
    if (out.s(i) > cut && out.s(i) > 0.0) ++out.rank;
  return out;
}

RealMatrix null_space(const RealMatrix& m) {
  const Svd d = svd(m);
  return d.v.rightCols(m.cols() - d.rank);
}

RealMatrix range(const RealMatrix& m, double reference = 0.0) {
  const Svd d = svd(m, reference);
  return d.u.leftCols(d.rank);
}

// Minimum-norm solution of m x = rhs; nullopt if the system is inconsistent.
std::optional<RealVector> solve_min_norm(const RealMatrix& m, const RealVector& rhs) {
  RealVector x = RealVector::Zero(m.cols());
  const Svd d = svd(m);
  for (Eigen::Index i = 0; i < d.rank; ++i) x += d.v.col(i) * (d.u.col(i).dot(rhs) / d.s(i));
  const double scale = std::max(1.0, rhs.norm());
  if ((m * x - rhs).norm() > 1e-9 * scale) return std::nullopt;
  return x;
}

RealMatrix block_diag(const RealMatrix& a, const RealMatrix& b) {
  RealMatrix out = RealMatrix::Zero(a.rows() + b.rows(), a.cols() + b.cols());
  out.topLeftCorner(a.rows(), a.cols()) = a;
  out.bottomRightCorner(b.rows(), b.cols()) = b;
  return out;
}

RealMatrix hcat(const RealMatrix& a, const RealMatrix& b) {
  RealMatrix out(a.rows(), a.cols() + b.cols());
  out.leftCols(a.cols()) = a;
  out.rightCols(b.cols()) = b;
  return out;
}

// Orthonormal basis of span(k) built by Gram-Schmidt from the projections of
// e_0, e_1, ... so the chart lines up with coordinate axes when it can.
RealMatrix canonical_basis(const RealMatrix& k) {
  const Eigen::Index n = k.rows();
  const Eigen::Index target = k.cols();
  RealMatrix out(n, target);
  Eigen::Index found = 0;
  for (Eigen::Index a = 0; a < n && found < target; ++a) {
    RealVector v = k * k.row(a).transpose();
    for (Eigen::Index c = 0; c < found; ++c) v -= out.col(c) * out.col(c).dot(v);
    for (Eigen::Index c = 0; c < found; ++c) v -= out.col(c) * out.col(c).dot(v);
    const double norm = v.norm();
    if (norm < 1e-8) continue;
    out.col(found++) = v / norm;
  }
  if (found != target) throw ValidationError("chart", "could not build a chart of full rank");
  return out;
}

void check_nondegenerate(const RealMatrix& w) {
  if (w.rows() == 0) return;
  const Svd d = svd(w);
  if (d.rank != w.rows()) throw ValidationError("reduced_nondegenerate", "reduced form is degenerate");
  if ((w + w.transpose()).norm() > 1e-10 * std::max(1.0, w.norm()))
    throw ValidationError("reduced_skew", "reduced form is not skew");
}

}  // namespace

SymplecticVectorSpace::SymplecticVectorSpace(RealMatrix omega) : omega_(std::move(omega)) {
  if (omega_.rows() != omega_.cols()) throw DimensionMismatch("symplectic form must be square");
  if (omega_.rows() % 2 != 0) throw InputError("symplectic space must have even dimension");
  if (!omega_.allFinite()) throw InputError("symplectic form has non-finite entries");
  if ((omega_ + omega_.transpose()).norm() > 1e-12 * std::max(1.0, omega_.norm()))
    throw ValidationError("omega_skew", "symplectic form is not skew");
  if (omega_.rows() > 0) {
    const Svd d = svd(omega_);
    if (d.rank != omega_.rows()) throw ValidationError("omega_nondegenerate", "symplectic form is degenerate");
    pi_ = omega_.inverse().transpose();
  } else {
    pi_ = RealMatrix(0, 0);
  }
}

SymplecticVectorSpace SymplecticVectorSpace::canonical(int n) {
  if (n < 0) throw InputError("canonical: negative dimension");
  RealMatrix w = RealMatrix::Zero(2 * n, 2 * n);
  w.topRightCorner(n, n) = RealMatrix::Identity(n, n);
  w.bottomLeftCorner(n, n) = -RealMatrix::Identity(n, n);
  return SymplecticVectorSpace(w);
}

SymplecticVectorSpace SymplecticVectorSpace::point() { return SymplecticVectorSpace(RealMatrix(0, 0)); }

LinearRealization::LinearRealization(SymplecticVectorSpace source, RealMatrix a, RealVector b)
    : source_(std::move(source)), a_(std::move(a)), b_(std::move(b)) {
  if (a_.cols() != source_.dim()) throw DimensionMismatch("realization matrix does not match the source dimension");
  if (b_.size() != a_.rows()) throw DimensionMismatch("realization offset does not match the target dimension");
  if (!a_.allFinite() || !b_.allFinite()) throw InputError("realization has non-finite entries");
  if (a_.rows() > 0 && a_.cols() > 0) {
    const double defect = (a_ * source_.poisson_tensor() * a_.transpose()).norm();
    if (defect > 1e-10 * std::max(1.0, a_.squaredNorm()))
      throw ValidationError("poisson_commuting", "momentum map components do not Poisson-commute");
  }
}

LinearRealization LinearRealization::point(Eigen::Index k, const RealVector& level) {
  RealVector b = level.size() == 0 ? RealVector::Zero(k) : level;
  if (b.size() != k) throw DimensionMismatch("point realization level has the wrong length");
  return LinearRealization(SymplecticVectorSpace::point(), RealMatrix(k, 0), b);
}

LinearRealization LinearRealization::translations(int n, const RealMatrix& directions) {
  if (directions.rows() != n) throw DimensionMismatch("translation directions must have n rows");
  RealMatrix a = RealMatrix::Zero(directions.cols(), 2 * n);
  a.rightCols(n) = directions.transpose();
  return LinearRealization(SymplecticVectorSpace::canonical(n), a, RealVector::Zero(directions.cols()));
}

AffineSubspace fiber_product(const LinearRealization& j, const LinearRealization& j_rho) {
  if (j.target_dim() != j_rho.target_dim())
    throw DimensionMismatch("fiber_product: realizations have different target dimensions");
  const Eigen::Index n = j.source().dim();
  const Eigen::Index m = j_rho.source().dim();
  RealMatrix sys(j.target_dim(), n + m);
  sys.leftCols(n) = j.a();
  sys.rightCols(m) = -j_rho.a();
  const RealVector rhs = j_rho.b() - j.b();
  const auto x = solve_min_norm(sys, rhs);
  if (!x) throw InputError("fiber_product: the constraint system J(x) = J_rho(y) has no solution");
  return {*x, null_space(sys)};
}

ReducedSpace reduce(const LinearRealization& j, const LinearRealization& j_rho) {
  ReducedSpace out;
  out.source_dim = j.source().dim();
  out.ambient_dim = out.source_dim + j_rho.source().dim();
  out.constraint = fiber_product(j, j_rho);
  const RealMatrix omega = block_diag(j.source().omega(), -j_rho.source().omega());
  const RealMatrix& b = out.constraint.basis;
  const RealMatrix restricted = b.transpose() * omega * b;
  const Svd d = svd(restricted, omega.rows() ? omega.cwiseAbs().maxCoeff() : 0.0);
  for (Eigen::Index i = 0; i < d.s.size(); ++i) out.form_singular_values.push_back(d.s(i));
  out.radical_basis = b * d.v.rightCols(b.cols() - d.rank);
  out.chart = canonical_basis(b * d.v.leftCols(d.rank));
  out.quotient_dim = out.chart.cols();
  out.reduced_omega = out.chart.transpose() * omega * out.chart;
  out.reduced_omega = 0.5 * (out.reduced_omega - out.reduced_omega.transpose()).eval();
  check_nondegenerate(out.reduced_omega);
  return out;
}

ReducedSpace marsden_weinstein(const LinearRealization& j) {
  const Eigen::Index n = j.source().dim();
  const auto x0 = solve_min_norm(j.a(), -j.b());
  if (!x0) throw InputError("marsden_weinstein: 0 is not in the image of J");
  ReducedSpace out;
  out.source_dim = n;
  out.ambient_dim = n;
  out.constraint = {*x0, null_space(j.a())};
  // Tangent space to the orbits: Hamiltonian vector fields of the components.
  const RealMatrix orbits = j.source().poisson_tensor() * j.a().transpose();
  out.radical_basis = range(orbits);
  const RealMatrix& c = out.constraint.basis;
  const RealMatrix transverse = c - out.radical_basis * (out.radical_basis.transpose() * c);
  out.chart = canonical_basis(range(transverse, 1.0));
  out.quotient_dim = out.chart.cols();
  out.reduced_omega = out.chart.transpose() * j.source().omega() * out.chart;
  out.reduced_omega = 0.5 * (out.reduced_omega - out.reduced_omega.transpose()).eval();
  check_nondegenerate(out.reduced_omega);
  return out;
}

double congruence_residual(const ReducedSpace& a, const ReducedSpace& b) {
  if (a.ambient_dim != b.ambient_dim || a.quotient_dim != b.quotient_dim)
    return std::numeric_limits<double>::infinity();
  if (a.quotient_dim == 0) return 0.0;
  const RealMatrix basis = hcat(b.chart, b.radical_basis);
  // Both blocks are orthonormal and mutually orthogonal, so projection solves.
  const RealMatrix coeff = basis.transpose() * a.chart;
  const double solve_residual = (basis * coeff - a.chart).norm();
  const RealMatrix m = coeff.topRows(b.quotient_dim);
  const double form_residual = (m.transpose() * b.reduced_omega * m - a.reduced_omega).norm();
  return std::max(solve_residual, form_residual);
}

LinearRealization descend(const LinearRealization& j2, const ReducedSpace& reduced) {
  const Eigen::Index n = reduced.source_dim;
  if (j2.source().dim() != n) throw DimensionMismatch("descend: realization lives on a different space");
  const RealMatrix rad = reduced.radical_basis.topRows(n);
  if ((j2.a() * rad).norm() > 1e-10 * std::max(1.0, j2.a().norm()))
    throw ValidationError("descends", "second realization is not constant along the null leaves");
  const RealMatrix chart = reduced.chart.topRows(n);
  const RealVector base = reduced.constraint.offset.head(n);
  return LinearRealization(SymplecticVectorSpace(reduced.reduced_omega), j2.a() * chart, j2.a() * base + j2.b());
}

ReducedSpace compose_stages(const ReducedSpace& first, const ReducedSpace& second) {
  if (second.source_dim != first.quotient_dim || second.ambient_dim != second.source_dim)
    throw InputError("compose_stages: second stage must reduce the first quotient against a point");
  const RealMatrix& t1 = first.chart;
  ReducedSpace out;
  out.source_dim = first.source_dim;
  out.ambient_dim = first.ambient_dim;
  out.constraint.offset = first.constraint.offset + t1 * second.constraint.offset;
  out.constraint.basis = hcat(first.radical_basis, t1 * second.constraint.basis);
  out.radical_basis = hcat(first.radical_basis, t1 * second.radical_basis);
  out.chart = t1 * second.chart;
  out.quotient_dim = second.quotient_dim;
  out.reduced_omega = second.reduced_omega;
  out.form_singular_values = second.form_singular_values;
  return out;
}

QuadraticObservable::QuadraticObservable(RealMatrix q, RealVector l, double c) : q_(std::move(q)), l_(std::move(l)), c_(c) {
  if (q_.rows() != q_.cols() || q_.rows() != l_.size()) throw DimensionMismatch("quadratic observable shapes disagree");
  if (!q_.allFinite() || !l_.allFinite() || !std::isfinite(c_)) throw InputError("quadratic observable has non-finite entries");
  if ((q_ - q_.transpose()).norm() > 1e-12 * std::max(1.0, q_.norm()))
    throw InputError("quadratic observable: Q must be symmetric");
  q_ = 0.5 * (q_ + q_.transpose()).eval();
}

QuadraticObservable QuadraticObservable::constant(Eigen::Index n, double c) {
  return {RealMatrix::Zero(n, n), RealVector::Zero(n), c};
}

QuadraticObservable QuadraticObservable::linear(const RealVector& l, double c) {
  return {RealMatrix::Zero(l.size(), l.size()), l, c};
}

QuadraticObservable QuadraticObservable::component(const LinearRealization& j, Eigen::Index i) {
  if (i < 0 || i >= j.target_dim()) throw InputError("component index out of range");
  return linear(j.a().row(i).transpose(), j.b()(i));
}

double QuadraticObservable::evaluate(const RealVector& z) const {
  if (z.size() != l_.size()) throw DimensionMismatch("point has the wrong dimension");
  return z.dot(q_ * z) + l_.dot(z) + c_;
}

bool is_weak_observable(const QuadraticObservable& f, const LinearRealization& j,
                        const std::optional<LinearRealization>& j_rho) {
  const Eigen::Index n = j.source().dim();
  if (f.dim() != n) throw DimensionMismatch("observable and realization live on different spaces");
  const LinearRealization rho = j_rho ? *j_rho : LinearRealization::point(j.target_dim());
  const AffineSubspace c = fiber_product(j, rho);
  const RealVector z0 = c.offset.head(n);
  const RealMatrix dirs = c.basis.topRows(n);
  const RealMatrix& pi = j.source().poisson_tensor();
  // {J_i, f}(z) = A_i Pi (2 Q z + l), affine in z; restrict to z0 + dirs t.
  for (Eigen::Index i = 0; i < j.target_dim(); ++i) {
    const RealVector row = pi.transpose() * j.a().row(i).transpose();
    const double at_base = row.dot(2.0 * f.q() * z0 + f.l());
    const RealVector slope = 2.0 * dirs.transpose() * (f.q() * row);
    const double scale = std::max(1.0, j.a().row(i).norm() * (2.0 * f.q().norm() * (1.0 + z0.norm()) + f.l().norm()));
    if (std::abs(at_base) > 1e-10 * scale || slope.norm() > 1e-10 * scale) return false;
  }
  return true;
}

QuadraticObservable induce_classical(const QuadraticObservable& f, const ReducedSpace& reduced) {
  const Eigen::Index n = reduced.source_dim;
  if (f.dim() != n) throw DimensionMismatch("observable and reduced space live on different spaces");
  const RealVector base = reduced.constraint.offset.head(n);
  const RealMatrix t = reduced.chart.topRows(n);
  const RealMatrix r = reduced.radical_basis.topRows(n);
  const RealVector grad = 2.0 * f.q() * base + f.l();
  const double scale = std::max(1.0, f.q().norm() * (1.0 + base.norm()) + f.l().norm());
  const double drift = std::max({(t.transpose() * f.q() * r).norm(), (r.transpose() * f.q() * r).norm(),
                                 (r.transpose() * grad).norm()});
  if (drift > 1e-10 * scale)
    throw ValidationError("constant_on_leaves", "observable varies along the null foliation");
  return {t.transpose() * f.q() * t, t.transpose() * grad, f.evaluate(base)};
}

}  // namespace cq
