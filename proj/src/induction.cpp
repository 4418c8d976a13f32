#include "cq/induction.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "cq/errors.hpp"

namespace cq {

// ---------------------------------------------------------------------------
// Algebra

AlgebraPtr FiniteCStarAlgebra::blocks(std::vector<int> block_dims) {
  if (block_dims.empty()) throw InputError("block algebra needs at least one block");
  std::shared_ptr<FiniteCStarAlgebra> a(new FiniteCStarAlgebra());
  int offset = 0;
  for (int d : block_dims) {
    if (d < 1) throw InputError("block dimensions must be positive");
    a->block_offset_.push_back(offset);
    offset += d * d;
  }
  a->block_dims_ = std::move(block_dims);
  a->dim_ = offset;
  a->prod_.assign(static_cast<std::size_t>(offset) * static_cast<std::size_t>(offset), -1);
  a->star_.assign(static_cast<std::size_t>(offset), 0);
  for (std::size_t k = 0; k < a->block_dims_.size(); ++k) {
    const int d = a->block_dims_[k];
    const int off = a->block_offset_[k];
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        const int ij = off + i * d + j;
        a->star_[static_cast<std::size_t>(ij)] = off + j * d + i;
        // e_ij e_jn = e_in
        for (int n = 0; n < d; ++n)
          a->prod_[static_cast<std::size_t>(ij) * static_cast<std::size_t>(offset) +
                   static_cast<std::size_t>(off + j * d + n)] = off + i * d + n;
      }
  }
  return a;
}

AlgebraPtr FiniteCStarAlgebra::group_algebra(GroupPtr g) {
  if (!g) throw InputError("group algebra needs a group");
  std::shared_ptr<FiniteCStarAlgebra> a(new FiniteCStarAlgebra());
  const int n = g->order();
  a->dim_ = n;
  a->prod_.resize(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  a->star_.resize(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) {
    a->star_[static_cast<std::size_t>(x)] = g->inverse(x);
    for (int y = 0; y < n; ++y) a->prod_[static_cast<std::size_t>(x * n + y)] = g->mul(x, y);
  }
  a->group_ = std::move(g);
  return a;
}

std::optional<int> FiniteCStarAlgebra::product(int i, int j) const {
  const int p = prod_.at(static_cast<std::size_t>(i * dim_ + j));
  if (p < 0) return std::nullopt;
  return p;
}

int FiniteCStarAlgebra::matrix_unit(int k, int i, int j) const {
  if (k < 0 || k >= static_cast<int>(block_dims_.size())) throw InputError("block index out of range");
  const int d = block_dims_[static_cast<std::size_t>(k)];
  if (i < 0 || j < 0 || i >= d || j >= d) throw InputError("matrix unit index out of range");
  return block_offset_[static_cast<std::size_t>(k)] + i * d + j;
}

ComplexVector FiniteCStarAlgebra::unit() const {
  ComplexVector u = ComplexVector::Zero(dim_);
  if (group_) {
    u(group_->identity()) = 1.0;
  } else {
    for (std::size_t k = 0; k < block_dims_.size(); ++k)
      for (int i = 0; i < block_dims_[k]; ++i) u(matrix_unit(static_cast<int>(k), i, i)) = 1.0;
  }
  return u;
}

AlgebraElement::AlgebraElement(AlgebraPtr algebra, ComplexVector coeffs)
    : algebra_(std::move(algebra)), coeffs_(std::move(coeffs)) {
  if (!algebra_) throw InputError("algebra element without an algebra");
  if (coeffs_.size() != algebra_->dim()) throw DimensionMismatch("coefficient vector does not match the algebra");
}

AlgebraElement AlgebraElement::zero(const AlgebraPtr& algebra) {
  return {algebra, ComplexVector::Zero(algebra->dim())};
}

AlgebraElement AlgebraElement::basis(const AlgebraPtr& algebra, int i, Complex c) {
  ComplexVector v = ComplexVector::Zero(algebra->dim());
  v(i) = c;
  return {algebra, v};
}

namespace {

void same_algebra(const AlgebraPtr& a, const AlgebraPtr& b) {
  if (a != b) throw DimensionMismatch("elements of different algebras");
}

}  // namespace

AlgebraElement AlgebraElement::operator*(const AlgebraElement& o) const {
  same_algebra(algebra_, o.algebra_);
  ComplexVector out = ComplexVector::Zero(coeffs_.size());
  for (int i = 0; i < algebra_->dim(); ++i) {
    if (coeffs_(i) == Complex(0.0)) continue;
    for (int j = 0; j < algebra_->dim(); ++j) {
      if (o.coeffs_(j) == Complex(0.0)) continue;
      if (const auto p = algebra_->product(i, j)) out(*p) += coeffs_(i) * o.coeffs_(j);
    }
  }
  return {algebra_, out};
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& o) const {
  same_algebra(algebra_, o.algebra_);
  return {algebra_, coeffs_ + o.coeffs_};
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& o) const {
  same_algebra(algebra_, o.algebra_);
  return {algebra_, coeffs_ - o.coeffs_};
}

AlgebraElement AlgebraElement::adjoint() const {
  ComplexVector out(coeffs_.size());
  for (int i = 0; i < algebra_->dim(); ++i) out(algebra_->star(i)) = std::conj(coeffs_(i));
  return {algebra_, out};
}

ComplexMatrix AlgebraElement::left_regular() const {
  const int n = algebra_->dim();
  ComplexMatrix m = ComplexMatrix::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    if (coeffs_(i) == Complex(0.0)) continue;
    for (int q = 0; q < n; ++q)
      if (const auto p = algebra_->product(i, q)) m(*p, q) += coeffs_(i);
  }
  return m;
}

bool AlgebraElement::is_positive(double rel_tol) const {
  const ComplexMatrix l = left_regular();
  if (!is_hermitian(l, rel_tol)) return false;
  return cq::is_positive(HermitianOperator(l, rel_tol), rel_tol);
}

// ---------------------------------------------------------------------------
// Representations

AlgebraRepresentation::AlgebraRepresentation(AlgebraPtr algebra, std::vector<ComplexMatrix> matrices, double tol)
    : algebra_(std::move(algebra)), matrices_(std::move(matrices)) {
  if (!algebra_) throw InputError("representation without an algebra");
  if (static_cast<int>(matrices_.size()) != algebra_->dim())
    throw DimensionMismatch("representation needs one matrix per basis element");
  dim_ = matrices_.front().rows();
  for (const auto& m : matrices_)
    if (m.rows() != dim_ || m.cols() != dim_) throw DimensionMismatch("representation matrices must be square and equal-sized");
  const int n = algebra_->dim();
  double defect = 0.0;
  for (int i = 0; i < n; ++i) {
    const auto& mi = matrices_[static_cast<std::size_t>(i)];
    defect = std::max(defect, (matrices_[static_cast<std::size_t>(algebra_->star(i))] - mi.adjoint()).norm());
    for (int j = 0; j < n; ++j) {
      const ComplexMatrix prod = mi * matrices_[static_cast<std::size_t>(j)];
      const auto p = algebra_->product(i, j);
      defect = std::max(defect, p ? (prod - matrices_[static_cast<std::size_t>(*p)]).norm() : prod.norm());
    }
  }
  if (defect > tol) throw ValidationError("rep_tol", "algebra representation is not a *-homomorphism");
}

AlgebraRepresentation AlgebraRepresentation::from_unitary_rep(const AlgebraPtr& algebra, const UnitaryRep& u) {
  if (!algebra->group() || !algebra->group()->same_table(u.group()))
    throw DimensionMismatch("representation and group algebra use different groups");
  return AlgebraRepresentation(algebra, u.matrices());
}

AlgebraRepresentation AlgebraRepresentation::block_weights(const AlgebraPtr& algebra,
                                                           const std::vector<int>& multiplicities) {
  const auto& dims = algebra->block_dims();
  if (dims.empty()) throw InputError("block_weights needs a block algebra");
  if (multiplicities.size() != dims.size()) throw DimensionMismatch("one multiplicity per block is required");
  Eigen::Index total = 0;
  for (std::size_t k = 0; k < dims.size(); ++k) {
    if (multiplicities[k] < 0) throw InputError("multiplicities must be nonnegative");
    total += static_cast<Eigen::Index>(multiplicities[k]) * dims[k];
  }
  if (total == 0) throw InputError("representation would be zero-dimensional");
  std::vector<ComplexMatrix> mats(static_cast<std::size_t>(algebra->dim()), ComplexMatrix::Zero(total, total));
  Eigen::Index offset = 0;
  for (std::size_t k = 0; k < dims.size(); ++k) {
    const int d = dims[k];
    for (int copy = 0; copy < multiplicities[k]; ++copy) {
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
          mats[static_cast<std::size_t>(algebra->matrix_unit(static_cast<int>(k), i, j))](offset + i, offset + j) = 1.0;
      offset += d;
    }
  }
  return AlgebraRepresentation(algebra, std::move(mats));
}

ComplexMatrix AlgebraRepresentation::apply(const AlgebraElement& a) const {
  same_algebra(algebra_, a.algebra());
  ComplexMatrix out = ComplexMatrix::Zero(dim_, dim_);
  for (int i = 0; i < algebra_->dim(); ++i)
    if (a.coeffs()(i) != Complex(0.0)) out += a.coeffs()(i) * matrices_[static_cast<std::size_t>(i)];
  return out;
}

// ---------------------------------------------------------------------------
// Modules

HilbertModule::HilbertModule(AlgebraPtr algebra, Eigen::Index dim, std::vector<ComplexVector> inner,
                             std::vector<ComplexMatrix> action)
    : algebra_(std::move(algebra)), dim_(dim), inner_(std::move(inner)), action_(std::move(action)) {
  if (!algebra_) throw InputError("module without an algebra");
  if (dim_ < 1) throw InputError("module dimension must be positive");
  const int nb = algebra_->dim();
  if (static_cast<Eigen::Index>(inner_.size()) != dim_ * dim_) throw DimensionMismatch("inner product table must be dim x dim");
  for (const auto& c : inner_)
    if (c.size() != nb) throw DimensionMismatch("inner product values must live in the algebra");
  if (static_cast<int>(action_.size()) != nb) throw DimensionMismatch("right action needs one matrix per basis element");
  for (const auto& r : action_)
    if (r.rows() != dim_ || r.cols() != dim_) throw DimensionMismatch("right action matrices must be dim x dim");

  double scale = 1.0;
  for (const auto& c : inner_) scale = std::max(scale, c.norm());

  // <e_a, e_b>^* = <e_b, e_a>
  double herm = 0.0;
  for (Eigen::Index a = 0; a < dim_; ++a)
    for (Eigen::Index b = 0; b < dim_; ++b)
      herm = std::max(herm, (AlgebraElement(algebra_, inner_basis(a, b)).adjoint().coeffs() - inner_basis(b, a)).norm());
  if (herm > 1e-10 * scale) throw ValidationError("module_hermitian", "<psi, phi>^* != <phi, psi>");

  // <e_a, e_b . b_i> = <e_a, e_b> b_i
  double equiv = 0.0;
  for (int i = 0; i < nb; ++i) {
    const auto bi = AlgebraElement::basis(algebra_, i);
    for (Eigen::Index a = 0; a < dim_; ++a)
      for (Eigen::Index b = 0; b < dim_; ++b) {
        ComplexVector lhs = ComplexVector::Zero(nb);
        for (Eigen::Index c = 0; c < dim_; ++c) lhs += action_[static_cast<std::size_t>(i)](c, b) * inner_basis(a, c);
        const auto rhs = AlgebraElement(algebra_, inner_basis(a, b)) * bi;
        equiv = std::max(equiv, (lhs - rhs.coeffs()).norm());
      }
  }
  if (equiv > 1e-10 * scale) throw ValidationError("module_equivariance", "<phi, psi B> != <phi, psi> B");

  // Positivity of the matrix [<e_a, e_b>] in M_n(B), through the left-regular representation.
  ComplexMatrix big(dim_ * nb, dim_ * nb);
  for (Eigen::Index a = 0; a < dim_; ++a)
    for (Eigen::Index b = 0; b < dim_; ++b)
      big.block(a * nb, b * nb, nb, nb) = AlgebraElement(algebra_, inner_basis(a, b)).left_regular();
  const RealVector ev = eigenvalues(HermitianOperator(big, 1e-9));
  if (ev(0) < -1e-9 * std::max(1.0, ev.cwiseAbs().maxCoeff()))
    throw ValidationError("module_positive", "the B-valued inner product is not positive");
}

HilbertModule HilbertModule::group_module(const UnitaryRep& u, const AlgebraPtr& group_algebra) {
  const auto& g = u.group();
  if (!group_algebra->group() || !group_algebra->group()->same_table(g))
    throw DimensionMismatch("group module needs the group algebra of the representation's group");
  const Eigen::Index n = u.dim();
  const double inv = 1.0 / g.order();
  std::vector<ComplexVector> inner(static_cast<std::size_t>(n * n), ComplexVector::Zero(g.order()));
  for (Eigen::Index a = 0; a < n; ++a)
    for (Eigen::Index b = 0; b < n; ++b)
      for (int x = 0; x < g.order(); ++x) inner[static_cast<std::size_t>(a * n + b)](x) = u(x)(a, b) * inv;
  std::vector<ComplexMatrix> action;
  for (int z = 0; z < g.order(); ++z) action.push_back(u(g.inverse(z)));
  return HilbertModule(group_algebra, n, std::move(inner), std::move(action));
}

HilbertModule HilbertModule::over_scalars(const ComplexMatrix& gram) {
  if (gram.rows() != gram.cols()) throw DimensionMismatch("Gram matrix must be square");
  const auto alg = FiniteCStarAlgebra::blocks({1});
  const Eigen::Index n = gram.rows();
  std::vector<ComplexVector> inner;
  for (Eigen::Index a = 0; a < n; ++a)
    for (Eigen::Index b = 0; b < n; ++b) inner.push_back(ComplexVector::Constant(1, gram(a, b)));
  return HilbertModule(alg, n, std::move(inner), {ComplexMatrix::Identity(n, n)});
}

AlgebraElement HilbertModule::inner(const ComplexVector& psi, const ComplexVector& phi) const {
  if (psi.size() != dim_ || phi.size() != dim_) throw DimensionMismatch("vector does not belong to the module");
  ComplexVector out = ComplexVector::Zero(algebra_->dim());
  for (Eigen::Index a = 0; a < dim_; ++a)
    for (Eigen::Index b = 0; b < dim_; ++b) out += std::conj(psi(a)) * phi(b) * inner_basis(a, b);
  return {algebra_, out};
}

// ---------------------------------------------------------------------------
// Induction

InductionResult induce_from_gram(const HermitianOperator& gram, Eigen::Index module_dim, Eigen::Index rho_dim,
                                 const Tolerances& tol) {
  if (module_dim * rho_dim != gram.dim()) throw DimensionMismatch("Gram matrix does not match dim L * dim H_rho");
  const auto eig = eigh(gram);
  const double lmax = std::max(0.0, eig.values.size() ? eig.values.maxCoeff() : 0.0);
  const double lmin = eig.values.size() ? eig.values.minCoeff() : 0.0;
  const double scale = std::max(lmax, eig.values.size() ? eig.values.cwiseAbs().maxCoeff() : 0.0);
  // Absolute floor for Gram matrices that vanish up to rounding.
  constexpr double kFloor = 1e-13;
  if (lmin < -std::max(tol.positivity * scale, kFloor))
    throw ValidationError("gram_psd", "the (.,.)_0 form is not positive semidefinite (min eigenvalue " +
                                          std::to_string(lmin) + ")");
  InductionResult r{gram, module_dim, rho_dim, {}, {}, {}};
  r.min_gram_eigenvalue = lmin;
  r.null_threshold = std::max(tol.null_space * lmax, kFloor);
  std::vector<Eigen::Index> keep;
  for (Eigen::Index i = 0; i < eig.values.size(); ++i)
    if (eig.values(i) > r.null_threshold && eig.values(i) > 0.0) keep.push_back(i);
  r.induced_dim = static_cast<Eigen::Index>(keep.size());
  r.kept_eigenvalues.resize(r.induced_dim);
  r.kept_vectors.resize(gram.dim(), r.induced_dim);
  for (Eigen::Index k = 0; k < r.induced_dim; ++k) {
    r.kept_eigenvalues(k) = eig.values(keep[static_cast<std::size_t>(k)]);
    r.kept_vectors.col(k) = eig.vectors.col(keep[static_cast<std::size_t>(k)]);
  }
  r.v = r.kept_eigenvalues.cwiseSqrt().asDiagonal() * r.kept_vectors.adjoint();
  return r;
}

InducedOperator InductionResult::induce_full(const ComplexMatrix& a_tilde) const {
  if (a_tilde.rows() != gram.dim() || a_tilde.cols() != gram.dim())
    throw DimensionMismatch("operator does not act on L (x) H_rho");
  const RealVector s = kept_eigenvalues.cwiseSqrt();
  const ComplexMatrix inner = kept_vectors.adjoint() * a_tilde * kept_vectors;
  InducedOperator out;
  out.matrix = s.asDiagonal() * inner * s.cwiseInverse().asDiagonal();
  out.residual = (out.matrix * v - v * a_tilde).norm();
  const double scale = std::max(1.0, operator_norm(a_tilde)) * std::max(1.0, std::sqrt(kept_eigenvalues.size() ? kept_eigenvalues.maxCoeff() : 1.0));
  if (out.residual > 1e-9 * scale)
    throw ValidationError("weak_observable", "operator does not descend to the induced space (residual " +
                                                 std::to_string(out.residual) + ")");
  return out;
}

InducedOperator InductionResult::induce(const ComplexMatrix& a) const {
  if (a.rows() != module_dim || a.cols() != module_dim) throw DimensionMismatch("operator does not act on L");
  return induce_full(kron(a, ComplexMatrix::Identity(rho_dim, rho_dim)));
}

double InductionResult::isometry_residual(std::mt19937_64& rng, int samples) const {
  const ComplexMatrix& g = gram.matrix();
  double worst = 0.0;
  for (int s = 0; s < samples; ++s) {
    const ComplexVector psi = random_complex(g.rows(), 1, rng);
    const ComplexVector phi = random_complex(g.rows(), 1, rng);
    const Complex lhs = psi.dot(g * phi);
    const Complex rhs = (v * psi).dot(v * phi);
    worst = std::max(worst, std::abs(lhs - rhs));
  }
  return worst / std::max(1.0, operator_norm(g));
}

HermitianOperator zero_form_gram(const HilbertModule& module, const AlgebraRepresentation& rho) {
  if (module.algebra() != rho.algebra()) throw DimensionMismatch("module and representation use different algebras");
  const Eigen::Index n = module.dim();
  const Eigen::Index d = rho.dim();
  ComplexMatrix g(n * d, n * d);
  for (Eigen::Index a = 0; a < n; ++a)
    for (Eigen::Index b = 0; b < n; ++b)
      g.block(a * d, b * d, d, d) = rho.apply(AlgebraElement(module.algebra(), module.inner_basis(a, b)));
  return HermitianOperator(g, 1e-10);
}

Induction induce(const HilbertModule& module, const AlgebraRepresentation& rho,
                 const std::vector<ComplexMatrix>& weak_ops, const Tolerances& tol) {
  Induction out{induce_from_gram(zero_form_gram(module, rho), module.dim(), rho.dim(), tol), {}};
  for (const auto& a : weak_ops) {
    if (!is_weak_observable_q(a, out.result.gram))
      throw ValidationError("weak_observable", "operator is not symmetric for the (.,.)_0 form");
    out.operators.push_back(out.result.induce(a));
  }
  return out;
}

bool is_weak_observable_q(const ComplexMatrix& a, const HermitianOperator& gram) {
  if (a.rows() != a.cols() || a.rows() == 0 || gram.dim() % a.rows() != 0)
    throw DimensionMismatch("operator shape is incompatible with the Gram matrix");
  const Eigen::Index d = gram.dim() / a.rows();
  const ComplexMatrix at = kron(a, ComplexMatrix::Identity(d, d));
  const ComplexMatrix& g = gram.matrix();
  const double defect = (at.adjoint() * g - g * at).norm();
  return defect <= 1e-9 * std::max(1e-300, operator_norm(g) * operator_norm(a));
}

InductionResult group_average_induction(const UnitaryRep& u, const UnitaryRep& u_rho, const Tolerances& tol) {
  return induce_from_gram(average_projector(tensor_rep(u, u_rho)), u.dim(), u_rho.dim(), tol);
}

double induced_dimension_oracle(const UnitaryRep& u, const UnitaryRep& u_rho) {
  if (!u.group().same_table(u_rho.group())) throw DimensionMismatch("representations of different groups");
  const ComplexVector a = u.character();
  const ComplexVector b = u_rho.character();
  Complex s = 0.0;
  for (Eigen::Index x = 0; x < a.size(); ++x) s += a(x) * b(x);
  return s.real() / u.group().order();
}

StagesReport induction_in_stages(const UnitaryRep& u, const SubgroupEmbedding& embedding, const UnitaryRep& theta,
                                 int test_observables, std::uint64_t seed) {
  if (!embedding.ambient()->same_table(u.group())) throw DimensionMismatch("embedding and representation use different groups");
  if (!embedding.is_normal()) throw InputError("induction in stages needs a normal subgroup");
  const QuotientGroup q = quotient_group(embedding);
  if (!q.group->same_table(theta.group())) throw DimensionMismatch("theta must be a representation of G/G0");
  const GroupPtr& ambient = u.group_ptr();

  // Stage 1: trivial representation of G0.
  std::vector<ComplexMatrix> restricted;
  for (int h : embedding.inclusion()) restricted.push_back(u(h));
  const UnitaryRep u0(embedding.subgroup(), restricted);
  InductionResult stage1 = group_average_induction(u0, trivial_rep(embedding.subgroup()));

  // Residual action of G/G0 on the stage-1 space, V1 U(x) V1^+.
  const ComplexMatrix& v1 = stage1.v;
  const RealVector s1 = stage1.kept_eigenvalues.cwiseSqrt();
  const ComplexMatrix v1_pinv = stage1.kept_vectors * s1.cwiseInverse().asDiagonal();
  std::vector<ComplexMatrix> residual(static_cast<std::size_t>(q.group->order()));
  std::vector<bool> seen(residual.size(), false);
  double spread = 0.0;
  for (int x = 0; x < ambient->order(); ++x) {
    const auto c = static_cast<std::size_t>(q.tau[static_cast<std::size_t>(x)]);
    const ComplexMatrix m = v1 * u(x) * v1_pinv;
    if (!seen[c]) {
      residual[c] = m;
      seen[c] = true;
    } else {
      spread = std::max(spread, (m - residual[c]).norm());
    }
  }
  if (spread > 1e-9) throw ValidationError("residual_action", "G/G0 action on the stage-1 space depends on representatives");
  UnitaryRep residual_rep(q.group, residual);

  InductionResult stage2 = group_average_induction(residual_rep, theta);
  InductionResult direct = group_average_induction(u, pullback(theta, q, ambient));

  StagesReport report{std::move(stage1), std::move(residual_rep), spread, std::move(stage2), std::move(direct)};

  // Equivariant test observables A = avg_x U(x) H U(x)^dag.
  std::mt19937_64 rng(seed);
  double mismatch = 0.0;
  const Eigen::Index td = theta.dim();
  for (int t = 0; t < test_observables; ++t) {
    const auto h = random_hermitian(u.dim(), rng);
    ComplexMatrix a = ComplexMatrix::Zero(u.dim(), u.dim());
    for (int x = 0; x < ambient->order(); ++x) a += u(x) * h.matrix() * u(x).adjoint();
    a /= static_cast<double>(ambient->order());
    const ComplexMatrix direct_op = report.direct.induce(a).matrix;
    const ComplexMatrix stage1_op = report.stage1.induce(a).matrix;
    const ComplexMatrix staged_op = report.stage2.induce(stage1_op).matrix;
    if (direct_op.rows() != staged_op.rows()) {
      mismatch = std::numeric_limits<double>::infinity();
      break;
    }
    if (direct_op.rows() == 0) continue;
    const RealVector e1 = eigenvalues(HermitianOperator(direct_op, 1e-8));
    const RealVector e2 = eigenvalues(HermitianOperator(staged_op, 1e-8));
    mismatch = std::max(mismatch, (e1 - e2).cwiseAbs().maxCoeff());
  }
  (void)td;
  report.spectral_mismatch = mismatch;
  report.equivalent = report.direct.induced_dim == report.stage2.induced_dim && mismatch <= 1e-9;
  return report;
}

}  // namespace cq
