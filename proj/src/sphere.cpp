#include "cq/sphere.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "cq/errors.hpp"

namespace cq {

namespace {

constexpr double kPi = std::numbers::pi;

// sqrt(C(n, k)) via log-gamma; exact enough for n <= a few hundred.
double sqrt_binomial(int n, int k) {
  return std::exp(0.5 * (std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0)));
}

// Real amplitude profile A_i(theta) = sqrt(C(2j, i)) cos^{2j-i}(theta/2) sin^i(theta/2).
void amplitude_profile(int two_j, double cos_half, double sin_half, std::vector<double>& out) {
  out.resize(static_cast<std::size_t>(two_j + 1));
  for (int i = 0; i <= two_j; ++i) {
    out[static_cast<std::size_t>(i)] =
        sqrt_binomial(two_j, i) * std::pow(cos_half, two_j - i) * std::pow(sin_half, i);
  }
}

}  // namespace

SpinLevel::SpinLevel(int two_j) : two_j_(two_j) {
  if (two_j < 1) throw InputError("SpinLevel: two_j must be >= 1");
}

SpherePoint::SpherePoint(double x, double y, double z) : n_{x, y, z} {
  const double r = std::sqrt(x * x + y * y + z * z);
  if (!std::isfinite(r) || std::abs(r - 1.0) > 1e-12) {
    throw InputError("SpherePoint: vector is not of unit length");
  }
}

SpherePoint SpherePoint::from_angles(double theta, double phi) {
  const double st = std::sin(theta);
  const double x = st * std::cos(phi);
  const double y = st * std::sin(phi);
  const double z = std::cos(theta);
  const double r = std::sqrt(x * x + y * y + z * z);
  return SpherePoint(x / r, y / r, z / r);
}

double SpherePoint::theta() const { return std::acos(std::clamp(n_[2], -1.0, 1.0)); }

double SpherePoint::phi() const {
  if (n_[0] == 0.0 && n_[1] == 0.0) return 0.0;
  return std::atan2(n_[1], n_[0]);
}

CoherentState coherent_state(const SpinLevel& level, const SpherePoint& point) {
  const int two_j = level.two_j();
  const double theta = point.theta();
  const double phi = point.phi();
  std::vector<double> a;
  amplitude_profile(two_j, std::cos(0.5 * theta), std::sin(0.5 * theta), a);
  ComplexVector amp(level.dim());
  for (int i = 0; i <= two_j; ++i) {
    const double m = level.j() - i;
    amp(i) = a[static_cast<std::size_t>(i)] * std::polar(1.0, -m * phi);
  }
  // Rounding in the half-angle powers leaves |amp| within a few ulps of 1.
  amp /= amp.norm();
  return {level, point, amp};
}

double transition_probability(const CoherentState& s1, const CoherentState& s2) {
  if (!(s1.level == s2.level)) throw DimensionMismatch("transition_probability: spin levels differ");
  return std::norm(s1.amplitudes.dot(s2.amplitudes));
}

SpinMatrices spin_matrices(const SpinLevel& level) {
  const Eigen::Index d = level.dim();
  const double j = level.j();
  ComplexMatrix jp = ComplexMatrix::Zero(d, d);
  ComplexMatrix jz = ComplexMatrix::Zero(d, d);
  for (Eigen::Index i = 0; i < d; ++i) {
    const double m = j - static_cast<double>(i);
    jz(i, i) = m;
    // J+ |m> = sqrt((j - m)(j + m + 1)) |m + 1>, and |m + 1> sits at index i - 1.
    if (i > 0) jp(i - 1, i) = std::sqrt((j - m) * (j + m + 1.0));
  }
  const ComplexMatrix jm = jp.adjoint();
  return {0.5 * (jp + jm), Complex(0.0, -0.5) * (jp - jm), jz};
}

SphereQuadrature SphereQuadrature::for_degree(const SpinLevel& level, int degree, int extra) {
  const int two_j = level.two_j();
  // In u = cos(theta) the integrand is a polynomial of degree two_j + degree;
  // in phi it is a trigonometric polynomial of order two_j + degree.
  const int theta_nodes = std::max(two_j + 4, (two_j + degree) / 2 + 2) + extra;
  const int phi_nodes = std::max(2 * two_j + 5, two_j + degree + 1) + extra;
  return {theta_nodes, phi_nodes};
}

void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
  nodes.assign(static_cast<std::size_t>(n), 0.0);
  weights.assign(static_cast<std::size_t>(n), 0.0);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      if (n == 1) p0 = 1.0;
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    // Recompute the derivative at the converged node.
    double p0 = 1.0, p1 = x;
    for (int k = 2; k <= n; ++k) {
      const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    if (n == 1) p0 = 1.0;
    dp = n * (x * p1 - p0) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    nodes[static_cast<std::size_t>(i)] = -x;
    nodes[static_cast<std::size_t>(n - 1 - i)] = x;
    weights[static_cast<std::size_t>(i)] = w;
    weights[static_cast<std::size_t>(n - 1 - i)] = w;
  }
  if (n % 2 == 1) nodes[static_cast<std::size_t>(n / 2)] = 0.0;
}

HermitianOperator quantize(const SpinLevel& level, const PolynomialObservable& f) {
  return quantize(level, f, SphereQuadrature::for_degree(level, f.degree()));
}

HermitianOperator quantize(const SpinLevel& level, const PolynomialObservable& f,
                           const SphereQuadrature& rule) {
  const int two_j = level.two_j();
  const Eigen::Index d = level.dim();
  std::vector<double> u, w;
  gauss_legendre(rule.theta_nodes, u, w);
  const int nphi = rule.phi_nodes;

  // Q_{ik} = (2j+1)/(4 pi) sum_u w_u A_i A_k F_{k-i}(u),
  // F_delta(u) = int_0^{2 pi} f(u, phi) e^{-i delta phi} dphi, delta = m_i - m_k = k - i.
  ComplexMatrix q = ComplexMatrix::Zero(d, d);
  std::vector<double> a;
  std::vector<double> fvals(static_cast<std::size_t>(nphi));
  std::vector<Complex> fourier(static_cast<std::size_t>(2 * two_j + 1));
  const double dphi = 2.0 * kPi / nphi;
  for (std::size_t t = 0; t < u.size(); ++t) {
    const double z = u[t];
    const double s = std::sqrt(std::max(0.0, 1.0 - z * z));
    for (int k = 0; k < nphi; ++k) {
      const double phi = k * dphi;
      fvals[static_cast<std::size_t>(k)] = f.evaluate(s * std::cos(phi), s * std::sin(phi), z);
    }
    for (int delta = -two_j; delta <= two_j; ++delta) {
      Complex acc = 0.0;
      for (int k = 0; k < nphi; ++k) acc += fvals[static_cast<std::size_t>(k)] * std::polar(1.0, -delta * k * dphi);
      fourier[static_cast<std::size_t>(delta + two_j)] = acc * dphi;
    }
    // cos^2(theta/2) = (1 + u)/2, sin^2(theta/2) = (1 - u)/2.
    amplitude_profile(two_j, std::sqrt(0.5 * (1.0 + z)), std::sqrt(0.5 * (1.0 - z)), a);
    for (Eigen::Index i = 0; i < d; ++i)
      for (Eigen::Index k = 0; k < d; ++k) {
        q(i, k) += w[t] * a[static_cast<std::size_t>(i)] * a[static_cast<std::size_t>(k)] *
                   fourier[static_cast<std::size_t>(k - i + two_j)];
      }
  }
  q *= (two_j + 1.0) / (4.0 * kPi);
  return HermitianOperator(q);
}

double sup_norm_on_grid(const PolynomialObservable& f, int theta_points, int phi_points) {
  double m = 0.0;
  for (int a = 0; a < theta_points; ++a) {
    const double theta = kPi * a / (theta_points - 1);
    for (int b = 0; b < phi_points; ++b) {
      const double phi = 2.0 * kPi * b / phi_points;
      const double st = std::sin(theta);
      m = std::max(m, std::abs(f.evaluate(st * std::cos(phi), st * std::sin(phi), std::cos(theta))));
    }
  }
  return m;
}

std::vector<StrictQuantizationRow> strict_quantization_report(const PolynomialObservable& f,
                                                              const PolynomialObservable& g,
                                                              const std::vector<SpinLevel>& levels) {
  if (levels.empty()) throw InputError("strict_quantization_report: no spin levels given");
  const PolynomialObservable bracket = poisson_bracket(f, g);
  const PolynomialObservable product = f * g;
  const double sup_f = sup_norm_on_grid(f);
  std::vector<StrictQuantizationRow> rows;
  for (const auto& level : levels) {
    const ScaledBracketContext ctx(level.hbar());
    const auto qf = quantize(level, f);
    const auto qg = quantize(level, g);
    const double dirac =
        operator_norm(lie_bracket(qf, qg, ctx).matrix() - quantize(level, bracket).matrix());
    const double jordan_def = operator_norm(jordan(qf, qg).matrix() - quantize(level, product).matrix());
    const double norm_def = std::abs(operator_norm(qf.matrix()) - sup_f);
    rows.push_back({level.two_j(), level.hbar(), dirac, jordan_def, norm_def});
  }
  return rows;
}

ClassicalLimitTable classical_limit_check(const std::vector<std::pair<SpherePoint, SpherePoint>>& pairs,
                                          const std::vector<SpinLevel>& levels) {
  ClassicalLimitTable table;
  std::vector<SpinLevel> sorted = levels;
  std::sort(sorted.begin(), sorted.end(), [](const SpinLevel& a, const SpinLevel& b) { return a.two_j() < b.two_j(); });
  for (const auto& [a, b] : pairs) {
    std::vector<double> row;
    for (const auto& level : sorted) {
      row.push_back(transition_probability(coherent_state(level, a), coherent_state(level, b)));
    }
    bool monotone = true;
    for (std::size_t k = 1; k < row.size(); ++k) monotone = monotone && row[k] <= row[k - 1] + 1e-15;
    const bool coincident = a.dot(b) >= 1.0 - 1e-15;
    bool unit = true;
    if (coincident)
      for (double p : row) unit = unit && std::abs(p - 1.0) <= 1e-12;
    table.p.push_back(std::move(row));
    table.monotone.push_back(monotone);
    table.coincident_unit.push_back(unit);
  }
  return table;
}

}  // namespace cq
