#pragma once

// Spin-j coherent-state quantization of the two-sphere.
//
// Basis of C^{2j+1}: index i = 0..2j holds |j, m = j - i>, highest weight first.
// Q(f) = ((2j+1)/4pi) Int f(n) |n><n| dOmega, hbar = 1/(j+1), so that
// Q(n_a) = J_a/(j+1).

#include <vector>

#include "cq/linalg.hpp"
#include "cq/polynomial.hpp"

namespace cq {

class SpinLevel {
 public:
  explicit SpinLevel(int two_j);

  int two_j() const noexcept { return two_j_; }
  double j() const noexcept { return 0.5 * two_j_; }
  Eigen::Index dim() const noexcept { return two_j_ + 1; }
  double hbar() const noexcept { return 2.0 / (two_j_ + 2.0); }

  bool operator==(const SpinLevel&) const = default;

 private:
  int two_j_;
};

class SpherePoint {
 public:
  /// Requires | |n| - 1 | <= 1e-12.
  SpherePoint(double x, double y, double z);
  static SpherePoint from_angles(double theta, double phi);

  double x() const noexcept { return n_[0]; }
  double y() const noexcept { return n_[1]; }
  double z() const noexcept { return n_[2]; }
  double theta() const;
  double phi() const;
  double dot(const SpherePoint& o) const { return x() * o.x() + y() * o.y() + z() * o.z(); }

 private:
  double n_[3];
};

struct CoherentState {
  SpinLevel level;
  SpherePoint point;
  ComplexVector amplitudes;
};

/// <j,m|n> = sqrt(C(2j, j-m)) cos^{j+m}(theta/2) sin^{j-m}(theta/2) e^{-i m phi}.
CoherentState coherent_state(const SpinLevel& level, const SpherePoint& point);

/// |<s1, s2>|^2.
double transition_probability(const CoherentState& s1, const CoherentState& s2);

/// Spin matrices J_x, J_y, J_z in the highest-weight-first basis.
struct SpinMatrices {
  ComplexMatrix x, y, z;
};
SpinMatrices spin_matrices(const SpinLevel& level);

/// Product quadrature: Gauss-Legendre in cos(theta) times the trapezoid rule
/// in phi. Exact for integrands arising from polynomials of degree <= the
/// one it was sized for.
struct SphereQuadrature {
  int theta_nodes;
  int phi_nodes;
  static SphereQuadrature for_degree(const SpinLevel& level, int degree, int extra = 0);
};

HermitianOperator quantize(const SpinLevel& level, const PolynomialObservable& f);
HermitianOperator quantize(const SpinLevel& level, const PolynomialObservable& f,
                           const SphereQuadrature& rule);

/// Gauss-Legendre nodes and weights on [-1, 1].
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights);

/// sup |f| over a latitude-longitude grid that includes both poles.
double sup_norm_on_grid(const PolynomialObservable& f, int theta_points = 101, int phi_points = 200);

struct StrictQuantizationRow {
  int two_j;
  double hbar;
  double dirac_defect;   // || {Q f, Q g}_hbar - Q({f,g}) ||
  double jordan_defect;  // || Q f o Q g - Q(f g) ||
  double norm_defect;    // | ||Q f|| - sup|f| |
};

std::vector<StrictQuantizationRow> strict_quantization_report(const PolynomialObservable& f,
                                                              const PolynomialObservable& g,
                                                              const std::vector<SpinLevel>& levels);

struct ClassicalLimitTable {
  /// p[pair][level]
  std::vector<std::vector<double>> p;
  /// Per pair: p non-increasing as the level grows.
  std::vector<bool> monotone;
  /// Per pair: coincident points have p = 1 at every level.
  std::vector<bool> coincident_unit;
};

ClassicalLimitTable classical_limit_check(const std::vector<std::pair<SpherePoint, SpherePoint>>& pairs,
                                          const std::vector<SpinLevel>& levels);

}  // namespace cq
