#pragma once

// Theta sectors on a cyclic lattice and anomalies from projective representations.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cq/induction.hpp"

namespace cq {

// ---------------------------------------------------------------------------
// Theta sectors: sites Z_{NM}, gauge group Z_M generated by translation by N,
// sector k induced from chi_k(a) = exp(2 pi i k a / M).

struct ThetaSectorProblem {
  int sites_n = 1;  // N
  int gauge_m = 1;  // M
  int sector = 0;   // k in 0..M-1
};

void validate(const ThetaSectorProblem& p);

/// Translation representation of Z_M on l^2(Z_{NM}): U(a) e_x = e_{x + aN}.
UnitaryRep theta_gauge_rep(int sites_n, int gauge_m);
/// chi_k as a one-dimensional representation of Z_M.
UnitaryRep theta_character(int gauge_m, int sector);
/// Nearest-neighbour Laplacian 2 - S - S^-1 on Z_L.
ComplexMatrix ring_laplacian(int sites);
/// 2 - 2 cos(2 pi (k + m M) / (N M)) for m = 0..N-1, ascending.
RealVector theta_closed_form(const ThetaSectorProblem& p);

struct ThetaSector {
  ThetaSectorProblem problem;
  InductionResult induction;
  InducedOperator laplacian;
  RealVector spectrum;  // ascending
};

ThetaSector theta_sector(const ThetaSectorProblem& p, const Tolerances& tol = {});

/// D4 acting regularly, G0 = rotations, theta = a character of G/G0 = Z2
/// (`sign` selects the nontrivial one): staged vs direct induction.
StagesReport theta_stages_demo(bool sign = true, int test_observables = 3, std::uint64_t seed = 1);

// ---------------------------------------------------------------------------
// Projective representations: U(x) U(y) = omega(x, y) U(xy).

struct ProjectiveRep {
  GroupPtr group;
  std::vector<ComplexMatrix> matrices;
  std::vector<Complex> multiplier;  // omega(x, y) at x * |G| + y
  double cocycle_defect = 0.0;

  Complex omega(int x, int y) const { return multiplier.at(static_cast<std::size_t>(x * group->order() + y)); }
  Eigen::Index dim() const { return matrices.front().rows(); }
};

/// omega(x, y) = tr(U(xy)^dag U(x) U(y)) / d. Throws ValidationError("projective")
/// when some U(x)U(y) is not proportional to U(xy) within `tol`, and
/// ValidationError("cocycle") if the cocycle identity fails.
ProjectiveRep multiplier_of(GroupPtr g, std::vector<ComplexMatrix> matrices, double tol = 1e-10);

/// Pauli assignment on Z2xZ2: (0,0) -> I, (1,0) -> X, (0,1) -> Z, (1,1) -> XZ.
ProjectiveRep pauli_projective_rep();
/// U'(x) = beta(x) U(x).
ProjectiveRep twist(const ProjectiveRep& p, const std::vector<Complex>& beta);

struct AnomalyVerdict {
  bool anomalous = false;
  bool exhaustive = false;  // the beta search ran to completion
  int root_order = 1;       // R: smallest order with omega^R = 1 (after normalization)
  std::optional<std::vector<Complex>> beta;  // omega = d beta, beta(e) = 1
  std::optional<std::pair<int, int>> witness_pair;  // commuting x, y with omega(x,y) != omega(y,x)
  Complex witness_value = 1.0;  // omega(x, y) / omega(y, x)
};

/// Decides whether omega is a coboundary. Exhaustive search over beta with
/// values in the (R |G|)-th roots of unity when |G| <= 8 and R <= 8; otherwise
/// only the commuting-pair witness is consulted (sound, incomplete).
/// Throws ValidationError("root_of_unity") when omega is not root-of-unity
/// valued of order <= max_order after normalization.
AnomalyVerdict is_anomalous(const ProjectiveRep& p, int max_order = 8);

struct InductionProbe {
  ComplexMatrix average;  // (1/|G|) sum_x U(x) (x) w(x), not Hermitian in general
  double idempotency_defect = 0.0;  // ||P^2 - P||
  bool is_projection = false;       // defect <= 1e-8
};

/// Group average against the weights w(x) (a character, or a character
/// corrected by a twist). The average is a projection iff the twisted
/// family is a genuine representation up to the weights.
InductionProbe anomalous_induction_probe(const ProjectiveRep& p, const std::vector<Complex>& weights);
InductionProbe anomalous_induction_probe(const ProjectiveRep& p, const UnitaryRep& character);

}  // namespace cq
