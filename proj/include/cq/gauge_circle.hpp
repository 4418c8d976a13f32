#pragma once

// Lattice gauge theory on a circle of N links: wavefunctions of the link
// variables, gauge averaging, and the physical space as an induced space.
//
// Finite G: basis e_c of C^{|G|^N}, c indexed as in lattice.hpp. A gauge tuple
// acts by (g.U)_i = g_i U_i g_{i+1}^-1 and on wavefunctions by U(g) e_c = e_{g.c}.
// Based gauge transformations fix g_1 = e.
//
// U(1): Fourier modes exp(i k.theta) with |k_i| <= K, mode index
// sum_i (k_i + K) (2K+1)^i. The Haar average over U(1)^N restricted to these
// modes equals the average over the subgroup Z_L^N with L = 2K+1.

#include <string>
#include <vector>

#include "cq/induction.hpp"
#include "cq/lattice.hpp"

namespace cq {

struct LatticeGaugeModel {
  GroupPtr group;  // null for U(1)
  int links = 1;
  bool based = false;
  int u1_cutoff = 0;  // K, U(1) only

  static LatticeGaugeModel finite(GroupPtr g, int links, bool based = false);
  static LatticeGaugeModel u1(int cutoff, int links, bool based = false);

  bool is_u1() const noexcept { return !group; }
  /// dim of the unconstrained space, |G|^N or (2K+1)^N.
  Eigen::Index hilbert_dim() const;
};

void validate(const LatticeGaugeModel& m);

/// Dense operators are capped at this many basis states.
constexpr Eigen::Index kDenseBudget = 4096;

/// U(1) mode bookkeeping.
std::vector<int> u1_mode(const LatticeGaugeModel& m, Eigen::Index index);
Eigen::Index u1_index(const LatticeGaugeModel& m, const std::vector<int>& k);

/// Gauge group as a finite group: G^N, G^(N-1) when based (g_1 = e), and Z_L^N
/// (resp. Z_L^(N-1)) for U(1). Element index: first factor most significant.
GroupPtr gauge_group(const LatticeGaugeModel& m);
/// Gauge tuple (g_1..g_N) of an element of gauge_group(m); U(1) entries are a in Z_L.
std::vector<int> gauge_tuple(const LatticeGaugeModel& m, int element);
/// Finite G: image index of every basis state under a gauge tuple.
std::vector<Eigen::Index> gauge_permutation(const LatticeGaugeModel& m, const std::vector<int>& gauge);
/// U(1): the gauge tuple acts diagonally, exp(-i sum_i alpha_i (k_i - k_{i-1})),
/// alpha_i = 2 pi a_i / L, k_0 = k_N.
ComplexVector u1_gauge_phases(const LatticeGaugeModel& m, const std::vector<int>& gauge);

/// Dense unitary representation of gauge_group(m) on the unconstrained space.
/// Refused with BudgetExceeded when |Gamma| * dim^2 > 1e7 entries.
UnitaryRep gauge_representation(const LatticeGaugeModel& m);

/// Invariant projector (1/|Gamma|) sum_g U(g), built from the permutation
/// action without materializing the representation.
HermitianOperator gauge_projector(const LatticeGaugeModel& m);

struct PhysicalSpace {
  LatticeGaugeModel model;
  InductionResult induction;
  /// Orthonormal reference vectors in the unconstrained space, one per class
  /// (full) or element (based) of the holonomy; one per k for U(1).
  ComplexMatrix reference_vectors;
  std::vector<std::string> reference_labels;
  /// T = R^dag V^dag from the induced space to the reference model.
  ComplexMatrix intertwiner;
  double intertwiner_residual = 0.0;  // max(||T^dag T - I||, ||T T^dag - I||)
  double projector_residual = 0.0;    // ||P^2 - P||
};

PhysicalSpace physical_space(const LatticeGaugeModel& m, const Tolerances& tol = {});

enum class ObservableKind { wilson, electric };

/// Wilson loop Re chi(holonomy): `label` indexes builtin_irreps (finite) or is the
/// charge n (U(1), Re exp(i n sum theta)). Electric Laplacian: sum over links of
/// sum_{s in S} (1 - L_i(s)) with S = electric_generators(G), or sum_i k_i^2.
struct Observable {
  ObservableKind kind = ObservableKind::electric;
  int label = 0;
};

/// Conjugation- and inverse-closure of the preset generators; the Laplacian
/// built from it commutes with gauge transformations.
std::vector<int> electric_generators(const FiniteGroup& g);

/// Operator on the unconstrained space.
ComplexMatrix unconstrained_observable(const LatticeGaugeModel& m, const Observable& obs);
/// The same observable built directly on the reference model (class functions
/// or all functions of the holonomy; holonomy modes for U(1)).
ComplexMatrix reference_observable(const LatticeGaugeModel& m, const Observable& obs);

struct InducedObservable {
  InducedOperator induced;
  ComplexMatrix reference;
  RealVector spectrum;            // ascending
  RealVector reference_spectrum;  // ascending
  double intertwiner_residual = 0.0;  // ||T pi(A) - A_ref T||
};

/// Throws ValidationError("weak_observable") for operators that are not gauge invariant.
InducedObservable induced_observable(const PhysicalSpace& space, const ComplexMatrix& a,
                                     const ComplexMatrix& reference);
InducedObservable induced_observable(const PhysicalSpace& space, const Observable& obs);

}  // namespace cq
