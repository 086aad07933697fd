// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "qcp/spin_hilbert.hpp"

namespace qcp {

enum class Model { xxz, aniso };

// Couplings are in units of the exchange strength; the XXZ anisotropy is
// Delta = 1 + delta so both models meet at the Heisenberg point (value = 0).
struct ModelParams {
  Model model;
  double value;  // delta for xxz, d_z for aniso

  static ModelParams xxz(double delta) { return {Model::xxz, delta}; }
  static ModelParams aniso(double dz) { return {Model::aniso, dz}; }
};

UnitOperator build_unit_hamiltonian(const ModelParams& params);

// Closed-form unit ground energy. The xxz form is piecewise with a slope
// discontinuity at delta = -2; the aniso form is smooth everywhere.
double analytic_ground_energy(const ModelParams& params);

// Closed-form unit ground state (32-dim, normalized). xxz requires
// delta > -2, where the ground state is unique.
Vector analytic_ground_state(const ModelParams& params);

// Ground-state amplitude ratio a > 0; equals 1 at the Heisenberg point and
// increases strictly with the parameter. xxz requires delta > -2.
double deformation_parameter(const ModelParams& params);

struct SpectrumSummary {
  double e0;
  double e1;
  double gap;  // e1 - e0
  int ground_degeneracy;
};

// Full 32x32 diagonalization; degeneracy counted within tol::degeneracy.
SpectrumSummary spectrum(const ModelParams& params);

// Cached eigendecomposition of the unit Hamiltonian (energies ascending,
// eigenvectors in columns). Safe for concurrent use.
struct UnitEigensystem {
  Eigen::VectorXd energies;
  Matrix vectors;
};
const UnitEigensystem& unit_eigensystem(const ModelParams& params);

struct Kink {
  double location;
  double slope_jump;  // right-side slope minus left-side slope
};

struct TransitionScan {
  std::vector<Kink> kinks;
  // Set when sub-threshold slope jumps come within half the threshold,
  // i.e. the grid cannot cleanly separate kinks from curvature.
  bool coarse_grid_warning = false;
};

// One-sided finite differences of the numeric ground energy over `grid`
// (strictly increasing, >= 3 points); reports slope discontinuities larger
// than jump_threshold.
TransitionScan detect_transition(Model model, std::span<const double> grid,
                                 double jump_threshold = 0.5);

}  // namespace qcp
