// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "qcp/thermal_state.hpp"

namespace qcp {

enum class PovmRegime { standard, lossy };

// Outcome-labeled measurement elements acting on the center spin, in the
// descending basis (|3/2>, |1/2>, |-1/2>, |-3/2>).
struct PovmSet {
  PovmRegime regime;
  Matrix fx, fy, fz;  // 4x4
};

// diag(1, a, a, 1): rescales the deformed ground state back to a = 1.
Matrix deformation_operator(double a);

// Valid for 3a^2 >= 1. Elements q_alpha * Ftilde_alpha * D(a) with
// q_x = q_y = 1/a and q_z = sqrt((3a^2 - 1) / (2a^2)); the x/y projectors are
// built by exact pi/2 rotations of the z eigenvectors.
PovmSet povm_standard(double a);

// Valid for 3a^2 < 1. The z outcome becomes a heralded loss:
// F'_z = diag(0, sqrt(1 - 3a^2), sqrt(1 - 3a^2), 0).
PovmSet povm_lossy(double a);

// Dispatch on 3a^2 >= 1.
PovmSet povm_for(double a);

// U_y = exp[+i pi/2 (Sy_c + sum_j sy_j)] and U_x = exp[-i pi/2 (...Sx...)],
// the global rotations that bring x/y outcome bases back to z.
struct BasisFixers {
  Matrix uy, ux;  // 32x32 unitaries
};
const BasisFixers& basis_fixers();

struct EncodedState {
  Matrix rho16;
  double leakage;  // weight outside the center |+-3/2> span before encoding
};

// Isometry |3/2> -> |1>, -|-3/2> -> |0> on the center, identity relabeling
// (up -> |0>, down -> |1>) on the qubits; output renormalized. Throws when
// leakage exceeds tol::leakage.
EncodedState encode_logical(const Matrix& rho32);

struct LogicalGhzState {
  Matrix rho16;
  double p_s;  // success probability (1 in the standard regime)
};

// Outcome-averaged distillation channel on a unit thermal state. The x and y
// branches carry their basis fixers; the lossy regime renormalizes by
// p_s = 1 - Tr(F'_z rho F'_z^dag).
LogicalGhzState distill_channel(const ThermalState& state, double a);

// (1 - 3a^2) / (1 + a^2) for a < 1/sqrt(3); 0 otherwise.
double p_delete(double a);

}  // namespace qcp
