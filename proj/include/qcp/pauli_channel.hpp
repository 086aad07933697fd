// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <string_view>

#include "qcp/linalg.hpp"

namespace qcp {

// 4-qubit GHZ code space, qubit 0 = encoded center. Basis index
// = 8*b0 + 4*b1 + 2*b2 + b3.
Vector ghz_state();

struct StabilizerGroup {
  // X0X1X2X3, Z0Z1, Z0Z2, Z0Z3
  std::array<Matrix, 4> generators;
};
const StabilizerGroup& ghz_stabilizers();

// Average over the stabilizer group, as the exact projector product
// prod_K ([I] + [K])/2. Output is diagonal in the code eigenbasis.
Matrix twirl(const Matrix& rho16);

// The 16 inequivalent Pauli classes on the GHZ code. A -1 eigenvalue of
// X0X1X2X3 is attributed to Z0, a -1 of Z0Zi to Xi, and X1X2X3 is
// identified with X0.
inline constexpr int pauli_class_count = 16;

enum PauliClass : int {
  pauli_identity = 0,
  pauli_z0 = 1,
  pauli_x1 = 2,
  pauli_z0x1 = 3,
  pauli_x2 = 4,
  pauli_z0x2 = 5,
  pauli_x3 = 6,
  pauli_z0x3 = 7,
  pauli_x1x2 = 8,
  pauli_z0x1x2 = 9,
  pauli_x2x3 = 10,
  pauli_z0x2x3 = 11,
  pauli_x1x3 = 12,
  pauli_z0x1x3 = 13,
  pauli_x0 = 14,
  pauli_z0x0 = 15,
};

const std::array<std::string_view, pauli_class_count>& pauli_class_names();
const std::array<Matrix, pauli_class_count>& pauli_class_operators();

struct PauliErrorDistribution {
  std::array<double, pauli_class_count> probs;
  double p_s;  // carried success probability
};

// Diagonal weights p_sigma = <GHZ| sigma rho' sigma |GHZ> of a twirled state.
// Throws when the classes fail to cover the trace (sum < 1 - 1e-8).
PauliErrorDistribution extract_error_probs(const Matrix& rho_twirled, double p_s);

}  // namespace qcp
