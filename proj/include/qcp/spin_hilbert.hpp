// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <span>

#include "qcp/linalg.hpp"

namespace qcp {

// Angular-momentum matrices in the descending-m basis (m = s, s-1, ..., -s),
// dimensionless (hbar = 1).
struct SpinOperators {
  double s;
  Matrix sx, sy, sz, splus, sminus;
};

// Supported magnitudes: 1/2 and 3/2.
SpinOperators spin_operators(double s);

// One unit is a center spin-3/2 and three outer qubits with fixed tensor
// order center (x) q1 (x) q2 (x) q3. Basis index = 8*i_c + 4*b1 + 2*b2 + b3,
// center index descending in m, qubit basis order (up, down).
inline constexpr std::array<int, 4> unit_dims{4, 2, 2, 2};
inline constexpr int unit_dimension = 32;

struct UnitOperator {
  Matrix matrix;  // 32x32
  static constexpr std::array<const char*, 4> slot_labels{"center", "q1", "q2", "q3"};
};

// `op` on slot `slot`, identity on every other slot.
Matrix embed(const Matrix& op, std::size_t slot, std::span<const int> dims);
UnitOperator unit_embed(const Matrix& op, std::size_t slot);

// Symmetric (Dicke) state of the three outer qubits with total Sz = m,
// m in {3/2, 1/2, -1/2, -3/2}.
Vector dicke_state(double m);

}  // namespace qcp
