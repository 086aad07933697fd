// SPDX-License-Identifier: Apache-2.0
#include "qcp/pauli_channel.hpp"

#include <cmath>
#include <stdexcept>

namespace qcp {

namespace {

Matrix pauli_x() {
  Matrix x = Matrix::Zero(2, 2);
  x(0, 1) = 1.0;
  x(1, 0) = 1.0;
  return x;
}

Matrix pauli_z() {
  Matrix z = Matrix::Zero(2, 2);
  z(0, 0) = 1.0;
  z(1, 1) = -1.0;
  return z;
}

// Single-qubit op on qubit q (0 = encoded center, highest-order bit).
Matrix on_qubit(const Matrix& op, int q) {
  Matrix out = Matrix::Identity(1, 1);
  for (int i = 0; i < 4; ++i)
    out = kron(out, i == q ? op : Matrix::Identity(2, 2));
  return out;
}

}  // namespace

Vector ghz_state() {
  Vector v = Vector::Zero(16);
  v(0) = 1.0 / std::sqrt(2.0);
  v(15) = 1.0 / std::sqrt(2.0);
  return v;
}

const StabilizerGroup& ghz_stabilizers() {
  static const StabilizerGroup group = [] {
    const Matrix x = pauli_x();
    const Matrix z = pauli_z();
    StabilizerGroup g;
    g.generators[0] = on_qubit(x, 0) * on_qubit(x, 1) * on_qubit(x, 2) * on_qubit(x, 3);
    g.generators[1] = on_qubit(z, 0) * on_qubit(z, 1);
    g.generators[2] = on_qubit(z, 0) * on_qubit(z, 2);
    g.generators[3] = on_qubit(z, 0) * on_qubit(z, 3);
    return g;
  }();
  return group;
}

Matrix twirl(const Matrix& rho16) {
  if (rho16.rows() != 16 || rho16.cols() != 16)
    throw std::invalid_argument("twirl: expected a 16x16 matrix");
  Matrix rho = rho16;
  for (const Matrix& k : ghz_stabilizers().generators)
    rho = (rho + k * rho * k.adjoint()) / 2.0;
  return rho;
}

const std::array<std::string_view, pauli_class_count>& pauli_class_names() {
  static const std::array<std::string_view, pauli_class_count> names{
      "I",    "Z0",     "X1",   "Z0X1",   "X2",   "Z0X2",   "X3", "Z0X3",
      "X1X2", "Z0X1X2", "X2X3", "Z0X2X3", "X1X3", "Z0X1X3", "X0", "Z0X0"};
  return names;
}

const std::array<Matrix, pauli_class_count>& pauli_class_operators() {
  static const std::array<Matrix, pauli_class_count> ops = [] {
    const Matrix x = pauli_x();
    const Matrix z = pauli_z();
    const Matrix x0 = on_qubit(x, 0);
    const Matrix x1 = on_qubit(x, 1);
    const Matrix x2 = on_qubit(x, 2);
    const Matrix x3 = on_qubit(x, 3);
    const Matrix z0 = on_qubit(z, 0);
    std::array<Matrix, pauli_class_count> out;
    out[pauli_identity] = Matrix::Identity(16, 16);
    out[pauli_z0] = z0;
    out[pauli_x1] = x1;
    out[pauli_z0x1] = z0 * x1;
    out[pauli_x2] = x2;
    out[pauli_z0x2] = z0 * x2;
    out[pauli_x3] = x3;
    out[pauli_z0x3] = z0 * x3;
    out[pauli_x1x2] = x1 * x2;
    out[pauli_z0x1x2] = z0 * x1 * x2;
    out[pauli_x2x3] = x2 * x3;
    out[pauli_z0x2x3] = z0 * x2 * x3;
    out[pauli_x1x3] = x1 * x3;
    out[pauli_z0x1x3] = z0 * x1 * x3;
    out[pauli_x0] = x0;
    out[pauli_z0x0] = z0 * x0;
    return out;
  }();
  return ops;
}

PauliErrorDistribution extract_error_probs(const Matrix& rho_twirled, double p_s) {
  if (rho_twirled.rows() != 16 || rho_twirled.cols() != 16)
    throw std::invalid_argument("extract_error_probs: expected a 16x16 matrix");

  const Vector ghz = ghz_state();
  PauliErrorDistribution dist;
  dist.p_s = p_s;
  double total = 0.0;
  const auto& ops = pauli_class_operators();
  for (int i = 0; i < pauli_class_count; ++i) {
    const Vector basis_state = ops[i] * ghz;
    dist.probs[i] = state_fidelity(rho_twirled, basis_state);
    total += dist.probs[i];
  }
  if (total < 1.0 - 1e-8)
    throw std::runtime_error(
        "extract_error_probs: class probabilities sum to " + std::to_string(total) +
        "; input is not diagonal in the code basis");
  return dist;
}

}  // namespace qcp
