// SPDX-License-Identifier: Apache-2.0
#include "qcp/spin_hilbert.hpp"

#include <cmath>
#include <stdexcept>

namespace qcp {

SpinOperators spin_operators(double s) {
  if (s != 0.5 && s != 1.5)
    throw std::invalid_argument("spin_operators: supported magnitudes are 1/2 and 3/2");

  const int dim = static_cast<int>(std::lround(2 * s + 1));
  Matrix sz = Matrix::Zero(dim, dim);
  Matrix splus = Matrix::Zero(dim, dim);
  for (int k = 0; k < dim; ++k) {
    const double m = s - k;
    sz(k, k) = m;
    // S+ |m> = sqrt(s(s+1) - m(m+1)) |m+1>; row k-1 holds m+1 in this basis
    if (k > 0) splus(k - 1, k) = std::sqrt(s * (s + 1) - m * (m + 1));
  }
  Matrix sminus = splus.adjoint();
  SpinOperators ops;
  ops.s = s;
  ops.sx = (splus + sminus) / 2.0;
  ops.sy = (splus - sminus) / Complex(0.0, 2.0);
  ops.sz = sz;
  ops.splus = splus;
  ops.sminus = sminus;
  return ops;
}

Matrix embed(const Matrix& op, std::size_t slot, std::span<const int> dims) {
  if (slot >= dims.size()) throw std::invalid_argument("embed: slot out of range");
  if (op.rows() != op.cols() || op.rows() != dims[slot])
    throw std::invalid_argument("embed: operator dimension does not match slot");

  Matrix out = Matrix::Identity(1, 1);
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (i == slot)
      out = kron(out, op);
    else
      out = kron(out, Matrix::Identity(dims[i], dims[i]));
  }
  return out;
}

UnitOperator unit_embed(const Matrix& op, std::size_t slot) {
  return UnitOperator{embed(op, slot, unit_dims)};
}

Vector dicke_state(double m) {
  Vector v = Vector::Zero(8);
  const double w = 1.0 / std::sqrt(3.0);
  if (m == 1.5) {
    v(0) = 1.0;  // |uuu>
  } else if (m == 0.5) {
    v(1) = w;  // |uud>
    v(2) = w;  // |udu>
    v(4) = w;  // |duu>
  } else if (m == -0.5) {
    v(3) = w;  // |udd>
    v(5) = w;  // |dud>
    v(6) = w;  // |ddu>
  } else if (m == -1.5) {
    v(7) = 1.0;  // |ddd>
  } else {
    throw std::invalid_argument("dicke_state: m must be one of +-3/2, +-1/2");
  }
  return v;
}

}  // namespace qcp
