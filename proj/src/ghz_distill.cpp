// SPDX-License-Identifier: Apache-2.0
#include "qcp/ghz_distill.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qcp/constants.hpp"

namespace qcp {

namespace {

constexpr double half_pi = std::numbers::pi / 2.0;

// Projector onto the center +-3/2 span of the alpha axis. The eigenvector
// phases cancel inside |v><v|, so the rotation construction is unambiguous.
Matrix pm32_projector(const Matrix& rotation_from_z) {
  const Vector top = rotation_from_z.col(0);     // |3/2>_alpha
  const Vector bottom = rotation_from_z.col(3);  // |-3/2>_alpha
  return top * top.adjoint() + bottom * bottom.adjoint();
}

const Matrix& f_tilde(int axis) {  // 0 = x, 1 = y, 2 = z
  static const std::array<Matrix, 3> elements = [] {
    const SpinOperators center = spin_operators(1.5);
    const double norm = std::sqrt(2.0 / 3.0);
    std::array<Matrix, 3> out;
    out[0] = norm * pm32_projector(expi_hermitian(center.sy, -half_pi));
    out[1] = norm * pm32_projector(expi_hermitian(center.sx, half_pi));
    Matrix pz = Matrix::Zero(4, 4);
    pz(0, 0) = 1.0;
    pz(3, 3) = 1.0;
    out[2] = norm * pz;
    return out;
  }();
  return elements[axis];
}

Matrix on_center(const Matrix& f) {
  return kron(f, Matrix::Identity(8, 8));
}

// 32-dim encoding isometry: center |3/2> -> |1>, -|-3/2> -> |0>, identity
// relabeling on the three qubits.
const Matrix& encoding_isometry() {
  static const Matrix w = [] {
    Matrix v = Matrix::Zero(4, 2);
    v(3, 0) = -1.0;
    v(0, 1) = 1.0;
    return kron(v, Matrix::Identity(8, 8));
  }();
  return w;
}

}  // namespace

Matrix deformation_operator(double a) {
  if (!(a > 0)) throw std::invalid_argument("deformation_operator: a must be > 0");
  Matrix d = Matrix::Zero(4, 4);
  d(0, 0) = 1.0;
  d(1, 1) = a;
  d(2, 2) = a;
  d(3, 3) = 1.0;
  return d;
}

PovmSet povm_standard(double a) {
  if (!(a > 0)) throw std::invalid_argument("povm_standard: a must be > 0");
  if (3.0 * a * a < 1.0)
    throw std::domain_error("povm_standard: requires 3a^2 >= 1");
  const Matrix d = deformation_operator(a);
  const double qxy = 1.0 / a;
  const double qz = std::sqrt((3.0 * a * a - 1.0) / (2.0 * a * a));
  return PovmSet{PovmRegime::standard, qxy * f_tilde(0) * d, qxy * f_tilde(1) * d,
                 qz * f_tilde(2) * d};
}

PovmSet povm_lossy(double a) {
  if (!(a > 0)) throw std::invalid_argument("povm_lossy: a must be > 0");
  if (3.0 * a * a >= 1.0)
    throw std::domain_error("povm_lossy: requires 3a^2 < 1");
  const Matrix d = deformation_operator(a);
  const double root3 = std::sqrt(3.0);
  Matrix fz = Matrix::Zero(4, 4);
  fz(1, 1) = std::sqrt(1.0 - 3.0 * a * a);
  fz(2, 2) = fz(1, 1);
  return PovmSet{PovmRegime::lossy, root3 * f_tilde(0) * d, root3 * f_tilde(1) * d,
                 std::move(fz)};
}

PovmSet povm_for(double a) {
  if (!(a > 0)) throw std::invalid_argument("povm_for: a must be > 0");
  return 3.0 * a * a >= 1.0 ? povm_standard(a) : povm_lossy(a);
}

const BasisFixers& basis_fixers() {
  static const BasisFixers fixers = [] {
    const SpinOperators cen = spin_operators(1.5);
    const SpinOperators qub = spin_operators(0.5);
    Matrix sy_total = unit_embed(cen.sy, 0).matrix;
    Matrix sx_total = unit_embed(cen.sx, 0).matrix;
    for (std::size_t j = 1; j <= 3; ++j) {
      sy_total += unit_embed(qub.sy, j).matrix;
      sx_total += unit_embed(qub.sx, j).matrix;
    }
    return BasisFixers{expi_hermitian(sy_total, half_pi),
                       expi_hermitian(sx_total, -half_pi)};
  }();
  return fixers;
}

EncodedState encode_logical(const Matrix& rho32) {
  if (rho32.rows() != unit_dimension || rho32.cols() != unit_dimension)
    throw std::invalid_argument("encode_logical: expected a 32x32 matrix");
  const double trace_in = rho32.trace().real();
  if (!(trace_in > 0))
    throw std::invalid_argument("encode_logical: input has non-positive trace");

  const Matrix& w = encoding_isometry();
  Matrix rho16 = w.adjoint() * rho32 * w;
  const double kept = rho16.trace().real();
  const double leakage = 1.0 - kept / trace_in;
  if (leakage > tol::leakage)
    throw std::runtime_error(
        "encode_logical: center support leaks outside |+-3/2> (leakage " +
        std::to_string(leakage) + "); basis convention bug upstream");
  rho16 /= kept;
  return EncodedState{std::move(rho16), leakage};
}

LogicalGhzState distill_channel(const ThermalState& state, double a) {
  if (!(a > 0)) throw std::invalid_argument("distill_channel: a must be > 0");
  const PovmSet povm = povm_for(a);
  const BasisFixers& fix = basis_fixers();
  const Matrix fx = on_center(povm.fx);
  const Matrix fy = on_center(povm.fy);
  const Matrix fz = on_center(povm.fz);

  Matrix branch_x = fix.uy * fx * state.rho * fx.adjoint() * fix.uy.adjoint();
  Matrix branch_y = fix.ux * fy * state.rho * fy.adjoint() * fix.ux.adjoint();

  double p_s = 1.0;
  Matrix out;
  if (povm.regime == PovmRegime::standard) {
    out = branch_x + branch_y + fz * state.rho * fz.adjoint();
  } else {
    const double loss = (fz * state.rho * fz.adjoint()).trace().real();
    p_s = 1.0 - loss;
    if (!(p_s > tol::algebra))
      throw std::runtime_error("distill_channel: success probability vanishes");
    out = (branch_x + branch_y) / p_s;
  }
  EncodedState encoded = encode_logical(out);
  return LogicalGhzState{std::move(encoded.rho16), p_s};
}

double p_delete(double a) {
  if (!(a > 0)) throw std::invalid_argument("p_delete: a must be > 0");
  if (3.0 * a * a >= 1.0) return 0.0;
  return (1.0 - 3.0 * a * a) / (1.0 + a * a);
}

}  // namespace qcp
