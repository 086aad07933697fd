// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "qcp/constants.hpp"
#include "qcp/ghz_distill.hpp"
#include "qcp/pauli_channel.hpp"

using namespace qcp;

namespace {

constexpr double inv_sqrt3 = 0.57735026918962576;

double completeness_defect(const PovmSet& povm) {
  const Matrix sum = povm.fx.adjoint() * povm.fx + povm.fy.adjoint() * povm.fy +
                     povm.fz.adjoint() * povm.fz;
  return (sum - Matrix::Identity(4, 4)).cwiseAbs().maxCoeff();
}

Matrix on_center32(const Matrix& f) { return kron(f, Matrix::Identity(8, 8)); }

}  // namespace

TEST_CASE("deformation operator") {
  CHECK((deformation_operator(1.0) - Matrix::Identity(4, 4)).cwiseAbs().maxCoeff() ==
        0.0);
  const Matrix d = deformation_operator(0.5);
  CHECK(d(0, 0) == Complex(1.0, 0.0));
  CHECK(d(1, 1) == Complex(0.5, 0.0));
  CHECK(d(2, 2) == Complex(0.5, 0.0));
  CHECK(d(3, 3) == Complex(1.0, 0.0));
  CHECK_THROWS_AS(deformation_operator(0.0), std::invalid_argument);

  // D(a) rescales the deformed ground state to the Heisenberg one.
  const ModelParams params = ModelParams::xxz(0.8);
  const double a = deformation_parameter(params);
  Vector mapped = on_center32(deformation_operator(a)) * analytic_ground_state(params);
  mapped.normalize();
  const Vector heis = analytic_ground_state(ModelParams::xxz(0.0));
  CHECK(std::abs((mapped.adjoint() * heis)(0, 0)) > 1.0 - tol::eigen);
}

TEST_CASE("standard POVM matches the closed-form Gram blocks") {
  const PovmSet povm = povm_standard(1.0);
  const Matrix xy = povm.fx.adjoint() * povm.fx + povm.fy.adjoint() * povm.fy;
  CHECK(std::abs(xy(0, 0).real() - 1.0 / 3.0) < tol::algebra);
  CHECK(std::abs(xy(1, 1).real() - 1.0) < tol::algebra);
  CHECK(std::abs(xy(2, 2).real() - 1.0) < tol::algebra);
  CHECK(std::abs(xy(3, 3).real() - 1.0 / 3.0) < tol::algebra);

  const Matrix zz = povm.fz.adjoint() * povm.fz;
  CHECK(std::abs(zz(0, 0).real() - 2.0 / 3.0) < tol::algebra);
  CHECK(std::abs(zz(1, 1).real()) < tol::algebra);
  CHECK(std::abs(zz(2, 2).real()) < tol::algebra);
  CHECK(std::abs(zz(3, 3).real() - 2.0 / 3.0) < tol::algebra);

  CHECK_THROWS_AS(povm_standard(0.5), std::domain_error);
}

TEST_CASE("lossy POVM closed forms") {
  const double a = 0.4;
  const PovmSet povm = povm_lossy(a);
  const Matrix xy = povm.fx.adjoint() * povm.fx + povm.fy.adjoint() * povm.fy;
  CHECK(std::abs(xy(0, 0).real() - 1.0) < tol::algebra);
  CHECK(std::abs(xy(1, 1).real() - 3.0 * a * a) < tol::algebra);
  CHECK(std::abs(xy(2, 2).real() - 3.0 * a * a) < tol::algebra);
  CHECK(std::abs(xy(3, 3).real() - 1.0) < tol::algebra);
  CHECK(completeness_defect(povm) < tol::algebra);

  // loss element vanishes at the regime boundary
  const PovmSet near_boundary = povm_lossy(inv_sqrt3 - 1e-13);
  CHECK(near_boundary.fz.cwiseAbs().maxCoeff() < 1e-5);

  CHECK_THROWS_AS(povm_lossy(0.8), std::domain_error);
}

TEST_CASE("POVM completeness across 100 random deformations") {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> lossy_a(0.05, inv_sqrt3 - 1e-6);
  std::uniform_real_distribution<double> standard_a(inv_sqrt3 + 1e-6, 3.0);
  for (int i = 0; i < 50; ++i) {
    CHECK(completeness_defect(povm_lossy(lossy_a(rng))) < tol::algebra);
    CHECK(completeness_defect(povm_standard(standard_a(rng))) < tol::algebra);
  }
  CHECK(povm_for(0.3).regime == PovmRegime::lossy);
  CHECK(povm_for(1.0).regime == PovmRegime::standard);
}

TEST_CASE("basis fixers are unitary and restore the z basis") {
  const BasisFixers& fix = basis_fixers();
  CHECK((fix.uy * fix.uy.adjoint() - Matrix::Identity(32, 32)).cwiseAbs().maxCoeff() <
        tol::algebra);
  CHECK((fix.ux * fix.ux.adjoint() - Matrix::Identity(32, 32)).cwiseAbs().maxCoeff() <
        tol::algebra);

  // After U_y (U_x), the x (y) outcome branch lives on the center +-3/2 span.
  const ThermalState cold = thermal_state(ModelParams::xxz(0.0), 0.0);
  const PovmSet povm = povm_standard(1.0);
  const Matrix fx = on_center32(povm.fx);
  const Matrix fy = on_center32(povm.fy);
  const Matrix branch_x = fix.uy * fx * cold.rho * fx.adjoint() * fix.uy.adjoint();
  const Matrix branch_y = fix.ux * fy * cold.rho * fy.adjoint() * fix.ux.adjoint();
  for (const Matrix& branch : {branch_x, branch_y}) {
    double middle = 0.0;
    for (int i = 8; i < 24; ++i) middle += branch(i, i).real();
    CHECK(std::abs(middle) < 1e-12);
  }
}

TEST_CASE("logical encoding") {
  // |3/2> x |ddd| -> |1111>
  Matrix rho32 = Matrix::Zero(32, 32);
  rho32(7, 7) = 1.0;  // center index 0, qubits 111
  const EncodedState encoded = encode_logical(rho32);
  CHECK(encoded.leakage < tol::leakage);
  CHECK(encoded.rho16(15, 15).real() == doctest::Approx(1.0));

  // center |1/2> support must be rejected loudly
  Matrix leaky = Matrix::Zero(32, 32);
  leaky(8, 8) = 1.0;  // center index 1
  CHECK_THROWS_AS(encode_logical(leaky), std::runtime_error);
}

TEST_CASE("distillation at zero temperature") {
  // standard regime: perfect GHZ with certainty
  const LogicalGhzState standard =
      distill_channel(thermal_state(ModelParams::xxz(0.0), 0.0), 1.0);
  CHECK(standard.p_s == 1.0);
  CHECK(state_fidelity(standard.rho16, ghz_state()) > 1.0 - tol::eigen);

  // lossy regime: perfect GHZ with probability 1 - p_delete
  const ModelParams lossy_params = ModelParams::xxz(-1.2882);
  const double a = deformation_parameter(lossy_params);
  const LogicalGhzState lossy =
      distill_channel(thermal_state(lossy_params, 0.0), a);
  CHECK(state_fidelity(lossy.rho16, ghz_state()) > 1.0 - tol::eigen);
  CHECK(std::abs(lossy.p_s - (1.0 - p_delete(a))) < 1e-10);
}

TEST_CASE("channel is trace preserving before encoding (standard regime)") {
  const ThermalState state = thermal_state(ModelParams::xxz(0.4), 0.3);
  const double a = deformation_parameter(state.params);
  const PovmSet povm = povm_standard(a);
  const BasisFixers& fix = basis_fixers();
  const Matrix fx = on_center32(povm.fx);
  const Matrix fy = on_center32(povm.fy);
  const Matrix fz = on_center32(povm.fz);
  const Matrix out = fix.uy * fx * state.rho * fx.adjoint() * fix.uy.adjoint() +
                     fix.ux * fy * state.rho * fy.adjoint() * fix.ux.adjoint() +
                     fz * state.rho * fz.adjoint();
  CHECK(std::abs(out.trace().real() - 1.0) < tol::algebra);
}

TEST_CASE("finite-temperature fidelity matches the identity-class weight") {
  const LogicalGhzState ghz =
      distill_channel(thermal_state(ModelParams::xxz(0.0), 0.16), 1.0);
  CHECK(ghz.p_s == 1.0);
  CHECK(state_fidelity(ghz.rho16, ghz_state()) ==
        doctest::Approx(0.9942).epsilon(5e-4));
}

TEST_CASE("GHZ fidelity is non-increasing in temperature") {
  const ModelParams params = ModelParams::xxz(0.3);
  const double a = deformation_parameter(params);
  double prev = 2.0;
  for (double temp : {0.0, 0.05, 0.1, 0.2, 0.4, 0.8}) {
    const LogicalGhzState ghz = distill_channel(thermal_state(params, temp), a);
    const double fid = state_fidelity(ghz.rho16, ghz_state());
    CHECK(fid <= prev + tol::algebra);
    prev = fid;
  }
}

TEST_CASE("p_delete closed form and channel cross-validation") {
  CHECK(p_delete(inv_sqrt3) < 1e-15);  // regime boundary
  CHECK(p_delete(1.0) == 0.0);

  const double a211 = std::sqrt(0.211);
  CHECK(p_delete(a211) == doctest::Approx(1.0 - 0.697).epsilon(0.01));

  // invert a^2 = p_th / (4 - p_th) for the square-octagon threshold
  const double a223 = std::sqrt(0.223);
  CHECK(1.0 - p_delete(a223) == doctest::Approx(4.0 * 0.223 / 1.223).epsilon(1e-12));

  for (int i = 1; i <= 20; ++i) {
    const double a = inv_sqrt3 * i / 21.0;
    // Tr(F'_z rho F'_z^dag) on the matching zero-temperature ground state.
    // Small a only occurs in the aniso model, whose inversion covers all a.
    const double dz = 3.0 * (a * a - 1.0) / (4.0 * a);
    const ModelParams params = ModelParams::aniso(dz);
    REQUIRE(deformation_parameter(params) == doctest::Approx(a).epsilon(1e-12));
    const ThermalState cold = thermal_state(params, 0.0);
    const Matrix fz = on_center32(povm_lossy(a).fz);
    const double direct = (fz * cold.rho * fz.adjoint()).trace().real();
    CHECK(std::abs(direct - p_delete(a)) < 1e-10);
  }

  CHECK_THROWS_AS(p_delete(-1.0), std::invalid_argument);
}
