// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "oracles.hpp"
#include "qcp/constants.hpp"
#include "qcp/unit_models.hpp"

using namespace qcp;

namespace {

std::vector<double> linspace(double lo, double hi, int n) {
  std::vector<double> xs(n);
  for (int i = 0; i < n; ++i) xs[i] = lo + (hi - lo) * i / (n - 1);
  return xs;
}

Matrix total_spin_component(const SpinOperators& cen, const SpinOperators& qub,
                            int axis) {
  auto pick = [axis](const SpinOperators& ops) -> const Matrix& {
    return axis == 0 ? ops.sx : axis == 1 ? ops.sy : ops.sz;
  };
  Matrix total = unit_embed(pick(cen), 0).matrix;
  for (std::size_t j = 1; j <= 3; ++j) total += unit_embed(pick(qub), j).matrix;
  return total;
}

}  // namespace

TEST_CASE("Hamiltonian at the Heisenberg point") {
  const Matrix h = build_unit_hamiltonian(ModelParams::xxz(0.0)).matrix;
  CHECK(hermiticity_defect(h) < 1e-14);

  // full rotational symmetry at delta = 0
  const SpinOperators cen = spin_operators(1.5);
  const SpinOperators qub = spin_operators(0.5);
  for (int axis = 0; axis < 3; ++axis) {
    const Matrix total = total_spin_component(cen, qub, axis);
    CHECK((h * total - total * h).cwiseAbs().maxCoeff() < tol::algebra);
  }

  CHECK(unit_eigensystem(ModelParams::xxz(0.0)).energies(0) ==
        doctest::Approx(-3.75).epsilon(1e-12));

  // the two models coincide when their parameters vanish
  const Matrix h2 = build_unit_hamiltonian(ModelParams::aniso(0.0)).matrix;
  CHECK((h - h2).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("analytic ground energy") {
  CHECK(analytic_ground_energy(ModelParams::xxz(0.0)) == doctest::Approx(-3.75));
  // branch continuity at delta = -2
  CHECK(analytic_ground_energy(ModelParams::xxz(-2.0)) == doctest::Approx(-2.25));
  CHECK((-9.0 + 10.0 - 2.0 * std::sqrt(25.0)) / 4.0 == doctest::Approx(-2.25));
  CHECK(analytic_ground_energy(ModelParams::xxz(-3.0)) == doctest::Approx(-4.5));
  CHECK(analytic_ground_energy(ModelParams::aniso(-3.0)) ==
        doctest::Approx((-9.0 + 15.0 - 2.0 * std::sqrt(45.0)) / 4.0));
}

TEST_CASE("analytic vs numeric ground energy on grids") {
  for (double d : linspace(-1.9, 4.0, 50)) {
    const double numeric = unit_eigensystem(ModelParams::xxz(d)).energies(0);
    CHECK(std::abs(numeric - analytic_ground_energy(ModelParams::xxz(d))) < tol::eigen);
  }
  for (double d : linspace(-4.0, 4.0, 50)) {
    const double numeric = unit_eigensystem(ModelParams::aniso(d)).energies(0);
    CHECK(std::abs(numeric - analytic_ground_energy(ModelParams::aniso(d))) < tol::eigen);
  }
  // xxz ferromagnetic branch
  for (double d : linspace(-4.0, -2.1, 10)) {
    const double numeric = unit_eigensystem(ModelParams::xxz(d)).energies(0);
    CHECK(std::abs(numeric - analytic_ground_energy(ModelParams::xxz(d))) < tol::eigen);
  }
}

TEST_CASE("analytic ground state") {
  for (double d : {-1.5, -0.5, 0.0, 1.0, 3.0}) {
    const ModelParams params = ModelParams::xxz(d);
    const Vector psi = analytic_ground_state(params);
    CHECK(psi.norm() == doctest::Approx(1.0).epsilon(1e-12));

    const UnitEigensystem& sys = unit_eigensystem(params);
    const double overlap = std::abs((psi.adjoint() * sys.vectors.col(0))(0, 0));
    CHECK(overlap > 1.0 - tol::eigen);

    const Matrix h = build_unit_hamiltonian(params).matrix;
    CHECK((h * psi - analytic_ground_energy(params) * psi).norm() < tol::eigen);
  }
  for (double d : {-1.0, 0.0, 2.0}) {
    const ModelParams params = ModelParams::aniso(d);
    const Vector psi = analytic_ground_state(params);
    const Matrix h = build_unit_hamiltonian(params).matrix;
    CHECK((h * psi - analytic_ground_energy(params) * psi).norm() < tol::eigen);
  }

  // GHZ limit: the |+-1/2> sector empties as delta grows
  const Vector far = analytic_ground_state(ModelParams::xxz(100.0));
  double middle_weight = 0.0;
  for (int i = 8; i < 24; ++i) middle_weight += std::norm(far(i));
  CHECK(middle_weight < 1e-4);

  CHECK_THROWS_AS(analytic_ground_state(ModelParams::xxz(-2.0)), std::domain_error);
  CHECK_THROWS_AS(analytic_ground_state(ModelParams::xxz(-3.0)), std::domain_error);
}

TEST_CASE("deformation parameter") {
  CHECK(deformation_parameter(ModelParams::xxz(0.0)) == doctest::Approx(1.0));
  const double a = deformation_parameter(ModelParams::xxz(-1.2882));
  CHECK(std::abs(a * a - 0.211) < 1e-3);
  CHECK(deformation_parameter(ModelParams::xxz(1.0)) >
        deformation_parameter(ModelParams::xxz(0.0)));
  // strictly increasing over a sample grid, both models
  double prev = 0.0;
  for (double d : linspace(-1.9, 4.0, 25)) {
    const double cur = deformation_parameter(ModelParams::xxz(d));
    CHECK(cur > prev);
    prev = cur;
  }
  prev = 0.0;
  for (double d : linspace(-6.0, 6.0, 25)) {
    const double cur = deformation_parameter(ModelParams::aniso(d));
    CHECK(cur > prev);
    prev = cur;
  }
  CHECK_THROWS_AS(deformation_parameter(ModelParams::xxz(-2.0)), std::domain_error);
}

TEST_CASE("spectrum against the total-spin oracle") {
  // Assemble the exact Heisenberg-point level list and compare all 32 values.
  std::vector<double> expected;
  for (const auto& level : test_oracles::heisenberg_unit_levels())
    expected.insert(expected.end(), level.degeneracy, level.energy);
  std::sort(expected.begin(), expected.end());
  REQUIRE(expected.size() == 32);

  const UnitEigensystem& sys = unit_eigensystem(ModelParams::xxz(0.0));
  for (int i = 0; i < 32; ++i)
    CHECK(std::abs(sys.energies(i) - expected[i]) < tol::eigen);

  const SpectrumSummary s = spectrum(ModelParams::xxz(0.0));
  CHECK(std::abs(s.gap - 1.0) < tol::eigen);
  CHECK(s.ground_degeneracy == 1);
  CHECK(s.e1 == doctest::Approx(-2.75).epsilon(1e-10));
}

TEST_CASE("spectrum in the ferromagnetic phase") {
  const SpectrumSummary s = spectrum(ModelParams::xxz(-3.0));
  CHECK(s.ground_degeneracy == 2);
  CHECK(s.e0 == doctest::Approx(-4.5).epsilon(1e-12));

  // ground space spanned by |3/2,3/2> (index 0) and |-3/2,-3/2> (index 31)
  const UnitEigensystem& sys = unit_eigensystem(ModelParams::xxz(-3.0));
  double weight = 0.0;
  for (int col = 0; col < 2; ++col)
    weight += std::norm(sys.vectors(0, col)) + std::norm(sys.vectors(31, col));
  CHECK(weight == doctest::Approx(2.0).epsilon(1e-10));

  for (double d : linspace(-4.0, 4.0, 17)) {
    CHECK(spectrum(ModelParams::xxz(d)).gap >= 0.0);
    CHECK(spectrum(ModelParams::aniso(d)).gap >= 0.0);
  }
}

TEST_CASE("first excited level is continuous on smooth branches") {
  const double h = 0.05;
  // |dE1/dparam| is bounded by the perturbation norm (9/4); allow 10x.
  const double bound = 10.0 * 3.0 * h;
  for (Model m : {Model::xxz, Model::aniso}) {
    double prev_e1 = spectrum({m, -1.9}).e1;
    for (double d = -1.9 + h; d <= 4.0; d += h) {
      const double e1 = spectrum({m, d}).e1;
      CHECK(std::abs(e1 - prev_e1) < bound);
      prev_e1 = e1;
    }
  }
}

TEST_CASE("transition detection") {
  std::vector<double> grid;
  for (double d = -4.0; d <= 0.0 + 1e-9; d += 0.01) grid.push_back(d);

  const TransitionScan scan = detect_transition(Model::xxz, grid);
  REQUIRE(scan.kinks.size() == 1);
  CHECK(std::abs(scan.kinks[0].location - (-2.0)) <= 0.01);
  CHECK(std::abs(std::abs(scan.kinks[0].slope_jump) - 2.70) < 0.05);

  std::vector<double> wide;
  for (double d = -4.0; d <= 4.0 + 1e-9; d += 0.02) wide.push_back(d);
  CHECK(detect_transition(Model::aniso, wide).kinks.empty());

  std::vector<double> smooth;
  for (double d = 0.0; d <= 4.0 + 1e-9; d += 0.02) smooth.push_back(d);
  CHECK(detect_transition(Model::xxz, smooth).kinks.empty());

  std::vector<double> tiny{0.0, 1.0};
  CHECK_THROWS_AS(detect_transition(Model::xxz, tiny), std::invalid_argument);
  std::vector<double> unordered{0.0, 1.0, 0.5};
  CHECK_THROWS_AS(detect_transition(Model::xxz, unordered), std::invalid_argument);

  // a coarse grid cannot separate curvature from kinks and must say so
  std::vector<double> coarse;
  for (double d = -4.0; d <= 0.0 + 1e-9; d += 0.5) coarse.push_back(d);
  CHECK(detect_transition(Model::xxz, coarse).coarse_grid_warning);
  CHECK_FALSE(scan.coarse_grid_warning);
}
