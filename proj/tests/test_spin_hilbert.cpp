// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "qcp/constants.hpp"
#include "qcp/spin_hilbert.hpp"

using namespace qcp;

namespace {

double commutator_defect(const Matrix& a, const Matrix& b, const Matrix& c) {
  // || [a, b] - i c ||_max
  return (a * b - b * a - Complex(0, 1) * c).cwiseAbs().maxCoeff();
}

// Permutation of the three qubit slots on the 32-dim unit space.
Matrix qubit_permutation(int p1, int p2, int p3) {
  Matrix perm = Matrix::Zero(unit_dimension, unit_dimension);
  const int target[3] = {p1, p2, p3};
  for (int i = 0; i < unit_dimension; ++i) {
    const int center = i >> 3;
    const int bits[3] = {(i >> 2) & 1, (i >> 1) & 1, i & 1};
    int out = center << 3;
    for (int q = 0; q < 3; ++q) out |= bits[q] << (2 - target[q]);
    perm(out, i) = 1.0;
  }
  return perm;
}

}  // namespace

TEST_CASE("spin operator matrices") {
  for (double s : {0.5, 1.5}) {
    const SpinOperators ops = spin_operators(s);
    const int dim = static_cast<int>(2 * s + 1);
    REQUIRE(ops.sz.rows() == dim);

    for (int k = 0; k < dim; ++k)
      CHECK(ops.sz(k, k).real() == s - k);

    CHECK(commutator_defect(ops.sx, ops.sy, ops.sz) < tol::algebra);
    CHECK(commutator_defect(ops.sy, ops.sz, ops.sx) < tol::algebra);
    CHECK(commutator_defect(ops.sz, ops.sx, ops.sy) < tol::algebra);

    CHECK(hermiticity_defect(ops.sx) < 1e-14);
    CHECK(hermiticity_defect(ops.sy) < 1e-14);
    CHECK(hermiticity_defect(ops.sz) < 1e-14);
    CHECK((ops.splus - (ops.sx + Complex(0, 1) * ops.sy)).cwiseAbs().maxCoeff() < 1e-14);
  }
  CHECK(spin_operators(0.5).sz(0, 0).real() == 0.5);
  CHECK(spin_operators(1.5).sz(0, 0).real() == 1.5);
  CHECK(spin_operators(1.5).sz(3, 3).real() == -1.5);

  CHECK_THROWS_AS(spin_operators(1.0), std::invalid_argument);
  CHECK_THROWS_AS(spin_operators(2.5), std::invalid_argument);
}

TEST_CASE("embed places operators on the right slot") {
  const SpinOperators center = spin_operators(1.5);
  const SpinOperators qubit = spin_operators(0.5);

  const UnitOperator sz_center = unit_embed(center.sz, 0);
  REQUIRE(sz_center.matrix.rows() == unit_dimension);
  for (int i = 0; i < 8; ++i)
    CHECK(sz_center.matrix(i, i).real() == 1.5);

  const Matrix identity = unit_embed(Matrix::Identity(2, 2), 2).matrix;
  CHECK((identity - Matrix::Identity(32, 32)).cwiseAbs().maxCoeff() == 0.0);

  CHECK(unit_embed(qubit.sz, 1).matrix.trace().real() == doctest::Approx(0.0));

  CHECK_THROWS_AS(unit_embed(center.sz, 1), std::invalid_argument);
  CHECK_THROWS_AS(embed(qubit.sz, 5, unit_dims), std::invalid_argument);
}

TEST_CASE("dicke states") {
  const Vector top = dicke_state(1.5);
  CHECK(top(0) == Complex(1.0, 0.0));

  const Vector mid = dicke_state(0.5);
  const double w = 1.0 / std::sqrt(3.0);
  CHECK(mid(1).real() == doctest::Approx(w));
  CHECK(mid(2).real() == doctest::Approx(w));
  CHECK(mid(4).real() == doctest::Approx(w));

  // orthonormality
  const double ms[4] = {1.5, 0.5, -0.5, -1.5};
  for (double ma : ms) {
    for (double mb : ms) {
      const Complex overlap = dicke_state(ma).adjoint() * dicke_state(mb);
      CHECK(std::abs(overlap - (ma == mb ? 1.0 : 0.0)) < tol::algebra);
    }
  }

  // total-Sz eigenvalue and permutation symmetry
  const SpinOperators qubit = spin_operators(0.5);
  Matrix sz_total = Matrix::Zero(8, 8);
  const std::array<int, 3> dims{2, 2, 2};
  for (int j = 0; j < 3; ++j) sz_total += embed(qubit.sz, j, dims);
  for (double m : ms) {
    const Vector v = dicke_state(m);
    CHECK((sz_total * v - m * v).norm() < tol::algebra);
  }

  CHECK_THROWS_AS(dicke_state(0.7), std::invalid_argument);
  CHECK_THROWS_AS(dicke_state(2.5), std::invalid_argument);
}

TEST_CASE("total Sz commutes with qubit permutations") {
  const SpinOperators center = spin_operators(1.5);
  const SpinOperators qubit = spin_operators(0.5);
  Matrix sz_total = unit_embed(center.sz, 0).matrix;
  for (std::size_t j = 1; j <= 3; ++j) sz_total += unit_embed(qubit.sz, j).matrix;

  const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                           {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  for (const auto& p : perms) {
    const Matrix perm = qubit_permutation(p[0], p[1], p[2]);
    CHECK((sz_total * perm - perm * sz_total).cwiseAbs().maxCoeff() < tol::algebra);
  }
}
