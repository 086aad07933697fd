// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "oracles.hpp"
#include "qcp/percolation.hpp"

using namespace qcp;

namespace {

int degree(const LatticeGraph& g, int site) {
  return g.neighbor_offsets[site + 1] - g.neighbor_offsets[site];
}

}  // namespace

TEST_CASE("lattice regularity") {
  const LatticeGraph honeycomb = build_lattice({LatticeKind::honeycomb, 24});
  int trivalent = 0;
  for (int s = 0; s < honeycomb.site_count; ++s)
    if (degree(honeycomb, s) == 3) ++trivalent;
  CHECK(trivalent > honeycomb.site_count / 2);
  for (int s = 0; s < honeycomb.site_count; ++s) CHECK(degree(honeycomb, s) <= 3);

  const LatticeGraph sq_oct = build_lattice({LatticeKind::square_octagon, 8});
  CHECK(sq_oct.site_count == 4 * 8 * 8);
  int sq_oct_trivalent = 0;
  for (int s = 0; s < sq_oct.site_count; ++s) {
    CHECK(degree(sq_oct, s) <= 3);
    if (degree(sq_oct, s) == 3) ++sq_oct_trivalent;
  }
  CHECK(sq_oct_trivalent > sq_oct.site_count * 3 / 4);

  const LatticeGraph square = build_lattice({LatticeKind::square, 8});
  for (int r = 1; r < 7; ++r)
    for (int c = 1; c < 7; ++c) CHECK(degree(square, r * 8 + c) == 4);

  CHECK_THROWS_AS(build_lattice({LatticeKind::square, 1}), std::invalid_argument);
}

TEST_CASE("union-find spanning matches exhaustive search on a hand-built grid") {
  const LatticeGraph g = build_lattice({LatticeKind::square, 4});

  // a winding occupied path from left to right
  std::vector<char> path(16, 0);
  for (int s : {0, 4, 5, 9, 10, 14, 15}) path[s] = 1;
  CHECK(spans(g, path));
  CHECK(test_oracles::bfs_spans(g, path));

  // break one link of the path
  path[9] = 0;
  CHECK_FALSE(spans(g, path));
  CHECK_FALSE(test_oracles::bfs_spans(g, path));

  // a top-to-bottom wall does not span left-to-right
  std::vector<char> wall(16, 0);
  for (int r = 0; r < 4; ++r) wall[r * 4 + 2] = 1;
  CHECK_FALSE(spans(g, wall));
  CHECK_FALSE(test_oracles::bfs_spans(g, wall));
}

TEST_CASE("union-find agrees with BFS on random masks across lattices") {
  std::mt19937_64 rng(123);
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  for (LatticeKind kind :
       {LatticeKind::square, LatticeKind::honeycomb, LatticeKind::square_octagon}) {
    const LatticeGraph g = build_lattice({kind, 6});
    for (int trial = 0; trial < 40; ++trial) {
      const double p = 0.3 + 0.5 * uniform(rng);
      std::vector<char> mask(g.site_count);
      for (auto& cell : mask) cell = uniform(rng) < p ? 1 : 0;
      CHECK(spans(g, mask) == test_oracles::bfs_spans(g, mask));
    }
  }
}

TEST_CASE("spanning probability endpoints and determinism") {
  const LatticeSpec spec{LatticeKind::honeycomb, 16};
  CHECK(spanning_probability(spec, 1.0, 20, 1) == 1.0);
  CHECK(spanning_probability(spec, 0.0, 20, 1) == 0.0);

  const double first = spanning_probability(spec, 0.68, 150, 42);
  const double second = spanning_probability(spec, 0.68, 150, 42);
  CHECK(first == second);
  const double parallel = spanning_probability(spec, 0.68, 150, 42, 3);
  CHECK(first == parallel);

  CHECK_THROWS_AS(spanning_probability(spec, 1.2, 10, 1), std::invalid_argument);
}

TEST_CASE("spanning curves bracket the known thresholds") {
  const LatticeSpec honeycomb{LatticeKind::honeycomb, 32};
  CHECK(spanning_probability(honeycomb, 0.64, 300, 9) < 0.5);
  CHECK(spanning_probability(honeycomb, 0.75, 300, 9) > 0.5);

  const LatticeSpec square{LatticeKind::square, 32};
  CHECK(spanning_probability(square, 0.55, 300, 9) < 0.5);
  CHECK(spanning_probability(square, 0.64, 300, 9) > 0.5);
}

TEST_CASE("site threshold estimation") {
  const PercolationEstimate est =
      site_threshold({LatticeKind::square, 32}, 150, 77, 3);
  CHECK(est.p_th == doctest::Approx(0.5927).epsilon(0.05));
  CHECK(est.std_error > 0.0);
  CHECK(est.trials == 150);

  // doubling the size moves the estimate by less than 0.01
  const PercolationEstimate small =
      site_threshold({LatticeKind::honeycomb, 24}, 400, 5, 3);
  const PercolationEstimate large =
      site_threshold({LatticeKind::honeycomb, 48}, 400, 5, 3);
  CHECK(std::abs(small.p_th - large.p_th) < 0.01);

  CHECK_THROWS_AS(site_threshold({LatticeKind::square, 16}, 5, 1, 1),
                  std::invalid_argument);
}

TEST_CASE("zero-temperature boundary inversion") {
  const double param = zero_t_boundary_from_pth(0.697);
  CHECK(std::abs(param - (-1.2882)) < 0.005);
  CHECK(0.697 / (4.0 - 0.697) == doctest::Approx(0.211).epsilon(0.001));

  // round trip through the forward deformation map
  const double a2 = 0.697 / (4.0 - 0.697);
  const double a = deformation_parameter(ModelParams::xxz(param));
  CHECK(a * a == doctest::Approx(a2).epsilon(1e-10));

  CHECK_THROWS_AS(zero_t_boundary_from_pth(1.5), std::invalid_argument);
}

TEST_CASE("k-curve estimator basics") {
  const double grid[] = {0.0, 0.15, 0.3, 0.45};
  const KCurve curve = estimate_k_curve(grid, 32, 12, 99);
  REQUIRE(curve.points().size() == 4);

  CHECK(curve.points()[0].k == 1.0);  // exactly, by construction
  CHECK(std::isnan(curve.points()[3].k));  // beyond the ~40% loss tolerance

  // non-increasing within two standard errors
  for (std::size_t i = 1; i + 1 < curve.points().size(); ++i) {
    const auto& prev = curve.points()[i - 1];
    const auto& cur = curve.points()[i];
    CHECK(cur.k <= prev.k + 2.0 * (prev.std_error + cur.std_error) + 1e-12);
  }

  // determinism
  const KCurve again = estimate_k_curve(grid, 32, 12, 99);
  for (std::size_t i = 0; i < curve.points().size(); ++i) {
    if (std::isnan(curve.points()[i].k)) continue;
    CHECK(curve.points()[i].k == again.points()[i].k);
  }

  const double bad_grid[] = {0.0, 0.6};
  CHECK_THROWS_AS(estimate_k_curve(bad_grid, 32, 12, 99), std::invalid_argument);
}

TEST_CASE("k-curve interpolation refuses to extrapolate") {
  const KCurve curve({{0.0, 1.0, 0.0}, {0.2, 0.8, 0.0}, {0.4, 0.5, 0.0}}, "table");
  CHECK(curve.eval(0.0) == doctest::Approx(1.0));
  CHECK(curve.eval(0.1) == doctest::Approx(0.9));
  CHECK(curve.eval(0.3) == doctest::Approx(0.65));
  CHECK(curve.eval(0.4) == doctest::Approx(0.5));
  CHECK_THROWS_AS(curve.eval(0.41), std::domain_error);
  CHECK_THROWS_AS(curve.eval(-0.01), std::domain_error);

  // unusable points cut the usable range
  const KCurve cut({{0.0, 1.0, 0.0}, {0.2, 0.7, 0.0}, {0.3, 0.0, 0.0}, {0.4, 0.6, 0.0}},
                   "table");
  CHECK(cut.eval(0.2) == doctest::Approx(0.7));
  CHECK_THROWS_AS(cut.eval(0.25), std::domain_error);
}
