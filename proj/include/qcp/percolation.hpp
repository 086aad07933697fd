// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "qcp/unit_models.hpp"

namespace qcp {

enum class LatticeKind { honeycomb, square_octagon, square };

// Open boundaries; spanning means an occupied path from the left edge to the
// right edge. The honeycomb is generated in brick-wall coordinates.
struct LatticeSpec {
  LatticeKind kind;
  int size;  // linear size in cells
};

struct LatticeGraph {
  int site_count;
  std::vector<std::int32_t> neighbor_offsets;  // CSR, site_count + 1 entries
  std::vector<std::int32_t> neighbors;
  std::vector<std::int32_t> left_boundary;
  std::vector<std::int32_t> right_boundary;
};
LatticeGraph build_lattice(const LatticeSpec& spec);

// Union-find spanning decision for an explicit occupation mask.
bool spans(const LatticeGraph& graph, std::span<const char> occupied);

// Fraction of `trials` Monte Carlo configurations (sites occupied iid with
// probability p) containing a spanning cluster. Per-trial RNG streams derive
// from (seed, trial index), so the result is bit-identical for any worker
// count.
double spanning_probability(const LatticeSpec& spec, double p, int trials,
                            std::uint64_t seed, int workers = 0);

struct PercolationEstimate {
  double p_th;
  double std_error;
  int trials;
  int size;
};

// Bisection of the spanning-probability 0.5 crossing to a bracket of 0.002,
// repeated over n_seeds independent streams; reports mean and spread.
PercolationEstimate site_threshold(const LatticeSpec& spec, int trials,
                                   std::uint64_t seed, int n_seeds = 5,
                                   int workers = 0);

// Zero-temperature universality boundary from a site threshold:
// a*^2 = p_th / (4 - p_th), inverted through the deformation relation. The
// returned parameter value (delta* or d_z*) is the same for both models.
double zero_t_boundary_from_pth(double p_th);
double zero_t_boundary(const LatticeSpec& spec, Model model, int trials,
                       std::uint64_t seed, int n_seeds = 5, int workers = 0);

struct KCurvePoint {
  double p_l;
  double k;
  double std_error;
};

// Loss-renormalization curve k(p_l). k = 0 marks a point the estimator could
// not use; NaN marks loss beyond the ~40% 2D tolerance. Evaluation
// interpolates linearly and refuses to extrapolate.
class KCurve {
 public:
  KCurve(std::vector<KCurvePoint> points, std::string source);

  // Throws std::domain_error outside the usable sampled range.
  double eval(double p_l) const;

  const std::vector<KCurvePoint>& points() const { return points_; }
  const std::string& source() const { return source_; }

 private:
  std::vector<KCurvePoint> points_;
  std::vector<KCurvePoint> usable_;  // leading run of finite k > 0
  std::string source_;
};

// Monte Carlo estimator of k(p_l), an approximation: delete sites of an
// L x L square lattice with probability p_l, superimpose a node array with
// spacing ceil(spacing_scale / (1 - p_l)), and measure mean shortest-path
// length between adjacent nodes through surviving sites; k = spacing / mean.
KCurve estimate_k_curve(std::span<const double> loss_grid, int size, int trials,
                        std::uint64_t seed, double spacing_scale = 1.0,
                        int workers = 0);

}  // namespace qcp
