// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <span>
#include <string>
#include <vector>

#include "qcp/cluster_errors.hpp"
#include "qcp/ghz_distill.hpp"
#include "qcp/percolation.hpp"

namespace qcp {

enum class Dim { two_d = 2, three_d = 3 };

enum class Verdict { not_universal = 0, universal = 1, unusable = -1 };

struct PhasePoint {
  ModelParams params;
  double temperature;
  double p_z;  // NaN when no entangled resource exists (xxz, delta <= -2)
  double p_l;
  Verdict universal_2d;  // unusable when no k table covers the point
  Verdict universal_3d;
  double margin_2d;  // signed distance to the threshold; >= 0 means universal
  double margin_3d;
};

// Full pipeline: thermal state -> distillation -> twirl -> error extraction
// -> threshold verdicts. 2D: 3 p_z / k(p_l) <= phase_threshold_2d and
// p_l <= loss_tolerance_2d. 3D: p_l/loss_threshold_3d + p_z/phase_threshold_3d
// <= 1 (never consults the k curve). kcurve may be null.
PhasePoint evaluate_point(const ModelParams& params, double temperature,
                          const KCurve* kcurve);

struct BoundaryResult {
  enum class Status { found, none, above_t_max };
  Status status;
  double t_star;  // boundary temperature for found; ftq::t_max for above_t_max
  double margin;  // margin at t_star
};

// Bisection of the universality margin over T in [0, ftq::t_max], exploiting
// monotonic error growth with temperature. Returns none when the point is
// not universal even at T = 0.
BoundaryResult boundary_temperature(const ModelParams& params, Dim dim,
                                    const KCurve* kcurve,
                                    double margin_tol = 1e-6);

struct PhaseDiagram {
  Model model;
  Dim dim;
  std::vector<double> param_grid;
  std::vector<double> temp_grid;
  std::vector<PhasePoint> grid;          // param-major: grid[ip * nT + it]
  std::vector<BoundaryResult> boundary;  // one entry per parameter value
  std::string k_source;
};

// Deterministic data-parallel evaluation of the full (parameter, T) grid
// plus the boundary curve.
PhaseDiagram sweep(Model model, std::span<const double> params,
                   std::span<const double> temps, Dim dim, const KCurve* kcurve,
                   int workers = 0, double margin_tol = 1e-6);

}  // namespace qcp
