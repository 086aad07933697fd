// SPDX-License-Identifier: Apache-2.0
#include "qcp/phase_boundary.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "qcp/constants.hpp"
#include "qcp/parallel.hpp"

namespace qcp {

namespace {

constexpr double nan_value = std::numeric_limits<double>::quiet_NaN();

// Margin used for bisection: the requested dimension's margin, with
// unusable and resource-free points pushed to -inf (not universal).
double bisection_margin(const PhasePoint& pt, Dim dim) {
  const double margin = dim == Dim::two_d ? pt.margin_2d : pt.margin_3d;
  const Verdict verdict = dim == Dim::two_d ? pt.universal_2d : pt.universal_3d;
  if (verdict == Verdict::unusable || std::isnan(margin))
    return -std::numeric_limits<double>::infinity();
  return margin;
}

}  // namespace

PhasePoint evaluate_point(const ModelParams& params, double temperature,
                          const KCurve* kcurve) {
  PhasePoint pt{params,        temperature,
                nan_value,     nan_value,
                Verdict::not_universal, Verdict::not_universal,
                nan_value,     nan_value};

  // No entangled resource in the ferromagnetic ground space.
  if (params.model == Model::xxz && params.value <= -2.0) return pt;

  const double a = deformation_parameter(params);
  const ThermalState state = thermal_state(params, temperature);
  const LogicalGhzState ghz = distill_channel(state, a);
  const PauliErrorDistribution dist = extract_error_probs(twirl(ghz.rho16), ghz.p_s);

  pt.p_z = phase_error_rate(dist);
  pt.p_l = loss_rate(ghz.p_s);

  pt.margin_3d = 1.0 - (pt.p_l / ftq::loss_threshold_3d +
                        pt.p_z / ftq::phase_threshold_3d);
  pt.universal_3d =
      pt.margin_3d >= 0.0 ? Verdict::universal : Verdict::not_universal;

  if (kcurve == nullptr) {
    pt.universal_2d = Verdict::unusable;
    return pt;
  }
  const double loss_margin =
      (ftq::loss_tolerance_2d - pt.p_l) / ftq::loss_tolerance_2d;
  if (pt.p_l > ftq::loss_tolerance_2d) {
    pt.margin_2d = loss_margin;
    pt.universal_2d = Verdict::not_universal;
    return pt;
  }
  try {
    const double k = kcurve->eval(pt.p_l);
    const double phase_margin =
        1.0 - 3.0 * pt.p_z / (k * ftq::phase_threshold_2d);
    pt.margin_2d = std::min(phase_margin, loss_margin);
    pt.universal_2d =
        pt.margin_2d >= 0.0 ? Verdict::universal : Verdict::not_universal;
  } catch (const std::domain_error&) {
    pt.universal_2d = Verdict::unusable;  // k table does not cover this loss
  }
  return pt;
}

BoundaryResult boundary_temperature(const ModelParams& params, Dim dim,
                                    const KCurve* kcurve, double margin_tol) {
  if (!(margin_tol > 0.0))
    throw std::invalid_argument("boundary_temperature: margin_tol must be > 0");

  auto margin_at = [&](double t) {
    return bisection_margin(evaluate_point(params, t, kcurve), dim);
  };

  const double margin_zero = margin_at(0.0);
  if (margin_zero < 0.0)
    return BoundaryResult{BoundaryResult::Status::none, nan_value, margin_zero};

  const double margin_top = margin_at(ftq::t_max);
  if (margin_top >= 0.0)
    return BoundaryResult{BoundaryResult::Status::above_t_max, ftq::t_max,
                          margin_top};

  double lo = 0.0, hi = ftq::t_max;
  double mid = 0.0, margin_mid = margin_zero;
  for (int iteration = 0; iteration < 200; ++iteration) {
    mid = 0.5 * (lo + hi);
    margin_mid = margin_at(mid);
    if (std::abs(margin_mid) < margin_tol) break;
    (margin_mid >= 0.0 ? lo : hi) = mid;
    if (hi - lo < 1e-12) {
      mid = 0.5 * (lo + hi);
      break;
    }
  }
  return BoundaryResult{BoundaryResult::Status::found, mid, margin_mid};
}

PhaseDiagram sweep(Model model, std::span<const double> params,
                   std::span<const double> temps, Dim dim, const KCurve* kcurve,
                   int workers, double margin_tol) {
  if (params.empty() || temps.empty())
    throw std::invalid_argument("sweep: grids must be non-empty");
  for (std::size_t i = 1; i < params.size(); ++i)
    if (!(params[i] > params[i - 1]))
      throw std::invalid_argument("sweep: parameter grid must be increasing");
  for (std::size_t i = 1; i < temps.size(); ++i)
    if (!(temps[i] > temps[i - 1]))
      throw std::invalid_argument("sweep: temperature grid must be increasing");

  PhaseDiagram diagram;
  diagram.model = model;
  diagram.dim = dim;
  diagram.param_grid.assign(params.begin(), params.end());
  diagram.temp_grid.assign(temps.begin(), temps.end());
  diagram.k_source = kcurve ? kcurve->source() : "none";
  diagram.grid.resize(params.size() * temps.size());
  diagram.boundary.resize(params.size());

  const std::size_t n_temps = temps.size();
  parallel_for(diagram.grid.size(), workers, [&](std::size_t idx) {
    const ModelParams point_params{model, params[idx / n_temps]};
    diagram.grid[idx] = evaluate_point(point_params, temps[idx % n_temps], kcurve);
  });
  parallel_for(params.size(), workers, [&](std::size_t ip) {
    diagram.boundary[ip] =
        boundary_temperature({model, params[ip]}, dim, kcurve, margin_tol);
  });
  return diagram;
}

}  // namespace qcp
