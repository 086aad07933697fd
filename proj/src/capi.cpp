// SPDX-License-Identifier: Apache-2.0
#include "qcpower.h"

#include <cmath>
#include <cstring>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "qcp/cluster_errors.hpp"
#include "qcp/constants.hpp"
#include "qcp/ghz_distill.hpp"
#include "qcp/pauli_channel.hpp"
#include "qcp/percolation.hpp"
#include "qcp/phase_boundary.hpp"
#include "qcp/thermal_state.hpp"
#include "qcp/unit_models.hpp"

struct qcp_model {
  qcp::ModelParams params;
};

struct qcp_kcurve {
  qcp::KCurve curve;
};

namespace {

thread_local std::string g_last_error;

struct BufferTooSmall : std::exception {
  const char* what() const noexcept override { return "output buffer too small"; }
};

qcp_status fail(qcp_status status, const char* message) {
  g_last_error = message;
  return status;
}

template <typename F>
qcp_status wrap(F&& body) noexcept {
  try {
    body();
    g_last_error.clear();
    return QCP_OK;
  } catch (const BufferTooSmall& e) {
    return fail(QCP_ERROR_BUFFER_TOO_SMALL, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(QCP_ERROR_INVALID_ARGUMENT, e.what());
  } catch (const std::domain_error& e) {
    return fail(QCP_ERROR_DOMAIN, e.what());
  } catch (const std::bad_alloc&) {
    return fail(QCP_ERROR_RUNTIME, "out of memory");
  } catch (const std::exception& e) {
    return fail(QCP_ERROR_RUNTIME, e.what());
  } catch (...) {
    return fail(QCP_ERROR_RUNTIME, "unknown error");
  }
}

qcp::ModelParams to_params(qcp_model_kind kind, double parameter) {
  switch (kind) {
    case QCP_MODEL_XXZ:
      return qcp::ModelParams::xxz(parameter);
    case QCP_MODEL_ANISO:
      return qcp::ModelParams::aniso(parameter);
  }
  throw std::invalid_argument("unknown model kind");
}

qcp::LatticeSpec to_lattice(qcp_lattice_kind kind, int size) {
  switch (kind) {
    case QCP_LATTICE_HONEYCOMB:
      return {qcp::LatticeKind::honeycomb, size};
    case QCP_LATTICE_SQUARE_OCTAGON:
      return {qcp::LatticeKind::square_octagon, size};
    case QCP_LATTICE_SQUARE:
      return {qcp::LatticeKind::square, size};
  }
  throw std::invalid_argument("unknown lattice kind");
}

qcp::Dim to_dim(qcp_dim dim) {
  if (dim == QCP_DIM_2D) return qcp::Dim::two_d;
  if (dim == QCP_DIM_3D) return qcp::Dim::three_d;
  throw std::invalid_argument("dim must be QCP_DIM_2D or QCP_DIM_3D");
}

qcp_verdict to_c(qcp::Verdict v) {
  switch (v) {
    case qcp::Verdict::universal:
      return QCP_VERDICT_UNIVERSAL;
    case qcp::Verdict::not_universal:
      return QCP_VERDICT_NOT_UNIVERSAL;
    case qcp::Verdict::unusable:
      break;
  }
  return QCP_VERDICT_UNUSABLE;
}

qcp_phase_point to_c(const qcp::PhasePoint& pt) {
  qcp_phase_point out;
  out.parameter = pt.params.value;
  out.temperature = pt.temperature;
  out.p_z = pt.p_z;
  out.p_l = pt.p_l;
  out.universal_2d = to_c(pt.universal_2d);
  out.universal_3d = to_c(pt.universal_3d);
  out.margin_2d = pt.margin_2d;
  out.margin_3d = pt.margin_3d;
  return out;
}

void require(bool condition, const char* message) {
  if (!condition) throw std::invalid_argument(message);
}

}  // namespace

extern "C" {

const char* qcp_version(void) { return qcp::version_string; }

const char* qcp_last_error(void) { return g_last_error.c_str(); }

qcp_status qcp_model_create(qcp_model_kind kind, double parameter,
                            qcp_model** out_model) {
  return wrap([&] {
    require(out_model != nullptr, "out_model is NULL");
    qcp::ModelParams params = to_params(kind, parameter);
    if (!std::isfinite(parameter))
      throw std::invalid_argument("parameter must be finite");
    *out_model = new qcp_model{params};
  });
}

void qcp_model_destroy(qcp_model* model) { delete model; }

qcp_status qcp_deformation_parameter(const qcp_model* model, double* out_a) {
  return wrap([&] {
    require(model != nullptr && out_a != nullptr, "NULL argument");
    *out_a = qcp::deformation_parameter(model->params);
  });
}

qcp_status qcp_analytic_ground_energy(const qcp_model* model, double* out_e0) {
  return wrap([&] {
    require(model != nullptr && out_e0 != nullptr, "NULL argument");
    *out_e0 = qcp::analytic_ground_energy(model->params);
  });
}

qcp_status qcp_spectrum(const qcp_model* model, qcp_spectrum_summary* out) {
  return wrap([&] {
    require(model != nullptr && out != nullptr, "NULL argument");
    const qcp::SpectrumSummary s = qcp::spectrum(model->params);
    out->e0 = s.e0;
    out->e1 = s.e1;
    out->gap = s.gap;
    out->ground_degeneracy = s.ground_degeneracy;
  });
}

qcp_status qcp_ground_state_check(const qcp_model* model, double* out_overlap,
                                  double* out_residual) {
  return wrap([&] {
    require(model != nullptr && out_overlap != nullptr && out_residual != nullptr,
            "NULL argument");
    const qcp::Vector analytic = qcp::analytic_ground_state(model->params);
    const qcp::UnitEigensystem& sys = qcp::unit_eigensystem(model->params);
    const qcp::Vector numeric = sys.vectors.col(0);
    *out_overlap = std::abs((analytic.adjoint() * numeric)(0, 0));
    const qcp::Matrix h = qcp::build_unit_hamiltonian(model->params).matrix;
    *out_residual = (h * analytic - sys.energies(0) * analytic).norm();
  });
}

qcp_status qcp_detect_transition(qcp_model_kind kind, const double* grid,
                                 size_t n, double jump_threshold,
                                 qcp_kink* out_kinks, size_t capacity,
                                 size_t* out_count, int* out_coarse_warning) {
  return wrap([&] {
    require(grid != nullptr && out_count != nullptr, "NULL argument");
    const double threshold = jump_threshold > 0 ? jump_threshold : 0.5;
    const qcp::TransitionScan scan = qcp::detect_transition(
        kind == QCP_MODEL_XXZ ? qcp::Model::xxz : qcp::Model::aniso,
        std::span<const double>(grid, n), threshold);
    *out_count = scan.kinks.size();
    if (out_coarse_warning != nullptr)
      *out_coarse_warning = scan.coarse_grid_warning ? 1 : 0;
    if (out_kinks != nullptr) {
      if (capacity < scan.kinks.size()) throw BufferTooSmall{};
      for (std::size_t i = 0; i < scan.kinks.size(); ++i) {
        out_kinks[i].location = scan.kinks[i].location;
        out_kinks[i].slope_jump = scan.kinks[i].slope_jump;
      }
    }
  });
}

const char* qcp_pauli_class_name(int index) {
  if (index < 0 || index >= qcp::pauli_class_count) return nullptr;
  return qcp::pauli_class_names()[static_cast<std::size_t>(index)].data();
}

qcp_status qcp_error_analysis(const qcp_model* model, double temperature,
                              qcp_error_report* out) {
  return wrap([&] {
    require(model != nullptr && out != nullptr, "NULL argument");
    const double a = qcp::deformation_parameter(model->params);
    const qcp::ThermalState state = qcp::thermal_state(model->params, temperature);
    const qcp::LogicalGhzState ghz = qcp::distill_channel(state, a);
    const qcp::PauliErrorDistribution dist =
        qcp::extract_error_probs(qcp::twirl(ghz.rho16), ghz.p_s);
    for (int i = 0; i < qcp::pauli_class_count; ++i) out->probs[i] = dist.probs[i];
    out->p_s = ghz.p_s;
    out->ghz_fidelity = qcp::state_fidelity(ghz.rho16, qcp::ghz_state());
    out->p_z = qcp::phase_error_rate(dist);
    out->p_l = qcp::loss_rate(ghz.p_s);
  });
}

qcp_status qcp_p_delete(double a, double* out) {
  return wrap([&] {
    require(out != nullptr, "NULL argument");
    *out = qcp::p_delete(a);
  });
}

qcp_status qcp_spanning_probability(qcp_lattice_kind lattice, int size, double p,
                                    int trials, uint64_t seed, int workers,
                                    double* out) {
  return wrap([&] {
    require(out != nullptr, "NULL argument");
    *out = qcp::spanning_probability(to_lattice(lattice, size), p, trials, seed,
                                     workers);
  });
}

qcp_status qcp_site_threshold(qcp_lattice_kind lattice, int size, int trials,
                              uint64_t seed, int n_seeds, int workers,
                              qcp_percolation_estimate* out) {
  return wrap([&] {
    require(out != nullptr, "NULL argument");
    const qcp::PercolationEstimate est = qcp::site_threshold(
        to_lattice(lattice, size), trials, seed, n_seeds, workers);
    out->p_th = est.p_th;
    out->std_error = est.std_error;
    out->trials = est.trials;
    out->size = est.size;
  });
}

qcp_status qcp_zero_t_boundary(double p_th, double* out_parameter,
                               double* out_a_squared) {
  return wrap([&] {
    require(out_parameter != nullptr, "NULL argument");
    *out_parameter = qcp::zero_t_boundary_from_pth(p_th);
    if (out_a_squared != nullptr) *out_a_squared = p_th / (4.0 - p_th);
  });
}

qcp_status qcp_kcurve_estimate(const double* loss_grid, size_t n, int size,
                               int trials, uint64_t seed, double spacing_scale,
                               int workers, qcp_kcurve** out) {
  return wrap([&] {
    require(loss_grid != nullptr && out != nullptr, "NULL argument");
    *out = new qcp_kcurve{qcp::estimate_k_curve(
        std::span<const double>(loss_grid, n), size, trials, seed,
        spacing_scale > 0 ? spacing_scale : 1.0, workers)};
  });
}

qcp_status qcp_kcurve_from_table(const double* p_l, const double* k, size_t n,
                                 qcp_kcurve** out) {
  return wrap([&] {
    require(p_l != nullptr && k != nullptr && out != nullptr, "NULL argument");
    std::vector<qcp::KCurvePoint> points(n);
    for (size_t i = 0; i < n; ++i) points[i] = {p_l[i], k[i], 0.0};
    *out = new qcp_kcurve{qcp::KCurve(std::move(points), "table")};
  });
}

void qcp_kcurve_destroy(qcp_kcurve* curve) { delete curve; }

qcp_status qcp_kcurve_size(const qcp_kcurve* curve, size_t* out) {
  return wrap([&] {
    require(curve != nullptr && out != nullptr, "NULL argument");
    *out = curve->curve.points().size();
  });
}

qcp_status qcp_kcurve_point(const qcp_kcurve* curve, size_t index,
                            double* out_p_l, double* out_k,
                            double* out_std_error) {
  return wrap([&] {
    require(curve != nullptr, "NULL argument");
    const auto& pts = curve->curve.points();
    require(index < pts.size(), "index out of range");
    if (out_p_l != nullptr) *out_p_l = pts[index].p_l;
    if (out_k != nullptr) *out_k = pts[index].k;
    if (out_std_error != nullptr) *out_std_error = pts[index].std_error;
  });
}

qcp_status qcp_kcurve_eval(const qcp_kcurve* curve, double p_l, double* out_k) {
  return wrap([&] {
    require(curve != nullptr && out_k != nullptr, "NULL argument");
    *out_k = curve->curve.eval(p_l);
  });
}

qcp_status qcp_evaluate_point(const qcp_model* model, double temperature,
                              const qcp_kcurve* kcurve, qcp_phase_point* out) {
  return wrap([&] {
    require(model != nullptr && out != nullptr, "NULL argument");
    *out = to_c(qcp::evaluate_point(model->params, temperature,
                                    kcurve ? &kcurve->curve : nullptr));
  });
}

qcp_status qcp_boundary_temperature(const qcp_model* model, qcp_dim dim,
                                    const qcp_kcurve* kcurve, double margin_tol,
                                    double* out_t_star,
                                    qcp_boundary_status* out_status) {
  return wrap([&] {
    require(model != nullptr && out_t_star != nullptr && out_status != nullptr,
            "NULL argument");
    const qcp::BoundaryResult result = qcp::boundary_temperature(
        model->params, to_dim(dim), kcurve ? &kcurve->curve : nullptr,
        margin_tol > 0 ? margin_tol : 1e-6);
    *out_t_star = result.t_star;
    switch (result.status) {
      case qcp::BoundaryResult::Status::found:
        *out_status = QCP_BOUNDARY_FOUND;
        break;
      case qcp::BoundaryResult::Status::none:
        *out_status = QCP_BOUNDARY_NONE;
        break;
      case qcp::BoundaryResult::Status::above_t_max:
        *out_status = QCP_BOUNDARY_ABOVE_TMAX;
        break;
    }
  });
}

qcp_status qcp_phase_sweep(qcp_model_kind kind, const double* params,
                           size_t n_params, const double* temps, size_t n_temps,
                           qcp_dim dim, const qcp_kcurve* kcurve, int workers,
                           double margin_tol, qcp_phase_point* out_points,
                           double* out_boundary_t,
                           qcp_boundary_status* out_boundary_status) {
  return wrap([&] {
    require(params != nullptr && temps != nullptr && out_points != nullptr,
            "NULL argument");
    const qcp::PhaseDiagram diagram = qcp::sweep(
        kind == QCP_MODEL_XXZ ? qcp::Model::xxz : qcp::Model::aniso,
        std::span<const double>(params, n_params),
        std::span<const double>(temps, n_temps), to_dim(dim),
        kcurve ? &kcurve->curve : nullptr, workers,
        margin_tol > 0 ? margin_tol : 1e-6);
    for (std::size_t i = 0; i < diagram.grid.size(); ++i)
      out_points[i] = to_c(diagram.grid[i]);
    for (std::size_t ip = 0; ip < diagram.boundary.size(); ++ip) {
      const qcp::BoundaryResult& b = diagram.boundary[ip];
      if (out_boundary_t != nullptr) {
        switch (b.status) {
          case qcp::BoundaryResult::Status::found:
            out_boundary_t[ip] = b.t_star;
            break;
          case qcp::BoundaryResult::Status::none:
            out_boundary_t[ip] = std::numeric_limits<double>::quiet_NaN();
            break;
          case qcp::BoundaryResult::Status::above_t_max:
            out_boundary_t[ip] = std::numeric_limits<double>::infinity();
            break;
        }
      }
      if (out_boundary_status != nullptr) {
        out_boundary_status[ip] =
            b.status == qcp::BoundaryResult::Status::found ? QCP_BOUNDARY_FOUND
            : b.status == qcp::BoundaryResult::Status::none
                ? QCP_BOUNDARY_NONE
                : QCP_BOUNDARY_ABOVE_TMAX;
      }
    }
  });
}

qcp_status qcp_verify_propagation(char* buffer, size_t capacity, size_t* out_len,
                                  int* out_rules_passed, int* out_rules_total) {
  return wrap([&] {
    const qcp::PropagationReport report = qcp::verify_propagation_oracle();
    if (out_rules_passed != nullptr) *out_rules_passed = report.rules_passed;
    if (out_rules_total != nullptr) *out_rules_total = report.rules_total;
    const size_t needed = report.text.size() + 1;
    if (out_len != nullptr) *out_len = needed;
    if (buffer != nullptr) {
      if (capacity < needed) throw BufferTooSmall{};
      std::memcpy(buffer, report.text.c_str(), needed);
    }
  });
}

}  // extern "C"
