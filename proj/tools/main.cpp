// SPDX-License-Identifier: Apache-2.0
//
// qcpower command-line interface. All computation goes through the C API in
// qcpower.h; this file only parses arguments and formats CSV/JSON output.

#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qcpower.h"

using ordered_json = nlohmann::ordered_json;

namespace {

constexpr std::uint64_t default_seed = 12345;

struct CliError : std::runtime_error {
  int exit_code;
  CliError(const std::string& message, int code)
      : std::runtime_error(message), exit_code(code) {}
};

void check(qcp_status status) {
  if (status == QCP_OK) return;
  const int code =
      (status == QCP_ERROR_INVALID_ARGUMENT || status == QCP_ERROR_DOMAIN) ? 2 : 1;
  throw CliError(qcp_last_error(), code);
}

[[noreturn]] void fail_validation(const std::string& message) {
  throw CliError(message, 2);
}

// Full-precision, locale-independent float formatting for CSV.
std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// Human display rounding: 4 decimals near 1, 3 significant figures otherwise.
std::string fmt_display(double v) {
  char buf[40];
  if (std::isfinite(v) && std::abs(v) >= 0.1)
    std::snprintf(buf, sizeof buf, "%.4f", v);
  else
    std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

// Grid syntax lo:hi:step with inclusive endpoints (1e-12 * step slack).
std::vector<double> parse_range(const std::string& text) {
  double lo = 0, hi = 0, step = 0;
  char extra = 0;
  if (std::sscanf(text.c_str(), "%lf:%lf:%lf%c", &lo, &hi, &step, &extra) != 3)
    fail_validation("malformed range '" + text + "' (expected lo:hi:step)");
  if (!(step > 0)) fail_validation("range step must be > 0 in '" + text + "'");
  if (hi < lo) fail_validation("range upper bound below lower bound in '" + text + "'");
  std::vector<double> values;
  for (int i = 0;; ++i) {
    const double v = lo + i * step;
    if (v > hi + 1e-12 * step) break;
    values.push_back(v);
  }
  return values;
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("QCPOWER_SEED")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0')
      fail_validation("QCPOWER_SEED is not an unsigned integer");
    return static_cast<std::uint64_t>(v);
  }
  return default_seed;
}

std::string timestamp_utc() {
  std::time_t now = std::time(nullptr);
  std::tm tm_utc{};
  gmtime_r(&now, &tm_utc);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
  return buf;
}

struct OutputSpec {
  std::string path;    // empty = stdout
  std::string format;  // "csv" or "json"
};

std::string render_cell(const ordered_json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_float()) return fmt(v.get<double>());
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  if (v.is_null()) return "nan";
  return v.dump();
}

// Tables carry a provenance metadata block: a '#' comment line in CSV, a
// "metadata" object in JSON. generated_at is the only non-reproducible field.
void emit_table(const OutputSpec& out, ordered_json meta,
                const std::vector<std::string>& columns,
                const std::vector<std::vector<ordered_json>>& rows) {
  meta["generated_at"] = timestamp_utc();
  std::ostringstream os;
  if (out.format == "json") {
    ordered_json doc;
    doc["metadata"] = std::move(meta);
    doc["columns"] = columns;
    doc["rows"] = rows;
    os << doc.dump(2) << '\n';
  } else {
    os << "# " << meta.dump() << '\n';
    for (std::size_t i = 0; i < columns.size(); ++i)
      os << (i ? "," : "") << columns[i];
    os << '\n';
    for (const auto& row : rows) {
      for (std::size_t i = 0; i < row.size(); ++i)
        os << (i ? "," : "") << render_cell(row[i]);
      os << '\n';
    }
  }
  if (out.path.empty()) {
    std::cout << os.str();
  } else {
    std::ofstream file(out.path, std::ios::binary);
    if (!file) throw CliError("cannot open output file '" + out.path + "'", 1);
    file << os.str();
    if (!file) throw CliError("failed writing '" + out.path + "'", 1);
  }
}

struct ModelHandle {
  qcp_model* ptr = nullptr;
  ModelHandle(qcp_model_kind kind, double parameter) {
    check(qcp_model_create(kind, parameter, &ptr));
  }
  ~ModelHandle() { qcp_model_destroy(ptr); }
  ModelHandle(const ModelHandle&) = delete;
  ModelHandle& operator=(const ModelHandle&) = delete;
};

struct KCurveHandle {
  qcp_kcurve* ptr = nullptr;
  KCurveHandle() = default;
  ~KCurveHandle() { qcp_kcurve_destroy(ptr); }
  KCurveHandle(const KCurveHandle&) = delete;
  KCurveHandle& operator=(const KCurveHandle&) = delete;
};

// ---- shared option bundles ----

struct ModelOptions {
  std::string model = "xxz";
  std::optional<double> delta, dz;
  std::string delta_range, dz_range;

  void attach(CLI::App* cmd, bool allow_range) {
    cmd->add_option("--model", model, "model: xxz or aniso")
        ->check(CLI::IsMember({"xxz", "aniso"}))
        ->required();
    cmd->add_option("--delta", delta, "xxz anisotropy offset delta");
    cmd->add_option("--dz", dz, "on-site anisotropy d_z");
    if (allow_range) {
      cmd->add_option("--delta-range", delta_range, "delta grid lo:hi:step");
      cmd->add_option("--dz-range", dz_range, "d_z grid lo:hi:step");
    }
  }

  qcp_model_kind kind() const {
    return model == "xxz" ? QCP_MODEL_XXZ : QCP_MODEL_ANISO;
  }

  const char* parameter_name() const { return model == "xxz" ? "delta" : "d_z"; }

  std::vector<double> values() const {
    const bool is_xxz = model == "xxz";
    if (is_xxz && (dz || !dz_range.empty()))
      fail_validation("--dz/--dz-range do not apply to the xxz model");
    if (!is_xxz && (delta || !delta_range.empty()))
      fail_validation("--delta/--delta-range do not apply to the aniso model");
    const auto& single = is_xxz ? delta : dz;
    const auto& range = is_xxz ? delta_range : dz_range;
    if (single && !range.empty())
      fail_validation("give either a single parameter or a range, not both");
    if (single) return {*single};
    if (!range.empty()) return parse_range(range);
    fail_validation(is_xxz ? "missing --delta or --delta-range"
                           : "missing --dz or --dz-range");
  }
};

struct OutputOptions {
  std::string out_path;
  std::string format = "csv";

  void attach(CLI::App* cmd) {
    cmd->add_option("--out", out_path, "output file (default: stdout)");
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"csv", "json"}));
  }

  OutputSpec spec() const { return {out_path, format}; }
};

qcp_lattice_kind parse_lattice(const std::string& name) {
  if (name == "honeycomb") return QCP_LATTICE_HONEYCOMB;
  if (name == "square-octagon") return QCP_LATTICE_SQUARE_OCTAGON;
  if (name == "square") return QCP_LATTICE_SQUARE;
  fail_validation("unknown lattice '" + name + "'");
}

// ---- subcommands ----

int run_spectrum(const ModelOptions& model_opts, const OutputOptions& out_opts) {
  const std::vector<double> params = model_opts.values();

  std::vector<std::vector<ordered_json>> rows;
  for (double p : params) {
    ModelHandle model(model_opts.kind(), p);
    qcp_spectrum_summary s{};
    check(qcp_spectrum(model.ptr, &s));
    double e0_analytic = 0;
    check(qcp_analytic_ground_energy(model.ptr, &e0_analytic));
    double a = std::numeric_limits<double>::quiet_NaN();
    const qcp_status a_status = qcp_deformation_parameter(model.ptr, &a);
    if (a_status == QCP_ERROR_DOMAIN)
      a = std::numeric_limits<double>::quiet_NaN();
    else
      check(a_status);
    rows.push_back({p, s.e0, e0_analytic, std::abs(s.e0 - e0_analytic), s.e1,
                    s.gap, s.ground_degeneracy, a});
  }

  ordered_json meta;
  meta["version"] = qcp_version();
  meta["command"] = "spectrum";
  meta["model"] = model_opts.model;
  meta["points"] = params.size();
  if (params.size() >= 3) {
    std::vector<qcp_kink> kinks(16);
    std::size_t count = 0;
    int coarse = 0;
    check(qcp_detect_transition(model_opts.kind(), params.data(), params.size(),
                                0.0, kinks.data(), kinks.size(), &count, &coarse));
    ordered_json klist = ordered_json::array();
    for (std::size_t i = 0; i < count; ++i)
      klist.push_back({{"location", kinks[i].location},
                       {"slope_jump", kinks[i].slope_jump}});
    meta["kinks"] = std::move(klist);
    meta["coarse_grid_warning"] = coarse != 0;
  }

  emit_table(out_opts.spec(), std::move(meta),
             {"parameter", "e0_numeric", "e0_analytic", "e0_abs_diff", "e1",
              "gap", "ground_degeneracy", "a"},
             rows);
  return 0;
}

int run_ground_check(const ModelOptions& model_opts, const OutputOptions& out_opts) {
  const std::vector<double> params = model_opts.values();
  std::vector<std::vector<ordered_json>> rows;
  for (double p : params) {
    ModelHandle model(model_opts.kind(), p);
    double overlap = 0, residual = 0;
    check(qcp_ground_state_check(model.ptr, &overlap, &residual));
    rows.push_back({p, overlap, residual});
  }
  ordered_json meta;
  meta["version"] = qcp_version();
  meta["command"] = "ground-check";
  meta["model"] = model_opts.model;
  emit_table(out_opts.spec(), std::move(meta),
             {"parameter", "overlap", "eigen_residual"}, rows);
  return 0;
}

int run_errors(const ModelOptions& model_opts, double temperature,
               const OutputOptions& out_opts) {
  const std::vector<double> params = model_opts.values();
  if (params.size() != 1)
    fail_validation("errors expects a single parameter value");

  ModelHandle model(model_opts.kind(), params[0]);
  qcp_error_report report{};
  check(qcp_error_analysis(model.ptr, temperature, &report));

  std::cout << "class,probability\n";
  for (int i = 0; i < QCP_PAULI_CLASSES; ++i)
    std::cout << qcp_pauli_class_name(i) << ',' << fmt_display(report.probs[i])
              << '\n';
  std::cout << '\n'
            << "p_s = " << fmt_display(report.p_s) << '\n'
            << "ghz_fidelity = " << fmt_display(report.ghz_fidelity) << '\n'
            << "p_z = " << fmt_display(report.p_z) << '\n'
            << "p_l = " << fmt_display(report.p_l) << '\n';

  if (!out_opts.out_path.empty()) {
    ordered_json meta;
    meta["version"] = qcp_version();
    meta["command"] = "errors";
    meta["model"] = model_opts.model;
    meta[model_opts.parameter_name()] = params[0];
    meta["temperature"] = temperature;
    meta["p_s"] = report.p_s;
    meta["ghz_fidelity"] = report.ghz_fidelity;
    meta["p_z"] = report.p_z;
    meta["p_l"] = report.p_l;
    std::vector<std::vector<ordered_json>> rows;
    for (int i = 0; i < QCP_PAULI_CLASSES; ++i)
      rows.push_back({std::string(qcp_pauli_class_name(i)), report.probs[i]});
    emit_table(out_opts.spec(), std::move(meta), {"class", "probability"}, rows);
  }
  return 0;
}

int run_percolation(const std::string& lattice_name, int size, int trials,
                    int n_seeds, std::uint64_t seed, int workers,
                    const std::string& curve_range, const OutputOptions& out_opts) {
  const qcp_lattice_kind lattice = parse_lattice(lattice_name);

  ordered_json meta;
  meta["version"] = qcp_version();
  meta["command"] = "percolation";
  meta["lattice"] = lattice_name;
  meta["size"] = size;
  meta["trials"] = trials;
  meta["seed"] = seed;

  if (!curve_range.empty()) {
    const std::vector<double> ps = parse_range(curve_range);
    std::vector<std::vector<ordered_json>> rows;
    for (std::size_t i = 0; i < ps.size(); ++i) {
      double span = 0;
      check(qcp_spanning_probability(lattice, size, ps[i], trials, seed + i,
                                     workers, &span));
      rows.push_back({ps[i], span});
    }
    meta["curve"] = curve_range;
    emit_table(out_opts.spec(), std::move(meta), {"p", "spanning_probability"},
               rows);
    return 0;
  }

  qcp_percolation_estimate est{};
  check(qcp_site_threshold(lattice, size, trials, seed, n_seeds, workers, &est));
  meta["seeds"] = n_seeds;
  std::cout << "p_th = " << fmt(est.p_th) << " +/- " << fmt(est.std_error)
            << "  (" << lattice_name << ", L=" << size << ", trials=" << trials
            << ", seeds=" << n_seeds << ")\n";
  if (!out_opts.out_path.empty()) {
    emit_table(out_opts.spec(), std::move(meta),
               {"lattice", "size", "trials", "seeds", "p_th", "std_error"},
               {{lattice_name, size, trials, n_seeds, est.p_th, est.std_error}});
  }
  return 0;
}

int run_kcurve(const std::string& loss_range, int size, int trials, double c0,
               std::uint64_t seed, int workers, const OutputOptions& out_opts) {
  const std::vector<double> grid = parse_range(loss_range);
  KCurveHandle curve;
  check(qcp_kcurve_estimate(grid.data(), grid.size(), size, trials, seed, c0,
                            workers, &curve.ptr));
  std::size_t n = 0;
  check(qcp_kcurve_size(curve.ptr, &n));
  std::vector<std::vector<ordered_json>> rows;
  for (std::size_t i = 0; i < n; ++i) {
    double p_l = 0, k = 0, std_error = 0;
    check(qcp_kcurve_point(curve.ptr, i, &p_l, &k, &std_error));
    rows.push_back({p_l, k, std_error});
  }
  ordered_json meta;
  meta["version"] = qcp_version();
  meta["command"] = "kcurve";
  meta["estimator"] = "square-lattice shortest-path (approximation)";
  meta["size"] = size;
  meta["trials"] = trials;
  meta["c0"] = c0;
  meta["seed"] = seed;
  emit_table(out_opts.spec(), std::move(meta), {"p_l", "k", "std_error"}, rows);
  return 0;
}

int run_zero_t_boundary(const ModelOptions& model_opts,
                        const std::string& lattice_name,
                        std::optional<double> pth_flag, int size, int trials,
                        int n_seeds, std::uint64_t seed, int workers,
                        const OutputOptions& out_opts) {
  double p_th = 0;
  double p_th_err = 0;
  std::string p_th_source;
  if (pth_flag) {
    p_th = *pth_flag;
    p_th_source = "user";
  } else {
    qcp_percolation_estimate est{};
    check(qcp_site_threshold(parse_lattice(lattice_name), size, trials, seed,
                             n_seeds, workers, &est));
    p_th = est.p_th;
    p_th_err = est.std_error;
    p_th_source = "monte-carlo";
  }
  double parameter = 0, a_squared = 0;
  check(qcp_zero_t_boundary(p_th, &parameter, &a_squared));

  std::cout << "p_th = " << fmt(p_th);
  if (p_th_source == "monte-carlo") std::cout << " +/- " << fmt(p_th_err);
  std::cout << "  (" << p_th_source << ", " << lattice_name << ")\n"
            << "a*^2 = " << fmt(a_squared) << '\n'
            << model_opts.parameter_name() << "* = " << fmt(parameter) << '\n';

  if (!out_opts.out_path.empty()) {
    ordered_json meta;
    meta["version"] = qcp_version();
    meta["command"] = "zero-t-boundary";
    meta["model"] = model_opts.model;
    meta["lattice"] = lattice_name;
    meta["p_th_source"] = p_th_source;
    meta["seed"] = seed;
    emit_table(out_opts.spec(), std::move(meta),
               {"lattice", "p_th", "p_th_std_error", "a_star_squared",
                std::string(model_opts.parameter_name()) + "_star"},
               {{lattice_name, p_th, p_th_err, a_squared, parameter}});
  }
  return 0;
}

struct KTableRow {
  double p_l, k;
};

std::vector<KTableRow> load_k_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail_validation("cannot open k table '" + path + "'");
  std::vector<KTableRow> rows;
  std::string line;
  bool header_seen = false;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (!header_seen) {
      if (line.rfind("p_l", 0) != 0)
        fail_validation("k table must start with a 'p_l,k' header line");
      header_seen = true;
      continue;
    }
    KTableRow row{};
    if (std::sscanf(line.c_str(), "%lf,%lf", &row.p_l, &row.k) != 2)
      fail_validation("malformed k table line: '" + line + "'");
    rows.push_back(row);
  }
  if (rows.empty()) fail_validation("k table '" + path + "' has no data rows");
  return rows;
}

int run_phase(int dim, const ModelOptions& model_opts,
              const std::string& temp_range, const std::string& ktable_path,
              bool kestimate, const std::string& kgrid_range, int ksize,
              int ktrials, double kc0, std::uint64_t seed, int workers,
              double tol, const OutputOptions& out_opts) {
  const std::vector<double> params = model_opts.values();
  const std::vector<double> temps = parse_range(temp_range);

  KCurveHandle curve;
  std::string k_source = "none";
  if (dim == 2) {
    if (ktable_path.empty() && !kestimate)
      fail_validation(
          "phase2d needs a loss-renormalization curve: pass --ktable FILE or "
          "--kestimate");
    if (!ktable_path.empty() && kestimate)
      fail_validation("pass either --ktable or --kestimate, not both");
    if (!ktable_path.empty()) {
      const std::vector<KTableRow> table = load_k_table(ktable_path);
      std::vector<double> pls, ks;
      for (const KTableRow& row : table) {
        pls.push_back(row.p_l);
        ks.push_back(row.k);
      }
      check(qcp_kcurve_from_table(pls.data(), ks.data(), pls.size(), &curve.ptr));
      k_source = "table:" + ktable_path;
    } else {
      const std::vector<double> kgrid = parse_range(kgrid_range);
      check(qcp_kcurve_estimate(kgrid.data(), kgrid.size(), ksize, ktrials, seed,
                                kc0, workers, &curve.ptr));
      std::ostringstream src;
      src << "estimator(L=" << ksize << ",trials=" << ktrials << ",seed=" << seed
          << ",c0=" << kc0 << ")";
      k_source = src.str();
    }
  }

  const qcp_dim cdim = dim == 2 ? QCP_DIM_2D : QCP_DIM_3D;
  std::vector<qcp_phase_point> points(params.size() * temps.size());
  std::vector<double> boundary_t(params.size());
  std::vector<qcp_boundary_status> boundary_status(params.size());
  check(qcp_phase_sweep(model_opts.kind(), params.data(), params.size(),
                        temps.data(), temps.size(), cdim, curve.ptr, workers,
                        tol, points.data(), boundary_t.data(),
                        boundary_status.data()));

  std::vector<std::vector<ordered_json>> rows;
  rows.reserve(points.size());
  for (const qcp_phase_point& pt : points) {
    rows.push_back({model_opts.model, pt.parameter, pt.temperature, pt.p_z,
                    pt.p_l, static_cast<int>(pt.universal_2d),
                    static_cast<int>(pt.universal_3d),
                    dim == 2 ? pt.margin_2d : pt.margin_3d});
  }

  ordered_json boundary = ordered_json::array();
  for (std::size_t ip = 0; ip < params.size(); ++ip) {
    ordered_json entry;
    entry["parameter"] = params[ip];
    switch (boundary_status[ip]) {
      case QCP_BOUNDARY_FOUND:
        entry["t_star"] = boundary_t[ip];
        entry["status"] = "found";
        break;
      case QCP_BOUNDARY_NONE:
        entry["t_star"] = nullptr;
        entry["status"] = "none";
        break;
      case QCP_BOUNDARY_ABOVE_TMAX:
        entry["t_star"] = nullptr;
        entry["status"] = "above_t_max";
        break;
    }
    boundary.push_back(std::move(entry));
  }

  ordered_json meta;
  meta["version"] = qcp_version();
  meta["command"] = dim == 2 ? "phase2d" : "phase3d";
  meta["model"] = model_opts.model;
  meta["temps"] = temp_range;
  meta["margin_tol"] = tol;
  meta["seed"] = seed;
  meta["k_source"] = k_source;
  meta["boundary"] = std::move(boundary);

  emit_table(out_opts.spec(), std::move(meta),
             {"model", "param", "T", "p_z", "p_l", "universal_2d",
              "universal_3d", "margin"},
             rows);
  return 0;
}

int run_verify_propagation() {
  std::size_t needed = 0;
  int passed = 0, total = 0;
  check(qcp_verify_propagation(nullptr, 0, &needed, &passed, &total));
  std::string text(needed, '\0');
  check(qcp_verify_propagation(text.data(), text.size(), &needed, &passed, &total));
  text.resize(needed - 1);
  std::cout << text << passed << '/' << total << " rules verified\n";
  return passed == total ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Thermal-resource quantum-computational-power analysis"};
  app.require_subcommand(1);

  auto* spectrum_cmd = app.add_subcommand(
      "spectrum", "unit spectra (numeric vs analytic) over a parameter grid");
  ModelOptions spectrum_model;
  spectrum_model.attach(spectrum_cmd, true);
  OutputOptions spectrum_out;
  spectrum_out.attach(spectrum_cmd);

  auto* ground_cmd = app.add_subcommand(
      "ground-check", "analytic ground state vs dense diagonalization");
  ModelOptions ground_model;
  ground_model.attach(ground_cmd, true);
  OutputOptions ground_out;
  ground_out.attach(ground_cmd);

  auto* errors_cmd = app.add_subcommand(
      "errors", "Pauli-class error probabilities of the distilled GHZ state");
  ModelOptions errors_model;
  errors_model.attach(errors_cmd, false);
  double errors_temp = 0.0;
  errors_cmd->add_option("--temp", errors_temp, "temperature (coupling units)")
      ->required();
  OutputOptions errors_out;
  errors_out.attach(errors_cmd);

  auto* perc_cmd = app.add_subcommand(
      "percolation", "site-percolation spanning probability and threshold");
  std::string perc_lattice = "honeycomb";
  int perc_size = 128, perc_trials = 200, perc_seeds = 5, perc_workers = 0;
  std::optional<std::uint64_t> perc_seed;
  std::string perc_curve;
  perc_cmd->add_option("--lattice", perc_lattice, "honeycomb, square-octagon or square")
      ->check(CLI::IsMember({"honeycomb", "square-octagon", "square"}));
  perc_cmd->add_option("--size", perc_size, "linear lattice size (cells)");
  perc_cmd->add_option("--trials", perc_trials, "Monte Carlo trials per evaluation");
  perc_cmd->add_option("--seeds", perc_seeds, "independent seeds for the spread");
  perc_cmd->add_option("--seed", perc_seed, "base RNG seed");
  perc_cmd->add_option("--workers", perc_workers, "worker threads (0 = auto)");
  perc_cmd->add_option("--curve", perc_curve,
                       "emit the spanning curve over p grid lo:hi:step");
  OutputOptions perc_out;
  perc_out.attach(perc_cmd);

  auto* kcurve_cmd = app.add_subcommand(
      "kcurve", "Monte Carlo estimate of the loss-renormalization curve k(p_l)");
  std::string kcurve_grid = "0:0.4:0.05";
  int kcurve_size = 64, kcurve_trials = 40, kcurve_workers = 0;
  double kcurve_c0 = 1.0;
  std::optional<std::uint64_t> kcurve_seed;
  kcurve_cmd->add_option("--loss-grid", kcurve_grid, "p_l grid lo:hi:step");
  kcurve_cmd->add_option("--size", kcurve_size, "lattice linear size");
  kcurve_cmd->add_option("--trials", kcurve_trials, "trials per grid point");
  kcurve_cmd->add_option("--c0", kcurve_c0, "node-spacing scale");
  kcurve_cmd->add_option("--seed", kcurve_seed, "base RNG seed");
  kcurve_cmd->add_option("--workers", kcurve_workers, "worker threads (0 = auto)");
  OutputOptions kcurve_out;
  kcurve_out.attach(kcurve_cmd);

  auto* ztb_cmd = app.add_subcommand(
      "zero-t-boundary", "zero-temperature universality boundary from percolation");
  ModelOptions ztb_model;
  ztb_cmd->add_option("--model", ztb_model.model, "model: xxz or aniso")
      ->check(CLI::IsMember({"xxz", "aniso"}))
      ->required();
  std::string ztb_lattice = "honeycomb";
  std::optional<double> ztb_pth;
  int ztb_size = 128, ztb_trials = 200, ztb_seeds = 5, ztb_workers = 0;
  std::optional<std::uint64_t> ztb_seed;
  ztb_cmd->add_option("--lattice", ztb_lattice, "honeycomb, square-octagon or square")
      ->check(CLI::IsMember({"honeycomb", "square-octagon", "square"}));
  ztb_cmd->add_option("--pth", ztb_pth,
                      "use this site threshold instead of Monte Carlo "
                      "(e.g. 0.745 for a user-defined lattice)");
  ztb_cmd->add_option("--size", ztb_size, "lattice size for Monte Carlo");
  ztb_cmd->add_option("--trials", ztb_trials, "trials per evaluation");
  ztb_cmd->add_option("--seeds", ztb_seeds, "independent seeds");
  ztb_cmd->add_option("--seed", ztb_seed, "base RNG seed");
  ztb_cmd->add_option("--workers", ztb_workers, "worker threads (0 = auto)");
  OutputOptions ztb_out;
  ztb_out.attach(ztb_cmd);

  auto* phase2d_cmd = app.add_subcommand(
      "phase2d", "computational-power phase diagram, 2D cluster route");
  ModelOptions phase2d_model;
  phase2d_model.attach(phase2d_cmd, true);
  std::string phase2d_temps = "0:0.3:0.01";
  std::string phase2d_ktable, phase2d_kgrid = "0:0.4:0.05";
  bool phase2d_kestimate = false;
  int phase2d_ksize = 64, phase2d_ktrials = 40, phase2d_workers = 0;
  double phase2d_kc0 = 1.0, phase2d_tol = 1e-6;
  std::optional<std::uint64_t> phase2d_seed;
  phase2d_cmd->add_option("--temp-range", phase2d_temps, "temperature grid lo:hi:step");
  phase2d_cmd->add_option("--ktable", phase2d_ktable, "CSV k table with header p_l,k");
  phase2d_cmd->add_flag("--kestimate", phase2d_kestimate,
                        "estimate k(p_l) with the built-in Monte Carlo");
  phase2d_cmd->add_option("--kgrid", phase2d_kgrid, "estimator p_l grid lo:hi:step");
  phase2d_cmd->add_option("--ksize", phase2d_ksize, "estimator lattice size");
  phase2d_cmd->add_option("--ktrials", phase2d_ktrials, "estimator trials per point");
  phase2d_cmd->add_option("--kc0", phase2d_kc0, "estimator node-spacing scale");
  phase2d_cmd->add_option("--tol", phase2d_tol, "boundary margin tolerance");
  phase2d_cmd->add_option("--seed", phase2d_seed, "base RNG seed");
  phase2d_cmd->add_option("--workers", phase2d_workers, "worker threads (0 = auto)");
  OutputOptions phase2d_out;
  phase2d_out.attach(phase2d_cmd);

  auto* phase3d_cmd = app.add_subcommand(
      "phase3d", "computational-power phase diagram, 3D topological route");
  ModelOptions phase3d_model;
  phase3d_model.attach(phase3d_cmd, true);
  std::string phase3d_temps = "0:0.5:0.02";
  int phase3d_workers = 0;
  double phase3d_tol = 1e-6;
  std::optional<std::uint64_t> phase3d_seed;
  phase3d_cmd->add_option("--temp-range", phase3d_temps, "temperature grid lo:hi:step");
  phase3d_cmd->add_option("--tol", phase3d_tol, "boundary margin tolerance");
  phase3d_cmd->add_option("--seed", phase3d_seed, "base RNG seed");
  phase3d_cmd->add_option("--workers", phase3d_workers, "worker threads (0 = auto)");
  OutputOptions phase3d_out;
  phase3d_out.attach(phase3d_cmd);

  app.add_subcommand("verify-propagation",
                     "brute-force check of the cluster error-propagation table");

  try {
    app.parse(argc, argv);

    if (spectrum_cmd->parsed()) return run_spectrum(spectrum_model, spectrum_out);
    if (ground_cmd->parsed()) return run_ground_check(ground_model, ground_out);
    if (errors_cmd->parsed())
      return run_errors(errors_model, errors_temp, errors_out);
    if (perc_cmd->parsed())
      return run_percolation(perc_lattice, perc_size, perc_trials, perc_seeds,
                             resolve_seed(perc_seed), perc_workers, perc_curve,
                             perc_out);
    if (kcurve_cmd->parsed())
      return run_kcurve(kcurve_grid, kcurve_size, kcurve_trials, kcurve_c0,
                        resolve_seed(kcurve_seed), kcurve_workers, kcurve_out);
    if (ztb_cmd->parsed())
      return run_zero_t_boundary(ztb_model, ztb_lattice, ztb_pth, ztb_size,
                                 ztb_trials, ztb_seeds, resolve_seed(ztb_seed),
                                 ztb_workers, ztb_out);
    if (phase2d_cmd->parsed())
      return run_phase(2, phase2d_model, phase2d_temps, phase2d_ktable,
                       phase2d_kestimate, phase2d_kgrid, phase2d_ksize,
                       phase2d_ktrials, phase2d_kc0, resolve_seed(phase2d_seed),
                       phase2d_workers, phase2d_tol, phase2d_out);
    if (phase3d_cmd->parsed())
      return run_phase(3, phase3d_model, phase3d_temps, "", false, "", 0, 0, 1.0,
                       resolve_seed(phase3d_seed), phase3d_workers, phase3d_tol,
                       phase3d_out);
    return run_verify_propagation();
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const CliError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
