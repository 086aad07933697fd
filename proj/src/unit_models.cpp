// SPDX-License-Identifier: Apache-2.0
#include "qcp/unit_models.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

#include "qcp/constants.hpp"

namespace qcp {

namespace {

const SpinOperators& center_ops() {
  static const SpinOperators ops = spin_operators(1.5);
  return ops;
}

const SpinOperators& qubit_ops() {
  static const SpinOperators ops = spin_operators(0.5);
  return ops;
}

void validate(const ModelParams& params) {
  if (params.model != Model::xxz && params.model != Model::aniso)
    throw std::invalid_argument("ModelParams: unknown model");
  if (!std::isfinite(params.value))
    throw std::invalid_argument("ModelParams: parameter must be finite");
}

}  // namespace

UnitOperator build_unit_hamiltonian(const ModelParams& params) {
  validate(params);
  const SpinOperators& cen = center_ops();
  const SpinOperators& qub = qubit_ops();
  const double zz = params.model == Model::xxz ? 1.0 + params.value : 1.0;

  Matrix h = Matrix::Zero(unit_dimension, unit_dimension);
  const Matrix cx = unit_embed(cen.sx, 0).matrix;
  const Matrix cy = unit_embed(cen.sy, 0).matrix;
  const Matrix cz = unit_embed(cen.sz, 0).matrix;
  for (std::size_t j = 1; j <= 3; ++j) {
    h += cx * unit_embed(qub.sx, j).matrix;
    h += cy * unit_embed(qub.sy, j).matrix;
    h += zz * (cz * unit_embed(qub.sz, j).matrix);
  }
  if (params.model == Model::aniso) {
    h -= params.value * unit_embed(Matrix(cen.sz * cen.sz), 0).matrix;
  }
  return UnitOperator{std::move(h)};
}

double analytic_ground_energy(const ModelParams& params) {
  validate(params);
  const double p = params.value;
  if (params.model == Model::xxz && p <= -2.0) return 9.0 * (1.0 + p) / 4.0;
  return (-9.0 - 5.0 * p - 2.0 * std::sqrt(9.0 + 4.0 * p * p)) / 4.0;
}

double deformation_parameter(const ModelParams& params) {
  validate(params);
  const double p = params.value;
  if (params.model == Model::xxz && p <= -2.0)
    throw std::domain_error(
        "deformation_parameter: undefined for xxz with delta <= -2 "
        "(degenerate ferromagnetic ground space)");
  const double a_inv = (-2.0 * p + std::sqrt(9.0 + 4.0 * p * p)) / 3.0;
  return 1.0 / a_inv;
}

Vector analytic_ground_state(const ModelParams& params) {
  const double a_inv = 1.0 / deformation_parameter(params);

  auto center = [](int index) {
    Vector v = Vector::Zero(4);
    v(index) = 1.0;
    return v;
  };
  auto term = [&center](int center_index, double m_s) {
    return Vector(kron(center(center_index), Matrix(dicke_state(m_s))));
  };

  // -( |3/2,-3/2> - |-3/2,3/2> ) + (1/a)( |1/2,-1/2> - |-1/2,1/2> )
  Vector psi = -(term(0, -1.5) - term(3, 1.5)) + a_inv * (term(1, -0.5) - term(2, 0.5));
  psi.normalize();
  return psi;
}

const UnitEigensystem& unit_eigensystem(const ModelParams& params) {
  validate(params);
  struct Key {
    int model;
    std::uint64_t bits;
    auto operator<=>(const Key&) const = default;
  };
  static std::mutex mutex;
  static std::map<Key, std::unique_ptr<UnitEigensystem>> cache;

  const Key key{static_cast<int>(params.model), std::bit_cast<std::uint64_t>(params.value)};
  {
    std::lock_guard lock(mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return *it->second;
  }

  auto system = std::make_unique<UnitEigensystem>();
  Eigen::SelfAdjointEigenSolver<Matrix> solver(build_unit_hamiltonian(params).matrix);
  system->energies = solver.eigenvalues();
  system->vectors = solver.eigenvectors();

  std::lock_guard lock(mutex);
  auto [it, inserted] = cache.emplace(key, std::move(system));
  return *it->second;
}

SpectrumSummary spectrum(const ModelParams& params) {
  const UnitEigensystem& sys = unit_eigensystem(params);
  const double e0 = sys.energies(0);
  int degeneracy = 1;
  while (degeneracy < sys.energies.size() &&
         sys.energies(degeneracy) < e0 + tol::degeneracy)
    ++degeneracy;
  const double e1 =
      degeneracy < sys.energies.size() ? sys.energies(degeneracy) : e0;
  return SpectrumSummary{e0, e1, e1 - e0, degeneracy};
}

TransitionScan detect_transition(Model model, std::span<const double> grid,
                                 double jump_threshold) {
  if (grid.size() < 3)
    throw std::invalid_argument("detect_transition: need at least 3 grid points");
  if (jump_threshold <= 0)
    throw std::invalid_argument("detect_transition: jump threshold must be positive");
  for (std::size_t i = 1; i < grid.size(); ++i)
    if (!(grid[i] > grid[i - 1]))
      throw std::invalid_argument("detect_transition: grid must be strictly increasing");

  std::vector<double> e0(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i)
    e0[i] = unit_eigensystem({model, grid[i]}).energies(0);

  std::vector<double> slopes(grid.size() - 1);
  for (std::size_t i = 0; i + 1 < grid.size(); ++i)
    slopes[i] = (e0[i + 1] - e0[i]) / (grid[i + 1] - grid[i]);

  // jump[i] = slope change across interior grid point i+1
  std::vector<double> jump(slopes.size() - 1);
  for (std::size_t i = 0; i + 1 < slopes.size(); ++i)
    jump[i] = slopes[i + 1] - slopes[i];

  TransitionScan scan;
  double worst_unflagged = 0.0;
  for (std::size_t i = 0; i < jump.size();) {
    if (std::abs(jump[i]) <= jump_threshold) {
      worst_unflagged = std::max(worst_unflagged, std::abs(jump[i]));
      ++i;
      continue;
    }
    std::size_t begin = i;
    std::size_t peak = i;
    while (i < jump.size() && std::abs(jump[i]) > jump_threshold) {
      if (std::abs(jump[i]) > std::abs(jump[peak])) peak = i;
      ++i;
    }
    const std::size_t end = i;  // one past the flagged run
    // Slope change across the whole run: segment after minus segment before.
    scan.kinks.push_back(Kink{grid[peak + 1], slopes[end] - slopes[begin]});
  }
  scan.coarse_grid_warning = worst_unflagged > 0.5 * jump_threshold;
  return scan;
}

}  // namespace qcp
