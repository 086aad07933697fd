// SPDX-License-Identifier: Apache-2.0
#include "qcp/thermal_state.hpp"

#include <cmath>
#include <stdexcept>

#include "qcp/constants.hpp"

namespace qcp {

ThermalState thermal_state(const ModelParams& params, double temperature) {
  if (!(temperature >= 0.0))
    throw std::invalid_argument("thermal_state: temperature must be >= 0");

  const UnitEigensystem& sys = unit_eigensystem(params);
  const Eigen::Index dim = sys.energies.size();
  const double e0 = sys.energies(0);

  Eigen::VectorXd weights(dim);
  if (temperature == 0.0) {
    for (Eigen::Index i = 0; i < dim; ++i)
      weights(i) = sys.energies(i) < e0 + tol::degeneracy ? 1.0 : 0.0;
  } else {
    for (Eigen::Index i = 0; i < dim; ++i)
      weights(i) = std::exp(-(sys.energies(i) - e0) / temperature);
  }
  weights /= weights.sum();

  Matrix rho = sys.vectors * weights.cast<Complex>().asDiagonal() * sys.vectors.adjoint();
  return ThermalState{std::move(rho), temperature, params};
}

}  // namespace qcp
