// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "qcp/unit_models.hpp"

namespace qcp {

struct ThermalState {
  Matrix rho;  // 32x32 Gibbs state of one unit
  double temperature;
  ModelParams params;
};

// exp(-H/T) / Tr exp(-H/T), computed from the cached eigendecomposition with
// energies shifted by E0. T = 0 returns the normalized ground-space projector.
ThermalState thermal_state(const ModelParams& params, double temperature);

}  // namespace qcp
