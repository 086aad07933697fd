// SPDX-License-Identifier: Apache-2.0
#pragma once

namespace qcp {

inline constexpr const char* version_string = "0.1.0";

// Numerical tolerances shared across the library. Algebraic identities are
// held to a tighter bar than anything that passes through an eigensolver.
namespace tol {
inline constexpr double algebra = 1e-12;
inline constexpr double eigen = 1e-9;
// Energy window within which levels count as degenerate.
inline constexpr double degeneracy = 1e-7;
// Logical-encoding leakage above this signals a basis-convention bug.
inline constexpr double leakage = 1e-8;
}  // namespace tol

// Fault-tolerance thresholds and solver limits for the computational-power
// phase maps. Temperatures and energies are in coupling units (k_B = 1).
namespace ftq {
// Tolerable phase-error rate on the renormalized 2D cluster network.
inline constexpr double phase_threshold_2d = 1e-7;
// Independent phase-flip threshold of the 3D topological cluster code.
inline constexpr double phase_threshold_3d = 0.0293;
// Qubit-loss threshold of the 3D code.
inline constexpr double loss_threshold_3d = 0.249;
// Loss rate beyond which the 2D square-lattice cluster cannot be renormalized.
inline constexpr double loss_tolerance_2d = 0.40;
// Ceiling for boundary-temperature searches; the unit gap is O(1).
inline constexpr double t_max = 5.0;
}  // namespace ftq

}  // namespace qcp
