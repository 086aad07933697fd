// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "qcp/pauli_channel.hpp"

namespace qcp {

// Cluster-state qubits of one logical block: the block qubit C and its four
// neighbours. Z-error patterns are bit masks over these five.
enum ClusterQubit : int { cq_c = 0, cq_u = 1, cq_l = 2, cq_d = 3, cq_r = 4 };
using ZPattern = std::uint8_t;

std::string zpattern_name(ZPattern pattern);

// A Pauli on the two GHZ units that feed one block: bits 0-3 are the first
// unit (0 = the center removed by the shrink measurement, 1 = the merge
// qubit), bits 4-7 the second unit (4 = the center that becomes C).
struct BlockPauli {
  std::uint8_t x_mask = 0;
  std::uint8_t z_mask = 0;
};

struct PropagationRule {
  std::string source;
  std::vector<BlockPauli> injections;  // every injection covered by the row
  ZPattern pattern;
  bool correlated_text_rule;  // Z0Xi composites beyond the 8 tabulated rows
};

// The 8 tabulated single-error rows (X0 -> I, X0' -> Xc = ZuZlZdZr, X1/X1' ->
// ZuZl, X2 -> Zu, X2' -> Zd, X3 -> Zl, X3' -> Zr, Zi -> Zc) plus the
// correlated Z0X1 -> ZcZuZl and Z0X2/Z0X3 -> Zc+neighbour rules.
std::vector<PropagationRule> propagation_table();

// p_z = 2 (p_Z0 + 2 p_X1 + p_X2 + p_X3 + 3 p_Z0X1 + 2 p_Z0X2 + 2 p_Z0X3);
// the factor 2 accounts for the two units behind each cluster qubit.
double phase_error_rate(const PauliErrorDistribution& dist);

// Cluster-qubit loss rate 1 - p_s^2 (a qubit needs both of its GHZ states).
double loss_rate(double p_s);

struct ClusterErrorRates {
  double p_z;
  double p_l;
  // ZZ / ZZZ patterns kept for reporting; their single-qubit marginals are
  // already inside p_z.
  std::vector<std::pair<std::string, double>> correlated;
};
ClusterErrorRates cluster_error_rates(const PauliErrorDistribution& dist);

// State-vector simulation of the block protocol (merge the two GHZ states,
// shrink out one center, CZ-measure toward four ideal neighbours) with one
// injected Pauli. Returns the propagated Z pattern, reduced to its canonical
// Z-only form modulo cluster-state stabilizers and reconciled across all
// measurement-outcome branches; throws if any branch disagrees.
ZPattern simulate_block_protocol(const BlockPauli& injected);

struct PropagationReport {
  bool passed;
  int rules_total;   // the 8 tabulated rows
  int rules_passed;
  std::string text;  // one PASS/FAIL line per rule
};

// Brute-force check of propagation_table against simulate_block_protocol.
PropagationReport verify_propagation_oracle();

}  // namespace qcp
