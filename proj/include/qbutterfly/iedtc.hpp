// Copyright 2026 The qbutterfly Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Indirect entanglement distribution with teleportation coding.
//
// Distribution: every T_k prepares phi_k and sends one half to its assisting
// receiver A_k = R_{k-1} (cyclic); M2 prepares psi_k and sends one half to A_k
// and the other to R_k. A_k Bell-measures its psi_k and phi_k halves, which
// teleports the psi_k half onto T_k's retained phi_k half, and sends the two
// correction bits to T_k over their fiber link. T_k and R_k then share a Bell
// pair without any qubit crossing the bottleneck.
//
// Teleportation: T_k Bell-measures its payload with its half to obtain B_k and
// broadcasts B_k; M1 XORs all B_k into one 2-bit message for the M1-M2
// bottleneck; M2 broadcasts it and R_k cancels the B_n' it heard directly.

#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qbutterfly/qsre.hpp"
#include "qbutterfly/qstate.hpp"
#include "qbutterfly/simnet.hpp"
#include "qbutterfly/topology.hpp"

namespace qbutterfly {

class IedtcError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Delivered fidelity at or above this counts as exact.
inline constexpr double kExactFidelity = 1.0 - 1e-9;

class SwapAssignment {
 public:
  explicit SwapAssignment(int n_pairs);

  int n_pairs() const { return n_pairs_; }
  /// Receiver assisting pair k (1-based).
  NodeId assister(int k) const;
  /// Pair that receiver R_j assists.
  int assisted_by(int j) const;

 private:
  int n_pairs_;
};

/// A_k = R_{k-1}, with A_1 = R_N.
SwapAssignment assign_swappers(int n_pairs);

/// The 2-bit teleportation message B_n.
struct TeleportMessage {
  std::uint8_t b1 = 0;
  std::uint8_t b2 = 0;

  Bits to_bits() const { return {b1, b2}; }
  static TeleportMessage from_bits(const Bits& bits);
  bool operator==(const TeleportMessage&) const = default;
};

TeleportMessage xor_combine(std::span<const TeleportMessage> messages);
TeleportMessage xor_recover(const TeleportMessage& combined,
                            std::span<const TeleportMessage> others);

/// Bell-measures (psi_half, phi_half); the bits are T's corrections.
TeleportMessage entanglement_swap(StateRegistry& registry, QubitId phi_half, QubitId psi_half);

/// Bell-measures (state, half).
TeleportMessage teleport_encode(StateRegistry& registry, QubitId state, QubitId half);

/// X if b2, then Z if b1. Returns `half`, which now carries the payload.
QubitId teleport_decode(StateRegistry& registry, QubitId half, const TeleportMessage& msg);

enum class Schedule {
  /// M2 prepares every psi pair before distributing; all distribution finishes
  /// before any teleportation.
  kBarrier,
  /// Pairs are distributed one at a time with M2 preparing psi_k on demand.
  kEager,
};

struct EntangledPair {
  int pair = 0;
  QubitId transmitter_half;
  QubitId receiver_half;
};

struct DistributionOptions {
  Schedule schedule = Schedule::kBarrier;
  /// Pair whose assisting receiver keeps T's half instead of swapping.
  std::optional<int> malicious_pair;
};

/// Runs the distribution phase on `net`. Afterwards T_k holds "pair_<k>" and
/// R_k holds "pair_<k>".
std::vector<EntangledPair> distribute_entanglements(Network& net,
                                                    const DistributionOptions& options = {});

struct QsreSetup {
  std::vector<PrivateKey> keys;  // keys[k-1] is shared by T_k and R_k
  std::size_t chunk_index = 0;
  SignConvention convention = SignConvention::Formula;
};

struct AttackSetup {
  int target_pair = 1;
  /// Counter-rotation the eavesdropper applies after decoding, if any.
  std::optional<RotationSpec> guess;
  double threshold = 0.99;
};

struct RoundOptions {
  Schedule schedule = Schedule::kBarrier;
  std::optional<QsreSetup> qsre;
  std::optional<AttackSetup> attack;
};

struct PairResult {
  int pair = 0;
  std::optional<QubitId> delivered;
  double fidelity = 0.0;
  bool success = false;
};

struct EavesdropResult {
  NodeId node;
  double fidelity = 0.0;
  bool success = false;
};

struct RoundResult {
  std::vector<PairResult> pairs;
  bool all_success = false;
  std::size_t peak_qubits = 0;   // report_peak()
  std::size_t network_peak = 0;  // simultaneous live qubits network-wide
  std::size_t max_cluster_dimension = 0;
  EventTrace trace;
  std::optional<EavesdropResult> eavesdrop;
  std::string diagnostic;  // non-empty if the round aborted

  /// Messages that crossed the M1-M2 bottleneck.
  std::vector<TraceEntry> bottleneck_messages() const;
};

/// Full round on a fresh network. `inputs[k-1]` is the payload of pair k.
/// Errors abort the round and are reported in `diagnostic`.
RoundResult run_round(Network& net, std::span<const Amplitudes<double>> inputs,
                      const RoundOptions& options = {});

}  // namespace qbutterfly
