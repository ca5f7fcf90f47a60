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

#include "qbutterfly/iedtc.hpp"

#include <algorithm>

namespace qbutterfly {

namespace {

std::string label(const char* prefix, int k) { return std::string(prefix) + std::to_string(k); }

bool has_prefix(const std::string& s, std::string_view prefix) { return s.starts_with(prefix); }

int suffix_index(const std::string& tag, std::string_view prefix) {
  return std::stoi(tag.substr(prefix.size()));
}

const Bits& classical_bits(const NetEvent& event) {
  return std::get<ClassicalBits>(event.payload).bits;
}

}  // namespace

SwapAssignment::SwapAssignment(int n_pairs) : n_pairs_(n_pairs) {
  if (n_pairs < 2) {
    throw IedtcError("swap assignment needs at least 2 pairs, got " + std::to_string(n_pairs));
  }
}

NodeId SwapAssignment::assister(int k) const {
  if (k < 1 || k > n_pairs_) throw IedtcError("pair index out of range");
  return NodeId::receiver(k == 1 ? n_pairs_ : k - 1);
}

int SwapAssignment::assisted_by(int j) const {
  if (j < 1 || j > n_pairs_) throw IedtcError("receiver index out of range");
  return j == n_pairs_ ? 1 : j + 1;
}

SwapAssignment assign_swappers(int n_pairs) { return SwapAssignment(n_pairs); }

TeleportMessage TeleportMessage::from_bits(const Bits& bits) {
  if (bits.size() != 2 || bits[0] > 1 || bits[1] > 1) {
    throw IedtcError("teleport message must be exactly 2 bits");
  }
  return {bits[0], bits[1]};
}

TeleportMessage xor_combine(std::span<const TeleportMessage> messages) {
  if (messages.empty()) throw IedtcError("xor_combine: no messages");
  TeleportMessage out;
  for (const TeleportMessage& m : messages) {
    out.b1 ^= m.b1;
    out.b2 ^= m.b2;
  }
  return out;
}

TeleportMessage xor_recover(const TeleportMessage& combined,
                            std::span<const TeleportMessage> others) {
  TeleportMessage out = combined;
  for (const TeleportMessage& m : others) {
    out.b1 ^= m.b1;
    out.b2 ^= m.b2;
  }
  return out;
}

TeleportMessage entanglement_swap(StateRegistry& registry, QubitId phi_half, QubitId psi_half) {
  const auto [b1, b2] = registry.bell_measure(psi_half, phi_half);
  return {static_cast<std::uint8_t>(b1), static_cast<std::uint8_t>(b2)};
}

TeleportMessage teleport_encode(StateRegistry& registry, QubitId state, QubitId half) {
  const auto [b1, b2] = registry.bell_measure(state, half);
  return {static_cast<std::uint8_t>(b1), static_cast<std::uint8_t>(b2)};
}

QubitId teleport_decode(StateRegistry& registry, QubitId half, const TeleportMessage& msg) {
  if (!registry.is_live(half)) throw IedtcError("teleport_decode: qubit is not live");
  if (msg.b2) registry.apply_gate(Gate::x(), half);
  if (msg.b1) registry.apply_gate(Gate::z(), half);
  return half;
}

namespace {

void prepare_transmitter_pair(Network& net, const SwapAssignment& swaps, int k) {
  const NodeId t = NodeId::transmitter(k);
  net.create_bell_pair(t, label("phi_keep_", k), label("phi_send_", k));
  net.send_qubit(t, swaps.assister(k), net.inventory(t).peek(label("phi_send_", k)),
                 label("phi_", k));
}

void prepare_central_pair(Network& net, int k) {
  net.create_bell_pair(NodeId::m2(), label("psi_a_", k), label("psi_r_", k));
}

void send_central_pair(Network& net, const SwapAssignment& swaps, int k) {
  const NodeId m2 = NodeId::m2();
  const NodeInventory& inv = net.inventory(m2);
  net.send_qubit(m2, swaps.assister(k), inv.peek(label("psi_a_", k)), label("psi_", k));
  net.send_qubit(m2, NodeId::receiver(k), inv.peek(label("psi_r_", k)), label("pair_", k));
}

void swap_at_assister(Network& net, const SwapAssignment& swaps, int k, bool malicious) {
  const NodeId a = swaps.assister(k);
  const NodeId t = NodeId::transmitter(k);
  if (malicious) {
    // Keep T_k's half as the eavesdropping endpoint and drop the psi half so
    // R_k is left holding an uncorrelated decoy.
    net.relabel(a, label("phi_", k), label("eve_", k));
    net.registry().release(net.take(a, label("psi_", k)));
    net.send_classical(a, t, TeleportMessage{}.to_bits(), label("swap_", k));
    return;
  }
  const QubitId phi = net.take(a, label("phi_", k));
  const QubitId psi = net.take(a, label("psi_", k));
  const TeleportMessage msg = entanglement_swap(net.registry(), phi, psi);
  net.send_classical(a, t, msg.to_bits(), label("swap_", k));
}

void on_swap_bits(Network& net, const NetEvent& event) {
  if (event.is_qubit() || !has_prefix(event.tag(), "swap_")) return;
  if (event.dst.role != Role::Transmitter) return;
  const int k = suffix_index(event.tag(), "swap_");
  const NodeId t = event.dst;
  const QubitId half = net.inventory(t).peek(label("phi_keep_", k));
  teleport_decode(net.registry(), half, TeleportMessage::from_bits(classical_bits(event)));
  net.relabel(t, label("phi_keep_", k), label("pair_", k));
}

}  // namespace

std::vector<EntangledPair> distribute_entanglements(Network& net,
                                                    const DistributionOptions& options) {
  const int n = net.topology().n_pairs();
  const SwapAssignment swaps(n);
  if (options.malicious_pair && (*options.malicious_pair < 1 || *options.malicious_pair > n)) {
    throw IedtcError("malicious pair index out of range");
  }
  const auto is_malicious = [&](int k) { return options.malicious_pair == k; };
  net.on_delivery(on_swap_bits);

  if (options.schedule == Schedule::kBarrier) {
    for (int k = 1; k <= n; ++k) prepare_transmitter_pair(net, swaps, k);
    for (int k = 1; k <= n; ++k) prepare_central_pair(net, k);
    for (int k = 1; k <= n; ++k) send_central_pair(net, swaps, k);
    net.run_until_idle();
    for (int k = 1; k <= n; ++k) swap_at_assister(net, swaps, k, is_malicious(k));
    net.run_until_idle();
  } else {
    for (int k = 1; k <= n; ++k) {
      prepare_transmitter_pair(net, swaps, k);
      prepare_central_pair(net, k);
      send_central_pair(net, swaps, k);
      net.run_until_idle();
      swap_at_assister(net, swaps, k, is_malicious(k));
      net.run_until_idle();
    }
  }

  std::vector<EntangledPair> pairs;
  for (int k = 1; k <= n; ++k) {
    pairs.push_back({k, net.inventory(NodeId::transmitter(k)).peek(label("pair_", k)),
                     net.inventory(NodeId::receiver(k)).peek(label("pair_", k))});
  }
  return pairs;
}

std::vector<TraceEntry> RoundResult::bottleneck_messages() const {
  std::vector<TraceEntry> out;
  for (const TraceEntry& e : trace) {
    const bool m1m2 = (e.src.role == Role::M1 && e.dst.role == Role::M2) ||
                      (e.src.role == Role::M2 && e.dst.role == Role::M1);
    if (m1m2) out.push_back(e);
  }
  return out;
}

namespace {

std::vector<TeleportMessage> direct_messages(const NodeInventory& inv) {
  std::vector<TeleportMessage> out;
  for (const ReceivedMessage& m : inv.messages()) {
    if (has_prefix(m.tag, "B_")) out.push_back(TeleportMessage::from_bits(m.bits));
  }
  return out;
}

class TeleportPhase {
 public:
  TeleportPhase(std::span<const Amplitudes<double>> inputs, const RoundOptions& options,
                RoundResult& result)
      : inputs_(inputs), options_(options), result_(result) {}

  void operator()(Network& net, const NetEvent& event) {
    if (event.is_qubit()) return;
    const std::string& tag = event.tag();
    const NodeId dst = event.dst;
    const int n = net.topology().n_pairs();

    if (dst.role == Role::M1 && has_prefix(tag, "B_")) {
      const auto messages = direct_messages(net.inventory(dst));
      if (static_cast<int>(messages.size()) == n) {
        net.send_classical(dst, NodeId::m2(), xor_combine(messages).to_bits(), "XOR");
      }
    } else if (dst.role == Role::M2 && tag == "XOR") {
      net.broadcast_classical(dst, classical_bits(event), "XOR");
    } else if (dst.role == Role::Receiver && tag == "XOR") {
      receive(net, dst.index, TeleportMessage::from_bits(classical_bits(event)));
    }

    if (options_.attack && dst.role == Role::Receiver &&
        tag == label("B_", options_.attack->target_pair)) {
      const int t = options_.attack->target_pair;
      if (dst == SwapAssignment(n).assister(t)) {
        eavesdrop(net, dst, t, TeleportMessage::from_bits(classical_bits(event)));
      }
    }
  }

  RotationSpec spec_for(int k) const {
    return derive_rotation(options_.qsre->keys.at(static_cast<std::size_t>(k - 1)),
                           options_.qsre->chunk_index, options_.qsre->convention);
  }

 private:
  void receive(Network& net, int j, const TeleportMessage& combined) {
    const NodeId r = NodeId::receiver(j);
    const auto others = direct_messages(net.inventory(r));
    const TeleportMessage own = xor_recover(combined, others);
    const QubitId half = net.inventory(r).peek(label("pair_", j));
    teleport_decode(net.registry(), half, own);
    if (options_.qsre) decode_state(net.registry(), half, spec_for(j));
    net.relabel(r, label("pair_", j), label("delivered_", j));
  }

  void eavesdrop(Network& net, NodeId eve, int t, const TeleportMessage& msg) {
    StateRegistry& reg = net.registry();
    const QubitId q = net.take(eve, label("eve_", t));
    teleport_decode(reg, q, msg);
    if (options_.attack->guess) decode_state(reg, q, *options_.attack->guess);
    const double f = reg.fidelity(q, inputs_[static_cast<std::size_t>(t - 1)]);
    result_.eavesdrop = EavesdropResult{eve, f, f >= options_.attack->threshold};
    reg.release(q);
  }

  std::span<const Amplitudes<double>> inputs_;
  const RoundOptions& options_;
  RoundResult& result_;
};

}  // namespace

RoundResult run_round(Network& net, std::span<const Amplitudes<double>> inputs,
                      const RoundOptions& options) {
  RoundResult result;
  StateRegistry& reg = net.registry();
  try {
    const int n = net.topology().n_pairs();
    if (static_cast<int>(inputs.size()) != n) {
      throw IedtcError("run_round: expected " + std::to_string(n) + " input states, got " +
                       std::to_string(inputs.size()));
    }
    if (options.qsre && options.qsre->keys.size() != inputs.size()) {
      throw IedtcError("run_round: one key per pair is required");
    }
    DistributionOptions dist{options.schedule, std::nullopt};
    if (options.attack) dist.malicious_pair = options.attack->target_pair;
    distribute_entanglements(net, dist);

    TeleportPhase phase(inputs, options, result);
    net.on_delivery(std::ref(phase));
    for (int k = 1; k <= n; ++k) {
      const NodeId t = NodeId::transmitter(k);
      const QubitId eta = net.create_qubit(t, label("eta_", k), inputs[static_cast<std::size_t>(k - 1)]);
      if (options.qsre) encode_state(reg, eta, phase.spec_for(k));
      const TeleportMessage msg =
          teleport_encode(reg, net.take(t, label("eta_", k)), net.take(t, label("pair_", k)));
      net.broadcast_classical(t, msg.to_bits(), label("B_", k));
    }
    net.run_until_idle();
    net.on_delivery(nullptr);

    result.all_success = true;
    for (int k = 1; k <= n; ++k) {
      PairResult pr;
      pr.pair = k;
      const NodeInventory& inv = net.inventory(NodeId::receiver(k));
      if (inv.holds(label("delivered_", k))) {
        const QubitId q = inv.peek(label("delivered_", k));
        pr.delivered = q;
        pr.fidelity = reg.fidelity(q, inputs[static_cast<std::size_t>(k - 1)]);
        pr.success = pr.fidelity >= kExactFidelity;
      }
      result.all_success = result.all_success && pr.success;
      result.pairs.push_back(pr);
    }
  } catch (const std::exception& e) {
    net.on_delivery(nullptr);
    result.all_success = false;
    result.diagnostic = e.what();
  }
  result.peak_qubits = report_peak(reg);
  result.network_peak = reg.peak_alloc();
  result.max_cluster_dimension = reg.max_cluster_dimension();
  result.trace = net.trace();
  return result;
}

}  // namespace qbutterfly
