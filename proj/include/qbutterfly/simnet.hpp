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

// Logical-time message passing over a Topology. Sends are delivered on the
// next tick in FIFO order; qubits may only cross quantum links.

#pragma once

#include <cstdint>
#include <deque>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "qbutterfly/qstate.hpp"
#include "qbutterfly/topology.hpp"

namespace qbutterfly {

class SimnetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bit string, one 0/1 value per element.
using Bits = std::vector<std::uint8_t>;

std::string to_string(const Bits& bits);
Bits parse_bits(std::string_view text);

struct ClassicalBits {
  Bits bits;
  std::string tag;
};

struct QubitTransfer {
  QubitId qubit;
  std::string tag;
};

using Payload = std::variant<ClassicalBits, QubitTransfer>;

struct NetEvent {
  std::uint64_t time = 0;
  NodeId src;
  NodeId dst;
  Payload payload;

  bool is_qubit() const { return std::holds_alternative<QubitTransfer>(payload); }
  const std::string& tag() const;
};

enum class PayloadKind { Classical, Qubit };

struct TraceEntry {
  std::uint64_t tick = 0;
  NodeId src;
  NodeId dst;
  PayloadKind kind = PayloadKind::Classical;
  std::string tag;
  Bits bits;  // empty for qubit transfers
};

using EventTrace = std::vector<TraceEntry>;

/// One line per entry: "tick<TAB>src<TAB>dst<TAB>kind<TAB>tag<TAB>bits".
std::string serialize_trace(const EventTrace& trace);

struct ReceivedMessage {
  std::uint64_t tick = 0;
  NodeId from;
  Bits bits;
  std::string tag;
};

/// Qubits a node currently holds (by label) and every classical message it
/// has received.
class NodeInventory {
 public:
  bool holds(const std::string& label) const { return qubits_.contains(label); }
  QubitId peek(const std::string& label) const;
  const std::map<std::string, QubitId>& qubits() const { return qubits_; }
  const std::vector<ReceivedMessage>& messages() const { return messages_; }
  const ReceivedMessage* find_message(std::string_view tag) const;

 private:
  friend class Network;
  std::map<std::string, QubitId> qubits_;
  std::vector<ReceivedMessage> messages_;
};

class Network {
 public:
  using Handler = std::function<void(Network&, const NetEvent&)>;

  Network(const Topology& topology, StateRegistry& registry,
          std::uint64_t tick_cap = 1'000'000);

  const Topology& topology() const { return *topology_; }
  StateRegistry& registry() { return *registry_; }
  std::uint64_t now() const { return now_; }

  /// Allocates a qubit held by `node` under `label`.
  QubitId create_qubit(NodeId node, const std::string& label, const Amplitudes<double>& state);

  /// Bell pair created at `node`; both halves stay in its inventory.
  std::pair<QubitId, QubitId> create_bell_pair(NodeId node, const std::string& label_a,
                                               const std::string& label_b);

  /// Removes a qubit from a node's inventory so the node can consume it locally
  /// (measurement, release).
  QubitId take(NodeId node, const std::string& label);

  /// Files an already-owned qubit under a new label.
  void relabel(NodeId node, const std::string& from, const std::string& to);

  void send_classical(NodeId src, NodeId dst, const Bits& bits, const std::string& tag);
  void send_qubit(NodeId src, NodeId dst, QubitId qubit, const std::string& tag);

  /// Sends to every neighbor of `src`. The M1-M2 bottleneck is a dedicated
  /// point-to-point link and is never used by a broadcast.
  void broadcast_classical(NodeId src, const Bits& bits, const std::string& tag);

  /// Called after each delivery; may enqueue further sends.
  void on_delivery(Handler handler) { handler_ = std::move(handler); }

  /// Delivers queued events until none remain. Returns the events delivered by
  /// this call; the cumulative log is trace().
  EventTrace run_until_idle();

  bool idle() const { return queue_.empty(); }
  const EventTrace& trace() const { return trace_; }

  NodeInventory& inventory(NodeId node);
  const NodeInventory& inventory(NodeId node) const;

  /// Node currently holding the qubit, or nullopt if it is in flight or
  /// not held by any node.
  std::optional<NodeId> owner_of(QubitId qubit) const;
  bool in_flight(QubitId qubit) const;

 private:
  void require_node(NodeId node, const char* op) const;
  LinkKind require_link(NodeId src, NodeId dst, const char* op) const;
  void deliver(const NetEvent& event);

  const Topology* topology_;
  StateRegistry* registry_;
  std::uint64_t tick_cap_;
  std::uint64_t now_ = 0;
  std::deque<NetEvent> queue_;
  std::map<NodeId, NodeInventory> inventories_;
  std::map<std::uint64_t, NodeId> in_flight_;  // qubit id -> sender
  EventTrace trace_;
  Handler handler_;
};

}  // namespace qbutterfly
