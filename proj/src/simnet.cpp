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

#include "qbutterfly/simnet.hpp"

#include <algorithm>
#include <sstream>

namespace qbutterfly {

std::string to_string(const Bits& bits) {
  std::string s;
  s.reserve(bits.size());
  for (const std::uint8_t b : bits) s.push_back(b ? '1' : '0');
  return s;
}

Bits parse_bits(std::string_view text) {
  Bits bits;
  bits.reserve(text.size());
  for (const char c : text) {
    if (c != '0' && c != '1') {
      throw SimnetError("bit string may only contain '0' and '1', got '" + std::string(text) +
                        "'");
    }
    bits.push_back(c == '1' ? 1 : 0);
  }
  return bits;
}

const std::string& NetEvent::tag() const {
  return std::visit([](const auto& p) -> const std::string& { return p.tag; }, payload);
}

std::string serialize_trace(const EventTrace& trace) {
  std::ostringstream out;
  for (const TraceEntry& e : trace) {
    out << e.tick << '\t' << to_string(e.src) << '\t' << to_string(e.dst) << '\t'
        << (e.kind == PayloadKind::Qubit ? "qubit" : "classical") << '\t' << e.tag << '\t'
        << to_string(e.bits) << '\n';
  }
  return out.str();
}

QubitId NodeInventory::peek(const std::string& label) const {
  const auto it = qubits_.find(label);
  if (it == qubits_.end()) throw SimnetError("no qubit labelled '" + label + "'");
  return it->second;
}

const ReceivedMessage* NodeInventory::find_message(std::string_view tag) const {
  for (const ReceivedMessage& m : messages_) {
    if (m.tag == tag) return &m;
  }
  return nullptr;
}

Network::Network(const Topology& topology, StateRegistry& registry, std::uint64_t tick_cap)
    : topology_(&topology), registry_(&registry), tick_cap_(tick_cap) {
  for (const NodeId& node : topology.nodes()) inventories_[node];
}

void Network::require_node(NodeId node, const char* op) const {
  if (!inventories_.contains(node)) {
    throw SimnetError(std::string(op) + ": node " + to_string(node) + " is not in the network");
  }
}

LinkKind Network::require_link(NodeId src, NodeId dst, const char* op) const {
  require_node(src, op);
  require_node(dst, op);
  const auto kind = topology_->link_between(src, dst);
  if (!kind) {
    throw SimnetError(std::string(op) + ": no link between " + to_string(src) + " and " +
                      to_string(dst));
  }
  return *kind;
}

NodeInventory& Network::inventory(NodeId node) {
  require_node(node, "inventory");
  return inventories_.at(node);
}

const NodeInventory& Network::inventory(NodeId node) const {
  require_node(node, "inventory");
  return inventories_.at(node);
}

QubitId Network::create_qubit(NodeId node, const std::string& label,
                              const Amplitudes<double>& state) {
  NodeInventory& inv = inventory(node);
  if (inv.holds(label)) throw SimnetError("create_qubit: label '" + label + "' already in use");
  const QubitId q = registry_->alloc_qubit(state, topology_->holder_of(node));
  inv.qubits_.emplace(label, q);
  return q;
}

std::pair<QubitId, QubitId> Network::create_bell_pair(NodeId node, const std::string& label_a,
                                                      const std::string& label_b) {
  NodeInventory& inv = inventory(node);
  if (label_a == label_b || inv.holds(label_a) || inv.holds(label_b)) {
    throw SimnetError("create_bell_pair: labels must be distinct and unused");
  }
  const auto pair = registry_->create_bell_pair(topology_->holder_of(node));
  inv.qubits_.emplace(label_a, pair.first);
  inv.qubits_.emplace(label_b, pair.second);
  return pair;
}

QubitId Network::take(NodeId node, const std::string& label) {
  NodeInventory& inv = inventory(node);
  const QubitId q = inv.peek(label);
  inv.qubits_.erase(label);
  return q;
}

void Network::relabel(NodeId node, const std::string& from, const std::string& to) {
  NodeInventory& inv = inventory(node);
  if (inv.holds(to)) throw SimnetError("relabel: label '" + to + "' already in use");
  const QubitId q = take(node, from);
  inv.qubits_.emplace(to, q);
}

void Network::send_classical(NodeId src, NodeId dst, const Bits& bits, const std::string& tag) {
  require_link(src, dst, "send_classical");
  queue_.push_back(NetEvent{now_ + 1, src, dst, ClassicalBits{bits, tag}});
}

void Network::send_qubit(NodeId src, NodeId dst, QubitId qubit, const std::string& tag) {
  if (require_link(src, dst, "send_qubit") != LinkKind::Quantum) {
    throw SimnetError("send_qubit: link " + to_string(src) + "-" + to_string(dst) +
                      " is classical and cannot carry qubits");
  }
  NodeInventory& inv = inventory(src);
  const auto it = std::find_if(inv.qubits_.begin(), inv.qubits_.end(),
                               [&](const auto& entry) { return entry.second == qubit; });
  if (it == inv.qubits_.end()) {
    throw SimnetError("send_qubit: qubit " + std::to_string(qubit.value) + " is not held by " +
                      to_string(src));
  }
  inv.qubits_.erase(it);
  in_flight_.emplace(qubit.value, src);
  queue_.push_back(NetEvent{now_ + 1, src, dst, QubitTransfer{qubit, tag}});
}

void Network::broadcast_classical(NodeId src, const Bits& bits, const std::string& tag) {
  require_node(src, "broadcast_classical");
  std::vector<NodeId> targets = topology_->neighbors(src);
  const bool central = src.role == Role::M1 || src.role == Role::M2;
  if (central) {
    std::erase_if(targets, [](NodeId n) { return n.role == Role::M1 || n.role == Role::M2; });
  }
  if (targets.empty()) {
    throw SimnetError("broadcast_classical: " + to_string(src) + " has no links to broadcast on");
  }
  for (const NodeId dst : targets) send_classical(src, dst, bits, tag);
}

void Network::deliver(const NetEvent& event) {
  NodeInventory& inv = inventories_.at(event.dst);
  if (const auto* q = std::get_if<QubitTransfer>(&event.payload)) {
    if (inv.holds(q->tag)) {
      throw SimnetError("deliver: " + to_string(event.dst) + " already holds a qubit labelled '" +
                        q->tag + "'");
    }
    in_flight_.erase(q->qubit.value);
    inv.qubits_.emplace(q->tag, q->qubit);
    registry_->set_holder(q->qubit, topology_->holder_of(event.dst));
    trace_.push_back({event.time, event.src, event.dst, PayloadKind::Qubit, q->tag, {}});
  } else {
    const auto& c = std::get<ClassicalBits>(event.payload);
    inv.messages_.push_back({event.time, event.src, c.bits, c.tag});
    trace_.push_back({event.time, event.src, event.dst, PayloadKind::Classical, c.tag, c.bits});
  }
}

EventTrace Network::run_until_idle() {
  const std::size_t first = trace_.size();
  const std::uint64_t start = now_;
  while (!queue_.empty()) {
    NetEvent event = std::move(queue_.front());
    queue_.pop_front();
    now_ = event.time;
    if (now_ - start > tick_cap_) {
      queue_.clear();
      throw SimnetError("run_until_idle: tick cap of " + std::to_string(tick_cap_) +
                        " exceeded (livelock?)");
    }
    deliver(event);
    if (handler_) handler_(*this, event);
  }
  return EventTrace(trace_.begin() + static_cast<std::ptrdiff_t>(first), trace_.end());
}

std::optional<NodeId> Network::owner_of(QubitId qubit) const {
  for (const auto& [node, inv] : inventories_) {
    for (const auto& [label, q] : inv.qubits_) {
      if (q == qubit) return node;
    }
  }
  return std::nullopt;
}

bool Network::in_flight(QubitId qubit) const { return in_flight_.contains(qubit.value); }

}  // namespace qbutterfly
