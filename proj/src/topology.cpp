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

#include "qbutterfly/topology.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace qbutterfly {

std::string to_string(NodeId node) {
  switch (node.role) {
    case Role::Transmitter: return "T" + std::to_string(node.index);
    case Role::Receiver: return "R" + std::to_string(node.index);
    case Role::M1: return "M1";
    case Role::M2: return "M2";
  }
  return "?";
}

NodeId parse_node(std::string_view text) {
  if (text == "M1") return NodeId::m1();
  if (text == "M2") return NodeId::m2();
  if (text.size() >= 2 && (text[0] == 'T' || text[0] == 'R')) {
    int n = 0;
    const auto* first = text.data() + 1;
    const auto* last = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(first, last, n);
    if (ec == std::errc() && ptr == last && n >= 1) {
      return text[0] == 'T' ? NodeId::transmitter(n) : NodeId::receiver(n);
    }
  }
  throw TopologyError("unrecognized node name '" + std::string(text) + "'");
}

std::string to_string(LinkKind kind) {
  return kind == LinkKind::Quantum ? "quantum" : "classical";
}

namespace {

Link make_link(NodeId x, NodeId y, LinkKind kind) {
  if (y < x) std::swap(x, y);
  return Link{x, y, kind};
}

}  // namespace

std::optional<LinkKind> Topology::link_between(NodeId x, NodeId y) const {
  if (y < x) std::swap(x, y);
  for (const Link& l : links_) {
    if (l.a == x && l.b == y) return l.kind;
  }
  return std::nullopt;
}

std::vector<NodeId> Topology::neighbors(NodeId node) const {
  std::vector<NodeId> out;
  for (const Link& l : links_) {
    if (l.a == node) out.push_back(l.b);
    if (l.b == node) out.push_back(l.a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool Topology::contains(NodeId node) const {
  return std::find(nodes_.begin(), nodes_.end(), node) != nodes_.end();
}

Holder Topology::holder_of(NodeId node) const {
  if (!contains(node)) throw TopologyError("node " + to_string(node) + " is not in the topology");
  const auto n = static_cast<Holder>(n_pairs_);
  switch (node.role) {
    case Role::Transmitter: return static_cast<Holder>(node.index - 1);
    case Role::Receiver: return n + static_cast<Holder>(node.index - 1);
    case Role::M1: return 2 * n;
    case Role::M2: return 2 * n + 1;
  }
  return kNoHolder;
}

std::string Topology::describe() const {
  std::ostringstream out;
  out << "butterfly N=" << n_pairs_ << "\n";
  out << "nodes " << nodes_.size() << "\n";
  for (const NodeId& node : nodes_) out << "node " << to_string(node) << "\n";
  out << "links " << links_.size() << "\n";
  for (const Link& l : links_) {
    out << "link " << to_string(l.a) << " " << to_string(l.b) << " " << to_string(l.kind) << "\n";
  }
  return out.str();
}

Topology build_butterfly(int n_pairs) {
  if (n_pairs < 2) {
    throw TopologyError("butterfly network needs at least 2 transceiver pairs, got " +
                        std::to_string(n_pairs));
  }
  Topology t;
  t.n_pairs_ = n_pairs;
  for (int n = 1; n <= n_pairs; ++n) t.nodes_.push_back(NodeId::transmitter(n));
  for (int n = 1; n <= n_pairs; ++n) t.nodes_.push_back(NodeId::receiver(n));
  t.nodes_.push_back(NodeId::m1());
  t.nodes_.push_back(NodeId::m2());

  for (int n = 1; n <= n_pairs; ++n) {
    for (int m = 1; m <= n_pairs; ++m) {
      if (m != n) {
        t.links_.push_back(
            make_link(NodeId::transmitter(n), NodeId::receiver(m), LinkKind::Quantum));
      }
    }
  }
  for (int n = 1; n <= n_pairs; ++n) {
    t.links_.push_back(make_link(NodeId::receiver(n), NodeId::m2(), LinkKind::Quantum));
  }
  for (int n = 1; n <= n_pairs; ++n) {
    t.links_.push_back(make_link(NodeId::transmitter(n), NodeId::m1(), LinkKind::Classical));
  }
  t.links_.push_back(make_link(NodeId::m1(), NodeId::m2(), LinkKind::Classical));
  return t;
}

LinkCounts link_counts(const Topology& topology) {
  LinkCounts c;
  c.total = topology.links().size();
  c.quantum = static_cast<std::size_t>(
      std::count_if(topology.links().begin(), topology.links().end(),
                    [](const Link& l) { return l.kind == LinkKind::Quantum; }));
  return c;
}

Protocol parse_protocol(std::string_view name) {
  if (name == "iedtc") return Protocol::Iedtc;
  if (name == "benchmark") return Protocol::Benchmark;
  throw TopologyError("unknown protocol '" + std::string(name) + "'");
}

std::string to_string(Protocol protocol) {
  return protocol == Protocol::Iedtc ? "iedtc" : "benchmark";
}

ResourceTriple reference_resources(Protocol protocol, int n_pairs) {
  if (n_pairs < 2) throw TopologyError("reference_resources: N must be at least 2");
  const auto n = static_cast<std::size_t>(n_pairs);
  switch (protocol) {
    case Protocol::Iedtc: return {n * n + n + 1, n * n, 7 * n};
    case Protocol::Benchmark:
      return {3 * n * n + 5 * n + 2, 2 * n * n + 5 * n + 2, 2 * n * n + 3 * n + 1};
  }
  throw TopologyError("reference_resources: unknown protocol");
}

std::size_t report_peak(const StateRegistry& registry) { return registry.holder_peak_sum(); }

}  // namespace qbutterfly
