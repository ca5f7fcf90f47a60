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

#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qbutterfly/qstate.hpp"

namespace qbutterfly {

class TopologyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Role { Transmitter, Receiver, M1, M2 };

/// A node of the butterfly network. `index` is 1-based for transmitters and
/// receivers and 0 for the two central nodes.
struct NodeId {
  Role role = Role::M1;
  int index = 0;

  static constexpr NodeId transmitter(int n) { return {Role::Transmitter, n}; }
  static constexpr NodeId receiver(int n) { return {Role::Receiver, n}; }
  static constexpr NodeId m1() { return {Role::M1, 0}; }
  static constexpr NodeId m2() { return {Role::M2, 0}; }

  auto operator<=>(const NodeId&) const = default;
};

std::string to_string(NodeId node);

/// Parses "T3", "R1", "M1", "M2".
NodeId parse_node(std::string_view text);

enum class LinkKind { Classical, Quantum };

std::string to_string(LinkKind kind);

/// Undirected link; endpoints are stored with a < b.
struct Link {
  NodeId a;
  NodeId b;
  LinkKind kind = LinkKind::Classical;

  bool operator==(const Link&) const = default;
};

struct ResourceTriple {
  std::size_t total_links = 0;
  std::size_t quantum_links = 0;
  std::size_t qubits = 0;

  bool operator==(const ResourceTriple&) const = default;
};

struct LinkCounts {
  std::size_t total = 0;
  std::size_t quantum = 0;

  bool operator==(const LinkCounts&) const = default;
};

/// Immutable network graph. A default-constructed topology is empty.
class Topology {
 public:
  Topology() = default;

  int n_pairs() const { return n_pairs_; }
  const std::vector<NodeId>& nodes() const { return nodes_; }
  const std::vector<Link>& links() const { return links_; }

  std::optional<LinkKind> link_between(NodeId x, NodeId y) const;
  std::vector<NodeId> neighbors(NodeId node) const;
  bool contains(NodeId node) const;

  /// Dense index of a node, usable as a registry Holder:
  /// T_n -> n-1, R_n -> N+n-1, M1 -> 2N, M2 -> 2N+1.
  Holder holder_of(NodeId node) const;

  /// Node list followed by link list, one entry per line.
  std::string describe() const;

 private:
  friend Topology build_butterfly(int n_pairs);

  int n_pairs_ = 0;
  std::vector<NodeId> nodes_;
  std::vector<Link> links_;
};

/// Size-N butterfly: T_n-R_m fiber for m != n, R_n-M2 fiber, T_n-M1
/// classical, M1-M2 classical bottleneck.
Topology build_butterfly(int n_pairs);

LinkCounts link_counts(const Topology& topology);

enum class Protocol { Iedtc, Benchmark };

Protocol parse_protocol(std::string_view name);
std::string to_string(Protocol protocol);

/// Closed-form reference rows:
///   benchmark: (3N^2+5N+2, 2N^2+5N+2, 2N^2+3N+1)
///   iedtc:     (N^2+N+1,   N^2,        7N)
ResourceTriple reference_resources(Protocol protocol, int n_pairs);

/// Qubit usage of a completed run: the sum over nodes of the largest number
/// of qubits each node held at once.
std::size_t report_peak(const StateRegistry& registry);

}  // namespace qbutterfly
