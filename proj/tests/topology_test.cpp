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


#include <queue>
#include <set>
#include <string>

#include <gtest/gtest.h>

#include "qbutterfly/topology.hpp"

namespace qbutterfly {
namespace {

// Brute-force classification of every unordered node pair.
LinkCounts brute_force_counts(int n) {
  LinkCounts c;
  std::vector<NodeId> nodes;
  for (int k = 1; k <= n; ++k) {
    nodes.push_back(NodeId::transmitter(k));
    nodes.push_back(NodeId::receiver(k));
  }
  nodes.push_back(NodeId::m1());
  nodes.push_back(NodeId::m2());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    for (std::size_t j = i + 1; j < nodes.size(); ++j) {
      NodeId a = nodes[i];
      NodeId b = nodes[j];
      if (b.role < a.role) std::swap(a, b);
      bool quantum = false;
      bool classical = false;
      if (a.role == Role::Transmitter && b.role == Role::Receiver) quantum = a.index != b.index;
      if (a.role == Role::Receiver && b.role == Role::M2) quantum = true;
      if (a.role == Role::Transmitter && b.role == Role::M1) classical = true;
      if (a.role == Role::M1 && b.role == Role::M2) classical = true;
      c.total += (quantum || classical) ? 1 : 0;
      c.quantum += quantum ? 1 : 0;
    }
  }
  return c;
}

TEST(TopologyTest, SmallestNetwork) {
  const Topology t = build_butterfly(2);
  EXPECT_EQ(link_counts(t), (LinkCounts{7, 4}));
  EXPECT_EQ(t.nodes().size(), 6u);
  EXPECT_EQ(t.link_between(NodeId::transmitter(1), NodeId::receiver(2)), LinkKind::Quantum);
  EXPECT_FALSE(t.link_between(NodeId::transmitter(1), NodeId::receiver(1)).has_value());
  EXPECT_EQ(t.link_between(NodeId::m2(), NodeId::m1()), LinkKind::Classical);
}

TEST(TopologyTest, ThreePairs) {
  EXPECT_EQ(link_counts(build_butterfly(3)), (LinkCounts{13, 9}));
}

TEST(TopologyTest, TenPairs) {
  EXPECT_EQ(link_counts(build_butterfly(10)), (LinkCounts{111, 100}));
}

TEST(TopologyTest, RejectsTooFewPairs) {
  EXPECT_THROW(build_butterfly(1), TopologyError);
  EXPECT_THROW(build_butterfly(0), TopologyError);
  EXPECT_THROW(build_butterfly(-3), TopologyError);
}

TEST(TopologyTest, EmptyTopology) {
  const Topology t;
  EXPECT_EQ(link_counts(t), (LinkCounts{0, 0}));
  EXPECT_TRUE(t.nodes().empty());
}

TEST(TopologyTest, CountsMatchBruteForceAndClosedForm) {
  for (int n = 2; n <= 12; ++n) {
    const Topology t = build_butterfly(n);
    const auto un = static_cast<std::size_t>(n);
    const LinkCounts c = link_counts(t);
    EXPECT_EQ(c, brute_force_counts(n)) << "N=" << n;
    EXPECT_EQ(c, (LinkCounts{un * un + un + 1, un * un})) << "N=" << n;
    const ResourceTriple r = reference_resources(Protocol::Iedtc, n);
    EXPECT_EQ(r.total_links, c.total);
    EXPECT_EQ(r.quantum_links, c.quantum);
  }
}

TEST(TopologyTest, StructuralProperties) {
  for (int n = 2; n <= 12; ++n) {
    const Topology t = build_butterfly(n);
    for (int k = 1; k <= n; ++k) {
      EXPECT_FALSE(t.link_between(NodeId::transmitter(k), NodeId::receiver(k)).has_value());
      EXPECT_EQ(t.neighbors(NodeId::transmitter(k)).size(), static_cast<std::size_t>(n));
      EXPECT_EQ(t.neighbors(NodeId::receiver(k)).size(), static_cast<std::size_t>(n));
    }
    EXPECT_EQ(t.neighbors(NodeId::m1()).size(), static_cast<std::size_t>(n) + 1);
    EXPECT_EQ(t.neighbors(NodeId::m2()).size(), static_cast<std::size_t>(n) + 1);
    std::size_t classical = 0;
    for (const Link& l : t.links()) {
      EXPECT_LT(l.a, l.b);
      if (l.kind == LinkKind::Classical) ++classical;
    }
    EXPECT_EQ(classical, static_cast<std::size_t>(n) + 1);

    // Connected graph.
    std::set<NodeId> seen{NodeId::m1()};
    std::queue<NodeId> frontier;
    frontier.push(NodeId::m1());
    while (!frontier.empty()) {
      const NodeId cur = frontier.front();
      frontier.pop();
      for (const NodeId nb : t.neighbors(cur)) {
        if (seen.insert(nb).second) frontier.push(nb);
      }
    }
    EXPECT_EQ(seen.size(), t.nodes().size());
  }
}

TEST(TopologyTest, HolderIndicesAreDense) {
  const Topology t = build_butterfly(4);
  std::set<Holder> holders;
  for (const NodeId node : t.nodes()) holders.insert(t.holder_of(node));
  EXPECT_EQ(holders.size(), t.nodes().size());
  EXPECT_EQ(*holders.rbegin(), t.nodes().size() - 1);
  EXPECT_THROW(t.holder_of(NodeId::transmitter(5)), TopologyError);
}

TEST(TopologyTest, ReferenceResourceRows) {
  EXPECT_EQ(reference_resources(Protocol::Iedtc, 2), (ResourceTriple{7, 4, 14}));
  EXPECT_EQ(reference_resources(Protocol::Iedtc, 3), (ResourceTriple{13, 9, 21}));
  EXPECT_EQ(reference_resources(Protocol::Benchmark, 2), (ResourceTriple{24, 20, 15}));
  EXPECT_EQ(reference_resources(Protocol::Benchmark, 3), (ResourceTriple{44, 35, 28}));
  for (int n = 2; n <= 10; ++n) {
    const auto un = static_cast<std::size_t>(n);
    EXPECT_EQ(reference_resources(Protocol::Benchmark, n),
              (ResourceTriple{3 * un * un + 5 * un + 2, 2 * un * un + 5 * un + 2,
                              2 * un * un + 3 * un + 1}));
  }
}

TEST(TopologyTest, ProtocolNames) {
  EXPECT_EQ(parse_protocol("iedtc"), Protocol::Iedtc);
  EXPECT_EQ(parse_protocol("benchmark"), Protocol::Benchmark);
  EXPECT_THROW(parse_protocol("carrier-pigeon"), TopologyError);
  EXPECT_EQ(to_string(Protocol::Benchmark), "benchmark");
}

TEST(TopologyTest, NodeNamesRoundTrip) {
  const Topology t = build_butterfly(12);
  for (const NodeId node : t.nodes()) EXPECT_EQ(parse_node(to_string(node)), node);
  EXPECT_THROW(parse_node("X1"), TopologyError);
  EXPECT_THROW(parse_node("T0"), TopologyError);
  EXPECT_THROW(parse_node("R"), TopologyError);
}

TEST(TopologyTest, DescribeListsEverything) {
  const std::string d = build_butterfly(2).describe();
  EXPECT_NE(d.find("butterfly N=2\n"), std::string::npos);
  EXPECT_NE(d.find("nodes 6\n"), std::string::npos);
  EXPECT_NE(d.find("links 7\n"), std::string::npos);
  EXPECT_NE(d.find("link T1 R2 quantum\n"), std::string::npos);
  EXPECT_NE(d.find("link M1 M2 classical\n"), std::string::npos);
}

TEST(TopologyTest, ReportPeakOfUnusedRegistryIsZero) {
  const auto reg = new_registry(0.0, 1);
  EXPECT_EQ(report_peak(reg), 0u);
}

}  // namespace
}  // namespace qbutterfly
