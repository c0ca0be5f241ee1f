// Copyright 2026 The linkscope Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Monitor-aware constructs and the topological identifiability conditions.
//
// With two monitors m1, m2:
//   Condition 1: G - l is 2-edge-connected for every interior link l.
//   Condition 2: G + m1m2 is 3-vertex-connected.
// With three or more monitors the problem is reduced to the two-monitor case
// on the extended graph, which adds virtual monitors m'1, m'2 each wired to
// every real monitor.

#ifndef LINKSCOPE_TOMOGRAPHY_HPP_
#define LINKSCOPE_TOMOGRAPHY_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "linkscope/graph.hpp"

namespace linkscope {

class MonitorSet {
 public:
  // Validates: at least two distinct ids, all present in g.
  MonitorSet(const Graph& g, std::vector<NodeId> monitors);

  std::span<const NodeId> ids() const { return ids_; }
  std::size_t size() const { return ids_.size(); }
  bool contains(NodeId v) const;
  NodeId operator[](std::size_t i) const { return ids_[i]; }

 private:
  std::vector<NodeId> ids_;
};

struct InteriorGraph {
  Graph graph;                       // G - m1 - m2
  std::vector<Edge> exterior_links;  // links incident to a monitor
  bool connected = false;
};

struct ExtendedGraph {
  Graph base;
  NodeId virtual_1 = 0;
  NodeId virtual_2 = 0;
  std::vector<Edge> virtual_edges;
  Graph graph;  // base plus virtual monitors and virtual edges
};

// Two-monitor operations throw kPrecondition unless |m| == 2.
InteriorGraph interior_graph(const Graph& g, const MonitorSet& m);
bool condition_1(const Graph& g, const MonitorSet& m);
bool condition_2(const Graph& g, const MonitorSet& m);
// Requires |g| >= 4.
bool prop2_characterization(const Graph& g, const MonitorSet& m);

// Throws kTooFewMonitors unless |m| >= 3. Virtual ids are max(id)+1, +2.
ExtendedGraph extend(const Graph& g, const MonitorSet& m);

struct BothSides {
  bool lhs = false;
  bool rhs = false;
  friend bool operator==(const BothSides&, const BothSides&) = default;
};

// lhs: G_ex - l is 2-edge-connected for every real link l.
// rhs: G_ex is 3-edge-connected.
BothSides prop5_both_sides(const Graph& g, const MonitorSet& m);
// lhs: G_ex + m'1m'2 is 3-vertex-connected. rhs: G_ex is 3-vertex-connected.
BothSides prop6_both_sides(const Graph& g, const MonitorSet& m);

}  // namespace linkscope

#endif  // LINKSCOPE_TOMOGRAPHY_HPP_
