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

// Simple undirected graphs as immutable values.
//
// Node ids are supplied by the caller and are never renumbered: removing a
// node or an edge returns a new Graph in which every surviving node keeps its
// id. Internally each Graph also carries a dense index (position in the
// sorted node list) so that traversals can use flat arrays.

#ifndef LINKSCOPE_GRAPH_HPP_
#define LINKSCOPE_GRAPH_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace linkscope {

using NodeId = std::uint32_t;

// Unordered endpoint pair, stored with u < v.
struct Edge {
  NodeId u = 0;
  NodeId v = 0;

  static constexpr Edge of(NodeId a, NodeId b) {
    return a < b ? Edge{a, b} : Edge{b, a};
  }

  constexpr bool touches(NodeId x) const { return u == x || v == x; }
  constexpr NodeId other(NodeId x) const { return x == u ? v : u; }
  constexpr bool adjacent_to(const Edge& e) const {
    return !(*this == e) && (touches(e.u) || touches(e.v));
  }

  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

// "u-v" with u < v.
std::string to_string(const Edge& e);
// Accepts "u-v" in either order; nullopt on anything else.
std::optional<Edge> parse_edge(std::string_view text);

class Graph {
 public:
  Graph() = default;

  // Validates: endpoints present, no self-loops, no parallel edges.
  // Node and edge lists may be given in any order.
  Graph(std::vector<NodeId> nodes, std::vector<Edge> edges);

  // Node set is the set of endpoints.
  static Graph from_edges(std::initializer_list<std::pair<NodeId, NodeId>> edges);
  static Graph from_edges(const std::vector<Edge>& edges);

  std::span<const NodeId> nodes() const { return nodes_; }
  std::span<const Edge> edges() const { return edges_; }

  // |G| and ||G|| respectively.
  std::size_t node_count() const { return nodes_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  bool empty() const { return nodes_.empty(); }

  bool has_node(NodeId v) const { return index_of(v).has_value(); }
  bool has_edge(NodeId a, NodeId b) const;
  bool has_edge(const Edge& e) const { return has_edge(e.u, e.v); }

  std::optional<std::size_t> index_of(NodeId v) const;
  // Throws Error(kNotFound) when v is absent.
  std::size_t index(NodeId v) const;
  NodeId node_at(std::size_t i) const { return nodes_[i]; }

  // Neighbor indices of the node at index i, ascending.
  std::span<const std::uint32_t> adjacent(std::size_t i) const { return adj_[i]; }
  std::vector<NodeId> neighbors(NodeId v) const;
  std::size_t degree(NodeId v) const { return adj_[index(v)].size(); }

  // Largest node id; 0 for the empty graph.
  NodeId max_node() const { return nodes_.empty() ? 0 : nodes_.back(); }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.nodes_ == b.nodes_ && a.edges_ == b.edges_;
  }

 private:
  std::vector<NodeId> nodes_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::uint32_t>> adj_;
};

// Table I operators. Each returns a new value.
Graph remove_edge(const Graph& g, const Edge& e);
Graph add_edge(const Graph& g, NodeId u, NodeId v);
Graph remove_node(const Graph& g, NodeId v);
Graph add_node(const Graph& g, NodeId v);
Graph remove_nodes(const Graph& g, std::span<const NodeId> vs);
Graph induced_subgraph(const Graph& g, std::span<const NodeId> keep);

// Connected-component labelling over the dense index, skipping indices with
// removed[i] != 0 (label -1). An empty `removed` means nothing is removed.
struct ComponentLabels {
  std::vector<int> label;
  int count = 0;
};
ComponentLabels component_labels(const Graph& g, std::span<const char> removed = {});

// Empty graph and single node are connected.
bool is_connected(const Graph& g);
// Connectivity of g with the given indices deleted (indices, not ids).
bool is_connected_without(const Graph& g, std::span<const char> removed);

// Sequence of distinct nodes, consecutive ones adjacent. A single node is a
// path with no links.
struct SimplePath {
  std::vector<NodeId> nodes;

  std::size_t length() const { return nodes.empty() ? 0 : nodes.size() - 1; }
  NodeId front() const { return nodes.front(); }
  NodeId back() const { return nodes.back(); }
  bool contains(NodeId v) const;
  std::vector<Edge> edges() const;

  friend auto operator<=>(const SimplePath&, const SimplePath&) = default;
};

bool is_simple_path(const Graph& g, std::span<const NodeId> nodes);
// Throws Error(kInvalidPath).
SimplePath make_path(const Graph& g, std::vector<NodeId> nodes);

// At least three distinct nodes, cyclically adjacent. Stored canonically:
// rotated so the smallest id is first, oriented so nodes[1] < nodes.back().
struct Cycle {
  std::vector<NodeId> nodes;

  std::size_t size() const { return nodes.size(); }
  bool contains(NodeId v) const;
  bool contains(const Edge& e) const;
  std::vector<Edge> edges() const;

  friend auto operator<=>(const Cycle&, const Cycle&) = default;
};

std::vector<NodeId> canonical_cycle_order(std::vector<NodeId> nodes);
bool is_cycle(const Graph& g, std::span<const NodeId> nodes);
// Validates and canonicalizes. Throws Error(kInvalidCycle).
Cycle make_cycle(const Graph& g, std::vector<NodeId> nodes);

// True iff no edge of g joins two non-consecutive nodes of c.
bool induced_check(const Graph& g, const Cycle& c);

// Edge-list text: "u v" per line, '#' comments, optional header
// "nodes: N" (ids 1..N) or "nodes: {a, b, ...}" declaring the node set.
Graph parse_graph(std::string_view text);
// Canonical text; parse_graph(serialize(g)) == g.
std::string serialize(const Graph& g);

}  // namespace linkscope

#endif  // LINKSCOPE_GRAPH_HPP_
