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

// Block (biconnected) and triconnected decomposition.
//
// Triconnected components follow the classic split-component construction:
// a block is split at separation pairs, each side receiving a virtual edge
// between the pair, until every piece is a triangle, a bond (two nodes joined
// by three or more parallel edges) or a 3-connected simple graph. Adjacent
// bonds and adjacent polygons are then merged through their shared virtual
// edges, which yields the unique canonical set of bonds, polygons and rigid
// components.

#ifndef LINKSCOPE_DECOMPOSITION_HPP_
#define LINKSCOPE_DECOMPOSITION_HPP_

#include <cstddef>
#include <string_view>
#include <vector>

#include "linkscope/graph.hpp"

namespace linkscope {

struct BiconnectedComponent {
  std::vector<NodeId> nodes;  // ascending
  std::vector<Edge> edges;    // ascending
  // Cut vertices of the whole graph lying in this block (c_B).
  std::vector<NodeId> cut_vertices;

  std::size_t cut_vertex_count() const { return cut_vertices.size(); }
  Graph as_graph() const { return Graph(nodes, edges); }
};

enum class ComponentKind { kBond, kPolygon, kRigid };
std::string_view to_string(ComponentKind kind);

struct TriconnectedComponent {
  ComponentKind kind = ComponentKind::kRigid;
  std::vector<NodeId> nodes;         // ascending
  std::vector<Edge> real_edges;      // ascending
  std::vector<Edge> virtual_edges;   // ascending; bonds may repeat a pair
  // Cut vertices of G in this component plus endpoints of its virtual edges.
  std::vector<NodeId> separation_vertices;

  std::size_t separation_vertex_count() const { return separation_vertices.size(); }
};

// Blocks in canonical order (by node list). Throws kDisconnected.
// A single-node graph yields one block with that node and no edges.
std::vector<BiconnectedComponent> biconnected_components(const Graph& g);

// Canonical split of a block with at least three nodes. The result is
// ordered by node list, then kind. Throws kPrecondition if b is not a block
// of g with |b| >= 3.
std::vector<TriconnectedComponent> triconnected_components(const BiconnectedComponent& b, const Graph& g);

// Cut vertices of g lying in t, together with the endpoints of t's virtual
// edges.
std::vector<NodeId> separation_vertices(const TriconnectedComponent& t, const Graph& g);

// Lower-level entry point: canonical split components of a biconnected
// simple graph with at least three nodes, without s_T bookkeeping.
std::vector<TriconnectedComponent> split_components(const Graph& block);

}  // namespace linkscope

#endif  // LINKSCOPE_DECOMPOSITION_HPP_
