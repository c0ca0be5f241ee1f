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

#ifndef LINKSCOPE_CONNECTIVITY_HPP_
#define LINKSCOPE_CONNECTIVITY_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "linkscope/graph.hpp"

namespace linkscope {

// Edges whose removal disconnects g, ascending. Throws kDisconnected.
std::vector<Edge> bridges(const Graph& g);

// Nodes whose removal disconnects g, ascending. Throws kDisconnected.
std::vector<NodeId> cut_vertices(const Graph& g);

// Articulation points (as dense indices) of g restricted to the nodes with
// removed[i] == 0. Each live component is treated separately.
std::vector<std::size_t> articulation_indices(const Graph& g, std::span<const char> removed = {});

// |g| > k and deleting any fewer than k nodes leaves g connected.
bool is_k_vertex_connected(const Graph& g, int k);

// g connected and deleting any fewer than k edges leaves it connected.
bool is_k_edge_connected(const Graph& g, int k);

// Largest k with is_k_vertex_connected(g, k); K_n gives n - 1.
int vertex_connectivity(const Graph& g);

// Maximum number of internally node-disjoint s-t paths (s, t non-adjacent),
// computed by unit-capacity augmenting paths on the split-node network.
int local_vertex_connectivity(const Graph& g, NodeId s, NodeId t);

// Maximum number of edge-disjoint s-t paths.
int local_edge_connectivity(const Graph& g, NodeId s, NodeId t);

}  // namespace linkscope

#endif  // LINKSCOPE_CONNECTIVITY_HPP_
