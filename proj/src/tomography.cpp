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

#include "linkscope/tomography.hpp"

#include <algorithm>
#include <set>

#include "linkscope/connectivity.hpp"
#include "linkscope/error.hpp"

namespace linkscope {

MonitorSet::MonitorSet(const Graph& g, std::vector<NodeId> monitors) : ids_(std::move(monitors)) {
  if (ids_.size() < 2) throw Error(ErrorCode::kTooFewMonitors, "at least two monitors are required");
  std::set<NodeId> seen;
  for (auto v : ids_) {
    if (!g.has_node(v)) throw Error(ErrorCode::kNotFound, "monitor " + std::to_string(v) + " not in graph");
    if (!seen.insert(v).second) throw Error(ErrorCode::kDuplicate, "monitor " + std::to_string(v) + " listed twice");
  }
}

bool MonitorSet::contains(NodeId v) const {
  return std::find(ids_.begin(), ids_.end(), v) != ids_.end();
}

namespace {

void require_two(const MonitorSet& m) {
  if (m.size() != 2) throw Error(ErrorCode::kPrecondition, "operation is defined for exactly two monitors");
}

}  // namespace

InteriorGraph interior_graph(const Graph& g, const MonitorSet& m) {
  require_two(m);
  InteriorGraph out;
  NodeId both[] = {m[0], m[1]};
  out.graph = remove_nodes(g, both);
  for (const auto& e : g.edges()) {
    if (m.contains(e.u) || m.contains(e.v)) out.exterior_links.push_back(e);
  }
  out.connected = is_connected(out.graph);
  return out;
}

bool condition_1(const Graph& g, const MonitorSet& m) {
  auto h = interior_graph(g, m);
  for (const auto& l : h.graph.edges()) {
    if (!is_k_edge_connected(remove_edge(g, l), 2)) return false;
  }
  return true;
}

bool condition_2(const Graph& g, const MonitorSet& m) {
  require_two(m);
  if (g.has_edge(m[0], m[1])) return is_k_vertex_connected(g, 3);
  return is_k_vertex_connected(add_edge(g, m[0], m[1]), 3);
}

bool prop2_characterization(const Graph& g, const MonitorSet& m) {
  require_two(m);
  const std::size_t n = g.node_count();
  if (n < 4) throw Error(ErrorCode::kPrecondition, "characterization needs at least four nodes");
  std::vector<char> removed(n, 0);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      removed[u] = removed[v] = 1;
      auto labels = component_labels(g, removed);
      if (labels.count > 1) {
        std::vector<char> has_monitor(labels.count, 0);
        for (auto mon : m.ids()) {
          const auto i = g.index(mon);
          if (!removed[i]) has_monitor[labels.label[i]] = 1;
        }
        if (std::find(has_monitor.begin(), has_monitor.end(), 0) != has_monitor.end()) return false;
      }
      removed[u] = removed[v] = 0;
    }
  }
  return true;
}

ExtendedGraph extend(const Graph& g, const MonitorSet& m) {
  if (m.size() < 3) throw Error(ErrorCode::kTooFewMonitors, "extended graph needs at least three monitors");
  ExtendedGraph ex;
  ex.base = g;
  ex.virtual_1 = g.max_node() + 1;
  ex.virtual_2 = g.max_node() + 2;
  std::vector<NodeId> nodes(g.nodes().begin(), g.nodes().end());
  nodes.push_back(ex.virtual_1);
  nodes.push_back(ex.virtual_2);
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  for (auto mon : m.ids()) {
    ex.virtual_edges.push_back(Edge::of(ex.virtual_1, mon));
    ex.virtual_edges.push_back(Edge::of(ex.virtual_2, mon));
  }
  std::sort(ex.virtual_edges.begin(), ex.virtual_edges.end());
  edges.insert(edges.end(), ex.virtual_edges.begin(), ex.virtual_edges.end());
  ex.graph = Graph(std::move(nodes), std::move(edges));
  return ex;
}

BothSides prop5_both_sides(const Graph& g, const MonitorSet& m) {
  auto ex = extend(g, m);
  BothSides out;
  out.lhs = true;
  for (const auto& l : g.edges()) {
    if (!is_k_edge_connected(remove_edge(ex.graph, l), 2)) {
      out.lhs = false;
      break;
    }
  }
  out.rhs = is_k_edge_connected(ex.graph, 3);
  return out;
}

BothSides prop6_both_sides(const Graph& g, const MonitorSet& m) {
  auto ex = extend(g, m);
  BothSides out;
  out.lhs = is_k_vertex_connected(add_edge(ex.graph, ex.virtual_1, ex.virtual_2), 3);
  out.rhs = is_k_vertex_connected(ex.graph, 3);
  return out;
}

}  // namespace linkscope
