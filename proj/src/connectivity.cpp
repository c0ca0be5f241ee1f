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

#include "linkscope/connectivity.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <queue>

#include "linkscope/error.hpp"

namespace linkscope {

namespace {

void require_connected(const Graph& g) {
  if (!is_connected(g)) throw Error(ErrorCode::kDisconnected, "graph is not connected");
}

// Iterative lowpoint DFS shared by bridge and articulation detection.
struct LowpointResult {
  std::vector<char> articulation;
  std::vector<Edge> bridges;
};

LowpointResult lowpoint_dfs(const Graph& g, std::span<const char> removed) {
  const std::size_t n = g.node_count();
  constexpr int kUnseen = -1;
  std::vector<int> disc(n, kUnseen), low(n, 0), parent(n, -1);
  std::vector<std::size_t> next_child(n, 0);
  LowpointResult out;
  out.articulation.assign(n, 0);
  int timer = 0;

  for (std::size_t root = 0; root < n; ++root) {
    if (disc[root] != kUnseen || (!removed.empty() && removed[root])) continue;
    int root_children = 0;
    std::vector<std::size_t> stack{root};
    disc[root] = low[root] = timer++;
    while (!stack.empty()) {
      const std::size_t x = stack.back();
      auto adj = g.adjacent(x);
      if (next_child[x] < adj.size()) {
        const std::size_t y = adj[next_child[x]++];
        if (!removed.empty() && removed[y]) continue;
        if (disc[y] == kUnseen) {
          parent[y] = static_cast<int>(x);
          disc[y] = low[y] = timer++;
          if (x == root) ++root_children;
          stack.push_back(y);
        } else if (static_cast<int>(y) != parent[x]) {
          low[x] = std::min(low[x], disc[y]);
        }
        continue;
      }
      stack.pop_back();
      if (parent[x] >= 0) {
        const auto p = static_cast<std::size_t>(parent[x]);
        low[p] = std::min(low[p], low[x]);
        if (low[x] > disc[p]) out.bridges.push_back(Edge::of(g.node_at(p), g.node_at(x)));
        if (p != root && low[x] >= disc[p]) out.articulation[p] = 1;
      }
    }
    if (root_children > 1) out.articulation[root] = 1;
  }
  std::sort(out.bridges.begin(), out.bridges.end());
  return out;
}

// Unit-capacity max flow with BFS augmentation, stopping once `limit` units
// have been pushed.
class FlowNetwork {
 public:
  explicit FlowNetwork(std::size_t n) : head_(n, -1) {}

  void add_arc(std::size_t a, std::size_t b, int cap) {
    arcs_.push_back({b, cap, head_[a]});
    head_[a] = static_cast<int>(arcs_.size()) - 1;
    arcs_.push_back({a, 0, head_[b]});
    head_[b] = static_cast<int>(arcs_.size()) - 1;
  }

  int max_flow(std::size_t s, std::size_t t, int limit) {
    int flow = 0;
    const std::size_t n = head_.size();
    while (flow < limit) {
      std::vector<int> via(n, -1);
      std::vector<char> seen(n, 0);
      std::queue<std::size_t> q;
      q.push(s);
      seen[s] = 1;
      while (!q.empty() && !seen[t]) {
        auto x = q.front();
        q.pop();
        for (int a = head_[x]; a != -1; a = arcs_[a].next) {
          if (arcs_[a].cap > 0 && !seen[arcs_[a].to]) {
            seen[arcs_[a].to] = 1;
            via[arcs_[a].to] = a;
            q.push(arcs_[a].to);
          }
        }
      }
      if (!seen[t]) break;
      for (std::size_t x = t; x != s;) {
        const int a = via[x];
        arcs_[a].cap -= 1;
        arcs_[a ^ 1].cap += 1;
        x = arcs_[a ^ 1].to;
      }
      ++flow;
    }
    return flow;
  }

 private:
  struct Arc {
    std::size_t to;
    int cap;
    int next;
  };
  std::vector<int> head_;
  std::vector<Arc> arcs_;
};

int vertex_flow(const Graph& g, std::size_t s, std::size_t t, int limit) {
  const std::size_t n = g.node_count();
  constexpr int kBig = std::numeric_limits<int>::max() / 4;
  FlowNetwork net(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    net.add_arc(2 * i, 2 * i + 1, (i == s || i == t) ? kBig : 1);
  }
  for (const auto& e : g.edges()) {
    const auto a = *g.index_of(e.u);
    const auto b = *g.index_of(e.v);
    net.add_arc(2 * a + 1, 2 * b, kBig);
    net.add_arc(2 * b + 1, 2 * a, kBig);
  }
  return net.max_flow(2 * s + 1, 2 * t, limit);
}

int edge_flow(const Graph& g, std::size_t s, std::size_t t, int limit) {
  FlowNetwork net(g.node_count());
  for (const auto& e : g.edges()) {
    const auto a = *g.index_of(e.u);
    const auto b = *g.index_of(e.v);
    net.add_arc(a, b, 1);
    net.add_arc(b, a, 1);
  }
  return net.max_flow(s, t, limit);
}

}  // namespace

std::vector<Edge> bridges(const Graph& g) {
  require_connected(g);
  return lowpoint_dfs(g, {}).bridges;
}

std::vector<NodeId> cut_vertices(const Graph& g) {
  require_connected(g);
  auto res = lowpoint_dfs(g, {});
  std::vector<NodeId> out;
  for (std::size_t i = 0; i < g.node_count(); ++i) {
    if (res.articulation[i]) out.push_back(g.node_at(i));
  }
  return out;
}

std::vector<std::size_t> articulation_indices(const Graph& g, std::span<const char> removed) {
  auto res = lowpoint_dfs(g, removed);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < g.node_count(); ++i) {
    if (res.articulation[i]) out.push_back(i);
  }
  return out;
}

bool is_k_vertex_connected(const Graph& g, int k) {
  if (k <= 0) return true;
  const std::size_t n = g.node_count();
  if (n <= static_cast<std::size_t>(k)) return false;
  if (!is_connected(g)) return false;
  if (k == 1) return true;
  if (k == 2) return articulation_indices(g).empty();
  if (k == 3) {
    if (!articulation_indices(g).empty()) return false;
    std::vector<char> removed(n, 0);
    for (std::size_t v = 0; v < n; ++v) {
      removed[v] = 1;
      const bool ok = articulation_indices(g, removed).empty();
      removed[v] = 0;
      if (!ok) return false;
    }
    return true;
  }
  // Menger: the minimum over non-adjacent pairs of the local connectivity.
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t t = s + 1; t < n; ++t) {
      if (g.has_edge(g.node_at(s), g.node_at(t))) continue;
      if (vertex_flow(g, s, t, k) < k) return false;
    }
  }
  return true;
}

bool is_k_edge_connected(const Graph& g, int k) {
  if (!is_connected(g)) return false;
  if (k <= 1 || g.node_count() <= 1) return true;
  if (k == 2) return lowpoint_dfs(g, {}).bridges.empty();
  for (std::size_t t = 1; t < g.node_count(); ++t) {
    if (edge_flow(g, 0, t, k) < k) return false;
  }
  return true;
}

int vertex_connectivity(const Graph& g) {
  int k = 0;
  while (is_k_vertex_connected(g, k + 1)) ++k;
  return k;
}

int local_vertex_connectivity(const Graph& g, NodeId s, NodeId t) {
  if (s == t || g.has_edge(s, t)) {
    throw Error(ErrorCode::kPrecondition, "local vertex connectivity needs distinct non-adjacent nodes");
  }
  return vertex_flow(g, g.index(s), g.index(t), std::numeric_limits<int>::max());
}

int local_edge_connectivity(const Graph& g, NodeId s, NodeId t) {
  if (s == t) throw Error(ErrorCode::kPrecondition, "local edge connectivity needs distinct nodes");
  return edge_flow(g, g.index(s), g.index(t), std::numeric_limits<int>::max());
}

}  // namespace linkscope
