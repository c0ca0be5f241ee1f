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

#include "linkscope/corpus.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <set>

#include "linkscope/error.hpp"

namespace linkscope {

namespace {

std::vector<Edge> lex_pairs(int n) {
  std::vector<Edge> pairs;
  for (int a = 1; a <= n; ++a) {
    for (int b = a + 1; b <= n; ++b) pairs.push_back(Edge::of(a, b));
  }
  return pairs;
}

// Connectivity of a bitmask graph on n nodes without building a Graph.
bool mask_connected(int n, const std::vector<Edge>& pairs, std::uint64_t mask) {
  if (n <= 1) return true;
  std::vector<int> parent(n + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int joined = 0;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (!(mask >> i & 1)) continue;
    const int a = find(pairs[i].u);
    const int b = find(pairs[i].v);
    if (a != b) {
      parent[a] = b;
      ++joined;
    }
  }
  return joined == n - 1;
}

Graph from_mask(int n, const std::vector<Edge>& pairs, std::uint64_t mask) {
  std::vector<NodeId> nodes(n);
  std::iota(nodes.begin(), nodes.end(), 1);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (mask >> i & 1) edges.push_back(pairs[i]);
  }
  return Graph(std::move(nodes), std::move(edges));
}

}  // namespace

ConnectedGraphStream::ConnectedGraphStream(int n) : n_(n) {
  if (n < 1 || n > 7) throw Error(ErrorCode::kOutOfRange, "exhaustive corpus supports 1 to 7 nodes");
  pairs_ = lex_pairs(n);
  end_ = std::uint64_t{1} << pairs_.size();
}

std::optional<Graph> ConnectedGraphStream::next() {
  while (mask_ < end_) {
    const auto mask = mask_++;
    if (mask_connected(n_, pairs_, mask)) return from_mask(n_, pairs_, mask);
  }
  return std::nullopt;
}

void for_each_connected_graph(int n, const std::function<void(const Graph&)>& visit) {
  ConnectedGraphStream stream(n);
  while (auto g = stream.next()) visit(*g);
}

std::vector<Graph> all_connected_graphs(int n) {
  std::vector<Graph> out;
  for_each_connected_graph(n, [&](const Graph& g) { out.push_back(g); });
  return out;
}

std::vector<Graph> connected_graph_classes(int n) {
  if (n < 1 || n > 8) throw Error(ErrorCode::kOutOfRange, "isomorphism classes are enumerated for 1 to 8 nodes");
  const auto pairs = lex_pairs(n);
  std::vector<std::vector<int>> pair_id(n + 1, std::vector<int>(n + 1, -1));
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    pair_id[pairs[i].u][pairs[i].v] = pair_id[pairs[i].v][pairs[i].u] = static_cast<int>(i);
  }

  // Canonical mask by individualisation-refinement: refine colours to a stable
  // partition, branch on each node of the first non-singleton cell, and keep
  // the smallest image over all discrete leaves.
  auto canonical = [&](std::uint64_t mask) {
    std::vector<std::vector<int>> adj(n + 1);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if (mask >> i & 1) {
        adj[pairs[i].u].push_back(static_cast<int>(pairs[i].v));
        adj[pairs[i].v].push_back(static_cast<int>(pairs[i].u));
      }
    }
    auto refine = [&](std::vector<int> colour) {
      for (int cells = -1;;) {
        std::vector<std::pair<std::vector<int>, int>> keys;
        for (int v = 1; v <= n; ++v) {
          std::vector<int> key;
          for (int w : adj[v]) key.push_back(colour[w]);
          std::sort(key.begin(), key.end());
          key.insert(key.begin(), colour[v]);
          keys.emplace_back(std::move(key), v);
        }
        std::sort(keys.begin(), keys.end());
        int c = 0;
        for (std::size_t i = 0; i < keys.size(); ++i) {
          if (i > 0 && keys[i].first != keys[i - 1].first) ++c;
          colour[keys[i].second] = c;
        }
        if (c == cells) return colour;
        cells = c;
      }
    };
    std::uint64_t best = ~std::uint64_t{0};
    std::function<void(const std::vector<int>&)> search = [&](const std::vector<int>& colour) {
      std::vector<int> size(n + 1, 0);
      for (int v = 1; v <= n; ++v) ++size[colour[v]];
      int target = -1;
      for (int c = 0; c < n && target < 0; ++c) {
        if (size[c] > 1) target = c;
      }
      if (target < 0) {
        std::uint64_t image = 0;
        for (std::size_t i = 0; i < pairs.size(); ++i) {
          if (mask >> i & 1) image |= std::uint64_t{1} << pair_id[colour[pairs[i].u] + 1][colour[pairs[i].v] + 1];
        }
        best = std::min(best, image);
        return;
      }
      for (int v = 1; v <= n; ++v) {
        if (colour[v] != target) continue;
        auto split = colour;
        for (auto& c : split) c *= 2;
        split[v] -= 1;
        search(refine(split));
      }
    };
    search(refine(std::vector<int>(n + 1, 0)));
    return best;
  };

  // Grow classes one edge at a time from the empty graph.
  std::set<std::uint64_t> level{0};
  std::set<std::uint64_t> connected;
  for (std::size_t edges = 0; edges <= pairs.size(); ++edges) {
    std::set<std::uint64_t> next;
    for (auto mask : level) {
      if (mask_connected(n, pairs, mask)) connected.insert(mask);
      for (std::size_t i = 0; i < pairs.size(); ++i) {
        if (!(mask >> i & 1)) next.insert(canonical(mask | std::uint64_t{1} << i));
      }
    }
    level = std::move(next);
  }
  std::vector<Graph> out;
  for (auto mask : connected) out.push_back(from_mask(n, pairs, mask));
  return out;
}

Graph random_connected_graph(int n, double edge_prob, std::uint64_t seed) {
  if (n < 2) throw Error(ErrorCode::kOutOfRange, "random graphs need at least two nodes");
  if (!(edge_prob > 0.0 && edge_prob <= 1.0)) throw Error(ErrorCode::kOutOfRange, "edge probability must be in (0, 1]");
  std::mt19937_64 rng(seed);
  const auto pairs = lex_pairs(n);
  double p = edge_prob;
  for (int attempt = 1;; ++attempt) {
    std::vector<Edge> edges;
    for (const auto& e : pairs) {
      const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      if (u < p) edges.push_back(e);
    }
    std::vector<NodeId> nodes(n);
    std::iota(nodes.begin(), nodes.end(), 1);
    Graph g(std::move(nodes), std::move(edges));
    if (is_connected(g)) return g;
    if (attempt % 64 == 0) p += (1.0 - p) / 2.0;
    if (attempt % 64 == 0 && p > 0.999) p = 1.0;
  }
}

std::map<std::string, Fixture> named_fixtures() {
  std::map<std::string, Fixture> out;
  // m1=1, a1=2, a2=3, r=4 | s=5, b1=6, b2=7, m2=8; bridge r-s.
  out["fig1a_bridge"] = {Graph::from_edges({{1, 2}, {1, 3}, {2, 4}, {3, 4}, {4, 5}, {5, 6}, {5, 7}, {6, 8}, {7, 8}}),
                         {1, 8},
                         Edge::of(4, 5),
                         "interior bridge 4-5 between two 4-cycles, monitors 1 and 8"};
  // m1=1, a1=2, a2=3, r=4 | m2=5 with b1=6, b2=7; bridge r-m2.
  out["fig1b_bridge"] = {Graph::from_edges({{1, 2}, {1, 3}, {2, 4}, {3, 4}, {4, 5}, {5, 6}, {5, 7}, {6, 7}}),
                         {1, 5},
                         Edge::of(4, 5),
                         "exterior bridge 4-5 ending at monitor 5"};
  out["k4_m12"] = {Graph::from_edges({{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}), {1, 2}, std::nullopt,
                   "complete graph on four nodes, monitors 1 and 2"};
  out["triangle_m12"] = {Graph::from_edges({{1, 2}, {1, 3}, {2, 3}}), {1, 2}, std::nullopt,
                         "triangle, monitors 1 and 2"};
  out["c4_m13"] = {Graph::from_edges({{1, 2}, {2, 3}, {3, 4}, {1, 4}}), {1, 3}, std::nullopt,
                   "four-cycle, monitors 1 and 3"};
  out["bowtie"] = {Graph::from_edges({{1, 2}, {1, 5}, {2, 5}, {3, 4}, {3, 5}, {4, 5}}), {1, 2, 3}, std::nullopt,
                   "triangles 1-2-5 and 3-4-5 sharing node 5, monitors 1, 2 and 3"};
  return out;
}

Fixture named_fixture(const std::string& name) {
  auto all = named_fixtures();
  auto it = all.find(name);
  if (it == all.end()) throw Error(ErrorCode::kNotFound, "no fixture named '" + name + "'");
  return it->second;
}

}  // namespace linkscope
