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

#include "oracles.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace oracle {

bool connected_without(const Graph& g, const std::vector<NodeId>& gone, const std::vector<Edge>& cut) {
  std::set<NodeId> alive(g.nodes().begin(), g.nodes().end());
  for (auto v : gone) alive.erase(v);
  if (alive.empty()) return true;
  std::map<NodeId, std::vector<NodeId>> adj;
  for (const auto& e : g.edges()) {
    if (!alive.count(e.u) || !alive.count(e.v)) continue;
    if (std::find(cut.begin(), cut.end(), e) != cut.end()) continue;
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  std::set<NodeId> seen{*alive.begin()};
  std::vector<NodeId> todo{*alive.begin()};
  while (!todo.empty()) {
    auto x = todo.back();
    todo.pop_back();
    for (auto y : adj[x]) {
      if (seen.insert(y).second) todo.push_back(y);
    }
  }
  return seen.size() == alive.size();
}

bool vertex_connected(const Graph& g, int k) {
  if (k <= 0) return true;
  const auto n = g.node_count();
  if (n <= static_cast<std::size_t>(k)) return false;
  std::vector<NodeId> ids(g.nodes().begin(), g.nodes().end());
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) >= k) continue;
    std::vector<NodeId> gone;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1) gone.push_back(ids[i]);
    }
    if (!connected_without(g, gone)) return false;
  }
  return true;
}

namespace {

bool edge_sets_ok(const Graph& g, std::vector<Edge>& chosen, std::size_t start, int left) {
  if (!connected_without(g, {}, chosen)) return false;
  if (left == 0) return true;
  for (std::size_t i = start; i < g.edge_count(); ++i) {
    chosen.push_back(g.edges()[i]);
    const bool ok = edge_sets_ok(g, chosen, i + 1, left - 1);
    chosen.pop_back();
    if (!ok) return false;
  }
  return true;
}

}  // namespace

bool edge_connected(const Graph& g, int k) {
  std::vector<Edge> chosen;
  return edge_sets_ok(g, chosen, 0, std::max(k - 1, 0));
}

std::vector<Edge> bridges(const Graph& g) {
  std::vector<Edge> out;
  for (const auto& e : g.edges()) {
    if (!connected_without(g, {}, {e})) out.push_back(e);
  }
  return out;
}

std::vector<NodeId> cut_vertices(const Graph& g) {
  std::vector<NodeId> out;
  for (auto v : g.nodes()) {
    if (!connected_without(g, {v})) out.push_back(v);
  }
  return out;
}

std::vector<std::vector<NodeId>> monitor_paths(const Graph& g, const std::vector<NodeId>& monitors) {
  std::vector<NodeId> mons = monitors;
  std::sort(mons.begin(), mons.end());
  std::vector<std::vector<NodeId>> out;
  for (std::size_t i = 0; i < mons.size(); ++i) {
    for (std::size_t j = i + 1; j < mons.size(); ++j) {
      std::vector<NodeId> middle;
      for (auto v : g.nodes()) {
        const bool is_monitor = std::binary_search(mons.begin(), mons.end(), v);
        if (!is_monitor) middle.push_back(v);
      }
      const auto k = middle.size();
      for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
        std::vector<NodeId> inner;
        for (std::size_t b = 0; b < k; ++b) {
          if (mask >> b & 1) inner.push_back(middle[b]);
        }
        do {
          std::vector<NodeId> p{mons[i]};
          p.insert(p.end(), inner.begin(), inner.end());
          p.push_back(mons[j]);
          bool ok = true;
          for (std::size_t s = 0; s + 1 < p.size() && ok; ++s) ok = g.has_edge(p[s], p[s + 1]);
          if (ok) out.push_back(p);
        } while (std::next_permutation(inner.begin(), inner.end()));
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t bareiss_rank(std::vector<std::vector<mpz_class>> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows[0].size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t p = rank;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[rank]);
    for (std::size_t i = rank + 1; i < rows.size(); ++i) {
      if (rows[i][c] == 0) continue;
      const mpz_class a = rows[rank][c];
      const mpz_class b = rows[i][c];
      mpz_class content = 0;
      for (std::size_t j = 0; j < cols; ++j) {
        rows[i][j] = a * rows[i][j] - b * rows[rank][j];
        content = gcd(content, rows[i][j]);
      }
      if (content > 1) {
        for (auto& x : rows[i]) x /= content;
      }
    }
    ++rank;
  }
  return rank;
}

bool unit_in_rowspace(const std::vector<std::vector<mpz_class>>& rows, std::size_t col, std::size_t cols) {
  auto extended = rows;
  std::vector<mpz_class> unit(cols, 0);
  unit[col] = 1;
  extended.push_back(unit);
  return bareiss_rank(extended) == bareiss_rank(rows);
}

namespace {

struct PieceEdge {
  NodeId u, v;
  int id;  // -1 for a real edge, otherwise the virtual edge id
};
using Piece = std::vector<PieceEdge>;

std::vector<NodeId> piece_nodes(const Piece& p) {
  std::set<NodeId> s;
  for (const auto& e : p) {
    s.insert(e.u);
    s.insert(e.v);
  }
  return {s.begin(), s.end()};
}

// Separation classes of {a, b}: edges linked through a node other than a, b.
std::vector<std::vector<std::size_t>> separation_classes(const Piece& p, NodeId a, NodeId b) {
  std::vector<std::size_t> parent(p.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::map<NodeId, std::size_t> first_edge_at;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (NodeId x : {p[i].u, p[i].v}) {
      if (x == a || x == b) continue;
      auto [it, fresh] = first_edge_at.emplace(x, i);
      if (!fresh) parent[find(i)] = find(it->second);
    }
  }
  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < p.size(); ++i) groups[find(i)].push_back(i);
  std::vector<std::vector<std::size_t>> out;
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  std::sort(out.begin(), out.end());
  return out;
}

std::string classify(const Piece& p) {
  const auto nodes = piece_nodes(p);
  if (nodes.size() == 2) return "bond";
  std::map<NodeId, int> degree;
  for (const auto& e : p) {
    ++degree[e.u];
    ++degree[e.v];
  }
  const bool cycle = p.size() == nodes.size() &&
                     std::all_of(degree.begin(), degree.end(), [](const auto& kv) { return kv.second == 2; });
  return cycle ? "polygon" : "rigid";
}

}  // namespace

std::vector<Component> split_by_separation_classes(const Graph& block) {
  std::vector<Piece> work;
  {
    Piece start;
    for (const auto& e : block.edges()) start.push_back({e.u, e.v, -1});
    work.push_back(std::move(start));
  }
  std::vector<Piece> final_pieces;
  int next_id = 0;
  while (!work.empty()) {
    Piece p = std::move(work.back());
    work.pop_back();
    const auto nodes = piece_nodes(p);
    bool split = false;
    for (std::size_t i = 0; i < nodes.size() && !split && nodes.size() > 2; ++i) {
      for (std::size_t j = i + 1; j < nodes.size() && !split; ++j) {
        const auto classes = separation_classes(p, nodes[i], nodes[j]);
        const auto k = classes.size();
        if (k < 2) continue;
        const bool has_single = std::any_of(classes.begin(), classes.end(), [](const auto& c) { return c.size() == 1; });
        const bool all_single = std::all_of(classes.begin(), classes.end(), [](const auto& c) { return c.size() == 1; });
        if (k == 2 && has_single) continue;
        if (k == 3 && all_single) continue;
        std::vector<std::size_t> side;
        if (k == 2) {
          side = classes[0];
        } else {
          auto big = std::find_if(classes.begin(), classes.end(), [](const auto& c) { return c.size() >= 2; });
          if (big != classes.end()) {
            side = *big;
          } else {
            side = {classes[0][0], classes[1][0]};
          }
        }
        const int id = next_id++;
        Piece one, two;
        std::vector<char> in_side(p.size(), 0);
        for (auto s : side) in_side[s] = 1;
        for (std::size_t e = 0; e < p.size(); ++e) (in_side[e] ? one : two).push_back(p[e]);
        one.push_back({nodes[i], nodes[j], id});
        two.push_back({nodes[i], nodes[j], id});
        work.push_back(std::move(one));
        work.push_back(std::move(two));
        split = true;
      }
    }
    if (!split) final_pieces.push_back(std::move(p));
  }

  // Merge bonds with bonds and polygons with polygons across virtual edges.
  std::vector<std::string> kinds;
  for (const auto& p : final_pieces) kinds.push_back(classify(p));
  std::vector<std::size_t> parent(final_pieces.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::map<int, std::vector<std::size_t>> holders;
  for (std::size_t i = 0; i < final_pieces.size(); ++i) {
    for (const auto& e : final_pieces[i]) {
      if (e.id >= 0) holders[e.id].push_back(i);
    }
  }
  std::set<int> dropped;
  for (const auto& [id, h] : holders) {
    if (kinds[h[0]] == kinds[h[1]] && kinds[h[0]] != "rigid") {
      parent[find(h[0])] = find(h[1]);
      dropped.insert(id);
    }
  }
  std::map<std::size_t, Component> merged;
  for (std::size_t i = 0; i < final_pieces.size(); ++i) {
    auto& c = merged[find(i)];
    c.kind = kinds[i];
    for (const auto& e : final_pieces[i]) {
      if (e.id < 0) {
        c.real_edges.push_back(Edge::of(e.u, e.v));
      } else if (!dropped.count(e.id)) {
        c.virtual_edges.push_back(Edge::of(e.u, e.v));
      }
    }
  }
  std::vector<Component> out;
  for (auto& [root, c] : merged) {
    std::set<NodeId> ns;
    for (const auto& e : c.real_edges) ns.insert({e.u, e.v});
    for (const auto& e : c.virtual_edges) ns.insert({e.u, e.v});
    c.nodes.assign(ns.begin(), ns.end());
    std::sort(c.real_edges.begin(), c.real_edges.end());
    std::sort(c.virtual_edges.begin(), c.virtual_edges.end());
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace oracle
