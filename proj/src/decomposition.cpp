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

#include "linkscope/decomposition.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <tuple>
#include <utility>

#include "linkscope/connectivity.hpp"
#include "linkscope/error.hpp"

namespace linkscope {

std::string_view to_string(ComponentKind kind) {
  switch (kind) {
    case ComponentKind::kBond: return "bond";
    case ComponentKind::kPolygon: return "polygon";
    case ComponentKind::kRigid: return "rigid";
  }
  return "unknown";
}

std::vector<BiconnectedComponent> biconnected_components(const Graph& g) {
  if (!is_connected(g)) throw Error(ErrorCode::kDisconnected, "graph is not connected");
  std::vector<BiconnectedComponent> blocks;
  const std::size_t n = g.node_count();
  if (n == 0) return blocks;
  if (n == 1) {
    blocks.push_back({{g.node_at(0)}, {}, {}});
    return blocks;
  }

  const auto cuts = cut_vertices(g);
  std::vector<int> disc(n, -1), low(n, 0), parent(n, -1);
  std::vector<std::size_t> next_child(n, 0);
  std::vector<Edge> edge_stack;
  int timer = 0;

  auto emit_block = [&](const Edge& until) {
    std::set<NodeId> ns;
    std::vector<Edge> es;
    while (!edge_stack.empty()) {
      Edge e = edge_stack.back();
      edge_stack.pop_back();
      es.push_back(e);
      ns.insert(e.u);
      ns.insert(e.v);
      if (e == until) break;
    }
    std::sort(es.begin(), es.end());
    BiconnectedComponent b;
    b.nodes.assign(ns.begin(), ns.end());
    b.edges = std::move(es);
    for (auto c : cuts) {
      if (ns.count(c)) b.cut_vertices.push_back(c);
    }
    blocks.push_back(std::move(b));
  };

  std::vector<std::size_t> stack{0};
  disc[0] = low[0] = timer++;
  while (!stack.empty()) {
    const std::size_t x = stack.back();
    auto adj = g.adjacent(x);
    if (next_child[x] < adj.size()) {
      const std::size_t y = adj[next_child[x]++];
      if (disc[y] == -1) {
        parent[y] = static_cast<int>(x);
        disc[y] = low[y] = timer++;
        edge_stack.push_back(Edge::of(g.node_at(x), g.node_at(y)));
        stack.push_back(y);
      } else if (static_cast<int>(y) != parent[x] && disc[y] < disc[x]) {
        low[x] = std::min(low[x], disc[y]);
        edge_stack.push_back(Edge::of(g.node_at(x), g.node_at(y)));
      }
      continue;
    }
    stack.pop_back();
    if (parent[x] >= 0) {
      const auto p = static_cast<std::size_t>(parent[x]);
      low[p] = std::min(low[p], low[x]);
      if (low[x] >= disc[p]) emit_block(Edge::of(g.node_at(p), g.node_at(x)));
    }
  }

  std::sort(blocks.begin(), blocks.end(), [](const auto& a, const auto& b) {
    return std::tie(a.nodes, a.edges) < std::tie(b.nodes, b.edges);
  });
  return blocks;
}

namespace {

struct SplitEdge {
  Edge ends;
  bool is_virtual = false;
  int id = 0;  // virtual edge id, shared by the two sides of a split
};

using Piece = std::vector<SplitEdge>;

struct FinalPiece {
  ComponentKind kind;
  Piece edges;
};

// Searches for a 2-cut {a, b} of a simple biconnected graph: b is an
// articulation point of g - a.
std::optional<std::pair<std::size_t, std::size_t>> find_two_cut(const Graph& g) {
  std::vector<char> removed(g.node_count(), 0);
  for (std::size_t a = 0; a < g.node_count(); ++a) {
    removed[a] = 1;
    auto arts = articulation_indices(g, removed);
    removed[a] = 0;
    if (!arts.empty()) return std::make_pair(a, arts.front());
  }
  return std::nullopt;
}

std::vector<FinalPiece> split_into_pieces(const Graph& block) {
  std::vector<FinalPiece> done;
  std::vector<Piece> work;
  int next_virtual = 0;
  {
    Piece start;
    for (const auto& e : block.edges()) start.push_back({e, false, -1});
    work.push_back(std::move(start));
  }

  while (!work.empty()) {
    Piece piece = std::move(work.back());
    work.pop_back();

    // Step 1: bundle parallel edges into a bond.
    std::map<Edge, std::vector<std::size_t>> by_pair;
    for (std::size_t i = 0; i < piece.size(); ++i) by_pair[piece[i].ends].push_back(i);
    if (by_pair.size() == 1) {
      done.push_back({ComponentKind::kBond, std::move(piece)});
      continue;
    }
    auto multi = std::find_if(by_pair.begin(), by_pair.end(), [](const auto& kv) { return kv.second.size() > 1; });
    if (multi != by_pair.end()) {
      const int vid = next_virtual++;
      Piece bond, rest;
      std::vector<char> in_bundle(piece.size(), 0);
      for (auto i : multi->second) in_bundle[i] = 1;
      for (std::size_t i = 0; i < piece.size(); ++i) (in_bundle[i] ? bond : rest).push_back(piece[i]);
      bond.push_back({multi->first, true, vid});
      rest.push_back({multi->first, true, vid});
      work.push_back(std::move(bond));
      work.push_back(std::move(rest));
      continue;
    }

    // Step 2: simple piece; split at a 2-cut if one exists.
    std::vector<Edge> simple;
    for (const auto& se : piece) simple.push_back(se.ends);
    Graph g = Graph::from_edges(simple);
    if (g.node_count() == 3) {
      done.push_back({ComponentKind::kPolygon, std::move(piece)});
      continue;
    }
    auto cut = find_two_cut(g);
    if (!cut) {
      done.push_back({ComponentKind::kRigid, std::move(piece)});
      continue;
    }
    std::vector<char> removed(g.node_count(), 0);
    removed[cut->first] = removed[cut->second] = 1;
    auto labels = component_labels(g, removed);
    int first_label = -1;
    for (std::size_t i = 0; i < g.node_count() && first_label < 0; ++i) first_label = labels.label[i];
    auto in_first = [&](NodeId v) { return labels.label[*g.index_of(v)] == first_label; };

    const int vid = next_virtual++;
    const Edge pair = Edge::of(g.node_at(cut->first), g.node_at(cut->second));
    Piece side, rest;
    for (const auto& se : piece) {
      (in_first(se.ends.u) || in_first(se.ends.v) ? side : rest).push_back(se);
    }
    side.push_back({pair, true, vid});
    rest.push_back({pair, true, vid});
    work.push_back(std::move(side));
    work.push_back(std::move(rest));
  }
  return done;
}

std::vector<TriconnectedComponent> merge_pieces(std::vector<FinalPiece> pieces) {
  std::vector<std::size_t> parent(pieces.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };

  std::map<int, std::vector<std::size_t>> owners;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    for (const auto& se : pieces[i].edges) {
      if (se.is_virtual) owners[se.id].push_back(i);
    }
  }
  std::set<int> dissolved;
  for (const auto& [vid, who] : owners) {
    const auto a = who.at(0);
    const auto b = who.at(1);
    if (pieces[a].kind == pieces[b].kind && pieces[a].kind != ComponentKind::kRigid) {
      parent[find(a)] = find(b);
      dissolved.insert(vid);
    }
  }

  std::map<std::size_t, FinalPiece> merged;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    auto& slot = merged.try_emplace(find(i), FinalPiece{pieces[i].kind, {}}).first->second;
    for (const auto& se : pieces[i].edges) {
      if (!(se.is_virtual && dissolved.count(se.id))) slot.edges.push_back(se);
    }
  }

  std::vector<TriconnectedComponent> out;
  for (auto& [root, piece] : merged) {
    TriconnectedComponent t;
    t.kind = piece.kind;
    std::set<NodeId> ns;
    for (const auto& se : piece.edges) {
      ns.insert(se.ends.u);
      ns.insert(se.ends.v);
      (se.is_virtual ? t.virtual_edges : t.real_edges).push_back(se.ends);
    }
    t.nodes.assign(ns.begin(), ns.end());
    std::sort(t.real_edges.begin(), t.real_edges.end());
    std::sort(t.virtual_edges.begin(), t.virtual_edges.end());
    out.push_back(std::move(t));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return std::tie(a.nodes, a.kind, a.real_edges, a.virtual_edges) <
           std::tie(b.nodes, b.kind, b.real_edges, b.virtual_edges);
  });
  return out;
}

}  // namespace

std::vector<TriconnectedComponent> split_components(const Graph& block) {
  if (block.node_count() < 3 || !is_k_vertex_connected(block, 2)) {
    throw Error(ErrorCode::kPrecondition, "split needs a biconnected graph with at least three nodes");
  }
  auto out = merge_pieces(split_into_pieces(block));
  for (auto& t : out) {
    std::set<NodeId> sep;
    for (const auto& e : t.virtual_edges) {
      sep.insert(e.u);
      sep.insert(e.v);
    }
    t.separation_vertices.assign(sep.begin(), sep.end());
  }
  return out;
}

std::vector<NodeId> separation_vertices(const TriconnectedComponent& t, const Graph& g) {
  std::set<NodeId> sep;
  for (const auto& e : t.virtual_edges) {
    sep.insert(e.u);
    sep.insert(e.v);
  }
  for (auto c : cut_vertices(g)) {
    if (std::binary_search(t.nodes.begin(), t.nodes.end(), c)) sep.insert(c);
  }
  return {sep.begin(), sep.end()};
}

std::vector<TriconnectedComponent> triconnected_components(const BiconnectedComponent& b, const Graph& g) {
  if (b.nodes.size() < 3) throw Error(ErrorCode::kPrecondition, "block has fewer than three nodes");
  for (const auto& e : b.edges) {
    if (!g.has_edge(e)) throw Error(ErrorCode::kPrecondition, "block edge " + to_string(e) + " not in graph");
  }
  auto out = split_components(b.as_graph());
  const auto cuts = cut_vertices(g);
  for (auto& t : out) {
    std::set<NodeId> sep(t.separation_vertices.begin(), t.separation_vertices.end());
    for (auto c : cuts) {
      if (std::binary_search(t.nodes.begin(), t.nodes.end(), c)) sep.insert(c);
    }
    t.separation_vertices.assign(sep.begin(), sep.end());
  }
  return out;
}

}  // namespace linkscope
