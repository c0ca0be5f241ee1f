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

#include "linkscope/witness.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

#include "linkscope/error.hpp"

namespace linkscope {

namespace {

using Mask = std::vector<char>;

void guard_size(const Graph& g) {
  if (g.node_count() > kWitnessNodeLimit) {
    throw Error(ErrorCode::kTooLarge, "witness search is limited to " + std::to_string(kWitnessNodeLimit) +
                                          " nodes, graph has " + std::to_string(g.node_count()));
  }
}

void require_two(const MonitorSet& m) {
  if (m.size() != 2) throw Error(ErrorCode::kPrecondition, "witness search needs exactly two monitors");
}

Mask mask_of(const Graph& g, std::span<const NodeId> ids) {
  Mask out(g.node_count(), 0);
  for (auto v : ids) out[g.index(v)] = 1;
  return out;
}

template <typename Seq>
bool shortlex_less(const Seq& a, const Seq& b) {
  if (a.nodes.size() != b.nodes.size()) return a.nodes.size() < b.nodes.size();
  return a.nodes < b.nodes;
}

// Simple paths from `from` that avoid blocked nodes and stop at the first
// target node they reach. Sorted by length, then node sequence.
std::vector<SimplePath> attach_paths(const Graph& g, std::size_t from, Mask blocked, const Mask& target) {
  std::vector<SimplePath> out;
  if (blocked[from]) return out;
  if (target[from]) {
    out.push_back(SimplePath{{g.node_at(from)}});
    return out;
  }
  std::vector<NodeId> trail;
  auto dfs = [&](auto&& self, std::size_t x) -> void {
    trail.push_back(g.node_at(x));
    if (target[x]) {
      out.push_back(SimplePath{trail});
    } else {
      blocked[x] = 1;
      for (auto y : g.adjacent(x)) {
        if (!blocked[y]) self(self, y);
      }
      blocked[x] = 0;
    }
    trail.pop_back();
  };
  dfs(dfs, from);
  std::sort(out.begin(), out.end(), shortlex_less<SimplePath>);
  return out;
}

// Breadth-first counterpart returning one shortest such path.
std::optional<SimplePath> shortest_attach(const Graph& g, std::size_t from, const Mask& blocked, const Mask& target) {
  if (blocked[from]) return std::nullopt;
  std::vector<long> via(g.node_count(), -2);
  std::deque<std::size_t> queue{from};
  via[from] = -1;
  while (!queue.empty()) {
    const auto x = queue.front();
    queue.pop_front();
    if (target[x]) {
      SimplePath p;
      for (long y = static_cast<long>(x); y != -1; y = via[y]) p.nodes.push_back(g.node_at(y));
      std::reverse(p.nodes.begin(), p.nodes.end());
      return p;
    }
    for (auto y : g.adjacent(x)) {
      if (blocked[y] || via[y] != -2) continue;
      via[y] = static_cast<long>(x);
      queue.push_back(y);
    }
  }
  return std::nullopt;
}

std::size_t common_nodes(const Cycle& a, const Cycle& b) {
  std::size_t n = 0;
  for (auto v : a.nodes) n += b.contains(v) ? 1 : 0;
  return n;
}

std::vector<std::pair<NodeId, NodeId>> assignments(const MonitorSet& m) {
  return {{m[0], m[1]}, {m[1], m[0]}};
}

void require_edge(const Graph& g, const Edge& vw) {
  if (!g.has_edge(vw)) throw Error(ErrorCode::kNotFound, to_string(vw) + " is not a link of the graph");
}

void require_interior(const Graph& g, const Edge& vw, const MonitorSet& m) {
  require_edge(g, vw);
  if (m.contains(vw.u) || m.contains(vw.v)) {
    throw Error(ErrorCode::kNotInterior, to_string(vw) + " touches a monitor");
  }
}

bool disjoint(const SimplePath& a, const SimplePath& b) {
  return std::none_of(a.nodes.begin(), a.nodes.end(), [&](NodeId x) { return b.contains(x); });
}

}  // namespace

std::vector<Cycle> all_cycles(const Graph& g) {
  guard_size(g);
  std::vector<Cycle> out;
  const std::size_t n = g.node_count();
  Mask on_path(n, 0);
  std::vector<std::size_t> trail;
  for (std::size_t s = 0; s < n; ++s) {
    auto dfs = [&](auto&& self, std::size_t x) -> void {
      trail.push_back(x);
      on_path[x] = 1;
      for (auto y : g.adjacent(x)) {
        if (y == s && trail.size() >= 3 && trail[1] < trail.back()) {
          Cycle c;
          for (auto i : trail) c.nodes.push_back(g.node_at(i));
          out.push_back(std::move(c));
        } else if (y > s && !on_path[y]) {
          self(self, y);
        }
      }
      on_path[x] = 0;
      trail.pop_back();
    };
    dfs(dfs, s);
  }
  std::sort(out.begin(), out.end(), shortlex_less<Cycle>);
  return out;
}

std::vector<Cycle> cycles_through(const Graph& g, const Edge& vw, std::span<const char> avoid) {
  guard_size(g);
  require_edge(g, vw);
  const auto v = g.index(vw.u);
  const auto w = g.index(vw.v);
  std::vector<Cycle> out;
  if (!avoid.empty() && (avoid[v] || avoid[w])) return out;
  Mask blocked(g.node_count(), 0);
  if (!avoid.empty()) std::copy(avoid.begin(), avoid.end(), blocked.begin());
  std::vector<NodeId> trail;
  auto dfs = [&](auto&& self, std::size_t x) -> void {
    trail.push_back(g.node_at(x));
    blocked[x] = 1;
    for (auto y : g.adjacent(x)) {
      if (y == v) {
        if (trail.size() >= 2) {
          auto nodes = trail;
          nodes.push_back(g.node_at(v));
          out.push_back(Cycle{canonical_cycle_order(std::move(nodes))});
        }
      } else if (!blocked[y]) {
        self(self, y);
      }
    }
    blocked[x] = 0;
    trail.pop_back();
  };
  dfs(dfs, w);
  std::sort(out.begin(), out.end(), shortlex_less<Cycle>);
  return out;
}

bool is_nonseparating_cycle(const Graph& g, const Cycle& c, const MonitorSet& m) {
  guard_size(g);
  if (!is_cycle(g, c.nodes)) throw Error(ErrorCode::kInvalidCycle, "not a cycle of the graph");
  if (!induced_check(g, c)) return false;
  const Mask removed = mask_of(g, c.nodes);
  const auto labels = component_labels(g, removed);
  std::vector<char> reaches(labels.count, 0);
  for (auto mon : m.ids()) {
    const auto i = g.index(mon);
    if (!removed[i]) reaches[labels.label[i]] = 1;
  }
  return std::all_of(reaches.begin(), reaches.end(), [](char r) { return r != 0; });
}

std::vector<Cycle> nonseparating_cycles(const Graph& g, const MonitorSet& m) {
  std::vector<Cycle> out;
  for (auto& c : all_cycles(g)) {
    if (is_nonseparating_cycle(g, c, m)) out.push_back(std::move(c));
  }
  return out;
}

std::optional<Cycle> find_nonseparating_cycle(const Graph& g, const Edge& vw, const MonitorSet& m,
                                              bool exclude_monitors) {
  guard_size(g);
  Mask avoid;
  if (exclude_monitors) avoid = mask_of(g, m.ids());
  for (auto& c : cycles_through(g, vw, avoid)) {
    if (is_nonseparating_cycle(g, c, m)) return std::move(c);
  }
  return std::nullopt;
}

std::optional<Lemma3Witness> find_lemma3_witness(const Graph& g, const Edge& vw, const MonitorSet& m) {
  guard_size(g);
  require_two(m);
  require_interior(g, vw, m);
  const auto v = g.index(vw.u);
  const auto w = g.index(vw.v);
  const auto through = cycles_through(g, vw);

  for (const auto& f : through) {
    if (!is_nonseparating_cycle(g, f, m)) continue;
    Mask f_targets = mask_of(g, f.nodes);
    f_targets[v] = f_targets[w] = 0;
    for (const auto& c : through) {
      if (common_nodes(f, c) > 3) continue;
      Mask c_targets = mask_of(g, c.nodes);
      c_targets[v] = c_targets[w] = 0;
      for (const auto& [first, second] : assignments(m)) {
        Mask p1_blocked(g.node_count(), 0);
        p1_blocked[v] = p1_blocked[w] = 1;
        p1_blocked[g.index(second)] = 1;
        for (auto& p1 : attach_paths(g, g.index(first), p1_blocked, f_targets)) {
          Mask p2_blocked(g.node_count(), 0);
          p2_blocked[v] = p2_blocked[w] = 1;
          for (auto x : p1.nodes) p2_blocked[g.index(x)] = 1;
          if (auto p2 = shortest_attach(g, g.index(second), p2_blocked, c_targets)) {
            Lemma3Witness out{f, c, std::move(p1), std::move(*p2)};
            if (!is_valid_lemma3_witness(g, vw, m, out)) {
              throw std::logic_error("constructed witness failed its own check");
            }
            return out;
          }
        }
      }
    }
  }
  return std::nullopt;
}

bool is_case_a_on_cycle(const Graph& g, const Cycle& f, const Edge& vw, const MonitorSet& m) {
  guard_size(g);
  require_two(m);
  const auto v = g.index(vw.u);
  const auto w = g.index(vw.v);
  Mask f_targets = mask_of(g, f.nodes);
  f_targets[v] = f_targets[w] = 0;
  for (const auto& c : cycles_through(g, vw)) {
    if (common_nodes(f, c) != 2) continue;
    const Mask on_c = mask_of(g, c.nodes);
    Mask c_targets = on_c;
    c_targets[v] = c_targets[w] = 0;
    for (const auto& [first, second] : assignments(m)) {
      Mask p1_blocked = on_c;
      p1_blocked[g.index(second)] = 1;
      for (const auto& p1 : attach_paths(g, g.index(first), p1_blocked, f_targets)) {
        Mask p2_blocked(g.node_count(), 0);
        p2_blocked[v] = p2_blocked[w] = 1;
        for (auto x : p1.nodes) p2_blocked[g.index(x)] = 1;
        if (shortest_attach(g, g.index(second), p2_blocked, c_targets)) return true;
      }
    }
  }
  return false;
}

std::vector<Edge> caseB_links_on_cycle(const Graph& g, const Cycle& f, const MonitorSet& m) {
  guard_size(g);
  require_two(m);
  if (!is_nonseparating_cycle(g, f, m)) throw Error(ErrorCode::kPrecondition, "cycle is not non-separating");
  std::vector<Edge> out;
  for (const auto& e : f.edges()) {
    if (m.contains(e.u) || m.contains(e.v)) continue;
    if (!is_case_a_on_cycle(g, f, e, m)) out.push_back(e);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t count_caseB_on_cycle(const Graph& g, const Cycle& f, const MonitorSet& m) {
  return caseB_links_on_cycle(g, f, m).size();
}

std::optional<Lemma4Witness> find_lemma4_witness(const Graph& g, const Edge& vw, const MonitorSet& m) {
  guard_size(g);
  require_two(m);
  require_interior(g, vw, m);
  const auto v = g.index(vw.u);
  const auto w = g.index(vw.v);
  for (const auto& f : cycles_through(g, vw, mask_of(g, m.ids()))) {
    if (!is_nonseparating_cycle(g, f, m)) continue;
    const Mask on_f = mask_of(g, f.nodes);
    Mask only_v(g.node_count(), 0), only_w(g.node_count(), 0);
    only_v[v] = 1;
    only_w[w] = 1;
    for (const auto& [first, second] : assignments(m)) {
      Mask a_blocked = on_f;
      a_blocked[v] = 0;
      a_blocked[g.index(second)] = 1;
      for (auto& to_v : attach_paths(g, g.index(first), a_blocked, only_v)) {
        Mask b_blocked = on_f;
        b_blocked[w] = 0;
        for (auto x : to_v.nodes) b_blocked[g.index(x)] = 1;
        if (auto to_w = shortest_attach(g, g.index(second), b_blocked, only_w)) {
          Lemma4Witness out{f, std::move(to_v), std::move(*to_w)};
          if (!is_valid_lemma4_witness(g, vw, m, out)) {
            throw std::logic_error("constructed witness failed its own check");
          }
          return out;
        }
      }
    }
  }
  return std::nullopt;
}

bool is_valid_lemma3_witness(const Graph& g, const Edge& vw, const MonitorSet& m, const Lemma3Witness& x) {
  if (m.size() != 2) return false;
  if (!is_cycle(g, x.f.nodes) || !is_cycle(g, x.c.nodes)) return false;
  if (!x.f.contains(vw) || !x.c.contains(vw)) return false;
  if (!is_nonseparating_cycle(g, x.f, m)) return false;
  if (common_nodes(x.f, x.c) > 3) return false;
  if (!is_simple_path(g, x.p1.nodes) || !is_simple_path(g, x.p2.nodes)) return false;
  const std::set<NodeId> starts{x.p1.front(), x.p2.front()};
  if (starts != std::set<NodeId>{m[0], m[1]}) return false;
  if (!disjoint(x.p1, x.p2)) return false;
  for (const auto* p : {&x.p1, &x.p2}) {
    if (p->contains(vw.u) || p->contains(vw.v)) return false;
  }
  auto hits = [](const SimplePath& p, const Cycle& c) {
    return std::count_if(p.nodes.begin(), p.nodes.end(), [&](NodeId y) { return c.contains(y); });
  };
  if (hits(x.p1, x.f) != 1 || !x.f.contains(x.p1.back())) return false;
  if (hits(x.p2, x.c) != 1 || !x.c.contains(x.p2.back())) return false;
  return true;
}

bool is_valid_lemma4_witness(const Graph& g, const Edge& vw, const MonitorSet& m, const Lemma4Witness& x) {
  if (m.size() != 2) return false;
  if (!is_cycle(g, x.f.nodes) || !x.f.contains(vw)) return false;
  if (!is_nonseparating_cycle(g, x.f, m)) return false;
  if (x.f.contains(m[0]) || x.f.contains(m[1])) return false;
  if (!is_simple_path(g, x.to_v.nodes) || !is_simple_path(g, x.to_w.nodes)) return false;
  const std::set<NodeId> starts{x.to_v.front(), x.to_w.front()};
  if (starts != std::set<NodeId>{m[0], m[1]}) return false;
  if (x.to_v.back() != vw.u || x.to_w.back() != vw.v) return false;
  if (!disjoint(x.to_v, x.to_w)) return false;
  for (std::size_t i = 0; i + 1 < x.to_v.nodes.size(); ++i) {
    if (x.f.contains(x.to_v.nodes[i])) return false;
  }
  for (std::size_t i = 0; i + 1 < x.to_w.nodes.size(); ++i) {
    if (x.f.contains(x.to_w.nodes[i])) return false;
  }
  return true;
}

}  // namespace linkscope
