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

#include "linkscope/graph.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <set>
#include <sstream>

#include "linkscope/error.hpp"

namespace linkscope {

std::string to_string(const Edge& e) {
  return std::to_string(e.u) + "-" + std::to_string(e.v);
}

namespace {

std::optional<NodeId> parse_id(std::string_view s) {
  if (s.empty()) return std::nullopt;
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  if (value > std::numeric_limits<NodeId>::max()) return std::nullopt;
  return static_cast<NodeId>(value);
}

std::string_view trim(std::string_view s) {
  const auto* ws = " \t\r\n";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split_tokens(std::string_view s, std::string_view seps) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && seps.find(s[i]) != std::string_view::npos) ++i;
    std::size_t j = i;
    while (j < s.size() && seps.find(s[j]) == std::string_view::npos) ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace

std::optional<Edge> parse_edge(std::string_view text) {
  auto dash = text.find('-');
  if (dash == std::string_view::npos) return std::nullopt;
  auto a = parse_id(trim(text.substr(0, dash)));
  auto b = parse_id(trim(text.substr(dash + 1)));
  if (!a || !b || *a == *b) return std::nullopt;
  return Edge::of(*a, *b);
}

Graph::Graph(std::vector<NodeId> nodes, std::vector<Edge> edges)
    : nodes_(std::move(nodes)), edges_(std::move(edges)) {
  std::sort(nodes_.begin(), nodes_.end());
  if (std::adjacent_find(nodes_.begin(), nodes_.end()) != nodes_.end()) {
    throw Error(ErrorCode::kDuplicate, "duplicate node id");
  }
  for (auto& e : edges_) {
    if (e.u == e.v) {
      throw Error(ErrorCode::kSelfLoop, "self-loop at node " + std::to_string(e.u));
    }
    e = Edge::of(e.u, e.v);
  }
  std::sort(edges_.begin(), edges_.end());
  if (auto it = std::adjacent_find(edges_.begin(), edges_.end()); it != edges_.end()) {
    throw Error(ErrorCode::kDuplicate, "duplicate edge " + to_string(*it));
  }
  adj_.assign(nodes_.size(), {});
  for (const auto& e : edges_) {
    auto iu = index_of(e.u);
    auto iv = index_of(e.v);
    if (!iu || !iv) {
      throw Error(ErrorCode::kMissingEndpoint, "edge " + to_string(e) + " has an endpoint outside the node set");
    }
    adj_[*iu].push_back(static_cast<std::uint32_t>(*iv));
    adj_[*iv].push_back(static_cast<std::uint32_t>(*iu));
  }
  for (auto& a : adj_) std::sort(a.begin(), a.end());
}

Graph Graph::from_edges(std::initializer_list<std::pair<NodeId, NodeId>> edges) {
  std::vector<Edge> es;
  for (auto [a, b] : edges) es.push_back(Edge{a, b});
  return from_edges(es);
}

Graph Graph::from_edges(const std::vector<Edge>& edges) {
  std::set<NodeId> ns;
  for (const auto& e : edges) {
    ns.insert(e.u);
    ns.insert(e.v);
  }
  return Graph(std::vector<NodeId>(ns.begin(), ns.end()), edges);
}

std::optional<std::size_t> Graph::index_of(NodeId v) const {
  auto it = std::lower_bound(nodes_.begin(), nodes_.end(), v);
  if (it == nodes_.end() || *it != v) return std::nullopt;
  return static_cast<std::size_t>(it - nodes_.begin());
}

std::size_t Graph::index(NodeId v) const {
  auto i = index_of(v);
  if (!i) throw Error(ErrorCode::kNotFound, "node " + std::to_string(v) + " not in graph");
  return *i;
}

bool Graph::has_edge(NodeId a, NodeId b) const {
  if (a == b) return false;
  return std::binary_search(edges_.begin(), edges_.end(), Edge::of(a, b));
}

std::vector<NodeId> Graph::neighbors(NodeId v) const {
  std::vector<NodeId> out;
  for (auto j : adj_[index(v)]) out.push_back(nodes_[j]);
  return out;
}

Graph remove_edge(const Graph& g, const Edge& e) {
  auto key = Edge::of(e.u, e.v);
  if (!g.has_edge(key)) throw Error(ErrorCode::kNotFound, "edge " + to_string(key) + " not in graph");
  std::vector<Edge> edges;
  edges.reserve(g.edge_count() - 1);
  for (const auto& f : g.edges()) {
    if (f != key) edges.push_back(f);
  }
  return Graph({g.nodes().begin(), g.nodes().end()}, std::move(edges));
}

Graph add_edge(const Graph& g, NodeId u, NodeId v) {
  if (u == v) throw Error(ErrorCode::kSelfLoop, "self-loop at node " + std::to_string(u));
  if (!g.has_node(u) || !g.has_node(v)) {
    throw Error(ErrorCode::kMissingEndpoint, "endpoint of " + to_string(Edge::of(u, v)) + " not in graph");
  }
  if (g.has_edge(u, v)) throw Error(ErrorCode::kDuplicate, "edge " + to_string(Edge::of(u, v)) + " already present");
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  edges.push_back(Edge::of(u, v));
  return Graph({g.nodes().begin(), g.nodes().end()}, std::move(edges));
}

Graph remove_node(const Graph& g, NodeId v) {
  if (!g.has_node(v)) throw Error(ErrorCode::kNotFound, "node " + std::to_string(v) + " not in graph");
  NodeId single[] = {v};
  return remove_nodes(g, single);
}

Graph add_node(const Graph& g, NodeId v) {
  if (g.has_node(v)) throw Error(ErrorCode::kDuplicate, "node " + std::to_string(v) + " already present");
  std::vector<NodeId> nodes(g.nodes().begin(), g.nodes().end());
  nodes.push_back(v);
  return Graph(std::move(nodes), {g.edges().begin(), g.edges().end()});
}

Graph remove_nodes(const Graph& g, std::span<const NodeId> vs) {
  std::vector<char> gone(g.node_count(), 0);
  for (auto v : vs) gone[g.index(v)] = 1;
  std::vector<NodeId> nodes;
  for (std::size_t i = 0; i < g.node_count(); ++i) {
    if (!gone[i]) nodes.push_back(g.node_at(i));
  }
  std::vector<Edge> edges;
  for (const auto& e : g.edges()) {
    if (!gone[*g.index_of(e.u)] && !gone[*g.index_of(e.v)]) edges.push_back(e);
  }
  return Graph(std::move(nodes), std::move(edges));
}

Graph induced_subgraph(const Graph& g, std::span<const NodeId> keep) {
  std::vector<char> in(g.node_count(), 0);
  for (auto v : keep) in[g.index(v)] = 1;
  std::vector<NodeId> nodes;
  for (std::size_t i = 0; i < g.node_count(); ++i) {
    if (in[i]) nodes.push_back(g.node_at(i));
  }
  std::vector<Edge> edges;
  for (const auto& e : g.edges()) {
    if (in[*g.index_of(e.u)] && in[*g.index_of(e.v)]) edges.push_back(e);
  }
  return Graph(std::move(nodes), std::move(edges));
}

ComponentLabels component_labels(const Graph& g, std::span<const char> removed) {
  const std::size_t n = g.node_count();
  ComponentLabels out;
  out.label.assign(n, -1);
  std::vector<std::uint32_t> stack;
  for (std::size_t s = 0; s < n; ++s) {
    if (out.label[s] != -1 || (!removed.empty() && removed[s])) continue;
    const int id = out.count++;
    out.label[s] = id;
    stack.push_back(static_cast<std::uint32_t>(s));
    while (!stack.empty()) {
      auto x = stack.back();
      stack.pop_back();
      for (auto y : g.adjacent(x)) {
        if (out.label[y] == -1 && (removed.empty() || !removed[y])) {
          out.label[y] = id;
          stack.push_back(y);
        }
      }
    }
  }
  return out;
}

bool is_connected(const Graph& g) { return component_labels(g).count <= 1; }

bool is_connected_without(const Graph& g, std::span<const char> removed) {
  return component_labels(g, removed).count <= 1;
}

bool SimplePath::contains(NodeId v) const {
  return std::find(nodes.begin(), nodes.end(), v) != nodes.end();
}

std::vector<Edge> SimplePath::edges() const {
  std::vector<Edge> out;
  for (std::size_t i = 1; i < nodes.size(); ++i) out.push_back(Edge::of(nodes[i - 1], nodes[i]));
  return out;
}

bool is_simple_path(const Graph& g, std::span<const NodeId> nodes) {
  if (nodes.empty()) return false;
  std::set<NodeId> seen;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (!g.has_node(nodes[i]) || !seen.insert(nodes[i]).second) return false;
    if (i > 0 && !g.has_edge(nodes[i - 1], nodes[i])) return false;
  }
  return true;
}

SimplePath make_path(const Graph& g, std::vector<NodeId> nodes) {
  if (!is_simple_path(g, nodes)) throw Error(ErrorCode::kInvalidPath, "not a simple path of the graph");
  return SimplePath{std::move(nodes)};
}

bool Cycle::contains(NodeId v) const {
  return std::find(nodes.begin(), nodes.end(), v) != nodes.end();
}

bool Cycle::contains(const Edge& e) const {
  const std::size_t k = nodes.size();
  for (std::size_t i = 0; i < k; ++i) {
    if (Edge::of(nodes[i], nodes[(i + 1) % k]) == e) return true;
  }
  return false;
}

std::vector<Edge> Cycle::edges() const {
  std::vector<Edge> out;
  const std::size_t k = nodes.size();
  for (std::size_t i = 0; i < k; ++i) out.push_back(Edge::of(nodes[i], nodes[(i + 1) % k]));
  return out;
}

std::vector<NodeId> canonical_cycle_order(std::vector<NodeId> nodes) {
  if (nodes.size() < 3) return nodes;
  auto mn = std::min_element(nodes.begin(), nodes.end());
  std::rotate(nodes.begin(), mn, nodes.end());
  if (nodes[1] > nodes.back()) std::reverse(nodes.begin() + 1, nodes.end());
  return nodes;
}

bool is_cycle(const Graph& g, std::span<const NodeId> nodes) {
  if (nodes.size() < 3 || !is_simple_path(g, nodes)) return false;
  return g.has_edge(nodes.back(), nodes.front());
}

Cycle make_cycle(const Graph& g, std::vector<NodeId> nodes) {
  if (!is_cycle(g, nodes)) throw Error(ErrorCode::kInvalidCycle, "not a cycle of the graph");
  return Cycle{canonical_cycle_order(std::move(nodes))};
}

bool induced_check(const Graph& g, const Cycle& c) {
  if (!is_cycle(g, c.nodes)) throw Error(ErrorCode::kInvalidCycle, "not a cycle of the graph");
  const std::size_t k = c.nodes.size();
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 2; j < k; ++j) {
      if (i == 0 && j == k - 1) continue;
      if (g.has_edge(c.nodes[i], c.nodes[j])) return false;
    }
  }
  return true;
}

Graph parse_graph(std::string_view text) {
  std::optional<std::vector<NodeId>> declared;
  std::vector<Edge> edges;
  std::set<Edge> seen;
  std::set<NodeId> endpoints;
  std::size_t line_no = 0;
  bool any_edge = false;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;

    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    if (line.starts_with("nodes:")) {
      if (declared || any_edge) {
        throw ParseError(ParseError::Reason::kMalformed, line_no, "header must precede edges and appear once");
      }
      auto body = trim(line.substr(6));
      std::vector<NodeId> ids;
      if (body.starts_with("{")) {
        if (!body.ends_with("}")) throw ParseError(ParseError::Reason::kMalformed, line_no, "unterminated node list");
        for (auto tok : split_tokens(body.substr(1, body.size() - 2), ", \t")) {
          auto id = parse_id(tok);
          if (!id) throw ParseError(ParseError::Reason::kMalformed, line_no, std::string(tok));
          ids.push_back(*id);
        }
        std::sort(ids.begin(), ids.end());
        if (std::adjacent_find(ids.begin(), ids.end()) != ids.end()) {
          throw ParseError(ParseError::Reason::kMalformed, line_no, "repeated node id in header");
        }
      } else {
        auto count = parse_id(body);
        if (!count) throw ParseError(ParseError::Reason::kMalformed, line_no, std::string(body));
        for (NodeId i = 1; i <= *count; ++i) ids.push_back(i);
      }
      declared = std::move(ids);
      continue;
    }

    auto toks = split_tokens(line, " \t");
    if (toks.size() != 2) throw ParseError(ParseError::Reason::kMalformed, line_no, std::string(line));
    auto a = parse_id(toks[0]);
    auto b = parse_id(toks[1]);
    if (!a || !b) throw ParseError(ParseError::Reason::kMalformed, line_no, std::string(line));
    if (*a == *b) throw ParseError(ParseError::Reason::kSelfLoop, line_no, std::string(line));
    auto e = Edge::of(*a, *b);
    if (!seen.insert(e).second) throw ParseError(ParseError::Reason::kDuplicateEdge, line_no, to_string(e));
    if (declared && (!std::binary_search(declared->begin(), declared->end(), e.u) ||
                     !std::binary_search(declared->begin(), declared->end(), e.v))) {
      throw ParseError(ParseError::Reason::kUnknownNode, line_no, to_string(e));
    }
    endpoints.insert(e.u);
    endpoints.insert(e.v);
    edges.push_back(e);
    any_edge = true;
  }

  std::vector<NodeId> nodes = declared ? *declared : std::vector<NodeId>(endpoints.begin(), endpoints.end());
  return Graph(std::move(nodes), std::move(edges));
}

std::string serialize(const Graph& g) {
  std::ostringstream out;
  std::set<NodeId> endpoints;
  for (const auto& e : g.edges()) {
    endpoints.insert(e.u);
    endpoints.insert(e.v);
  }
  if (endpoints.size() != g.node_count()) {
    bool one_based = true;
    for (std::size_t i = 0; i < g.node_count(); ++i) {
      if (g.node_at(i) != i + 1) one_based = false;
    }
    if (one_based) {
      out << "nodes: " << g.node_count() << "\n";
    } else {
      out << "nodes: {";
      for (std::size_t i = 0; i < g.node_count(); ++i) out << (i ? ", " : "") << g.node_at(i);
      out << "}\n";
    }
  }
  for (const auto& e : g.edges()) out << e.u << " " << e.v << "\n";
  return out.str();
}

}  // namespace linkscope
