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

#include "linkscope/placement.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "linkscope/connectivity.hpp"
#include "linkscope/decomposition.hpp"
#include "linkscope/error.hpp"
#include "linkscope/tomography.hpp"

namespace linkscope {

namespace {

class Picker {
 public:
  explicit Picker(const TieBreakPolicy& policy) : policy_(policy), rng_(policy.seed()) {}

  // `candidates` ascending. Returns `count` of them, ascending.
  std::vector<NodeId> pick(std::vector<NodeId> candidates, std::size_t count) {
    if (policy_.is_seeded()) {
      // Plain Fisher-Yates so the sequence does not depend on the standard
      // library's distribution implementation.
      for (std::size_t i = candidates.size(); i > 1; --i) {
        std::swap(candidates[i - 1], candidates[rng_() % i]);
      }
    }
    candidates.resize(count);
    std::sort(candidates.begin(), candidates.end());
    return candidates;
  }

 private:
  TieBreakPolicy policy_;
  std::mt19937_64 rng_;
};

bool contains(const std::vector<NodeId>& sorted, NodeId v) {
  return std::binary_search(sorted.begin(), sorted.end(), v);
}

std::size_t count_in(const std::set<NodeId>& monitors, const std::vector<NodeId>& nodes) {
  return std::count_if(nodes.begin(), nodes.end(), [&](NodeId v) { return monitors.count(v) > 0; });
}

std::vector<NodeId> choose(Picker& picker, std::set<NodeId>& monitors, const std::vector<NodeId>& pool,
                           const std::vector<NodeId>& excluded, std::size_t need, const std::string& where) {
  std::vector<NodeId> eligible;
  for (auto v : pool) {
    if (!monitors.count(v) && !contains(excluded, v)) eligible.push_back(v);
  }
  if (eligible.size() < need) {
    throw Error(ErrorCode::kInfeasibleStage, where + " needs " + std::to_string(need) + " eligible nodes, has " +
                                                 std::to_string(eligible.size()));
  }
  auto chosen = picker.pick(std::move(eligible), need);
  monitors.insert(chosen.begin(), chosen.end());
  return chosen;
}

}  // namespace

PlacementTrace mmp(const Graph& g, TieBreakPolicy tiebreak) {
  if (g.node_count() < 3) throw Error(ErrorCode::kTooSmall, "placement needs at least three nodes");
  if (!is_connected(g)) throw Error(ErrorCode::kDisconnected, "graph is not connected");

  PlacementTrace trace;
  trace.tiebreak = tiebreak;
  Picker picker(tiebreak);
  std::set<NodeId> monitors;

  for (auto v : g.nodes()) {
    if (g.degree(v) < 3) {
      monitors.insert(v);
      trace.degree_monitors.push_back(v);
    }
  }

  const auto blocks = biconnected_components(g);
  for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
    const auto& block = blocks[bi];
    if (block.nodes.size() < 3) continue;

    for (const auto& t : triconnected_components(block, g)) {
      if (t.nodes.size() < 3) continue;
      TriconnectedStep step;
      step.block = bi;
      step.nodes = t.nodes;
      step.kind = std::string(to_string(t.kind));
      step.separation_vertices = t.separation_vertex_count();
      step.monitors_before = count_in(monitors, t.nodes);
      const auto s = step.separation_vertices;
      const auto mt = step.monitors_before;
      if (s > 0 && s < 3 && s + mt < 3) {
        step.added = choose(picker, monitors, t.nodes, t.separation_vertices, 3 - s - mt,
                            "triconnected component in block " + std::to_string(bi));
      }
      trace.per_triconnected.push_back(std::move(step));
    }

    BiconnectedStep step;
    step.block = bi;
    step.nodes = block.nodes;
    step.cut_vertices = block.cut_vertex_count();
    step.monitors_before = count_in(monitors, block.nodes);
    const auto c = step.cut_vertices;
    const auto mb = step.monitors_before;
    if (c > 0 && c < 3 && c + mb < 3) {
      step.added = choose(picker, monitors, block.nodes, block.cut_vertices, 3 - c - mb,
                          "block " + std::to_string(bi));
    }
    trace.per_biconnected.push_back(std::move(step));
  }

  if (monitors.size() < 3) {
    std::vector<NodeId> all(g.nodes().begin(), g.nodes().end());
    trace.topup = choose(picker, monitors, all, {}, 3 - monitors.size(), "top-up");
  }

  trace.monitors.assign(monitors.begin(), monitors.end());
  trace.k_min = trace.monitors.size();
  return trace;
}

PlacementCheck verify_placement_detail(const Graph& g, const std::vector<NodeId>& monitors, std::size_t cap) {
  PlacementCheck out;
  if (monitors.size() < 3) return out;
  const MonitorSet m(g, monitors);
  out.extended_3_connected = is_k_vertex_connected(extend(g, m).graph, 3);
  try {
    out.fully_identifiable = fully_identifiable(g, m, cap);
    out.identifiability_checked = true;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kPathExplosion) throw;
  }
  out.ok = out.extended_3_connected && (!out.identifiability_checked || out.fully_identifiable);
  return out;
}

bool verify_placement(const Graph& g, const PlacementTrace& trace, std::size_t cap) {
  return verify_placement_detail(g, trace.monitors, cap).ok;
}

bool minimality_probe(const Graph& g, const PlacementTrace& trace, std::size_t budget, std::size_t cap) {
  const std::size_t n = g.node_count();
  if (trace.monitors.size() < 3) return true;  // a single monitor measures nothing
  const std::size_t k = trace.monitors.size() - 1;
  if (k > n) return true;

  std::vector<std::size_t> pick(k);
  for (std::size_t i = 0; i < k; ++i) pick[i] = i;
  std::size_t tried = 0;
  while (true) {
    if (++tried > budget) {
      throw Error(ErrorCode::kInconclusive, "minimality probe exceeded its budget of " + std::to_string(budget));
    }
    std::vector<NodeId> ids;
    for (auto i : pick) ids.push_back(g.node_at(i));
    const MonitorSet m(g, ids);
    bool works = false;
    try {
      works = fully_identifiable(g, m, cap);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kPathExplosion) throw;
      throw Error(ErrorCode::kInconclusive, "path cap reached while probing a smaller placement");
    }
    if (works) return false;

    // Next k-combination of 0..n-1 in lexicographic order.
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return true;
}

}  // namespace linkscope
