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

// Exhaustive witness searches over cycles and monitor attachment paths.
//
// These are brute force by design and only meant for small graphs; every
// entry point rejects graphs with more than kWitnessNodeLimit nodes.
//
// A cycle is non-separating when it is induced and every node off the cycle
// still reaches a monitor after the cycle's nodes are deleted. A cycle that
// covers the whole graph passes vacuously.
//
// Ordering: cycles are tried shortest first, then in lexicographic order of
// their canonical node sequence, the monitor assignment (m1, m2) before (m2, m1), and the first
// path in length-then-lexicographic order. The second path of a pair is the
// first breadth-first shortest path once the first path is fixed.

#ifndef LINKSCOPE_WITNESS_HPP_
#define LINKSCOPE_WITNESS_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "linkscope/graph.hpp"
#include "linkscope/tomography.hpp"

namespace linkscope {

inline constexpr std::size_t kWitnessNodeLimit = 12;

// Two cycles through vw plus a path from one monitor to f - v - w and a path
// from the other monitor to c - v - w.
struct Lemma3Witness {
  Cycle f;  // non-separating
  Cycle c;
  SimplePath p1;  // starts at a monitor, ends on f
  SimplePath p2;  // starts at the other monitor, ends on c
};

struct Lemma4Witness {
  Cycle f;          // non-separating, monitor-free
  SimplePath to_v;  // monitor ... v
  SimplePath to_w;  // other monitor ... w
};

// All simple cycles in canonical form, shortest first, then lexicographic.
std::vector<Cycle> all_cycles(const Graph& g);
// Cycles containing the edge vw, skipping any cycle through a node with
// avoid[index] != 0.
std::vector<Cycle> cycles_through(const Graph& g, const Edge& vw, std::span<const char> avoid = {});

// Throws kInvalidCycle when c is not a cycle of g.
bool is_nonseparating_cycle(const Graph& g, const Cycle& c, const MonitorSet& m);
std::vector<Cycle> nonseparating_cycles(const Graph& g, const MonitorSet& m);

std::optional<Cycle> find_nonseparating_cycle(const Graph& g, const Edge& vw, const MonitorSet& m,
                                              bool exclude_monitors);

// Two monitors only. Throws kNotInterior when vw touches a monitor and
// kNotFound when vw is not an edge.
std::optional<Lemma3Witness> find_lemma3_witness(const Graph& g, const Edge& vw, const MonitorSet& m);

// True when vw admits a cycle c through vw meeting f only in {v, w}, a path
// from one monitor to f - v - w missing c entirely, and a disjoint path from
// the other monitor to c - v - w, each path touching its cycle only at its
// last node. Links without such a structure are the Case-B links of f.
bool is_case_a_on_cycle(const Graph& g, const Cycle& f, const Edge& vw, const MonitorSet& m);

// Interior links of f that are not Case-A on f. Throws kPrecondition when f
// is not non-separating.
std::vector<Edge> caseB_links_on_cycle(const Graph& g, const Cycle& f, const MonitorSet& m);
std::size_t count_caseB_on_cycle(const Graph& g, const Cycle& f, const MonitorSet& m);

// Monitor-free non-separating cycle through vw and disjoint monitor paths
// ending at v and w, each meeting the cycle only there.
std::optional<Lemma4Witness> find_lemma4_witness(const Graph& g, const Edge& vw, const MonitorSet& m);

// Independent re-checks of the witness properties.
bool is_valid_lemma3_witness(const Graph& g, const Edge& vw, const MonitorSet& m, const Lemma3Witness& w);
bool is_valid_lemma4_witness(const Graph& g, const Edge& vw, const MonitorSet& m, const Lemma4Witness& w);

}  // namespace linkscope

#endif  // LINKSCOPE_WITNESS_HPP_
