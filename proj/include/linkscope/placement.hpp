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

// Minimum monitor placement (MMP).
//
// Stages, in order:
//   1. every node of degree < 3 becomes a monitor;
//   2. per block with >= 3 nodes, per triconnected component T with >= 3
//      nodes: if 0 < s_T < 3 and s_T + M_T < 3, add 3 - s_T - M_T nodes of T
//      that are neither separation vertices nor monitors; then, for the block
//      itself, if 0 < c_B < 3 and c_B + M_B < 3, add 3 - c_B - M_B nodes of B
//      that are neither cut vertices nor monitors;
//   3. top up to three monitors in total.
// M_T and M_B count the monitors present when the component is reached.
// Blocks and components are visited in ascending order of their node lists.

#ifndef LINKSCOPE_PLACEMENT_HPP_
#define LINKSCOPE_PLACEMENT_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "linkscope/graph.hpp"
#include "linkscope/identifiability.hpp"

namespace linkscope {

// How the "choose any eligible node" steps are resolved.
class TieBreakPolicy {
 public:
  static TieBreakPolicy lowest_id() { return TieBreakPolicy(false, 0); }
  static TieBreakPolicy seeded(std::uint64_t seed) { return TieBreakPolicy(true, seed); }

  bool is_seeded() const { return seeded_; }
  std::uint64_t seed() const { return seed_; }
  std::string name() const { return seeded_ ? "seeded" : "lowest-id"; }

 private:
  TieBreakPolicy(bool seeded, std::uint64_t seed) : seeded_(seeded), seed_(seed) {}
  bool seeded_;
  std::uint64_t seed_;
};

struct TriconnectedStep {
  std::size_t block = 0;  // index into the block list
  std::vector<NodeId> nodes;
  std::string kind;
  std::size_t separation_vertices = 0;  // s_T
  std::size_t monitors_before = 0;      // M_T
  std::vector<NodeId> added;
};

struct BiconnectedStep {
  std::size_t block = 0;
  std::vector<NodeId> nodes;
  std::size_t cut_vertices = 0;     // c_B
  std::size_t monitors_before = 0;  // M_B
  std::vector<NodeId> added;
};

struct PlacementTrace {
  std::vector<NodeId> monitors;  // ascending
  std::vector<NodeId> degree_monitors;
  std::vector<TriconnectedStep> per_triconnected;
  std::vector<BiconnectedStep> per_biconnected;
  std::vector<NodeId> topup;
  std::size_t k_min = 0;
  TieBreakPolicy tiebreak = TieBreakPolicy::lowest_id();
};

// Throws kTooSmall for |g| < 3, kDisconnected, and kInfeasibleStage when a
// stage asks for more eligible nodes than the component has.
PlacementTrace mmp(const Graph& g, TieBreakPolicy tiebreak = TieBreakPolicy::lowest_id());

struct PlacementCheck {
  bool extended_3_connected = false;
  bool identifiability_checked = false;  // false when path enumeration hit the cap
  bool fully_identifiable = false;
  bool ok = false;
};

PlacementCheck verify_placement_detail(const Graph& g, const std::vector<NodeId>& monitors,
                                       std::size_t cap = kDefaultPathCap);
// Fewer than three monitors is reported as false.
bool verify_placement(const Graph& g, const PlacementTrace& trace, std::size_t cap = kDefaultPathCap);

// True iff no set of |monitors| - 1 nodes makes every link identifiable,
// decided by the rank oracle alone. Throws kInconclusive once more than
// `budget` subsets would be needed or a subset hits the path cap.
bool minimality_probe(const Graph& g, const PlacementTrace& trace, std::size_t budget,
                      std::size_t cap = kDefaultPathCap);

}  // namespace linkscope

#endif  // LINKSCOPE_PLACEMENT_HPP_
