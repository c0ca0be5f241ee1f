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

// Deterministic graph instances for exhaustive and randomized checks.

#ifndef LINKSCOPE_CORPUS_HPP_
#define LINKSCOPE_CORPUS_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "linkscope/graph.hpp"

namespace linkscope {

// Connected simple graphs on the labelled nodes 1..n, in increasing order of
// the edge bitmask (bit i is the i-th pair in lexicographic order).
class ConnectedGraphStream {
 public:
  // Throws kOutOfRange unless 1 <= n <= 7.
  explicit ConnectedGraphStream(int n);
  std::optional<Graph> next();

 private:
  int n_;
  std::vector<Edge> pairs_;
  std::uint64_t mask_ = 0;
  std::uint64_t end_ = 0;
};

std::vector<Graph> all_connected_graphs(int n);
void for_each_connected_graph(int n, const std::function<void(const Graph&)>& visit);

// One canonical representative per isomorphism class of connected graphs on
// n nodes, in ascending edge-bitmask order. 1 <= n <= 8.
std::vector<Graph> connected_graph_classes(int n);

// Rejection sampling from G(n, p) until connected. Every 64 rejections the
// probability moves halfway towards 1, so sparse requests still terminate.
// Nodes are 1..n. Throws kOutOfRange for n < 2 or p outside (0, 1].
Graph random_connected_graph(int n, double edge_prob, std::uint64_t seed);

struct Fixture {
  Graph graph;
  std::vector<NodeId> monitors;
  std::optional<Edge> bridge;
  std::string description;
};

std::map<std::string, Fixture> named_fixtures();
// Throws kNotFound.
Fixture named_fixture(const std::string& name);

}  // namespace linkscope

#endif  // LINKSCOPE_CORPUS_HPP_
