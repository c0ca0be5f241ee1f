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

#include <gtest/gtest.h>

#include "linkscope/connectivity.hpp"
#include "linkscope/corpus.hpp"
#include "linkscope/tomography.hpp"
#include "oracles/oracles.hpp"
#include "test_support.hpp"

namespace linkscope {
namespace {

using namespace testing_support;

TEST(MonitorSetTest, Validation) {
  auto k4 = complete(4);
  expect_error(ErrorCode::kTooFewMonitors, [&] { MonitorSet(k4, {1}); });
  expect_error(ErrorCode::kNotFound, [&] { MonitorSet(k4, {1, 9}); });
  expect_error(ErrorCode::kDuplicate, [&] { MonitorSet(k4, {2, 2}); });
  MonitorSet m(k4, {3, 1});
  EXPECT_TRUE(m.contains(1));
  EXPECT_FALSE(m.contains(2));
}

TEST(Interior, Examples) {
  auto k4 = complete(4);
  auto h = interior_graph(k4, MonitorSet(k4, {1, 2}));
  EXPECT_EQ(h.graph, Graph::from_edges({{3, 4}}));
  EXPECT_EQ(h.exterior_links, (std::vector<Edge>{{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}}));
  EXPECT_TRUE(h.connected);

  auto tri = complete(3);
  auto t = interior_graph(tri, MonitorSet(tri, {1, 2}));
  EXPECT_EQ(t.graph.node_count(), 1u);
  EXPECT_EQ(t.graph.edge_count(), 0u);
  EXPECT_EQ(t.exterior_links.size(), 3u);

  auto c4 = cycle_graph(4);
  auto c = interior_graph(c4, MonitorSet(c4, {1, 3}));
  EXPECT_EQ(std::vector<NodeId>(c.graph.nodes().begin(), c.graph.nodes().end()), (std::vector<NodeId>{2, 4}));
  EXPECT_EQ(c.exterior_links.size(), 4u);
  EXPECT_FALSE(c.connected);

  expect_error(ErrorCode::kPrecondition, [&] { interior_graph(k4, MonitorSet(k4, {1, 2, 3})); });
}

TEST(Conditions, Examples) {
  auto k4 = complete(4);
  EXPECT_TRUE(condition_1(k4, MonitorSet(k4, {1, 2})));
  EXPECT_TRUE(condition_2(k4, MonitorSet(k4, {1, 2})));

  auto fig = named_fixture("fig1a_bridge");
  EXPECT_FALSE(condition_1(fig.graph, MonitorSet(fig.graph, fig.monitors)));

  auto tri = complete(3);
  EXPECT_TRUE(condition_1(tri, MonitorSet(tri, {1, 2})));

  auto c4 = cycle_graph(4);
  EXPECT_FALSE(condition_2(c4, MonitorSet(c4, {1, 3})));
  auto c5 = cycle_graph(5);
  for (NodeId a = 1; a <= 5; ++a) {
    for (NodeId b = a + 1; b <= 5; ++b) EXPECT_FALSE(condition_2(c5, MonitorSet(c5, {a, b})));
  }
}

TEST(Conditions, Prop2CharacterizationExamples) {
  auto k4 = complete(4);
  EXPECT_TRUE(prop2_characterization(k4, MonitorSet(k4, {1, 2})));
  auto c4 = cycle_graph(4);
  EXPECT_FALSE(prop2_characterization(c4, MonitorSet(c4, {1, 3})));
  EXPECT_FALSE(prop2_characterization(c4, MonitorSet(c4, {1, 2})));
  auto tri = complete(3);
  expect_error(ErrorCode::kPrecondition, [&] { prop2_characterization(tri, MonitorSet(tri, {1, 2})); });
}

TEST(Extend, Examples) {
  auto k4 = complete(4);
  auto ex = extend(k4, MonitorSet(k4, {1, 2, 3}));
  EXPECT_EQ(ex.graph.node_count(), 6u);
  EXPECT_EQ(ex.graph.edge_count(), 12u);
  EXPECT_EQ(ex.virtual_1, 5u);
  EXPECT_EQ(ex.virtual_2, 6u);
  EXPECT_FALSE(ex.graph.has_edge(5, 6));
  const NodeId virtuals[] = {ex.virtual_1, ex.virtual_2};
  EXPECT_EQ(remove_nodes(ex.graph, virtuals), k4);
  expect_error(ErrorCode::kTooFewMonitors, [&] { extend(k4, MonitorSet(k4, {1, 2})); });

  auto tri = complete(3);
  auto t = extend(tri, MonitorSet(tri, {1, 2, 3}));
  EXPECT_EQ(t.graph.edge_count(), 9u);
  EXPECT_EQ(t.graph.degree(t.virtual_1), 3u);
}

// Both sides computed independently with subset-deletion oracles.
BothSides oracle_prop5(const Graph& g, const MonitorSet& m) {
  auto ex = extend(g, m);
  BothSides out{true, oracle::edge_connected(ex.graph, 3)};
  for (const auto& l : g.edges()) out.lhs = out.lhs && oracle::edge_connected(remove_edge(ex.graph, l), 2);
  return out;
}

BothSides oracle_prop6(const Graph& g, const MonitorSet& m) {
  auto ex = extend(g, m);
  return {oracle::vertex_connected(add_edge(ex.graph, ex.virtual_1, ex.virtual_2), 3),
          oracle::vertex_connected(ex.graph, 3)};
}

TEST(Prop5And6, Examples) {
  auto k4 = complete(4);
  MonitorSet m(k4, {1, 2, 3});
  EXPECT_EQ(prop5_both_sides(k4, m), (BothSides{true, true}));
  EXPECT_EQ(prop6_both_sides(k4, m), (BothSides{true, true}));
  EXPECT_EQ(oracle_prop5(k4, m), (BothSides{true, true}));

  auto p3 = path_graph(3);
  MonitorSet pm(p3, {1, 2, 3});
  EXPECT_EQ(prop5_both_sides(p3, pm), oracle_prop5(p3, pm));
  EXPECT_EQ(prop5_both_sides(p3, pm).lhs, prop5_both_sides(p3, pm).rhs);

  auto star = Graph::from_edges({{4, 1}, {4, 2}, {4, 3}});
  MonitorSet sm(star, {1, 2, 3});
  auto s5 = prop5_both_sides(star, sm);
  EXPECT_EQ(s5, oracle_prop5(star, sm));
  EXPECT_EQ(s5.lhs, s5.rhs);

  auto bt = bowtie();
  MonitorSet bm(bt, {1, 2, 3});
  auto b6 = prop6_both_sides(bt, bm);
  EXPECT_EQ(b6, oracle_prop6(bt, bm));
  EXPECT_EQ(b6.lhs, b6.rhs);

  auto c6 = cycle_graph(6);
  MonitorSet cm(c6, {1, 3, 5});
  auto c66 = prop6_both_sides(c6, cm);
  EXPECT_EQ(c66, oracle_prop6(c6, cm));
  EXPECT_EQ(c66.lhs, c66.rhs);
}

TEST(Prop2Property, EquivalentOnSmallCorpus) {
  for (int n = 4; n <= 5; ++n) {
    for (const auto& g : connected_graph_classes(n)) {
      for (NodeId a = 1; a <= static_cast<NodeId>(n); ++a) {
        for (NodeId b = a + 1; b <= static_cast<NodeId>(n); ++b) {
          MonitorSet m(g, {a, b});
          EXPECT_EQ(condition_2(g, m), prop2_characterization(g, m)) << serialize(g) << a << "," << b;
        }
      }
    }
  }
}

}  // namespace
}  // namespace linkscope
