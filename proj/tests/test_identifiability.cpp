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

#include <random>

#include "linkscope/corpus.hpp"
#include "linkscope/identifiability.hpp"
#include "oracles/oracles.hpp"
#include "test_support.hpp"

namespace linkscope {
namespace {

using namespace testing_support;

std::vector<std::vector<NodeId>> node_lists(const std::vector<SimplePath>& paths) {
  std::vector<std::vector<NodeId>> out;
  for (const auto& p : paths) out.push_back(p.nodes);
  return out;
}

MetricAssignment weights_of(const Graph& g, std::initializer_list<std::pair<Edge, int>> ws) {
  std::map<Edge, mpq_class> m;
  for (const auto& [e, w] : ws) m[e] = w;
  return MetricAssignment(g, m);
}

MetricAssignment all_ones(const Graph& g) {
  std::map<Edge, mpq_class> m;
  for (const auto& e : g.edges()) m[e] = 1;
  return MetricAssignment(g, m);
}

TEST(MonitorPaths, Examples) {
  auto tri = complete(3);
  EXPECT_EQ(node_lists(enumerate_monitor_paths(tri, MonitorSet(tri, {1, 2}))),
            (std::vector<std::vector<NodeId>>{{1, 2}, {1, 3, 2}}));
  auto k4 = complete(4);
  EXPECT_EQ(node_lists(enumerate_monitor_paths(k4, MonitorSet(k4, {2, 1}))),
            (std::vector<std::vector<NodeId>>{{1, 2}, {1, 3, 2}, {1, 4, 2}, {1, 3, 4, 2}, {1, 4, 3, 2}}));
  expect_error(ErrorCode::kPathExplosion, [&] { enumerate_monitor_paths(tri, MonitorSet(tri, {1, 2}), 1); });
  EXPECT_NO_THROW(enumerate_monitor_paths(tri, MonitorSet(tri, {1, 2}), 2));
}

TEST(MonitorPaths, ThreeMonitorsSkipThirdMonitor) {
  auto k4 = complete(4);
  auto paths = node_lists(enumerate_monitor_paths(k4, MonitorSet(k4, {1, 2, 3})));
  // Per pair: direct link and the detour through node 4.
  EXPECT_EQ(paths, (std::vector<std::vector<NodeId>>{{1, 2}, {1, 3}, {2, 3}, {1, 4, 2}, {1, 4, 3}, {2, 4, 3}}));
}

TEST(MonitorPaths, MatchPermutationOracle) {
  for (int n = 3; n <= 6; ++n) {
    for (const auto& g : connected_graph_classes(n)) {
      std::vector<std::vector<NodeId>> sets = {{1, 2}, {1, static_cast<NodeId>(n)}};
      if (n >= 4) sets.push_back({1, 2, static_cast<NodeId>(n)});
      for (const auto& mons : sets) {
        auto got = node_lists(enumerate_monitor_paths(g, MonitorSet(g, mons)));
        std::sort(got.begin(), got.end());
        EXPECT_EQ(got, oracle::monitor_paths(g, mons)) << serialize(g);
      }
    }
  }
}

TEST(Matrix, Examples) {
  auto tri = complete(3);
  auto mt = build_matrix(tri, enumerate_monitor_paths(tri, MonitorSet(tri, {1, 2})));
  EXPECT_EQ(mt.edge_index, (std::vector<Edge>{{1, 2}, {1, 3}, {2, 3}}));
  EXPECT_EQ(mt.entries, (std::vector<std::vector<std::uint8_t>>{{1, 0, 0}, {0, 1, 1}}));

  auto k4 = complete(4);
  auto mk = build_matrix(k4, enumerate_monitor_paths(k4, MonitorSet(k4, {1, 2})));
  EXPECT_EQ(mk.entries, (std::vector<std::vector<std::uint8_t>>{{1, 0, 0, 0, 0, 0},
                                                                {0, 1, 0, 1, 0, 0},
                                                                {0, 0, 1, 0, 1, 0},
                                                                {0, 1, 0, 0, 1, 1},
                                                                {0, 0, 1, 1, 0, 1}}));
  auto empty = build_matrix(k4, {});
  EXPECT_EQ(empty.rows(), 0u);
  EXPECT_EQ(empty.cols(), 6u);
  std::vector<SimplePath> bad{SimplePath{{1, 2, 1}}};
  expect_error(ErrorCode::kInvalidPath, [&] { build_matrix(k4, bad); });
}

TEST(Identifiable, Examples) {
  auto tri = complete(3);
  auto rt = analyze(tri, MonitorSet(tri, {1, 2}));
  EXPECT_EQ(rt.rank, 2u);
  EXPECT_EQ(rt.identifiable, (std::vector<Edge>{{1, 2}}));
  EXPECT_EQ(rt.unidentifiable, (std::vector<Edge>{{1, 3}, {2, 3}}));
  EXPECT_FALSE(rt.fully_identifiable);

  auto k4 = complete(4);
  auto rk = analyze(k4, MonitorSet(k4, {1, 2}));
  EXPECT_EQ(rk.rank, 5u);
  EXPECT_EQ(rk.identifiable, (std::vector<Edge>{{1, 2}, {3, 4}}));
  EXPECT_EQ(rk.unidentifiable, (std::vector<Edge>{{1, 3}, {1, 4}, {2, 3}, {2, 4}}));

  auto r0 = identifiable_links(build_matrix(k4, {}));
  EXPECT_EQ(r0.rank, 0u);
  EXPECT_TRUE(r0.identifiable.empty());
  EXPECT_EQ(r0.unidentifiable.size(), 6u);
}

// Rank and row-space membership against integer elimination.
TEST(Identifiable, MatchesIntegerEliminationOracle) {
  for (int n = 3; n <= 5; ++n) {
    for (const auto& g : connected_graph_classes(n)) {
      for (const std::vector<NodeId>& mons : std::vector<std::vector<NodeId>>{{1, 2}, {1, 2, 3}}) {
        auto mat = build_matrix(g, enumerate_monitor_paths(g, MonitorSet(g, mons)));
        std::vector<std::vector<mpz_class>> rows;
        for (const auto& r : mat.entries) rows.emplace_back(r.begin(), r.end());
        auto rep = identifiable_links(mat);
        EXPECT_EQ(rep.rank, oracle::bareiss_rank(rows)) << serialize(g);
        for (std::size_t c = 0; c < mat.cols(); ++c) {
          const bool in = oracle::unit_in_rowspace(rows, c, mat.cols());
          const bool reported = std::binary_search(rep.identifiable.begin(), rep.identifiable.end(), mat.edge_index[c]);
          EXPECT_EQ(in, reported) << serialize(g) << to_string(mat.edge_index[c]);
        }
        EXPECT_EQ(rep.fully_identifiable, rep.rank == mat.cols());
      }
    }
  }
}

TEST(Simulate, Examples) {
  auto tri = complete(3);
  auto w = weights_of(tri, {{{1, 2}, 1}, {{1, 3}, 2}, {{2, 3}, 3}});
  auto [mt, vt] = simulate(tri, MonitorSet(tri, {1, 2}), w);
  EXPECT_EQ(vt.values, (std::vector<mpq_class>{1, 5}));

  auto k4 = complete(4);
  auto [mk, vk] = simulate(k4, MonitorSet(k4, {1, 2}), all_ones(k4));
  EXPECT_EQ(vk.values, (std::vector<mpq_class>{1, 2, 2, 3, 3}));

  expect_error(ErrorCode::kInvalidWeight, [&] { weights_of(tri, {{{1, 2}, 0}, {{1, 3}, 2}, {{2, 3}, 3}}); });
  expect_error(ErrorCode::kInvalidWeight, [&] { weights_of(tri, {{{1, 2}, 1}, {{1, 3}, 2}}); });
  expect_error(ErrorCode::kInvalidWeight, [&] { weights_of(tri, {{{1, 2}, -1}, {{1, 3}, 2}, {{2, 3}, 3}}); });
}

TEST(Recover, Examples) {
  auto tri = complete(3);
  auto w = weights_of(tri, {{{1, 2}, 1}, {{1, 3}, 2}, {{2, 3}, 3}});
  auto [mt, vt] = simulate(tri, MonitorSet(tri, {1, 2}), w);
  EXPECT_EQ(recover(mt, vt), (std::map<Edge, mpq_class>{{{1, 2}, 1}}));

  auto k4 = complete(4);
  auto [mk, vk] = simulate(k4, MonitorSet(k4, {1, 2}), all_ones(k4));
  EXPECT_EQ(recover(mk, vk), (std::map<Edge, mpq_class>{{{1, 2}, 1}, {{3, 4}, 1}}));
}

TEST(Recover, DetectsInconsistency) {
  // Rows 1-2, 1-3-2 and a repeated 1-3-2: rank 2, third row dependent.
  auto tri = complete(3);
  auto mat = build_matrix(tri, std::vector<SimplePath>{SimplePath{{1, 2}}, SimplePath{{1, 3, 2}}, SimplePath{{1, 3, 2}}});
  EXPECT_EQ(identifiable_links(mat).rank, 2u);
  MeasurementVector v{{1, 5, 999}};
  expect_error(ErrorCode::kInconsistent, [&] { recover(mat, v); });
  MeasurementVector ok{{1, 5, 5}};
  EXPECT_EQ(recover(mat, ok).at(Edge::of(1, 2)), 1);
  MeasurementVector short_v{{1}};
  expect_error(ErrorCode::kPrecondition, [&] { recover(mat, short_v); });
}

TEST(Recover, RandomRationalWeightsRoundTrip) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 40; ++i) {
    auto g = random_connected_graph(4 + i % 4, 0.6, 1000 + i);
    std::map<Edge, mpq_class> ws;
    for (const auto& e : g.edges()) ws[e] = mpq_class(1 + rng() % 97, 1 + rng() % 13);
    MetricAssignment w(g, ws);
    MonitorSet m(g, {1, 2, 3});
    auto [mat, vec] = simulate(g, m, w);
    auto got = recover(mat, vec);
    auto rep = identifiable_links(mat);
    ASSERT_EQ(got.size(), rep.identifiable.size());
    for (const auto& [e, val] : got) EXPECT_EQ(val, w.weight(e)) << to_string(e);
  }
}

TEST(RowReducerTest, MonotoneUnderAddedRows) {
  auto g = complete(5);
  auto mat = build_matrix(g, enumerate_monitor_paths(g, MonitorSet(g, {1, 2})));
  RowReducer rr(mat.cols());
  std::size_t last_rank = 0, last_ident = 0;
  for (const auto& row : mat.entries) {
    rr.add(std::span<const std::uint8_t>(row));
    std::size_t ident = 0;
    for (std::size_t c = 0; c < mat.cols(); ++c) ident += rr.unit_row(c) ? 1 : 0;
    EXPECT_GE(rr.rank(), last_rank);
    EXPECT_GE(ident, last_ident);
    last_rank = rr.rank();
    last_ident = ident;
  }
}

TEST(Lemma1Check, Fixtures) {
  for (const char* name : {"fig1a_bridge", "fig1b_bridge"}) {
    auto f = named_fixture(name);
    EXPECT_TRUE(check_lemma1(f.graph, MonitorSet(f.graph, f.monitors), *f.bridge)) << name;
  }
  auto f = named_fixture("fig1a_bridge");
  expect_error(ErrorCode::kPrecondition, [&] { check_lemma1(f.graph, MonitorSet(f.graph, {1, 2}), *f.bridge); });
  expect_error(ErrorCode::kPrecondition,
               [&] { check_lemma1(f.graph, MonitorSet(f.graph, f.monitors), Edge::of(1, 2)); });
  expect_error(ErrorCode::kPrecondition,
               [&] { check_lemma1(f.graph, MonitorSet(f.graph, f.monitors), Edge::of(1, 8)); });
}

TEST(Corollary1Check, Examples) {
  auto tri = complete(3);
  EXPECT_TRUE(check_corollary1(tri, MonitorSet(tri, {1, 2})));
  auto k4 = complete(4);
  EXPECT_TRUE(check_corollary1(k4, MonitorSet(k4, {1, 2})));
  auto edge = Graph::from_edges({{1, 2}});
  EXPECT_TRUE(check_corollary1(edge, MonitorSet(edge, {1, 2})));
}

TEST(Rationals, ParseAndFormat) {
  EXPECT_EQ(parse_rational("3"), 3);
  EXPECT_EQ(parse_rational("6/4"), mpq_class(3, 2));
  EXPECT_EQ(parse_rational("2.75"), mpq_class(11, 4));
  EXPECT_EQ(rational_to_string(mpq_class(6, 4)), "3/2");
  EXPECT_EQ(rational_to_string(mpq_class(4, 4)), "1");
  for (const char* bad : {"", "x", "1/0", "1.", "1/2/3", "--1"}) {
    expect_error(ErrorCode::kInvalidWeight, [&] { parse_rational(bad); });
  }
}

TEST(Rationals, WeightsFile) {
  auto tri = complete(3);
  auto w = parse_weights("# w\n1 2 1\n1 3 1/2\n3 2 0.25\n", tri);
  EXPECT_EQ(w.weight(Edge::of(2, 3)), mpq_class(1, 4));
  expect_error(ErrorCode::kInvalidWeight, [&] { parse_weights("1 2 1\n1 2 1\n", tri); });
  expect_error(ErrorCode::kInvalidWeight, [&] { parse_weights("1 2\n", tri); });
  expect_error(ErrorCode::kInvalidWeight, [&] { parse_weights("1 2 1\n1 3 1\n", tri); });
}

}  // namespace
}  // namespace linkscope
