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

// Path measurements and the exact identifiability oracle.
//
// A link metric is identifiable when its unit coordinate vector lies in the
// row space of the path/link incidence matrix. Everything here is computed
// over the rationals with GMP; nothing in a verdict touches floating point.

#ifndef LINKSCOPE_IDENTIFIABILITY_HPP_
#define LINKSCOPE_IDENTIFIABILITY_HPP_

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "linkscope/graph.hpp"
#include "linkscope/tomography.hpp"

namespace linkscope {

inline constexpr std::size_t kDefaultPathCap = 100000;

struct MeasurementMatrix {
  std::vector<SimplePath> paths;
  std::vector<Edge> edge_index;  // column order, ascending
  std::vector<std::vector<std::uint8_t>> entries;

  std::size_t rows() const { return paths.size(); }
  std::size_t cols() const { return edge_index.size(); }
  std::optional<std::size_t> column_of(const Edge& e) const;
};

class MetricAssignment {
 public:
  // Every edge of g needs a strictly positive weight; weights on non-edges
  // are rejected. Throws kInvalidWeight.
  MetricAssignment(const Graph& g, std::map<Edge, mpq_class> weights);

  const mpq_class& weight(const Edge& e) const;
  const std::map<Edge, mpq_class>& weights() const { return weights_; }

 private:
  std::map<Edge, mpq_class> weights_;
};

struct MeasurementVector {
  std::vector<mpq_class> values;
};

struct IdentifiabilityReport {
  std::size_t rank = 0;
  std::vector<Edge> identifiable;
  std::vector<Edge> unidentifiable;
  bool fully_identifiable = false;
};

// Incremental reduced row echelon form over Q with an optional right-hand
// side carried along each row.
class RowReducer {
 public:
  explicit RowReducer(std::size_t cols);

  // Returns true when the row increased the rank. A row that reduces to zero
  // with a nonzero right-hand side marks the system inconsistent.
  bool add(std::vector<mpq_class> row, mpq_class rhs = 0);
  bool add(std::span<const std::uint8_t> row, const mpq_class& rhs = 0);

  std::size_t rank() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  bool inconsistent() const { return inconsistent_; }

  // Index of the basis row equal to the unit vector of `col`, if any. Such a
  // row exists iff that unit vector lies in the row space.
  std::optional<std::size_t> unit_row(std::size_t col) const;
  const mpq_class& rhs(std::size_t row) const { return rhs_[row]; }

 private:
  std::size_t cols_;
  std::vector<std::vector<mpq_class>> rows_;
  std::vector<mpq_class> rhs_;
  std::vector<std::size_t> pivot_col_;
  std::vector<long> row_of_pivot_;  // -1 when the column has no pivot
  bool inconsistent_ = false;
};

// Every simple path between two distinct monitors, one row per unordered
// pair of endpoints, oriented from the smaller monitor id. With three or more
// monitors a path never passes through a third monitor. Ordered by length,
// then node sequence. Throws kPathExplosion once more than `cap` paths exist.
std::vector<SimplePath> enumerate_monitor_paths(const Graph& g, const MonitorSet& m,
                                                std::size_t cap = kDefaultPathCap);

// Throws kInvalidPath for a path that is not simple in g.
MeasurementMatrix build_matrix(const Graph& g, std::span<const SimplePath> paths);

IdentifiabilityReport identifiable_links(const MeasurementMatrix& mat);

// Convenience: enumerate, build, analyze.
IdentifiabilityReport analyze(const Graph& g, const MonitorSet& m, std::size_t cap = kDefaultPathCap);

// Stops reading rows as soon as the rank reaches the edge count, so it is
// much cheaper than analyze() on dense instances.
bool fully_identifiable(const Graph& g, const MonitorSet& m, std::size_t cap = kDefaultPathCap);

std::pair<MeasurementMatrix, MeasurementVector> simulate(const Graph& g, const MonitorSet& m,
                                                         const MetricAssignment& w,
                                                         std::size_t cap = kDefaultPathCap);

// Values for exactly the identifiable edges. Throws kInconsistent when the
// vector cannot come from any assignment, kPrecondition on a length mismatch.
std::map<Edge, mpq_class> recover(const MeasurementMatrix& mat, const MeasurementVector& v);

// True iff the bridge and every link sharing an endpoint with it are
// unidentifiable. Needs exactly two monitors separated by the bridge.
bool check_lemma1(const Graph& g, const MonitorSet& m, const Edge& bridge,
                  std::size_t cap = kDefaultPathCap);

// True iff every exterior link except m1m2 is unidentifiable.
bool check_corollary1(const Graph& g, const MonitorSet& m, std::size_t cap = kDefaultPathCap);

// Rationals as "p/q", or "p" when the denominator is 1.
std::string rational_to_string(const mpq_class& q);
// Accepts "p", "p/q" and plain decimals such as "2.75". Throws kInvalidWeight.
mpq_class parse_rational(std::string_view text);
// "u v value" per line, '#' comments.
MetricAssignment parse_weights(std::string_view text, const Graph& g);

}  // namespace linkscope

#endif  // LINKSCOPE_IDENTIFIABILITY_HPP_
