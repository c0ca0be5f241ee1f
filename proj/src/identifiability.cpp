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

#include "linkscope/identifiability.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "linkscope/connectivity.hpp"
#include "linkscope/error.hpp"

namespace linkscope {

std::optional<std::size_t> MeasurementMatrix::column_of(const Edge& e) const {
  auto it = std::lower_bound(edge_index.begin(), edge_index.end(), e);
  if (it == edge_index.end() || *it != e) return std::nullopt;
  return static_cast<std::size_t>(it - edge_index.begin());
}

MetricAssignment::MetricAssignment(const Graph& g, std::map<Edge, mpq_class> weights)
    : weights_(std::move(weights)) {
  for (auto& [e, w] : weights_) {
    if (!g.has_edge(e)) throw Error(ErrorCode::kInvalidWeight, "weight given for non-edge " + to_string(e));
    w.canonicalize();
    if (sgn(w) <= 0) throw Error(ErrorCode::kInvalidWeight, "weight of " + to_string(e) + " is not positive");
  }
  for (const auto& e : g.edges()) {
    if (!weights_.count(e)) throw Error(ErrorCode::kInvalidWeight, "no weight for " + to_string(e));
  }
}

const mpq_class& MetricAssignment::weight(const Edge& e) const {
  auto it = weights_.find(e);
  if (it == weights_.end()) throw Error(ErrorCode::kNotFound, "no weight for " + to_string(e));
  return it->second;
}

RowReducer::RowReducer(std::size_t cols) : cols_(cols), row_of_pivot_(cols, -1) {}

bool RowReducer::add(std::span<const std::uint8_t> row, const mpq_class& rhs) {
  std::vector<mpq_class> dense(row.size());
  for (std::size_t c = 0; c < row.size(); ++c) dense[c] = row[c];
  return add(std::move(dense), rhs);
}

bool RowReducer::add(std::vector<mpq_class> row, mpq_class rhs) {
  if (row.size() != cols_) throw Error(ErrorCode::kPrecondition, "row width does not match column count");
  for (std::size_t c = 0; c < cols_; ++c) {
    if (sgn(row[c]) == 0 || row_of_pivot_[c] < 0) continue;
    const auto& basis = rows_[row_of_pivot_[c]];
    const mpq_class factor = row[c];
    for (std::size_t k = 0; k < cols_; ++k) {
      if (sgn(basis[k]) != 0) row[k] -= factor * basis[k];
    }
    rhs -= factor * rhs_[row_of_pivot_[c]];
  }
  std::size_t pivot = 0;
  while (pivot < cols_ && sgn(row[pivot]) == 0) ++pivot;
  if (pivot == cols_) {
    if (sgn(rhs) != 0) inconsistent_ = true;
    return false;
  }
  const mpq_class lead = row[pivot];
  for (std::size_t k = pivot; k < cols_; ++k) {
    if (sgn(row[k]) != 0) row[k] /= lead;
  }
  rhs /= lead;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (sgn(rows_[r][pivot]) == 0) continue;
    const mpq_class factor = rows_[r][pivot];
    for (std::size_t k = 0; k < cols_; ++k) {
      if (sgn(row[k]) != 0) rows_[r][k] -= factor * row[k];
    }
    rhs_[r] -= factor * rhs;
  }
  row_of_pivot_[pivot] = static_cast<long>(rows_.size());
  pivot_col_.push_back(pivot);
  rows_.push_back(std::move(row));
  rhs_.push_back(std::move(rhs));
  return true;
}

std::optional<std::size_t> RowReducer::unit_row(std::size_t col) const {
  const long r = row_of_pivot_.at(col);
  if (r < 0) return std::nullopt;
  const auto& row = rows_[r];
  for (std::size_t k = 0; k < cols_; ++k) {
    if (k != col && sgn(row[k]) != 0) return std::nullopt;
  }
  return static_cast<std::size_t>(r);
}

namespace {

struct PathSearch {
  const Graph& g;
  std::size_t target;
  std::vector<char> blocked;
  std::size_t cap;
  std::vector<SimplePath>& out;
  std::vector<NodeId> trail;

  void run(std::size_t x) {
    trail.push_back(g.node_at(x));
    if (x == target) {
      if (out.size() >= cap) {
        throw Error(ErrorCode::kPathExplosion,
                    "more than " + std::to_string(cap) + " monitor paths");
      }
      out.push_back(SimplePath{trail});
    } else {
      blocked[x] = 1;
      for (auto y : g.adjacent(x)) {
        if (!blocked[y]) run(y);
      }
      blocked[x] = 0;
    }
    trail.pop_back();
  }
};

bool shortlex_less(const SimplePath& a, const SimplePath& b) {
  if (a.nodes.size() != b.nodes.size()) return a.nodes.size() < b.nodes.size();
  return a.nodes < b.nodes;
}

}  // namespace

std::vector<SimplePath> enumerate_monitor_paths(const Graph& g, const MonitorSet& m, std::size_t cap) {
  if (!is_connected(g)) throw Error(ErrorCode::kDisconnected, "graph is not connected");
  std::vector<NodeId> mons(m.ids().begin(), m.ids().end());
  std::sort(mons.begin(), mons.end());
  std::vector<SimplePath> out;
  for (std::size_t i = 0; i < mons.size(); ++i) {
    for (std::size_t j = i + 1; j < mons.size(); ++j) {
      PathSearch search{g, g.index(mons[j]), std::vector<char>(g.node_count(), 0), cap, out, {}};
      for (std::size_t k = 0; k < mons.size(); ++k) {
        if (k != i && k != j) search.blocked[g.index(mons[k])] = 1;
      }
      search.run(g.index(mons[i]));
    }
  }
  std::sort(out.begin(), out.end(), shortlex_less);
  return out;
}

MeasurementMatrix build_matrix(const Graph& g, std::span<const SimplePath> paths) {
  MeasurementMatrix mat;
  mat.edge_index.assign(g.edges().begin(), g.edges().end());
  mat.paths.reserve(paths.size());
  mat.entries.reserve(paths.size());
  for (const auto& p : paths) {
    if (!is_simple_path(g, p.nodes)) throw Error(ErrorCode::kInvalidPath, "path is not simple in graph");
    std::vector<std::uint8_t> row(mat.cols(), 0);
    for (const auto& e : p.edges()) row[*mat.column_of(e)] = 1;
    mat.paths.push_back(p);
    mat.entries.push_back(std::move(row));
  }
  return mat;
}

IdentifiabilityReport identifiable_links(const MeasurementMatrix& mat) {
  RowReducer rr(mat.cols());
  for (const auto& row : mat.entries) {
    if (rr.rank() == mat.cols()) break;
    rr.add(std::span<const std::uint8_t>(row));
  }
  IdentifiabilityReport rep;
  rep.rank = rr.rank();
  for (std::size_t c = 0; c < mat.cols(); ++c) {
    (rr.unit_row(c) ? rep.identifiable : rep.unidentifiable).push_back(mat.edge_index[c]);
  }
  rep.fully_identifiable = rep.unidentifiable.empty();
  return rep;
}

IdentifiabilityReport analyze(const Graph& g, const MonitorSet& m, std::size_t cap) {
  auto paths = enumerate_monitor_paths(g, m, cap);
  return identifiable_links(build_matrix(g, paths));
}

bool fully_identifiable(const Graph& g, const MonitorSet& m, std::size_t cap) {
  return analyze(g, m, cap).fully_identifiable;
}

std::pair<MeasurementMatrix, MeasurementVector> simulate(const Graph& g, const MonitorSet& m,
                                                         const MetricAssignment& w, std::size_t cap) {
  auto paths = enumerate_monitor_paths(g, m, cap);
  auto mat = build_matrix(g, paths);
  MeasurementVector v;
  v.values.reserve(mat.rows());
  for (const auto& p : mat.paths) {
    mpq_class sum = 0;
    for (const auto& e : p.edges()) sum += w.weight(e);
    v.values.push_back(sum);
  }
  return {std::move(mat), std::move(v)};
}

std::map<Edge, mpq_class> recover(const MeasurementMatrix& mat, const MeasurementVector& v) {
  if (v.values.size() != mat.rows()) {
    throw Error(ErrorCode::kPrecondition, "measurement vector length does not match matrix rows");
  }
  RowReducer rr(mat.cols());
  for (std::size_t r = 0; r < mat.rows(); ++r) {
    rr.add(std::span<const std::uint8_t>(mat.entries[r]), v.values[r]);
    if (rr.inconsistent()) {
      throw Error(ErrorCode::kInconsistent, "measurement " + std::to_string(r) + " contradicts earlier rows");
    }
  }
  std::map<Edge, mpq_class> out;
  for (std::size_t c = 0; c < mat.cols(); ++c) {
    if (auto r = rr.unit_row(c)) out.emplace(mat.edge_index[c], rr.rhs(*r));
  }
  return out;
}

bool check_lemma1(const Graph& g, const MonitorSet& m, const Edge& bridge, std::size_t cap) {
  if (m.size() != 2) throw Error(ErrorCode::kPrecondition, "bridge check needs exactly two monitors");
  if (!g.has_edge(bridge)) throw Error(ErrorCode::kPrecondition, to_string(bridge) + " is not a link of the graph");
  const auto all = bridges(g);
  if (!std::binary_search(all.begin(), all.end(), bridge)) {
    throw Error(ErrorCode::kPrecondition, to_string(bridge) + " is not a bridge");
  }
  const auto split = component_labels(remove_edge(g, bridge));
  if (split.label[g.index(m[0])] == split.label[g.index(m[1])]) {
    throw Error(ErrorCode::kPrecondition, "both monitors lie on the same side of " + to_string(bridge));
  }
  const auto rep = analyze(g, m, cap);
  auto unidentifiable = [&](const Edge& e) {
    return std::binary_search(rep.unidentifiable.begin(), rep.unidentifiable.end(), e);
  };
  if (!unidentifiable(bridge)) return false;
  for (const auto& e : g.edges()) {
    if (e.adjacent_to(bridge) && !unidentifiable(e)) return false;
  }
  return true;
}

bool check_corollary1(const Graph& g, const MonitorSet& m, std::size_t cap) {
  const auto h = interior_graph(g, m);
  const auto rep = analyze(g, m, cap);
  const Edge direct = Edge::of(m[0], m[1]);
  for (const auto& e : h.exterior_links) {
    if (e == direct) continue;
    if (!std::binary_search(rep.unidentifiable.begin(), rep.unidentifiable.end(), e)) return false;
  }
  return true;
}

std::string rational_to_string(const mpq_class& q) {
  mpq_class c = q;
  c.canonicalize();
  return c.get_str();
}

mpq_class parse_rational(std::string_view text) {
  auto bad = [&] { return Error(ErrorCode::kInvalidWeight, "not a rational number: '" + std::string(text) + "'"); };
  if (text.empty()) throw bad();
  std::string s(text);
  const auto dot = s.find('.');
  if (dot != std::string::npos) {
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    const std::size_t scale = s.size() - dot - 1;
    std::size_t start = (digits[0] == '-' || digits[0] == '+') ? 1 : 0;
    if (scale == 0 || digits.size() <= start ||
        !std::all_of(digits.begin() + start, digits.end(), [](unsigned char ch) { return std::isdigit(ch); })) {
      throw bad();
    }
    if (digits[0] == '+') digits.erase(0, 1);
    mpz_class num(digits, 10);
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, scale);
    mpq_class q(num, den);
    q.canonicalize();
    return q;
  }
  for (std::size_t i = 0; i < s.size(); ++i) {
    const unsigned char ch = s[i];
    if (!(std::isdigit(ch) || ch == '/' || (i == 0 && ch == '-'))) throw bad();
  }
  mpq_class q;
  if (q.set_str(s, 10) != 0 || (s.find('/') != std::string::npos && sgn(q.get_den()) == 0)) throw bad();
  if (s.find('/') != std::string::npos && s.substr(s.find('/') + 1).find_first_not_of('0') == std::string::npos) {
    throw bad();
  }
  q.canonicalize();
  return q;
}

MetricAssignment parse_weights(std::string_view text, const Graph& g) {
  std::map<Edge, mpq_class> weights;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream fields(line);
    std::string a, b, value, extra;
    if (!(fields >> a)) continue;
    if (!(fields >> b >> value) || (fields >> extra)) {
      throw Error(ErrorCode::kInvalidWeight, "weights line " + std::to_string(lineno) + ": expected 'u v value'");
    }
    NodeId u = 0, v = 0;
    try {
      u = static_cast<NodeId>(std::stoul(a));
      v = static_cast<NodeId>(std::stoul(b));
    } catch (const std::exception&) {
      throw Error(ErrorCode::kInvalidWeight, "weights line " + std::to_string(lineno) + ": bad node id");
    }
    const Edge e = Edge::of(u, v);
    if (!weights.emplace(e, parse_rational(value)).second) {
      throw Error(ErrorCode::kInvalidWeight, "weights line " + std::to_string(lineno) + ": duplicate " + to_string(e));
    }
  }
  return MetricAssignment(g, std::move(weights));
}

}  // namespace linkscope
