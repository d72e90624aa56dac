// Copyright 2026 The direct-variants Authors
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

#pragma once

#include "direct/geometry.hpp"
#include "direct/partitioning.hpp"
#include "direct/selection.hpp"

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <queue>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace direct {

enum class SelectionScheme { IO, IA, GL };

std::string_view selection_name(SelectionScheme s);
SelectionScheme parse_selection(std::string_view name);

/// One of the twelve variants, e.g. "1-DBDP-GL".
struct AlgorithmSpec {
  SelectionScheme selection = SelectionScheme::IO;
  Scheme partitioning = Scheme::NDTC;
  SelectionParams params;

  std::string name() const;
  static AlgorithmSpec parse(std::string_view name);
  /// All twelve, partitioning-major in the order N-DTC, 1-DTC, 1-DTDV, 1-DBDP.
  static std::vector<AlgorithmSpec> all();
};

struct StopCriteria {
  double pe_tolerance = 1e-2;
  std::uint64_t max_evaluations = 1'000'000;
  std::optional<std::uint64_t> max_iterations;
  std::optional<double> vicinity_delta;  // needs a known minimizer

  void validate() const;
};

/// What a run optimizes: objective in original coordinates plus what is known
/// about its minimum.
struct Objective {
  std::function<double(const Eigen::VectorXd&)> f;
  Domain domain;
  std::optional<double> f_star;
  std::optional<Eigen::VectorXd> x_star;
};

enum class TerminalStatus { Running, Solved, BudgetExhausted, IterationLimit, ResolutionExhausted, EvaluationError };

std::string_view status_name(TerminalStatus s);
TerminalStatus parse_status(std::string_view name);

struct IterationRecord {
  std::uint64_t k = 0;
  std::uint64_t m = 0;
  double f_min = 0.0;
  Eigen::VectorXd x_min;  // original coordinates
  double pe = 0.0;        // NaN when f* is unknown
  std::size_t poh_count = 0;
};

struct RunTrace {
  std::string algorithm;
  std::vector<IterationRecord> records;  // k = 0 is initialization
  TerminalStatus status = TerminalStatus::Running;
  std::string message;

  const IterationRecord& last() const { return records.back(); }
  std::uint64_t evaluations() const { return records.empty() ? 0 : records.back().m; }
};

double percent_error(double f_val, double f_star);
bool vicinity_hit(const Eigen::VectorXd& x, const Eigen::VectorXd& x_star, const Domain& domain, double delta);

/// Columns k,m,f_min,pe,poh_count,status; reals with 17 significant digits.
void write_trace_csv(std::ostream& os, const RunTrace& trace);
std::string format_real(double v);

/// Called after every subdivision with the parent and the result (children
/// already carry their creation indices).
using SubdivisionObserver = std::function<void(const HyperRectangle&, const SubdivisionResult&)>;

class Solver;

/// Called once per completed iteration (including initialization, k = 0).
using IterationObserver = std::function<void(const Solver&, const IterationRecord&)>;

class Solver {
 public:
  Solver(Objective objective, AlgorithmSpec spec, StopCriteria stop);

  void set_observer(SubdivisionObserver observer) { observer_ = std::move(observer); }
  void set_iteration_observer(IterationObserver observer) { iteration_observer_ = std::move(observer); }

  RunTrace run();

  const GroupedPool& pool() const { return pool_; }
  /// Every live rectangle, including those too deep to split further.
  const std::unordered_map<std::uint64_t, HyperRectangle>& rectangles() const { return rects_; }
  std::uint64_t evaluations() const { return m_; }

 private:
  double evaluate(const Eigen::VectorXd& c);
  ValueStats stats() const;
  std::vector<std::uint64_t> select();
  void add(HyperRectangle rect);
  void record(std::uint64_t k, std::size_t poh_count);
  TerminalStatus check_stop(std::uint64_t k) const;

  Objective objective_;
  AlgorithmSpec spec_;
  StopCriteria stop_;
  SubdivisionObserver observer_;
  IterationObserver iteration_observer_;

  GroupedPool pool_;
  std::unordered_map<std::uint64_t, HyperRectangle> rects_;
  SplitLedger ledger_;
  std::uint64_t next_id_ = 0;

  std::uint64_t m_ = 0;
  double f_min_ = 0.0;
  Eigen::VectorXd x_min_;  // normalized
  double value_sum_ = 0.0;
  // 1-DTDV vertices are shared by neighbouring rectangles; their values are
  // looked up here instead of being evaluated again. Keyed by exact bits.
  std::unordered_map<std::string, double> vertex_values_;
  std::priority_queue<double> low_half_;
  std::priority_queue<double, std::vector<double>, std::greater<double>> high_half_;

  RunTrace trace_;
};

RunTrace run(const Objective& objective, const AlgorithmSpec& spec, const StopCriteria& stop);

}  // namespace direct
