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

#include "direct/problems.hpp"
#include "direct/solver.hpp"

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace direct {

struct MatrixConfig {
  std::vector<std::string> algorithms;  // empty: all twelve
  RosterFilter problems;
  DomainVariant variant;
  StopCriteria stop;
  SelectionParams params;
  std::string output_dir = "out";
  int parallelism = 1;
  bool write_traces = true;

  /// Keys: algorithms, problems{names,tags}, variant, max_evals, max_iters,
  /// pe_tol, eps, threshold, gl_local, output, parallelism, traces.
  /// Unknown keys are rejected.
  static MatrixConfig from_json_text(const std::string& text);
  static MatrixConfig load(const std::string& path);

  std::vector<AlgorithmSpec> resolved_algorithms() const;
  /// Throws std::invalid_argument if no algorithm or no problem resolves.
  void validate() const;
};

struct ManifestRow {
  std::string algorithm;
  std::string problem;  // id
  int n = 0;
  std::string variant = "default";
  std::string convexity;
  std::string modality;
  std::string status;
  std::uint64_t evaluations = 0;
  std::uint64_t iterations = 0;
  double f_min = 0.0;
  double pe = 0.0;
  std::uint64_t max_evals = 0;
  std::string trace_file;

  bool solved() const { return status == "solved"; }
};

/// Runs one (algorithm, problem) pair; exceptions become evaluation_error rows.
ManifestRow run_one(const AlgorithmSpec& spec, const Problem& problem, const DomainVariant& variant,
                    const StopCriteria& stop, RunTrace* trace_out = nullptr);

/// Runs the whole matrix on `parallelism` threads. Writes
/// <output>/manifest.csv and, if enabled, one trace per run under
/// <output>/traces/. Rows come back algorithm-major in config order.
std::vector<ManifestRow> run_matrix(const MatrixConfig& config);

void write_manifest_csv(std::ostream& os, const std::vector<ManifestRow>& rows);
std::vector<ManifestRow> read_manifest_csv(std::istream& is);

struct SummaryRow {
  std::string algorithm;
  std::string subset;
  std::size_t cases = 0;
  std::size_t failed = 0;
  double average = 0.0;  // failures counted at their budget
  double median = 0.0;
};

/// Subset names: all, n<=4, n>4, convex, non-convex, uni-modal, multi-modal.
std::vector<std::string> default_subsets();

/// Algorithms in first-seen order, each with one row per subset.
std::vector<SummaryRow> summarize(const std::vector<ManifestRow>& rows,
                                  const std::vector<std::string>& subsets = default_subsets());
void write_summary_csv(std::ostream& os, const std::vector<SummaryRow>& rows);

struct CurvePoint {
  double budget = 0.0;
  double proportion = 0.0;
};

/// `points` values spaced evenly in log10 between lo and hi, inclusive.
std::vector<double> log_budget_grid(double lo, double hi, int points = 200);

std::map<std::string, std::vector<CurvePoint>> operational_characteristics(const std::vector<ManifestRow>& rows,
                                                                           const std::vector<double>& grid);
void write_curves_csv(std::ostream& os, const std::map<std::string, std::vector<CurvePoint>>& curves);

}  // namespace direct
