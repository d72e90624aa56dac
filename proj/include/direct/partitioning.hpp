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

#include <functional>
#include <stdexcept>
#include <vector>

namespace direct {

/// Maps a normalized point to its objective value.
using Evaluator = std::function<double(const Eigen::VectorXd&)>;

class EvaluationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Run-wide count of how many times each dimension has been split.
class SplitLedger {
 public:
  SplitLedger() = default;
  explicit SplitLedger(Eigen::Index n) : counts_(static_cast<std::size_t>(n), 0) {}

  std::uint64_t count(Eigen::Index j) const { return counts_[static_cast<std::size_t>(j)]; }
  void record(Eigen::Index j) { ++counts_[static_cast<std::size_t>(j)]; }
  const std::vector<std::uint64_t>& counts() const { return counts_; }

 private:
  std::vector<std::uint64_t> counts_;
};

struct SubdivisionResult {
  std::vector<HyperRectangle> children;  // creation_index left for the caller
  std::vector<SamplePoint> new_points;   // in evaluation order
  std::uint64_t retired = 0;             // creation index of the parent
};

/// Initial sample locations in the unit cube.
std::vector<Eigen::VectorXd> init_samples(Scheme scheme, Eigen::Index n);

/// Longest side; ties go to the least-split dimension in `ledger`, then to the
/// lowest index. Pass nullptr to skip the ledger criterion.
Eigen::Index choose_split_dimension(const HyperRectangle& rect, const SplitLedger* ledger);

SubdivisionResult subdivide_ndtc(const HyperRectangle& rect, const Evaluator& evaluate);
SubdivisionResult subdivide_1dtc(const HyperRectangle& rect, SplitLedger& ledger, const Evaluator& evaluate);
SubdivisionResult subdivide_1dtdv(const HyperRectangle& rect, SplitLedger& ledger, const Evaluator& evaluate);
SubdivisionResult subdivide_1dbdp(const HyperRectangle& rect, const Evaluator& evaluate);

/// Dispatches on rect.scheme. Throws ResolutionExhausted when the rectangle is
/// already at max_depth() along its longest side.
SubdivisionResult subdivide(const HyperRectangle& rect, SplitLedger& ledger, const Evaluator& evaluate);

/// Structural check of a rectangle's samples for its scheme: the midpoint for
/// center schemes, opposite vertices for 1-DTDV, and the 1/3, 2/3 interior
/// diagonal points for 1-DBDP.
bool samples_well_formed(const HyperRectangle& rect, double tol = 1e-12);

}  // namespace direct
