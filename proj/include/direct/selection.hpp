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

#include <cstdint>
#include <map>
#include <set>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace direct {

enum class ThresholdMode { Original, Median, Average };

std::string_view threshold_mode_name(ThresholdMode mode);
ThresholdMode parse_threshold_mode(std::string_view name);

struct SelectionParams {
  double epsilon = 1e-4;
  ThresholdMode threshold_mode = ThresholdMode::Original;
  int subdivision_limit_factor = 50;  // IA skips groups with >= factor*n total splits
  bool gl_local_enabled = true;

  /// Throws std::invalid_argument on a negative epsilon or non-positive limit.
  void validate() const;
};

/// Statistics over every objective value seen so far in a run.
struct ValueStats {
  double median = 0.0;
  double average = 0.0;
};

/// Selection-relevant view of one live rectangle.
struct PoolEntry {
  std::uint64_t id = 0;  // creation index
  SizeKey key;
  double value = 0.0;     // representative value
  Eigen::VectorXd point;  // representative point, normalized
};

/// Live rectangles grouped by exact size class.
class GroupedPool {
 public:
  struct Group {
    SizeKey key;
    double delta = 0.0;
    int total_splits = 0;
    std::set<std::pair<double, std::uint64_t>> members;  // (value, id)

    std::pair<double, std::uint64_t> best() const { return *members.begin(); }
  };

  GroupedPool() = default;
  /// Every group's delta is multiplied by `delta_scale` (> 0).
  explicit GroupedPool(double delta_scale);

  void insert(PoolEntry entry);
  void erase(std::uint64_t id);
  bool contains(std::uint64_t id) const { return index_.count(id) != 0; }
  const PoolEntry& entry(std::uint64_t id) const;
  double delta_of(std::uint64_t id) const;

  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  /// Dense storage; order changes on erase.
  const std::vector<PoolEntry>& entries() const { return entries_; }
  /// Group ordinal of entries()[i].
  const std::vector<std::size_t>& entry_groups() const { return entry_group_; }

  /// Every group ever created, indexed by ordinal; some may be empty.
  const std::vector<Group>& groups() const { return groups_; }

 private:
  std::vector<PoolEntry> entries_;
  std::vector<std::size_t> entry_group_;
  std::unordered_map<std::uint64_t, std::size_t> index_;
  std::map<SizeKey, std::size_t> group_of_key_;
  std::vector<Group> groups_;
  double delta_scale_ = 1.0;
};

struct HullPoint {
  double delta = 0.0;
  double value = 0.0;
  std::uint64_t id = 0;
};

/// Lower convex hull of points sorted by ascending delta (distinct deltas),
/// restricted to the part to the right of the minimum value (the last
/// minimizer on ties). Collinear points are kept. Returns indices into
/// `points`, ascending.
std::vector<std::size_t> lower_right_hull(const std::vector<HullPoint>& points);

/// One best entry per distinct delta, ascending in delta. Ties on value go to
/// the lowest id.
std::vector<HullPoint> group_bests(const GroupedPool& pool);

double io_threshold(double f_min, const ValueStats& stats, const SelectionParams& params);

std::vector<std::uint64_t> select_io(const GroupedPool& pool, double f_min, const ValueStats& stats,
                                     const SelectionParams& params);
std::vector<std::uint64_t> select_ia(const GroupedPool& pool, Eigen::Index n, const SelectionParams& params);
std::vector<std::uint64_t> select_gl(const GroupedPool& pool, const Eigen::VectorXd& x_min,
                                     const SelectionParams& params);

}  // namespace direct
