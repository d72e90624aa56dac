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

#include "direct/selection.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <tuple>

namespace direct {

std::string_view threshold_mode_name(ThresholdMode mode) {
  switch (mode) {
    case ThresholdMode::Original: return "original";
    case ThresholdMode::Median: return "median";
    case ThresholdMode::Average: return "average";
  }
  return "?";
}

ThresholdMode parse_threshold_mode(std::string_view name) {
  for (auto m : {ThresholdMode::Original, ThresholdMode::Median, ThresholdMode::Average}) {
    if (threshold_mode_name(m) == name) return m;
  }
  throw std::invalid_argument("unknown threshold mode: " + std::string(name));
}

void SelectionParams::validate() const {
  if (!(epsilon >= 0.0) || !std::isfinite(epsilon)) throw std::invalid_argument("epsilon must be finite and >= 0");
  if (subdivision_limit_factor <= 0) throw std::invalid_argument("subdivision limit must be positive");
}

GroupedPool::GroupedPool(double delta_scale) : delta_scale_(delta_scale) {
  if (!(delta_scale > 0.0) || !std::isfinite(delta_scale)) throw std::invalid_argument("pool: delta scale must be positive");
}

void GroupedPool::insert(PoolEntry entry) {
  if (index_.count(entry.id)) throw std::invalid_argument("pool: duplicate id " + std::to_string(entry.id));
  auto [it, fresh] = group_of_key_.try_emplace(entry.key, groups_.size());
  if (fresh) {
    Group g;
    g.key = entry.key;
    g.delta = delta_scale_ * measure(entry.key);
    g.total_splits = entry.key.total();
    groups_.push_back(std::move(g));
  }
  const std::size_t gi = it->second;
  groups_[gi].members.emplace(entry.value, entry.id);
  index_.emplace(entry.id, entries_.size());
  entry_group_.push_back(gi);
  entries_.push_back(std::move(entry));
}

void GroupedPool::erase(std::uint64_t id) {
  auto it = index_.find(id);
  if (it == index_.end()) throw std::invalid_argument("pool: unknown id " + std::to_string(id));
  const std::size_t pos = it->second;
  groups_[entry_group_[pos]].members.erase({entries_[pos].value, id});
  index_.erase(it);
  const std::size_t last = entries_.size() - 1;
  if (pos != last) {
    entries_[pos] = std::move(entries_[last]);
    entry_group_[pos] = entry_group_[last];
    index_[entries_[pos].id] = pos;
  }
  entries_.pop_back();
  entry_group_.pop_back();
}

const PoolEntry& GroupedPool::entry(std::uint64_t id) const {
  auto it = index_.find(id);
  if (it == index_.end()) throw std::invalid_argument("pool: unknown id " + std::to_string(id));
  return entries_[it->second];
}

double GroupedPool::delta_of(std::uint64_t id) const {
  auto it = index_.find(id);
  if (it == index_.end()) throw std::invalid_argument("pool: unknown id " + std::to_string(id));
  return groups_[entry_group_[it->second]].delta;
}

namespace {

// Sort ascending by (delta, value, id) and keep the first of each delta.
template <typename T, typename Key>
void dedupe_by_delta(std::vector<T>& v, Key key) {
  std::sort(v.begin(), v.end(), [&](const T& a, const T& b) { return key(a) < key(b); });
  auto last = std::unique(v.begin(), v.end(), [&](const T& a, const T& b) { return std::get<0>(key(a)) == std::get<0>(key(b)); });
  v.erase(last, v.end());
}

double cross(const HullPoint& o, const HullPoint& a, const HullPoint& b) {
  return (a.delta - o.delta) * (b.value - o.value) - (a.value - o.value) * (b.delta - o.delta);
}

}  // namespace

std::vector<HullPoint> group_bests(const GroupedPool& pool) {
  std::vector<HullPoint> out;
  for (const auto& g : pool.groups()) {
    if (g.members.empty()) continue;
    auto [value, id] = g.best();
    out.push_back({g.delta, value, id});
  }
  dedupe_by_delta(out, [](const HullPoint& p) { return std::make_tuple(p.delta, p.value, p.id); });
  return out;
}

std::vector<std::size_t> lower_right_hull(const std::vector<HullPoint>& points) {
  if (points.empty()) return {};
  std::size_t start = 0;
  for (std::size_t i = 1; i < points.size(); ++i) {
    if (points[i].value <= points[start].value) start = i;
  }
  std::vector<std::size_t> hull;
  for (std::size_t i = start; i < points.size(); ++i) {
    while (hull.size() >= 2 && cross(points[hull[hull.size() - 2]], points[hull.back()], points[i]) < 0.0) {
      hull.pop_back();
    }
    hull.push_back(i);
  }
  return hull;
}

double io_threshold(double f_min, const ValueStats& stats, const SelectionParams& params) {
  switch (params.threshold_mode) {
    case ThresholdMode::Original: return f_min - params.epsilon * std::abs(f_min);
    case ThresholdMode::Median: return f_min - params.epsilon * std::abs(f_min - stats.median);
    case ThresholdMode::Average: return f_min - params.epsilon * std::abs(f_min - stats.average);
  }
  return f_min;
}

std::vector<std::uint64_t> select_io(const GroupedPool& pool, double f_min, const ValueStats& stats,
                                     const SelectionParams& params) {
  const auto points = group_bests(pool);
  const auto hull = lower_right_hull(points);
  if (hull.empty()) return {};
  const double threshold = io_threshold(f_min, stats, params);

  std::vector<std::uint64_t> out;
  for (std::size_t h = 0; h + 1 < hull.size(); ++h) {
    const HullPoint& p = points[hull[h]];
    const HullPoint& q = points[hull[h + 1]];
    const double rate = (q.value - p.value) / (q.delta - p.delta);
    if (p.value - rate * p.delta <= threshold) out.push_back(p.id);
  }
  out.push_back(points[hull.back()].id);  // unbounded rate: always passes
  return out;
}

std::vector<std::uint64_t> select_ia(const GroupedPool& pool, Eigen::Index n, const SelectionParams& params) {
  const long limit = static_cast<long>(params.subdivision_limit_factor) * static_cast<long>(n);
  std::vector<std::pair<double, std::uint64_t>> picked;  // (delta, id)
  for (const auto& g : pool.groups()) {
    if (g.members.empty() || g.total_splits >= limit) continue;
    picked.emplace_back(g.delta, g.best().second);
  }
  std::sort(picked.begin(), picked.end());
  std::vector<std::uint64_t> out;
  for (const auto& p : picked) out.push_back(p.second);
  return out;
}

std::vector<std::uint64_t> select_gl(const GroupedPool& pool, const Eigen::VectorXd& x_min,
                                     const SelectionParams& params) {
  std::set<std::uint64_t> chosen;

  // Step G: value front, scanned from the largest delta down.
  const auto bests = group_bests(pool);
  double running = std::numeric_limits<double>::infinity();
  for (auto it = bests.rbegin(); it != bests.rend(); ++it) {
    if (it->value < running) {
      chosen.insert(it->id);
      running = it->value;
    }
  }

  if (params.gl_local_enabled) {
    // Step L: per group, the member nearest the incumbent.
    const auto& groups = pool.groups();
    std::vector<std::pair<double, std::uint64_t>> nearest(groups.size(),
                                                          {std::numeric_limits<double>::infinity(), 0});
    std::vector<bool> seen(groups.size(), false);
    const auto& entries = pool.entries();
    const auto& owner = pool.entry_groups();
    for (std::size_t i = 0; i < entries.size(); ++i) {
      const double d = (entries[i].point - x_min).squaredNorm();
      auto& slot = nearest[owner[i]];
      const std::pair<double, std::uint64_t> cand{d, entries[i].id};
      if (!seen[owner[i]] || cand < slot) slot = cand;
      seen[owner[i]] = true;
    }
    std::vector<std::tuple<double, double, std::uint64_t>> front;  // (delta, dist2, id)
    for (std::size_t g = 0; g < groups.size(); ++g) {
      if (seen[g]) front.emplace_back(groups[g].delta, nearest[g].first, nearest[g].second);
    }
    dedupe_by_delta(front, [](const auto& t) { return t; });
    double closest = std::numeric_limits<double>::infinity();
    for (auto it = front.rbegin(); it != front.rend(); ++it) {
      if (std::get<1>(*it) < closest) {
        chosen.insert(std::get<2>(*it));
        closest = std::get<1>(*it);
      }
    }
  }
  return {chosen.begin(), chosen.end()};
}

}  // namespace direct
