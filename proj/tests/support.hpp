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

// Helpers shared by the unit tests and the acceptance binary.

#pragma once

#include "direct/partitioning.hpp"
#include "direct/selection.hpp"
#include "direct/solver.hpp"

#include <cmath>
#include <cstring>
#include <limits>
#include <numbers>
#include <random>
#include <string>
#include <vector>

namespace direct::testing {

inline double branin(const Eigen::VectorXd& x) {
  constexpr double pi = std::numbers::pi;
  const double a = 1.0, b = 5.1 / (4 * pi * pi), c = 5 / pi, r = 6, s = 10, t = 1 / (8 * pi);
  const double u = x[1] - b * x[0] * x[0] + c * x[0] - r;
  return a * u * u + s * (1 - t) * std::cos(x[0]) + s;
}

inline Domain branin_domain() { return Domain(Eigen::Vector2d(-5, 0), Eigen::Vector2d(10, 15)); }

inline Objective branin_objective() {
  Objective o;
  o.f = branin;
  o.domain = branin_domain();
  o.f_star = 0.39788735772973816;
  return o;
}

// Labeled samples of the first two iterations on Branin, normalized.
struct GoldenLabel {
  Eigen::Vector2d at;
  double value;
};

struct GoldenCase {
  std::string algorithm;
  std::vector<GoldenLabel> labels;
};

inline std::vector<GoldenCase> golden_cases() {
  return {{"N-DTC-IO",
           {{{0.5, 0.5}, 24.13},
            {{1.0 / 6, 0.5}, 13.10},
            {{5.0 / 6, 0.5}, 51.39},
            {{0.5, 1.0 / 6}, 2.41},
            {{0.5, 5.0 / 6}, 95.84},
            {{1.0 / 6, 1.0 / 6}, 70.96},
            {{5.0 / 6, 1.0 / 6}, 14.69}}},
          {"1-DTC-IO",
           {{{0.5, 0.5}, 24.13},
            {{1.0 / 6, 0.5}, 13.10},
            {{5.0 / 6, 0.5}, 51.39},
            {{1.0 / 6, 1.0 / 6}, 70.96},
            {{1.0 / 6, 5.0 / 6}, 5.24}}},
          {"1-DTDV-IO",
           {{{0, 0}, 308.12},
            {{1, 1}, 145.87},
            {{2.0 / 3, 0}, 14.34},
            {{1.0 / 3, 1}, 100.60},
            {{2.0 / 3, 2.0 / 3}, 88.90},
            {{1.0 / 3, 1.0 / 3}, 20.60}}},
          {"1-DBDP-IO",
           {{{1.0 / 3, 1.0 / 3}, 20.60},
            {{2.0 / 3, 2.0 / 3}, 88.90},
            {{5.0 / 6, 1.0 / 3}, 26.79},
            {{1.0 / 6, 2.0 / 3}, 2.92},
            {{1.0 / 6, 1.0 / 6}, 70.96},
            {{1.0 / 3, 5.0 / 6}, 61.85}}}};
}

struct Sampled {
  Eigen::VectorXd at;  // normalized
  double value;
};

// Every evaluation of the first two iterations of `algorithm` on Branin.
inline std::vector<Sampled> first_two_iterations(const std::string& algorithm, RunTrace* trace_out = nullptr) {
  std::vector<Sampled> seen;
  Objective o = branin_objective();
  const Domain d = o.domain;
  o.f = [&seen, d](const Eigen::VectorXd& x) {
    const double v = branin(x);
    seen.push_back({to_unit(x, d), v});
    return v;
  };
  StopCriteria stop;
  stop.max_iterations = 2;
  auto trace = run(o, AlgorithmSpec::parse(algorithm), stop);
  if (trace_out) *trace_out = std::move(trace);
  return seen;
}

// Evaluator on normalized coordinates for `f` over `domain`.
inline Evaluator on_unit(std::function<double(const Eigen::VectorXd&)> f, Domain domain) {
  return [f = std::move(f), domain = std::move(domain)](const Eigen::VectorXd& c) { return f(denormalize(c, domain)); };
}

// Root rectangle with its initial samples evaluated.
inline HyperRectangle seeded_root(Scheme scheme, const Domain& domain, const Evaluator& eval) {
  HyperRectangle root = normalize(domain, scheme);
  for (auto& c : init_samples(scheme, domain.dimension())) {
    const double v = eval(c);
    root.samples.push_back({std::move(c), v});
  }
  return root;
}

// Exact bit pattern of a point, for hashing and equality.
inline std::string point_key(const Eigen::VectorXd& p) {
  std::string s(static_cast<std::size_t>(p.size()) * sizeof(double), '\0');
  std::memcpy(s.data(), p.data(), s.size());
  return s;
}

inline bool inside_half_open(const HyperRectangle& r, const Eigen::VectorXd& x) {
  for (Eigen::Index j = 0; j < x.size(); ++j) {
    if (x[j] < r.lower(j) || x[j] >= r.upper(j)) return false;
  }
  return true;
}

inline bool near_point(const Eigen::VectorXd& a, const Eigen::VectorXd& b, double tol = 1e-12) {
  return a.size() == b.size() && (a - b).cwiseAbs().maxCoeff() <= tol;
}

// ---------------------------------------------------------------------------
// Random selection pools. Split counts follow the schemes (always a longest
// side), so distinct keys never share a delta.

struct RandomPoolSpec {
  int n = 2;
  int size = 100;
  Scheme scheme = Scheme::OneDTC;
  bool value_ties = false;  // reuse values inside and across groups
};

inline RandomPoolSpec random_pool_spec(std::mt19937_64& rng) {
  RandomPoolSpec spec;
  spec.n = std::uniform_int_distribution<int>(1, 8)(rng);
  spec.size = std::uniform_int_distribution<int>(1, 500)(rng);
  spec.scheme = std::bernoulli_distribution(0.5)(rng) ? Scheme::OneDTC : Scheme::OneDBDP;
  spec.value_ties = std::bernoulli_distribution(0.5)(rng);
  return spec;
}

inline Eigen::VectorXd random_unit_point(int n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0, 1);
  Eigen::VectorXd x(n);
  for (int j = 0; j < n; ++j) x[j] = u(rng);
  return x;
}

inline SizeKey balanced_key(Scheme scheme, int n, int total) {
  SizeKey k;
  k.base = scheme_base(scheme);
  k.counts.assign(static_cast<std::size_t>(n), total / n);
  for (int r = 0; r < total % n; ++r) k.counts[static_cast<std::size_t>(n - 1 - r)] += 1;
  return k;
}

inline std::vector<PoolEntry> random_entries(const RandomPoolSpec& spec, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> total_dist(0, std::min(6 * spec.n, 40));
  std::uniform_real_distribution<double> value_dist(-5.0, 5.0), unit(0.0, 1.0);
  std::vector<double> palette;
  std::vector<PoolEntry> out;
  for (int i = 0; i < spec.size; ++i) {
    PoolEntry e;
    e.id = static_cast<std::uint64_t>(i) * 3 + 1;
    e.key = balanced_key(spec.scheme, spec.n, total_dist(rng));
    e.value = value_dist(rng);
    if (spec.value_ties && !palette.empty() && unit(rng) < 0.3) {
      e.value = palette[std::uniform_int_distribution<std::size_t>(0, palette.size() - 1)(rng)];
    }
    palette.push_back(e.value);
    e.point = Eigen::VectorXd(spec.n);
    for (int j = 0; j < spec.n; ++j) e.point[j] = unit(rng);
    out.push_back(std::move(e));
  }
  std::shuffle(out.begin(), out.end(), rng);
  return out;
}

inline GroupedPool make_pool(const std::vector<PoolEntry>& entries, double delta_scale = 1.0,
                             double value_shift = 0.0) {
  GroupedPool pool(delta_scale);
  for (auto e : entries) {
    e.value += value_shift;
    pool.insert(std::move(e));
  }
  return pool;
}

// ---------------------------------------------------------------------------
// Brute-force oracles over raw entries.

struct RawRect {
  std::uint64_t id;
  double delta;
  double value;
  double dist;
  int total;
  SizeKey key;
};

inline std::vector<RawRect> raw_rects(const std::vector<PoolEntry>& entries, double delta_scale,
                                      const Eigen::VectorXd* x_min = nullptr, double value_shift = 0.0) {
  std::vector<RawRect> out;
  for (const auto& e : entries) {
    const double dist = x_min ? (e.point - *x_min).norm() : 0.0;
    out.push_back({e.id, delta_scale * measure(e.key), e.value + value_shift, dist, e.key.total(), e.key});
  }
  return out;
}

// Potential optimality straight from the existence condition: some rate
// L > 0 makes r's lower bound the smallest, with the epsilon guard.
inline std::vector<std::uint64_t> io_oracle(const std::vector<RawRect>& rects, double threshold) {
  std::vector<std::uint64_t> out;
  for (const auto& r : rects) {
    bool shadowed = false;
    double l_low = 0.0, l_high = std::numeric_limits<double>::infinity();
    for (const auto& s : rects) {
      if (s.id == r.id) continue;
      if (s.delta == r.delta) {
        if (s.value < r.value || (s.value == r.value && s.id < r.id)) shadowed = true;
      } else if (s.delta < r.delta) {
        l_low = std::max(l_low, (r.value - s.value) / (r.delta - s.delta));
      } else {
        l_high = std::min(l_high, (s.value - r.value) / (s.delta - r.delta));
      }
    }
    if (shadowed || !(l_high > 0.0) || l_low > l_high) continue;
    if (std::isinf(l_high) || r.value - l_high * r.delta <= threshold) out.push_back(r.id);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<std::uint64_t> ia_oracle(const std::vector<RawRect>& rects, int limit) {
  std::vector<std::uint64_t> out;
  for (const auto& r : rects) {
    if (r.total >= limit) continue;
    bool best = true;
    for (const auto& s : rects) {
      if (s.id != r.id && s.key == r.key && (s.value < r.value || (s.value == r.value && s.id < r.id))) best = false;
    }
    if (best) out.push_back(r.id);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Non-dominated on (delta up, criterion down); equal (delta, criterion) keeps
// the lowest id.
template <typename Crit>
std::vector<std::uint64_t> pareto_oracle(const std::vector<RawRect>& rects, Crit crit) {
  std::vector<std::uint64_t> out;
  for (const auto& r : rects) {
    bool dominated = false;
    for (const auto& s : rects) {
      if (s.id == r.id) continue;
      if (s.delta > r.delta && crit(s) <= crit(r)) dominated = true;
      if (s.delta == r.delta && (crit(s) < crit(r) || (crit(s) == crit(r) && s.id < r.id))) dominated = true;
    }
    if (!dominated) out.push_back(r.id);
  }
  return out;
}

inline std::vector<std::uint64_t> gl_oracle(const std::vector<RawRect>& rects, bool local) {
  auto g = pareto_oracle(rects, [](const RawRect& r) { return r.value; });
  if (local) {
    auto l = pareto_oracle(rects, [](const RawRect& r) { return r.dist; });
    g.insert(g.end(), l.begin(), l.end());
  }
  std::sort(g.begin(), g.end());
  g.erase(std::unique(g.begin(), g.end()), g.end());
  return g;
}

inline std::vector<std::uint64_t> sorted(std::vector<std::uint64_t> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace direct::testing
