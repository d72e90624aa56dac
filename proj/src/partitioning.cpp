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

#include "direct/partitioning.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace direct {

namespace {

SamplePoint sample_at(Eigen::VectorXd coords, const Evaluator& evaluate) {
  const double value = evaluate(coords);
  if (!std::isfinite(value)) {
    std::ostringstream os;
    os << "objective returned a non-finite value at normalized point [" << coords.transpose() << "]";
    throw EvaluationError(os.str());
  }
  return SamplePoint{std::move(coords), value};
}

void require_samples(const HyperRectangle& rect, std::size_t count, const char* who) {
  if (rect.samples.size() != count) {
    throw std::invalid_argument(std::string(who) + ": rectangle has the wrong number of samples");
  }
}

void require_splittable(const HyperRectangle& rect) {
  if (!rect.splittable()) {
    throw ResolutionExhausted("rectangle " + std::to_string(rect.creation_index) +
                              " reached the maximum subdivision depth");
  }
}

bool near(double a, double b, double tol) { return std::abs(a - b) <= tol; }

}  // namespace

std::vector<Eigen::VectorXd> init_samples(Scheme scheme, Eigen::Index n) {
  switch (scheme) {
    case Scheme::NDTC:
    case Scheme::OneDTC:
      return {Eigen::VectorXd::Constant(n, 0.5)};
    case Scheme::OneDTDV:
      return {Eigen::VectorXd::Zero(n), Eigen::VectorXd::Ones(n)};
    case Scheme::OneDBDP:
      return {Eigen::VectorXd::Constant(n, 1.0 / 3.0), Eigen::VectorXd::Constant(n, 2.0 / 3.0)};
  }
  return {};
}

Eigen::Index choose_split_dimension(const HyperRectangle& rect, const SplitLedger* ledger) {
  const auto dims = rect.longest_dims();
  Eigen::Index best = dims.front();
  if (ledger == nullptr) return best;
  for (Eigen::Index j : dims) {
    if (ledger->count(j) < ledger->count(best)) best = j;
  }
  return best;
}

SubdivisionResult subdivide_ndtc(const HyperRectangle& rect, const Evaluator& evaluate) {
  require_samples(rect, 1, "subdivide_ndtc");
  require_splittable(rect);
  const SamplePoint& c = rect.samples.front();
  const auto dims = rect.longest_dims();

  SubdivisionResult out;
  out.retired = rect.creation_index;

  // Pair samples along each longest dimension sit at the centers of the outer
  // thirds: c -/+ (side/3) e_j.
  struct Pair {
    Eigen::Index dim;
    SamplePoint minus, plus;
    double best;
  };
  std::vector<Pair> pairs;
  pairs.reserve(dims.size());
  for (Eigen::Index j : dims) {
    Eigen::VectorXd lo_pt = c.coords, hi_pt = c.coords;
    lo_pt[j] = rect.lattice(j, 1, 6);
    hi_pt[j] = rect.lattice(j, 5, 6);
    Pair p{j, sample_at(std::move(lo_pt), evaluate), {}, 0.0};
    out.new_points.push_back(p.minus);
    p.plus = sample_at(std::move(hi_pt), evaluate);
    out.new_points.push_back(p.plus);
    p.best = std::min(p.minus.value, p.plus.value);
    pairs.push_back(std::move(p));
  }

  // Cut the dimension with the smallest w_j first so its samples land in the
  // largest children; equal w_j keeps the lower index first.
  std::stable_sort(pairs.begin(), pairs.end(), [](const Pair& a, const Pair& b) { return a.best < b.best; });

  HyperRectangle core = rect;
  core.samples.clear();
  for (auto& p : pairs) {
    HyperRectangle left = core.child(p.dim, 0);
    HyperRectangle right = core.child(p.dim, 2);
    left.samples = {std::move(p.minus)};
    right.samples = {std::move(p.plus)};
    out.children.push_back(std::move(left));
    out.children.push_back(std::move(right));
    core = core.child(p.dim, 1);
  }
  core.samples = {c};
  out.children.push_back(std::move(core));
  return out;
}

SubdivisionResult subdivide_1dtc(const HyperRectangle& rect, SplitLedger& ledger, const Evaluator& evaluate) {
  require_samples(rect, 1, "subdivide_1dtc");
  require_splittable(rect);
  const Eigen::Index j = choose_split_dimension(rect, &ledger);
  const SamplePoint& c = rect.samples.front();

  Eigen::VectorXd lo_pt = c.coords, hi_pt = c.coords;
  lo_pt[j] = rect.lattice(j, 1, 6);
  hi_pt[j] = rect.lattice(j, 5, 6);

  SubdivisionResult out;
  out.retired = rect.creation_index;
  out.new_points.push_back(sample_at(std::move(lo_pt), evaluate));
  out.new_points.push_back(sample_at(std::move(hi_pt), evaluate));
  ledger.record(j);

  for (int slot = 0; slot < 3; ++slot) out.children.push_back(rect.child(j, slot));
  out.children[0].samples = {out.new_points[0]};
  out.children[1].samples = {c};
  out.children[2].samples = {out.new_points[1]};
  return out;
}

SubdivisionResult subdivide_1dtdv(const HyperRectangle& rect, SplitLedger& ledger, const Evaluator& evaluate) {
  require_samples(rect, 2, "subdivide_1dtdv");
  require_splittable(rect);
  const Eigen::Index j = choose_split_dimension(rect, &ledger);
  const SamplePoint& v1 = rect.samples[0];
  const SamplePoint& v2 = rect.samples[1];

  const double p = rect.lattice(j, 1, 3);
  const double q = rect.lattice(j, 2, 3);
  const bool v1_low = v1.coords[j] < v2.coords[j];

  // A keeps v1's other coordinates and moves to the trisection point nearer
  // v2; B symmetrically.
  Eigen::VectorXd a = v1.coords, b = v2.coords;
  a[j] = v1_low ? q : p;
  b[j] = v1_low ? p : q;

  SubdivisionResult out;
  out.retired = rect.creation_index;
  out.new_points.push_back(sample_at(std::move(a), evaluate));
  out.new_points.push_back(sample_at(std::move(b), evaluate));
  ledger.record(j);
  const SamplePoint& A = out.new_points[0];
  const SamplePoint& B = out.new_points[1];

  for (int slot = 0; slot < 3; ++slot) out.children.push_back(rect.child(j, slot));
  auto& v1_third = out.children[v1_low ? 0 : 2];
  auto& v2_third = out.children[v1_low ? 2 : 0];
  v1_third.samples = {v1, B};
  out.children[1].samples = {A, B};
  v2_third.samples = {A, v2};
  return out;
}

SubdivisionResult subdivide_1dbdp(const HyperRectangle& rect, const Evaluator& evaluate) {
  require_samples(rect, 2, "subdivide_1dbdp");
  require_splittable(rect);
  const Eigen::Index j = choose_split_dimension(rect, nullptr);
  const bool first_low = rect.samples[0].coords[j] < rect.samples[1].coords[j];
  const SamplePoint& low = rect.samples[first_low ? 0 : 1];
  const SamplePoint& high = rect.samples[first_low ? 1 : 0];

  // `low` sits at the 2/3 point of the lower half, `high` at the 1/3 point of
  // the upper half. Each half gets the missing third point, borrowing the
  // other coordinates from the sample in the opposite half.
  Eigen::VectorXd low_partner = high.coords, high_partner = low.coords;
  low_partner[j] = rect.lattice(j, 1, 6);
  high_partner[j] = rect.lattice(j, 5, 6);

  SubdivisionResult out;
  out.retired = rect.creation_index;
  out.new_points.push_back(sample_at(std::move(low_partner), evaluate));
  out.new_points.push_back(sample_at(std::move(high_partner), evaluate));

  out.children.push_back(rect.child(j, 0));
  out.children.push_back(rect.child(j, 1));
  out.children[0].samples = {low, out.new_points[0]};
  out.children[1].samples = {high, out.new_points[1]};
  return out;
}

SubdivisionResult subdivide(const HyperRectangle& rect, SplitLedger& ledger, const Evaluator& evaluate) {
  switch (rect.scheme) {
    case Scheme::NDTC: return subdivide_ndtc(rect, evaluate);
    case Scheme::OneDTC: return subdivide_1dtc(rect, ledger, evaluate);
    case Scheme::OneDTDV: return subdivide_1dtdv(rect, ledger, evaluate);
    case Scheme::OneDBDP: return subdivide_1dbdp(rect, evaluate);
  }
  throw std::logic_error("subdivide: unknown scheme");
}

bool samples_well_formed(const HyperRectangle& rect, double tol) {
  const Eigen::Index n = rect.dimension();
  switch (rect.scheme) {
    case Scheme::NDTC:
    case Scheme::OneDTC: {
      if (rect.samples.size() != 1) return false;
      return (rect.samples[0].coords - rect.center()).cwiseAbs().maxCoeff() <= tol;
    }
    case Scheme::OneDTDV: {
      if (rect.samples.size() != 2) return false;
      const auto& s = rect.samples[0].coords;
      const auto& t = rect.samples[1].coords;
      for (Eigen::Index j = 0; j < n; ++j) {
        const double lo = rect.lower(j), hi = rect.upper(j);
        const bool ok = (near(s[j], lo, tol) && near(t[j], hi, tol)) || (near(s[j], hi, tol) && near(t[j], lo, tol));
        if (!ok) return false;
      }
      return true;
    }
    case Scheme::OneDBDP: {
      if (rect.samples.size() != 2) return false;
      const auto& s = rect.samples[0].coords;
      const auto& t = rect.samples[1].coords;
      for (Eigen::Index j = 0; j < n; ++j) {
        const double a = rect.lattice(j, 1, 3), b = rect.lattice(j, 2, 3);
        const bool ok = (near(s[j], a, tol) && near(t[j], b, tol)) || (near(s[j], b, tol) && near(t[j], a, tol));
        if (!ok) return false;
      }
      return true;
    }
  }
  return false;
}

}  // namespace direct
