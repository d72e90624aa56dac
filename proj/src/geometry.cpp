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

#include "direct/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace direct {

namespace {

std::uint64_t ipow(std::uint64_t base, int exp) {
  std::uint64_t r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

}  // namespace

std::string_view scheme_name(Scheme scheme) {
  switch (scheme) {
    case Scheme::NDTC: return "N-DTC";
    case Scheme::OneDTC: return "1-DTC";
    case Scheme::OneDTDV: return "1-DTDV";
    case Scheme::OneDBDP: return "1-DBDP";
  }
  return "?";
}

Scheme parse_scheme(std::string_view name) {
  for (Scheme s : {Scheme::NDTC, Scheme::OneDTC, Scheme::OneDTDV, Scheme::OneDBDP}) {
    if (scheme_name(s) == name) return s;
  }
  throw std::invalid_argument("unknown partitioning scheme: " + std::string(name));
}

int scheme_base(Scheme scheme) { return scheme == Scheme::OneDBDP ? 2 : 3; }

// 2 * 3^32 and 3 * 2^50 are both below 2^53, so every lattice coordinate the
// schemes produce is a quotient of two exact doubles.
int max_depth(Scheme scheme) { return scheme == Scheme::OneDBDP ? 50 : 32; }

Domain::Domain(Eigen::VectorXd lo, Eigen::VectorXd up) : lower(std::move(lo)), upper(std::move(up)) {
  if (lower.size() == 0 || lower.size() != upper.size()) {
    throw std::invalid_argument("domain: bound vectors must be non-empty and of equal length");
  }
  for (Eigen::Index j = 0; j < lower.size(); ++j) {
    if (!(lower[j] < upper[j]) || !std::isfinite(lower[j]) || !std::isfinite(upper[j])) {
      throw std::invalid_argument("domain: lower bound must be strictly below upper bound in dimension " +
                                  std::to_string(j + 1));
    }
  }
}

bool Domain::contains(const Eigen::VectorXd& x, double tol) const {
  if (x.size() != dimension()) return false;
  for (Eigen::Index j = 0; j < x.size(); ++j) {
    const double slack = tol * (upper[j] - lower[j]);
    if (x[j] < lower[j] - slack || x[j] > upper[j] + slack) return false;
  }
  return true;
}

int SizeKey::total() const { return std::accumulate(counts.begin(), counts.end(), 0); }

double HyperRectangle::lattice(Eigen::Index j, std::uint64_t num, std::uint64_t den) const {
  const auto cells_per_side = ipow(static_cast<std::uint64_t>(base()), splits[j]);
  return static_cast<double>(cells[j] * den + num) / static_cast<double>(den * cells_per_side);
}

double HyperRectangle::lower(Eigen::Index j) const { return lattice(j, 0, 1); }
double HyperRectangle::upper(Eigen::Index j) const { return lattice(j, 1, 1); }

double HyperRectangle::side(Eigen::Index j) const {
  return 1.0 / static_cast<double>(ipow(static_cast<std::uint64_t>(base()), splits[j]));
}

Eigen::VectorXd HyperRectangle::lo() const {
  Eigen::VectorXd v(dimension());
  for (Eigen::Index j = 0; j < v.size(); ++j) v[j] = lower(j);
  return v;
}

Eigen::VectorXd HyperRectangle::hi() const {
  Eigen::VectorXd v(dimension());
  for (Eigen::Index j = 0; j < v.size(); ++j) v[j] = upper(j);
  return v;
}

Eigen::VectorXd HyperRectangle::sides() const {
  Eigen::VectorXd v(dimension());
  for (Eigen::Index j = 0; j < v.size(); ++j) v[j] = side(j);
  return v;
}

Eigen::VectorXd HyperRectangle::center() const {
  Eigen::VectorXd v(dimension());
  for (Eigen::Index j = 0; j < v.size(); ++j) v[j] = lattice(j, 1, 2);
  return v;
}

double HyperRectangle::volume() const { return sides().prod(); }

HyperRectangle HyperRectangle::child(Eigen::Index j, int slot) const {
  HyperRectangle c;
  c.scheme = scheme;
  c.splits = splits;
  c.cells = cells;
  c.splits[j] += 1;
  c.cells[j] = cells[j] * static_cast<std::uint64_t>(base()) + static_cast<std::uint64_t>(slot);
  return c;
}

int HyperRectangle::min_splits() const { return *std::min_element(splits.begin(), splits.end()); }

int HyperRectangle::total_splits() const { return std::accumulate(splits.begin(), splits.end(), 0); }

std::vector<Eigen::Index> HyperRectangle::longest_dims() const {
  const int t = min_splits();
  std::vector<Eigen::Index> dims;
  for (Eigen::Index j = 0; j < dimension(); ++j) {
    if (splits[j] == t) dims.push_back(j);
  }
  return dims;
}

const SamplePoint& HyperRectangle::representative() const {
  if (samples.empty()) throw std::logic_error("representative: rectangle holds no samples");
  const SamplePoint* best = &samples.front();
  for (const auto& s : samples) {
    if (s.value < best->value) best = &s;
  }
  return *best;
}

double HyperRectangle::selection_value() const {
  if (scheme == Scheme::OneDTDV && samples.size() == 2) return 0.5 * (samples[0].value + samples[1].value);
  return representative().value;
}

HyperRectangle normalize(const Domain& domain, Scheme scheme) {
  // Re-validate: a default-constructed or hand-edited Domain may be degenerate.
  Domain checked(domain.lower, domain.upper);
  HyperRectangle unit;
  unit.scheme = scheme;
  unit.splits.assign(static_cast<std::size_t>(checked.dimension()), 0);
  unit.cells.assign(static_cast<std::size_t>(checked.dimension()), 0);
  unit.creation_index = 0;
  return unit;
}

Eigen::VectorXd to_unit(const Eigen::VectorXd& x, const Domain& domain) {
  if (x.size() != domain.dimension()) throw std::invalid_argument("to_unit: dimension mismatch");
  return (x - domain.lower).cwiseQuotient((domain.upper - domain.lower).cwiseAbs());
}

SizeKey size_key(const HyperRectangle& rect) {
  SizeKey key{rect.base(), rect.splits};
  std::sort(key.counts.begin(), key.counts.end());
  return key;
}

double measure(const SizeKey& key) {
  double sum = 0.0;
  for (int t : key.counts) {
    const double s = 1.0 / static_cast<double>(ipow(static_cast<std::uint64_t>(key.base), t));
    sum += s * s;
  }
  return 0.5 * std::sqrt(sum);
}

double measure(const HyperRectangle& rect) { return measure(size_key(rect)); }

}  // namespace direct
