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

#include <Eigen/Core>

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace direct {

/// The four ways a selected hyper-rectangle can be sampled and subdivided.
enum class Scheme {
  NDTC,     ///< n-dimensional trisection, center sampling
  OneDTC,   ///< trisection along one longest side, center sampling
  OneDTDV,  ///< trisection along one longest side, two diagonal vertices
  OneDBDP,  ///< bisection along one longest side, two interior diagonal points
};

std::string_view scheme_name(Scheme scheme);
Scheme parse_scheme(std::string_view name);

/// 3 for the trisection schemes, 2 for bisection.
int scheme_base(Scheme scheme);

/// Deepest per-dimension split level a scheme can reach while every lattice
/// point stays exactly representable and distinct in double precision.
int max_depth(Scheme scheme);

class ResolutionExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Box D = [a, b] in the original coordinates.
struct Domain {
  Eigen::VectorXd lower;
  Eigen::VectorXd upper;

  Domain() = default;
  /// Throws std::invalid_argument unless lower_j < upper_j for every j.
  Domain(Eigen::VectorXd lower, Eigen::VectorXd upper);

  Eigen::Index dimension() const { return lower.size(); }
  Eigen::VectorXd width() const { return upper - lower; }
  bool contains(const Eigen::VectorXd& x, double tol = 0.0) const;
};

struct SamplePoint {
  Eigen::VectorXd coords;  // normalized, in [0,1]^n
  double value = 0.0;
};

/// Canonical size class: the multiset of per-dimension split counts, sorted.
struct SizeKey {
  int base = 3;
  std::vector<int> counts;

  int total() const;
  auto operator<=>(const SizeKey&) const = default;
  bool operator==(const SizeKey&) const = default;
};

/// One cell of the normalized partition.
///
/// Along dimension j the cell is the `cells[j]`-th interval of the uniform
/// grid with `base^splits[j]` intervals, so bounds are exact rationals and the
/// side length is exactly base^-splits[j]. Floating-point coordinates are
/// derived on demand.
struct HyperRectangle {
  Scheme scheme = Scheme::NDTC;
  std::vector<int> splits;
  std::vector<std::uint64_t> cells;
  std::vector<SamplePoint> samples;
  std::uint64_t creation_index = 0;

  Eigen::Index dimension() const { return static_cast<Eigen::Index>(splits.size()); }
  int base() const { return scheme_base(scheme); }

  double lower(Eigen::Index j) const;
  double upper(Eigen::Index j) const;
  double side(Eigen::Index j) const;
  Eigen::VectorXd lo() const;
  Eigen::VectorXd hi() const;
  Eigen::VectorXd sides() const;
  Eigen::VectorXd center() const;
  double volume() const;

  /// Coordinate (cells[j]*den + num) / (den * base^splits[j]): a point of the
  /// cell expressed on a grid refined by `den` along j.
  double lattice(Eigen::Index j, std::uint64_t num, std::uint64_t den) const;

  /// The `slot`-th of `base` equal slabs along dimension j, without samples.
  HyperRectangle child(Eigen::Index j, int slot) const;

  /// Dimensions of maximal side length (minimal split count), ascending.
  std::vector<Eigen::Index> longest_dims() const;
  int min_splits() const;
  int total_splits() const;

  /// True when the longest side can still be divided within max_depth().
  bool splittable() const { return min_splits() < max_depth(scheme); }

  /// Sample with the lowest value; the first one on ties.
  const SamplePoint& representative() const;

  /// Value the selection rules rank this rectangle by: the sample value, the
  /// mean of the two vertex values for 1-DTDV, the lower of the two for 1-DBDP.
  double selection_value() const;
};

/// Unit cube [0,1]^n with no splits, creation index 0 and no samples.
HyperRectangle normalize(const Domain& domain, Scheme scheme);

/// x_j = |b_j - a_j| c_j + a_j.
template <typename Derived>
Eigen::VectorXd denormalize(const Eigen::MatrixBase<Derived>& c, const Domain& domain) {
  if (c.size() != domain.dimension()) {
    throw std::invalid_argument("denormalize: dimension mismatch");
  }
  return (domain.upper - domain.lower).cwiseAbs().cwiseProduct(c) + domain.lower;
}

/// Inverse of denormalize.
Eigen::VectorXd to_unit(const Eigen::VectorXd& x, const Domain& domain);

/// delta = 1/2 * ||hi - lo||_2, evaluated from the size key so that equal keys
/// give bit-identical measures.
double measure(const HyperRectangle& rect);
double measure(const SizeKey& key);

SizeKey size_key(const HyperRectangle& rect);

}  // namespace direct
