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
#include "direct/solver.hpp"

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace direct {

enum class Convexity { Convex, NonConvex };
enum class Modality { UniModal, MultiModal };

std::string_view convexity_name(Convexity c);
std::string_view modality_name(Modality m);

enum class DomainKind { Default, Perturbed, Boundary };

/// Which box a problem is solved on. `nu` counts the minimizer coordinates
/// moved onto the boundary (Boundary only).
struct DomainVariant {
  DomainKind kind = DomainKind::Default;
  int nu = 0;

  static DomainVariant standard() { return {}; }
  static DomainVariant perturbed() { return {DomainKind::Perturbed, 0}; }
  static DomainVariant boundary(int nu) { return {DomainKind::Boundary, nu}; }

  /// "default", "perturbed" or "boundary:<nu>".
  std::string name() const;
  static DomainVariant parse(std::string_view text);
};

struct Problem {
  std::string name;  // family name, e.g. "Shekel5"
  int n = 0;
  std::function<double(const Eigen::VectorXd&)> f;  // original coordinates
  Domain domain;
  Domain perturbed_domain;
  /// Per-coordinate replacement bounds applied cumulatively for boundary(nu);
  /// empty when the problem has no boundary study.
  std::vector<std::pair<double, double>> boundary_chain;
  std::optional<double> f_star;
  std::optional<Eigen::VectorXd> x_star;
  Convexity convexity = Convexity::NonConvex;
  Modality modality = Modality::MultiModal;

  /// "<name>-<n>", unique across the roster.
  std::string id() const;
};

/// Throws std::invalid_argument if x lies outside `domain`.
double evaluate(const Problem& problem, const Eigen::VectorXd& x, const Domain& domain);
double evaluate(const Problem& problem, const Eigen::VectorXd& x);

/// Throws std::invalid_argument for a variant the problem does not support.
Domain domain_of(const Problem& problem, const DomainVariant& variant);

/// Solver view of a problem on one of its domains.
Objective bind(const Problem& problem, const DomainVariant& variant = {});

/// Family names in roster order.
std::vector<std::string> problem_names();

/// Any dimension the family supports; throws for unknown names or n.
Problem make_problem(std::string_view name, int n);

/// Accepts "Name-n" or a bare family name (its roster dimensions).
std::vector<Problem> problems_by_name(std::string_view name);

/// Terms are ANDed: "n<=4", "n>4", "convex", "non-convex", "uni-modal",
/// "multi-modal". Names (ids or families) are ORed with each other.
struct RosterFilter {
  std::vector<std::string> tags;
  std::vector<std::string> names;

  bool matches(const Problem& p) const;
  /// Throws std::invalid_argument on an unknown tag or name.
  void validate() const;
};

/// The 96-instance test set (or the part matching `filter`), in table order.
std::vector<Problem> roster(const RosterFilter& filter = {});

/// name, family, n, convexity, modality, f_star, lower/upper bounds for the
/// default and perturbed domains (';'-joined), x_star.
void write_roster_csv(std::ostream& os, const std::vector<Problem>& problems);

}  // namespace direct
