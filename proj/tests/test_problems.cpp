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

#include "direct/problems.hpp"

#include <doctest.h>

#include <cmath>
#include <set>
#include <sstream>

using namespace direct;

namespace {

double radical_inverse(std::uint64_t i, int base) {
  double inv = 1.0 / base, f = inv, r = 0.0;
  while (i > 0) {
    r += f * static_cast<double>(i % static_cast<std::uint64_t>(base));
    i /= static_cast<std::uint64_t>(base);
    f *= inv;
  }
  return r;
}

Eigen::VectorXd halton(std::uint64_t i, int n) {
  static const int primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29};
  Eigen::VectorXd u(n);
  for (int j = 0; j < n; ++j) u[j] = radical_inverse(i, primes[j]);
  return u;
}

std::size_t count(const RosterFilter& filter) { return roster(filter).size(); }

int on_bound(const Eigen::VectorXd& x, const Domain& d) {
  int hits = 0;
  for (Eigen::Index j = 0; j < x.size(); ++j) hits += x[j] == d.lower[j] || x[j] == d.upper[j];
  return hits;
}

}  // namespace

TEST_CASE("evaluation examples") {
  const auto branin = make_problem("Branin", 2);
  CHECK(std::abs(evaluate(branin, Eigen::Vector2d(2.5, 7.5)) - 24.13) < 0.01);
  CHECK(std::abs(evaluate(branin, Eigen::Vector2d(5, 0)) - 14.34) < 0.01);
  CHECK(evaluate(make_problem("Sphere", 3), Eigen::Vector3d::Zero()) == 0.0);
  CHECK_THROWS_AS(evaluate(branin, Eigen::Vector2d(11, 0)), std::invalid_argument);
  const auto deb = make_problem("Deb02", 4);
  CHECK(evaluate(deb, Eigen::VectorXd::Zero(4)) == doctest::Approx(-1.0));
  CHECK(evaluate(deb, Eigen::VectorXd::Ones(4)) == doctest::Approx(-1.0));
  CHECK_FALSE(deb.x_star);
}

TEST_CASE("roster counts") {
  CHECK(count({}) == 96);
  CHECK(count({{"n<=4"}, {}}) == 51);
  CHECK(count({{"n>4"}, {}}) == 45);
  CHECK(count({{"convex"}, {}}) == 31);
  CHECK(count({{"non-convex"}, {}}) == 65);
  CHECK(count({{"uni-modal"}, {}}) == 18);
  CHECK(count({{"multi-modal"}, {}}) == 78);
  CHECK(count({{"n<=4", "n>4"}, {}}) == 0);
  CHECK(count({{}, {"Levy"}}) == 3);
  CHECK(count({{"n>4"}, {"Levy", "Sphere-2"}}) == 2);

  const auto shekel = roster({{}, {"Shekel5"}});
  REQUIRE(shekel.size() == 1);
  CHECK(shekel[0].n == 4);
  CHECK(*shekel[0].f_star == doctest::Approx(-10.1531).epsilon(1e-5));

  std::set<std::string> ids;
  for (const auto& p : roster()) CHECK(ids.insert(p.id()).second);
  CHECK_THROWS_AS(roster({{"cheap"}, {}}), std::invalid_argument);
  CHECK_THROWS_AS(roster({{}, {"Nope"}}), std::invalid_argument);
  CHECK_THROWS_AS(make_problem("Beale", 3), std::invalid_argument);
  CHECK(problems_by_name("Trid-5").size() == 1);
  CHECK(problems_by_name("Trid").size() == 3);
}

TEST_CASE("stored minimizers reproduce f*") {
  for (const auto& p : roster()) {
    CAPTURE(p.id());
    REQUIRE(p.f_star);
    if (!p.x_star) continue;
    CHECK(p.domain.contains(*p.x_star, 1e-12));
    const double v = evaluate(p, *p.x_star);
    CHECK(v <= *p.f_star + 1e-4);
    CHECK(v >= *p.f_star - 1e-6);
  }
}

TEST_CASE("no sweep point beats f*") {
  for (const auto& p : roster()) {
    CAPTURE(p.id());
    const Domain& d = p.domain;
    double best = std::numeric_limits<double>::infinity();
    for (std::uint64_t i = 1; i <= 100000; ++i) {
      const Eigen::VectorXd x = d.lower + halton(i, p.n).cwiseProduct(d.upper - d.lower);
      best = std::min(best, p.f(x));
    }
    CHECK(best >= *p.f_star - 1e-6);
  }
}

TEST_CASE("Trid closed form") {
  CHECK(*make_problem("Trid", 2).f_star == doctest::Approx(-2.0));
  CHECK(*make_problem("Trid", 5).f_star == doctest::Approx(-30.0));
  for (int n : {2, 5, 10}) CHECK(*make_problem("Trid", n).f_star == doctest::Approx(-n * (n + 4.0) * (n - 1) / 6));
  CHECK(*make_problem("Styblinski_Tang", 5).f_star == doctest::Approx(-39.1661 * 5).epsilon(1e-5));
}

TEST_CASE("domain variants") {
  const auto levy = make_problem("Levy", 10);
  const auto b1 = domain_of(levy, DomainVariant::boundary(1));
  CHECK(b1.lower[0] == -5);
  CHECK(b1.upper[0] == 1);
  for (int j = 1; j < 10; ++j) {
    CHECK(b1.lower[j] == -5);
    CHECK(b1.upper[j] == 5);
  }
  const auto rastrigin = make_problem("Rastrigin", 5);
  const auto pert = domain_of(rastrigin, DomainVariant::perturbed());
  for (int i = 1; i <= 5; ++i) {
    CHECK(pert.lower[i - 1] == doctest::Approx(-5 * std::pow(2.0, 1.0 / i)));
    CHECK(pert.upper[i - 1] == doctest::Approx(7 + std::pow(2.0, 1.0 / i)));
  }
  const auto schwefel = domain_of(make_problem("Schwefel", 5), DomainVariant::perturbed());
  CHECK(schwefel.lower[3] == doctest::Approx(-500 + 100 / 2.0));
  CHECK(schwefel.upper[3] == doctest::Approx(500 - 40 / 2.0));
  const auto griewank = domain_of(make_problem("Griewank", 2), DomainVariant::perturbed());
  CHECK(griewank.lower[1] == doctest::Approx(-std::sqrt(1200.0)));
  CHECK(griewank.upper[1] == doctest::Approx(600 / std::sqrt(2.0)));
  const auto sphere = make_problem("Sphere", 2);
  CHECK(domain_of(sphere, {}).lower == sphere.domain.lower);
  CHECK(domain_of(sphere, DomainVariant::perturbed()).lower == Eigen::Vector2d(-2.75, -2.75));

  CHECK_THROWS_AS(domain_of(sphere, DomainVariant::boundary(1)), std::invalid_argument);
  CHECK_THROWS_AS(domain_of(levy, DomainVariant::boundary(11)), std::invalid_argument);
  CHECK(DomainVariant::parse("boundary:7").nu == 7);
  CHECK(DomainVariant::parse("perturbed").name() == "perturbed");
  CHECK_THROWS_AS(DomainVariant::parse("boundary:"), std::invalid_argument);
  CHECK_THROWS_AS(DomainVariant::parse("boundary:-1"), std::invalid_argument);
  CHECK_THROWS_AS(DomainVariant::parse("shifted"), std::invalid_argument);
}

TEST_CASE("boundary chains put exactly nu minimizer coordinates on a bound") {
  for (const auto& [name, n] : {std::pair<const char*, int>{"Levy", 10}, {"Dixon_and_Price", 5}}) {
    const auto p = make_problem(name, n);
    REQUIRE(p.boundary_chain.size() == static_cast<std::size_t>(n));
    for (int nu = 0; nu <= n; ++nu) {
      CAPTURE(name);
      CAPTURE(nu);
      const auto d = domain_of(p, DomainVariant::boundary(nu));
      CHECK(d.contains(*p.x_star, 0.0));
      CHECK(on_bound(*p.x_star, d) == nu);
      CHECK(evaluate(p, *p.x_star, d) <= *p.f_star + 1e-4);
    }
  }
}

TEST_CASE("tags and binding") {
  for (const auto& p : roster()) {
    const bool convex = p.convexity == Convexity::Convex;
    CHECK(RosterFilter{{convex ? "convex" : "non-convex"}, {}}.matches(p));
    CHECK_FALSE(RosterFilter{{convex ? "non-convex" : "convex"}, {}}.matches(p));
  }
  const auto o = bind(make_problem("Rastrigin", 2), DomainVariant::perturbed());
  CHECK(o.domain.lower == domain_of(make_problem("Rastrigin", 2), DomainVariant::perturbed()).lower);
  CHECK(o.f_star == 0.0);

  std::ostringstream os;
  write_roster_csv(os, roster({{}, {"Sphere-2"}}));
  CHECK(os.str().find("Sphere-2") != std::string::npos);
}
