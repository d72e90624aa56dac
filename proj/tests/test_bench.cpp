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

#include "direct/bench.hpp"

#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

using namespace direct;
namespace fs = std::filesystem;

namespace {

ManifestRow row(std::string alg, std::string status, std::uint64_t m, int n = 2, std::uint64_t budget = 1000000) {
  ManifestRow r;
  r.algorithm = std::move(alg);
  r.problem = "P-" + std::to_string(n);
  r.n = n;
  r.convexity = "convex";
  r.modality = "uni-modal";
  r.status = std::move(status);
  r.evaluations = m;
  r.max_evals = budget;
  r.f_min = 0.5;
  r.pe = 0.001;
  return r;
}

const SummaryRow& find(const std::vector<SummaryRow>& rows, const std::string& alg, const std::string& subset) {
  return *std::find_if(rows.begin(), rows.end(), [&](const SummaryRow& s) { return s.algorithm == alg && s.subset == subset; });
}

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / ("direct_bench_test_" + name);
  fs::remove_all(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream is(p);
  std::stringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("summary examples") {
  const auto one = summarize({row("A", "solved", 100)});
  const auto& all = find(one, "A", "all");
  CHECK(all.cases == 1);
  CHECK(all.failed == 0);
  CHECK(all.average == 100);
  CHECK(all.median == 100);

  const auto two = summarize({row("A", "solved", 100), row("A", "budget_exhausted", 1000003)});
  CHECK(find(two, "A", "all").average == 500050);
  CHECK(find(two, "A", "all").failed == 1);
  CHECK(find(two, "A", "all").median == 500050);
  CHECK(find(two, "A", "n>4").cases == 0);
  CHECK(std::isnan(find(two, "A", "n>4").average));
  CHECK_THROWS_AS(summarize({row("A", "solved", 1)}, {"tiny"}), std::invalid_argument);
}

TEST_CASE("summaries ignore run order") {
  std::vector<ManifestRow> rows;
  std::mt19937_64 rng(5);
  for (int i = 0; i < 60; ++i) {
    const bool ok = rng() % 4 != 0;
    rows.push_back(row(i % 2 ? "A" : "B", ok ? "solved" : "budget_exhausted", 10 + rng() % 5000, 2 + 3 * (i % 3), 10000));
  }
  const auto base = summarize(rows);
  std::shuffle(rows.begin(), rows.end(), rng);
  const auto shuffled = summarize(rows);
  for (const auto& s : base) {
    const auto& t = find(shuffled, s.algorithm, s.subset);
    CHECK(t.cases == s.cases);
    CHECK(t.failed == s.failed);
    if (s.cases == 0) continue;
    CHECK(t.average == doctest::Approx(s.average).epsilon(1e-14));
    CHECK(t.median == s.median);
  }
}

TEST_CASE("curve examples") {
  const auto c = operational_characteristics({row("A", "solved", 50)}, {10, 50, 100});
  REQUIRE(c.at("A").size() == 3);
  CHECK(c.at("A")[0].proportion == 0.0);
  CHECK(c.at("A")[1].proportion == 1.0);
  CHECK(c.at("A")[2].proportion == 1.0);

  const auto none = operational_characteristics({row("B", "budget_exhausted", 100), row("B", "evaluation_error", 3)},
                                                {1, 10, 100, 1000});
  for (const auto& p : none.at("B")) CHECK(p.proportion == 0.0);

  const auto grid = log_budget_grid(10, 1e5);
  CHECK(grid.size() == 200);
  CHECK(grid.front() == 10);
  CHECK(grid.back() == 1e5);
  CHECK(std::is_sorted(grid.begin(), grid.end()));
  CHECK(grid[1] / grid[0] == doctest::Approx(std::pow(1e4, 1.0 / 199)));
  CHECK_THROWS_AS(log_budget_grid(0, 10), std::invalid_argument);

  std::ostringstream os;
  write_curves_csv(os, c);
  CHECK(os.str() == "algorithm,budget,proportion\nA,10,0\nA,50,1\nA,100,1\n");
}

TEST_CASE("matrix config parsing and rejection") {
  const auto c = MatrixConfig::from_json_text(
      R"({"algorithms": ["1-DTC-GL"], "problems": {"tags": ["n<=4", "convex"]}, "max_evals": 500,
          "eps": 0, "threshold": "median", "gl_local": false, "parallelism": 2, "variant": "perturbed"})");
  CHECK(c.algorithms == std::vector<std::string>{"1-DTC-GL"});
  CHECK(c.stop.max_evaluations == 500);
  CHECK(c.params.epsilon == 0.0);
  CHECK(c.params.threshold_mode == ThresholdMode::Median);
  CHECK_FALSE(c.params.gl_local_enabled);
  CHECK(c.variant.kind == DomainKind::Perturbed);
  CHECK_NOTHROW(c.validate());
  CHECK_FALSE(c.resolved_algorithms()[0].params.gl_local_enabled);

  CHECK(MatrixConfig::from_json_text(R"({"algorithms": "all"})").resolved_algorithms().size() == 12);
  CHECK_THROWS_AS(MatrixConfig::from_json_text(R"({"budget": 5})"), std::invalid_argument);
  CHECK_THROWS_AS(MatrixConfig::from_json_text(R"({"problems": {"family": []}})"), std::invalid_argument);
  CHECK_THROWS_AS(MatrixConfig::from_json_text(R"({"max_evals": "lots"})"), std::invalid_argument);
  CHECK_THROWS_AS(MatrixConfig::from_json_text("[1, 2]"), std::invalid_argument);
  CHECK_THROWS_AS(MatrixConfig::from_json_text("{"), std::invalid_argument);

  MatrixConfig empty;
  empty.problems.tags = {"n<=4", "n>4"};
  CHECK_THROWS_AS(empty.validate(), std::invalid_argument);
  MatrixConfig bad_alg;
  bad_alg.algorithms = {"3-DTC-IO"};
  CHECK_THROWS_AS(bad_alg.validate(), std::invalid_argument);
  empty.output_dir = scratch("rejected").string();
  CHECK_THROWS_AS(run_matrix(empty), std::invalid_argument);
  CHECK_FALSE(fs::exists(empty.output_dir));
}

TEST_CASE("manifest round trip") {
  std::vector<ManifestRow> rows{row("A", "solved", 77), row("B", "budget_exhausted", 1000001, 10)};
  rows[1].f_min = 0.1;
  rows[1].pe = std::nan("");
  rows[1].trace_file = "traces/x.csv";
  std::stringstream ss;
  write_manifest_csv(ss, rows);
  const auto back = read_manifest_csv(ss);
  REQUIRE(back.size() == 2);
  CHECK(back[0].evaluations == 77);
  CHECK(back[1].f_min == 0.1);
  CHECK(std::isnan(back[1].pe));
  CHECK(back[1].trace_file == "traces/x.csv");
  CHECK(back[1].n == 10);
  std::stringstream bad("algorithm,problem\nA,B\n");
  CHECK_THROWS_AS(read_manifest_csv(bad), std::invalid_argument);
}

TEST_CASE("Deb02 matrix rows") {
  MatrixConfig c;
  c.algorithms = {"1-DTDV-IO", "N-DTC-IO"};
  c.problems.names = {"Deb02"};
  c.stop.max_evaluations = 100000;
  c.output_dir = scratch("deb02").string();
  const auto rows = run_matrix(c);
  REQUIRE(rows.size() == 6);
  for (int i = 0; i < 3; ++i) {
    CHECK(rows[i].algorithm == "1-DTDV-IO");
    CHECK(rows[i].solved());
    CHECK(rows[i].evaluations == 2);
    CHECK(fs::exists(fs::path(c.output_dir) / rows[i].trace_file));
  }
  CHECK(rows[3].problem == "Deb02-2");
  CHECK(rows[3].evaluations == 77);

  std::ifstream is(fs::path(c.output_dir) / "manifest.csv");
  const auto back = read_manifest_csv(is);
  REQUIRE(back.size() == rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) CHECK(back[i].evaluations == rows[i].evaluations);
}

TEST_CASE("matrix output does not depend on parallelism") {
  MatrixConfig c;
  c.algorithms = {"1-DBDP-GL", "1-DTC-IA"};
  c.problems.names = {"Branin-2", "Hump-2", "Rosenbrock-5"};
  c.stop.max_evaluations = 4000;
  c.output_dir = scratch("serial").string();
  run_matrix(c);
  MatrixConfig p = c;
  p.parallelism = 4;
  p.output_dir = scratch("parallel").string();
  run_matrix(p);
  CHECK(slurp(fs::path(c.output_dir) / "manifest.csv") == slurp(fs::path(p.output_dir) / "manifest.csv"));
  for (const auto& entry : fs::directory_iterator(fs::path(c.output_dir) / "traces")) {
    CHECK(slurp(entry.path()) == slurp(fs::path(p.output_dir) / "traces" / entry.path().filename()));
  }
}

TEST_CASE("run failures become rows") {
  Problem p = make_problem("Sphere", 2);
  p.f = [](const Eigen::VectorXd&) -> double { throw std::runtime_error("boom"); };
  StopCriteria stop;
  const auto r = run_one(AlgorithmSpec::parse("1-DTC-IO"), p, {}, stop);
  CHECK(r.status == "evaluation_error");
  CHECK_FALSE(r.solved());
}
