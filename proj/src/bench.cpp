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

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace direct {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream ss(line);
  while (std::getline(ss, cell, sep)) out.push_back(cell);
  if (!line.empty() && line.back() == sep) out.emplace_back();
  return out;
}

std::string safe_file_name(std::string s) {
  for (char& c : s) {
    if (c == ':' || c == '/' || c == ' ') c = '_';
  }
  return s;
}

template <typename T>
T get_as(const json& j, const char* key) {
  try {
    return j.get<T>();
  } catch (const json::exception&) {
    throw std::invalid_argument(std::string("config: bad value for '") + key + "'");
  }
}

double parse_real(const std::string& s) {
  if (s.empty()) return std::nan("");
  return std::stod(s);
}

}  // namespace

MatrixConfig MatrixConfig::from_json_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("config: ") + e.what());
  }
  if (!j.is_object()) throw std::invalid_argument("config: top level must be an object");

  MatrixConfig c;
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string& key = it.key();
    const json& v = it.value();
    if (key == "algorithms") {
      if (v.is_string() && v.get<std::string>() == "all") {
        c.algorithms.clear();
      } else {
        c.algorithms = get_as<std::vector<std::string>>(v, "algorithms");
      }
    } else if (key == "problems") {
      if (!v.is_object()) throw std::invalid_argument("config: 'problems' must be an object");
      for (auto p = v.begin(); p != v.end(); ++p) {
        if (p.key() == "names") {
          c.problems.names = get_as<std::vector<std::string>>(p.value(), "problems.names");
        } else if (p.key() == "tags") {
          c.problems.tags = get_as<std::vector<std::string>>(p.value(), "problems.tags");
        } else {
          throw std::invalid_argument("config: unknown key 'problems." + p.key() + "'");
        }
      }
    } else if (key == "variant") {
      c.variant = DomainVariant::parse(get_as<std::string>(v, "variant"));
    } else if (key == "max_evals") {
      c.stop.max_evaluations = get_as<std::uint64_t>(v, "max_evals");
    } else if (key == "max_iters") {
      if (v.is_null()) {
        c.stop.max_iterations.reset();
      } else {
        c.stop.max_iterations = get_as<std::uint64_t>(v, "max_iters");
      }
    } else if (key == "pe_tol") {
      c.stop.pe_tolerance = get_as<double>(v, "pe_tol");
    } else if (key == "eps") {
      c.params.epsilon = get_as<double>(v, "eps");
    } else if (key == "threshold") {
      c.params.threshold_mode = parse_threshold_mode(get_as<std::string>(v, "threshold"));
    } else if (key == "gl_local") {
      c.params.gl_local_enabled = get_as<bool>(v, "gl_local");
    } else if (key == "output") {
      c.output_dir = get_as<std::string>(v, "output");
    } else if (key == "parallelism") {
      c.parallelism = get_as<int>(v, "parallelism");
    } else if (key == "traces") {
      c.write_traces = get_as<bool>(v, "traces");
    } else {
      throw std::invalid_argument("config: unknown key '" + key + "'");
    }
  }
  return c;
}

MatrixConfig MatrixConfig::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return from_json_text(ss.str());
}

std::vector<AlgorithmSpec> MatrixConfig::resolved_algorithms() const {
  std::vector<AlgorithmSpec> out;
  if (algorithms.empty()) {
    out = AlgorithmSpec::all();
  } else {
    for (const auto& name : algorithms) out.push_back(AlgorithmSpec::parse(name));
  }
  for (auto& s : out) s.params = params;
  return out;
}

void MatrixConfig::validate() const {
  if (resolved_algorithms().empty()) throw std::invalid_argument("config: no algorithm selected");
  if (roster(problems).empty()) throw std::invalid_argument("config: problem filter matches nothing");
  if (parallelism < 1) throw std::invalid_argument("config: parallelism must be >= 1");
  params.validate();
  stop.validate();
}

ManifestRow run_one(const AlgorithmSpec& spec, const Problem& problem, const DomainVariant& variant,
                    const StopCriteria& stop, RunTrace* trace_out) {
  ManifestRow row;
  row.algorithm = spec.name();
  row.problem = problem.id();
  row.n = problem.n;
  row.variant = variant.name();
  row.convexity = convexity_name(problem.convexity);
  row.modality = modality_name(problem.modality);
  row.max_evals = stop.max_evaluations;
  RunTrace trace;
  try {
    trace = run(bind(problem, variant), spec, stop);
  } catch (const std::exception& e) {
    trace.algorithm = row.algorithm;
    trace.status = TerminalStatus::EvaluationError;
    trace.message = e.what();
  }
  row.status = status_name(trace.status);
  if (!trace.records.empty()) {
    const auto& last = trace.last();
    row.evaluations = last.m;
    row.iterations = last.k;
    row.f_min = last.f_min;
    row.pe = last.pe;
  } else {
    row.f_min = row.pe = std::nan("");
  }
  if (trace_out) *trace_out = std::move(trace);
  return row;
}

std::vector<ManifestRow> run_matrix(const MatrixConfig& config) {
  config.validate();
  const auto algorithms = config.resolved_algorithms();
  const auto problems = roster(config.problems);
  const fs::path out_dir(config.output_dir);
  fs::create_directories(out_dir);
  if (config.write_traces) fs::create_directories(out_dir / "traces");

  const std::size_t jobs = algorithms.size() * problems.size();
  std::vector<ManifestRow> rows(jobs);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t job = next++; job < jobs; job = next++) {
      const auto& spec = algorithms[job / problems.size()];
      const auto& problem = problems[job % problems.size()];
      RunTrace trace;
      ManifestRow row = run_one(spec, problem, config.variant, config.stop, &trace);
      if (config.write_traces) {
        const std::string file =
            safe_file_name(row.algorithm + "__" + row.problem + "__" + row.variant) + ".csv";
        std::ofstream os(out_dir / "traces" / file);
        write_trace_csv(os, trace);
        row.trace_file = "traces/" + file;
      }
      rows[job] = std::move(row);
    }
  };
  const int threads = std::max(1, std::min<int>(config.parallelism, static_cast<int>(jobs)));
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  std::ofstream manifest(out_dir / "manifest.csv");
  write_manifest_csv(manifest, rows);
  return rows;
}

void write_manifest_csv(std::ostream& os, const std::vector<ManifestRow>& rows) {
  os << "algorithm,problem,n,variant,convexity,modality,status,evaluations,iterations,f_min,pe,max_evals,trace_file\n";
  for (const auto& r : rows) {
    os << r.algorithm << ',' << r.problem << ',' << r.n << ',' << r.variant << ',' << r.convexity << ','
       << r.modality << ',' << r.status << ',' << r.evaluations << ',' << r.iterations << ',' << format_real(r.f_min)
       << ',' << format_real(r.pe) << ',' << r.max_evals << ',' << r.trace_file << '\n';
  }
}

std::vector<ManifestRow> read_manifest_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw std::invalid_argument("manifest: empty input");
  const auto header = split(line, ',');
  const std::vector<std::string> expected{"algorithm", "problem", "n", "variant", "convexity", "modality", "status",
                                          "evaluations", "iterations", "f_min", "pe", "max_evals", "trace_file"};
  if (header != expected) throw std::invalid_argument("manifest: unexpected header");
  std::vector<ManifestRow> rows;
  std::size_t line_no = 1;
  while (std::getline(is, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto f = split(line, ',');
    if (f.size() != expected.size()) {
      throw std::invalid_argument("manifest: wrong field count on line " + std::to_string(line_no));
    }
    ManifestRow r;
    try {
      r.algorithm = f[0];
      r.problem = f[1];
      r.n = std::stoi(f[2]);
      r.variant = f[3];
      r.convexity = f[4];
      r.modality = f[5];
      r.status = f[6];
      r.evaluations = std::stoull(f[7]);
      r.iterations = std::stoull(f[8]);
      r.f_min = parse_real(f[9]);
      r.pe = parse_real(f[10]);
      r.max_evals = std::stoull(f[11]);
      r.trace_file = f[12];
    } catch (const std::logic_error&) {
      throw std::invalid_argument("manifest: bad number on line " + std::to_string(line_no));
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

std::vector<std::string> default_subsets() {
  return {"all", "n<=4", "n>4", "convex", "non-convex", "uni-modal", "multi-modal"};
}

namespace {

bool in_subset(const ManifestRow& r, const std::string& subset) {
  if (subset == "all") return true;
  if (subset == "n<=4") return r.n <= 4;
  if (subset == "n>4") return r.n > 4;
  if (subset == "convex" || subset == "non-convex") return r.convexity == subset;
  if (subset == "uni-modal" || subset == "multi-modal") return r.modality == subset;
  throw std::invalid_argument("unknown subset: " + subset);
}

std::vector<std::string> algorithms_in_order(const std::vector<ManifestRow>& rows) {
  std::vector<std::string> out;
  std::set<std::string> seen;
  for (const auto& r : rows) {
    if (seen.insert(r.algorithm).second) out.push_back(r.algorithm);
  }
  return out;
}

}  // namespace

std::vector<SummaryRow> summarize(const std::vector<ManifestRow>& rows, const std::vector<std::string>& subsets) {
  std::vector<SummaryRow> out;
  for (const auto& alg : algorithms_in_order(rows)) {
    for (const auto& subset : subsets) {
      SummaryRow s;
      s.algorithm = alg;
      s.subset = subset;
      std::vector<double> m;
      for (const auto& r : rows) {
        if (r.algorithm != alg || !in_subset(r, subset)) continue;
        ++s.cases;
        if (!r.solved()) ++s.failed;
        m.push_back(static_cast<double>(r.solved() ? r.evaluations : r.max_evals));
      }
      if (!m.empty()) {
        double sum = 0;
        for (double v : m) sum += v;
        s.average = sum / static_cast<double>(m.size());
        std::sort(m.begin(), m.end());
        const std::size_t h = m.size() / 2;
        s.median = m.size() % 2 ? m[h] : 0.5 * (m[h - 1] + m[h]);
      } else {
        s.average = s.median = std::nan("");
      }
      out.push_back(std::move(s));
    }
  }
  return out;
}

void write_summary_csv(std::ostream& os, const std::vector<SummaryRow>& rows) {
  os << "algorithm,subset,cases,failed,average,median\n";
  for (const auto& r : rows) {
    os << r.algorithm << ',' << r.subset << ',' << r.cases << ',' << r.failed << ',' << format_real(r.average) << ','
       << format_real(r.median) << '\n';
  }
}

std::vector<double> log_budget_grid(double lo, double hi, int points) {
  if (!(lo > 0) || !(hi >= lo) || points < 1) throw std::invalid_argument("budget grid: need 0 < lo <= hi, points >= 1");
  if (points == 1) return {hi};
  std::vector<double> grid(static_cast<std::size_t>(points));
  const double a = std::log10(lo), b = std::log10(hi);
  for (int i = 0; i < points; ++i) grid[i] = std::pow(10.0, a + (b - a) * i / (points - 1));
  grid.front() = lo;
  grid.back() = hi;
  return grid;
}

std::map<std::string, std::vector<CurvePoint>> operational_characteristics(const std::vector<ManifestRow>& rows,
                                                                           const std::vector<double>& grid) {
  std::map<std::string, std::vector<CurvePoint>> out;
  for (const auto& alg : algorithms_in_order(rows)) {
    std::vector<double> solved_at;
    std::size_t runs = 0;
    for (const auto& r : rows) {
      if (r.algorithm != alg) continue;
      ++runs;
      if (r.solved()) solved_at.push_back(static_cast<double>(r.evaluations));
    }
    std::sort(solved_at.begin(), solved_at.end());
    auto& curve = out[alg];
    for (double b : grid) {
      const auto k = std::upper_bound(solved_at.begin(), solved_at.end(), b) - solved_at.begin();
      curve.push_back({b, static_cast<double>(k) / static_cast<double>(runs)});
    }
  }
  return out;
}

void write_curves_csv(std::ostream& os, const std::map<std::string, std::vector<CurvePoint>>& curves) {
  os << "algorithm,budget,proportion\n";
  for (const auto& [alg, curve] : curves) {
    for (const auto& p : curve) os << alg << ',' << format_real(p.budget) << ',' << format_real(p.proportion) << '\n';
  }
}

}  // namespace direct
