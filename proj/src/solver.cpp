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

#include "direct/solver.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace direct {

std::string_view selection_name(SelectionScheme s) {
  switch (s) {
    case SelectionScheme::IO: return "IO";
    case SelectionScheme::IA: return "IA";
    case SelectionScheme::GL: return "GL";
  }
  return "?";
}

SelectionScheme parse_selection(std::string_view name) {
  for (auto s : {SelectionScheme::IO, SelectionScheme::IA, SelectionScheme::GL}) {
    if (selection_name(s) == name) return s;
  }
  throw std::invalid_argument("unknown selection scheme: " + std::string(name));
}

std::string AlgorithmSpec::name() const {
  return std::string(scheme_name(partitioning)) + "-" + std::string(selection_name(selection));
}

AlgorithmSpec AlgorithmSpec::parse(std::string_view name) {
  const auto dash = name.rfind('-');
  if (dash == std::string_view::npos) throw std::invalid_argument("unknown algorithm: " + std::string(name));
  AlgorithmSpec spec;
  try {
    spec.partitioning = parse_scheme(name.substr(0, dash));
    spec.selection = parse_selection(name.substr(dash + 1));
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("unknown algorithm: " + std::string(name));
  }
  return spec;
}

std::vector<AlgorithmSpec> AlgorithmSpec::all() {
  std::vector<AlgorithmSpec> out;
  for (auto p : {Scheme::NDTC, Scheme::OneDTC, Scheme::OneDTDV, Scheme::OneDBDP}) {
    for (auto s : {SelectionScheme::IO, SelectionScheme::IA, SelectionScheme::GL}) {
      AlgorithmSpec spec;
      spec.partitioning = p;
      spec.selection = s;
      out.push_back(spec);
    }
  }
  return out;
}

void StopCriteria::validate() const {
  if (!(pe_tolerance >= 0.0)) throw std::invalid_argument("pe tolerance must be >= 0");
  if (max_evaluations == 0) throw std::invalid_argument("evaluation budget must be positive");
  if (max_iterations && *max_iterations == 0) throw std::invalid_argument("iteration budget must be positive");
  if (vicinity_delta && !(*vicinity_delta >= 0.0 && *vicinity_delta <= 1.0)) {
    throw std::invalid_argument("vicinity coefficient must lie in [0, 1]");
  }
}

std::string_view status_name(TerminalStatus s) {
  switch (s) {
    case TerminalStatus::Running: return "iter";
    case TerminalStatus::Solved: return "solved";
    case TerminalStatus::BudgetExhausted: return "budget_exhausted";
    case TerminalStatus::IterationLimit: return "iteration_limit";
    case TerminalStatus::ResolutionExhausted: return "resolution_exhausted";
    case TerminalStatus::EvaluationError: return "evaluation_error";
  }
  return "?";
}

TerminalStatus parse_status(std::string_view name) {
  for (auto s : {TerminalStatus::Running, TerminalStatus::Solved, TerminalStatus::BudgetExhausted,
                 TerminalStatus::IterationLimit, TerminalStatus::ResolutionExhausted,
                 TerminalStatus::EvaluationError}) {
    if (status_name(s) == name) return s;
  }
  throw std::invalid_argument("unknown status: " + std::string(name));
}

double percent_error(double f_val, double f_star) {
  if (f_star == 0.0) return 100.0 * f_val;
  return 100.0 * (f_val - f_star) / std::abs(f_star);
}

bool vicinity_hit(const Eigen::VectorXd& x, const Eigen::VectorXd& x_star, const Domain& domain, double delta) {
  const double scale = std::pow(delta, 1.0 / static_cast<double>(domain.dimension()));
  for (Eigen::Index j = 0; j < x.size(); ++j) {
    if (std::abs(x[j] - x_star[j]) > scale * (domain.upper[j] - domain.lower[j])) return false;
  }
  return true;
}

std::string format_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_trace_csv(std::ostream& os, const RunTrace& trace) {
  os << "k,m,f_min,pe,poh_count,status\n";
  auto row = [&](const IterationRecord& r, TerminalStatus s) {
    os << r.k << ',' << r.m << ',' << format_real(r.f_min) << ',' << format_real(r.pe) << ',' << r.poh_count << ','
       << status_name(s) << '\n';
  };
  for (const auto& r : trace.records) row(r, TerminalStatus::Running);
  if (!trace.records.empty() && trace.status != TerminalStatus::Running) row(trace.records.back(), trace.status);
}

Solver::Solver(Objective objective, AlgorithmSpec spec, StopCriteria stop)
    : objective_(std::move(objective)), spec_(std::move(spec)), stop_(std::move(stop)) {
  if (!objective_.f) throw std::invalid_argument("solver: objective is empty");
  objective_.domain = Domain(objective_.domain.lower, objective_.domain.upper);
  spec_.params.validate();
  stop_.validate();
  if (stop_.vicinity_delta && !objective_.x_star) {
    throw std::invalid_argument("solver: vicinity rule needs a known minimizer");
  }
  ledger_ = SplitLedger(objective_.domain.dimension());
}

double Solver::evaluate(const Eigen::VectorXd& c) {
  std::string key;
  if (spec_.partitioning == Scheme::OneDTDV) {
    key.assign(reinterpret_cast<const char*>(c.data()), static_cast<std::size_t>(c.size()) * sizeof(double));
    if (auto it = vertex_values_.find(key); it != vertex_values_.end()) return it->second;
  }
  const double v = objective_.f(denormalize(c, objective_.domain));
  if (!std::isfinite(v)) {
    std::ostringstream os;
    os << "objective returned " << v << " at normalized point [" << c.transpose() << "]";
    throw EvaluationError(os.str());
  }
  ++m_;
  if (!key.empty()) vertex_values_.emplace(std::move(key), v);
  if (m_ == 1 || v < f_min_) {
    f_min_ = v;
    x_min_ = c;
  }
  value_sum_ += v;
  if (spec_.params.threshold_mode == ThresholdMode::Median) {
    if (low_half_.empty() || v <= low_half_.top()) {
      low_half_.push(v);
    } else {
      high_half_.push(v);
    }
    if (low_half_.size() > high_half_.size() + 1) {
      high_half_.push(low_half_.top());
      low_half_.pop();
    } else if (high_half_.size() > low_half_.size()) {
      low_half_.push(high_half_.top());
      high_half_.pop();
    }
  }
  return v;
}

ValueStats Solver::stats() const {
  ValueStats s;
  if (m_ == 0) return s;
  s.average = value_sum_ / static_cast<double>(m_);
  if (!low_half_.empty()) {
    s.median = low_half_.size() > high_half_.size() ? low_half_.top() : 0.5 * (low_half_.top() + high_half_.top());
  }
  return s;
}

std::vector<std::uint64_t> Solver::select() {
  switch (spec_.selection) {
    case SelectionScheme::IO: return select_io(pool_, f_min_, stats(), spec_.params);
    case SelectionScheme::IA: return select_ia(pool_, objective_.domain.dimension(), spec_.params);
    case SelectionScheme::GL: return select_gl(pool_, x_min_, spec_.params);
  }
  return {};
}

void Solver::add(HyperRectangle rect) {
  const std::uint64_t id = rect.creation_index;
  if (rect.splittable()) {
    const SamplePoint& rep = rect.representative();
    pool_.insert(PoolEntry{id, size_key(rect), rect.selection_value(), rep.coords});
  }
  rects_.emplace(id, std::move(rect));
}

void Solver::record(std::uint64_t k, std::size_t poh_count) {
  IterationRecord r;
  r.k = k;
  r.m = m_;
  r.poh_count = poh_count;
  if (m_ == 0) {
    r.f_min = std::numeric_limits<double>::quiet_NaN();
    r.pe = r.f_min;
  } else {
    r.f_min = f_min_;
    r.x_min = denormalize(x_min_, objective_.domain);
    r.pe = objective_.f_star ? percent_error(f_min_, *objective_.f_star) : std::numeric_limits<double>::quiet_NaN();
  }
  trace_.records.push_back(std::move(r));
  if (iteration_observer_) iteration_observer_(*this, trace_.records.back());
}

TerminalStatus Solver::check_stop(std::uint64_t k) const {
  const auto& r = trace_.records.back();
  // a batch that ran past the budget does not count, whatever it found
  if (m_ > stop_.max_evaluations) return TerminalStatus::BudgetExhausted;
  if (objective_.f_star && r.pe <= stop_.pe_tolerance) return TerminalStatus::Solved;
  if (stop_.vicinity_delta && vicinity_hit(r.x_min, *objective_.x_star, objective_.domain, *stop_.vicinity_delta)) {
    return TerminalStatus::Solved;
  }
  if (m_ >= stop_.max_evaluations) return TerminalStatus::BudgetExhausted;
  if (stop_.max_iterations && k >= *stop_.max_iterations) return TerminalStatus::IterationLimit;
  return TerminalStatus::Running;
}

RunTrace Solver::run() {
  trace_ = RunTrace{};
  trace_.algorithm = spec_.name();
  const Evaluator eval = [this](const Eigen::VectorXd& c) { return evaluate(c); };
  std::uint64_t k = 0;
  TerminalStatus status = TerminalStatus::Running;
  try {
    HyperRectangle root = normalize(objective_.domain, spec_.partitioning);
    for (auto& c : init_samples(spec_.partitioning, objective_.domain.dimension())) {
      const double v = eval(c);
      root.samples.push_back({std::move(c), v});
    }
    root.creation_index = next_id_++;
    add(std::move(root));
    record(0, 0);
    status = check_stop(0);

    while (status == TerminalStatus::Running) {
      ++k;
      auto selected = select();
      if (selected.empty()) {
        status = TerminalStatus::ResolutionExhausted;
        trace_.message = "no rectangle left that can be subdivided";
        break;
      }
      std::vector<std::pair<double, std::uint64_t>> order;
      order.reserve(selected.size());
      for (auto id : selected) order.emplace_back(-pool_.delta_of(id), id);
      std::sort(order.begin(), order.end());

      std::vector<std::uint64_t> retired;
      std::vector<HyperRectangle> born;
      for (const auto& [neg_delta, id] : order) {
        const HyperRectangle& parent = rects_.at(id);
        SubdivisionResult res = subdivide(parent, ledger_, eval);
        for (auto& child : res.children) child.creation_index = next_id_++;
        if (observer_) observer_(parent, res);
        retired.push_back(id);
        for (auto& child : res.children) born.push_back(std::move(child));
        if (m_ >= stop_.max_evaluations) break;
      }
      for (auto id : retired) {
        pool_.erase(id);
        rects_.erase(id);
      }
      for (auto& child : born) add(std::move(child));
      record(k, selected.size());
      status = check_stop(k);
    }
  } catch (const EvaluationError& e) {
    status = TerminalStatus::EvaluationError;
    trace_.message = e.what();
    record(k, 0);
  } catch (const ResolutionExhausted& e) {
    status = TerminalStatus::ResolutionExhausted;
    trace_.message = e.what();
    record(k, 0);
  }
  trace_.status = status;
  return trace_;
}

RunTrace run(const Objective& objective, const AlgorithmSpec& spec, const StopCriteria& stop) {
  return Solver(objective, spec, stop).run();
}

}  // namespace direct
