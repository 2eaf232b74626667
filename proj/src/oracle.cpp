#include "ledin/oracle.hpp"

#include <algorithm>
#include <chrono>

#include "ledin/errors.hpp"
#include "ledin/eulerian.hpp"

namespace ledin {

Scalar brute_sum(const SumSpec& spec) {
  spec.validate();
  Sequence& w = thread_sequence(spec.params);
  Scalar weight_base = 1;
  if (spec.weighted) {
    weight_base = lucas_v(spec.params, spec.h);
    if (weight_base == 0) throw GuardViolation("V_h = 0", "weight V_h^-k undefined");
  }
  Scalar sum = 0;
  Scalar weight = 1;
  for (unsigned long k = 1; k <= spec.n; ++k) {
    const long index = static_cast<long>(spec.h) * static_cast<long>(k) + spec.r;
    Scalar term = Scalar(pow(Integer(k), spec.m)) * w[index];
    if (spec.weighted) {
      weight /= weight_base;
      term *= weight;
    }
    sum += term;
  }
  return sum;
}

bool eulerian_recurrence_oracle(unsigned i_max) {
  std::vector<Integer> previous{1};  // row 0
  Integer factorial = 1;
  for (unsigned i = 0; i <= i_max; ++i) {
    std::vector<Integer> current;
    if (i == 0) {
      current = previous;
    } else {
      factorial *= i;
      current.assign(i + 1, 0);
      for (unsigned j = 1; j <= i; ++j) {
        const Integer stay = j < previous.size() ? Integer(j * previous[j]) : Integer(0);
        current[j] = stay + (i - j + 1) * previous[j - 1];
      }
    }
    Integer row_sum = 0;
    for (unsigned j = 0; j <= i; ++j) {
      if (current[j] != eulerian(i, j)) return false;
      row_sum += current[j];
    }
    if (row_sum != factorial) return false;
    previous = std::move(current);
  }
  return true;
}

std::string GridRanges::describe() const {
  auto range = [](const char* name, const IntRange& r) {
    return std::string(name) + "=" + std::to_string(r.lo) + ".." + std::to_string(r.hi);
  };
  std::string text = range("m", m) + " " + range("n", n) + " " + range("r", r) + " " + range("h", h);
  text += weights == WeightMode::plain ? " weighted=no" : weights == WeightMode::weighted ? " weighted=yes" : " weighted=both";
  text += " params=[";
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (i != 0) text += ";";
    text += params[i].label + "(" + params[i].params.to_string() + ")";
  }
  return text + "]";
}

GridRanges default_grid() {
  GridRanges grid;
  grid.m = {0, 6};
  grid.n = {0, 40};
  grid.r = {-8, 8};
  grid.h = {1, 3};
  grid.params = {
      {"fibonacci", fibonacci_params()},
      {"lucas", lucas_params()},
      {"pell", HoradamParams(0, 1, 2, -1)},
      {"jacobsthal", HoradamParams(0, 1, 1, -2)},
      {"generic", HoradamParams(Scalar(3, 2), -5, Scalar(7, 3), Scalar(2, 5))},
      {"repeated_root", HoradamParams(1, 1, 2, 1)},
  };
  grid.weights = WeightMode::both;
  return grid;
}

std::vector<SumSpec> enumerate_grid(const GridRanges& ranges) {
  std::vector<SumSpec> specs;
  if (ranges.m.empty() || ranges.n.empty() || ranges.r.empty() || ranges.h.empty()) return specs;
  std::vector<bool> weightings;
  if (ranges.weights != WeightMode::weighted) weightings.push_back(false);
  if (ranges.weights != WeightMode::plain) weightings.push_back(true);
  for (const auto& named : ranges.params) {
    for (bool weighted : weightings) {
      for (long h = std::max(ranges.h.lo, 1L); h <= ranges.h.hi; ++h) {
        for (long m = std::max(ranges.m.lo, 0L); m <= ranges.m.hi; ++m) {
          for (long r = ranges.r.lo; r <= ranges.r.hi; ++r) {
            for (long n = std::max(ranges.n.lo, 0L); n <= ranges.n.hi; ++n) {
              specs.push_back(SumSpec{static_cast<unsigned>(m), static_cast<unsigned long>(n), r,
                                      static_cast<unsigned>(h), named.params, weighted});
            }
          }
        }
      }
    }
  }
  std::sort(specs.begin(), specs.end());
  specs.erase(std::unique(specs.begin(), specs.end()), specs.end());
  return specs;
}

CaseOutcome check_case(const SumSpec& spec) {
  CaseOutcome outcome;
  const std::vector<Route> routes = applicable_routes(spec);
  Scalar expected;
  try {
    expected = brute_sum(spec);
  } catch (const GuardViolation&) {
    outcome.guard_skips += routes.size();
    return outcome;
  }
  for (Route route : routes) {
    try {
      ClosedFormReport report = evaluate_route(route, spec);
      ++outcome.comparisons;
      if (report.value != expected) outcome.mismatches.push_back({spec, route, expected, report.value});
    } catch (const GuardViolation&) {
      ++outcome.guard_skips;
    }
  }
  return outcome;
}

namespace {

VerificationReport merge(const GridRanges& ranges, std::vector<CaseOutcome>& outcomes, double seconds) {
  VerificationReport report;
  report.grid_description = ranges.describe();
  report.cases_run = outcomes.size();
  for (auto& outcome : outcomes) {
    report.comparisons += outcome.comparisons;
    report.guard_skips += outcome.guard_skips;
    for (auto& mismatch : outcome.mismatches) report.mismatches.push_back(std::move(mismatch));
  }
  report.wall_time = seconds;
  return report;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

VerificationReport verify_grid_serial(const GridRanges& ranges) {
  const auto start = std::chrono::steady_clock::now();
  const std::vector<SumSpec> specs = enumerate_grid(ranges);
  std::vector<CaseOutcome> outcomes;
  outcomes.reserve(specs.size());
  for (const auto& spec : specs) outcomes.push_back(check_case(spec));
  return merge(ranges, outcomes, seconds_since(start));
}

VerificationReport verify_grid(const GridRanges& ranges) {
  const auto start = std::chrono::steady_clock::now();
  const std::vector<SumSpec> specs = enumerate_grid(ranges);
  std::vector<CaseOutcome> outcomes(specs.size());
  const auto count = static_cast<std::int64_t>(specs.size());
  // Each thread works against its own thread_local sequence and ladder caches.
#pragma omp parallel for schedule(dynamic, 32)
  for (std::int64_t i = 0; i < count; ++i) {
    outcomes[static_cast<std::size_t>(i)] = check_case(specs[static_cast<std::size_t>(i)]);
  }
  return merge(ranges, outcomes, seconds_since(start));
}

}  // namespace ledin
