#pragma once

// Brute-force oracle and the grid verifier.
//
// brute_sum touches nothing but sequence terms, so it is independent of
// every Ledin-form and closed-form code path it is used to check.
// verify_grid fans the grid out over OpenMP threads; verify_grid_serial is
// the single-threaded reference it must agree with.

#include <cstdint>
#include <string>
#include <vector>

#include "ledin/routes.hpp"
#include "ledin/sum_spec.hpp"

namespace ledin {

/// Literal loop over k = 1..n of k^m w_{hk+r} (times V_h^{-k} when
/// weighted). Throws GuardViolation when weighted and V_h = 0.
Scalar brute_sum(const SumSpec& spec);

/// Builds the Eulerian triangle up to row i_max twice, from the alternating
/// binomial sum and from A(i,j) = j A(i-1,j) + (i-j+1) A(i-1,j-1), and
/// reports whether they agree and every row i sums to i!.
bool eulerian_recurrence_oracle(unsigned i_max);

/// Closed integer interval; lo > hi is empty.
struct IntRange {
  long lo = 0;
  long hi = -1;

  bool empty() const { return lo > hi; }
  friend bool operator==(const IntRange&, const IntRange&) = default;
};

struct NamedParams {
  std::string label;
  HoradamParams params;
};

enum class WeightMode { plain, weighted, both };

struct GridRanges {
  IntRange m;
  IntRange n;
  IntRange r;
  IntRange h;
  std::vector<NamedParams> params;
  WeightMode weights = WeightMode::both;

  std::string describe() const;
};

/// m <= 6, n <= 40, r in [-8, 8], h <= 3, both weightings, over Fibonacci,
/// Lucas, Pell, (0,1,1,-2), (3/2,-5,7/3,2/5) and the repeated-root set
/// (1,1,2,1).
GridRanges default_grid();

struct Mismatch {
  SumSpec spec;
  Route route;
  Scalar expected;
  Scalar got;

  friend bool operator==(const Mismatch&, const Mismatch&) = default;
};

struct VerificationReport {
  std::string grid_description;
  std::uint64_t cases_run = 0;    // specs evaluated
  std::uint64_t comparisons = 0;  // (spec, route) pairs compared against the oracle
  std::vector<Mismatch> mismatches;
  std::uint64_t guard_skips = 0;  // (spec, route) pairs excluded by a guard
  double wall_time = 0.0;         // seconds

  bool passed() const { return mismatches.empty(); }

  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

/// Every spec of the grid, sorted lexicographically.
std::vector<SumSpec> enumerate_grid(const GridRanges& ranges);

/// Per-spec result of comparing every applicable route against brute_sum.
struct CaseOutcome {
  std::vector<Mismatch> mismatches;
  std::uint64_t comparisons = 0;
  std::uint64_t guard_skips = 0;
};

CaseOutcome check_case(const SumSpec& spec);

/// OpenMP-parallel grid verification. Results are merged in spec order, so
/// the report (apart from wall_time) is identical to verify_grid_serial.
VerificationReport verify_grid(const GridRanges& ranges);

VerificationReport verify_grid_serial(const GridRanges& ranges);

}  // namespace ledin
