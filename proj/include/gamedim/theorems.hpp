#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace gamedim {

// Closed-form values for the game families, as formulas of their parameters.

struct Nim1Expectation {
  std::uint64_t order = 0;
  std::uint64_t beta = 0;
  /// Arc count as stated for the single-heap graph, C(n+2, 2).
  std::uint64_t size_stated = 0;
  /// Arc count of the acyclic tournament on n+1 vertices, C(n+1, 2).
  std::uint64_t size_construction = 0;
};

struct Nim2Expectation {
  std::uint64_t order = 0;
  std::uint64_t size = 0;
  std::uint64_t beta = 0;
};

struct BetaRange {
  std::uint64_t min = 0;
  std::uint64_t max = 0;
  bool exact() const { return min == max; }
};

Nim1Expectation expected_nim1(std::uint64_t n);
Nim2Expectation expected_nim2(std::uint64_t n);
/// Two-heap HATS-Nim {a, b}, a <= b, after dividing out gcd(a, b).
std::uint64_t expected_hats(std::uint64_t a, std::uint64_t b);
/// Opposing kings on a 1 x n strip.
std::uint64_t expected_kings(std::uint64_t n);
/// Two non-attacking bishops on an a x b board, a in {2, 3}.
BetaRange expected_bishops(std::uint64_t a, std::uint64_t b);

enum class ReportStatus { Match, Mismatch, PaperDiscrepancyNoted, SolverBound };

std::string to_string(ReportStatus status);

struct Quantities {
  std::optional<std::uint64_t> order;
  std::optional<std::uint64_t> size;
  std::optional<std::uint64_t> beta;
  std::optional<std::uint64_t> beta_min;
  std::optional<std::uint64_t> beta_max;
  /// Outcome of a yes/no check (witness resolves, table reproduced, bound holds).
  std::optional<bool> holds;

  friend bool operator==(const Quantities&, const Quantities&) = default;
};

struct TheoremReport {
  std::string theorem_id;
  std::string instance;
  Quantities expected;
  Quantities computed;
  ReportStatus status = ReportStatus::Match;
  std::string note;

  friend bool operator==(const TheoremReport&, const TheoremReport&) = default;
};

/// Largest parameter checked per family; 0 disables a family.
struct VerifyLimits {
  std::uint64_t nim1_max = 8;
  std::uint64_t nim2_max = 5;
  /// HATS pairs 1 <= a <= b <= hats_max_b.
  std::uint64_t hats_max_b = 7;
  std::uint64_t kings_max = 6;
  /// Boards 2 x n (n >= 2) and 3 x n (n >= 3) up to this many columns.
  std::uint64_t bishops_max_cols = 6;
  bool fox_geese = true;
  /// Per-instance landmark bound for the exact solver; unset means none.
  std::optional<std::size_t> max_k;

  static VerifyLimits none();
};

/// Builds every instance within the limits, solves it exactly and compares
/// with the closed forms and the published witness sets. Solver bound
/// failures are reported in-band with status SolverBound. The output order
/// is fixed and independent of `jobs`.
std::vector<TheoremReport> verify_all(const VerifyLimits& limits, unsigned jobs = 1);

/// One JSON object per line.
std::string report_to_json_line(const TheoremReport& report);
std::string format_report_table(const std::vector<TheoremReport>& reports);

}  // namespace gamedim
