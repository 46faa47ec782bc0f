#pragma once

// Claim registry and grid runner. Each claim pairs two exact evaluations
// (lhs, rhs) over a parameter grid; every (claim, point) pair becomes one
// report row. Claims known to disagree with the generating function are
// still evaluated; the `asserted` flag marks the rows that must be EQUAL.

#include "debell/exact.hpp"
#include "debell/params.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace debell {

enum class Status { Equal, Unequal, Skipped };

std::string_view to_string(Status status);
Status parse_status(std::string_view text);

struct ReportRow {
  std::string claim;
  ParamSet params;
  unsigned n = 0;
  Rational lhs;
  Rational rhs;
  Status status = Status::Skipped;
  std::string note;
  bool asserted = false;

  friend bool operator==(const ReportRow&, const ReportRow&) = default;
};

struct VerificationReport {
  std::vector<std::string> claims;
  std::vector<ReportRow> rows;

  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

struct GridSpec {
  std::vector<Rational> alpha;
  std::vector<Rational> beta;
  std::vector<Rational> gamma;
  std::vector<Rational> x;
  std::vector<unsigned> lambda;
  std::vector<unsigned> r;
  unsigned n_max = 8;
  unsigned w_n_max = 12;  // index range for the W(n, f) claims
};

/// alpha {0,1,2}, beta {1,2,4}, gamma {0,2,4}, x {1,2}, lambda {0..3}, r {0,1,2}, n <= 8.
GridSpec default_grid();

struct GridOverrides {
  std::optional<std::vector<Rational>> alpha, beta, gamma, x;
  std::optional<std::vector<unsigned>> lambda, r;
  std::optional<unsigned> n_max;
};

GridSpec apply(GridSpec grid, const GridOverrides& overrides);

/// Grid points (n excluded) with alpha | beta and alpha | gamma whenever alpha != 0,
/// in lexicographic order.
std::vector<ParamSet> grid_points(const GridSpec& grid);

struct Claim {
  std::string id;
  std::string statement;
  std::function<std::vector<ReportRow>(const GridSpec&)> evaluate;
};

const std::vector<Claim>& claim_registry();
std::vector<std::string> registry_ids();

/// Unknown ids throw std::invalid_argument before anything is evaluated.
/// Claims run concurrently; rows come back sorted by claim id, then parameters, then n.
VerificationReport run_claims(const std::vector<std::string>& ids, const GridOverrides& overrides = {});

/// True when every asserted row is EQUAL.
bool asserted_rows_hold(const VerificationReport& report);

enum class ReportFormat { Json, Csv, Markdown };
ReportFormat parse_report_format(std::string_view name);

std::string emit_report(const VerificationReport& report, ReportFormat format);
VerificationReport parse_report_json(std::string_view text);

struct ClaimOutcome {
  unsigned equal = 0;
  unsigned unequal = 0;
  unsigned skipped = 0;
  unsigned asserted_failures = 0;
  std::string digest;  // FNV-1a over the claim's serialized rows

  friend bool operator==(const ClaimOutcome&, const ClaimOutcome&) = default;
};

std::map<std::string, ClaimOutcome> summarize(const VerificationReport& report);
std::string outcomes_to_json(const std::map<std::string, ClaimOutcome>& outcomes);
std::map<std::string, ClaimOutcome> outcomes_from_json(std::string_view text);

}  // namespace debell
