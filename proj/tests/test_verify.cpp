#include "debell/verify.hpp"

#include "doctest.h"

#include <set>
#include <stdexcept>

using namespace debell;

namespace {

GridOverrides small_grid() {
  GridOverrides o;
  o.alpha = std::vector<Rational>{0, 1};
  o.beta = std::vector<Rational>{1, 2};
  o.gamma = std::vector<Rational>{0, 2};
  o.x = std::vector<Rational>{1};
  o.lambda = std::vector<unsigned>{0, 1, 2};
  o.r = std::vector<unsigned>{0, 1};
  o.n_max = 4;
  return o;
}

}  // namespace

TEST_CASE("registry completeness") {
  const std::set<std::string> expected{"T5",         "T33",        "T3-n",     "T3-nr",    "OMEGA-ID", "EQ40-literal",
                                       "EQ40-power", "EX-B1x2",    "EX-B2x4",  "EX-B2x6",  "W4-explicit",
                                       "W5-explicit", "ASYMP-r0"};
  const auto ids = registry_ids();
  const std::set<std::string> have(ids.begin(), ids.end());
  CHECK(have.size() == ids.size());
  for (const auto& id : expected) CHECK_MESSAGE(have.count(id) == 1, id);
  CHECK(std::is_sorted(ids.begin(), ids.end()));
}

TEST_CASE("grid filtering") {
  const auto pts = grid_points(default_grid());
  CHECK_FALSE(pts.empty());
  for (const auto& p : pts) {
    if (p.alpha != 0) {
      CHECK(is_integer(p.beta / p.alpha));
      CHECK(is_integer(p.gamma / p.alpha));
    }
  }
  const auto g = apply(default_grid(), small_grid());
  CHECK(g.n_max == 4);
  CHECK(g.alpha.size() == 2);
}

TEST_CASE("unknown ids are rejected up front") {
  CHECK_THROWS_AS(run_claims({"T5", "NOPE"}), std::invalid_argument);
}

TEST_CASE("run_claims on a small grid") {
  const auto report = run_claims({"T5", "T3-n", "EQ40-power", "T33"}, small_grid());
  CHECK(report.claims == std::vector<std::string>{"EQ40-power", "T3-n", "T33", "T5"});
  std::set<std::string> seen;
  for (const auto& row : report.rows) {
    seen.insert(row.claim);
    if (row.claim != "T33") CHECK(row.status == Status::Equal);
    if (row.claim == "T33" && row.params.lambda == 1) CHECK(row.status == Status::Equal);
  }
  CHECK(seen.size() == 4);
  CHECK(asserted_rows_hold(report));
  CHECK(run_claims({"T5", "T3-n", "EQ40-power", "T33"}, small_grid()) == report);
}

TEST_CASE("serialization") {
  const auto report = run_claims({"T3-nr", "OMEGA-ID"}, small_grid());
  CHECK(parse_report_json(emit_report(report, ReportFormat::Json)) == report);
  CHECK(emit_report(report, ReportFormat::Json) == emit_report(report, ReportFormat::Json));

  const VerificationReport empty;
  CHECK(parse_report_json(emit_report(empty, ReportFormat::Json)) == empty);
  CHECK(emit_report(empty, ReportFormat::Csv) == "claim,alpha,beta,gamma,x,lambda,r,n,lhs,rhs,status,note,asserted\n");
  CHECK(emit_report(empty, ReportFormat::Markdown).find("# Verification report") == 0);

  VerificationReport one;
  one.claims = {"T5"};
  one.rows.push_back(ReportRow{"T5", ParamSet{1, 2, 2, 3, 1, 1}, 3, Rational(7, 2), Rational(7, 2), Status::Equal,
                               "note, with comma", true});
  CHECK(parse_report_json(emit_report(one, ReportFormat::Json)) == one);

  const std::string md = emit_report(report, ReportFormat::Markdown);
  CHECK(md.find("## OMEGA-ID") != std::string::npos);
  CHECK(md.find("## T3-nr") != std::string::npos);
  std::size_t headers = 0;
  for (std::size_t at = md.find("| alpha |"); at != std::string::npos; at = md.find("| alpha |", at + 1)) ++headers;
  CHECK(headers == 2);

  CHECK(parse_report_format("md") == ReportFormat::Markdown);
  CHECK_THROWS_AS(parse_report_format("xml"), std::invalid_argument);
  for (Status s : {Status::Equal, Status::Unequal, Status::Skipped}) CHECK(parse_status(to_string(s)) == s);
}

TEST_CASE("outcome summaries") {
  const auto report = run_claims({"T33"}, small_grid());
  const auto outcomes = summarize(report);
  REQUIRE(outcomes.count("T33") == 1);
  const auto& o = outcomes.at("T33");
  CHECK(o.equal + o.unequal + o.skipped == report.rows.size());
  CHECK(o.unequal > 0);
  CHECK(o.asserted_failures == 0);
  CHECK(o.digest.size() == 16);
  CHECK(outcomes_from_json(outcomes_to_json(outcomes)) == outcomes);
}
