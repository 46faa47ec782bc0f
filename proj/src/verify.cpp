#include "debell/verify.hpp"

#include "debell/asymptotics.hpp"
#include "debell/bell.hpp"

#include "json.hpp"

#include <algorithm>
#include <cstdint>
#include <future>
#include <iomanip>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace debell {

using nlohmann::json;

std::string_view to_string(Status status) {
  switch (status) {
    case Status::Equal: return "EQUAL";
    case Status::Unequal: return "UNEQUAL";
    case Status::Skipped: return "SKIPPED";
  }
  return "UNKNOWN";
}

Status parse_status(std::string_view text) {
  for (Status s : {Status::Equal, Status::Unequal, Status::Skipped}) {
    if (to_string(s) == text) return s;
  }
  throw std::invalid_argument("unknown status '" + std::string(text) + "'");
}

GridSpec default_grid() {
  GridSpec g;
  g.alpha = {0, 1, 2};
  g.beta = {1, 2, 4};
  g.gamma = {0, 2, 4};
  g.x = {1, 2};
  g.lambda = {0, 1, 2, 3};
  g.r = {0, 1, 2};
  g.n_max = 8;
  g.w_n_max = 12;
  return g;
}

GridSpec apply(GridSpec grid, const GridOverrides& o) {
  if (o.alpha) grid.alpha = *o.alpha;
  if (o.beta) grid.beta = *o.beta;
  if (o.gamma) grid.gamma = *o.gamma;
  if (o.x) grid.x = *o.x;
  if (o.lambda) grid.lambda = *o.lambda;
  if (o.r) grid.r = *o.r;
  if (o.n_max) grid.n_max = *o.n_max;
  return grid;
}

namespace {

bool divides(const Rational& d, const Rational& v) { return d == 0 || is_integer(Rational(v / d)); }

template <typename T>
std::vector<T> sorted_unique(std::vector<T> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

auto order_key(const ReportRow& row) {
  const ParamSet& p = row.params;
  return std::tie(row.claim, p.alpha, p.beta, p.gamma, p.x, p.lambda, p.r, row.n);
}

ReportRow make_row(const std::string& claim, const ParamSet& p, unsigned n, Rational lhs, Rational rhs,
                   bool asserted) {
  ReportRow row;
  row.claim = claim;
  row.params = p;
  row.n = n;
  row.status = lhs == rhs ? Status::Equal : Status::Unequal;
  row.lhs = std::move(lhs);
  row.rhs = std::move(rhs);
  row.asserted = asserted;
  return row;
}

ReportRow skipped_row(const std::string& claim, const ParamSet& p, unsigned n, const std::string& why,
                      bool asserted) {
  ReportRow row;
  row.claim = claim;
  row.params = p;
  row.n = n;
  row.status = Status::Skipped;
  row.note = why;
  row.asserted = asserted;
  return row;
}

using PointFilter = std::function<bool(const ParamSet&)>;

std::vector<ParamSet> filtered(const GridSpec& grid, const PointFilter& keep) {
  std::vector<ParamSet> out;
  for (const ParamSet& p : grid_points(grid)) {
    if (keep(p)) out.push_back(p);
  }
  return out;
}

// One point per distinct (alpha, beta, gamma, x, r), lambda pinned.
std::vector<ParamSet> lambda_free_points(const GridSpec& grid, unsigned lambda, const PointFilter& keep) {
  GridSpec g = grid;
  g.lambda = {lambda};
  return filtered(g, keep);
}

// Evaluates `sides(p, n)` for n = 0..n_max at every kept point.
std::vector<ReportRow> per_n(const std::string& id, const std::vector<ParamSet>& points, unsigned n_min,
                             unsigned n_max,
                             const std::function<std::vector<std::pair<Rational, Rational>>(const ParamSet&, unsigned)>& sides,
                             const std::function<bool(const ParamSet&, unsigned)>& asserted) {
  std::vector<ReportRow> rows;
  for (const ParamSet& p : points) {
    std::vector<std::pair<Rational, Rational>> values;
    try {
      values = sides(p, n_max);
    } catch (const std::exception& e) {
      for (unsigned n = n_min; n <= n_max; ++n) rows.push_back(skipped_row(id, p, n, e.what(), asserted(p, n)));
      continue;
    }
    for (unsigned n = n_min; n <= n_max; ++n) {
      rows.push_back(make_row(id, p, n, values[n].first, values[n].second, asserted(p, n)));
    }
  }
  return rows;
}

using Sides = std::vector<std::pair<Rational, Rational>>;

template <typename Fn>
Sides zip_with_egf(const ParamSet& p, unsigned n_max, Fn rhs) {
  const std::vector<Rational> egf = bell_egf(n_max, p);
  Sides out;
  for (unsigned n = 0; n <= n_max; ++n) out.emplace_back(egf[n], rhs(n));
  return out;
}

std::vector<ReportRow> example_rows(const std::string& id, const GridSpec& grid, unsigned n, unsigned r,
                                    const std::function<Rational(const ParamSet&)>& claimed) {
  std::vector<ReportRow> rows;
  for (const Rational& alpha : sorted_unique(grid.alpha)) {
    for (const Rational& beta : {Rational(1), Rational(2)}) {
      for (const Rational& gamma : sorted_unique(grid.gamma)) {
        for (const Rational& x : {Rational(1), Rational(2)}) {
          for (unsigned lambda = 0; lambda <= 8; ++lambda) {
            const ParamSet p{alpha, beta, gamma, x, lambda, r};
            rows.push_back(make_row(id, p, n, bell_egf(n, p)[n], claimed(p), false));
          }
        }
      }
    }
  }
  return rows;
}

std::vector<ReportRow> w_rows(const std::string& id, const GridSpec& grid, unsigned f, bool asserted) {
  std::vector<ReportRow> rows;
  for (const ParamSet& p : lambda_free_points(grid, 1, [](const ParamSet&) { return true; })) {
    for (unsigned n = f + 1; n <= grid.w_n_max; ++n) {
      rows.push_back(make_row(id, p, n, w_coefficient(n, f, p), w_explicit(n, f, p), asserted));
    }
  }
  return rows;
}

std::vector<Claim> build_registry() {
  std::vector<Claim> claims;
  const auto any = [](const ParamSet&) { return true; };

  claims.push_back({"T5", "lambda = 1: sum_k d_{k,r} x^k beta^k S(n,k) equals the generating function",
                    [](const GridSpec& g) {
                      return per_n(
                          "T5", filtered(g, [](const ParamSet& p) { return p.lambda == 1; }), 0, g.n_max,
                          [](const ParamSet& p, unsigned n_max) {
                            return zip_with_egf(p, n_max, [&](unsigned n) { return bell_lambda1(n, p); });
                          },
                          [](const ParamSet&, unsigned) { return true; });
                    }});

  claims.push_back({"T33", "sum_k C(k+r+lambda-1, k+r) d_{k,r} x^k beta^k S(n,k) equals the generating function",
                    [any](const GridSpec& g) {
                      return per_n(
                          "T33", filtered(g, any), 0, g.n_max,
                          [](const ParamSet& p, unsigned n_max) {
                            return zip_with_egf(p, n_max, [&](unsigned n) { return bell_general_closed(n, p); });
                          },
                          [](const ParamSet& p, unsigned) { return p.lambda == 1; });
                    }});

  claims.push_back({"T3-n", "section convolution over compositions of n equals the generating function",
                    [any](const GridSpec& g) {
                      return per_n(
                          "T3-n", filtered(g, any), 0, g.n_max,
                          [](const ParamSet& p, unsigned n_max) {
                            return zip_with_egf(p, n_max, [&](unsigned n) { return bell_convolution(n, p); });
                          },
                          [](const ParamSet&, unsigned) { return true; });
                    }});

  claims.push_back({"T3-nr", "section convolution with multinomial upper index n+r equals the generating function",
                    [any](const GridSpec& g) {
                      return per_n(
                          "T3-nr", filtered(g, any), 0, g.n_max,
                          [](const ParamSet& p, unsigned n_max) {
                            return zip_with_egf(p, n_max, [&](unsigned n) { return bell_convolution_shifted(n, p); });
                          },
                          [](const ParamSet&, unsigned) { return false; });
                    }});

  claims.push_back({"OMEGA-ID",
                    "omega_{n+r} = sum_i C(n+r,i) B_{i,lambda} sum_l beta^l S(n+r-i,l,alpha,beta,0) x^l lambda^l",
                    [any](const GridSpec& g) {
                      return per_n(
                          "OMEGA-ID", filtered(g, any), 0, g.n_max,
                          [](const ParamSet& p, unsigned n_max) {
                            Sides out;
                            for (unsigned n = 0; n <= n_max; ++n) {
                              IdentitySides s = omega_identity_check(n, p);
                              out.emplace_back(std::move(s.lhs), std::move(s.rhs));
                            }
                            return out;
                          },
                          [](const ParamSet& p, unsigned) { return p.r == 0; });
                    }});

  claims.push_back({"EQ40-literal", "product over i = 1..lambda with exponents ri, -i, (r+1)i equals the generating function",
                    [any](const GridSpec& g) {
                      return per_n(
                          "EQ40-literal", filtered(g, any), 0, g.n_max,
                          [](const ParamSet& p, unsigned n_max) {
                            Sides out;
                            for (const ProductFormRow& row : product_form_check(n_max, p)) {
                              out.emplace_back(row.reference, row.literal);
                            }
                            return out;
                          },
                          [](const ParamSet& p, unsigned) { return p.lambda == 1; });
                    }});

  claims.push_back({"EQ40-power", "lambda-fold power of the lambda = 1 factor equals the generating function",
                    [any](const GridSpec& g) {
                      return per_n(
                          "EQ40-power", filtered(g, any), 0, g.n_max,
                          [](const ParamSet& p, unsigned n_max) {
                            Sides out;
                            for (const ProductFormRow& row : product_form_check(n_max, p)) {
                              out.emplace_back(row.reference, row.power);
                            }
                            return out;
                          },
                          [](const ParamSet&, unsigned) { return true; });
                    }});

  claims.push_back({"EX-B1x2", "B^{1,x}_{2,lambda} = lambda^2 x^2 beta^2 + lambda x^2 beta^2", [](const GridSpec& g) {
                      return example_rows("EX-B1x2", g, 2, 1, [](const ParamSet& p) {
                        const Rational l = p.lambda;
                        const Rational xb2 = power(p.x * p.beta, 2);
                        return Rational(l * l * xb2 + l * xb2);
                      });
                    }});

  claims.push_back({"EX-B2x4",
                    "B^{2,x}_{4,lambda} = (lambda^4/2 - lambda^3/2 + 2 lambda^3 + lambda^2/2 - 3 lambda) x^4 beta^4",
                    [](const GridSpec& g) {
                      return example_rows("EX-B2x4", g, 4, 2, [](const ParamSet& p) {
                        const Rational l = p.lambda;
                        const Rational poly = power(l, 4) / 2 - power(l, 3) / 2 + 2 * power(l, 3) + power(l, 2) / 2 - 3 * l;
                        return Rational(poly * power(p.x * p.beta, 4));
                      });
                    }});

  claims.push_back({"EX-B2x6", "B^{2,x}_{6,lambda} = C(lambda+5, 6) (6)_3 x^6 beta^6", [](const GridSpec& g) {
                      return example_rows("EX-B2x6", g, 6, 2, [](const ParamSet& p) {
                        return Rational(Rational(binomial(static_cast<long>(p.lambda) + 5, 6)) * falling(6, 3) *
                                        power(p.x * p.beta, 6));
                      });
                    }});

  for (unsigned f = 0; f <= 5; ++f) {
    const std::string id = "W" + std::to_string(f) + "-explicit";
    const bool asserted = f <= 3;
    claims.push_back({id, "partition sum W(n," + std::to_string(f) + ") equals its hand expansion",
                      [id, f, asserted](const GridSpec& g) { return w_rows(id, g, f, asserted); }});
  }

  claims.push_back({"ASYMP-r0",
                    "B_{n,delta}(alpha,beta,gamma delta)/n! against sum_{f<=min(5,n-1)} (delta)_{n-f} W(n,f), r = 0",
                    [](const GridSpec& g) {
                      std::vector<ReportRow> rows;
                      const auto r0 = [](const ParamSet& p) { return p.r == 0; };
                      for (const ParamSet& base : lambda_free_points(g, 1, r0)) {
                        for (unsigned delta : {8u, 20u, 100u}) {
                          ParamSet p = base.with_lambda(delta);
                          for (unsigned n = 1; n <= g.n_max; ++n) {
                            const AsymptoticEstimate e = bell_asymptotic_estimate(n, std::min(5u, n - 1), delta, base);
                            rows.push_back(make_row("ASYMP-r0", p, n, e.exact, e.estimate, n <= 6));
                          }
                        }
                      }
                      return rows;
                    }});

  std::sort(claims.begin(), claims.end(), [](const Claim& a, const Claim& b) { return a.id < b.id; });
  return claims;
}

std::uint64_t fnv1a(std::string_view text, std::uint64_t hash = 1469598103934665603ULL) {
  for (unsigned char c : text) {
    hash ^= c;
    hash *= 1099511628211ULL;
  }
  return hash;
}

json row_to_json(const ReportRow& row) {
  return json{{"claim", row.claim},
              {"alpha", to_string(row.params.alpha)},
              {"beta", to_string(row.params.beta)},
              {"gamma", to_string(row.params.gamma)},
              {"x", to_string(row.params.x)},
              {"lambda", row.params.lambda},
              {"r", row.params.r},
              {"n", row.n},
              {"lhs", to_string(row.lhs)},
              {"rhs", to_string(row.rhs)},
              {"status", std::string(to_string(row.status))},
              {"note", row.note},
              {"asserted", row.asserted}};
}

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string row_line(const ReportRow& row) {
  std::ostringstream os;
  os << row.claim << ',' << to_string(row.params.alpha) << ',' << to_string(row.params.beta) << ','
     << to_string(row.params.gamma) << ',' << to_string(row.params.x) << ',' << row.params.lambda << ','
     << row.params.r << ',' << row.n << ',' << to_string(row.lhs) << ',' << to_string(row.rhs) << ','
     << to_string(row.status) << ',' << csv_quote(row.note) << ',' << (row.asserted ? "true" : "false");
  return os.str();
}

}  // namespace

std::vector<ParamSet> grid_points(const GridSpec& grid) {
  std::vector<ParamSet> out;
  for (const Rational& alpha : sorted_unique(grid.alpha)) {
    for (const Rational& beta : sorted_unique(grid.beta)) {
      if (!divides(alpha, beta)) continue;
      for (const Rational& gamma : sorted_unique(grid.gamma)) {
        if (!divides(alpha, gamma)) continue;
        for (const Rational& x : sorted_unique(grid.x)) {
          for (unsigned lambda : sorted_unique(grid.lambda)) {
            for (unsigned r : sorted_unique(grid.r)) out.push_back({alpha, beta, gamma, x, lambda, r});
          }
        }
      }
    }
  }
  return out;
}

const std::vector<Claim>& claim_registry() {
  static const std::vector<Claim> registry = build_registry();
  return registry;
}

std::vector<std::string> registry_ids() {
  std::vector<std::string> ids;
  for (const Claim& c : claim_registry()) ids.push_back(c.id);
  return ids;
}

VerificationReport run_claims(const std::vector<std::string>& ids, const GridOverrides& overrides) {
  std::vector<const Claim*> selected;
  for (const std::string& id : sorted_unique(ids)) {
    const auto& reg = claim_registry();
    auto it = std::find_if(reg.begin(), reg.end(), [&](const Claim& c) { return c.id == id; });
    if (it == reg.end()) throw std::invalid_argument("unknown claim id '" + id + "'");
    selected.push_back(&*it);
  }
  const GridSpec grid = apply(default_grid(), overrides);

  std::vector<std::future<std::vector<ReportRow>>> pending;
  pending.reserve(selected.size());
  for (const Claim* claim : selected) {
    pending.push_back(std::async(std::launch::async, [claim, &grid] { return claim->evaluate(grid); }));
  }

  VerificationReport report;
  for (std::size_t i = 0; i < selected.size(); ++i) {
    report.claims.push_back(selected[i]->id);
    std::vector<ReportRow> rows = pending[i].get();
    report.rows.insert(report.rows.end(), std::make_move_iterator(rows.begin()), std::make_move_iterator(rows.end()));
  }
  std::stable_sort(report.rows.begin(), report.rows.end(),
                   [](const ReportRow& a, const ReportRow& b) { return order_key(a) < order_key(b); });
  return report;
}

bool asserted_rows_hold(const VerificationReport& report) {
  return std::all_of(report.rows.begin(), report.rows.end(),
                     [](const ReportRow& row) { return !row.asserted || row.status == Status::Equal; });
}

ReportFormat parse_report_format(std::string_view name) {
  if (name == "json") return ReportFormat::Json;
  if (name == "csv") return ReportFormat::Csv;
  if (name == "markdown" || name == "md") return ReportFormat::Markdown;
  throw std::invalid_argument("unknown report format '" + std::string(name) + "'");
}

std::string emit_report(const VerificationReport& report, ReportFormat format) {
  switch (format) {
    case ReportFormat::Json: {
      json rows = json::array();
      for (const ReportRow& row : report.rows) rows.push_back(row_to_json(row));
      return json{{"claims", report.claims}, {"rows", rows}}.dump(1) + "\n";
    }
    case ReportFormat::Csv: {
      std::string out = "claim,alpha,beta,gamma,x,lambda,r,n,lhs,rhs,status,note,asserted\n";
      for (const ReportRow& row : report.rows) out += row_line(row) + "\n";
      return out;
    }
    case ReportFormat::Markdown: {
      std::string out = "# Verification report\n";
      for (const std::string& id : report.claims) {
        out += "\n## " + id + "\n\n";
        out += "| alpha | beta | gamma | x | lambda | r | n | lhs | rhs | status | asserted | note |\n";
        out += "|---|---|---|---|---|---|---|---|---|---|---|---|\n";
        for (const ReportRow& row : report.rows) {
          if (row.claim != id) continue;
          const ParamSet& p = row.params;
          out += "| " + to_string(p.alpha) + " | " + to_string(p.beta) + " | " + to_string(p.gamma) + " | " +
                 to_string(p.x) + " | " + std::to_string(p.lambda) + " | " + std::to_string(p.r) + " | " +
                 std::to_string(row.n) + " | " + to_string(row.lhs) + " | " + to_string(row.rhs) + " | " +
                 std::string(to_string(row.status)) + " | " + (row.asserted ? "yes" : "no") + " | " + row.note +
                 " |\n";
        }
      }
      return out;
    }
  }
  throw std::invalid_argument("unknown report format");
}

VerificationReport parse_report_json(std::string_view text) {
  const json doc = json::parse(text);
  VerificationReport report;
  report.claims = doc.at("claims").get<std::vector<std::string>>();
  for (const json& j : doc.at("rows")) {
    ReportRow row;
    row.claim = j.at("claim").get<std::string>();
    row.params.alpha = parse_rational(j.at("alpha").get<std::string>());
    row.params.beta = parse_rational(j.at("beta").get<std::string>());
    row.params.gamma = parse_rational(j.at("gamma").get<std::string>());
    row.params.x = parse_rational(j.at("x").get<std::string>());
    row.params.lambda = j.at("lambda").get<unsigned>();
    row.params.r = j.at("r").get<unsigned>();
    row.n = j.at("n").get<unsigned>();
    row.lhs = parse_rational(j.at("lhs").get<std::string>());
    row.rhs = parse_rational(j.at("rhs").get<std::string>());
    row.status = parse_status(j.at("status").get<std::string>());
    row.note = j.at("note").get<std::string>();
    row.asserted = j.at("asserted").get<bool>();
    report.rows.push_back(std::move(row));
  }
  return report;
}

std::map<std::string, ClaimOutcome> summarize(const VerificationReport& report) {
  std::map<std::string, ClaimOutcome> out;
  std::map<std::string, std::uint64_t> hashes;
  for (const std::string& id : report.claims) {
    out[id];
    hashes[id] = fnv1a("");
  }
  for (const ReportRow& row : report.rows) {
    ClaimOutcome& o = out[row.claim];
    switch (row.status) {
      case Status::Equal: ++o.equal; break;
      case Status::Unequal: ++o.unequal; break;
      case Status::Skipped: ++o.skipped; break;
    }
    if (row.asserted && row.status != Status::Equal) ++o.asserted_failures;
    auto [it, inserted] = hashes.try_emplace(row.claim, fnv1a(""));
    it->second = fnv1a(row_line(row) + "\n", it->second);
  }
  for (auto& [id, o] : out) {
    std::ostringstream hex;
    hex << std::hex << std::setw(16) << std::setfill('0') << hashes[id];
    o.digest = hex.str();
  }
  return out;
}

std::string outcomes_to_json(const std::map<std::string, ClaimOutcome>& outcomes) {
  json doc = json::object();
  for (const auto& [id, o] : outcomes) {
    doc[id] = json{{"EQUAL", o.equal},
                   {"UNEQUAL", o.unequal},
                   {"SKIPPED", o.skipped},
                   {"asserted_failures", o.asserted_failures},
                   {"digest", o.digest}};
  }
  return doc.dump(2) + "\n";
}

std::map<std::string, ClaimOutcome> outcomes_from_json(std::string_view text) {
  const json doc = json::parse(text);
  std::map<std::string, ClaimOutcome> out;
  for (const auto& [id, j] : doc.items()) {
    ClaimOutcome o;
    o.equal = j.at("EQUAL").get<unsigned>();
    o.unequal = j.at("UNEQUAL").get<unsigned>();
    o.skipped = j.at("SKIPPED").get<unsigned>();
    o.asserted_failures = j.at("asserted_failures").get<unsigned>();
    o.digest = j.at("digest").get<std::string>();
    out.emplace(id, std::move(o));
  }
  return out;
}

}  // namespace debell
