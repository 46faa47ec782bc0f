#include "debell/cli.hpp"

#include "debell/asymptotics.hpp"
#include "debell/bell.hpp"
#include "debell/derangements.hpp"
#include "debell/enumerate.hpp"
#include "debell/exact.hpp"
#include "debell/stirling.hpp"
#include "debell/verify.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace debell {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Rational parse_flag(const std::string& flag, const std::string& text) {
  try {
    return parse_rational(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError("--" + flag + ": " + e.what());
  }
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::vector<Rational> parse_rational_list(const std::string& flag, const std::string& text) {
  std::vector<Rational> out;
  for (const std::string& item : split_list(text)) out.push_back(parse_flag(flag, item));
  if (out.empty()) throw UsageError("--" + flag + ": empty list");
  return out;
}

std::vector<unsigned> parse_unsigned_list(const std::string& flag, const std::string& text) {
  std::vector<unsigned> out;
  for (const std::string& item : split_list(text)) {
    const Rational v = parse_flag(flag, item);
    if (!is_nonnegative_integer(v) || !v.get_num().fits_uint_p()) {
      throw UsageError("--" + flag + ": expected a nonnegative integer, got " + item);
    }
    out.push_back(static_cast<unsigned>(v.get_num().get_ui()));
  }
  if (out.empty()) throw UsageError("--" + flag + ": empty list");
  return out;
}

// Raw flag values shared by the subcommands.
struct CliConfig {
  std::string alpha = "0";
  std::string beta = "1";
  std::string gamma = "0";
  std::string x = "1";
  unsigned lambda = 1;
  unsigned r = 0;
  unsigned n = 0;
  unsigned max_n = 8;
  unsigned k = 0;
  std::optional<unsigned> order;
  std::string format = "plain";
  std::string out_path;

  ParamSet params() const {
    return ParamSet{parse_flag("alpha", alpha), parse_flag("beta", beta), parse_flag("gamma", gamma),
                    parse_flag("x", x), lambda, r};
  }
};

void add_param_flags(CLI::App* cmd, CliConfig& cfg) {
  cmd->add_option("--alpha", cfg.alpha, "alpha as p/q or integer; 0 is the exponential limit");
  cmd->add_option("--beta", cfg.beta, "beta");
  cmd->add_option("--gamma", cfg.gamma, "gamma");
  cmd->add_option("--x", cfg.x, "x");
  cmd->add_option("--lambda", cfg.lambda, "lambda (nonnegative integer)");
  cmd->add_option("--r", cfg.r, "r (nonnegative integer)");
}

void add_output_flags(CLI::App* cmd, CliConfig& cfg, std::vector<std::string> formats) {
  cmd->add_option("--format", cfg.format, "output format")->check(CLI::IsMember(std::move(formats)));
  cmd->add_option("--out", cfg.out_path, "write output to this path instead of stdout");
}

using Fields = std::vector<std::pair<std::string, std::string>>;

Fields param_fields(const ParamSet& p) {
  return {{"alpha", to_string(p.alpha)}, {"beta", to_string(p.beta)},         {"gamma", to_string(p.gamma)},
          {"x", to_string(p.x)},         {"lambda", std::to_string(p.lambda)}, {"r", std::to_string(p.r)}};
}

std::string render_value(const std::string& command, const Fields& fields, const std::string& value,
                         const std::string& format) {
  if (format == "json") {
    nlohmann::ordered_json doc;
    doc["command"] = command;
    for (const auto& [k, v] : fields) doc[k] = v;
    doc["value"] = value;
    return doc.dump() + "\n";
  }
  if (format == "csv") {
    std::string header;
    std::string row;
    for (const auto& [k, v] : fields) {
      header += k + ",";
      row += v + ",";
    }
    return header + "value\n" + row + value + "\n";
  }
  return value + "\n";
}

void emit(const CliConfig& cfg, const std::string& text, std::ostream& out) {
  if (cfg.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(cfg.out_path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open " + cfg.out_path + " for writing");
  file << text;
}

unsigned series_order(const CliConfig& cfg, unsigned n) {
  const unsigned order = cfg.order.value_or(n + 2);
  if (order < n) throw UsageError("--order must be at least the requested index");
  return order;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computation and verification of higher-order r-deranged Bell numbers", "debell"};
  app.require_subcommand(1);
  CliConfig cfg;

  // stirling
  std::string stirling_route = "rec";
  auto* stirling = app.add_subcommand("stirling", "generalized Stirling number S(n,k,alpha,beta,gamma)");
  stirling->add_option("--n", cfg.n)->required();
  stirling->add_option("--k", cfg.k)->required();
  stirling->add_option("--route", stirling_route)->check(CLI::IsMember({"rec", "egf"}));
  stirling->add_option("--order", cfg.order, "series order for the egf route (default n+2)");
  add_param_flags(stirling, cfg);
  add_output_flags(stirling, cfg, {"plain", "json", "csv"});

  // rderange
  std::string rderange_route = "egf";
  unsigned pivot = 0;
  auto* rderange = app.add_subcommand("rderange", "r-derangement number d_{k,r}");
  rderange->add_option("--k", cfg.k)->required();
  rderange->add_option("--r", cfg.r);
  rderange->add_option("--route", rderange_route)->check(CLI::IsMember({"egf", "rec", "closed"}));
  rderange->add_option("--s", pivot, "recurrence pivot 1..r (default r)");
  add_output_flags(rderange, cfg, {"plain", "json", "csv"});

  // bell
  std::string bell_route = "egf";
  auto* bell = app.add_subcommand("bell", "higher-order r-deranged Bell number B^{r,x}_{n,lambda}");
  bell->add_option("--n", cfg.n)->required();
  bell->add_option("--route", bell_route)
      ->check(CLI::IsMember({"egf", "lambda1", "closed", "convolution", "classic"}));
  bell->add_option("--order", cfg.order, "series order for the egf route (default n+2)");
  add_param_flags(bell, cfg);
  add_output_flags(bell, cfg, {"plain", "json", "csv"});

  // omega
  std::string omega_route = "sum";
  auto* omega_cmd = app.add_subcommand("omega", "omega polynomial value omega_n(x; alpha, beta, gamma, lambda)");
  omega_cmd->add_option("--n", cfg.n)->required();
  omega_cmd->add_option("--route", omega_route)->check(CLI::IsMember({"sum", "egf"}));
  add_param_flags(omega_cmd, cfg);
  add_output_flags(omega_cmd, cfg, {"plain", "json", "csv"});

  // enumerate
  std::string family = "set-partitions";
  bool list = false;
  auto* enumerate_cmd = app.add_subcommand("enumerate", "brute-force count of a combinatorial family");
  enumerate_cmd->add_option("--family", family)
      ->required()
      ->check(CLI::IsMember({"set-partitions", "r-stirling", "ordered", "barred", "derangements", "r-derangements",
                             "r-deranged-partitions"}));
  enumerate_cmd->add_option("--n", cfg.n);
  enumerate_cmd->add_option("--k", cfg.k);
  enumerate_cmd->add_option("--r", cfg.r);
  enumerate_cmd->add_option("--lambda", cfg.lambda);
  enumerate_cmd->add_flag("--list", list, "print every object, one per line, before the count");
  add_output_flags(enumerate_cmd, cfg, {"plain", "json", "csv"});

  // asymp
  unsigned m = 0;
  std::string deltas = "100,1000,10000";
  auto* asymp = app.add_subcommand("asymp", "convergence table of the large-lambda expansion");
  asymp->add_option("--n", cfg.n)->required();
  asymp->add_option("--m", m, "highest W(n,f) index used (<= n-1)")->required();
  asymp->add_option("--deltas", deltas, "comma-separated positive integers");
  add_param_flags(asymp, cfg);
  std::string asymp_format = "csv";
  asymp->add_option("--format", asymp_format)->check(CLI::IsMember({"csv", "json"}));
  asymp->add_option("--out", cfg.out_path);

  // verify
  std::string claims;
  std::string grid_alpha, grid_beta, grid_gamma, grid_x, grid_lambda, grid_r;
  std::optional<unsigned> grid_n_max;
  bool summary = false;
  std::string verify_format = "json";
  std::string verify_out;
  auto* verify = app.add_subcommand("verify", "evaluate registered claims over a parameter grid");
  verify->add_option("--claims", claims, "comma-separated claim ids (default: all)");
  verify->add_option("--format", verify_format)->check(CLI::IsMember({"json", "csv", "markdown"}));
  verify->add_option("--out", verify_out);
  verify->add_option("--alpha", grid_alpha, "grid override: comma-separated values");
  verify->add_option("--beta", grid_beta);
  verify->add_option("--gamma", grid_gamma);
  verify->add_option("--x", grid_x);
  verify->add_option("--lambda", grid_lambda);
  verify->add_option("--r", grid_r);
  verify->add_option("--max-n", grid_n_max);
  verify->add_flag("--summary", summary, "print per-claim outcome counts and digests instead of rows");

  // table
  auto* table = app.add_subcommand("table", "CSV of B^{r,x}_{n,lambda} for n = 0..max-n");
  table->add_option("--max-n", cfg.max_n)->required();
  add_param_flags(table, cfg);
  table->add_option("--out", cfg.out_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "debell: " << e.what() << "\n";
    return 2;
  }

  try {
    if (stirling->parsed()) {
      const ParamSet p = cfg.params();
      if (cfg.k > cfg.n) throw UsageError("--k must not exceed --n");
      const Rational value = stirling_route == "egf"
                                 ? stirling_egf(cfg.n, cfg.k, stirling_params(p), series_order(cfg, cfg.n))
                                 : stirling_rec(cfg.n, cfg.k, stirling_params(p));
      Fields f{{"n", std::to_string(cfg.n)}, {"k", std::to_string(cfg.k)}, {"alpha", to_string(p.alpha)},
               {"beta", to_string(p.beta)},  {"gamma", to_string(p.gamma)}, {"route", stirling_route}};
      emit(cfg, render_value("stirling", f, to_string(value), cfg.format), out);
    } else if (rderange->parsed()) {
      Integer value;
      if (rderange_route == "closed") {
        if (cfg.r != 0) throw UsageError("the closed route covers r = 0 only");
        value = derangement(cfg.k);
      } else if (rderange_route == "rec") {
        value = r_derangement_rec(cfg.k, cfg.r, pivot == 0 ? cfg.r : pivot);
      } else {
        value = r_derangement_egf(cfg.k, cfg.r);
      }
      Fields f{{"k", std::to_string(cfg.k)}, {"r", std::to_string(cfg.r)}, {"route", rderange_route}};
      emit(cfg, render_value("rderange", f, to_string(value), cfg.format), out);
    } else if (bell->parsed()) {
      const ParamSet p = cfg.params();
      Rational value;
      if (bell_route == "egf") {
        value = egf_coeff(bell_series(p, series_order(cfg, cfg.n)), cfg.n);
      } else {
        value = compute_bell(cfg.n, p, parse_bell_route(bell_route)).value;
      }
      Fields f = param_fields(p);
      f.insert(f.begin(), {"n", std::to_string(cfg.n)});
      f.emplace_back("route", bell_route);
      emit(cfg, render_value("bell", f, to_string(value), cfg.format), out);
    } else if (omega_cmd->parsed()) {
      const ParamSet p = cfg.params();
      const Rational value = omega_route == "egf" ? omega_egf(cfg.n, p)[cfg.n] : omega(cfg.n, p);
      Fields f = param_fields(p);
      f.insert(f.begin(), {"n", std::to_string(cfg.n)});
      f.emplace_back("route", omega_route);
      emit(cfg, render_value("omega", f, to_string(value), cfg.format), out);
    } else if (enumerate_cmd->parsed()) {
      EnumQuery q{parse_family(family), cfg.n, cfg.k, cfg.r, cfg.lambda};
      std::string listing;
      const ArrangementTally tally =
          list ? enumerate(q, [&](const std::string& line) { listing += line + "\n"; }) : enumerate(q);
      Fields f{{"family", family},
               {"n", std::to_string(q.n)},
               {"k", std::to_string(q.k)},
               {"r", std::to_string(q.r)},
               {"lambda", std::to_string(q.lambda)}};
      emit(cfg, listing + render_value("enumerate", f, to_string(tally.count), cfg.format), out);
    } else if (asymp->parsed()) {
      const ParamSet p = cfg.params();
      const std::vector<unsigned> delta_values = parse_unsigned_list("deltas", deltas);
      nlohmann::ordered_json rows = nlohmann::ordered_json::array();
      std::string csv = "delta,estimate,exact,rel_error,status\n";
      for (unsigned delta : delta_values) {
        const AsymptoticEstimate e = bell_asymptotic_estimate(cfg.n, m, delta, p);
        const std::string status = e.status == EstimateStatus::Ok ? "ok" : "exact-zero";
        csv += std::to_string(delta) + "," + to_string(e.estimate) + "," + to_string(e.exact) + "," +
               to_string(e.rel_error) + "," + status + "\n";
        rows.push_back({{"delta", delta},
                        {"estimate", to_string(e.estimate)},
                        {"exact", to_string(e.exact)},
                        {"rel_error", to_string(e.rel_error)},
                        {"status", status}});
      }
      emit(cfg, asymp_format == "json" ? rows.dump(1) + "\n" : csv, out);
    } else if (verify->parsed()) {
      std::vector<std::string> ids = claims.empty() ? registry_ids() : split_list(claims);
      for (const std::string& id : ids) {
        const auto known = registry_ids();
        if (std::find(known.begin(), known.end(), id) == known.end()) {
          throw UsageError("unknown claim id '" + id + "'");
        }
      }
      GridOverrides o;
      if (!grid_alpha.empty()) o.alpha = parse_rational_list("alpha", grid_alpha);
      if (!grid_beta.empty()) o.beta = parse_rational_list("beta", grid_beta);
      if (!grid_gamma.empty()) o.gamma = parse_rational_list("gamma", grid_gamma);
      if (!grid_x.empty()) o.x = parse_rational_list("x", grid_x);
      if (!grid_lambda.empty()) o.lambda = parse_unsigned_list("lambda", grid_lambda);
      if (!grid_r.empty()) o.r = parse_unsigned_list("r", grid_r);
      o.n_max = grid_n_max;
      const VerificationReport report = run_claims(ids, o);
      cfg.out_path = verify_out;
      emit(cfg,
           summary ? outcomes_to_json(summarize(report)) : emit_report(report, parse_report_format(verify_format)),
           out);
      return asserted_rows_hold(report) ? 0 : 1;
    } else if (table->parsed()) {
      const ParamSet p = cfg.params();
      const std::vector<Rational> values = bell_egf(cfg.max_n, p);
      std::string csv = "n,value\n";
      for (unsigned n = 0; n <= cfg.max_n; ++n) csv += std::to_string(n) + "," + to_string(values[n]) + "\n";
      emit(cfg, csv, out);
    }
  } catch (const UsageError& e) {
    err << "debell: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "debell: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace debell
