#include <CLI11.hpp>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <sstream>

#include "excludant/asymptotics.hpp"
#include "excludant/bijection.hpp"
#include "excludant/errors.hpp"
#include "excludant/identities.hpp"

using namespace excludant;
using nlohmann::json;

namespace {

enum ExitCode { kOk = 0, kVerifyFailed = 1, kUsage = 2, kBudget = 3 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require_format(const std::string& f, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed)
    if (f == a) return;
  throw UsageError("unsupported --format '" + f + "'");
}

std::vector<long> parse_checkpoints(const std::string& text) {
  std::vector<long> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    std::size_t used = 0;
    long v = 0;
    try {
      v = std::stol(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size() || v < 1) throw UsageError("bad checkpoint '" + tok + "'");
    out.push_back(v);
  }
  if (out.empty()) throw UsageError("no checkpoints given");
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

// ----------------------------------------------------------------------------

int cmd_list() {
  std::cout << "statistic\tidentifier\tnotation\tmeaning\n";
  for (auto id : kAllStatistics)
    std::cout << statistic_name(id) << '\t' << statistic_identifier(id) << '\t'
              << statistic_notation(id) << '\t' << statistic_description(id) << '\n';
  std::cout << "\ntheorem\tstatistic\tidentity\n";
  for (auto t : kAllTheorems)
    std::cout << theorem_name(t) << '\t' << statistic_name(theorem_statistic(t)) << '\t'
              << theorem_title(t) << '\n';
  return kOk;
}

struct SeqArgs {
  std::string stat, engine = "series", format = "list";
  int n = 0;
  int budget = kDefaultEnumerationBudget;
  bool self_check = false;
};

int cmd_seq(const SeqArgs& a) {
  require_format(a.format, {"list", "table", "csv", "json"});
  if (a.engine != "series" && a.engine != "enumerate")
    throw UsageError("--engine must be 'enumerate' or 'series'");
  if (a.n < 0) throw UsageError("--n must be non-negative");
  const StatisticId id = parse_statistic(a.stat);

  std::vector<bigint> values;
  if (a.engine == "enumerate") {
    values = sequence_values(id, a.n, a.budget);
  } else {
    values = sequence_series(id, a.n).coeffs();
  }

  int status = kOk;
  std::optional<int> disagreement;
  if (a.self_check) {
    const int upto = std::min(a.n, a.budget);
    const auto other = a.engine == "enumerate" ? sequence_series(id, upto).coeffs()
                                               : sequence_values(id, upto, a.budget);
    disagreement = first_difference(values, other, upto);
    if (disagreement) status = kVerifyFailed;
  }

  if (a.format == "list") {
    for (std::size_t n = 0; n < values.size(); ++n) std::cout << (n ? "," : "") << values[n];
    std::cout << '\n';
  } else if (a.format == "table") {
    for (std::size_t n = 0; n < values.size(); ++n) std::cout << n << '\t' << values[n] << '\n';
  } else if (a.format == "csv") {
    std::cout << "n,value\r\n";
    for (std::size_t n = 0; n < values.size(); ++n) std::cout << n << ',' << values[n] << "\r\n";
  } else {
    json j;
    j["statistic"] = statistic_name(id);
    j["engine"] = a.engine;
    j["values"] = json::array();
    for (const auto& v : values) j["values"].push_back(v.str());
    if (a.self_check) j["self_check"] = disagreement ? "fail" : "pass";
    std::cout << j.dump(2) << '\n';
  }
  if (a.self_check && a.format != "json") {
    if (disagreement)
      std::cerr << "self-check: engines disagree at n=" << *disagreement << '\n';
    else
      std::cerr << "self-check: engines agree for n <= " << std::min(a.n, a.budget) << '\n';
  }
  return status;
}

struct VerifyArgs {
  bool all = false, printed = false, series_only = false;
  std::vector<std::string> theorems;
  std::optional<int> order, n_enum, perturb_at;
  std::string format = "table", profile = "default";
};

int cmd_verify(const VerifyArgs& a) {
  require_format(a.format, {"table", "json"});
  if (a.profile != "default" && a.profile != "deep")
    throw UsageError("--profile must be 'default' or 'deep'");
  if (!a.all && a.theorems.empty()) throw UsageError("give --all or --theorem");

  std::vector<TheoremId> which;
  if (a.all) which.assign(kAllTheorems.begin(), kAllTheorems.end());
  for (const auto& t : a.theorems) which.push_back(parse_theorem(t));

  const bool deep = a.profile == "deep";
  const int order = a.order.value_or(deep ? kDeepOrder : kDefaultOrder);
  VerifyOptions opt;
  opt.series_only = a.series_only || (deep && !a.n_enum);
  opt.variant = a.printed ? ClosedFormVariant::AsPrinted : ClosedFormVariant::Corrected;
  opt.perturb_at = a.perturb_at;
  const int n_enum = opt.series_only ? 0 : std::min(a.n_enum.value_or(kDefaultEnumBound), order);
  if (n_enum > opt.enum_budget)
    throw BudgetExceeded("--enum " + std::to_string(n_enum) + " exceeds the enumeration budget " +
                         std::to_string(opt.enum_budget) + "; use --series-only for larger orders");

  bool all_pass = true;
  json reports = json::array();
  for (auto t : which) {
    const auto r = verify(t, order, n_enum, opt);
    all_pass = all_pass && r.pass;
    if (a.format == "json")
      reports.push_back(json::parse(to_json(r)));
    else
      std::cout << describe(r) << std::endl;
  }
  if (a.format == "json") std::cout << reports.dump(2) << '\n';
  return all_pass ? kOk : kVerifyFailed;
}

struct BijectionArgs {
  std::optional<std::string> map, inverse;
  std::optional<int> k, check, n;
  bool diagram = false;
  std::string format = "table";
};

int cmd_bijection(const BijectionArgs& a) {
  require_format(a.format, {"table", "json"});
  const int modes = (a.map ? 1 : 0) + (a.inverse ? 1 : 0) + (a.check ? 1 : 0);
  if (modes != 1) throw UsageError("give exactly one of --map, --inverse, --check");

  if (a.map) {
    const Partition p = parse_partition(*a.map);
    const int k = a.k.value_or(0);
    const int n = a.n.value_or(weight(p) + k * (k + 1));
    const auto img = phi({p, k}, n);
    if (a.format == "json") {
      json j{{"input", format_partition(p, ",")}, {"k", k}, {"n", n}, {"image", format_colored(img)}};
      std::cout << j.dump(2) << '\n';
    } else {
      std::cout << format_colored(img) << '\n';
    }
    if (a.diagram) {
      Partition mu;
      for (int part : p)
        if (part % 2 == 0) mu.push_back(part / 2);
      std::cerr << render_staircase(augmented_diagram(mu, k));
    }
    return kOk;
  }

  if (a.inverse) {
    const auto cp = parse_colored(*a.inverse);
    const auto pre = phi_inverse(cp);
    if (a.format == "json") {
      json j{{"input", format_colored(cp)},
             {"k", pre.k},
             {"partition", format_partition(pre.partition, ",")}};
      std::cout << j.dump(2) << '\n';
    } else {
      std::cout << format_partition(pre.partition, ",") << " k=" << pre.k << '\n';
    }
    return kOk;
  }

  if (*a.check < 0) throw UsageError("--check needs n >= 0");
  if (*a.check > 60) throw BudgetExceeded("--check is limited to n <= 60");
  const auto r = check_bijection(*a.check);
  if (a.format == "json") {
    json j{{"n", r.n},
           {"domain_size", r.domain_size},
           {"codomain_size", r.codomain_size},
           {"weight_preserving", r.weight_preserving},
           {"injective", r.injective},
           {"surjective", r.surjective},
           {"left_inverse", r.left_inverse},
           {"right_inverse", r.right_inverse},
           {"color_law", r.color_law},
           {"status", r.pass() ? "pass" : "fail"}};
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "n=" << r.n << " domain=" << r.domain_size << " codomain=" << r.codomain_size
              << " injective=" << r.injective << " surjective=" << r.surjective
              << " round-trips=" << (r.left_inverse && r.right_inverse)
              << " color-law=" << r.color_law << ": " << (r.pass() ? "pass" : "FAIL") << '\n';
  }
  return r.pass() ? kOk : kVerifyFailed;
}

struct AsymArgs {
  std::string stat, checkpoints = "250,1000,4000", format = "csv";
  std::optional<std::string> eta;
  std::optional<unsigned> digits;
};

int cmd_asym(const AsymArgs& a) {
  require_format(a.format, {"csv", "json", "table"});
  if (a.digits) set_precision_digits(*a.digits);
  if (a.eta) {
    real t;
    try {
      t = real(*a.eta);
    } catch (const std::exception&) {
      throw UsageError("bad --eta value '" + *a.eta + "'");
    }
    const auto e = eta_cusp_expansion_check(t);
    if (a.format == "json") {
      json j{{"t", *a.eta},
             {"product", format_scientific(e.product, 20)},
             {"main_term", format_scientific(e.main_term, 20)},
             {"ratio", format_fixed(e.ratio, 12)},
             {"factors", e.factors}};
      std::cout << j.dump(2) << '\n';
    } else {
      std::cout << "t,product,main_term,ratio,factors\r\n"
                << csv_field(*a.eta) << ',' << format_scientific(e.product, 20) << ','
                << format_scientific(e.main_term, 20) << ',' << format_fixed(e.ratio, 12) << ','
                << e.factors << "\r\n";
    }
    return kOk;
  }
  if (a.stat.empty()) throw UsageError("give --stat or --eta");
  const StatisticId id = parse_statistic(a.stat);
  if (!has_asymptotic_law(id)) throw UsageError("no asymptotic law in source for " + a.stat);
  const auto report = convergence_report(id, parse_checkpoints(a.checkpoints));
  if (a.format == "json") {
    std::cout << to_json(report) << '\n';
  } else if (a.format == "csv") {
    std::cout << to_csv(report);
  } else {
    for (const auto& row : report.rows)
      std::cout << row.n << '\t' << row.exact << '\t' << format_scientific(row.predicted, 12) << '\t'
                << format_fixed(row.ratio, 12) << '\n';
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact engine for excludant partition statistics and their q-series"};
  app.require_subcommand(0, 1);
  bool list = false;
  app.add_flag("--list", list, "Print statistic and theorem names");

  SeqArgs seq;
  auto* s = app.add_subcommand("seq", "Print a statistic's values for n = 0..N");
  s->add_option("--stat", seq.stat, "Statistic name (see --list)")->required();
  s->add_option("--n", seq.n, "Largest n")->required();
  s->add_option("--engine", seq.engine, "enumerate or series")->capture_default_str();
  s->add_option("--format", seq.format, "list, table, csv or json")->capture_default_str();
  s->add_option("--budget", seq.budget, "Largest n the enumerator accepts")->capture_default_str();
  s->add_flag("--self-check", seq.self_check, "Cross-check against the other engine");

  VerifyArgs ver;
  auto* v = app.add_subcommand("verify", "Check generating-function identities");
  v->add_flag("--all", ver.all, "Every identity");
  v->add_option("--theorem", ver.theorems, "Identity name (repeatable)");
  v->add_option("--order", ver.order, "Series order N");
  v->add_option("--enum", ver.n_enum, "Enumeration bound");
  v->add_option("--format", ver.format, "table or json")->capture_default_str();
  v->add_option("--profile", ver.profile, "default or deep")->capture_default_str();
  v->add_flag("--printed", ver.printed, "Use closed forms exactly as printed");
  v->add_flag("--series-only", ver.series_only, "Skip enumeration");
  v->add_option("--perturb-at", ver.perturb_at, "Add 1 to one closed-form coefficient");

  BijectionArgs bij;
  auto* b = app.add_subcommand("bijection", "Staircase bijection onto two-colored partitions");
  b->add_option("--map", bij.map, "Partition with distinct odd parts, e.g. 6,4,3,1");
  b->add_option("--k", bij.k, "Staircase height");
  b->add_option("--n", bij.n, "Target weight (defaults to |lambda| + k(k+1))");
  b->add_option("--inverse", bij.inverse, "Colored partition, e.g. '6_1 4_1 3 2_0 1'");
  b->add_option("--check", bij.check, "Verify the bijection at n");
  b->add_flag("--diagram", bij.diagram, "Draw the augmented diagram on stderr");
  b->add_option("--format", bij.format, "table or json")->capture_default_str();

  AsymArgs asy;
  auto* a = app.add_subcommand("asym", "Exact-over-predicted ratios");
  a->add_option("--stat", asy.stat, "a-o-od, a-e-od or sigma-od-moex");
  a->add_option("--checkpoints", asy.checkpoints, "Comma-separated n")->capture_default_str();
  a->add_option("--format", asy.format, "csv, json or table")->capture_default_str();
  a->add_option("--eta", asy.eta, "Compare 1/(e^-t;e^-t) with its cusp expansion at t");
  a->add_option("--digits", asy.digits, "Working precision (default from ASYM_PRECISION_DIGITS)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (list) return cmd_list();
    if (*s) return cmd_seq(seq);
    if (*v) return cmd_verify(ver);
    if (*b) return cmd_bijection(bij);
    if (*a) return cmd_asym(asy);
    std::cout << app.help();
    return kUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBudget;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kVerifyFailed;
  }
}
