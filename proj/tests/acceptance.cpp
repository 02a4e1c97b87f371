// Acceptance gate: one PASS/FAIL line per criterion, details indented below.
// Pass --deep to run the series-vs-series identity check to order 2000 as well.

#include <chrono>
#include <cstring>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "excludant/asymptotics.hpp"
#include "excludant/bijection.hpp"
#include "excludant/identities.hpp"
#include "excludant/lemmas.hpp"

using namespace excludant;

namespace {

struct Outcome {
  bool pass = true;
  std::vector<std::string> details;
  void fail(std::string why) {
    pass = false;
    details.push_back(std::move(why));
  }
  void note(std::string what) { details.push_back(std::move(what)); }
};

struct Criterion {
  int id;
  std::string title;
  double budget_seconds;
  std::function<Outcome()> run;
};

bool g_deep = false;

Outcome table_values() {
  Outcome o;
  struct Row {
    StatisticId id;
    int n;
    int value;
  };
  const Row rows[] = {
      {StatisticId::AOodd, 6, 3},       {StatisticId::AOeven, 6, 2},
      {StatisticId::SigmaOdMoex, 6, 11}, {StatisticId::SigmaOdMeex, 6, 18},
      {StatisticId::SigmaOdMeex, 5, 12}, {StatisticId::AbarOodd, 6, 3},
      {StatisticId::AbarOeven, 6, 2},    {StatisticId::SigmaOdMoax, 6, 12},
      {StatisticId::SigmaOdMeax, 6, 8},  {StatisticId::AEDodd, 6, 4},
      {StatisticId::AEDeven, 6, 5},
  };
  auto theorem_for = [](StatisticId id) {
    for (auto t : kAllTheorems)
      if (t != TheoremId::T_rem2 && t != TheoremId::T_meex4e && theorem_statistic(t) == id) return t;
    return TheoremId::T_rem2;
  };
  for (const auto& r : rows) {
    const std::string label = statistic_notation(r.id) + "(" + std::to_string(r.n) + ")";
    const bigint e = sequence_value(r.id, r.n);
    const bigint c = gf_closed_form(theorem_for(r.id), 10)[r.n];
    if (e != r.value) o.fail(label + ": enumeration " + e.str() + ", table " + std::to_string(r.value));
    if (c != r.value)
      o.fail(label + ": closed form " + c.str() + ", table " + std::to_string(r.value) +
             " (enumeration " + e.str() + ")");
  }
  if (pod_series(10)[6] != 5 || count_partitions(6, PartitionClass::DistinctOddParts) != 5)
    o.fail("p_od(6) != 5");
  if (ped_series(10)[5] != 6 || count_partitions(5, PartitionClass::DistinctEvenParts) != 6)
    o.fail("p_ed(5) != 6");
  return o;
}

Outcome identity_suite() {
  Outcome o;
  for (auto t : kAllTheorems) {
    const auto r = verify(t, kDefaultOrder, kDefaultEnumBound);
    if (!r.pass) o.fail(describe(r));
  }
  if (g_deep) {
    VerifyOptions opt;
    opt.series_only = true;
    for (auto t : kAllTheorems) {
      const auto r = verify(t, kDeepOrder, 0, opt);
      if (!r.pass) o.fail("deep " + describe(r));
      else o.note("deep " + theorem_name(t) + ": pass to N=" + std::to_string(r.order));
    }
  }
  return o;
}

Outcome meex_twice_ped() {
  Outcome o;
  const int N = kDeepOrder;
  const auto tail = gf_definitional(TheoremId::T_sigma_meex, N);
  const auto mcount = gf_definitional(TheoremId::T_rem2, N);
  const auto ped = ped_series(N);
  for (int n = 0; n <= N; ++n) {
    if (tail[n] != 2 * ped[n]) {
      o.fail("n=" + std::to_string(n) + ": sigma_od meex " + tail[n].str() + " vs 2 p_ed " +
             bigint(2 * ped[n]).str());
      break;
    }
    if (mcount[n] != tail[n]) {
      o.fail("n=" + std::to_string(n) + ": M-count series disagrees");
      break;
    }
  }
  return o;
}

Outcome bivariate() {
  Outcome o;
  const auto closed = gf_closed_form_bivariate(60, 30);
  const auto defn = gf_definitional_bivariate(60, 30);
  for (int n = 0; n <= 60; ++n) {
    std::vector<bigint> odm, fe;
    if (n <= 30) {
      odm = bivariate_row_odm(n);
      fe = bivariate_row_4e(n);
      if (odm != fe) o.fail("enumeration rows differ at n=" + std::to_string(n));
    }
    for (int j = 0; j <= 30; ++j) {
      if (closed.at(j, n) != defn.at(j, n))
        o.fail("series differ at n=" + std::to_string(n) + ", j=" + std::to_string(j));
      if (n <= 30) {
        const bigint want = j < static_cast<int>(odm.size()) ? odm[j] : bigint(0);
        if (closed.at(j, n) != want)
          o.fail("series vs enumeration at n=" + std::to_string(n) + ", j=" + std::to_string(j));
      }
    }
    if (o.details.size() > 5) break;
  }
  return o;
}

Outcome bijection() {
  Outcome o;
  const auto img = phi({{6, 4, 3, 1}, 1}, 16);
  if (format_colored(img) != "6_1 4_1 3 2_0 1") o.fail("worked example gives " + format_colored(img));
  const auto inv = phi_inverse(img);
  if (inv.k != 1 || inv.partition != Partition{6, 4, 3, 1}) o.fail("worked example inverse");
  std::size_t total = 0;
  for (int n = 0; n <= 30; ++n) {
    const auto r = check_bijection(n);
    total += r.domain_size;
    if (!r.pass()) {
      std::ostringstream os;
      os << "n=" << n << ": domain " << r.domain_size << ", codomain " << r.codomain_size
         << (r.injective ? "" : ", not injective") << (r.surjective ? "" : ", not surjective")
         << (r.left_inverse ? "" : ", left inverse fails")
         << (r.right_inverse ? "" : ", right inverse fails");
      o.fail(os.str());
    }
  }
  o.note(std::to_string(total) + " domain elements checked for n <= 30");
  return o;
}

Outcome monotonicity() {
  Outcome o;
  const int N = kDeepOrder;
  struct Claim {
    StatisticId id;
    int from;
  };
  for (const auto& c : {Claim{StatisticId::AOodd, 1}, Claim{StatisticId::AOeven, 7},
                        Claim{StatisticId::SigmaOdMoex, 4}}) {
    const auto s = sequence_series(c.id, N + 1);
    std::vector<int> flat;
    bool decrease = false;
    for (int n = c.from; n < N; ++n) {
      if (s[n + 1] <= s[n]) flat.push_back(n);
      if (s[n + 1] < s[n]) decrease = true;
    }
    const std::string name = statistic_notation(c.id);
    if (flat.empty()) {
      o.note(name + ": strictly increasing for " + std::to_string(c.from) + " <= n < " +
             std::to_string(N));
      continue;
    }
    std::string list;
    for (int n : flat)
      list += (list.empty() ? "" : ", ") + ("(" + std::to_string(n) + "," + std::to_string(n + 1) +
                                            ")=" + s[n].str());
    o.fail(name + ": not strictly increasing from n=" + std::to_string(c.from) +
           "; equal values at " + list + (decrease ? "" : "; weakly increasing throughout"));
  }
  const auto ae = sequence_series(StatisticId::AOeven, 8);
  if (!first_non_increase(ae, 1, 7)) o.fail("aᵉ_od has no violation below 7");
  else o.note("aᵉ_od violation below 7 at n=" + std::to_string(*first_non_increase(ae, 1, 7)));
  return o;
}

Outcome asymptotics() {
  Outcome o;
  for (auto id : {StatisticId::AOodd, StatisticId::AOeven, StatisticId::SigmaOdMoex}) {
    const auto r = convergence_report(id, {250, 1000, 4000});
    const real e0 = abs(r.rows[0].ratio - 1), e1 = abs(r.rows[1].ratio - 1),
               e2 = abs(r.rows[2].ratio - 1);
    std::string ratios;
    for (const auto& row : r.rows) ratios += " " + format_fixed(row.ratio, 6);
    const bool ok = e2 < e1 && e1 < e0 && r.rows[2].ratio > real("0.5") && r.rows[2].ratio < real("1.5");
    if (ok)
      o.note(statistic_notation(id) + " ratios" + ratios);
    else
      o.fail(statistic_notation(id) + " ratios" + ratios);
  }
  return o;
}

Outcome lemmas() {
  Outcome o;
  for (const auto& c : lemma_suite(500, 200, 100)) {
    if (!c.pass())
      o.fail(c.name + " first differs at q^" + std::to_string(*c.first_mismatch));
  }
  return o;
}

Outcome negative_control() {
  Outcome o;
  VerifyOptions opt;
  opt.perturb_at = 7;
  const auto r = verify(TheoremId::T_aod_odd, kDefaultOrder, kDefaultEnumBound, opt);
  if (r.pass || !r.mismatch) o.fail("perturbed closed form passed");
  else if (r.mismatch->n != 7) o.fail("reported n=" + std::to_string(r.mismatch->n) + ", expected 7");
  else o.note(describe(r));
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  for (int i = 1; i < argc; ++i)
    if (std::strcmp(argv[i], "--deep") == 0) g_deep = true;

  const std::vector<Criterion> criteria = {
      {1, "table values by enumeration and closed form", 1, table_values},
      {2, "identity suite, three pillars, N=300, enumeration n<=40", g_deep ? 600.0 : 60.0, identity_suite},
      {3, "sigma_od meex = 2 p_ed to n=2000", 600, meex_twice_ped},
      {4, "bivariate p_od,e = p_4,e", 60, bivariate},
      {5, "staircase bijection for n<=30", 60, bijection},
      {6, "monotonicity to n=2000", 600, monotonicity},
      {7, "asymptotic ratios at 250, 1000, 4000", 300, asymptotics},
      {8, "lemma suite", 600, lemmas},
      {9, "negative control", 60, negative_control},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > c.budget_seconds) o.fail("took " + std::to_string(secs) + " s");
    if (!o.pass) ++failures;
    std::ostringstream head;
    head.setf(std::ios::fixed);
    head.precision(2);
    head << "criterion " << c.id << ": " << (o.pass ? "PASS" : "FAIL") << "  " << c.title << "  ("
         << secs << " s)";
    std::cout << head.str() << "\n";
    for (const auto& d : o.details) std::cout << "    " << d << "\n";
    std::cout.flush();
  }
  std::cout << (failures ? std::to_string(failures) + " criteria failed" : "all criteria passed")
            << "\n";
  return failures ? 1 : 0;
}
