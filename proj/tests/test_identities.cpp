#include <doctest.h>

#include <json.hpp>

#include "excludant/errors.hpp"
#include "excludant/identities.hpp"

using namespace excludant;

namespace {

bool is_maximal(TheoremId t) {
  return t == TheoremId::T_abar_odd || t == TheoremId::T_abar_even ||
         t == TheoremId::T_sigmabar_moax || t == TheoremId::T_sigmabar_meax;
}

}  // namespace

TEST_CASE("definitional series agree with enumeration for every display") {
  for (auto t : kAllTheorems) {
    if (t == TheoremId::T_meex4e) continue;
    INFO(theorem_name(t));
    auto defn = gf_definitional(t, 30);
    auto seq = sequence_values(theorem_statistic(t), 30);
    for (int n = 0; n <= 30; ++n) CHECK(defn[n] == seq[n]);
  }
}

TEST_CASE("closed forms that hold, three ways to order 120") {
  for (auto t : kAllTheorems) {
    if (is_maximal(t)) continue;
    auto r = verify(t, 120, 25);
    INFO(describe(r));
    CHECK(r.pass);
  }
}

TEST_CASE("maximal-excludant closed forms disagree with the table") {
  // The tables give 3, 2, 12, 8 at n = 6; these closed forms give 4, 6, 3, 2.
  CHECK(gf_closed_form(TheoremId::T_abar_odd, 10)[6] == 4);
  CHECK(gf_closed_form(TheoremId::T_abar_even, 10)[6] == 6);
  CHECK(gf_closed_form(TheoremId::T_sigmabar_moax, 10)[6] == 3);
  CHECK(gf_closed_form(TheoremId::T_sigmabar_meax, 10)[6] == 2);
  CHECK(sequence_series(StatisticId::AbarOodd, 10)[6] == 3);
  CHECK(sequence_series(StatisticId::AbarOeven, 10)[6] == 2);
  CHECK(sequence_series(StatisticId::SigmaOdMoax, 10)[6] == 12);
  CHECK(sequence_series(StatisticId::SigmaOdMeax, 10)[6] == 8);
  for (auto t : kAllTheorems) {
    if (!is_maximal(t)) continue;
    auto r = verify(t, 60, 20);
    CHECK_FALSE(r.pass);
    REQUIRE(r.mismatch);
    CHECK(r.mismatch->rhs_pillar == "closed-form");
  }
}

TEST_CASE("sigma_od meex equals twice p_ed") {
  auto meex = sequence_series(StatisticId::SigmaOdMeex, 300);
  auto ped = ped_series(300);
  for (int n = 0; n <= 300; ++n) CHECK(meex[n] == 2 * ped[n]);
  auto r = verify(TheoremId::T_rem2, 300, 30);
  CHECK(r.pass);
  CHECK(describe(r).find("2 p_ed") != std::string::npos);
}

TEST_CASE("building blocks") {
  auto pod = pod_series(30), ped = ped_series(30);
  for (int n = 0; n <= 30; ++n) {
    CHECK(pod[n] == count_partitions(n, PartitionClass::DistinctOddParts));
    CHECK(ped[n] == count_partitions(n, PartitionClass::DistinctEvenParts));
  }
  CHECK(pod[6] == 5);
  CHECK(ped[5] == 6);
}

TEST_CASE("M-count series give the sigma_od sequences") {
  CHECK(gf_mcount(MCountKind::Moex, 150) == gf_closed_form(TheoremId::T_sigma_moex, 150));
  CHECK(gf_mcount(MCountKind::Meex, 150) == gf_closed_form(TheoremId::T_sigma_meex, 150));
}

TEST_CASE("printed variants") {
  CHECK(has_printed_variant(TheoremId::T_ev_even));
  CHECK(has_printed_variant(TheoremId::T_ev_sigma_moex));
  CHECK_FALSE(has_printed_variant(TheoremId::T_aod_odd));
  CHECK(gf_closed_form(TheoremId::T_aod_odd, 50, ClosedFormVariant::AsPrinted) ==
        gf_closed_form(TheoremId::T_aod_odd, 50));

  // Summing from n = 0 adds exactly the p_ed series.
  auto printed = gf_closed_form(TheoremId::T_ev_even, 100, ClosedFormVariant::AsPrinted);
  auto fixed = gf_closed_form(TheoremId::T_ev_even, 100);
  CHECK(printed - fixed == ped_series(100));

  auto printed_moex = gf_closed_form(TheoremId::T_ev_sigma_moex, 20, ClosedFormVariant::AsPrinted);
  CHECK(printed_moex[1] == -3);
  CHECK(gf_closed_form(TheoremId::T_ev_sigma_moex, 20)[1] == 3);

  VerifyOptions opt;
  opt.variant = ClosedFormVariant::AsPrinted;
  auto r = verify(TheoremId::T_ev_even, 60, 20, opt);
  CHECK_FALSE(r.pass);
  REQUIRE(r.mismatch);
  CHECK(r.mismatch->n == 0);
  CHECK(r.note == "closed form as printed");
}

TEST_CASE("bivariate identity") {
  auto closed = gf_closed_form_bivariate(60, 30);
  auto defn = gf_definitional_bivariate(60, 30);
  CHECK(closed == defn);
  for (int n = 0; n <= 30; ++n) {
    auto row = bivariate_row_4e(n);
    for (int j = 0; j < static_cast<int>(row.size()); ++j) CHECK(closed.at(j, n) == row[j]);
  }
  CHECK(closed.at_w_one() == pod_series(60));
  CHECK(gf_closed_form(TheoremId::T_meex4e, 60) == pod_series(60));
}

TEST_CASE("negative control") {
  for (int at : {0, 7, 150}) {
    VerifyOptions opt;
    opt.perturb_at = at;
    auto r = verify(TheoremId::T_aod_odd, 200, 20, opt);
    CHECK_FALSE(r.pass);
    REQUIRE(r.mismatch);
    CHECK(r.mismatch->n == at);
  }
  VerifyOptions opt;
  opt.perturb_at = 9;
  opt.series_only = true;
  auto r = verify(TheoremId::T_meex4e, 40, 0, opt);
  REQUIRE(r.mismatch);
  CHECK(r.mismatch->n == 9);
  CHECK(r.mismatch->j == 0);
}

TEST_CASE("helpers") {
  std::vector<bigint> a = {1, 2, 3}, b = {1, 2, 4};
  CHECK(first_difference(a, b, 2) == 2);
  CHECK(first_difference(a, b, 1) == std::nullopt);
  TruncatedSeries s(5, {1, 2, 2, 3, 5, 4});
  CHECK(first_non_increase(s, 0, 5) == 1);
  CHECK(first_non_increase(s, 2, 4) == std::nullopt);
  CHECK(first_non_increase(s, 2, 5) == 4);
}

TEST_CASE("names and reports") {
  for (auto t : kAllTheorems) CHECK(parse_theorem(theorem_name(t)) == t);
  CHECK(parse_theorem("T_rem2") == TheoremId::T_rem2);
  CHECK(parse_theorem("ev_sigma_moex") == TheoremId::T_ev_sigma_moex);
  CHECK_THROWS_AS(parse_theorem("bogus"), DomainError);

  auto r = verify(TheoremId::T_abar_even, 40, 10);
  auto j = nlohmann::json::parse(to_json(r));
  CHECK(j["theorem"] == "abar-even");
  CHECK(j["status"] == "fail");
  CHECK(j["N"] == 40);
  CHECK(j["mismatch"]["n"] == 2);
  CHECK(j["mismatch"]["rhs"] == "1");
  CHECK_THROWS_AS(verify(TheoremId::T_aod_odd, 10, 20), DomainError);
}

TEST_CASE("monotonicity claims") {
  auto aodo = sequence_series(StatisticId::AOodd, 400);
  auto aode = sequence_series(StatisticId::AOeven, 400);
  auto moex = sequence_series(StatisticId::SigmaOdMoex, 400);
  // Plateaus that contradict strict increase at the stated thresholds.
  CHECK(aodo[3] == aodo[4]);
  CHECK(aodo[5] == aodo[6]);
  CHECK(aode[8] == aode[9]);
  CHECK(aode[10] == aode[11]);
  CHECK(first_non_increase(aodo, 6, 400) == std::nullopt);
  CHECK(first_non_increase(aode, 11, 400) == std::nullopt);
  CHECK(first_non_increase(moex, 4, 400) == std::nullopt);
  for (int n = 1; n < 400; ++n) CHECK(aodo[n + 1] >= aodo[n]);
  for (int n = 7; n < 400; ++n) CHECK(aode[n + 1] >= aode[n]);
  CHECK(first_non_increase(aode, 1, 7).has_value());
}

TEST_CASE("counting series are non-negative") {
  for (auto id : kAllStatistics) {
    auto s = sequence_series(id, 300);
    for (int n = 0; n <= 300; ++n) CHECK(s[n] >= 0);
  }
}
