#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "excludant/qseries.hpp"
#include "excludant/statistics.hpp"

namespace excludant {

enum class TheoremId {
  T_aod_odd,
  T_aod_even,
  T_sigma_moex,
  T_sigma_meex,
  T_rem2,
  T_meex4e,
  T_abar_odd,
  T_abar_even,
  T_sigmabar_moax,
  T_sigmabar_meax,
  T_ev_odd,
  T_ev_even,
  T_ev_sigma_moex,
  T_ev_sigma_meex,
};

inline constexpr std::array<TheoremId, 14> kAllTheorems = {
    TheoremId::T_aod_odd,       TheoremId::T_aod_even,      TheoremId::T_sigma_moex,
    TheoremId::T_sigma_meex,    TheoremId::T_rem2,          TheoremId::T_meex4e,
    TheoremId::T_abar_odd,      TheoremId::T_abar_even,     TheoremId::T_sigmabar_moax,
    TheoremId::T_sigmabar_meax, TheoremId::T_ev_odd,        TheoremId::T_ev_even,
    TheoremId::T_ev_sigma_moex, TheoremId::T_ev_sigma_meex};

inline constexpr int kDefaultOrder = 300;
inline constexpr int kDeepOrder = 2000;
inline constexpr int kDefaultEnumBound = 40;
inline constexpr int kDeepBivariateOrder = 600;

std::string theorem_name(TheoremId t);  // kebab-case, e.g. "aod-odd"
std::string theorem_title(TheoremId t);
TheoremId parse_theorem(std::string_view name);

/// The statistic whose generating function the display describes.
StatisticId theorem_statistic(TheoremId t);

/// Two displays are printed with errors and have a corrected form; for the
/// other theorems both variants coincide.
enum class ClosedFormVariant { Corrected, AsPrinted };
bool has_printed_variant(TheoremId t);

/// Closed-form right-hand side. For T_meex4e this is the w = 1 marginal.
TruncatedSeries gf_closed_form(TheoremId t, int order,
                               ClosedFormVariant v = ClosedFormVariant::Corrected);
/// Series built by conditioning on the statistic's value.
TruncatedSeries gf_definitional(TheoremId t, int order);

BivariateSeries gf_closed_form_bivariate(int q_order, int w_order);
BivariateSeries gf_definitional_bivariate(int q_order, int w_order);

enum class MCountKind { Moex, Meex };
TruncatedSeries gf_mcount(MCountKind kind, int order);

/// Frequently used building blocks.
TruncatedSeries pod_series(int order);  // (-q;q^2)_inf / (q^2;q^2)_inf
TruncatedSeries ped_series(int order);  // (-q^2;q^2)_inf / (q;q^2)_inf

/// Exact sequence of a statistic from the series pipeline: the closed form
/// where the display holds, the definitional series otherwise.
TruncatedSeries sequence_series(StatisticId id, int order);

struct Mismatch {
  int n;
  int j = -1;  // w-degree for the bivariate theorem
  std::string lhs_pillar, rhs_pillar;
  bigint lhs, rhs;
};

struct VerificationReport {
  TheoremId theorem;
  int order;
  int n_enum;
  bool pass;
  std::optional<Mismatch> mismatch;
  std::string note;
};

struct VerifyOptions {
  ClosedFormVariant variant = ClosedFormVariant::Corrected;
  bool series_only = false;
  int enum_budget = kDefaultEnumerationBudget;
  /// Harness self-test: add `perturb_delta` to closed-form coefficient `perturb_at`.
  std::optional<int> perturb_at;
  long perturb_delta = 1;
};

VerificationReport verify(TheoremId t, int order = kDefaultOrder,
                          int n_enum = kDefaultEnumBound, const VerifyOptions& opt = {});

/// Compare two coefficient lists up to index `upto`; first differing index.
std::optional<int> first_difference(const std::vector<bigint>& a,
                                    const std::vector<bigint>& b, int upto);

/// First n in [from, to) with seq[n+1] <= seq[n], if any.
std::optional<int> first_non_increase(const TruncatedSeries& s, int from, int to);

std::string to_json(const VerificationReport& r);
std::string describe(const VerificationReport& r);

}  // namespace excludant
