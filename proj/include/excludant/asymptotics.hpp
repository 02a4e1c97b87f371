#pragma once

#include <boost/multiprecision/mpfr.hpp>
#include <string>
#include <vector>

#include "excludant/bigint.hpp"
#include "excludant/statistics.hpp"

namespace excludant {

using real = boost::multiprecision::mpfr_float;

/// Working precision in decimal digits; initialized from ASYM_PRECISION_DIGITS (default 50).
unsigned precision_digits();
void set_precision_digits(unsigned digits);

struct TauberianParams {
  real alpha, beta, C;
};

real pi();
real ingham_main_term(const TauberianParams& p, long n);

bool has_asymptotic_law(StatisticId id);
TauberianParams law_params(StatisticId id);
real predicted(StatisticId id, long n);
/// e^{(pi/2) sqrt n} / (sqrt 2 n), the law printed for a^e_od.
real printed_law_aoeven(long n);

struct EtaCheck {
  real t;
  real product;    // 1 / (e^{-t}; e^{-t})_inf
  real main_term;  // sqrt(t / 2 pi) e^{pi^2 / 6t}
  real ratio;
  long factors;
};

inline constexpr long kEtaFactorBudget = 20'000'000;
EtaCheck eta_cusp_expansion_check(const real& t, long factor_budget = kEtaFactorBudget);

struct ConvergenceRow {
  long n;
  bigint exact;
  real predicted;
  real ratio;
};

struct ConvergenceReport {
  StatisticId stat;
  std::vector<ConvergenceRow> rows;
};

/// Weak increase is checked from this index on before a report is produced.
int monotone_from(StatisticId id);

ConvergenceReport convergence_report(StatisticId id, const std::vector<long>& checkpoints);

std::string to_csv(const ConvergenceReport& r);
std::string to_json(const ConvergenceReport& r);
std::string format_scientific(const real& x, int digits);
std::string format_fixed(const real& x, int digits);

}  // namespace excludant
