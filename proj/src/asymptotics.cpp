#include "excludant/asymptotics.hpp"

#include <boost/math/constants/constants.hpp>
#include <cmath>
#include <cstdlib>
#include <iomanip>
#include <json.hpp>
#include <mutex>
#include <sstream>

#include "excludant/errors.hpp"
#include "excludant/identities.hpp"

namespace excludant {

namespace {

unsigned g_digits = 0;
std::once_flag g_init;

void init_precision() {
  std::call_once(g_init, [] {
    unsigned digits = 50;
    if (const char* env = std::getenv("ASYM_PRECISION_DIGITS")) {
      char* end = nullptr;
      const unsigned long v = std::strtoul(env, &end, 10);
      if (end != env && *end == '\0' && v >= 20 && v <= 10000) digits = static_cast<unsigned>(v);
    }
    if (g_digits == 0) g_digits = digits;
    real::default_precision(g_digits);
  });
}

real to_real(const bigint& x) { return real(x.str()); }

}  // namespace

unsigned precision_digits() {
  init_precision();
  return g_digits;
}

void set_precision_digits(unsigned digits) {
  if (digits < 20) throw DomainError("precision below 20 digits is not supported");
  init_precision();
  g_digits = digits;
  real::default_precision(digits);
}

real pi() {
  init_precision();
  return boost::math::constants::pi<real>();
}

real ingham_main_term(const TauberianParams& p, long n) {
  if (n < 1) throw DomainError("n must be positive");
  init_precision();
  const real nn(n);
  const real one(1), two(2);
  return p.alpha / (two * sqrt(pi())) * pow(p.C, (two * p.beta + one) / 4) *
         exp(two * sqrt(p.C * nn)) / pow(nn, (two * p.beta + 3) / 4);
}

bool has_asymptotic_law(StatisticId id) {
  return id == StatisticId::AOodd || id == StatisticId::AOeven ||
         id == StatisticId::SigmaOdMoex;
}

TauberianParams law_params(StatisticId id) {
  const real p = pi();
  const real C = p * p / 8;
  const real root_pi = sqrt(p);
  switch (id) {
    case StatisticId::AOodd: return {real(1) / root_pi, real(1) / 2, C};
    case StatisticId::SigmaOdMoex: return {real(3) / root_pi, real(1) / 2, C};
    case StatisticId::AOeven: return {real(4) / root_pi, real(3) / 2, C};
    default: break;
  }
  throw DomainError("no asymptotic law in source for " + statistic_name(id));
}

real predicted(StatisticId id, long n) { return ingham_main_term(law_params(id), n); }

real printed_law_aoeven(long n) {
  if (n < 1) throw DomainError("n must be positive");
  const real nn(n);
  return exp(pi() / 2 * sqrt(nn)) / (sqrt(real(2)) * nn);
}

EtaCheck eta_cusp_expansion_check(const real& t, long factor_budget) {
  init_precision();
  if (!(t > 0) || t > 1) throw DomainError("t must lie in (0, 1]");
  // Stop once e^{-Kt} drops below the working precision.
  const real cutoff = real(precision_digits() + 5) * log(real(10)) / t;
  const real needed = ceil(cutoff);
  if (needed > real(factor_budget))
    throw BudgetExceeded("t = " + format_scientific(t, 6) + " needs about " +
                         needed.convert_to<std::string>() + " factors; budget is " +
                         std::to_string(factor_budget));
  const long K = needed.convert_to<long>();

  EtaCheck out;
  out.t = t;
  out.factors = K;
  const real x = exp(-t);
  real xk = 1, prod = 1;
  for (long k = 1; k <= K; ++k) {
    xk *= x;
    prod *= 1 - xk;
  }
  out.product = 1 / prod;
  out.main_term = sqrt(t / (2 * pi())) * exp(pi() * pi() / (6 * t));
  out.ratio = out.product / out.main_term;
  return out;
}

int monotone_from(StatisticId id) {
  switch (id) {
    case StatisticId::AOodd: return 1;
    case StatisticId::AOeven: return 7;
    case StatisticId::SigmaOdMoex: return 4;
    default: break;
  }
  throw DomainError("no asymptotic law in source for " + statistic_name(id));
}

ConvergenceReport convergence_report(StatisticId id, const std::vector<long>& checkpoints) {
  if (!has_asymptotic_law(id))
    throw DomainError("no asymptotic law in source for " + statistic_name(id));
  if (checkpoints.empty()) throw DomainError("no checkpoints given");
  long top = 0;
  for (long n : checkpoints) {
    if (n < 1) throw DomainError("checkpoints must be positive");
    top = std::max(top, n);
  }
  if (top > 1'000'000) throw BudgetExceeded("checkpoint beyond the series budget");

  const int order = static_cast<int>(top) + 1;
  const TruncatedSeries s = sequence_series(id, order);
  const int from = monotone_from(id);
  for (int n = from; n < top; ++n)
    if (s[n + 1] < s[n])
      throw std::runtime_error(statistic_name(id) + " decreases at n = " + std::to_string(n) +
                               "; the Tauberian main term does not apply");

  ConvergenceReport rep{id, {}};
  for (long n : checkpoints) {
    ConvergenceRow row;
    row.n = n;
    row.exact = s[static_cast<int>(n)];
    row.predicted = predicted(id, n);
    row.ratio = to_real(row.exact) / row.predicted;
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

std::string format_scientific(const real& x, int digits) {
  std::ostringstream os;
  os << std::scientific << std::setprecision(digits) << x;
  return os.str();
}

std::string format_fixed(const real& x, int digits) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(digits) << x;
  return os.str();
}

std::string to_csv(const ConvergenceReport& r) {
  std::string out = "n,exact,predicted,ratio\r\n";
  for (const auto& row : r.rows)
    out += std::to_string(row.n) + "," + to_decimal(row.exact) + "," +
           format_scientific(row.predicted, 20) + "," + format_fixed(row.ratio, 12) + "\r\n";
  return out;
}

std::string to_json(const ConvergenceReport& r) {
  nlohmann::json j;
  j["statistic"] = statistic_name(r.stat);
  j["rows"] = nlohmann::json::array();
  for (const auto& row : r.rows)
    j["rows"].push_back({{"n", row.n},
                         {"exact", to_decimal(row.exact)},
                         {"predicted", format_scientific(row.predicted, 20)},
                         {"ratio", format_fixed(row.ratio, 12)}});
  return j.dump(2);
}

}  // namespace excludant
