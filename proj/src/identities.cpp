#include "excludant/identities.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <json.hpp>
#include <sstream>

#include "excludant/errors.hpp"

namespace excludant {

namespace {

struct TheoremInfo {
  TheoremId id;
  const char* name;
  const char* title;
  StatisticId stat;
};

constexpr TheoremInfo kTheorems[] = {
    {TheoremId::T_aod_odd, "aod-odd", "a°_od = P(q) Σ q^{2n²+n}/(-q;q²)_{n+1}",
     StatisticId::AOodd},
    {TheoremId::T_aod_even, "aod-even", "aᵉ_od = P(q) (v₂(q) - Σ q^{2n²+n}/(-q;q²)_n)",
     StatisticId::AOeven},
    {TheoremId::T_sigma_moex, "sigma-moex", "σ_od moex = P(q) (1 + σ*(-q))",
     StatisticId::SigmaOdMoex},
    {TheoremId::T_sigma_meex, "sigma-meex", "σ_od meex = 2 Σ p_ed(n) q^n",
     StatisticId::SigmaOdMeex},
    {TheoremId::T_rem2, "rem2", "σ_od meex(n) = 2 p_ed(n)", StatisticId::SigmaOdMeex},
    {TheoremId::T_meex4e, "meex4e", "p_{od,e}(n,j) = p_{4,e}(n,j)", StatisticId::SigmaOdMeex},
    {TheoremId::T_abar_odd, "abar-odd", "ā°_od via ν(-q)", StatisticId::AbarOodd},
    {TheoremId::T_abar_even, "abar-even", "āᵉ_od three-term sum", StatisticId::AbarOeven},
    {TheoremId::T_sigmabar_moax, "sigmabar-moax",
     "σ_od moax = Σ (2k-1)(-q;q²)_{k-1} Σ q^{m(m+2k)} / (q²;q²)_∞", StatisticId::SigmaOdMoax},
    {TheoremId::T_sigmabar_meax, "sigmabar-meax", "σ_od meax via 1 - (q⁴;q⁴)_n",
     StatisticId::SigmaOdMeax},
    {TheoremId::T_ev_odd, "ev-odd", "a°_ed = E(q) (Σ q^{2n²+n}/(-q²;q²)_n - Σ q^{(2n+1)(n+1)}/(-q²;q²)_n)",
     StatisticId::AEDodd},
    {TheoremId::T_ev_even, "ev-even", "aᵉ_ed = E(q) Σ_{n≥1} q^{2n²-n}/(-q²;q²)_n",
     StatisticId::AEDeven},
    {TheoremId::T_ev_sigma_moex, "ev-sigma-moex", "σ_ed moex = (q²;q²)⁵_∞ / ((q;q)³_∞ (q⁴;q⁴)_∞)",
     StatisticId::SigmaEdMoex},
    {TheoremId::T_ev_sigma_meex, "ev-sigma-meex", "σ_ed meex = 2 E(q) σ(q²)",
     StatisticId::SigmaEdMeex},
};

const TheoremInfo& tinfo(TheoremId t) { return kTheorems[static_cast<int>(t)]; }

// Multiplies by prod (1 + sign q^e) or divides, over e = start, start+step, ... <= N.
void mul_range(TruncatedSeries& s, int sign, int start, int step) {
  for (int e = start; e <= s.order(); e += step) s.mul_binomial(sign, e);
}
void div_range(TruncatedSeries& s, int sign, int start, int step) {
  for (int e = start; e <= s.order(); e += step) s.div_binomial(sign, e);
}

NahmTermSpec term(long a2, long a1, long a0, int den_sign, int den_offset, int den_step,
                  int den_shift = 0, int start = 0) {
  NahmTermSpec s;
  s.a2 = a2, s.a1 = a1, s.a0 = a0;
  s.den_sign = den_sign, s.den_offset = den_offset, s.den_step = den_step;
  s.den_shift = den_shift, s.start = start;
  return s;
}

// Σ over terms of weight * q^exponent * (1 + extra_sign q^extra_exp) * prod_{m >= tail, m ≡ tail (2)} (1 + q^m).
struct TailTerm {
  long exponent;
  long weight;
  int tail;
  int extra_sign = 0;
  int extra_exp = 0;
};

TruncatedSeries tail_sum(int N, std::vector<TailTerm> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const TailTerm& a, const TailTerm& b) { return a.tail > b.tail; });
  TruncatedSeries sum(N);
  if (terms.empty()) return sum;
  TruncatedSeries tail = TruncatedSeries::one(N);
  int cur = terms.front().tail;
  for (int m = cur; m <= N; m += 2) tail.mul_binomial(1, m);
  for (const auto& t : terms) {
    while (cur > t.tail) {
      cur -= 2;
      if (cur >= 1 && cur <= N) tail.mul_binomial(1, cur);
    }
    if (t.exponent > N) continue;
    TruncatedSeries x = tail;
    if (t.extra_sign != 0 && t.extra_exp <= N) x.mul_binomial(t.extra_sign, t.extra_exp);
    sum.add_shifted(x, static_cast<int>(t.exponent), t.weight);
  }
  return sum;
}

enum class Gap { Forced, ForcedRepeat, Free, FreeDistinct };

void apply_gap(TruncatedSeries& s, Gap g, int i) {
  switch (g) {
    case Gap::Forced: s.shift(i); break;
    case Gap::ForcedRepeat: s.shift(i).div_binomial(-1, i); break;
    case Gap::Free: s.div_binomial(-1, i); break;
    case Gap::FreeDistinct: s.mul_binomial(1, i); break;
  }
}

// Partitions with distinct odd parts, summed with weight(v), where v is the
// excludant of interest and a the largest part: parts strictly between v and
// a follow the gap rule for their parity, a is present, v is absent and parts
// below v are unconstrained.
TruncatedSeries max_conditioning(int N, const std::function<long(int)>& weight, Gap odd_gap,
                                 Gap even_gap) {
  TruncatedSeries result(N);
  TruncatedSeries below = TruncatedSeries::one(N);  // parts < v
  TruncatedSeries acc(N);                           // Σ_{v<a} w(v) below_v gaps(v, a)
  if (long w0 = weight(0)) acc.add_shifted(below, 0, w0);
  for (int a = 1; a <= N; ++a) {
    TruncatedSeries top = acc;
    top.shift(a);
    if (a % 2 == 0) top.div_binomial(-1, a);
    result += top;

    apply_gap(acc, a % 2 ? odd_gap : even_gap, a);
    if (a % 2)
      below.mul_binomial(1, a);
    else
      below.div_binomial(-1, a);
    // `below` now holds parts < a + 1, the factor for v = a excludes a itself.
    if (long w = weight(a)) {
      TruncatedSeries b = below;
      if (a % 2)
        b.div_binomial(1, a);
      else
        b.mul_binomial(-1, a);
      acc.add_shifted(b, 0, w);
    }
  }
  return result;
}

TruncatedSeries maxex_definitional(StatisticId id, int N) {
  switch (id) {
    case StatisticId::AbarOodd:
      return max_conditioning(N, [](int v) { return long(v % 2 == 1); }, Gap::Forced,
                              Gap::ForcedRepeat);
    case StatisticId::AbarOeven:
      return max_conditioning(N, [](int v) { return long(v % 2 == 0); }, Gap::Forced,
                              Gap::ForcedRepeat);
    case StatisticId::SigmaOdMoax:
      return max_conditioning(N, [](int v) { return v % 2 ? long(v) : 0L; }, Gap::Forced,
                              Gap::Free);
    case StatisticId::SigmaOdMeax:
      return max_conditioning(N, [](int v) { return v % 2 ? 0L : long(v); },
                              Gap::FreeDistinct, Gap::ForcedRepeat);
    default: throw DomainError("not a maximal-excludant statistic");
  }
}

TruncatedSeries divide_q2q2(TruncatedSeries s) {
  div_range(s, -1, 2, 2);
  return s;
}
TruncatedSeries divide_qq2(TruncatedSeries s) {
  div_range(s, -1, 1, 2);
  return s;
}

// ---- closed forms ---------------------------------------------------------

TruncatedSeries closed_abar_odd(int N) {
  // q/(q^3;q^2)_inf (nu(-q) - 1/(1-q))
  TruncatedSeries inner = substitute_q_power(nahm_sum(NahmKind::NuMockTheta, N), 1, true);
  inner -= pochhammer_recip(poch(1, 1, 1, 1), N);
  div_range(inner, -1, 3, 2);
  inner.shift(1);
  // q^2 (-q;q^2)_inf / ((1+q)(q^4;q^2)_inf) Σ q^{3m}/(1+q^{2m+1})
  TruncatedSeries sum(N);
  for (int m = 0; 3 * m <= N; ++m) {
    TruncatedSeries t = TruncatedSeries::monomial(N, 3 * m);
    t.div_binomial(1, 2 * m + 1);
    sum += t;
  }
  mul_range(sum, 1, 1, 2);
  sum.div_binomial(1, 1);
  div_range(sum, -1, 4, 2);
  sum.shift(2);
  return inner + sum;
}

TruncatedSeries closed_abar_even(int N) {
  TruncatedSeries first(N);
  TruncatedSeries z = TruncatedSeries::one(N);  // (-q;q)_m
  for (int m = 0; m + 1 <= N; ++m) {
    first.add_shifted(z, m + 1);
    z.mul_binomial(1, m + 1);
  }
  TruncatedSeries second(N), third(N);
  TruncatedSeries x = TruncatedSeries::one(N);  // (-q;q)_{m-1}(q^2;q^2)_{m-1}/(-q;q^2)_m
  x.div_binomial(1, 1);
  for (int m = 1; 3 * m <= N; ++m) {
    second.add_shifted(x, 3 * m);
    TruncatedSeries y = x;
    if (2 * m <= N) y.mul_binomial(-1, 2 * m);
    if (2 * m + 1 <= N) y.div_binomial(1, 2 * m + 1);
    third.add_shifted(y, 3 * m + 1);
    if (m <= N) x.mul_binomial(1, m);
    if (2 * m <= N) x.mul_binomial(-1, 2 * m);
    if (2 * m + 1 <= N) x.div_binomial(1, 2 * m + 1);
  }
  TruncatedSeries rest = second + third;
  return first + mul(pod_series(N), rest);
}

TruncatedSeries closed_sigmabar_moax(int N) {
  TruncatedSeries sum(N);
  TruncatedSeries p = TruncatedSeries::one(N);  // (-q;q^2)_{k-1}
  for (int k = 1; 1 + 2 * k <= N; ++k) {
    for (long m = 1; m * (m + 2 * k) <= N; ++m)
      sum.add_shifted(p, static_cast<int>(m * (m + 2 * k)), 2 * k - 1);
    p.mul_binomial(1, 2 * k - 1);
  }
  return divide_q2q2(sum);
}

TruncatedSeries closed_sigmabar_meax(int N) {
  TruncatedSeries inner = TruncatedSeries::one(N);
  inner -= pochhammer(poch(1, 4, 4), N);
  TruncatedSeries f = TruncatedSeries::one(N);  // (q^4;q^4)_n
  for (int n = 1; 2 * (n + 1) <= N; ++n) {
    if (4 * n <= N) f.mul_binomial(-1, 4 * n);
    TruncatedSeries t = TruncatedSeries::one(N) - f;
    t.shift(2 * (n + 1));
    t.div_binomial(-1, 2 * (n + 1));
    inner += t;
  }
  return scale(mul(pod_series(N), inner), 2);
}

}  // namespace

std::string theorem_name(TheoremId t) { return tinfo(t).name; }
std::string theorem_title(TheoremId t) { return tinfo(t).title; }
StatisticId theorem_statistic(TheoremId t) { return tinfo(t).stat; }

TheoremId parse_theorem(std::string_view name) {
  std::string key(name);
  std::transform(key.begin(), key.end(), key.begin(), [](unsigned char c) {
    return c == '_' ? '-' : static_cast<char>(std::tolower(c));
  });
  if (key.rfind("t-", 0) == 0) key = key.substr(2);
  for (const auto& t : kTheorems)
    if (key == t.name) return t.id;
  throw DomainError("unknown theorem '" + std::string(name) + "'");
}

bool has_printed_variant(TheoremId t) {
  return t == TheoremId::T_ev_even || t == TheoremId::T_ev_sigma_moex;
}

TruncatedSeries pod_series(int N) {
  TruncatedSeries s = TruncatedSeries::one(N);
  mul_range(s, 1, 1, 2);
  div_range(s, -1, 2, 2);
  return s;
}

TruncatedSeries ped_series(int N) {
  TruncatedSeries s = TruncatedSeries::one(N);
  mul_range(s, 1, 2, 2);
  div_range(s, -1, 1, 2);
  return s;
}

TruncatedSeries gf_closed_form(TheoremId t, int N, ClosedFormVariant v) {
  switch (t) {
    case TheoremId::T_aod_odd:
      return mul(pod_series(N), nahm_sum(term(2, 1, 0, -1, 1, 2, 1), N));
    case TheoremId::T_aod_even:
      return mul(pod_series(N),
                 nahm_sum(NahmKind::V2Andrews, N) - nahm_sum(term(2, 1, 0, -1, 1, 2), N));
    case TheoremId::T_sigma_moex: {
      TruncatedSeries b = substitute_q_power(nahm_sum(NahmKind::SigmaStarCohen, N), 1, true);
      b[0] += 1;
      return mul(pod_series(N), b);
    }
    case TheoremId::T_sigma_meex: return scale(ped_series(N), 2);
    case TheoremId::T_rem2: {
      // 2 (-q^2;q^2)^2_inf (-q;q^2)_inf: twice the two-colored distinct count
      TruncatedSeries s = TruncatedSeries::one(N);
      mul_range(s, 1, 2, 2);
      mul_range(s, 1, 2, 2);
      mul_range(s, 1, 1, 2);
      return scale(s, 2);
    }
    case TheoremId::T_meex4e: return gf_closed_form_bivariate(N, N / 2).at_w_one();
    case TheoremId::T_abar_odd: return closed_abar_odd(N);
    case TheoremId::T_abar_even: return closed_abar_even(N);
    case TheoremId::T_sigmabar_moax: return closed_sigmabar_moax(N);
    case TheoremId::T_sigmabar_meax: return closed_sigmabar_meax(N);
    case TheoremId::T_ev_odd:
      return mul(ped_series(N),
                 nahm_sum(term(2, 1, 0, -1, 2, 2), N) - nahm_sum(term(2, 3, 1, -1, 2, 2), N));
    case TheoremId::T_ev_even:
      return mul(ped_series(N),
                 nahm_sum(term(2, -1, 0, -1, 2, 2, 0, v == ClosedFormVariant::AsPrinted ? 0 : 1),
                          N));
    case TheoremId::T_ev_sigma_moex: {
      TruncatedSeries s = TruncatedSeries::one(N);
      if (v == ClosedFormVariant::AsPrinted) {
        // (q^2;q^2)^2 (q)^3 / (q^4;q^4)
        for (int r = 0; r < 2; ++r) mul_range(s, -1, 2, 2);
        for (int r = 0; r < 3; ++r) mul_range(s, -1, 1, 1);
      } else {
        // (q^2;q^2)^5 / ((q;q)^3 (q^4;q^4))
        for (int r = 0; r < 5; ++r) mul_range(s, -1, 2, 2);
        for (int r = 0; r < 3; ++r) div_range(s, -1, 1, 1);
      }
      div_range(s, -1, 4, 4);
      return s;
    }
    case TheoremId::T_ev_sigma_meex:
      return scale(mul(ped_series(N), substitute_q_power(nahm_sum(NahmKind::SigmaRamanujan, N), 2)),
                   2);
  }
  throw DomainError("unknown theorem");
}

TruncatedSeries gf_definitional(TheoremId t, int N) {
  std::vector<TailTerm> terms;
  switch (t) {
    case TheoremId::T_aod_odd:  // mex = 2n+1
      for (long n = 0; n * (2 * n + 1) <= N; ++n)
        terms.push_back({n * (2 * n + 1), 1, static_cast<int>(2 * n + 3)});
      return divide_q2q2(tail_sum(N, terms));
    case TheoremId::T_aod_even:  // mex = 2n
      for (long n = 1; n * (2 * n - 1) <= N; ++n)
        terms.push_back({n * (2 * n - 1), 1, static_cast<int>(2 * n + 1), -1,
                         static_cast<int>(2 * n)});
      return divide_q2q2(tail_sum(N, terms));
    case TheoremId::T_sigma_moex:  // moex = 2n+1
      for (long n = 0; n * n <= N; ++n)
        terms.push_back({n * n, 2 * n + 1, static_cast<int>(2 * n + 3)});
      return divide_q2q2(tail_sum(N, terms));
    case TheoremId::T_sigma_meex: {  // meex = 2n
      TruncatedSeries s(N);
      for (long n = 1; n * (n - 1) <= N; ++n) {
        TruncatedSeries x = TruncatedSeries::monomial(N, static_cast<int>(n * (n - 1)), 2 * n);
        if (2 * n <= N) x.mul_binomial(-1, static_cast<int>(2 * n));
        s += x;
      }
      mul_range(s, 1, 1, 2);
      return divide_q2q2(s);
    }
    case TheoremId::T_rem2: return gf_mcount(MCountKind::Meex, N);
    case TheoremId::T_meex4e: return gf_definitional_bivariate(N, N / 2).at_w_one();
    case TheoremId::T_abar_odd: return maxex_definitional(StatisticId::AbarOodd, N);
    case TheoremId::T_abar_even: return maxex_definitional(StatisticId::AbarOeven, N);
    case TheoremId::T_sigmabar_moax: return maxex_definitional(StatisticId::SigmaOdMoax, N);
    case TheoremId::T_sigmabar_meax: return maxex_definitional(StatisticId::SigmaOdMeax, N);
    case TheoremId::T_ev_odd:  // mex = 2n+1
      for (long n = 0; n * (2 * n + 1) <= N; ++n)
        terms.push_back({n * (2 * n + 1), 1, static_cast<int>(2 * n + 2), -1,
                         static_cast<int>(2 * n + 1)});
      return divide_qq2(tail_sum(N, terms));
    case TheoremId::T_ev_even:  // mex = 2n
      for (long n = 1; n * (2 * n - 1) <= N; ++n)
        terms.push_back({n * (2 * n - 1), 1, static_cast<int>(2 * n + 2)});
      return divide_qq2(tail_sum(N, terms));
    case TheoremId::T_ev_sigma_moex: {  // moex = 2n+1
      TruncatedSeries s(N);
      for (long n = 0; n * n <= N; ++n) {
        TruncatedSeries x = TruncatedSeries::monomial(N, static_cast<int>(n * n), 2 * n + 1);
        if (2 * n + 1 <= N) x.mul_binomial(-1, static_cast<int>(2 * n + 1));
        s += x;
      }
      mul_range(s, 1, 2, 2);
      return divide_qq2(s);
    }
    case TheoremId::T_ev_sigma_meex:  // meex = 2n
      for (long n = 1; n * (n - 1) <= N; ++n)
        terms.push_back({n * (n - 1), 2 * n, static_cast<int>(2 * n + 2)});
      return divide_qq2(tail_sum(N, terms));
  }
  throw DomainError("unknown theorem");
}

BivariateSeries gf_closed_form_bivariate(int N, int J) {
  BivariateSeries s = BivariateSeries::one(N, J);
  for (int e = 1; e <= N; e += 2) s.div_binomial(-1, 0, e);
  for (int e = 4; e <= N; e += 4) s.div_binomial(-1, 1, e);
  return s;
}

BivariateSeries gf_definitional_bivariate(int N, int J) {
  // (-q;q^2)_inf Σ_{m>=1} q^{m(m-1)} / ((q^2;q^2)_{m-1} (wq^{2m+2};q^2)_inf)
  int M = 1;
  while (static_cast<long>(M + 1) * M <= N) ++M;
  BivariateSeries tail = BivariateSeries::one(N, J);
  for (int e = 2 * M + 2; e <= N; e += 2) tail.div_binomial(-1, 1, e);
  BivariateSeries sum(N, J);
  for (int m = M; m >= 1; --m) {
    BivariateSeries x = tail;
    x.shift(0, m * (m - 1));
    for (int t = 1; t <= m - 1 && 2 * t <= N; ++t) x.div_binomial(-1, 0, 2 * t);
    sum += x;
    if (2 * m <= N) tail.div_binomial(-1, 1, 2 * m);
  }
  for (int e = 1; e <= N; e += 2) sum.mul_binomial(1, 0, e);
  return sum;
}

TruncatedSeries gf_mcount(MCountKind kind, int N) {
  if (kind == MCountKind::Moex) {
    std::vector<TailTerm> terms;
    for (long j = 1; j * j <= N; ++j) terms.push_back({j * j, 2, static_cast<int>(2 * j + 1)});
    return pod_series(N) + divide_q2q2(tail_sum(N, terms));
  }
  TruncatedSeries s(N);
  for (long j = 0; j * (j + 1) <= N; ++j) s[static_cast<int>(j * (j + 1))] += 2;
  return mul(s, pod_series(N));
}

TruncatedSeries sequence_series(StatisticId id, int N) {
  switch (id) {
    case StatisticId::AOodd: return gf_closed_form(TheoremId::T_aod_odd, N);
    case StatisticId::AOeven: return gf_closed_form(TheoremId::T_aod_even, N);
    case StatisticId::SigmaOdMoex: return gf_closed_form(TheoremId::T_sigma_moex, N);
    case StatisticId::SigmaOdMeex: return gf_closed_form(TheoremId::T_sigma_meex, N);
    case StatisticId::AbarOodd:
    case StatisticId::AbarOeven:
    case StatisticId::SigmaOdMoax:
    case StatisticId::SigmaOdMeax: return maxex_definitional(id, N);
    case StatisticId::AEDodd: return gf_closed_form(TheoremId::T_ev_odd, N);
    case StatisticId::AEDeven: return gf_closed_form(TheoremId::T_ev_even, N);
    case StatisticId::SigmaEdMoex: return gf_closed_form(TheoremId::T_ev_sigma_moex, N);
    case StatisticId::SigmaEdMeex: return gf_closed_form(TheoremId::T_ev_sigma_meex, N);
  }
  throw DomainError("unknown statistic");
}

std::optional<int> first_difference(const std::vector<bigint>& a, const std::vector<bigint>& b,
                                    int upto) {
  for (int n = 0; n <= upto; ++n) {
    const bool ia = n < static_cast<int>(a.size()), ib = n < static_cast<int>(b.size());
    if (!ia || !ib) break;
    if (a[n] != b[n]) return n;
  }
  return std::nullopt;
}

std::optional<int> first_non_increase(const TruncatedSeries& s, int from, int to) {
  for (int n = std::max(from, 0); n < to && n + 1 <= s.order(); ++n)
    if (s[n + 1] <= s[n]) return n;
  return std::nullopt;
}

namespace {

struct Pillar {
  std::string name;
  std::vector<bigint> values;
  int upto;
};

void consider(std::optional<Mismatch>& best, const Pillar& a, const Pillar& b, int j = -1) {
  const int upto = std::min(a.upto, b.upto);
  if (auto n = first_difference(a.values, b.values, upto)) {
    if (!best || *n < best->n || (*n == best->n && j >= 0 && j < best->j))
      best = Mismatch{*n, j, a.name, b.name, a.values[*n], b.values[*n]};
  }
}

VerificationReport verify_bivariate(int N, int n_enum, const VerifyOptions& opt) {
  VerificationReport r{TheoremId::T_meex4e, N, opt.series_only ? 0 : n_enum, true, {}, ""};
  if (N > kDeepBivariateOrder) {
    r.order = N = kDeepBivariateOrder;
    r.note = "bivariate order capped at " + std::to_string(kDeepBivariateOrder);
  }
  const int J = N / 2;
  BivariateSeries closed = gf_closed_form_bivariate(N, J);
  BivariateSeries defn = gf_definitional_bivariate(N, J);
  if (opt.perturb_at && *opt.perturb_at <= N) closed.at(0, *opt.perturb_at) += opt.perturb_delta;

  std::optional<Mismatch> best;
  std::vector<std::vector<bigint>> odm, fe;
  if (!opt.series_only) {
    for (int n = 0; n <= n_enum; ++n) {
      odm.push_back(bivariate_row_odm(n, opt.enum_budget));
      fe.push_back(bivariate_row_4e(n, opt.enum_budget));
    }
  }
  for (int j = 0; j <= J; ++j) {
    Pillar c{"closed-form", closed.w_coefficient(j).coeffs(), N};
    Pillar d{"definitional", defn.w_coefficient(j).coeffs(), N};
    consider(best, d, c, j);
    if (!opt.series_only && j <= n_enum / 2) {
      Pillar eo{"enumeration p_od,e", {}, n_enum}, e4{"enumeration p_4,e", {}, n_enum};
      for (int n = 0; n <= n_enum; ++n) {
        eo.values.push_back(j < static_cast<int>(odm[n].size()) ? odm[n][j] : bigint(0));
        e4.values.push_back(j < static_cast<int>(fe[n].size()) ? fe[n][j] : bigint(0));
      }
      consider(best, eo, e4, j);
      consider(best, eo, d, j);
      consider(best, eo, c, j);
    }
  }
  r.mismatch = best;
  r.pass = !best;
  return r;
}

}  // namespace

VerificationReport verify(TheoremId t, int N, int n_enum, const VerifyOptions& opt) {
  if (N < 0) throw DomainError("order must be non-negative");
  if (!opt.series_only && n_enum > N) throw DomainError("enumeration bound exceeds order");
  if (t == TheoremId::T_meex4e) return verify_bivariate(N, n_enum, opt);

  VerificationReport r{t, N, opt.series_only ? 0 : n_enum, true, {}, ""};
  TruncatedSeries closed = gf_closed_form(t, N, opt.variant);
  if (opt.perturb_at && *opt.perturb_at <= N) closed[*opt.perturb_at] += opt.perturb_delta;
  Pillar c{"closed-form", closed.coeffs(), N};
  Pillar d{"definitional", gf_definitional(t, N).coeffs(), N};

  std::optional<Mismatch> best;
  consider(best, d, c);
  if (!opt.series_only) {
    Pillar e{"enumeration", sequence_values(theorem_statistic(t), n_enum, opt.enum_budget),
             n_enum};
    consider(best, e, d);
    consider(best, e, c);
    if (t == TheoremId::T_rem2) {
      Pillar twice{"enumeration 2 p_ed", {}, n_enum};
      for (int n = 0; n <= n_enum; ++n)
        twice.values.push_back(2 * bigint(count_partitions(n, PartitionClass::DistinctEvenParts)));
      consider(best, e, twice);
    }
  }
  if (opt.variant == ClosedFormVariant::AsPrinted && has_printed_variant(t))
    r.note = "closed form as printed";
  r.mismatch = best;
  r.pass = !best;
  return r;
}

std::string to_json(const VerificationReport& r) {
  nlohmann::json j;
  j["theorem"] = theorem_name(r.theorem);
  j["N"] = r.order;
  j["n_enum"] = r.n_enum;
  j["status"] = r.pass ? "pass" : "fail";
  if (r.mismatch) {
    const auto& m = *r.mismatch;
    nlohmann::json mm;
    mm["n"] = m.n;
    if (m.j >= 0) mm["j"] = m.j;
    mm["lhs_pillar"] = m.lhs_pillar;
    mm["rhs_pillar"] = m.rhs_pillar;
    mm["lhs"] = m.lhs.str();
    mm["rhs"] = m.rhs.str();
    j["mismatch"] = mm;
  }
  if (!r.note.empty()) j["note"] = r.note;
  return j.dump();
}

std::string describe(const VerificationReport& r) {
  std::ostringstream os;
  os << theorem_name(r.theorem) << ": " << (r.pass ? "pass" : "FAIL") << " (N=" << r.order;
  if (r.n_enum > 0) os << ", enumeration n<=" << r.n_enum;
  os << ")";
  if (r.mismatch) {
    const auto& m = *r.mismatch;
    os << " first mismatch at n=" << m.n;
    if (m.j >= 0) os << ", j=" << m.j;
    os << ": " << m.lhs_pillar << "=" << m.lhs << " vs " << m.rhs_pillar << "=" << m.rhs;
  }
  if (!r.note.empty()) os << " [" << r.note << "]";
  if (r.pass) os << "  " << theorem_title(r.theorem);
  return os.str();
}

}  // namespace excludant
