#include "excludant/qseries.hpp"

#include <algorithm>
#include <json.hpp>

#include "excludant/errors.hpp"

namespace excludant {

TruncatedSeries::TruncatedSeries(int order) : order_(order) {
  if (order < 0) throw DomainError("series order must be non-negative");
  c_.assign(static_cast<std::size_t>(order) + 1, bigint(0));
}

TruncatedSeries::TruncatedSeries(int order, std::vector<bigint> coeffs)
    : order_(order), c_(std::move(coeffs)) {
  if (order < 0) throw DomainError("series order must be non-negative");
  c_.resize(static_cast<std::size_t>(order) + 1);
}

TruncatedSeries TruncatedSeries::one(int order) {
  TruncatedSeries s(order);
  s.c_[0] = 1;
  return s;
}

TruncatedSeries TruncatedSeries::monomial(int order, int exponent, const bigint& coeff) {
  TruncatedSeries s(order);
  if (exponent < 0) throw DomainError("negative exponent");
  if (exponent <= order) s.c_[exponent] = coeff;
  return s;
}

TruncatedSeries TruncatedSeries::truncated(int order) const {
  if (order > order_) throw DomainError("cannot extend a truncated series");
  return TruncatedSeries(order, std::vector<bigint>(c_.begin(), c_.begin() + order + 1));
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& t) {
  if (t.order_ < order_) {
    order_ = t.order_;
    c_.resize(static_cast<std::size_t>(order_) + 1);
  }
  for (int n = 0; n <= order_; ++n) c_[n] += t.c_[n];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& t) {
  if (t.order_ < order_) {
    order_ = t.order_;
    c_.resize(static_cast<std::size_t>(order_) + 1);
  }
  for (int n = 0; n <= order_; ++n) c_[n] -= t.c_[n];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const bigint& k) {
  for (auto& x : c_) x *= k;
  return *this;
}

TruncatedSeries& TruncatedSeries::mul_binomial(int c, int e) {
  if (e < 1) throw DomainError("binomial exponent must be positive");
  if (c == 1) {
    for (int n = order_; n >= e; --n) c_[n] += c_[n - e];
  } else if (c == -1) {
    for (int n = order_; n >= e; --n) c_[n] -= c_[n - e];
  } else {
    throw DomainError("binomial coefficient must be +1 or -1");
  }
  return *this;
}

TruncatedSeries& TruncatedSeries::div_binomial(int c, int e) {
  if (e < 1) throw DomainError("binomial exponent must be positive");
  if (c == 1) {
    for (int n = e; n <= order_; ++n) c_[n] -= c_[n - e];
  } else if (c == -1) {
    for (int n = e; n <= order_; ++n) c_[n] += c_[n - e];
  } else {
    throw DomainError("binomial coefficient must be +1 or -1");
  }
  return *this;
}

TruncatedSeries& TruncatedSeries::shift(int e) {
  if (e < 0) throw DomainError("negative shift");
  if (e == 0) return *this;
  for (int n = order_; n >= 0; --n) {
    if (n >= e)
      c_[n].swap(c_[n - e]);
    else
      c_[n] = 0;
  }
  return *this;
}

TruncatedSeries& TruncatedSeries::add_shifted(const TruncatedSeries& t, int e,
                                              const bigint& k) {
  if (e < 0) throw DomainError("negative shift");
  if (t.order_ + e < order_) {
    order_ = t.order_ + e;
    c_.resize(static_cast<std::size_t>(order_) + 1);
  }
  for (int n = e; n <= order_; ++n) c_[n] += k * t.c_[n - e];
  return *this;
}

TruncatedSeries add(const TruncatedSeries& s, const TruncatedSeries& t) {
  TruncatedSeries r = s;
  r += t;
  return r;
}

TruncatedSeries sub(const TruncatedSeries& s, const TruncatedSeries& t) {
  TruncatedSeries r = s;
  r -= t;
  return r;
}

TruncatedSeries mul(const TruncatedSeries& s, const TruncatedSeries& t) {
  const int N = std::min(s.order(), t.order());
  TruncatedSeries r(N);
  for (int i = 0; i <= N; ++i) {
    if (s[i] == 0) continue;
    for (int j = 0; i + j <= N; ++j) {
      if (t[j] != 0) r[i + j] += s[i] * t[j];
    }
  }
  return r;
}

TruncatedSeries scale(const TruncatedSeries& s, const bigint& k) {
  TruncatedSeries r = s;
  r *= k;
  return r;
}

TruncatedSeries recip(const TruncatedSeries& s) {
  if (s[0] != 1 && s[0] != -1) throw DomainError("non-unit constant term");
  const int N = s.order();
  const bigint c0 = s[0];
  TruncatedSeries t(N);
  t[0] = c0;
  bigint acc;
  for (int n = 1; n <= N; ++n) {
    acc = 0;
    for (int k = 1; k <= n; ++k) {
      if (s[k] != 0) acc += s[k] * t[n - k];
    }
    t[n] = -c0 * acc;
  }
  return t;
}

TruncatedSeries power(const TruncatedSeries& s, int k) {
  if (k < 0) return power(recip(s), -k);
  TruncatedSeries r = TruncatedSeries::one(s.order());
  for (int i = 0; i < k; ++i) r = mul(r, s);
  return r;
}

TruncatedSeries operator+(const TruncatedSeries& s, const TruncatedSeries& t) {
  return add(s, t);
}
TruncatedSeries operator-(const TruncatedSeries& s, const TruncatedSeries& t) {
  return sub(s, t);
}
TruncatedSeries operator*(const TruncatedSeries& s, const TruncatedSeries& t) {
  return mul(s, t);
}

namespace {

void check_spec(const PochhammerSpec& spec) {
  if (spec.sign != 1 && spec.sign != -1) throw DomainError("Pochhammer sign must be ±1");
  if (spec.offset < 0) throw DomainError("Pochhammer offset must be non-negative");
  if (spec.step < 1) throw DomainError("Pochhammer step must be positive");
  if (spec.length && *spec.length < 0) throw DomainError("Pochhammer length must be >= 0");
}

}  // namespace

TruncatedSeries pochhammer(const PochhammerSpec& spec, int order) {
  check_spec(spec);
  TruncatedSeries r = TruncatedSeries::one(order);
  for (long k = 0; !spec.length || k < *spec.length; ++k) {
    const long e = spec.offset + k * spec.step;
    if (e > order) break;
    if (e == 0) {
      if (spec.sign == 1) return TruncatedSeries::zero(order);
      r *= 2;
      continue;
    }
    r.mul_binomial(-spec.sign, static_cast<int>(e));
  }
  return r;
}

TruncatedSeries pochhammer_recip(const PochhammerSpec& spec, int order) {
  check_spec(spec);
  TruncatedSeries r = TruncatedSeries::one(order);
  for (long k = 0; !spec.length || k < *spec.length; ++k) {
    const long e = spec.offset + k * spec.step;
    if (e > order) break;
    if (e == 0) throw DomainError("non-unit constant term");
    r.div_binomial(-spec.sign, static_cast<int>(e));
  }
  return r;
}

NahmTermSpec nahm_spec(NahmKind kind) {
  NahmTermSpec s;
  switch (kind) {
    case NahmKind::SigmaRamanujan:  // q^{n(n+1)/2} / (-q;q)_n
      s.a2 = 1, s.a1 = 1, s.div = 2;
      s.den_sign = -1, s.den_offset = 1, s.den_step = 1;
      break;
    case NahmKind::SigmaStarCohen:  // 2 (-1)^n q^{n^2} / (q;q^2)_n, n >= 1
      s.a2 = 1, s.alternating = true;
      s.den_sign = 1, s.den_offset = 1, s.den_step = 2;
      s.start = 1, s.scale = 2;
      break;
    case NahmKind::V2Andrews:  // q^{2n^2-n} / (-q;q^2)_n
      s.a2 = 2, s.a1 = -1;
      s.den_sign = -1, s.den_offset = 1, s.den_step = 2;
      break;
    case NahmKind::NuMockTheta:  // q^{n(n+1)} / (-q;q^2)_{n+1}
      s.a2 = 1, s.a1 = 1;
      s.den_sign = -1, s.den_offset = 1, s.den_step = 2, s.den_shift = 1;
      break;
    case NahmKind::Custom: throw DomainError("custom Nahm sum needs explicit terms");
  }
  return s;
}

TruncatedSeries nahm_sum(NahmKind kind, int order, const std::optional<NahmTermSpec>& custom) {
  if (kind == NahmKind::Custom) {
    if (!custom) throw DomainError("custom Nahm sum needs explicit terms");
    return nahm_sum(*custom, order);
  }
  return nahm_sum(nahm_spec(kind), order);
}

TruncatedSeries nahm_sum(const NahmTermSpec& spec, int order) {
  if (spec.div < 1) throw DomainError("exponent divisor must be positive");
  if (spec.start < 0 || spec.start + spec.den_shift < 0)
    throw DomainError("negative Pochhammer length");
  if (!(spec.a2 > 0 || (spec.a2 == 0 && spec.a1 > 0)))
    throw DomainError("non-terminating sum");
  auto Q = [&](long n) {
    const long num = spec.a2 * n * n + spec.a1 * n;
    if (num % spec.div != 0) throw DomainError("exponent Q(n) is not an integer");
    return num / spec.div + spec.a0;
  };
  auto factor_exponent = [&](long k) { return spec.den_offset + k * spec.den_step; };

  TruncatedSeries sum(order);
  TruncatedSeries R = TruncatedSeries::one(order);
  auto divide_factor = [&](long k) {
    const long e = factor_exponent(k);
    if (e == 0) throw DomainError("non-unit constant term");
    if (e <= order) R.div_binomial(-spec.den_sign, static_cast<int>(e));
  };
  for (long k = 0; k < spec.start + spec.den_shift; ++k) divide_factor(k);

  for (long n = spec.start;; ++n) {
    const long e = Q(n);
    if (e > order && Q(n + 1) >= e) break;
    if (e < 0) throw DomainError("negative exponent in Nahm term");
    if (e <= order) {
      bigint k = spec.scale;
      if (spec.alternating && n % 2 != 0) k = -k;
      sum.add_shifted(R, static_cast<int>(e), k);
    }
    divide_factor(n + spec.den_shift);
  }
  return sum;
}

TruncatedSeries substitute_q_power(const TruncatedSeries& s, int k, bool negate) {
  if (k < 1) throw DomainError("substitution power must be >= 1");
  const int N = s.order();
  TruncatedSeries r(N);
  for (long n = 0; n * k <= N; ++n) {
    r[static_cast<int>(n * k)] = (negate && n % 2 == 1) ? bigint(-s[static_cast<int>(n)])
                                                        : s[static_cast<int>(n)];
  }
  return r;
}

TruncatedSeries theta_gauss(ThetaKind kind, int order) {
  TruncatedSeries r(order);
  if (kind == ThetaKind::AlternatingSquares) {
    r[0] = 1;
    for (long n = 1; n * n <= order; ++n) r[static_cast<int>(n * n)] += n % 2 ? -2 : 2;
  } else {
    for (long n = 0; n * (n + 1) / 2 <= order; ++n) r[static_cast<int>(n * (n + 1) / 2)] += 1;
  }
  return r;
}

std::string to_json(const TruncatedSeries& s) {
  nlohmann::json j;
  j["order"] = s.order();
  auto& arr = j["coeffs"] = nlohmann::json::array();
  for (const auto& c : s.coeffs()) arr.push_back(c.str());
  return j.dump();
}

TruncatedSeries series_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("invalid series JSON: ") + e.what());
  }
  if (!j.contains("order") || !j.contains("coeffs") || !j["coeffs"].is_array())
    throw DomainError("series JSON needs 'order' and 'coeffs'");
  const int order = j["order"].get<int>();
  if (order < 0 || j["coeffs"].size() != static_cast<std::size_t>(order) + 1)
    throw DomainError("series JSON: coeffs must have order+1 entries");
  std::vector<bigint> c;
  for (const auto& x : j["coeffs"]) {
    if (!x.is_string()) throw DomainError("series JSON: coefficients are decimal strings");
    try {
      c.emplace_back(x.get<std::string>());
    } catch (const std::exception&) {
      throw DomainError("series JSON: bad coefficient '" + x.get<std::string>() + "'");
    }
  }
  return TruncatedSeries(order, std::move(c));
}

// ---------------------------------------------------------------------------

BivariateSeries::BivariateSeries(int q_order, int w_order) : n_(q_order), j_(w_order) {
  if (q_order < 0 || w_order < 0) throw DomainError("series order must be non-negative");
  c_.assign(static_cast<std::size_t>(j_) + 1,
            std::vector<bigint>(static_cast<std::size_t>(n_) + 1, bigint(0)));
}

BivariateSeries BivariateSeries::one(int q_order, int w_order) {
  BivariateSeries s(q_order, w_order);
  s.c_[0][0] = 1;
  return s;
}

BivariateSeries BivariateSeries::from_q(const TruncatedSeries& t, int w_order) {
  BivariateSeries s(t.order(), w_order);
  for (int n = 0; n <= t.order(); ++n) s.c_[0][n] = t[n];
  return s;
}

TruncatedSeries BivariateSeries::w_coefficient(int j) const {
  TruncatedSeries t(n_);
  if (j < 0 || j > j_) return t;
  for (int n = 0; n <= n_; ++n) t[n] = c_[j][n];
  return t;
}

TruncatedSeries BivariateSeries::at_w_one() const {
  TruncatedSeries t(n_);
  for (int j = 0; j <= j_; ++j)
    for (int n = 0; n <= n_; ++n) t[n] += c_[j][n];
  return t;
}

BivariateSeries& BivariateSeries::operator+=(const BivariateSeries& t) {
  if (t.n_ != n_ || t.j_ != j_) *this = add(*this, t);
  else
    for (int j = 0; j <= j_; ++j)
      for (int n = 0; n <= n_; ++n) c_[j][n] += t.c_[j][n];
  return *this;
}

BivariateSeries& BivariateSeries::operator-=(const BivariateSeries& t) {
  if (t.n_ != n_ || t.j_ != j_) throw DomainError("bivariate orders differ");
  for (int j = 0; j <= j_; ++j)
    for (int n = 0; n <= n_; ++n) c_[j][n] -= t.c_[j][n];
  return *this;
}

BivariateSeries& BivariateSeries::mul_binomial(int c, int a, int b) {
  if ((c != 1 && c != -1) || a < 0 || b < 0 || (a == 0 && b == 0))
    throw DomainError("binomial must be 1 ± w^a q^b with (a, b) != (0, 0)");
  for (int j = j_; j >= a; --j)
    for (int n = n_; n >= b; --n) {
      if (c == 1)
        c_[j][n] += c_[j - a][n - b];
      else
        c_[j][n] -= c_[j - a][n - b];
    }
  return *this;
}

BivariateSeries& BivariateSeries::div_binomial(int c, int a, int b) {
  if ((c != 1 && c != -1) || a < 0 || b < 0 || (a == 0 && b == 0))
    throw DomainError("binomial must be 1 ± w^a q^b with (a, b) != (0, 0)");
  for (int j = a; j <= j_; ++j)
    for (int n = b; n <= n_; ++n) {
      if (c == 1)
        c_[j][n] -= c_[j - a][n - b];
      else
        c_[j][n] += c_[j - a][n - b];
    }
  return *this;
}

BivariateSeries& BivariateSeries::shift(int a, int b) {
  if (a < 0 || b < 0) throw DomainError("negative shift");
  for (int j = j_; j >= 0; --j)
    for (int n = n_; n >= 0; --n) {
      if (j >= a && n >= b)
        c_[j][n] = c_[j - a][n - b];
      else
        c_[j][n] = 0;
    }
  return *this;
}

BivariateSeries add(const BivariateSeries& s, const BivariateSeries& t) {
  const int N = std::min(s.q_order(), t.q_order());
  const int J = std::min(s.w_order(), t.w_order());
  BivariateSeries r(N, J);
  for (int j = 0; j <= J; ++j)
    for (int n = 0; n <= N; ++n) r.at(j, n) = s.at(j, n) + t.at(j, n);
  return r;
}

BivariateSeries mul(const BivariateSeries& s, const BivariateSeries& t) {
  const int N = std::min(s.q_order(), t.q_order());
  const int J = std::min(s.w_order(), t.w_order());
  BivariateSeries r(N, J);
  for (int j1 = 0; j1 <= J; ++j1)
    for (int n1 = 0; n1 <= N; ++n1) {
      const bigint& x = s.at(j1, n1);
      if (x == 0) continue;
      for (int j2 = 0; j1 + j2 <= J; ++j2)
        for (int n2 = 0; n1 + n2 <= N; ++n2)
          if (t.at(j2, n2) != 0) r.at(j1 + j2, n1 + n2) += x * t.at(j2, n2);
    }
  return r;
}

BivariateSeries mul(const BivariateSeries& s, const TruncatedSeries& t) {
  const int N = std::min(s.q_order(), t.order());
  const int J = s.w_order();
  BivariateSeries r(N, J);
  for (int j = 0; j <= J; ++j)
    for (int n1 = 0; n1 <= N; ++n1) {
      const bigint& x = s.at(j, n1);
      if (x == 0) continue;
      for (int n2 = 0; n1 + n2 <= N; ++n2)
        if (t[n2] != 0) r.at(j, n1 + n2) += x * t[n2];
    }
  return r;
}

BivariateSeries recip(const BivariateSeries& s) {
  const bigint c0 = s.at(0, 0);
  if (c0 != 1 && c0 != -1) throw DomainError("non-unit constant term");
  const int N = s.q_order(), J = s.w_order();
  BivariateSeries t(N, J);
  bigint acc;
  for (int n = 0; n <= N; ++n)
    for (int j = 0; j <= J; ++j) {
      acc = (n == 0 && j == 0) ? 1 : 0;
      for (int n1 = 0; n1 <= n; ++n1)
        for (int j1 = 0; j1 <= j; ++j1) {
          if (n1 == 0 && j1 == 0) continue;
          const bigint& x = s.at(j1, n1);
          if (x != 0) acc -= x * t.at(j - j1, n - n1);
        }
      t.at(j, n) = c0 * acc;
    }
  return t;
}

}  // namespace excludant
