#pragma once

#include <optional>
#include <string>
#include <vector>

#include "excludant/bigint.hpp"

namespace excludant {

/// Exact power series c_0 + c_1 q + ... + c_N q^N, known modulo q^{N+1}.
class TruncatedSeries {
 public:
  TruncatedSeries() : TruncatedSeries(0) {}
  explicit TruncatedSeries(int order);
  TruncatedSeries(int order, std::vector<bigint> coeffs);

  static TruncatedSeries zero(int order) { return TruncatedSeries(order); }
  static TruncatedSeries one(int order);
  static TruncatedSeries monomial(int order, int exponent, const bigint& coeff = 1);

  int order() const { return order_; }
  const bigint& operator[](int n) const { return c_[n]; }
  bigint& operator[](int n) { return c_[n]; }
  const std::vector<bigint>& coeffs() const { return c_; }
  bool operator==(const TruncatedSeries&) const = default;

  TruncatedSeries truncated(int order) const;

  TruncatedSeries& operator+=(const TruncatedSeries& t);
  TruncatedSeries& operator-=(const TruncatedSeries& t);
  TruncatedSeries& operator*=(const bigint& k);

  /// In place multiply or divide by (1 + c q^e), c = ±1, e >= 1.
  TruncatedSeries& mul_binomial(int c, int e);
  TruncatedSeries& div_binomial(int c, int e);
  /// In place multiply by q^e (e >= 0).
  TruncatedSeries& shift(int e);
  /// Add k * q^e * t (t shifted, truncated to this order).
  TruncatedSeries& add_shifted(const TruncatedSeries& t, int e, const bigint& k = 1);

 private:
  int order_;
  std::vector<bigint> c_;
};

TruncatedSeries add(const TruncatedSeries& s, const TruncatedSeries& t);
TruncatedSeries sub(const TruncatedSeries& s, const TruncatedSeries& t);
TruncatedSeries mul(const TruncatedSeries& s, const TruncatedSeries& t);
TruncatedSeries scale(const TruncatedSeries& s, const bigint& k);
TruncatedSeries recip(const TruncatedSeries& s);
TruncatedSeries power(const TruncatedSeries& s, int k);

TruncatedSeries operator+(const TruncatedSeries& s, const TruncatedSeries& t);
TruncatedSeries operator-(const TruncatedSeries& s, const TruncatedSeries& t);
TruncatedSeries operator*(const TruncatedSeries& s, const TruncatedSeries& t);

/// (sign * q^offset; q^step)_length; sign = +1 gives factors (1 - q^e),
/// sign = -1 gives (1 + q^e). An empty length means infinite.
struct PochhammerSpec {
  int sign = 1;
  int offset = 1;
  int step = 1;
  std::optional<int> length;
};

TruncatedSeries pochhammer(const PochhammerSpec& spec, int order);
/// 1 / pochhammer(spec), built by division so no general reciprocal is needed.
TruncatedSeries pochhammer_recip(const PochhammerSpec& spec, int order);

inline PochhammerSpec poch(int sign, int offset, int step,
                           std::optional<int> length = std::nullopt) {
  return PochhammerSpec{sign, offset, step, length};
}

enum class NahmKind { SigmaRamanujan, SigmaStarCohen, V2Andrews, NuMockTheta, Custom };

/// Term n (n >= start) is
///   scale * (-1)^{n if alternating} * q^{Q(n)} / (den_sign q^den_offset; q^den_step)_{n + den_shift}
/// with Q(n) = (a2 n^2 + a1 n) / div + a0.
struct NahmTermSpec {
  long a2 = 0, a1 = 0, a0 = 0, div = 1;
  bool alternating = false;
  int den_sign = 1, den_offset = 1, den_step = 1, den_shift = 0;
  int start = 0;
  long scale = 1;
};

NahmTermSpec nahm_spec(NahmKind kind);
TruncatedSeries nahm_sum(NahmKind kind, int order,
                         const std::optional<NahmTermSpec>& custom = std::nullopt);
TruncatedSeries nahm_sum(const NahmTermSpec& spec, int order);

/// s(±q^k); k >= 1.
TruncatedSeries substitute_q_power(const TruncatedSeries& s, int k, bool negate = false);

enum class ThetaKind { AlternatingSquares, Triangular };
TruncatedSeries theta_gauss(ThetaKind kind, int order);

std::string to_json(const TruncatedSeries& s);
TruncatedSeries series_from_json(const std::string& text);

/// Doubly truncated series sum c[j][n] w^j q^n, j <= J, n <= N.
class BivariateSeries {
 public:
  BivariateSeries() : BivariateSeries(0, 0) {}
  BivariateSeries(int q_order, int w_order);
  static BivariateSeries one(int q_order, int w_order);
  static BivariateSeries from_q(const TruncatedSeries& s, int w_order);

  int q_order() const { return n_; }
  int w_order() const { return j_; }
  const bigint& at(int j, int n) const { return c_[j][n]; }
  bigint& at(int j, int n) { return c_[j][n]; }
  bool operator==(const BivariateSeries&) const = default;

  TruncatedSeries w_coefficient(int j) const;
  /// Sum over j: the w = 1 specialization.
  TruncatedSeries at_w_one() const;

  BivariateSeries& operator+=(const BivariateSeries& t);
  BivariateSeries& operator-=(const BivariateSeries& t);
  /// In place multiply or divide by (1 + c w^a q^b), c = ±1, (a, b) != (0, 0).
  BivariateSeries& mul_binomial(int c, int a, int b);
  BivariateSeries& div_binomial(int c, int a, int b);
  BivariateSeries& shift(int a, int b);

 private:
  int n_, j_;
  std::vector<std::vector<bigint>> c_;
};

BivariateSeries add(const BivariateSeries& s, const BivariateSeries& t);
BivariateSeries mul(const BivariateSeries& s, const BivariateSeries& t);
BivariateSeries recip(const BivariateSeries& s);
BivariateSeries mul(const BivariateSeries& s, const TruncatedSeries& t);

}  // namespace excludant
