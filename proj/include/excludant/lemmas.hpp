#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "excludant/qseries.hpp"

namespace excludant {

/// p(0..order) from Euler's pentagonal recurrence; no series arithmetic involved.
std::vector<bigint> pentagonal_partition_numbers(int order);

template <class S>
struct IdentitySides {
  S lhs, rhs;
};

/// sum (aq;q)_n t^n / (q;q)_n = (aqt;q)_inf / (t;q)_inf at t = q, for a in {0, -1}.
IdentitySides<TruncatedSeries> q_binomial_at_t_eq_q(int a, int order);

/// sum_Z (-1)^n q^{n^2} = (q;q)_inf / (-q;q)_inf.
IdentitySides<TruncatedSeries> gauss_alternating_squares(int order);
/// sum q^{n(n+1)/2} = (q^2;q^2)_inf / (q;q^2)_inf.
IdentitySides<TruncatedSeries> gauss_triangular(int order);

/// 1/(q;q)_inf against the pentagonal-recurrence partition numbers.
IdentitySides<TruncatedSeries> euler_partition_product(int order);

/// Heine's transformation in the A -> 0 limit taken for the bivariate meex identity:
///   sum q^{m(m+1)} (wq^4;q^2)_m / (q^2;q^2)_m
///     = (wq^4;q^2)_inf (-q^2;q^2)_inf sum (wq^4)^m / ((q^2;q^2)_m (-q^2;q^2)_m).
IdentitySides<BivariateSeries> heine_meex_specialization(int q_order, int w_order);

/// Andrews' transformation with q -> q^2, a = -1/q, b = q, B = q^2, A -> 0:
///   sum (q^2;q^2)_m q^{2m} / ((q;q^2)_m (-q^3;q^2)_m)
///     = q (q^2;q^2)_inf / ((q;q^2)_inf (-q^3;q^2)_inf) sum q^{m^2+3m} / (q^3;q^2)_{m+1}
///       + (1 - q^2) sum q^{3n} / (1 + q^{2n+1}).
IdentitySides<TruncatedSeries> andrews_abar_specialization(int order);

struct LemmaCheck {
  std::string name;
  int order;
  std::optional<int> first_mismatch;  // for bivariate checks, the q-degree
  bool pass() const { return !first_mismatch; }
};

/// Every classical identity above: the Gauss pair and Euler at `order`,
/// q-binomial at `binomial_order`, Heine and Andrews at `transform_order`.
std::vector<LemmaCheck> lemma_suite(int order = 500, int binomial_order = 200,
                                    int transform_order = 100);

}  // namespace excludant
