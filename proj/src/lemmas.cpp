#include "excludant/lemmas.hpp"

#include "excludant/errors.hpp"
#include "excludant/identities.hpp"

namespace excludant {

std::vector<bigint> pentagonal_partition_numbers(int order) {
  std::vector<bigint> p(static_cast<std::size_t>(order) + 1, bigint(0));
  p[0] = 1;
  for (int n = 1; n <= order; ++n) {
    bigint acc = 0;
    for (int k = 1;; ++k) {
      const int g1 = k * (3 * k - 1) / 2, g2 = k * (3 * k + 1) / 2;
      if (g1 > n) break;
      const int sign = k % 2 ? 1 : -1;
      acc += sign * p[n - g1];
      if (g2 <= n) acc += sign * p[n - g2];
    }
    p[n] = acc;
  }
  return p;
}

IdentitySides<TruncatedSeries> q_binomial_at_t_eq_q(int a, int order) {
  if (a != 0 && a != -1) throw DomainError("q-binomial check supports a = 0 or a = -1");
  TruncatedSeries lhs(order), term = TruncatedSeries::one(order);
  for (int n = 0; n <= order; ++n) {
    lhs.add_shifted(term, n);
    if (a == -1) term.mul_binomial(1, n + 1);
    term.div_binomial(-1, n + 1);
  }
  TruncatedSeries rhs = pochhammer_recip(poch(1, 1, 1), order);
  if (a == -1) rhs = rhs * pochhammer(poch(-1, 2, 1), order);
  return {lhs, rhs};
}

IdentitySides<TruncatedSeries> gauss_alternating_squares(int order) {
  return {theta_gauss(ThetaKind::AlternatingSquares, order),
          pochhammer(poch(1, 1, 1), order) * pochhammer_recip(poch(-1, 1, 1), order)};
}

IdentitySides<TruncatedSeries> gauss_triangular(int order) {
  return {theta_gauss(ThetaKind::Triangular, order),
          pochhammer(poch(1, 2, 2), order) * pochhammer_recip(poch(1, 1, 2), order)};
}

IdentitySides<TruncatedSeries> euler_partition_product(int order) {
  return {pochhammer_recip(poch(1, 1, 1), order),
          TruncatedSeries(order, pentagonal_partition_numbers(order))};
}

IdentitySides<BivariateSeries> heine_meex_specialization(int N, int J) {
  BivariateSeries lhs(N, J), rhs_sum(N, J);
  BivariateSeries term = BivariateSeries::one(N, J);
  for (int m = 0; m * (m + 1) <= N; ++m) {
    BivariateSeries shifted = term;
    shifted.shift(0, m * (m + 1));
    lhs += shifted;
    term.mul_binomial(-1, 1, 4 + 2 * m);
    term.div_binomial(-1, 0, 2 * m + 2);
  }
  term = BivariateSeries::one(N, J);
  for (int m = 0; m <= J && 4 * m <= N; ++m) {
    BivariateSeries shifted = term;
    shifted.shift(m, 4 * m);
    rhs_sum += shifted;
    term.div_binomial(-1, 0, 2 * m + 2);
    term.div_binomial(1, 0, 2 * m + 2);
  }
  BivariateSeries prefactor = BivariateSeries::one(N, J);
  for (int e = 4; e <= N; e += 2) prefactor.mul_binomial(-1, 1, e);
  for (int e = 2; e <= N; e += 2) prefactor.mul_binomial(1, 0, e);
  return {lhs, mul(prefactor, rhs_sum)};
}

IdentitySides<TruncatedSeries> andrews_abar_specialization(int order) {
  const int N = order;
  TruncatedSeries lhs(N), term = TruncatedSeries::one(N);
  for (int m = 0; 2 * m <= N; ++m) {
    lhs.add_shifted(term, 2 * m);
    term.mul_binomial(-1, 2 * m + 2);
    term.div_binomial(-1, 2 * m + 1);
    term.div_binomial(1, 2 * m + 3);
  }

  TruncatedSeries nahm(N);
  term = TruncatedSeries::one(N);
  term.div_binomial(-1, 3);
  for (int m = 0; m * m + 3 * m <= N; ++m) {
    nahm.add_shifted(term, m * m + 3 * m);
    term.div_binomial(-1, 2 * m + 5);
  }
  TruncatedSeries first = pochhammer(poch(1, 2, 2), N) * pochhammer_recip(poch(1, 1, 2), N) *
                          pochhammer_recip(poch(-1, 3, 2), N) * nahm;
  first.shift(1);

  TruncatedSeries lambert(N);
  for (int n = 0; 3 * n <= N; ++n) {
    TruncatedSeries t = TruncatedSeries::monomial(N, 3 * n);
    t.div_binomial(1, 2 * n + 1);
    lambert += t;
  }
  lambert.mul_binomial(-1, 2);
  return {lhs, first + lambert};
}

namespace {

std::optional<int> first_q_mismatch(const TruncatedSeries& a, const TruncatedSeries& b) {
  const int upto = std::min(a.order(), b.order());
  return first_difference(a.coeffs(), b.coeffs(), upto);
}

std::optional<int> first_q_mismatch(const BivariateSeries& a, const BivariateSeries& b) {
  std::optional<int> best;
  for (int j = 0; j <= std::min(a.w_order(), b.w_order()); ++j)
    if (auto d = first_q_mismatch(a.w_coefficient(j), b.w_coefficient(j)))
      if (!best || *d < *best) best = d;
  return best;
}

template <class S>
LemmaCheck check(std::string name, int order, const IdentitySides<S>& sides) {
  return {std::move(name), order, first_q_mismatch(sides.lhs, sides.rhs)};
}

}  // namespace

std::vector<LemmaCheck> lemma_suite(int order, int binomial_order, int transform_order) {
  std::vector<LemmaCheck> out;
  out.push_back(check("q-binomial a=0 t=q", binomial_order, q_binomial_at_t_eq_q(0, binomial_order)));
  out.push_back(check("q-binomial a=-1 t=q", binomial_order, q_binomial_at_t_eq_q(-1, binomial_order)));
  out.push_back(check("gauss alternating squares", order, gauss_alternating_squares(order)));
  out.push_back(check("gauss triangular", order, gauss_triangular(order)));
  out.push_back(check("euler partition product", order, euler_partition_product(order)));
  out.push_back(check("heine (meex specialization)", transform_order,
                      heine_meex_specialization(transform_order, transform_order / 4)));
  out.push_back(check("andrews (abar specialization)", transform_order,
                      andrews_abar_specialization(transform_order)));
  return out;
}

}  // namespace excludant
