#include <doctest.h>

#include "excludant/errors.hpp"
#include "excludant/lemmas.hpp"

using namespace excludant;

TEST_CASE("pentagonal recurrence") {
  auto p = pentagonal_partition_numbers(100);
  CHECK(p[0] == 1);
  CHECK(p[5] == 7);
  CHECK(p[10] == 42);
  CHECK(p[50] == 204226);
  CHECK(p[100] == bigint("190569292"));
}

TEST_CASE("Gauss identities to order 500") {
  auto a = gauss_alternating_squares(500);
  CHECK(a.lhs == a.rhs);
  auto b = gauss_triangular(500);
  CHECK(b.lhs == b.rhs);
}

TEST_CASE("Euler product to order 500") {
  auto e = euler_partition_product(500);
  CHECK(e.lhs == e.rhs);
}

TEST_CASE("q-binomial specializations") {
  for (int a : {0, -1}) {
    auto s = q_binomial_at_t_eq_q(a, 200);
    CHECK(s.lhs == s.rhs);
  }
  CHECK_THROWS_AS(q_binomial_at_t_eq_q(1, 10), DomainError);
}

TEST_CASE("q-binomial as displayed fails at a = -1") {
  // (at;q)_inf / (t;q)_inf with t = q, a = -1.
  auto s = q_binomial_at_t_eq_q(-1, 20);
  auto printed = pochhammer(poch(-1, 1, 1), 20) * pochhammer_recip(poch(1, 1, 1), 20);
  CHECK(s.lhs[1] == 1);
  CHECK(printed[1] == 2);
}

TEST_CASE("telescoping sum behind the meex-4e step") {
  // sum_{m=1}^{n} q^{4m} (q^4;q^4)_{m-1} = 1 - (q^4;q^4)_n
  const int N = 200;
  for (int n : {1, 3, 10, 50}) {
    TruncatedSeries lhs(N), term = TruncatedSeries::one(N);
    for (int m = 1; m <= n; ++m) {
      lhs.add_shifted(term, 4 * m);
      if (4 * m <= N) term.mul_binomial(-1, 4 * m);
    }
    CHECK(lhs == TruncatedSeries::one(N) - pochhammer(poch(1, 4, 4, n), N));
  }
}

TEST_CASE("Heine and Andrews at the proof specializations") {
  auto h = heine_meex_specialization(100, 25);
  CHECK(h.lhs == h.rhs);
  auto a = andrews_abar_specialization(100);
  CHECK(a.lhs == a.rhs);
}

TEST_CASE("lemma suite summary") {
  auto all = lemma_suite();
  CHECK(all.size() == 7);
  for (const auto& c : all) {
    INFO(c.name);
    CHECK(c.pass());
  }
}
