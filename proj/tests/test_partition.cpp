#include <doctest.h>

#include <set>

#include "excludant/errors.hpp"
#include "excludant/partition.hpp"

using namespace excludant;

namespace {

// Coin-change counts: part v usable up to cap(v) times (cap < 0 means unbounded).
template <class Cap>
std::vector<long long> dp_counts(int N, Cap cap) {
  std::vector<long long> c(N + 1, 0);
  c[0] = 1;
  for (int v = 1; v <= N; ++v) {
    const int k = cap(v);
    if (k == 0) continue;
    if (k < 0) {
      for (int n = v; n <= N; ++n) c[n] += c[n - v];
    } else {
      for (int n = N; n >= v; --n) c[n] += c[n - v];
    }
  }
  return c;
}

}  // namespace

TEST_CASE("unrestricted counts match coin-change oracle") {
  auto oracle = dp_counts(30, [](int) { return -1; });
  for (int n = 0; n <= 30; ++n)
    CHECK(count_partitions(n, PartitionClass::Unrestricted) == static_cast<std::size_t>(oracle[n]));
}

TEST_CASE("restricted classes") {
  auto od = dp_counts(30, [](int v) { return v % 2 ? 1 : -1; });
  auto ed = dp_counts(30, [](int v) { return v % 2 ? -1 : 1; });
  auto m4 = dp_counts(30, [](int v) { return v % 2 ? -1 : (v % 4 == 0 ? -1 : 0); });
  for (int n = 0; n <= 30; ++n) {
    CHECK(count_partitions(n, PartitionClass::DistinctOddParts) == static_cast<std::size_t>(od[n]));
    CHECK(count_partitions(n, PartitionClass::DistinctEvenParts) == static_cast<std::size_t>(ed[n]));
    CHECK(count_partitions(n, PartitionClass::EvenPartsMultipleOf4) ==
          static_cast<std::size_t>(m4[n]));
  }
  CHECK(count_partitions(6, PartitionClass::DistinctOddParts) == 5);
  CHECK(count_partitions(5, PartitionClass::DistinctEvenParts) == 6);
}

TEST_CASE("p_ed(5) listing") {
  auto all = enumerate(5, PartitionClass::DistinctEvenParts);
  std::vector<Partition> want = {{5}, {4, 1}, {3, 2}, {3, 1, 1}, {2, 1, 1, 1}, {1, 1, 1, 1, 1}};
  CHECK(all == want);
}

TEST_CASE("enumeration order and validity") {
  std::vector<Partition> want = {{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}};
  CHECK(enumerate(4, PartitionClass::Unrestricted) == want);
  CHECK(enumerate(0, PartitionClass::Unrestricted) == std::vector<Partition>{{}});
  for (auto cls : {PartitionClass::Unrestricted, PartitionClass::DistinctOddParts,
                   PartitionClass::DistinctEvenParts, PartitionClass::EvenPartsMultipleOf4}) {
    auto all = enumerate(14, cls);
    std::set<Partition> uniq(all.begin(), all.end());
    CHECK(uniq.size() == all.size());
    for (const auto& p : all) {
      CHECK(weight(p) == 14);
      CHECK(in_class(p, cls));
    }
  }
  CHECK_THROWS_AS(enumerate(-1, PartitionClass::Unrestricted), DomainError);
  CHECK_THROWS_AS(enumerate(3, PartitionClass::TwoColoredEvenDistinct), DomainError);
}

TEST_CASE("class membership") {
  CHECK(in_class({3, 2, 2, 1}, PartitionClass::DistinctOddParts));
  CHECK_FALSE(in_class({3, 3, 1}, PartitionClass::DistinctOddParts));
  CHECK(in_class({4, 3, 3, 2}, PartitionClass::DistinctEvenParts));
  CHECK_FALSE(in_class({2, 2}, PartitionClass::DistinctEvenParts));
  CHECK(in_class({8, 4, 4, 3, 3}, PartitionClass::EvenPartsMultipleOf4));
  CHECK_FALSE(in_class({6, 1}, PartitionClass::EvenPartsMultipleOf4));
  CHECK_FALSE(is_partition({1, 2}));
  CHECK_FALSE(is_partition({2, 0}));
}

TEST_CASE("conjugation") {
  CHECK(conjugate({4, 2, 1}) == Partition{3, 2, 1, 1});
  CHECK(conjugate({}) == Partition{});
  for (const auto& p : enumerate(12, PartitionClass::Unrestricted)) {
    CHECK(conjugate(conjugate(p)) == p);
    CHECK(weight(conjugate(p)) == 12);
  }
}

TEST_CASE("colored partitions") {
  // |D^e_2(n)| is the coefficient of (-q;q^2)_inf (-q^2;q^2)_inf^2.
  std::vector<long long> c(21, 0);
  c[0] = 1;
  for (int v = 1; v <= 20; ++v) {
    const int copies = v % 2 ? 1 : 2;
    for (int r = 0; r < copies; ++r)
      for (int n = 20; n >= v; --n) c[n] += c[n - v];
  }
  for (int n = 0; n <= 20; ++n) {
    auto all = enumerate_colored(n);
    CHECK(all.size() == static_cast<std::size_t>(c[n]));
    for (const auto& p : all) {
      CHECK(is_colored_partition(p));
      CHECK(weight(p) == n);
    }
  }
  ColoredPartition x = {{2, 1}, {3, -1}, {2, 0}};
  normalize(x);
  CHECK(x == ColoredPartition{{3, -1}, {2, 0}, {2, 1}});
  CHECK_FALSE(is_colored_partition({{2, 0}, {2, 0}}));
  CHECK_FALSE(is_colored_partition({{3, 0}}));
}

TEST_CASE("diagrams") {
  auto d = ferrers({3, 1});
  CHECK(cell_count(d) == 4);
  CHECK(render(d) == "###\n#\n");
  auto s = shifted_ferrers({3, 2});
  CHECK(s.offsets == std::vector<int>{0, 1});
  CHECK(render(s, '*') == "***\n **\n");
}

TEST_CASE("literals") {
  CHECK(parse_partition("6,4,3,1") == Partition{6, 4, 3, 1});
  CHECK(parse_partition("1+3 4") == Partition{4, 3, 1});
  CHECK(parse_partition("") == Partition{});
  CHECK(format_partition({5, 2, 2}) == "5+2+2");
  CHECK(format_partition({}) == "()");
  CHECK_THROWS_AS(parse_partition("3,x"), DomainError);
  CHECK_THROWS_AS(parse_partition("3,0"), DomainError);
  CHECK_THROWS_AS(parse_partition("-2"), DomainError);
}

TEST_CASE("run lengths") {
  auto r = run_lengths({4, 4, 2, 1, 1, 1});
  CHECK(r == std::vector<std::pair<int, int>>{{4, 2}, {2, 1}, {1, 3}});
}
