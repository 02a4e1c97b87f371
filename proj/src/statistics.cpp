#include "excludant/statistics.hpp"

#include <algorithm>
#include <cctype>
#include <vector>

#include "excludant/errors.hpp"

namespace excludant {

namespace {

struct StatInfo {
  StatisticId id;
  const char* name;
  const char* enum_name;
  const char* notation;
  const char* description;
};

constexpr StatInfo kInfo[] = {
    {StatisticId::AOodd, "a-o-od", "AOodd", "a°_od",
     "odd parts distinct, mex odd (count)"},
    {StatisticId::AOeven, "a-e-od", "AOeven", "aᵉ_od",
     "odd parts distinct, mex even (count)"},
    {StatisticId::SigmaOdMoex, "sigma-od-moex", "SigmaOdMoex", "σ_od moex",
     "odd parts distinct, sum of smallest missing odd"},
    {StatisticId::SigmaOdMeex, "sigma-od-meex", "SigmaOdMeex", "σ_od meex",
     "odd parts distinct, sum of smallest missing even"},
    {StatisticId::AbarOodd, "abar-o-od", "AbarOodd", "ā°_od",
     "odd parts distinct, maximal excludant odd (count)"},
    {StatisticId::AbarOeven, "abar-e-od", "AbarOeven", "āᵉ_od",
     "odd parts distinct, maximal excludant even (count)"},
    {StatisticId::SigmaOdMoax, "sigma-od-moax", "SigmaOdMoax", "σ_od moax",
     "odd parts distinct, sum of largest missing odd below the largest part"},
    {StatisticId::SigmaOdMeax, "sigma-od-meax", "SigmaOdMeax", "σ_od meax",
     "odd parts distinct, sum of largest missing even below the largest part"},
    {StatisticId::AEDodd, "a-o-ed", "AEDodd", "a°_ed",
     "even parts distinct, mex odd (count)"},
    {StatisticId::AEDeven, "a-e-ed", "AEDeven", "aᵉ_ed",
     "even parts distinct, mex even (count)"},
    {StatisticId::SigmaEdMoex, "sigma-ed-moex", "SigmaEdMoex", "σ_ed moex",
     "even parts distinct, sum of smallest missing odd"},
    {StatisticId::SigmaEdMeex, "sigma-ed-meex", "SigmaEdMeex", "σ_ed meex",
     "even parts distinct, sum of smallest missing even"},
};

const StatInfo& info(StatisticId id) { return kInfo[static_cast<int>(id)]; }

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

// Presence flags for values 0..a(p)+2.
std::vector<char> presence(const Partition& p) {
  int top = p.empty() ? 0 : p.front();
  std::vector<char> seen(static_cast<std::size_t>(top) + 3, 0);
  for (int part : p) seen[part] = 1;
  return seen;
}

void require_nonempty(const Partition& p) {
  if (p.empty()) throw DomainError("undefined for empty partition");
}

}  // namespace

std::string statistic_name(StatisticId id) { return info(id).name; }
std::string statistic_notation(StatisticId id) { return info(id).notation; }
std::string statistic_identifier(StatisticId id) { return info(id).enum_name; }
std::string statistic_description(StatisticId id) { return info(id).description; }

StatisticId parse_statistic(std::string_view name) {
  const std::string key = lower(name);
  for (const auto& s : kInfo)
    if (key == s.name || key == lower(s.enum_name)) return s.id;
  throw DomainError("unknown statistic '" + std::string(name) + "'");
}

PartitionClass statistic_class(StatisticId id) {
  switch (id) {
    case StatisticId::AEDodd:
    case StatisticId::AEDeven:
    case StatisticId::SigmaEdMoex:
    case StatisticId::SigmaEdMeex: return PartitionClass::DistinctEvenParts;
    default: return PartitionClass::DistinctOddParts;
  }
}

int mex(const Partition& p) {
  auto seen = presence(p);
  int m = 1;
  while (m < static_cast<int>(seen.size()) && seen[m]) ++m;
  return m;
}

int parity_mex(const Partition& p, Parity parity) {
  auto seen = presence(p);
  int m = parity == Parity::Odd ? 1 : 2;
  while (m < static_cast<int>(seen.size()) && seen[m]) m += 2;
  return m;
}

int maxex(const Partition& p) {
  require_nonempty(p);
  auto seen = presence(p);
  int v = p.front() - 1;
  while (v > 0 && seen[v]) --v;
  return v;
}

std::optional<int> parity_max(const Partition& p, Parity parity) {
  require_nonempty(p);
  auto seen = presence(p);
  int v = p.front() - 1;
  if ((v % 2 == 0) != (parity == Parity::Even)) --v;
  const int floor = parity == Parity::Even ? 2 : 1;
  while (v >= floor && seen[v]) v -= 2;
  if (v < floor) return std::nullopt;
  return v;
}

long long statistic_term(StatisticId id, const Partition& p) {
  switch (id) {
    case StatisticId::AOodd:
    case StatisticId::AEDodd: return mex(p) % 2 == 1;
    case StatisticId::AOeven:
    case StatisticId::AEDeven: return mex(p) % 2 == 0;
    case StatisticId::SigmaOdMoex:
    case StatisticId::SigmaEdMoex: return parity_mex(p, Parity::Odd);
    case StatisticId::SigmaOdMeex:
    case StatisticId::SigmaEdMeex: return parity_mex(p, Parity::Even);
    case StatisticId::AbarOodd: return !p.empty() && maxex(p) % 2 == 1;
    case StatisticId::AbarOeven: return !p.empty() && maxex(p) % 2 == 0;
    case StatisticId::SigmaOdMoax:
      return p.empty() ? 0 : parity_max(p, Parity::Odd).value_or(0);
    case StatisticId::SigmaOdMeax:
      return p.empty() ? 0 : parity_max(p, Parity::Even).value_or(0);
  }
  return 0;
}

void check_budget(int n, int budget) {
  if (n < 0) throw DomainError("n must be non-negative");
  if (n > budget)
    throw BudgetExceeded("n = " + std::to_string(n) + " exceeds the enumeration budget " +
                         std::to_string(budget) +
                         "; use the series engine for larger n");
}

bigint sequence_value(StatisticId id, int n, int budget) {
  check_budget(n, budget);
  long long total = 0;
  for_each_partition(n, statistic_class(id),
                     [&](const Partition& p) { total += statistic_term(id, p); });
  return bigint(total);
}

std::vector<bigint> sequence_values(StatisticId id, int n_max, int budget) {
  check_budget(n_max, budget);
  std::vector<bigint> out;
  for (int n = 0; n <= n_max; ++n) out.push_back(sequence_value(id, n, budget));
  return out;
}

std::vector<bigint> bivariate_row_odm(int n, int budget) {
  check_budget(n, budget);
  std::vector<long long> row(static_cast<std::size_t>(n / 2) + 1, 0);
  for_each_partition(n, PartitionClass::DistinctOddParts, [&](const Partition& p) {
    const int m = parity_mex(p, Parity::Even);
    int j = 0;
    for (int part : p)
      if (part % 2 == 0 && part > m) ++j;
    ++row[j];
  });
  return {row.begin(), row.end()};
}

std::vector<bigint> bivariate_row_4e(int n, int budget) {
  check_budget(n, budget);
  std::vector<long long> row(static_cast<std::size_t>(n / 2) + 1, 0);
  for_each_partition(n, PartitionClass::EvenPartsMultipleOf4, [&](const Partition& p) {
    int j = 0;
    for (int part : p)
      if (part % 2 == 0) ++j;
    ++row[j];
  });
  return {row.begin(), row.end()};
}

bigint bivariate_count_odm(int n, int j, int budget) {
  auto row = bivariate_row_odm(n, budget);
  return j >= 0 && j < static_cast<int>(row.size()) ? row[j] : bigint(0);
}

bigint bivariate_count_4e(int n, int j, int budget) {
  auto row = bivariate_row_4e(n, budget);
  return j >= 0 && j < static_cast<int>(row.size()) ? row[j] : bigint(0);
}

}  // namespace excludant
