#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "excludant/bigint.hpp"
#include "excludant/partition.hpp"

namespace excludant {

enum class Parity { Odd, Even };

enum class StatisticId {
  AOodd,
  AOeven,
  SigmaOdMoex,
  SigmaOdMeex,
  AbarOodd,
  AbarOeven,
  SigmaOdMoax,
  SigmaOdMeax,
  AEDodd,
  AEDeven,
  SigmaEdMoex,
  SigmaEdMeex,
};

inline constexpr std::array<StatisticId, 12> kAllStatistics = {
    StatisticId::AOodd,       StatisticId::AOeven,      StatisticId::SigmaOdMoex,
    StatisticId::SigmaOdMeex, StatisticId::AbarOodd,    StatisticId::AbarOeven,
    StatisticId::SigmaOdMoax, StatisticId::SigmaOdMeax, StatisticId::AEDodd,
    StatisticId::AEDeven,     StatisticId::SigmaEdMoex, StatisticId::SigmaEdMeex};

inline constexpr int kDefaultEnumerationBudget = 45;

std::string statistic_name(StatisticId id);      // kebab-case, e.g. "a-o-od"
std::string statistic_notation(StatisticId id);  // e.g. "a°_od"
std::string statistic_identifier(StatisticId id);  // e.g. "AOodd"
std::string statistic_description(StatisticId id);
StatisticId parse_statistic(std::string_view name);
PartitionClass statistic_class(StatisticId id);

int mex(const Partition& p);
int parity_mex(const Partition& p, Parity parity);
int maxex(const Partition& p);
std::optional<int> parity_max(const Partition& p, Parity parity);

/// Contribution of one partition to the aggregate sequence of `id`.
long long statistic_term(StatisticId id, const Partition& p);

bigint sequence_value(StatisticId id, int n, int budget = kDefaultEnumerationBudget);
std::vector<bigint> sequence_values(StatisticId id, int n_max,
                                    int budget = kDefaultEnumerationBudget);

/// Row j of p_{od,e}(n, j) for j = 0..n/2.
std::vector<bigint> bivariate_row_odm(int n, int budget = kDefaultEnumerationBudget);
std::vector<bigint> bivariate_row_4e(int n, int budget = kDefaultEnumerationBudget);
bigint bivariate_count_odm(int n, int j, int budget = kDefaultEnumerationBudget);
bigint bivariate_count_4e(int n, int j, int budget = kDefaultEnumerationBudget);

void check_budget(int n, int budget);

}  // namespace excludant
