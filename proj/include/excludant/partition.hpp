#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace excludant {

/// Parts in non-increasing order, repeats listed.
using Partition = std::vector<int>;

enum class PartitionClass {
  Unrestricted,
  DistinctOddParts,      // odd parts at most once, even parts free
  DistinctEvenParts,     // even parts at most once, odd parts free
  TwoColoredEvenDistinct,
  EvenPartsMultipleOf4,  // even parts divisible by 4, odd parts free
};

/// A part of a colored partition; color is -1 for odd values, 0 or 1 for even.
struct ColoredPart {
  int value;
  int color;
  bool operator==(const ColoredPart&) const = default;
  auto operator<=>(const ColoredPart&) const = default;
};

/// Sorted by value descending, then color ascending.
using ColoredPartition = std::vector<ColoredPart>;

struct FerrersDiagram {
  std::vector<int> rows;
  std::vector<int> offsets;  // same length as rows
  bool operator==(const FerrersDiagram&) const = default;
};

int weight(const Partition& p);
int weight(const ColoredPartition& p);
Partition conjugate(const Partition& p);

bool is_partition(const Partition& p);
bool in_class(const Partition& p, PartitionClass cls);
bool is_colored_partition(const ColoredPartition& p);
void normalize(ColoredPartition& p);

/// (value, multiplicity) pairs, largest value first.
std::vector<std::pair<int, int>> run_lengths(const Partition& p);

/// Every partition of n in the class, lexicographically decreasing.
std::vector<Partition> enumerate(int n, PartitionClass cls);
void for_each_partition(int n, PartitionClass cls,
                        const std::function<void(const Partition&)>& visit);
std::size_t count_partitions(int n, PartitionClass cls);

/// The set D^e_2(n): distinct parts, even parts in two colors.
std::vector<ColoredPartition> enumerate_colored(int n);
void for_each_colored(int n,
                      const std::function<void(const ColoredPartition&)>& visit);

FerrersDiagram ferrers(const Partition& p);
FerrersDiagram shifted_ferrers(const Partition& p);
int cell_count(const FerrersDiagram& d);
std::string render(const FerrersDiagram& d, char cell = '#');

std::string format_partition(const Partition& p, const std::string& sep = "+");
Partition parse_partition(const std::string& text);

}  // namespace excludant
