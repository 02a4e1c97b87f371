#pragma once

#include <string>
#include <vector>

#include "excludant/partition.hpp"

namespace excludant {

struct StaircaseSplit {
  Partition left_columns;  // column lengths on or below the diagonal
  Partition right_rows;    // row lengths strictly right of the diagonal
  bool operator==(const StaircaseSplit&) const = default;
};

struct BijectionInput {
  Partition partition;  // odd parts distinct
  int k = 0;
  bool operator==(const BijectionInput&) const = default;
};

/// Rows 1, 2, ..., k stacked on the rows of mu, all left-aligned.
FerrersDiagram augmented_diagram(const Partition& mu, int k);

StaircaseSplit staircase_split(const FerrersDiagram& d);
/// Inverse of staircase_split; right rows start at row `first_right_row`.
FerrersDiagram staircase_join(const StaircaseSplit& s, int first_right_row = 1);

ColoredPartition phi(const BijectionInput& input, int n);
BijectionInput phi_inverse(const ColoredPartition& cp);

struct BijectionReport {
  int n = 0;
  std::size_t domain_size = 0;
  std::size_t codomain_size = 0;
  bool total = true;
  bool weight_preserving = true;
  bool injective = true;
  bool surjective = true;
  bool left_inverse = true;   // phi_inverse(phi(x)) == x
  bool right_inverse = true;  // phi(phi_inverse(y)) == y
  bool color_law = true;
  bool pass() const {
    return total && weight_preserving && injective && surjective && left_inverse &&
           right_inverse && color_law && domain_size == codomain_size;
  }
};

BijectionReport check_bijection(int n);

/// "6_1 4_1 3 2_0 1"
std::string format_colored(const ColoredPartition& cp);
/// Accepts "6_1 4_1 3 2_0 1" or "6_1,4_1,3,2_0,1".
ColoredPartition parse_colored(const std::string& text);

/// Cells on or below the diagonal drawn as 'x', cells right of it as 'o'.
std::string render_staircase(const FerrersDiagram& d);

}  // namespace excludant
