#include "excludant/bijection.hpp"

#include <algorithm>
#include <set>

#include "excludant/errors.hpp"

namespace excludant {

FerrersDiagram augmented_diagram(const Partition& mu, int k) {
  if (k < 0) throw DomainError("staircase parameter must be non-negative");
  FerrersDiagram d;
  for (int i = 1; i <= k; ++i) d.rows.push_back(i);
  d.rows.insert(d.rows.end(), mu.begin(), mu.end());
  d.offsets.assign(d.rows.size(), 0);
  return d;
}

StaircaseSplit staircase_split(const FerrersDiagram& d) {
  for (int off : d.offsets)
    if (off != 0) throw DomainError("staircase split needs a left-justified diagram");
  StaircaseSplit s;
  const int rows = static_cast<int>(d.rows.size());
  const int width = rows ? *std::max_element(d.rows.begin(), d.rows.end()) : 0;
  for (int j = 1; j <= width; ++j) {
    int len = 0;
    for (int i = j; i <= rows; ++i)
      if (d.rows[i - 1] >= j) ++len;
    if (len > 0) s.left_columns.push_back(len);
  }
  for (int i = 1; i <= rows; ++i)
    if (d.rows[i - 1] > i) s.right_rows.push_back(d.rows[i - 1] - i);
  return s;
}

namespace {

// Row i (1-based) of the diagram rebuilt from its diagonal columns.
int left_cells_in_row(const Partition& cols, int i) {
  int count = 0;
  for (int j = 1; j <= std::min<int>(i, static_cast<int>(cols.size())); ++j)
    if (cols[j - 1] + j - 1 >= i) ++count;
  return count;
}

int left_depth(const Partition& cols) {
  int depth = 0;
  for (int j = 1; j <= static_cast<int>(cols.size()); ++j)
    depth = std::max(depth, cols[j - 1] + j - 1);
  return depth;
}

}  // namespace

FerrersDiagram staircase_join(const StaircaseSplit& s, int first_right_row) {
  FerrersDiagram d;
  const int last_right = first_right_row + static_cast<int>(s.right_rows.size()) - 1;
  const int depth = std::max(left_depth(s.left_columns), last_right);
  for (int i = 1; i <= depth; ++i) {
    int len = left_cells_in_row(s.left_columns, i);
    if (i >= first_right_row && i <= last_right) len += s.right_rows[i - first_right_row];
    d.rows.push_back(len);
  }
  while (!d.rows.empty() && d.rows.back() == 0) d.rows.pop_back();
  d.offsets.assign(d.rows.size(), 0);
  return d;
}

ColoredPartition phi(const BijectionInput& input, int n) {
  if (!in_class(input.partition, PartitionClass::DistinctOddParts))
    throw DomainError("input must have distinct odd parts: " +
                      format_partition(input.partition));
  if (input.k < 0) throw DomainError("staircase parameter must be non-negative");
  if (weight(input.partition) + input.k * (input.k + 1) != n)
    throw DomainError("weight mismatch: |lambda| + k(k+1) != n");

  ColoredPartition out;
  Partition mu;
  for (int part : input.partition) {
    if (part % 2)
      out.push_back({part, -1});
    else
      mu.push_back(part / 2);
  }
  const StaircaseSplit s = staircase_split(augmented_diagram(mu, input.k));
  const int left_color = input.k % 2, right_color = (input.k + 1) % 2;
  for (int c : s.left_columns) out.push_back({2 * c, left_color});
  for (int r : s.right_rows) out.push_back({2 * r, right_color});
  normalize(out);
  return out;
}

BijectionInput phi_inverse(const ColoredPartition& cp) {
  if (!is_colored_partition(cp)) throw DomainError("malformed colored partition");
  Partition odd, c0, c1;
  for (const auto& p : cp) {
    if (p.color < 0)
      odd.push_back(p.value);
    else
      (p.color == 0 ? c0 : c1).push_back(p.value / 2);
  }
  int k;
  const Partition *cols, *rows;
  if (c0.size() >= c1.size()) {
    const int kp = static_cast<int>(c0.size() - c1.size());
    k = kp % 2 == 0 ? kp : kp - 1;
    cols = &c0, rows = &c1;
  } else {
    const int kp = static_cast<int>(c1.size() - c0.size());
    k = kp % 2 == 1 ? kp : kp - 1;
    cols = &c1, rows = &c0;
  }
  for (int i = 1; i <= k; ++i)
    if (left_cells_in_row(*cols, i) != i)
      throw DomainError("colored partition has no staircase of height " + std::to_string(k));

  const FerrersDiagram d = staircase_join({*cols, *rows}, k + 1);
  Partition mu(d.rows.begin() + std::min<std::size_t>(k, d.rows.size()), d.rows.end());
  if (!is_partition(mu)) throw DomainError("colored partition is not in the image");

  BijectionInput result{odd, k};
  for (int m : mu) result.partition.push_back(2 * m);
  std::sort(result.partition.rbegin(), result.partition.rend());
  return result;
}

BijectionReport check_bijection(int n) {
  BijectionReport rep;
  rep.n = n;
  std::set<ColoredPartition> image;
  for (int k = 0; k * (k + 1) <= n; ++k) {
    for_each_partition(n - k * (k + 1), PartitionClass::DistinctOddParts, [&](const Partition& p) {
      ++rep.domain_size;
      const BijectionInput x{p, k};
      ColoredPartition y;
      try {
        y = phi(x, n);
      } catch (const DomainError&) {
        rep.total = false;
        return;
      }
      if (!is_colored_partition(y) || weight(y) != n) rep.weight_preserving = false;
      if (!image.insert(y).second) rep.injective = false;

      int l0 = 0, l1 = 0;
      for (const auto& part : y) {
        if (part.color == 0) ++l0;
        if (part.color == 1) ++l1;
      }
      if (k % 2 == 0 ? l0 < l1 : l1 <= l0) rep.color_law = false;
      const int lc = k % 2 == 0 ? l0 : l1, lr = k % 2 == 0 ? l1 : l0;
      if (lc - lr != k && lc - lr != k + 1) rep.color_law = false;

      try {
        if (!(phi_inverse(y) == x)) rep.left_inverse = false;
      } catch (const DomainError&) {
        rep.left_inverse = false;
      }
    });
  }
  for_each_colored(n, [&](const ColoredPartition& y) {
    ++rep.codomain_size;
    if (!image.count(y)) rep.surjective = false;
    try {
      if (!(phi(phi_inverse(y), n) == y)) rep.right_inverse = false;
    } catch (const DomainError&) {
      rep.right_inverse = false;
    }
  });
  return rep;
}

std::string format_colored(const ColoredPartition& cp) {
  if (cp.empty()) return "()";
  std::string out;
  for (std::size_t i = 0; i < cp.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(cp[i].value);
    if (cp[i].color >= 0) out += "_" + std::to_string(cp[i].color);
  }
  return out;
}

ColoredPartition parse_colored(const std::string& text) {
  ColoredPartition cp;
  std::string token;
  auto bad = [&] { return DomainError("malformed colored partition literal: '" + text + "'"); };
  auto flush = [&] {
    if (token.empty()) return;
    const auto sep = token.find_first_of("_^");
    ColoredPart part{0, -1};
    try {
      std::size_t used = 0;
      const std::string v = token.substr(0, sep);
      part.value = std::stoi(v, &used);
      if (used != v.size()) throw bad();
      if (sep != std::string::npos) {
        const std::string c = token.substr(sep + 1);
        if (c != "0" && c != "1") throw bad();
        part.color = c[0] - '0';
      }
    } catch (const DomainError&) {
      throw;
    } catch (const std::exception&) {
      throw bad();
    }
    if (part.value < 1) throw bad();
    if ((part.value % 2 == 0) != (part.color >= 0))
      throw DomainError("even parts need a color 0/1 and odd parts take none: '" + token + "'");
    cp.push_back(part);
    token.clear();
  };
  for (char ch : text) {
    if (ch == ' ' || ch == ',' || ch == '+' || ch == '\t')
      flush();
    else
      token.push_back(ch);
  }
  flush();
  normalize(cp);
  if (!is_colored_partition(cp)) throw DomainError("repeated part in '" + text + "'");
  return cp;
}

std::string render_staircase(const FerrersDiagram& d) {
  std::string out;
  for (std::size_t i = 0; i < d.rows.size(); ++i) {
    const int off = i < d.offsets.size() ? d.offsets[i] : 0;
    out.append(static_cast<std::size_t>(off), ' ');
    for (int j = 1; j <= d.rows[i]; ++j) out.push_back(j + off <= static_cast<int>(i) + 1 ? 'x' : 'o');
    out.push_back('\n');
  }
  return out;
}

}  // namespace excludant
