#include "excludant/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "excludant/errors.hpp"

namespace excludant {

namespace {

bool part_allowed(PartitionClass cls, int p) {
  if (cls == PartitionClass::EvenPartsMultipleOf4 && p % 2 == 0) return p % 4 == 0;
  return true;
}

bool part_repeatable(PartitionClass cls, int p) {
  switch (cls) {
    case PartitionClass::DistinctOddParts: return p % 2 == 0;
    case PartitionClass::DistinctEvenParts: return p % 2 == 1;
    default: return true;
  }
}

void enumerate_rec(int remaining, int max_part, PartitionClass cls, Partition& buf,
                   const std::function<void(const Partition&)>& visit) {
  if (remaining == 0) {
    visit(buf);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    if (!part_allowed(cls, p)) continue;
    buf.push_back(p);
    enumerate_rec(remaining - p, part_repeatable(cls, p) ? p : p - 1, cls, buf, visit);
    buf.pop_back();
  }
}

struct Atom {
  int value, color;
};

void colored_rec(const std::vector<Atom>& atoms, std::size_t from, int remaining,
                 ColoredPartition& buf,
                 const std::function<void(const ColoredPartition&)>& visit) {
  if (remaining == 0) {
    visit(buf);
    return;
  }
  for (std::size_t i = from; i < atoms.size(); ++i) {
    if (atoms[i].value > remaining) continue;
    buf.push_back({atoms[i].value, atoms[i].color});
    colored_rec(atoms, i + 1, remaining - atoms[i].value, buf, visit);
    buf.pop_back();
  }
}

}  // namespace

int weight(const Partition& p) { return std::accumulate(p.begin(), p.end(), 0); }

int weight(const ColoredPartition& p) {
  int w = 0;
  for (const auto& part : p) w += part.value;
  return w;
}

Partition conjugate(const Partition& p) {
  Partition c;
  if (p.empty()) return c;
  c.reserve(p.front());
  for (int j = 1; j <= p.front(); ++j) {
    int len = 0;
    while (len < static_cast<int>(p.size()) && p[len] >= j) ++len;
    c.push_back(len);
  }
  return c;
}

bool is_partition(const Partition& p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] < 1) return false;
    if (i > 0 && p[i] > p[i - 1]) return false;
  }
  return true;
}

bool in_class(const Partition& p, PartitionClass cls) {
  if (!is_partition(p)) return false;
  if (cls == PartitionClass::TwoColoredEvenDistinct) return false;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!part_allowed(cls, p[i])) return false;
    if (i > 0 && p[i] == p[i - 1] && !part_repeatable(cls, p[i])) return false;
  }
  return true;
}

bool is_colored_partition(const ColoredPartition& p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    const auto& part = p[i];
    if (part.value < 1) return false;
    if (part.value % 2 == 1 && part.color != -1) return false;
    if (part.value % 2 == 0 && part.color != 0 && part.color != 1) return false;
    if (i > 0) {
      const auto& prev = p[i - 1];
      if (part.value > prev.value) return false;
      if (part.value == prev.value && part.color <= prev.color) return false;
    }
  }
  return true;
}

void normalize(ColoredPartition& p) {
  std::sort(p.begin(), p.end(), [](const ColoredPart& a, const ColoredPart& b) {
    if (a.value != b.value) return a.value > b.value;
    return a.color < b.color;
  });
}

std::vector<std::pair<int, int>> run_lengths(const Partition& p) {
  std::vector<std::pair<int, int>> runs;
  for (int part : p) {
    if (!runs.empty() && runs.back().first == part)
      ++runs.back().second;
    else
      runs.emplace_back(part, 1);
  }
  return runs;
}

void for_each_partition(int n, PartitionClass cls,
                        const std::function<void(const Partition&)>& visit) {
  if (n < 0) throw DomainError("partition weight must be non-negative");
  if (cls == PartitionClass::TwoColoredEvenDistinct)
    throw DomainError("colored partitions are enumerated by enumerate_colored");
  Partition buf;
  buf.reserve(n);
  enumerate_rec(n, n, cls, buf, visit);
}

std::vector<Partition> enumerate(int n, PartitionClass cls) {
  std::vector<Partition> out;
  for_each_partition(n, cls, [&](const Partition& p) { out.push_back(p); });
  return out;
}

std::size_t count_partitions(int n, PartitionClass cls) {
  if (cls == PartitionClass::TwoColoredEvenDistinct) {
    std::size_t count = 0;
    for_each_colored(n, [&](const ColoredPartition&) { ++count; });
    return count;
  }
  std::size_t count = 0;
  for_each_partition(n, cls, [&](const Partition&) { ++count; });
  return count;
}

void for_each_colored(int n,
                      const std::function<void(const ColoredPartition&)>& visit) {
  if (n < 0) throw DomainError("partition weight must be non-negative");
  std::vector<Atom> atoms;
  for (int v = n; v >= 1; --v) {
    if (v % 2 == 1) {
      atoms.push_back({v, -1});
    } else {
      atoms.push_back({v, 0});
      atoms.push_back({v, 1});
    }
  }
  ColoredPartition buf;
  colored_rec(atoms, 0, n, buf, visit);
}

std::vector<ColoredPartition> enumerate_colored(int n) {
  std::vector<ColoredPartition> out;
  for_each_colored(n, [&](const ColoredPartition& p) { out.push_back(p); });
  return out;
}

FerrersDiagram ferrers(const Partition& p) {
  return FerrersDiagram{p, std::vector<int>(p.size(), 0)};
}

FerrersDiagram shifted_ferrers(const Partition& p) {
  FerrersDiagram d{p, {}};
  for (std::size_t j = 0; j < p.size(); ++j) d.offsets.push_back(static_cast<int>(j));
  return d;
}

int cell_count(const FerrersDiagram& d) {
  return std::accumulate(d.rows.begin(), d.rows.end(), 0);
}

std::string render(const FerrersDiagram& d, char cell) {
  std::string out;
  for (std::size_t i = 0; i < d.rows.size(); ++i) {
    int off = i < d.offsets.size() ? d.offsets[i] : 0;
    out.append(static_cast<std::size_t>(off), ' ');
    out.append(static_cast<std::size_t>(d.rows[i]), cell);
    out.push_back('\n');
  }
  return out;
}

std::string format_partition(const Partition& p, const std::string& sep) {
  if (p.empty()) return "()";
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(p[i]);
  }
  return out;
}

Partition parse_partition(const std::string& text) {
  Partition p;
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(token, &used);
    } catch (const std::exception&) {
      throw DomainError("malformed partition literal: '" + text + "'");
    }
    if (used != token.size() || v < 1)
      throw DomainError("malformed partition literal: '" + text + "'");
    p.push_back(v);
    token.clear();
  };
  for (char ch : text) {
    if (ch == ',' || ch == '+' || ch == ' ' || ch == '\t')
      flush();
    else
      token.push_back(ch);
  }
  flush();
  std::sort(p.rbegin(), p.rend());
  return p;
}

}  // namespace excludant
