#include "forbcfg/containment.hpp"

#include <algorithm>
#include <map>

#include "forbcfg/errors.hpp"

namespace forbcfg {

std::pair<int, int> pair_of_index(int m, int index) {
  for (int i = 1; i < m; ++i) {
    int row_pairs = m - i;
    if (index < row_pairs) return {i, i + 1 + index};
    index -= row_pairs;
  }
  throw DomainError("pair index out of range");
}

int pattern_at(Column c, int rows, int i, int j) {
  int x = SMatrix::entry_of(c, rows, i);
  int y = SMatrix::entry_of(c, rows, j);
  if (x > 1 || y > 1) return kNoPattern;
  return x * 2 + y;
}

PairCounts pair_counts(const SMatrix& a) {
  PairCounts pc;
  pc.m = a.rows();
  pc.counts.assign(static_cast<size_t>(pair_count(pc.m)), {0, 0, 0, 0});
  for (std::int64_t col = 0; col < a.ncols(); ++col) {
    Column c = a.column(col);
    int idx = 0;
    for (int i = 1; i < pc.m; ++i) {
      int x = SMatrix::entry_of(c, pc.m, i);
      for (int j = i + 1; j <= pc.m; ++j, ++idx) {
        if (x > 1) continue;
        int y = SMatrix::entry_of(c, pc.m, j);
        if (y > 1) continue;
        ++pc.counts[static_cast<size_t>(idx)][static_cast<size_t>(x * 2 + y)];
      }
    }
  }
  return pc;
}

bool pair_meets_thresholds(const std::array<std::int32_t, 4>& counts, int a,
                           int b, int c, int d) {
  if (counts[kPattern00] < a || counts[kPattern11] < d) return false;
  // The two disjuncts are the two row orderings of F(a,b,c,d).
  return (counts[kPattern10] >= b && counts[kPattern01] >= c) ||
         (counts[kPattern10] >= c && counts[kPattern01] >= b);
}

std::optional<std::pair<int, int>> violating_pair_2rowed(const PairCounts& pc,
                                                         int a, int b, int c,
                                                         int d) {
  for (int i = 1; i < pc.m; ++i)
    for (int j = i + 1; j <= pc.m; ++j)
      if (pair_meets_thresholds(pc.at(i, j), a, b, c, d))
        return std::make_pair(i, j);
  return std::nullopt;
}

bool avoids_2rowed(const PairCounts& pc, int a, int b, int c, int d) {
  return !violating_pair_2rowed(pc, a, b, c, d).has_value();
}

bool avoids_2rowed(const SMatrix& matrix, int a, int b, int c, int d) {
  return avoids_2rowed(pair_counts(matrix), a, b, c, d);
}

namespace {

// For one ordered injective row map phi, every F-column group must fit in
// the group of A-columns whose restriction to phi equals it.  Columns with
// equal restriction are interchangeable, so comparing group counts is exact.
bool map_embeds(const SMatrix& f, const SMatrix& a,
                const std::vector<int>& phi,
                const std::map<std::vector<std::uint8_t>, int>& f_groups) {
  std::map<std::vector<std::uint8_t>, int> a_groups;
  std::vector<std::uint8_t> key(phi.size());
  for (std::int64_t col = 0; col < a.ncols(); ++col) {
    for (size_t t = 0; t < phi.size(); ++t)
      key[t] = static_cast<std::uint8_t>(a.entry(col, phi[t]));
    auto it = f_groups.find(key);
    if (it != f_groups.end()) ++a_groups[key];
  }
  for (const auto& [cols, need] : f_groups) {
    auto it = a_groups.find(cols);
    if (it == a_groups.end() || it->second < need) return false;
  }
  return true;
}

bool search_maps(const SMatrix& f, const SMatrix& a, std::vector<int>& phi,
                 std::vector<bool>& used,
                 const std::map<std::vector<std::uint8_t>, int>& f_groups) {
  if (static_cast<int>(phi.size()) == f.rows())
    return map_embeds(f, a, phi, f_groups);
  for (int row = 1; row <= a.rows(); ++row) {
    if (used[static_cast<size_t>(row)]) continue;
    used[static_cast<size_t>(row)] = true;
    phi.push_back(row);
    if (search_maps(f, a, phi, used, f_groups)) return true;
    phi.pop_back();
    used[static_cast<size_t>(row)] = false;
  }
  return false;
}

}  // namespace

bool contains_generic(const SMatrix& f, const SMatrix& a) {
  if (f.rows() > 4 || a.rows() > 12)
    throw SizeError("too large for generic checker");
  if (f.rows() > a.rows()) return false;
  if (f.ncols() == 0) return true;
  if (f.ncols() > a.ncols()) return false;

  std::map<std::vector<std::uint8_t>, int> f_groups;
  for (std::int64_t col = 0; col < f.ncols(); ++col)
    ++f_groups[f.unpack(f.column(col))];

  std::vector<int> phi;
  std::vector<bool> used(static_cast<size_t>(a.rows()) + 1, false);
  return search_maps(f, a, phi, used, f_groups);
}

}  // namespace forbcfg
