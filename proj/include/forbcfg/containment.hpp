#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "forbcfg/matrix.hpp"

namespace forbcfg {

// Pattern of a column at a row pair (i,j), i<j.  Codes 0..3 are the 0/1
// patterns x*2+y for (row i, row j) = (x,y); kNoPattern marks a column with
// a digit >= 2 at either row, which never participates in 2-rowed counts.
inline constexpr int kPattern00 = 0;
inline constexpr int kPattern01 = 1;
inline constexpr int kPattern10 = 2;
inline constexpr int kPattern11 = 3;
inline constexpr int kNoPattern = 4;

// The vector assigned to a row pair by a standard decomposition.
enum class PairVec : std::uint8_t { V00 = 0, V01 = 1, V10 = 2, V11 = 3 };

inline int pattern_code(PairVec v) { return static_cast<int>(v); }

// Linear index of the pair (i,j), 1 <= i < j <= m, iterating i outer.
inline int pair_index(int m, int i, int j) {
  return (i - 1) * m - (i * (i - 1)) / 2 + (j - i - 1);
}
inline int pair_count(int m) { return m * (m - 1) / 2; }
// Inverse of pair_index.
std::pair<int, int> pair_of_index(int m, int index);

int pattern_at(Column c, int rows, int i, int j);

struct PairCounts {
  int m = 0;
  // counts[pair_index][pattern code]
  std::vector<std::array<std::int32_t, 4>> counts;

  const std::array<std::int32_t, 4>& at(int i, int j) const {
    return counts[static_cast<size_t>(pair_index(m, i, j))];
  }
  std::int32_t c00(int i, int j) const { return at(i, j)[kPattern00]; }
  std::int32_t c01(int i, int j) const { return at(i, j)[kPattern01]; }
  std::int32_t c10(int i, int j) const { return at(i, j)[kPattern10]; }
  std::int32_t c11(int i, int j) const { return at(i, j)[kPattern11]; }
};

PairCounts pair_counts(const SMatrix& a);

// Does one pair's counts contain F(a,b,c,d) in either row order?
bool pair_meets_thresholds(const std::array<std::int32_t, 4>& counts, int a,
                           int b, int c, int d);

// First pair whose counts contain F(a,b,c,d), if any.
std::optional<std::pair<int, int>> violating_pair_2rowed(const PairCounts& pc,
                                                         int a, int b, int c,
                                                         int d);

bool avoids_2rowed(const PairCounts& pc, int a, int b, int c, int d);
bool avoids_2rowed(const SMatrix& matrix, int a, int b, int c, int d);

// Generic configuration containment F < A via ordered injective row maps.
// Guidance limits: F up to 4 rows, A up to 12 rows.
bool contains_generic(const SMatrix& f, const SMatrix& a);

}  // namespace forbcfg
