#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace forbcfg {

// Row/column operation counts applied to the triangular array T_r, whose
// (i,j) entry starts at r+2-i-j for i in [r], j in [r+1-i].
struct TriangleOps {
  int r = 0;
  std::vector<int> row_ops;  // a_1..a_r
  std::vector<int> col_ops;  // b_1..b_r

  static TriangleOps none(int r);
  int op_total() const;
};

// Standard block ops: a_i = max(0, r1+1-i), b_j = max(0, r2+1-j).
TriangleOps standard_ops(int r, int r1, int r2);

enum class EntryStatus : std::uint8_t { Fixed, Weak, Open };

struct StatusGrid {
  int r = 0;
  // value[i-1][j-1] = (r+2-i-j) - a_i - b_j, j <= r+1-i
  std::vector<std::vector<int>> value;
  std::vector<std::vector<EntryStatus>> status;
  std::int64_t fixed_count = 0;  // M
  std::int64_t weak_count = 0;   // W
  std::int64_t op_count = 0;     // N
  bool any_open = false;
};

StatusGrid status_grid(const TriangleOps& ops);

inline constexpr int kExhaustiveTriangleLimit = 5;
inline constexpr int kHeuristicTriangleLimit = 7;

struct TriangleSearchResult {
  std::int64_t value = 0;
  TriangleOps witness;
  std::uint64_t states = 0;
  bool exhaustive = true;
};

// Exact max of M - N over op vectors with per-coordinate cap r (r <= 5);
// r in {6,7} runs the same search under a node budget and is flagged
// heuristic.
TriangleSearchResult max_m_minus_n(int r, bool allow_heuristic = false);

// Exact min of N such that every entry is <= 1.
TriangleSearchResult min_ops_all_weak(int r, bool allow_heuristic = false);

struct InductionCheck {
  bool holds = true;
  std::optional<TriangleOps> counterexample;
  std::uint64_t states = 0;
};

// For every op vector with N = n_r - t, 0 <= t <= ceil(r/2), and no open
// entry: the weak count must be at least t (floor(r/2) + 1).
InductionCheck verify_induction(int r);

// Bijection between scarce pairs (i, m+1-j) and triangle coordinates (i, j).
std::pair<int, int> scarce_to_triangle(int m, int r, int i, int j);
std::pair<int, int> triangle_to_pair(int m, int r, int ti, int tj);

}  // namespace forbcfg
