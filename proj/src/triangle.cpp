#include "forbcfg/triangle.hpp"

#include <algorithm>
#include <numeric>

#include "forbcfg/errors.hpp"
#include "forbcfg/formulas.hpp"

namespace forbcfg {

TriangleOps TriangleOps::none(int r) {
  TriangleOps ops;
  ops.r = r;
  ops.row_ops.assign(static_cast<size_t>(r), 0);
  ops.col_ops.assign(static_cast<size_t>(r), 0);
  return ops;
}

int TriangleOps::op_total() const {
  return std::accumulate(row_ops.begin(), row_ops.end(), 0) +
         std::accumulate(col_ops.begin(), col_ops.end(), 0);
}

TriangleOps standard_ops(int r, int r1, int r2) {
  if (r1 < 0 || r2 < 0 || r1 > r || r2 > r)
    throw DomainError("standard_ops needs 0 <= r1, r2 <= r");
  TriangleOps ops = TriangleOps::none(r);
  for (int i = 1; i <= r; ++i) {
    ops.row_ops[static_cast<size_t>(i - 1)] = std::max(0, r1 + 1 - i);
    ops.col_ops[static_cast<size_t>(i - 1)] = std::max(0, r2 + 1 - i);
  }
  return ops;
}

StatusGrid status_grid(const TriangleOps& ops) {
  if (ops.r < 1) throw DomainError("triangle size must be >= 1");
  if (static_cast<int>(ops.row_ops.size()) != ops.r ||
      static_cast<int>(ops.col_ops.size()) != ops.r)
    throw DomainError("op vectors must have length r");
  StatusGrid g;
  g.r = ops.r;
  g.op_count = ops.op_total();
  g.value.resize(static_cast<size_t>(ops.r));
  g.status.resize(static_cast<size_t>(ops.r));
  for (int i = 1; i <= ops.r; ++i) {
    int width = ops.r + 1 - i;
    auto& vrow = g.value[static_cast<size_t>(i - 1)];
    auto& srow = g.status[static_cast<size_t>(i - 1)];
    vrow.resize(static_cast<size_t>(width));
    srow.resize(static_cast<size_t>(width));
    for (int j = 1; j <= width; ++j) {
      int v = (ops.r + 2 - i - j) - ops.row_ops[static_cast<size_t>(i - 1)] -
              ops.col_ops[static_cast<size_t>(j - 1)];
      vrow[static_cast<size_t>(j - 1)] = v;
      EntryStatus st = v <= 0 ? EntryStatus::Fixed
                              : (v == 1 ? EntryStatus::Weak : EntryStatus::Open);
      srow[static_cast<size_t>(j - 1)] = st;
      if (st == EntryStatus::Fixed) ++g.fixed_count;
      if (st == EntryStatus::Weak) ++g.weak_count;
      if (st == EntryStatus::Open) g.any_open = true;
    }
  }
  return g;
}

namespace {

constexpr std::uint64_t kHeuristicStateBudget = 200'000'000;

void check_size(int r, bool allow_heuristic, bool& exhaustive) {
  if (r < 1) throw DomainError("triangle size must be >= 1");
  if (r <= kExhaustiveTriangleLimit) {
    exhaustive = true;
    return;
  }
  if (!allow_heuristic || r > kHeuristicTriangleLimit)
    throw SizeError("exhaustive triangle search is limited to r <= " +
                    std::to_string(kExhaustiveTriangleLimit));
  exhaustive = false;
}

// Shared state for the max(M - N) search.  Row ops are enumerated first in
// lexicographic order; columns are then filled one at a time, so pruning can
// compare the optimistic remaining fixed count against the incumbent.
struct MaxSearch {
  int r;
  std::uint64_t budget;
  std::uint64_t states = 0;
  std::int64_t best = -1;
  std::vector<int> a, b;
  std::vector<int> best_a, best_b;
  std::vector<int> entries_in_col;  // column j has r+1-j entries
  bool truncated = false;

  void run() {
    recurse_rows(1, 0);
  }

  void recurse_rows(int i, int a_sum) {
    if (truncated) return;
    if (i > r) {
      recurse_cols(1, 0, a_sum);
      return;
    }
    for (int v = 0; v <= r; ++v) {
      a[static_cast<size_t>(i - 1)] = v;
      recurse_rows(i + 1, a_sum + v);
    }
    a[static_cast<size_t>(i - 1)] = 0;
  }

  void recurse_cols(int j, std::int64_t m_so_far, std::int64_t n_so_far) {
    if (++states > budget) {
      truncated = true;
      return;
    }
    if (j > r) {
      if (m_so_far - n_so_far > best) {
        best = m_so_far - n_so_far;
        best_a = a;
        best_b = b;
      }
      return;
    }
    // Entries in columns j..r can at best all become fixed at no further
    // op cost beyond what is already counted.
    std::int64_t optimistic = m_so_far;
    for (int t = j; t <= r; ++t) optimistic += entries_in_col[static_cast<size_t>(t - 1)];
    if (optimistic - n_so_far <= best) return;
    for (int v = 0; v <= r; ++v) {
      b[static_cast<size_t>(j - 1)] = v;
      std::int64_t fixed_in_col = 0;
      for (int i = 1; i <= r + 1 - j; ++i)
        if (a[static_cast<size_t>(i - 1)] + v >= r + 2 - i - j) ++fixed_in_col;
      recurse_cols(j + 1, m_so_far + fixed_in_col, n_so_far + v);
      if (truncated) return;
    }
    b[static_cast<size_t>(j - 1)] = 0;
  }
};

}  // namespace

TriangleSearchResult max_m_minus_n(int r, bool allow_heuristic) {
  TriangleSearchResult res;
  check_size(r, allow_heuristic, res.exhaustive);
  MaxSearch search;
  search.r = r;
  search.budget = res.exhaustive ? ~std::uint64_t{0} : kHeuristicStateBudget;
  search.a.assign(static_cast<size_t>(r), 0);
  search.b.assign(static_cast<size_t>(r), 0);
  search.entries_in_col.resize(static_cast<size_t>(r));
  for (int j = 1; j <= r; ++j)
    search.entries_in_col[static_cast<size_t>(j - 1)] = r + 1 - j;
  search.run();
  res.value = search.best;
  res.witness.r = r;
  res.witness.row_ops = search.best_a;
  res.witness.col_ops = search.best_b;
  res.states = search.states;
  if (search.truncated) res.exhaustive = false;
  return res;
}

TriangleSearchResult min_ops_all_weak(int r, bool allow_heuristic) {
  TriangleSearchResult res;
  check_size(r, allow_heuristic, res.exhaustive);
  std::uint64_t budget =
      res.exhaustive ? ~std::uint64_t{0} : kHeuristicStateBudget;
  std::uint64_t states = 0;
  std::int64_t best = -1;
  std::vector<int> a(static_cast<size_t>(r), 0);
  std::vector<int> best_a, best_b;
  bool truncated = false;

  // For a fixed row vector the cheapest feasible column ops are forced:
  // b_j = max_i max(0, r+1-i-j - a_i).  Enumerating rows lexicographically
  // therefore visits every candidate once and keeps the first (smallest)
  // witness per value.
  auto complete_cols = [&](const std::vector<int>& rows, std::int64_t a_sum) {
    std::int64_t total = a_sum;
    std::vector<int> b(static_cast<size_t>(r), 0);
    for (int j = 1; j <= r; ++j) {
      int need = 0;
      for (int i = 1; i <= r + 1 - j; ++i)
        need = std::max(need, r + 1 - i - j - rows[static_cast<size_t>(i - 1)]);
      b[static_cast<size_t>(j - 1)] = need;
      total += need;
      if (best >= 0 && total >= best) return;  // already no better
    }
    if (best < 0 || total < best) {
      best = total;
      best_a = rows;
      best_b = b;
    }
  };

  std::function<void(int, int)> recurse = [&](int i, int a_sum) {
    if (truncated) return;
    if (++states > budget) {
      truncated = true;
      return;
    }
    if (best >= 0 && a_sum >= best) return;
    if (i > r) {
      complete_cols(a, a_sum);
      return;
    }
    for (int v = 0; v <= r; ++v) {
      a[static_cast<size_t>(i - 1)] = v;
      recurse(i + 1, a_sum + v);
    }
    a[static_cast<size_t>(i - 1)] = 0;
  };
  recurse(1, 0);

  res.value = best;
  res.witness.r = r;
  res.witness.row_ops = best_a;
  res.witness.col_ops = best_b;
  res.states = states;
  if (truncated) res.exhaustive = false;
  return res;
}

InductionCheck verify_induction(int r) {
  if (r < 1) throw DomainError("triangle size must be >= 1");
  if (r > kExhaustiveTriangleLimit)
    throw SizeError("verify_induction is exhaustive only for r <= " +
                    std::to_string(kExhaustiveTriangleLimit));
  InductionCheck check;
  std::int64_t nr = n_r(r);
  int t_max = (r + 1) / 2;
  std::int64_t weak_unit = r / 2 + 1;

  TriangleOps ops = TriangleOps::none(r);
  // Enumerate all op vectors with N <= n_r; vectors above that total are
  // outside the lemma's range.
  std::function<bool(int, int)> recurse = [&](int pos, int used) -> bool {
    ++check.states;
    if (pos == 2 * r) {
      std::int64_t t = nr - used;
      if (t < 0 || t > t_max) return true;
      StatusGrid g = status_grid(ops);
      if (g.any_open) return true;
      if (g.weak_count < t * weak_unit) {
        check.holds = false;
        check.counterexample = ops;
        return false;
      }
      return true;
    }
    int* slot = pos < r ? &ops.row_ops[static_cast<size_t>(pos)]
                        : &ops.col_ops[static_cast<size_t>(pos - r)];
    for (int v = 0; v + used <= nr && v <= r; ++v) {
      *slot = v;
      if (!recurse(pos + 1, used + v)) return false;
    }
    *slot = 0;
    return true;
  };
  recurse(0, 0);
  return check;
}

std::pair<int, int> scarce_to_triangle(int m, int r, int i, int j) {
  if (i < 1 || j <= i || j > m) throw DomainError("need 1 <= i < j <= m");
  if (i - 1 + m - j >= r)
    throw DomainError("pair (" + std::to_string(i) + "," + std::to_string(j) +
                      ") is abundant");
  return {i, m + 1 - j};
}

std::pair<int, int> triangle_to_pair(int m, int r, int ti, int tj) {
  if (ti < 1 || ti > r || tj < 1 || tj > r + 1 - ti)
    throw DomainError("triangle coordinate out of range");
  return {ti, m + 1 - tj};
}

}  // namespace forbcfg
