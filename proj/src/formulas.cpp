#include "forbcfg/formulas.hpp"

#include <algorithm>

#include "forbcfg/errors.hpp"

namespace forbcfg {

std::vector<std::string> FormulaResult::failed() const {
  std::vector<std::string> out;
  for (const auto& [name, holds] : hypotheses)
    if (!holds) out.push_back(name);
  return out;
}

Int binom(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Int result = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

Int pow2(std::int64_t e) {
  if (e < 0) throw DomainError("negative exponent");
  return Int(1) << static_cast<unsigned>(e);
}

std::int64_t tau(std::int64_t n) {
  if (n < 1) throw DomainError("tau needs n >= 1");
  std::int64_t count = 0;
  for (std::int64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    count += (d * d == n) ? 1 : 2;
  }
  return count;
}

Int sauer(int m, int k) {
  if (k < 1 || k > m + 1) throw DomainError("sauer needs 1 <= k <= m+1");
  Int total = 0;
  for (int i = 0; i <= k - 1; ++i) total += binom(m, i);
  return total;
}

FormulaResult forb_pk2(int m, int p) {
  if (m < 2) throw DomainError("forb_pk2 needs m >= 2");
  if (p < 1) throw DomainError("forb_pk2 needs p >= 1");
  FormulaResult res;
  res.value = pow2(m) + m * pow2(m - 1) + (p - 1) * binom(m, 2);
  res.require("2^(m-2) >= p-1", pow2(m - 2) >= p - 1);
  return res;
}

int r_of_p(int p) {
  if (p < 2) throw DomainError("r is defined for p >= 2");
  int r = 0;
  while ((std::int64_t{1} << r) < p - 1) ++r;
  return r;
}

std::int64_t n_r(int r) {
  if (r < 0) throw DomainError("n_r needs r >= 0");
  auto choose2 = [](std::int64_t n) { return n * (n - 1) / 2; };
  return choose2((r + 1) / 2 + 1) + choose2(r / 2 + 1);
}

std::optional<int> g_known(int p) {
  if (p < 1) throw DomainError("g_known needs p >= 1");
  switch (p) {
    case 1:
    case 2:
      return 0;
    case 3:
      return 1;
    case 4:
      return 2;
    case 5:
      return 5;
    default:
      return std::nullopt;
  }
}

Int g_upper(int p) {
  int r = r_of_p(p);
  return (p - 1) * binom(r + 1, 2) - (r - 1) * pow2(r) - 1;
}

Int g_lower(int p, int k) {
  if (k < 2) throw DomainError("g_lower needs k >= 2");
  int r = r_of_p(p);
  Int first = Int(p - 1) * k * binom(r + 1, 2) / (k + 1);  // floor
  Int tau_sum = 0;
  for (int i = 1; i <= k; ++i) tau_sum += tau(i);
  return first - r * pow2(r) * tau_sum;
}

Int prelim_count(int m, int p) {
  if (m < 2) throw DomainError("prelim_count needs m >= 2");
  if (p < 1) throw DomainError("prelim_count needs p >= 1");
  Int base = pow2(m) + m * pow2(m - 1);
  if (p == 1) return base;
  int r = r_of_p(p);
  return base + (p - 1) * (binom(m, 2) - binom(r + 1, 2)) +
         (r - 1) * pow2(r) + 1;
}

Int foursigma_bound(int r, int b, int c) {
  if (b < 1 || c < 1 || b + c > r + 1)
    throw DomainError("foursigma_bound needs b,c >= 1 and b+c <= r+1");
  return pow2(r) * (r - b - c + 1) + pow2(b + c - 2);
}

FormulaResult thm_pk(int m, int p, int q) {
  if (q < 0 || q > p - 1) throw DomainError("thm_pk needs 0 <= q <= p-1");
  int r = r_of_p(p);
  std::int64_t nr = n_r(r);
  FormulaResult res;
  res.value = forb_pk2(m, p).value - Int(q) * nr;
  bool m_ok = m >= 2 * nr + 2;
  // Comparisons against 2^{r-1} and 2^{r-3} are scaled to stay integral at
  // small r.
  Int two_r = pow2(r);
  bool cond1 = Int(2) * p >= two_r + 4 * q + 2;          // p >= 2^{r-1}+2q+1
  bool cond2a = Int(2) * p <= two_r + 4 * q;             // p <= 2^{r-1}+2q
  bool cond2b = Int(8) * q * nr <= two_r;                // q n_r <= 2^{r-3}
  bool cond2c = Int(r / 2 + 1) * (2 * (p - 1) - two_r) >= 4 * q;
  bool branch = cond1 || (cond2a && cond2b && cond2c);
  res.hypotheses.emplace_back("m >= 2 n_r + 2", m_ok);
  res.hypotheses.emplace_back("p >= 2^(r-1) + 2q + 1", cond1);
  res.hypotheses.emplace_back(
      "p <= 2^(r-1)+2q and q n_r <= 2^(r-3) and (floor(r/2)+1)(p-1-2^(r-1))/2 >= q",
      cond2a && cond2b && cond2c);
  res.valid = m_ok && branch;
  return res;
}

FormulaResult prop_lower_value(int m, int p, int q0, int q1, int r1, int r2) {
  if (q0 < 0 || q0 > p - 1 || q1 < 0 || q1 > p - 1)
    throw DomainError("prop_lower_value needs 0 <= q0,q1 <= p-1");
  int r = r_of_p(p);
  if (r1 < 0 || r2 < 0 || r1 + r2 != r)
    throw DomainError("prop_lower_value needs r1+r2 = r = " +
                      std::to_string(r));
  FormulaResult res;
  res.value = forb_pk2(m, p).value - std::min(q0, q1) * binom(r1 + 1, 2) -
              std::max(q0, q1) * binom(r2 + 1, 2);
  res.require("m >= 2 C(r1+1,2) + 2 C(r2+1,2) + 2",
              Int(m) >= 2 * binom(r1 + 1, 2) + 2 * binom(r2 + 1, 2) + 2);
  return res;
}

int optimize_r1(int q0, int q1, int r) {
  if (q0 < 1 || q1 < q0) throw DomainError("optimize_r1 needs 1 <= q0 <= q1");
  if (r < 0) throw DomainError("optimize_r1 needs r >= 0");
  auto cost = [&](int r1) {
    return Int(q0) * binom(r1 + 1, 2) + Int(q1) * binom(r - r1 + 1, 2);
  };
  int best = 0;
  Int best_cost = cost(0);
  for (int r1 = 1; r1 <= r; ++r1) {
    Int c = cost(r1);
    if (c < best_cost) {
      best_cost = c;
      best = r1;
    }
  }
  return best;
}

FormulaResult notalways_value(int m, int p, int q) {
  if (q < 0 || q > p - 1)
    throw DomainError("notalways_value needs 0 <= q <= p-1");
  int r = r_of_p(p);
  std::int64_t nr = n_r(r);
  // 2d = 2q - (ceil(r/2)+1)(2(p-1) - 2^r); exact also at r = 0.
  Int two_d = Int(2) * q -
              Int((r + 1) / 2 + 1) * (Int(2) * (p - 1) - pow2(r));
  Int floor_half_r_times_d = Int(r / 2) * two_d / 2;  // exact: 2d even if r>0
  FormulaResult res;
  res.value = forb_pk2(m, p).value - Int(q) * nr + floor_half_r_times_d;
  res.require("d > 0", two_d > 0);
  res.require("m >= 2 n_r + 2", m >= 2 * nr + 2);
  return res;
}

bool reduction_valid(int m, int a, int b, int c, int d) {
  if (m < 1) return false;
  int p = std::min(b, c);
  if (p < 1) return false;
  int mx = std::max(std::max(a, b), std::max(c, d));
  // 2^{m-2} >= (mx-1) m^2, scaled by 4.
  return pow2(m) >= Int(4) * (mx - 1) * m * m;
}

FormulaResult cor_small_p(int m, int p) {
  if (p < 2) throw DomainError("cor_small_p needs p >= 2");
  FormulaResult res;
  Int pk2 = forb_pk2(m, p).value;
  res.require("2^(m-2) >= p-1", pow2(m - 2) >= p - 1);
  if (p <= 4) {
    int gp = *g_known(p);
    res.value = pk2 - gp;
    int m_min = p == 2 ? 2 : (p == 3 ? 4 : 6);
    res.require("m >= " + std::to_string(m_min), m >= m_min);
  } else {
    int r = r_of_p(p);
    std::int64_t nr = n_r(r);
    res.value = pk2 - nr;
    res.require("m >= 2 n_r + 2", m >= 2 * nr + 2);
  }
  return res;
}

FormulaResult minp_bound(int m, int p, int k, int maxbc) {
  if (p < 3) throw DomainError("minp_bound needs p >= 3");
  if (k < 1 || k > p) throw DomainError("minp_bound needs 1 <= k <= p");
  if (maxbc < p) throw DomainError("minp_bound needs maxbc >= p");
  FormulaResult res;
  res.value = forb_pk2(m, p).value - k;
  int r = r_of_p(p);
  res.require("m >= 2r + 2", m >= 2 * r + 2);
  res.require("2^(m-2) >= (maxbc-1) m^2",
              pow2(m) >= Int(4) * (maxbc - 1) * m * m);
  if (auto gp = g_known(p)) {
    res.require("k <= g_p", k <= *gp);
  } else {
    // g_p is not tabulated for p >= 6; the bound stands on the caller's
    // assertion that g_p >= k.
    res.hypotheses.emplace_back("g_p >= k (assumed)", true);
    res.assumed = true;
  }
  return res;
}

}  // namespace forbcfg
