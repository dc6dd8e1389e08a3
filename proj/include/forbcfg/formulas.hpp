#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace forbcfg {

using Int = boost::multiprecision::cpp_int;

// Value of a closed form together with its hypothesis checklist.  The value
// is always computed; `valid` says whether every stated hypothesis holds for
// the given arguments.
struct FormulaResult {
  Int value;
  bool valid = true;
  std::vector<std::pair<std::string, bool>> hypotheses;
  bool assumed = false;  // some hypothesis was taken on caller trust

  void require(std::string name, bool holds) {
    valid = valid && holds;
    hypotheses.emplace_back(std::move(name), holds);
  }
  std::vector<std::string> failed() const;
};

Int binom(std::int64_t n, std::int64_t k);
Int pow2(std::int64_t e);  // e >= 0

// Number of divisors of n >= 1.
std::int64_t tau(std::int64_t n);

// Maximum columns of an m-rowed simple 0/1 matrix with no K_k.
Int sauer(int m, int k);

// 2^m + m 2^{m-1} + (p-1) C(m,2); valid iff 2^{m-2} >= p-1.
FormulaResult forb_pk2(int m, int p);

// Smallest r >= 0 with p-1 <= 2^r (so 2^{r-1} < p-1 <= 2^r); p >= 2.
int r_of_p(int p);

// C(ceil(r/2)+1, 2) + C(floor(r/2)+1, 2).
std::int64_t n_r(int r);

// Tabulated g_p for p <= 5.
std::optional<int> g_known(int p);

// (p-1) C(r+1,2) - (r-1) 2^r - 1.
Int g_upper(int p);

// floor((p-1) k C(r+1,2) / (k+1)) - r 2^r sum_{i<=k} tau(i); k >= 2.
Int g_lower(int p, int k);

// 2^m + m 2^{m-1} + (p-1)(C(m,2) - C(r+1,2)) + (r-1) 2^r + 1; for p = 1 the
// r-dependent terms vanish and the value is 2^m + m 2^{m-1}.
Int prelim_count(int m, int p);

// 2^r (r-b-c+1) + 2^{b+c-2} for b,c >= 1, b+c <= r+1.
Int foursigma_bound(int r, int b, int c);

// forb_pk2(m,p) - q n_r; valid under the stated (m, p, q) conditions.
FormulaResult thm_pk(int m, int p, int q);

// forb_pk2(m,p) - min(q0,q1) C(r1+1,2) - max(q0,q1) C(r2+1,2), r1+r2 = r.
FormulaResult prop_lower_value(int m, int p, int q0, int q1, int r1, int r2);

// The r1 in [0,r] minimizing q0 C(r1+1,2) + q1 C(r-r1+1,2); 1 <= q0 <= q1;
// ties broken toward smaller r1.
int optimize_r1(int q0, int q1, int r);

// forb_pk2(m,p) - q n_r + floor(r/2) d with d = q - (ceil(r/2)+1)(p-1-2^{r-1});
// valid iff d > 0 and m >= 2 n_r + 2.
FormulaResult notalways_value(int m, int p, int q);

// Both reduction hypotheses: 2^{m-2} >= (max{a,b,c,d}-1) m^2 and min{b,c} >= 1.
bool reduction_valid(int m, int a, int b, int c, int d);

// forb value for F(a,p,p,d) with max(a,d) < p <= 4, and for F(p-1,p,p,p-1)
// at any p >= 2, with the respective m-thresholds.
FormulaResult cor_small_p(int m, int p);

// Upper bound forb_pk2(m,p) - k for F with min{b,c} = p, max{a,d} <= p-k,
// assuming g_p >= k; maxbc feeds the reduction hypothesis.
FormulaResult minp_bound(int m, int p, int k, int maxbc);

}  // namespace forbcfg
