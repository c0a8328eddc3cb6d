#pragma once

#include <string>
#include <vector>

#include "covernum/numbers.hpp"

namespace covernum {

struct LemmaCheckResult {
  std::string id;
  std::string range;
  bool holds_everywhere = false;
  std::string first_failure;        // empty when none
  std::string empirical_threshold;  // where the asymptotic statement starts holding
  std::string margin;               // exact rational, tightest relative slack seen
  unsigned long cases_checked = 0;
  std::vector<std::string> unknown_cases;  // undecided at the given precision
  std::vector<std::string> notes;
};

// sqrt(2 pi t) (t/e)^t < t! < e sqrt(t) (t/e)^t for 2 <= t <= t_max.
LemmaCheckResult check_stirling(unsigned t_max, unsigned bits);

// x! <= x^{x-1}; f(x,y) = y!^{x-1}/x!^{y-1} nondecreasing in y on
// 2 <= x <= y-2; f(x, x+2) increasing. All exact.
LemmaCheckResult check_factorial_ratio(unsigned x_max, unsigned y_max);

// d!^k k! <= (n/5e)^n (5n)^{5/2} e sqrt(n) for d >= 2, k >= 5, n = dk >= 26.
LemmaCheckResult check_wreath_bound(unsigned n_max, unsigned bits);

// g(n,r) = r!^{n/r}(n/r)! + r r! ((n/r)!)^r vs C ((n/3)!)^3 on 6 | n, plus the
// r = 3 constant-19 threshold and the (n/4)!^4/(n/3)!^3 <= n (3/4)^n auxiliary.
LemmaCheckResult check_g_bound(unsigned n_max);

// |S_{n/p} wr S_p| / |S_{n/m} wr S_m| >= 2^{sqrt(n)-3} over nontrivial m != p.
LemmaCheckResult check_stringer_ratio(const std::vector<unsigned>& n_list, unsigned bits);

// |P_p| = n!/((n/p)!^p p!) vs 3^n on odd composite n.
LemmaCheckResult check_pp_vs_3n(const std::vector<unsigned>& n_list);

// Odd integers <= n_max with at least three prime factors (with multiplicity).
std::vector<unsigned> default_stringer_list(unsigned n_max);
std::vector<unsigned> odd_composites(unsigned n_max);

}  // namespace covernum
