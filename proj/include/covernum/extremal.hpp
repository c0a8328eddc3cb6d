#pragma once

#include <string>
#include <vector>

#include "covernum/numbers.hpp"
#include "covernum/perm.hpp"

namespace covernum {

unsigned smallest_prime_divisor(unsigned n);

struct DegreeBreakdown {
  unsigned long imprimitive = 0, primitive = 0, other = 0;
};

struct HaxellResult {
  unsigned n = 0, p = 0;
  bool exact = true;
  unsigned long candidates = 0;  // number of n-cycles
  unsigned long k = 0;           // max vertex degree (exact) or point estimate
  std::vector<unsigned long> per_base;
  BigInt cell_size;
  bool hypothesis_met = false;  // cell_size >= 2k (uses CI upper bound when sampling)
  DegreeBreakdown breakdown;
  // sampling mode:
  unsigned long samples = 0, hits = 0;
  double k_lo = 0.0, k_hi = 0.0;  // Wilson 95% interval scaled to candidates
};

// Exact vertex degree of the non-generation graph on n-cycles, recomputed
// from `num_bases` conjugate base vertices. Feasible for n = 9.
HaxellResult haxell_exact(unsigned n, unsigned num_bases, unsigned threads);

// Seeded uniform sampling estimate (n = 15 scale); flagged as estimate.
HaxellResult haxell_sample(unsigned n, unsigned long samples, unsigned long seed,
                           unsigned threads);

struct DivisorTerm {
  unsigned m;
  BigInt cell;  // |S_{n/m} wr S_m| / n
};

struct DegreeBoundLedger {
  unsigned n = 0, p = 0;
  std::vector<DivisorTerm> imprimitive_terms;  // divisors m != p
  BigInt imprimitive_total;
  BigInt primitive_term;  // n * ceil(log2 n) * 2^n
  BigInt total;
  BigInt cell_size;
  Rational cell_over_bound;
};

DegreeBoundLedger degree_bound_ledger(unsigned n);

struct EvenCellReport {
  unsigned n = 0;
  BigInt s_size_formula;      // 2^{n-2} - n
  BigInt s_size_enumerated;   // sum of binom(n,a), a odd, 1 < a < n/2
  struct SizeClass {
    unsigned a;
    BigInt subsets;    // binom(n, a)
    BigInt cell_size;  // (a-1)! (n-a-1)!
  };
  std::vector<SizeClass> cells;
  BigInt total_vertices;
};

EvenCellReport even_case_cells(unsigned n);

struct EvenDegreeBound {
  unsigned n = 0, a = 0;
  std::vector<unsigned> divisors;  // r | gcd(a, n), r >= 2
  BigInt bound;
  BigInt cell_size;  // (a-1)!(n-a-1)!
  Rational bound_over_cell;
};

EvenDegreeBound even_degree_bound(unsigned n, unsigned a);

struct TransversalResult {
  unsigned n = 0;
  bool odd_case = true;
  bool success = false;
  unsigned long cells = 0;
  unsigned long restarts = 0;
  unsigned long pair_checks = 0;
  std::vector<std::string> cell_labels;  // aligned with chosen
  std::vector<Permutation> chosen;
  std::string blocking_cell;
  bool certificate_verified = false;
};

// One vertex per cell, pairwise generating; random order with restarts up to
// `budget`. On success the certificate is re-verified from scratch.
TransversalResult greedy_transversal(unsigned n, unsigned long seed, unsigned budget);

struct BoundChainResult {
  unsigned n = 0, p = 0;
  BigInt lower;    // |P_p|
  BigInt upper;    // lower + sum_{i=1}^{floor(n/3)} binom(n,i)
  BigInt three_n;  // 3^n
  bool pp_exceeds_3n = false;
  Rational upper_over_lower;
};

BoundChainResult bound_chain(unsigned n);

}  // namespace covernum
