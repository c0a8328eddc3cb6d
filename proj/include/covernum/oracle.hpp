#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "covernum/catalog.hpp"
#include "covernum/numbers.hpp"
#include "covernum/perm.hpp"

namespace covernum {

// A small group materialized with a multiplication table over element ids.
struct GroupTable {
  unsigned degree = 0;
  std::vector<Permutation> elements;  // sorted; identity at index 0
  std::vector<std::vector<uint16_t>> mult;
  std::vector<uint16_t> inverse;
  std::vector<uint16_t> generator_ids;
  std::unordered_map<Permutation, uint16_t, PermHash> index;

  static GroupTable closure(const std::vector<Permutation>& gens, std::size_t max_order);
  std::size_t order() const { return elements.size(); }
  uint16_t id_of(const Permutation& p) const { return index.at(p); }
  unsigned element_order(uint16_t e) const;
  bool is_cyclic() const;
};

struct SubgroupLattice {
  std::vector<std::vector<uint16_t>> subgroups;  // sorted element-id lists
  std::vector<bool> maximal;
  std::vector<int> conj_class;                  // subgroup id -> class id
  std::vector<std::vector<int>> classes;        // class id -> subgroup ids
};

// Complete subgroup lattice by closing cyclic subgroups under pairwise join.
// Throws if |G| exceeds the stated budget (360).
SubgroupLattice all_subgroups(const GroupTable& g);

std::vector<std::vector<uint16_t>> maximal_subgroup_sets(const GroupTable& g,
                                                         const SubgroupLattice& lat);

struct SigmaResult {
  bool defined = true;  // false for cyclic groups (no covering exists)
  bool exact = true;    // false when the node budget ran out
  unsigned long value = 0;
  std::vector<std::vector<uint16_t>> witness;  // chosen subgroup element lists
  unsigned long nodes = 0;
};

// Exact minimal covering via branch and bound over the given subgroup sets
// (soundly restricted to maximal subgroups by the caller).
SigmaResult sigma_exact(const GroupTable& g, const std::vector<std::vector<uint16_t>>& sets,
                        unsigned long node_budget);

struct OmegaResult {
  bool exact = true;
  unsigned long value = 0;
  std::vector<uint16_t> witness;  // pairwise generating element ids
  unsigned long nodes = 0;
  bool witness_verified = false;
};

// Exact max pairwise generating set: max clique on cyclic-subgroup classes
// (generation depends only on the pair of cyclic subgroups).
OmegaResult omega_exact(const GroupTable& g, unsigned long node_budget);

struct CrosscheckReport {
  unsigned long checks = 0;
  std::vector<std::string> mismatches;
  BigInt max_conjugate_count = 0;  // observed max of the n^k-bounded quantity
  bool ok() const { return mismatches.empty(); }
};

// Brute-force validation of every catalog count at degree n (5..8): class
// sizes, member orders, containment counts, the class double-count identity,
// n-cycle counts in imprimitive subgroups, and the n^k conjugate bound.
CrosscheckReport crosscheck_counts(unsigned n, const PrimitiveTable& table);

// Element sets of every maximal subgroup of g (an alternating group of degree
// <= 16), materialized from the catalog classes by conjugation. Backs the
// set-cover oracle when the order budget rules out the full lattice.
std::vector<std::vector<uint16_t>> maximal_sets_from_catalog(const GroupTable& g,
                                                             const PrimitiveTable& table);

// Convenience constructors for the supported oracle groups.
std::vector<Permutation> alternating_gens(unsigned n);
std::vector<Permutation> symmetric_gens(unsigned n);

}  // namespace covernum
