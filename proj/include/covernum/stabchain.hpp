#pragma once

#include <vector>

#include "covernum/numbers.hpp"
#include "covernum/perm.hpp"

namespace covernum {

// Base and strong generating set via deterministic Schreier-Sims.
// Immutable after build; membership queries are const and thread-safe.
class StabilizerChain {
 public:
  // Empty generator list builds the trivial group. Throws on degree mismatch.
  static StabilizerChain build(const std::vector<Permutation>& generators, unsigned degree);
  static StabilizerChain build(const std::vector<Permutation>& generators);

  unsigned degree() const { return degree_; }
  BigInt order() const;
  bool contains(const Permutation& p) const;
  std::vector<unsigned> base() const;
  const std::vector<Permutation>& strong_generators() const { return sgs_; }

  // Orbit of the whole group on {0..n-1} containing `point`.
  std::vector<unsigned> orbit_of(unsigned point) const;
  bool is_transitive() const;

 private:
  struct Level {
    unsigned base_point = 0;
    std::vector<Permutation> gens;  // generators first placed at this level
    std::vector<int> where;         // point -> transversal slot or -1
    std::vector<unsigned> orbit;    // insertion order
    std::vector<Permutation> transversal;  // rep u with u(base_point) = orbit[i]
  };

  // Sifts g through levels [from..); returns residue and the level where it stopped.
  std::pair<Permutation, std::size_t> strip(Permutation g, std::size_t from) const;
  void add_generator(const Permutation& g, std::size_t level);
  // Orbit/transversal of level i under the generators of levels >= i.
  void recompute_orbit(std::size_t i);
  // Checks every Schreier generator of level i; on a nontrivial residue adds
  // it (at `added_at`) and returns false.
  bool verify_level(std::size_t i, std::size_t& added_at);

  unsigned degree_ = 0;
  std::vector<Level> levels_;
  std::vector<Permutation> sgs_;
};

// True iff <x, y> is the full alternating group of their common degree.
// Throws on degree mismatch or odd input.
bool generates_alternating(const Permutation& x, const Permutation& y);

// Order of the group generated by `gens` (degree n), as a big integer.
BigInt group_order(const std::vector<Permutation>& gens, unsigned degree);

// Smallest nontrivial block system containing {seed0, seed1}, as block id per
// point, or empty if the pair forces the trivial (single-block) system.
// `gens` must generate a transitive group.
std::vector<unsigned> minimal_block_system(const std::vector<Permutation>& gens,
                                           unsigned degree, unsigned seed0, unsigned seed1);

// True iff the (transitive) group generated by `gens` is primitive.
bool is_primitive(const std::vector<Permutation>& gens, unsigned degree);

}  // namespace covernum
