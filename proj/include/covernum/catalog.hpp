#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "covernum/numbers.hpp"
#include "covernum/perm.hpp"

namespace covernum {

// One verified primitive-group table entry (a subgroup of A_n).
struct PrimitiveEntry {
  std::string label;
  BigInt order;
  std::vector<std::string> generator_strings;  // cycle notation
  BigInt normalizer_order = 0;                 // |N_{S_n}(M)|, 0 = unknown
  bool maximal = true;
  // Optional duality twin: this entry is claimed S_n-conjugate to `sn_class_of`
  // via the witness permutation; such entries are verification jobs, not classes.
  std::string sn_class_of;
  std::string sn_conjugacy_witness;
};

// Primitive groups per degree, loaded from the embedded table and/or files.
class PrimitiveTable {
 public:
  static PrimitiveTable embedded();                       // degrees 5..21
  static PrimitiveTable from_file(const std::string& path);
  void merge(const PrimitiveTable& other);                // other wins per degree

  bool has_degree(unsigned n) const;
  // Class entries (twins excluded). Throws table_missing if degree absent.
  const std::vector<PrimitiveEntry>& entries(unsigned n) const;
  const std::vector<PrimitiveEntry>& twins(unsigned n) const;
  std::vector<unsigned> degrees() const;
  std::string version() const { return version_; }

  // Rebuilds each entry's group and checks order and evenness of generators;
  // throws on any mismatch. Cheap for every degree in scope.
  void verify_degree(unsigned n) const;

  static PrimitiveTable make(std::string version,
                             std::map<unsigned, std::vector<PrimitiveEntry>> by_degree,
                             std::map<unsigned, std::vector<PrimitiveEntry>> twins);

 private:
  std::string version_;
  std::map<unsigned, std::vector<PrimitiveEntry>> by_degree_;
  std::map<unsigned, std::vector<PrimitiveEntry>> twins_;
};

enum class SubgroupKind { Intransitive, Imprimitive, Primitive };

// Symbolic S_n-class of subgroups of A_n.
struct SubgroupDescriptor {
  SubgroupKind kind;
  unsigned degree = 0;
  unsigned a = 0;                          // Intransitive: stabilized set size
  unsigned block_size = 0, block_count = 0;  // Imprimitive
  PrimitiveEntry primitive;                // Primitive
  bool maximal = true;

  std::string label() const;
};

struct ClassStats {
  BigInt class_size;    // number of S_n-conjugates (= A_n-conjugates for the
                        // intransitive/imprimitive kinds in scope)
  BigInt member_order;  // order of one member, as a subgroup of A_n
};

// All S_n-classes of (candidate) maximal subgroups of A_n. Intransitive
// a in 1..ceil(n/2)-1, imprimitive per factorization, primitive from table.
// Throws table_missing error if the table lacks the degree.
std::vector<SubgroupDescriptor> enumerate_maximal_classes(unsigned n, const PrimitiveTable& table);

ClassStats class_stats(const SubgroupDescriptor& d);

// |N_{S_n}(M)| for a class member (intransitive: a!(n-a)!, imprimitive:
// d!^m m!, primitive: from table data).
BigInt normalizer_order(const SubgroupDescriptor& d);

// Number of a-subsets of {1..n} fixed setwise by a permutation of type t
// (= number of cycle subsets with lengths summing to a).
BigInt intransitive_contains_type(unsigned a, const CycleType& t);

// Lemma-style criterion: does an element of S_m with 3-part type t stabilize
// some partition of {1..m} into 3 equal blocks?
bool stabilizes_three_blocks(const CycleType& t, unsigned m);

// (n/m)!^m * m! / n, exactly.
BigInt count_ncycles_in_imprimitive(unsigned n, unsigned m);

// Number of members of the S_n-class of (S_d wr S_m) cap A_n containing a
// fixed element of type t. Supports types with at most 3 parts.
BigInt imprimitive_contains_count(unsigned block_size, unsigned block_count, const CycleType& t);

// Concrete generators of one member, for brute-force cross-validation. The
// intransitive member stabilizes {1..a}; the imprimitive member's blocks are
// consecutive runs of size d.
std::vector<Permutation> concrete_generators(const SubgroupDescriptor& d);

// Number of elements of S_n with the given cycle type: n!/prod(a_i^{k_i} k_i!).
BigInt sn_class_size(const CycleType& t);

// An S_n-class of even elements splits into two A_n-classes iff all parts are
// odd and pairwise distinct.
bool an_class_splits(const CycleType& t);

}  // namespace covernum
