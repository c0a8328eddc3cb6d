#pragma once

#include <map>
#include <string>
#include <vector>

#include "covernum/catalog.hpp"
#include "covernum/numbers.hpp"
#include "covernum/perm.hpp"

namespace covernum {

// One Pi class: an S_n-class of even elements indexed by -1 (n-cycles) or by
// a in 1..q-2 (three-cycle types with smallest part a).
struct PiClass {
  int index = 0;
  CycleType type;
  BigInt sn_class_size;
  bool splits_in_an = false;
};

struct PiAndM {
  unsigned n = 0, q = 0;
  std::vector<PiClass> pi;                    // order: -1, 1, 2, ..., q-2
  std::vector<SubgroupDescriptor> m_classes;  // imprimitive(q,3), then intransitive 1..q-2
};

// Requires n ≡ 3 (mod 18), n >= 21.
PiAndM build_pi_and_M(unsigned n);

// m_j(i): members of the class `j` containing a fixed element of type `t`.
BigInt members_containing(const SubgroupDescriptor& j, const CycleType& t);

struct ConditionReport {
  bool covering_ok = false;         // (1) every even cycle type is covered by M
  bool conjugation_closed = false;  // (2) structural: whole S_n-classes
  bool pi_covered = false;          // (3) Pi inside the union of M
  bool uniqueness_ok = false;       // (4) each element of Pi in exactly one member
  bool classes_meet_pi = false;     // (5) every class of M meets Pi
  unsigned long types_checked = 0;
  std::vector<std::string> failures;
  bool all_ok() const {
    return covering_ok && conjugation_closed && pi_covered && uniqueness_ok && classes_meet_pi;
  }
};

ConditionReport check_conditions(unsigned n);

struct CountMCapPi {
  Rational value;
  bool is_bound = false;  // true for primitive rows (m_j(i) <= n^k estimate)
};

// |M_j ∩ Π_i|: exact via the class double count for non-primitive classes,
// an upper bound for primitive ones.
CountMCapPi count_M_cap_Pi(const SubgroupDescriptor& j, const PiClass& pi, unsigned n);

struct DMLedgerRow {
  std::string class_label;
  SubgroupKind kind = SubgroupKind::Intransitive;
  std::map<int, BigInt> m_vector;  // i -> m_j(i) (bounds for primitive rows)
  bool m_is_bound = false;
  BigInt order_bound;
  std::string order_provenance;  // exact | table | primitive-2^n-bound | wreath-bound
  Rational d_value;
  bool d_is_upper_bound = false;
  std::string verdict;  // strictly-below-1 | equal-1 | fails
};

struct LedgerOptions {
  bool exact_intransitive = false;  // n = 21 is exact regardless
};

// One row per S_n-class outside M, plus a catch-all primitive row that does
// not depend on the completeness of the table.
std::vector<DMLedgerRow> dm_ledger(unsigned n, const PrimitiveTable& table,
                                   const LedgerOptions& opt = {});

struct SigmaBreakdown {
  BigInt intransitive_sum;
  BigInt imprimitive_class_size;
  BigInt total;
};

// The covering-number formula for n ≡ 3 (mod 18); asserts agreement with the
// independently computed class sizes of M.
SigmaBreakdown sigma_value(unsigned n);

// Point/hyperplane coincidence report: verifies that each twin table entry
// generates the witness-conjugate of its primary entry.
struct TwinReport {
  std::string primary, twin;
  bool coincide = false;
};
std::vector<TwinReport> check_duality_twins(unsigned n, const PrimitiveTable& table);

}  // namespace covernum
