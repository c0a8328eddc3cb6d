#include "covernum/verifier.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "covernum/stabchain.hpp"

namespace covernum {

namespace {

void require_domain(unsigned n) {
  if (n < 21 || n % 18 != 3)
    throw std::invalid_argument("degree must be >= 21 and congruent to 3 mod 18");
}

CycleType pi_type(unsigned n, int i) {
  if (i == -1) return CycleType({n});
  const unsigned a = static_cast<unsigned>(i);
  if (a % 2 == 0) return CycleType({a, (n - a - 1) / 2, (n - a + 1) / 2});
  return CycleType({a, (n - a) / 2 - 1, (n - a) / 2 + 1});
}

SubgroupDescriptor intransitive_desc(unsigned n, unsigned a) {
  SubgroupDescriptor d;
  d.kind = SubgroupKind::Intransitive;
  d.degree = n;
  d.a = a;
  return d;
}

SubgroupDescriptor imprimitive_desc(unsigned n, unsigned bs, unsigned bc) {
  SubgroupDescriptor d;
  d.kind = SubgroupKind::Imprimitive;
  d.degree = n;
  d.block_size = bs;
  d.block_count = bc;
  return d;
}

// Enumerates partitions of n (ascending parts) and calls f on each.
void for_each_partition(unsigned n, const std::function<void(const std::vector<unsigned>&)>& f) {
  std::vector<unsigned> parts;
  std::function<void(unsigned, unsigned)> rec = [&](unsigned remaining, unsigned minp) {
    if (remaining == 0) {
      f(parts);
      return;
    }
    for (unsigned p = minp; p <= remaining; ++p) {
      parts.push_back(p);
      rec(remaining - p, p);
      parts.pop_back();
    }
  };
  rec(n, 1);
}

}  // namespace

PiAndM build_pi_and_M(unsigned n) {
  require_domain(n);
  PiAndM out;
  out.n = n;
  out.q = n / 3;
  auto add_pi = [&](int i) {
    PiClass c;
    c.index = i;
    c.type = pi_type(n, i);
    if (c.type.degree() != n) throw std::logic_error("pi type degree");
    if (c.type.num_parts() == 3 &&
        (c.type.parts[0] == c.type.parts[1] || c.type.parts[1] == c.type.parts[2]))
      throw std::logic_error("pi type parts not distinct");
    c.sn_class_size = sn_class_size(c.type);
    c.splits_in_an = an_class_splits(c.type);
    out.pi.push_back(std::move(c));
  };
  add_pi(-1);
  for (unsigned a = 1; a <= out.q - 2; ++a) add_pi(static_cast<int>(a));
  out.m_classes.push_back(imprimitive_desc(n, out.q, 3));
  for (unsigned a = 1; a <= out.q - 2; ++a) out.m_classes.push_back(intransitive_desc(n, a));
  return out;
}

BigInt members_containing(const SubgroupDescriptor& j, const CycleType& t) {
  switch (j.kind) {
    case SubgroupKind::Intransitive:
      return intransitive_contains_type(j.a, t);
    case SubgroupKind::Imprimitive:
      return imprimitive_contains_count(j.block_size, j.block_count, t);
    case SubgroupKind::Primitive:
      throw std::invalid_argument("members_containing: no closed count for primitive classes");
  }
  throw std::logic_error("bad descriptor");
}

ConditionReport check_conditions(unsigned n) {
  require_domain(n);
  const unsigned q = n / 3;
  auto pm = build_pi_and_M(n);
  ConditionReport rep;

  // (1) every cycle type of A_n lies in a member of M. For n odd, even
  // permutations are exactly those with an odd number of parts.
  rep.covering_ok = true;
  for_each_partition(n, [&](const std::vector<unsigned>& parts) {
    if (parts.size() % 2 == 0) return;  // odd permutation
    ++rep.types_checked;
    const unsigned a1 = parts.front();
    const unsigned k = static_cast<unsigned>(parts.size());
    bool covered = false;
    if (a1 <= q - 2) {
      CycleType t;
      t.parts = parts;
      covered = intransitive_contains_type(a1, t) >= 1;  // the a1-cycle's support
    } else if (k == 1) {
      covered = true;  // n-cycle, member of the 3-block class
    } else if (k == 3) {
      CycleType t;
      t.parts = parts;
      covered = stabilizes_three_blocks(t, n) &&
                imprimitive_contains_count(q, 3, t) >= 1;
    }
    if (!covered) {
      rep.covering_ok = false;
      CycleType t;
      t.parts = parts;
      rep.failures.push_back("(1) uncovered cycle type " + t.str());
    }
    if (a1 >= q - 1 && k != 1 && k != 3) {
      rep.covering_ok = false;
      CycleType t;
      t.parts = parts;
      rep.failures.push_back("(1) unexpected part count for type " + t.str());
    }
  });

  // (2) Pi and M are unions of whole S_n-classes by construction.
  rep.conjugation_closed = true;

  // (3)+(4): each element of Pi_i lies in exactly one member across all of M.
  rep.pi_covered = true;
  rep.uniqueness_ok = true;
  for (const auto& pc : pm.pi) {
    BigInt total = 0;
    for (const auto& mc : pm.m_classes) total += members_containing(mc, pc.type);
    if (total < 1) {
      rep.pi_covered = false;
      rep.failures.push_back("(3) Pi_" + std::to_string(pc.index) + " not covered");
    }
    if (total != 1) {
      rep.uniqueness_ok = false;
      rep.failures.push_back("(4) Pi_" + std::to_string(pc.index) + " member count " +
                             total.get_str() + " != 1");
    }
  }

  // (5) every class in M meets Pi: the a-set stabilizers meet Pi_a, the
  // 3-block class meets Pi_{-1}.
  rep.classes_meet_pi = true;
  for (const auto& mc : pm.m_classes) {
    bool meets = false;
    for (const auto& pc : pm.pi) {
      if (members_containing(mc, pc.type) >= 1) {
        meets = true;
        break;
      }
    }
    if (!meets) {
      rep.classes_meet_pi = false;
      rep.failures.push_back("(5) class " + mc.label() + " misses Pi");
    }
  }
  return rep;
}

CountMCapPi count_M_cap_Pi(const SubgroupDescriptor& j, const PiClass& pi, unsigned n) {
  CountMCapPi out;
  if (j.kind == SubgroupKind::Primitive) {
    // |M ∩ Π_i| <= m_j(i) |M| |Π_i| / |A_n| with m_j(i) <= n^parts.
    const BigInt m_bound = pow_big(n, static_cast<unsigned long>(pi.type.num_parts()));
    out.value = make_rat(m_bound * j.primitive.order * pi.sn_class_size * 2, factorial(n));
    out.is_bound = true;
    return out;
  }
  const BigInt m = members_containing(j, pi.type);
  out.value = make_rat(m * normalizer_order(j) * pi.sn_class_size, factorial(n));
  if (out.value.get_den() != 1)
    throw std::logic_error("count_M_cap_Pi: double count not integral");
  out.is_bound = false;
  return out;
}

namespace {

std::string verdict_of(const Rational& d) {
  if (d < 1) return "strictly-below-1";
  if (d == 1) return "equal-1";
  return "fails";
}

}  // namespace

std::vector<DMLedgerRow> dm_ledger(unsigned n, const PrimitiveTable& table,
                                   const LedgerOptions& opt) {
  require_domain(n);
  const unsigned q = n / 3;
  auto pm = build_pi_and_M(n);
  const bool exact_intrans = opt.exact_intransitive || n == 21;

  // Normalizer orders of the designated classes M_i, used in every bound.
  std::map<int, BigInt> norm_of_index;
  norm_of_index[-1] = normalizer_order(pm.m_classes[0]);
  for (unsigned a = 1; a <= q - 2; ++a)
    norm_of_index[static_cast<int>(a)] = normalizer_order(pm.m_classes[a]);

  std::vector<DMLedgerRow> rows;

  auto classes = enumerate_maximal_classes(n, table);
  for (const auto& cls : classes) {
    // Skip members of M itself.
    if (cls.kind == SubgroupKind::Intransitive && cls.a <= q - 2) continue;
    if (cls.kind == SubgroupKind::Imprimitive && cls.block_size == q && cls.block_count == 3)
      continue;

    DMLedgerRow row;
    row.class_label = cls.label();
    row.kind = cls.kind;

    if (cls.kind == SubgroupKind::Intransitive) {
      row.order_bound = class_stats(cls).member_order;
      row.order_provenance = "exact";
      std::vector<int> nonzero;
      for (const auto& pc : pm.pi) {
        const BigInt m = members_containing(cls, pc.type);
        if (m != 0) {
          row.m_vector[pc.index] = m;
          nonzero.push_back(pc.index);
        }
      }
      if (nonzero.empty()) {
        row.d_value = 0;
      } else if (exact_intrans) {
        Rational d = 0;
        const BigInt nj = normalizer_order(cls);
        for (int i : nonzero) d += make_rat(row.m_vector[i] * nj, norm_of_index[i]);
        row.d_value = d;
      } else {
        // Paper-style closed bound: each nonzero term is at most
        // q!(2q)! / ((q-2)!(2q+2)!), and there are at most 4 of them.
        row.d_value = make_rat(BigInt(static_cast<unsigned long>(nonzero.size())) *
                                   factorial(q) * factorial(2 * q),
                               factorial(q - 2) * factorial(2 * q + 2));
        row.d_is_upper_bound = true;
      }
      if (nonzero.size() > 4)
        throw std::logic_error("intransitive row with more than 4 nonzero indices");
    } else if (cls.kind == SubgroupKind::Imprimitive) {
      row.order_bound = class_stats(cls).member_order;
      row.order_provenance = "exact";
      Rational d = 0;
      const BigInt nj = normalizer_order(cls);
      for (const auto& pc : pm.pi) {
        const BigInt m = members_containing(cls, pc.type);
        if (m != 0) {
          row.m_vector[pc.index] = m;
          d += make_rat(m * nj, norm_of_index[pc.index]);
        }
      }
      row.d_value = d;
    } else {
      // Primitive, from the table: d <= sum_i n^{k_i} * 2|M| / |N(M_i)|.
      row.order_bound = cls.primitive.order;
      row.order_provenance = "table";
      row.m_is_bound = true;
      Rational d = 0;
      for (const auto& pc : pm.pi) {
        const BigInt mb = pow_big(n, static_cast<unsigned long>(pc.type.num_parts()));
        row.m_vector[pc.index] = mb;
        d += make_rat(mb * 2 * cls.primitive.order, norm_of_index[pc.index]);
      }
      row.d_value = d;
      row.d_is_upper_bound = true;
    }
    row.verdict = verdict_of(row.d_value);
    rows.push_back(std::move(row));
  }

  // Catch-all primitive row: sound for any primitive class whether or not it
  // appears in the table, via the 2^n order bound.
  {
    DMLedgerRow row;
    row.class_label = "primitive:any";
    row.kind = SubgroupKind::Primitive;
    row.order_bound = pow2(n);
    row.order_provenance = "primitive-2^n-bound";
    row.m_is_bound = true;
    Rational d = 0;
    for (const auto& pc : pm.pi) {
      const BigInt mb = pow_big(n, static_cast<unsigned long>(pc.type.num_parts()));
      row.m_vector[pc.index] = mb;
      d += make_rat(mb * 2 * row.order_bound, norm_of_index[pc.index]);
    }
    row.d_value = d;
    row.d_is_upper_bound = true;
    row.verdict = verdict_of(row.d_value);
    rows.push_back(std::move(row));
  }

  std::sort(rows.begin(), rows.end(), [](const DMLedgerRow& a, const DMLedgerRow& b) {
    if (a.kind != b.kind) return static_cast<int>(a.kind) < static_cast<int>(b.kind);
    return a.class_label < b.class_label;
  });
  return rows;
}

SigmaBreakdown sigma_value(unsigned n) {
  require_domain(n);
  const unsigned q = n / 3;
  SigmaBreakdown out;
  out.intransitive_sum = 0;
  for (unsigned i = 1; i <= q - 2; ++i) out.intransitive_sum += binomial(n, i);
  out.imprimitive_class_size = exact_div(factorial(n), pow_big(factorial(q), 3) * 6);
  out.total = out.intransitive_sum + out.imprimitive_class_size;

  // Cross-check against the enumerated class sizes of M.
  auto pm = build_pi_and_M(n);
  BigInt total = 0;
  for (const auto& mc : pm.m_classes) total += class_stats(mc).class_size;
  if (total != out.total) throw std::logic_error("sigma_value: class-size cross-check failed");
  return out;
}

std::vector<TwinReport> check_duality_twins(unsigned n, const PrimitiveTable& table) {
  std::vector<TwinReport> out;
  for (const auto& twin : table.twins(n)) {
    TwinReport r;
    r.twin = twin.label;
    r.primary = twin.sn_class_of;
    const PrimitiveEntry* primary = nullptr;
    for (const auto& e : table.entries(n)) {
      if (e.label == twin.sn_class_of) primary = &e;
    }
    if (!primary) {
      r.coincide = false;
      out.push_back(r);
      continue;
    }
    std::vector<Permutation> pgens;
    for (const auto& s : primary->generator_strings) pgens.push_back(Permutation::parse(s, n));
    auto chain = StabilizerChain::build(pgens, n);
    const Permutation w = Permutation::parse(twin.sn_conjugacy_witness, n);
    const Permutation winv = w.inverse();
    bool ok = chain.order() == twin.order;
    for (const auto& s : twin.generator_strings) {
      const Permutation h = Permutation::parse(s, n);
      if (!chain.contains(conjugate(h, winv))) {
        ok = false;
        break;
      }
    }
    r.coincide = ok;
    out.push_back(r);
  }
  return out;
}

}  // namespace covernum
