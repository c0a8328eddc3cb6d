#include "covernum/oracle.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_set>

#include "covernum/stabchain.hpp"

namespace covernum {

GroupTable GroupTable::closure(const std::vector<Permutation>& gens, std::size_t max_order) {
  if (gens.empty()) throw std::invalid_argument("closure: need generators");
  const unsigned n = gens.front().degree();
  GroupTable g;
  g.degree = n;
  std::unordered_set<Permutation, PermHash> seen;
  std::vector<Permutation> frontier{Permutation(n)};
  seen.insert(frontier.front());
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& e : frontier) {
      for (const auto& s : gens) {
        Permutation w = compose(e, s);
        if (seen.insert(w).second) {
          if (seen.size() > max_order) throw std::runtime_error("closure: order budget exceeded");
          next.push_back(std::move(w));
        }
      }
    }
    frontier = std::move(next);
  }
  g.elements.assign(seen.begin(), seen.end());
  std::sort(g.elements.begin(), g.elements.end());
  for (std::size_t i = 0; i < g.elements.size(); ++i)
    g.index.emplace(g.elements[i], static_cast<uint16_t>(i));
  const std::size_t o = g.elements.size();
  g.mult.assign(o, std::vector<uint16_t>(o));
  g.inverse.resize(o);
  for (std::size_t i = 0; i < o; ++i) {
    g.inverse[i] = g.index.at(g.elements[i].inverse());
    for (std::size_t j = 0; j < o; ++j)
      g.mult[i][j] = g.index.at(compose(g.elements[i], g.elements[j]));
  }
  for (const auto& s : gens) g.generator_ids.push_back(g.index.at(s));
  return g;
}

unsigned GroupTable::element_order(uint16_t e) const {
  unsigned k = 1;
  uint16_t x = e;
  while (x != 0) {
    x = mult[x][e];
    ++k;
  }
  return k;
}

bool GroupTable::is_cyclic() const {
  for (uint16_t e = 0; e < order(); ++e)
    if (element_order(e) == order()) return true;
  return false;
}

namespace {

struct VecHash {
  std::size_t operator()(const std::vector<uint16_t>& v) const {
    std::size_t h = 1469598103934665603ull;
    for (uint16_t x : v) h = (h ^ x) * 1099511628211ull;
    return h;
  }
};

std::vector<uint16_t> closure_ids(const GroupTable& g, const std::vector<uint16_t>& gens) {
  std::vector<bool> in(g.order(), false);
  std::vector<uint16_t> stack{0}, out{0};
  in[0] = true;
  while (!stack.empty()) {
    const uint16_t e = stack.back();
    stack.pop_back();
    for (uint16_t s : gens) {
      const uint16_t w = g.mult[e][s];
      if (!in[w]) {
        in[w] = true;
        out.push_back(w);
        stack.push_back(w);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool subset_of(const std::vector<uint16_t>& a, const std::vector<uint16_t>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

SubgroupLattice all_subgroups(const GroupTable& g) {
  if (g.order() > 360) throw std::runtime_error("all_subgroups: order budget (360) exceeded");
  SubgroupLattice lat;
  std::unordered_map<std::vector<uint16_t>, int, VecHash> id_of;
  std::vector<std::vector<uint16_t>> gens_of;  // generating ids per subgroup

  auto add = [&](const std::vector<uint16_t>& elems, std::vector<uint16_t> gens) -> int {
    auto it = id_of.find(elems);
    if (it != id_of.end()) return -1;
    const int id = static_cast<int>(lat.subgroups.size());
    id_of.emplace(elems, id);
    lat.subgroups.push_back(elems);
    gens_of.push_back(std::move(gens));
    return id;
  };

  add({0}, {});
  // atoms: cyclic subgroups
  std::vector<int> atoms;
  std::vector<uint16_t> atom_gen;
  for (uint16_t e = 1; e < g.order(); ++e) {
    auto cyc = closure_ids(g, {e});
    const int id = add(cyc, {e});
    if (id >= 0) {
      atoms.push_back(id);
      atom_gen.push_back(e);
    }
  }
  // close under joins with atoms
  for (std::size_t h = 0; h < lat.subgroups.size(); ++h) {
    if (lat.subgroups[h].size() == g.order()) continue;
    for (std::size_t a = 0; a < atoms.size(); ++a) {
      const auto& atom = lat.subgroups[atoms[a]];
      if (subset_of(atom, lat.subgroups[h])) continue;
      std::vector<uint16_t> jg = gens_of[h];
      jg.push_back(atom_gen[a]);
      auto joined = closure_ids(g, jg);
      add(joined, std::move(jg));
    }
  }

  // maximality
  const std::size_t count = lat.subgroups.size();
  lat.maximal.assign(count, false);
  for (std::size_t h = 0; h < count; ++h) {
    const auto& H = lat.subgroups[h];
    if (H.size() == g.order()) continue;
    bool maximal = true;
    for (std::size_t k = 0; k < count && maximal; ++k) {
      const auto& K = lat.subgroups[k];
      if (K.size() <= H.size() || K.size() == g.order()) continue;
      if (K.size() % H.size()) continue;
      if (subset_of(H, K)) maximal = false;
    }
    lat.maximal[h] = maximal;
  }

  // conjugacy classes (orbits under conjugation by the group generators)
  lat.conj_class.assign(count, -1);
  for (std::size_t h = 0; h < count; ++h) {
    if (lat.conj_class[h] >= 0) continue;
    const int cls = static_cast<int>(lat.classes.size());
    lat.classes.push_back({});
    std::vector<std::size_t> stack{h};
    lat.conj_class[h] = cls;
    while (!stack.empty()) {
      const std::size_t cur = stack.back();
      stack.pop_back();
      lat.classes[cls].push_back(static_cast<int>(cur));
      for (uint16_t t : g.generator_ids) {
        std::vector<uint16_t> img;
        img.reserve(lat.subgroups[cur].size());
        const uint16_t ti = g.inverse[t];
        for (uint16_t e : lat.subgroups[cur]) img.push_back(g.mult[g.mult[ti][e]][t]);
        std::sort(img.begin(), img.end());
        const int id = id_of.at(img);
        if (lat.conj_class[id] < 0) {
          lat.conj_class[id] = cls;
          stack.push_back(static_cast<std::size_t>(id));
        }
      }
    }
  }
  return lat;
}

std::vector<std::vector<uint16_t>> maximal_subgroup_sets(const GroupTable& g,
                                                         const SubgroupLattice& lat) {
  std::vector<std::vector<uint16_t>> out;
  for (std::size_t h = 0; h < lat.subgroups.size(); ++h)
    if (lat.maximal[h]) out.push_back(lat.subgroups[h]);
  (void)g;
  return out;
}

namespace {

struct BitSet {
  std::vector<uint64_t> w;
  explicit BitSet(std::size_t bits = 0) : w((bits + 63) / 64, 0) {}
  void set(std::size_t i) { w[i >> 6] |= 1ull << (i & 63); }
  bool test(std::size_t i) const { return (w[i >> 6] >> (i & 63)) & 1; }
  std::size_t count() const {
    std::size_t c = 0;
    for (uint64_t x : w) c += static_cast<std::size_t>(__builtin_popcountll(x));
    return c;
  }
  std::size_t count_and(const BitSet& o) const {
    std::size_t c = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
      c += static_cast<std::size_t>(__builtin_popcountll(w[i] & o.w[i]));
    return c;
  }
  void and_not(const BitSet& o) {
    for (std::size_t i = 0; i < w.size(); ++i) w[i] &= ~o.w[i];
  }
  bool any() const {
    for (uint64_t x : w)
      if (x) return true;
    return false;
  }
};

struct SigmaSearch {
  const std::vector<BitSet>& sets;
  unsigned long budget;
  unsigned long nodes = 0;
  unsigned long best;
  std::vector<int> best_choice;
  std::vector<int> current;
  bool exhausted = true;
  std::size_t nbits;

  SigmaSearch(const std::vector<BitSet>& s, unsigned long initial_best, unsigned long b,
              std::size_t nbits_)
      : sets(s), budget(b), best(initial_best), nbits(nbits_) {}

  void run(const BitSet& uncovered) {
    if (++nodes > budget) {
      exhausted = false;
      return;
    }
    if (!uncovered.any()) {
      best = current.size();
      best_choice = current;
      return;
    }
    if (current.size() + 1 >= best) return;
    // lower bound: remaining / best single-set coverage
    std::size_t remaining = uncovered.count();
    std::size_t maxcov = 0;
    for (const auto& s : sets) maxcov = std::max(maxcov, s.count_and(uncovered));
    if (maxcov == 0) return;  // uncoverable
    if (current.size() + (remaining + maxcov - 1) / maxcov >= best) return;
    // branch on an uncovered element with fewest covering sets
    std::size_t pick = nbits, pick_count = sets.size() + 1;
    for (std::size_t e = 0; e < nbits; ++e) {
      if (!uncovered.test(e)) continue;
      std::size_t c = 0;
      for (const auto& s : sets)
        if (s.test(e)) ++c;
      if (c < pick_count) {
        pick_count = c;
        pick = e;
        if (c <= 1) break;
      }
    }
    if (pick == nbits) return;
    if (pick_count == 0) return;  // element in no set: no covering
    std::vector<std::pair<std::size_t, int>> options;
    for (std::size_t si = 0; si < sets.size(); ++si)
      if (sets[si].test(pick)) options.push_back({sets[si].count_and(uncovered), static_cast<int>(si)});
    std::sort(options.rbegin(), options.rend());
    for (const auto& [cov, si] : options) {
      BitSet next = uncovered;
      next.and_not(sets[si]);
      current.push_back(si);
      run(next);
      current.pop_back();
      if (nodes > budget) return;
    }
  }
};

}  // namespace

SigmaResult sigma_exact(const GroupTable& g, const std::vector<std::vector<uint16_t>>& sets,
                        unsigned long node_budget) {
  SigmaResult res;
  if (g.is_cyclic()) {
    res.defined = false;
    return res;
  }
  const std::size_t nbits = g.order();
  std::vector<BitSet> masks;
  for (const auto& s : sets) {
    BitSet b(nbits);
    for (uint16_t e : s)
      if (e != 0) b.set(e);
    masks.push_back(std::move(b));
  }
  BitSet universe(nbits);
  for (std::size_t e = 1; e < nbits; ++e) universe.set(e);

  // greedy upper bound
  std::vector<int> greedy;
  {
    BitSet left = universe;
    while (left.any()) {
      std::size_t bestcov = 0;
      int bestset = -1;
      for (std::size_t si = 0; si < masks.size(); ++si) {
        const std::size_t c = masks[si].count_and(left);
        if (c > bestcov) {
          bestcov = c;
          bestset = static_cast<int>(si);
        }
      }
      if (bestset < 0) throw std::runtime_error("sigma: sets do not cover the group");
      greedy.push_back(bestset);
      left.and_not(masks[bestset]);
    }
  }

  // Greedy seeds the incumbent; the search may only improve on it, and a full
  // exhaustion proves the incumbent optimal.
  SigmaSearch search(masks, greedy.size(), node_budget, nbits);
  search.best_choice = greedy;
  search.run(universe);
  res.exact = search.exhausted;
  res.value = search.best;
  for (int si : search.best_choice) res.witness.push_back(sets[si]);
  res.nodes = search.nodes;
  return res;
}

namespace {

struct CliqueSearch {
  const std::vector<std::vector<bool>>& adj;
  unsigned long budget;
  unsigned long nodes = 0;
  std::vector<int> best, current;
  bool exhausted = true;

  CliqueSearch(const std::vector<std::vector<bool>>& a, unsigned long b) : adj(a), budget(b) {}

  // greedy coloring bound on the candidate set
  unsigned color_bound(const std::vector<int>& cand) const {
    std::vector<unsigned> color(cand.size(), 0);
    unsigned ncolors = 0;
    for (std::size_t i = 0; i < cand.size(); ++i) {
      std::vector<bool> used(ncolors + 2, false);
      for (std::size_t j = 0; j < i; ++j)
        if (adj[cand[i]][cand[j]]) used[color[j]] = true;
      unsigned c = 1;
      while (used[c]) ++c;
      color[i] = c;
      ncolors = std::max(ncolors, c);
    }
    return ncolors;
  }

  void run(std::vector<int>& cand) {
    if (++nodes > budget) {
      exhausted = false;
      return;
    }
    if (cand.empty()) {
      if (current.size() > best.size()) best = current;
      return;
    }
    if (current.size() + color_bound(cand) <= best.size()) return;
    while (!cand.empty()) {
      if (current.size() + cand.size() <= best.size()) return;
      const int v = cand.back();
      cand.pop_back();
      std::vector<int> next;
      for (int u : cand)
        if (adj[v][u]) next.push_back(u);
      current.push_back(v);
      run(next);
      current.pop_back();
      if (nodes > budget) return;
    }
  }
};

}  // namespace

OmegaResult omega_exact(const GroupTable& g, unsigned long node_budget) {
  OmegaResult res;
  // vertices: distinct nontrivial cyclic subgroups, one representative each
  std::unordered_map<std::vector<uint16_t>, int, VecHash> cyc_id;
  std::vector<uint16_t> rep;
  for (uint16_t e = 1; e < g.order(); ++e) {
    auto cyc = closure_ids(g, {e});
    if (cyc_id.emplace(cyc, static_cast<int>(rep.size())).second) rep.push_back(e);
  }
  const std::size_t nv = rep.size();
  std::vector<std::vector<bool>> adj(nv, std::vector<bool>(nv, false));
  for (std::size_t i = 0; i < nv; ++i) {
    for (std::size_t j = i + 1; j < nv; ++j) {
      if (closure_ids(g, {rep[i], rep[j]}).size() == g.order()) adj[i][j] = adj[j][i] = true;
    }
  }
  // order vertices by degree ascending (branch on high degree last)
  std::vector<int> order(nv);
  std::iota(order.begin(), order.end(), 0);
  std::vector<std::size_t> deg(nv, 0);
  for (std::size_t i = 0; i < nv; ++i)
    deg[i] = static_cast<std::size_t>(std::count(adj[i].begin(), adj[i].end(), true));
  std::sort(order.begin(), order.end(), [&](int a, int b) { return deg[a] < deg[b]; });

  CliqueSearch search(adj, node_budget);
  std::vector<int> cand = order;
  search.run(cand);
  res.exact = search.exhausted;
  res.value = search.best.size();
  for (int v : search.best) res.witness.push_back(rep[v]);
  std::sort(res.witness.begin(), res.witness.end());
  res.nodes = search.nodes;
  // independent pairwise re-verification
  res.witness_verified = true;
  for (std::size_t i = 0; i < res.witness.size() && res.witness_verified; ++i)
    for (std::size_t j = i + 1; j < res.witness.size(); ++j)
      if (closure_ids(g, {res.witness[i], res.witness[j]}).size() != g.order()) {
        res.witness_verified = false;
        break;
      }
  return res;
}

std::vector<Permutation> alternating_gens(unsigned n) {
  if (n < 3) throw std::invalid_argument("alternating_gens: n >= 3");
  std::vector<unsigned> c3(n);
  std::iota(c3.begin(), c3.end(), 0u);
  c3[0] = 1;
  c3[1] = 2;
  c3[2] = 0;
  std::vector<unsigned> big(n);
  std::iota(big.begin(), big.end(), 0u);
  if (n % 2 == 1) {
    for (unsigned i = 0; i < n; ++i) big[i] = (i + 1) % n;
  } else {
    for (unsigned i = 1; i < n; ++i) big[i] = i == n - 1 ? 1 : i + 1;
  }
  return {Permutation::from_images(std::move(c3)), Permutation::from_images(std::move(big))};
}

std::vector<Permutation> symmetric_gens(unsigned n) {
  if (n < 2) throw std::invalid_argument("symmetric_gens: n >= 2");
  std::vector<unsigned> t(n), c(n);
  std::iota(t.begin(), t.end(), 0u);
  std::swap(t[0], t[1]);
  for (unsigned i = 0; i < n; ++i) c[i] = (i + 1) % n;
  return {Permutation::from_images(std::move(t)), Permutation::from_images(std::move(c))};
}

// ---------------------------------------------------------------------------
// crosscheck_counts
// ---------------------------------------------------------------------------

namespace {

uint64_t encode_perm(const Permutation& p) {
  uint64_t v = 0;
  for (unsigned i = 0; i < p.degree(); ++i) v |= static_cast<uint64_t>(p[i]) << (4 * i);
  return v;
}

Permutation decode_perm(uint64_t v, unsigned n) {
  std::vector<unsigned> img(n);
  for (unsigned i = 0; i < n; ++i) img[i] = (v >> (4 * i)) & 0xf;
  return Permutation::from_images(std::move(img));
}

struct U64VecHash {
  std::size_t operator()(const std::vector<uint64_t>& v) const {
    std::size_t h = 1469598103934665603ull;
    for (uint64_t x : v) h = (h ^ x) * 1099511628211ull;
    return h;
  }
};

std::vector<uint64_t> subgroup_elements(const std::vector<Permutation>& gens, unsigned n) {
  std::unordered_set<uint64_t> seen;
  std::vector<Permutation> frontier{Permutation(n)};
  seen.insert(encode_perm(frontier.front()));
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& e : frontier) {
      for (const auto& s : gens) {
        Permutation w = compose(e, s);
        if (seen.insert(encode_perm(w)).second) next.push_back(std::move(w));
      }
    }
    frontier = std::move(next);
  }
  std::vector<uint64_t> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

// All S_n-conjugates of the subgroup, as sorted encoded element lists.
std::vector<std::vector<uint64_t>> conjugate_orbit(const std::vector<uint64_t>& member,
                                                   unsigned n) {
  auto sgens = symmetric_gens(n);
  std::unordered_set<std::vector<uint64_t>, U64VecHash> seen;
  std::vector<std::vector<uint64_t>> frontier{member}, all{member};
  seen.insert(member);
  while (!frontier.empty()) {
    std::vector<std::vector<uint64_t>> next;
    for (const auto& m : frontier) {
      for (const auto& t : sgens) {
        std::vector<uint64_t> img;
        img.reserve(m.size());
        for (uint64_t e : m) img.push_back(encode_perm(conjugate(decode_perm(e, n), t)));
        std::sort(img.begin(), img.end());
        if (seen.insert(img).second) {
          all.push_back(img);
          next.push_back(std::move(img));
        }
      }
    }
    frontier = std::move(next);
  }
  return all;
}

// Even cycle types of degree n with at most 3 parts.
std::vector<CycleType> even_small_types(unsigned n) {
  std::vector<CycleType> out;
  for (unsigned a = 1; a <= n; ++a) {
    for (unsigned b = a; a + b <= n; ++b) {
      for (unsigned c = b; a + b + c <= n; ++c) {
        if (a + b + c == n) {
          CycleType t({a, b, c});
          if (canonical_of_type(t).even()) out.push_back(t);
        }
      }
      if (a + b == n) {
        CycleType t({a, b});
        if (canonical_of_type(t).even()) out.push_back(t);
      }
    }
  }
  CycleType t({n});
  if (canonical_of_type(t).even()) out.push_back(t);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Permutation> full_wreath_generators(unsigned n, unsigned bs, unsigned bc) {
  std::vector<Permutation> w;
  auto ident = [&] {
    std::vector<unsigned> img(n);
    std::iota(img.begin(), img.end(), 0u);
    return img;
  };
  if (bs >= 2) {
    auto img = ident();
    std::swap(img[0], img[1]);
    w.push_back(Permutation::from_images(std::move(img)));
    if (bs >= 3) {
      auto img2 = ident();
      for (unsigned i = 0; i + 1 < bs; ++i) img2[i] = i + 1;
      img2[bs - 1] = 0;
      w.push_back(Permutation::from_images(std::move(img2)));
    }
  }
  {
    auto img = ident();
    for (unsigned i = 0; i < bs; ++i) std::swap(img[i], img[bs + i]);
    w.push_back(Permutation::from_images(std::move(img)));
  }
  if (bc >= 3) {
    std::vector<unsigned> img(n);
    for (unsigned i = 0; i < n; ++i) img[i] = (i + bs) % n;
    w.push_back(Permutation::from_images(std::move(img)));
  }
  return w;
}

}  // namespace

std::vector<std::vector<uint16_t>> maximal_sets_from_catalog(const GroupTable& g,
                                                             const PrimitiveTable& table) {
  const unsigned n = g.degree;
  std::vector<std::vector<uint16_t>> out;
  for (const auto& cls : enumerate_maximal_classes(n, table)) {
    if (!cls.maximal) continue;
    const auto member = subgroup_elements(concrete_generators(cls), n);
    for (const auto& m : conjugate_orbit(member, n)) {
      std::vector<uint16_t> ids;
      ids.reserve(m.size());
      for (uint64_t e : m) ids.push_back(g.id_of(decode_perm(e, n)));
      std::sort(ids.begin(), ids.end());
      out.push_back(std::move(ids));
    }
  }
  return out;
}

CrosscheckReport crosscheck_counts(unsigned n, const PrimitiveTable& table) {
  if (n < 5 || n > 8) throw std::invalid_argument("crosscheck_counts: degree must be 5..8");
  CrosscheckReport rep;
  auto fail = [&](const std::string& msg) { rep.mismatches.push_back(msg); };

  const auto classes = enumerate_maximal_classes(n, table);
  const auto types = even_small_types(n);

  for (const auto& cls : classes) {
    const auto gens = concrete_generators(cls);
    const auto member = subgroup_elements(gens, n);
    const auto stats = class_stats(cls);

    ++rep.checks;
    if (BigInt(static_cast<unsigned long>(member.size())) != stats.member_order)
      fail(cls.label() + ": member order " + std::to_string(member.size()) + " != " +
           stats.member_order.get_str());
    {
      auto chain = StabilizerChain::build(gens, n);
      ++rep.checks;
      if (chain.order() != stats.member_order)
        fail(cls.label() + ": chain order mismatch");
    }

    const auto orbit = conjugate_orbit(member, n);
    ++rep.checks;
    if (BigInt(static_cast<unsigned long>(orbit.size())) != stats.class_size)
      fail(cls.label() + ": class size " + std::to_string(orbit.size()) + " != " +
           stats.class_size.get_str());

    std::vector<std::unordered_set<uint64_t>> orbit_sets;
    orbit_sets.reserve(orbit.size());
    for (const auto& m : orbit) orbit_sets.emplace_back(m.begin(), m.end());

    for (const auto& t : types) {
      const Permutation gfix = canonical_of_type(t);
      const uint64_t gcode = encode_perm(gfix);
      unsigned long observed = 0;
      for (const auto& ms : orbit_sets)
        if (ms.count(gcode)) ++observed;
      if (BigInt(observed) > rep.max_conjugate_count) rep.max_conjugate_count = observed;

      // Lemma-style bound: conjugate count <= n^parts for every class kind.
      ++rep.checks;
      if (BigInt(observed) > pow_big(n, static_cast<unsigned long>(t.num_parts())))
        fail(cls.label() + ": conjugate count for " + t.str() + " exceeds n^k");

      // closed-count predictions for non-primitive classes
      if (cls.kind == SubgroupKind::Intransitive) {
        ++rep.checks;
        if (intransitive_contains_type(cls.a, t) != BigInt(observed))
          fail(cls.label() + ": containment count for " + t.str() + " expected " +
               intransitive_contains_type(cls.a, t).get_str() + " observed " +
               std::to_string(observed));
      } else if (cls.kind == SubgroupKind::Imprimitive) {
        ++rep.checks;
        if (imprimitive_contains_count(cls.block_size, cls.block_count, t) != BigInt(observed))
          fail(cls.label() + ": containment count for " + t.str() + " expected " +
               imprimitive_contains_count(cls.block_size, cls.block_count, t).get_str() +
               " observed " + std::to_string(observed));
      }

      // class double-count identity: observed * |type class| = class_size * |M ∩ type|
      unsigned long in_member = 0;
      for (uint64_t e : member)
        if (decode_perm(e, n).cycle_type() == t) ++in_member;
      ++rep.checks;
      if (BigInt(observed) * sn_class_size(t) !=
          stats.class_size * BigInt(in_member))
        fail(cls.label() + ": double-count identity failed for " + t.str());

      // three-block criterion vs the general imprimitive count
      if (t.num_parts() == 3 && n % 3 == 0 && cls.kind == SubgroupKind::Imprimitive &&
          cls.block_count == 3) {
        ++rep.checks;
        const bool crit = stabilizes_three_blocks(t, n);
        if (crit != (observed > 0))
          fail(cls.label() + ": three-block criterion disagrees for " + t.str());
      }
    }

    // n-cycle count inside the full imprimitive wreath (the S_n subgroup)
    if (cls.kind == SubgroupKind::Imprimitive) {
      const auto wreath =
          subgroup_elements(full_wreath_generators(n, cls.block_size, cls.block_count), n);
      unsigned long ncycles = 0;
      for (uint64_t e : wreath)
        if (decode_perm(e, n).cycle_type() == CycleType({n})) ++ncycles;
      ++rep.checks;
      if (count_ncycles_in_imprimitive(n, cls.block_count) != BigInt(ncycles))
        fail(cls.label() + ": n-cycle count " + std::to_string(ncycles) + " != formula " +
             count_ncycles_in_imprimitive(n, cls.block_count).get_str());
      // each n-cycle lies in exactly one class member (double count over the class)
      ++rep.checks;
      if (BigInt(ncycles) * stats.class_size != factorial(n - 1))
        fail(cls.label() + ": n-cycle uniqueness double count failed");
    }
  }

  // full lattice comparison at tiny degree: catalog classes = maximal classes
  if (n <= 6) {
    auto g = GroupTable::closure(alternating_gens(n), 360);
    auto lat = all_subgroups(g);
    std::multiset<std::pair<unsigned long, unsigned long>> brute;  // (order, class size)
    for (std::size_t c = 0; c < lat.classes.size(); ++c) {
      const int rep0 = lat.classes[c].front();
      if (!lat.maximal[rep0]) continue;
      brute.insert({lat.subgroups[rep0].size(), lat.classes[c].size()});
    }
    std::multiset<std::pair<unsigned long, unsigned long>> cat;
    for (const auto& cls : classes) {
      if (!cls.maximal) continue;
      const auto stats = class_stats(cls);
      cat.insert({stats.member_order.get_ui(), stats.class_size.get_ui()});
    }
    ++rep.checks;
    if (brute != cat) fail("maximal class inventory mismatch vs full lattice at degree " +
                           std::to_string(n));
  }
  return rep;
}

}  // namespace covernum
