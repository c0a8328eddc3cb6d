#include "covernum/stabchain.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace covernum {

namespace {

// Generators of the stabilizer at level i: everything assigned at levels >= i.
template <typename Levels>
std::vector<const Permutation*> gens_from(const Levels& levels, std::size_t i) {
  std::vector<const Permutation*> out;
  for (std::size_t l = i; l < levels.size(); ++l)
    for (const auto& g : levels[l].gens) out.push_back(&g);
  return out;
}

}  // namespace

void StabilizerChain::recompute_orbit(std::size_t i) {
  Level& lv = levels_[i];
  const auto gens = gens_from(levels_, i);
  lv.where.assign(degree_, -1);
  lv.orbit.clear();
  lv.transversal.clear();
  lv.where[lv.base_point] = 0;
  lv.orbit.push_back(lv.base_point);
  lv.transversal.push_back(Permutation(degree_));
  for (std::size_t qi = 0; qi < lv.orbit.size(); ++qi) {
    const unsigned q = lv.orbit[qi];
    for (const Permutation* s : gens) {
      const unsigned r = (*s)[q];
      if (lv.where[r] < 0) {
        lv.where[r] = static_cast<int>(lv.transversal.size());
        lv.orbit.push_back(r);
        lv.transversal.push_back(compose(lv.transversal[qi], *s));
      }
    }
  }
}

std::pair<Permutation, std::size_t> StabilizerChain::strip(Permutation g, std::size_t from) const {
  for (std::size_t i = from; i < levels_.size(); ++i) {
    const Level& lv = levels_[i];
    const unsigned p = g[lv.base_point];
    if (lv.where[p] < 0) return {std::move(g), i};
    g = compose(g, lv.transversal[lv.where[p]].inverse());
  }
  return {std::move(g), levels_.size()};
}

void StabilizerChain::add_generator(const Permutation& g, std::size_t level) {
  if (level == levels_.size()) {
    Level lv;
    lv.base_point = 0;
    for (unsigned i = 0; i < degree_; ++i) {
      if (g[i] != i) {
        lv.base_point = i;
        break;
      }
    }
    levels_.push_back(std::move(lv));
  }
  levels_[level].gens.push_back(g);
  for (std::size_t l = 0; l <= level; ++l) recompute_orbit(l);
}

StabilizerChain StabilizerChain::build(const std::vector<Permutation>& generators) {
  if (generators.empty())
    throw std::invalid_argument("build_chain: degree required for empty generator list");
  return build(generators, generators.front().degree());
}

StabilizerChain StabilizerChain::build(const std::vector<Permutation>& generators,
                                       unsigned degree) {
  StabilizerChain c;
  c.degree_ = degree;
  for (const Permutation& g : generators) {
    if (g.degree() != degree) throw std::invalid_argument("build_chain: degree mismatch");
  }
  // Place each generator at the deepest level whose base prefix it fixes.
  for (const Permutation& g : generators) {
    if (g.is_identity()) continue;
    std::size_t l = 0;
    while (l < c.levels_.size() && g[c.levels_[l].base_point] == c.levels_[l].base_point) ++l;
    c.add_generator(g, l);
  }
  if (c.levels_.empty()) return c;

  // Schreier-Sims verification pass, deepest level first; an addition at
  // level j restarts verification from j.
  std::size_t i = c.levels_.size();
  while (i-- > 0) {
    std::size_t added_at = 0;
    if (!c.verify_level(i, added_at)) i = added_at + 1;  // decrement lands on added_at
  }
  for (const auto& lv : c.levels_)
    for (const auto& g : lv.gens) c.sgs_.push_back(g);
  return c;
}

bool StabilizerChain::verify_level(std::size_t i, std::size_t& added_at) {
  // Collected pointers stay valid until the mutation, after which we return
  // immediately.
  const auto gens = gens_from(levels_, i);
  for (std::size_t qi = 0; qi < levels_[i].orbit.size(); ++qi) {
    for (const Permutation* s : gens) {
      const unsigned q = levels_[i].orbit[qi];
      const unsigned r = (*s)[q];
      Permutation h = compose(compose(levels_[i].transversal[qi], *s),
                              levels_[i].transversal[levels_[i].where[r]].inverse());
      if (h.is_identity()) continue;
      auto [res, j] = strip(std::move(h), i + 1);
      if (!res.is_identity()) {
        add_generator(res, j);
        added_at = j;
        return false;
      }
    }
  }
  return true;
}

BigInt StabilizerChain::order() const {
  BigInt o = 1;
  for (const auto& lv : levels_) o *= static_cast<unsigned long>(lv.orbit.size());
  return o;
}

bool StabilizerChain::contains(const Permutation& p) const {
  if (p.degree() != degree_) throw std::invalid_argument("contains: degree mismatch");
  auto [res, lvl] = strip(p, 0);
  (void)lvl;
  return res.is_identity();
}

std::vector<unsigned> StabilizerChain::base() const {
  std::vector<unsigned> b;
  for (const auto& lv : levels_) b.push_back(lv.base_point);
  return b;
}

std::vector<unsigned> StabilizerChain::orbit_of(unsigned point) const {
  std::vector<bool> seen(degree_, false);
  std::vector<unsigned> orb{point};
  seen[point] = true;
  for (std::size_t i = 0; i < orb.size(); ++i) {
    for (const Permutation& g : sgs_) {
      const unsigned r = g[orb[i]];
      if (!seen[r]) {
        seen[r] = true;
        orb.push_back(r);
      }
    }
  }
  std::sort(orb.begin(), orb.end());
  return orb;
}

bool StabilizerChain::is_transitive() const {
  return degree_ > 0 && !levels_.empty() && orbit_of(0).size() == degree_;
}

bool generates_alternating(const Permutation& x, const Permutation& y) {
  if (x.degree() != y.degree())
    throw std::invalid_argument("generates_alternating: degree mismatch");
  const unsigned n = x.degree();
  if (n < 3) throw std::invalid_argument("generates_alternating: degree must be >= 3");
  if (!x.even() || !y.even())
    throw std::invalid_argument("generates_alternating: odd input permutation");
  // Cheap pre-filter: <x,y> must be transitive.
  std::vector<bool> seen(n, false);
  std::vector<unsigned> stack{0};
  seen[0] = true;
  unsigned cnt = 1;
  while (!stack.empty()) {
    const unsigned p = stack.back();
    stack.pop_back();
    for (const Permutation* g : {&x, &y}) {
      const unsigned r = (*g)[p];
      if (!seen[r]) {
        seen[r] = true;
        ++cnt;
        stack.push_back(r);
      }
    }
  }
  if (cnt != n) return false;
  auto chain = StabilizerChain::build({x, y}, n);
  return chain.order() * 2 == factorial(n);
}

BigInt group_order(const std::vector<Permutation>& gens, unsigned degree) {
  return StabilizerChain::build(gens, degree).order();
}

std::vector<unsigned> minimal_block_system(const std::vector<Permutation>& gens,
                                           unsigned degree, unsigned seed0, unsigned seed1) {
  // finest G-congruence merging the two seeds, by image-closure of merges
  std::vector<unsigned> parent(degree);
  std::iota(parent.begin(), parent.end(), 0u);
  std::function<unsigned(unsigned)> find = [&](unsigned a) {
    while (parent[a] != a) {
      parent[a] = parent[parent[a]];
      a = parent[a];
    }
    return a;
  };
  std::vector<std::pair<unsigned, unsigned>> queue;
  queue.emplace_back(seed0, seed1);
  parent[find(seed1)] = find(seed0);
  while (!queue.empty()) {
    auto [a, b] = queue.back();
    queue.pop_back();
    for (const Permutation& g : gens) {
      const unsigned ga = find(g[a]), gb = find(g[b]);
      if (ga != gb) {
        parent[gb] = ga;
        queue.emplace_back(ga, gb);
      }
    }
  }
  std::vector<int> block_of(degree, -1);
  std::vector<unsigned> result(degree);
  unsigned nblocks = 0;
  for (unsigned i = 0; i < degree; ++i) {
    const unsigned r = find(i);
    if (block_of[r] < 0) block_of[r] = static_cast<int>(nblocks++);
    result[i] = static_cast<unsigned>(block_of[r]);
  }
  if (nblocks == 1) return {};
  return result;
}

bool is_primitive(const std::vector<Permutation>& gens, unsigned degree) {
  for (unsigned k = 1; k < degree; ++k) {
    if (!minimal_block_system(gens, degree, 0, k).empty()) return false;
  }
  return true;
}

}  // namespace covernum
