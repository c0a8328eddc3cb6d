#include "covernum/extremal.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <random>
#include <stdexcept>
#include <thread>

#include "covernum/catalog.hpp"
#include "covernum/stabchain.hpp"

namespace covernum {

unsigned smallest_prime_divisor(unsigned n) {
  for (unsigned d = 2; d * d <= n; ++d) {
    if (n % d == 0) return d;
  }
  return n;
}

namespace {

bool is_odd_composite(unsigned n) {
  return n % 2 == 1 && smallest_prime_divisor(n) != n;
}

// Bias-free bounded draw; distribution code is ours so streams are stable
// across platforms for a fixed seed.
unsigned long bounded(std::mt19937_64& rng, unsigned long n) {
  const unsigned long limit = ~0ul - (~0ul % n);
  unsigned long v;
  do {
    v = rng();
  } while (v > limit);
  return v % n;
}

unsigned long splitmix(unsigned long x) {
  x += 0x9e3779b97f4a7c15ul;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ul;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebul;
  return x ^ (x >> 31);
}

// n-cycle through 0 followed by `order` on the remaining points.
Permutation cycle_from_order(unsigned n, const std::vector<unsigned>& order) {
  std::vector<unsigned> img(n);
  unsigned prev = 0;
  for (unsigned v : order) {
    img[prev] = v;
    prev = v;
  }
  img[prev] = 0;
  return Permutation::from_images(std::move(img));
}

// Fingerprint of the orbit partition of x^p: smallest point of each orbit.
std::vector<unsigned> cell_fingerprint(const Permutation& x, unsigned p) {
  const Permutation xp = x.power(p);
  std::vector<unsigned> rep(x.degree());
  std::vector<bool> seen(x.degree(), false);
  for (unsigned i = 0; i < x.degree(); ++i) {
    if (seen[i]) continue;
    unsigned j = i;
    while (!seen[j]) {
      seen[j] = true;
      rep[j] = i;
      j = xp[j];
    }
  }
  return rep;
}

struct NeighborCounts {
  unsigned long k = 0;
  DegreeBreakdown breakdown;
};

// Is y a neighbor of x in the non-generation graph, and if so of which kind?
// Same-cell pairs are excluded by definition.
bool neighbor_kind(const Permutation& x, const Permutation& y, unsigned p,
                   const std::vector<unsigned>& x_cell, const BigInt& half_fact,
                   bool& imprimitive_witness) {
  if (x == y) return false;
  if (cell_fingerprint(y, p) == x_cell) return false;
  auto chain = StabilizerChain::build({x, y}, x.degree());
  if (chain.order() == half_fact) return false;
  imprimitive_witness = !is_primitive({x, y}, x.degree());
  return true;
}

}  // namespace

HaxellResult haxell_exact(unsigned n, unsigned num_bases, unsigned threads) {
  if (!is_odd_composite(n)) throw std::invalid_argument("haxell: n must be odd composite");
  if (n > 9)
    throw std::invalid_argument("haxell: exact mode limited to n = 9; use sampling");
  if (num_bases == 0) num_bases = 1;
  if (threads == 0) threads = 1;
  const unsigned p = smallest_prime_divisor(n);

  HaxellResult res;
  res.n = n;
  res.p = p;
  res.exact = true;
  res.cell_size = count_ncycles_in_imprimitive(n, p);

  // All n-cycles: orderings of {1..n-1} after the fixed point 0.
  std::vector<unsigned> order(n - 1);
  std::iota(order.begin(), order.end(), 1u);
  std::vector<std::vector<unsigned>> all_orders;
  do {
    all_orders.push_back(order);
  } while (std::next_permutation(order.begin(), order.end()));
  res.candidates = all_orders.size();

  const BigInt half_fact = exact_div(factorial(n), 2);
  std::mt19937_64 rng(2024);
  Permutation base = cycle_from_order(n, all_orders.front());

  for (unsigned b = 0; b < num_bases; ++b) {
    Permutation x = base;
    if (b > 0) {
      // conjugate base vertex by a random even permutation
      Permutation t(n);
      for (unsigned i = n - 1; i > 0; --i) {
        std::vector<unsigned> img = t.images();
        std::swap(img[i], img[bounded(rng, i + 1)]);
        t = Permutation::from_images(std::move(img));
      }
      if (!t.even()) {
        std::vector<unsigned> img = t.images();
        std::swap(img[0], img[1]);
        t = Permutation::from_images(std::move(img));
      }
      x = conjugate(base, t);
    }
    const auto x_cell = cell_fingerprint(x, p);

    std::vector<NeighborCounts> partial(threads);
    auto worker = [&](unsigned tid) {
      NeighborCounts local;
      for (std::size_t i = tid; i < all_orders.size(); i += threads) {
        const Permutation y = cycle_from_order(n, all_orders[i]);
        bool impr = false;
        if (neighbor_kind(x, y, p, x_cell, half_fact, impr)) {
          ++local.k;
          if (impr)
            ++local.breakdown.imprimitive;
          else
            ++local.breakdown.primitive;
        }
      }
      partial[tid] = local;
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker, t);
    worker(0);
    for (auto& th : pool) th.join();

    NeighborCounts total;
    for (const auto& c : partial) {
      total.k += c.k;
      total.breakdown.imprimitive += c.breakdown.imprimitive;
      total.breakdown.primitive += c.breakdown.primitive;
    }
    res.per_base.push_back(total.k);
    if (b == 0) {
      res.k = total.k;
      res.breakdown = total.breakdown;
    }
  }
  res.hypothesis_met = res.cell_size >= BigInt(2ul) * res.k;
  return res;
}

HaxellResult haxell_sample(unsigned n, unsigned long samples, unsigned long seed,
                           unsigned threads) {
  if (!is_odd_composite(n)) throw std::invalid_argument("haxell: n must be odd composite");
  if (threads == 0) threads = 1;
  const unsigned p = smallest_prime_divisor(n);

  HaxellResult res;
  res.n = n;
  res.p = p;
  res.exact = false;
  res.samples = samples;
  res.cell_size = count_ncycles_in_imprimitive(n, p);

  BigInt cand = factorial(n - 1);
  res.candidates =
      cand.fits_ulong_p() ? cand.get_ui() : 0;  // informational only at large n

  std::vector<unsigned> order0(n - 1);
  std::iota(order0.begin(), order0.end(), 1u);
  const Permutation x = cycle_from_order(n, order0);
  const auto x_cell = cell_fingerprint(x, p);
  const BigInt half_fact = exact_div(factorial(n), 2);

  std::vector<unsigned long> hit_by_thread(threads, 0);
  auto worker = [&](unsigned tid) {
    std::mt19937_64 rng(splitmix(seed + 0x1000 + tid));
    unsigned long hits = 0;
    const unsigned long my = samples / threads + (tid < samples % threads ? 1 : 0);
    std::vector<unsigned> order(n - 1);
    for (unsigned long s = 0; s < my; ++s) {
      std::iota(order.begin(), order.end(), 1u);
      for (unsigned i = n - 2; i > 0; --i)
        std::swap(order[i], order[bounded(rng, i + 1)]);
      const Permutation y = cycle_from_order(n, order);
      bool impr = false;
      if (neighbor_kind(x, y, p, x_cell, half_fact, impr)) ++hits;
    }
    hit_by_thread[tid] = hits;
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker, t);
  worker(0);
  for (auto& th : pool) th.join();
  res.hits = std::accumulate(hit_by_thread.begin(), hit_by_thread.end(), 0ul);

  // Wilson 95% interval on the neighbor proportion, scaled to (n-1)!.
  const double z = 1.959963985;
  const double ns = static_cast<double>(samples);
  const double ph = static_cast<double>(res.hits) / ns;
  const double denom = 1.0 + z * z / ns;
  const double center = (ph + z * z / (2 * ns)) / denom;
  const double half = z * std::sqrt(ph * (1 - ph) / ns + z * z / (4 * ns * ns)) / denom;
  const double total = mpz_get_d(factorial(n - 1).get_mpz_t());
  res.k = static_cast<unsigned long>(ph * total);
  res.k_lo = std::max(0.0, center - half) * total;
  res.k_hi = (center + half) * total;
  res.hypothesis_met = mpq_get_d(Rational(res.cell_size).get_mpq_t()) >= 2.0 * res.k_hi;
  return res;
}

DegreeBoundLedger degree_bound_ledger(unsigned n) {
  if (!is_odd_composite(n)) throw std::invalid_argument("bounds: n must be odd composite");
  DegreeBoundLedger out;
  out.n = n;
  out.p = smallest_prime_divisor(n);
  out.imprimitive_total = 0;
  for (unsigned m = 2; m < n; ++m) {
    if (n % m || m == out.p) continue;
    DivisorTerm t;
    t.m = m;
    t.cell = count_ncycles_in_imprimitive(n, m);
    out.imprimitive_total += t.cell;
    out.imprimitive_terms.push_back(std::move(t));
  }
  out.primitive_term = BigInt(n) * ceil_log2(n) * pow2(n);
  out.total = out.imprimitive_total + out.primitive_term;
  out.cell_size = count_ncycles_in_imprimitive(n, out.p);
  out.cell_over_bound = make_rat(out.cell_size, out.total);
  return out;
}

EvenCellReport even_case_cells(unsigned n) {
  if (n % 4 || n < 8) throw std::invalid_argument("even_case_cells: need n ≡ 0 mod 4, n >= 8");
  EvenCellReport out;
  out.n = n;
  out.s_size_formula = pow2(n - 2) - n;
  out.s_size_enumerated = 0;
  out.total_vertices = 0;
  for (unsigned a = 3; 2 * a < n; a += 2) {
    EvenCellReport::SizeClass c;
    c.a = a;
    c.subsets = binomial(n, a);
    c.cell_size = factorial(a - 1) * factorial(n - a - 1);
    out.s_size_enumerated += c.subsets;
    out.total_vertices += c.subsets * c.cell_size;
    out.cells.push_back(std::move(c));
  }
  if (out.s_size_formula != out.s_size_enumerated)
    throw std::logic_error("even_case_cells: |S| identity failed");
  return out;
}

EvenDegreeBound even_degree_bound(unsigned n, unsigned a) {
  if (n % 4) throw std::invalid_argument("even_degree_bound: need n ≡ 0 mod 4");
  if (a % 2 == 0 || a <= 1 || 2 * a >= n)
    throw std::invalid_argument("even_degree_bound: need a odd, 1 < a < n/2");
  EvenDegreeBound out;
  out.n = n;
  out.a = a;
  out.bound = 0;
  const unsigned g = std::gcd(a, n);
  for (unsigned r = 2; r <= g; ++r) {
    if (g % r) continue;
    out.divisors.push_back(r);
    out.bound += pow_big(factorial(r), n / r) * factorial(n / r);
    out.bound += BigInt(r) * pow_big(factorial(n / r), r) * factorial(r);
  }
  out.cell_size = factorial(a - 1) * factorial(n - a - 1);
  out.bound_over_cell = make_rat(out.bound, out.cell_size);
  return out;
}

namespace {

// Cells of the odd case: partitions of {0..n-1} into p blocks of n/p.
void enumerate_block_partitions(unsigned n, unsigned block, std::vector<unsigned>& cur,
                                std::vector<std::vector<unsigned>>& out) {
  // cur[i] = block id of point i or n for unset; first unset point anchors a block.
  unsigned first = n;
  for (unsigned i = 0; i < n; ++i) {
    if (cur[i] == n) {
      first = i;
      break;
    }
  }
  if (first == n) {
    out.push_back(cur);
    return;
  }
  unsigned bid = 0;
  for (unsigned i = 0; i < first; ++i) bid = std::max(bid, cur[i] + 1);
  cur[first] = bid;
  std::vector<unsigned> members{first};
  std::function<void(unsigned, unsigned)> pick = [&](unsigned from, unsigned left) {
    if (left == 0) {
      enumerate_block_partitions(n, block, cur, out);
      return;
    }
    for (unsigned i = from; i < n; ++i) {
      if (cur[i] != n) continue;
      cur[i] = bid;
      pick(i + 1, left - 1);
      cur[i] = n;
    }
  };
  pick(first + 1, block - 1);
  cur[first] = n;
}

std::string blocks_label(const std::vector<unsigned>& block_of, unsigned nblocks) {
  std::vector<std::vector<unsigned>> blocks(nblocks);
  for (unsigned i = 0; i < block_of.size(); ++i) blocks[block_of[i]].push_back(i + 1);
  std::string s;
  for (const auto& b : blocks) {
    s += '[';
    for (std::size_t i = 0; i < b.size(); ++i) {
      if (i) s += ' ';
      s += std::to_string(b[i]);
    }
    s += ']';
  }
  return s;
}

std::string subset_label(const std::vector<unsigned>& pts) {
  std::string s = "[";
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(pts[i] + 1);
  }
  return s + "]";
}

}  // namespace

TransversalResult greedy_transversal(unsigned n, unsigned long seed, unsigned budget) {
  TransversalResult res;
  res.n = n;
  std::mt19937_64 rng(splitmix(seed));

  struct Cell {
    std::string label;
    std::function<Permutation(std::mt19937_64&)> sample;
  };
  std::vector<Cell> cells;

  if (n % 2 == 1) {
    if (!is_odd_composite(n)) throw std::invalid_argument("transversal: bad degree");
    res.odd_case = true;
    const unsigned p = smallest_prime_divisor(n);
    const unsigned bs = n / p;
    std::vector<std::vector<unsigned>> partitions;
    std::vector<unsigned> cur(n, n);
    enumerate_block_partitions(n, bs, cur, partitions);
    for (const auto& block_of : partitions) {
      std::vector<std::vector<unsigned>> blocks(p);
      for (unsigned i = 0; i < n; ++i) blocks[block_of[i]].push_back(i);
      Cell c;
      c.label = blocks_label(block_of, p);
      c.sample = [blocks, n, p, bs](std::mt19937_64& r) {
        // n-cycle visiting the blocks cyclically; its p-th power's orbits are
        // exactly the blocks.
        std::vector<std::vector<unsigned>> b = blocks;
        for (auto& blk : b)
          for (unsigned i = bs; i-- > 1;) std::swap(blk[i], blk[bounded(r, i + 1)]);
        std::vector<unsigned> order(p);
        std::iota(order.begin(), order.end(), 0u);
        for (unsigned i = p - 1; i > 0; --i) std::swap(order[i], order[bounded(r, i + 1)]);
        std::vector<unsigned> visit;
        for (unsigned k = 0; k < bs; ++k)
          for (unsigned j = 0; j < p; ++j) visit.push_back(b[order[j]][k]);
        std::vector<unsigned> img(n);
        for (unsigned i = 0; i < n; ++i) img[visit[i]] = visit[(i + 1) % n];
        return Permutation::from_images(std::move(img));
      };
      cells.push_back(std::move(c));
    }
  } else {
    if (n % 4) throw std::invalid_argument("transversal: even degree must be ≡ 0 mod 4");
    res.odd_case = false;
    std::vector<unsigned> pts;
    for (unsigned a = 3; 2 * a < n; a += 2) {
      std::vector<bool> mask(n, false);
      std::fill(mask.begin(), mask.begin() + a, true);
      // iterate a-subsets
      std::vector<unsigned> idx(a);
      std::iota(idx.begin(), idx.end(), 0u);
      while (true) {
        Cell c;
        std::vector<unsigned> delta = idx;
        c.label = subset_label(delta);
        c.sample = [delta, n](std::mt19937_64& r) {
          std::vector<bool> in(n, false);
          for (unsigned v : delta) in[v] = true;
          std::vector<unsigned> inside = delta, outside;
          for (unsigned i = 0; i < n; ++i)
            if (!in[i]) outside.push_back(i);
          for (unsigned i = static_cast<unsigned>(inside.size()); i-- > 1;)
            std::swap(inside[i], inside[bounded(r, i + 1)]);
          for (unsigned i = static_cast<unsigned>(outside.size()); i-- > 1;)
            std::swap(outside[i], outside[bounded(r, i + 1)]);
          std::vector<unsigned> img(n);
          for (std::size_t i = 0; i < inside.size(); ++i)
            img[inside[i]] = inside[(i + 1) % inside.size()];
          for (std::size_t i = 0; i < outside.size(); ++i)
            img[outside[i]] = outside[(i + 1) % outside.size()];
          return Permutation::from_images(std::move(img));
        };
        cells.push_back(std::move(c));
        // next combination
        int i = static_cast<int>(a) - 1;
        while (i >= 0 && idx[i] == n - a + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (unsigned j = i + 1; j < a; ++j) idx[j] = idx[j - 1] + 1;
      }
    }
  }

  res.cells = cells.size();
  const unsigned tries_per_cell = 40;

  for (unsigned attempt = 0; attempt <= budget; ++attempt) {
    std::vector<unsigned> order(cells.size());
    std::iota(order.begin(), order.end(), 0u);
    for (std::size_t i = cells.size(); i-- > 1;) std::swap(order[i], order[bounded(rng, i + 1)]);
    std::vector<Permutation> chosen;
    std::vector<std::string> labels;
    bool stuck = false;
    for (unsigned ci : order) {
      bool placed = false;
      for (unsigned t = 0; t < tries_per_cell && !placed; ++t) {
        Permutation cand = cells[ci].sample(rng);
        bool ok = true;
        for (const auto& prev : chosen) {
          ++res.pair_checks;
          if (!generates_alternating(cand, prev)) {
            ok = false;
            break;
          }
        }
        if (ok) {
          chosen.push_back(std::move(cand));
          labels.push_back(cells[ci].label);
          placed = true;
        }
      }
      if (!placed) {
        res.blocking_cell = cells[ci].label;
        stuck = true;
        break;
      }
    }
    if (!stuck) {
      res.success = true;
      res.chosen = std::move(chosen);
      res.cell_labels = std::move(labels);
      res.restarts = attempt;
      // Independent re-verification: fresh chains for every pair.
      res.certificate_verified = true;
      for (std::size_t i = 0; i < res.chosen.size() && res.certificate_verified; ++i)
        for (std::size_t j = i + 1; j < res.chosen.size(); ++j)
          if (!generates_alternating(res.chosen[i], res.chosen[j])) {
            res.certificate_verified = false;
            break;
          }
      return res;
    }
    res.restarts = attempt + 1;
  }
  return res;
}

BoundChainResult bound_chain(unsigned n) {
  if (!is_odd_composite(n)) throw std::invalid_argument("bound_chain: n must be odd composite");
  BoundChainResult out;
  out.n = n;
  out.p = smallest_prime_divisor(n);
  out.lower = exact_div(factorial(n), pow_big(factorial(n / out.p), out.p) * factorial(out.p));
  BigInt sum = 0;
  for (unsigned i = 1; i <= n / 3; ++i) sum += binomial(n, i);
  out.upper = out.lower + sum;
  out.three_n = pow_big(3, n);
  out.pp_exceeds_3n = out.lower > out.three_n;
  out.upper_over_lower = make_rat(out.upper, out.lower);
  return out;
}

}  // namespace covernum
