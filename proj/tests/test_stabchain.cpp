#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <numeric>
#include <random>
#include <unordered_set>

#include "covernum/perm.hpp"
#include "covernum/stabchain.hpp"
#include "doctest.h"

using namespace covernum;

namespace {

// Independent oracle: exhaustive closure of a generator set.
std::size_t closure_order(const std::vector<Permutation>& gens, unsigned n,
                          std::size_t cap = 4000000) {
  std::unordered_set<Permutation, PermHash> seen;
  std::vector<Permutation> frontier{Permutation(n)};
  seen.insert(frontier.front());
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& e : frontier) {
      for (const auto& s : gens) {
        Permutation w = compose(e, s);
        if (seen.insert(w).second) {
          REQUIRE(seen.size() <= cap);
          next.push_back(std::move(w));
        }
      }
    }
    frontier = std::move(next);
  }
  return seen.size();
}

Permutation random_even(unsigned n, std::mt19937_64& rng) {
  std::vector<unsigned> img(n);
  std::iota(img.begin(), img.end(), 0u);
  for (unsigned i = n - 1; i > 0; --i) std::swap(img[i], img[rng() % (i + 1)]);
  auto p = Permutation::from_images(std::move(img));
  if (!p.even()) {
    auto img2 = p.images();
    std::swap(img2[0], img2[1]);
    p = Permutation::from_images(std::move(img2));
  }
  return p;
}

std::vector<Permutation> wreath_gens(unsigned bs, unsigned bc) {
  const unsigned n = bs * bc;
  std::vector<Permutation> w;
  std::vector<unsigned> img(n);
  auto reset = [&] { std::iota(img.begin(), img.end(), 0u); };
  reset();
  std::swap(img[0], img[1]);
  w.push_back(Permutation::from_images(img));
  reset();
  for (unsigned i = 0; i + 1 < bs; ++i) img[i] = i + 1;
  img[bs - 1] = 0;
  w.push_back(Permutation::from_images(img));
  reset();
  for (unsigned i = 0; i < bs; ++i) std::swap(img[i], img[bs + i]);
  w.push_back(Permutation::from_images(img));
  if (bc >= 3) {
    for (unsigned i = 0; i < n; ++i) img[i] = (i + bs) % n;
    w.push_back(Permutation::from_images(img));
  }
  return w;
}

}  // namespace

TEST_CASE("chain orders") {
  CHECK(StabilizerChain::build({}, 4).order() == 1);

  // closure oracle first, then the chain, per the A_5 pair
  const auto c5 = Permutation::parse("(1 2 3 4 5)", 5);
  const auto c3 = Permutation::parse("(1 2 3)", 5);
  CHECK(closure_order({c5, c3}, 5) == 60);
  CHECK(StabilizerChain::build({c5, c3}, 5).order() == 60);

  for (unsigned n : {4u, 5u, 6u, 7u}) {
    std::vector<unsigned> img(n);
    std::iota(img.begin(), img.end(), 0u);
    std::swap(img[0], img[1]);
    const auto t = Permutation::from_images(img);
    std::iota(img.begin(), img.end(), 0u);
    for (unsigned i = 0; i < n; ++i) img[i] = (i + 1) % n;
    const auto c = Permutation::from_images(img);
    CHECK(StabilizerChain::build({t, c}, n).order() == factorial(n));
  }

  // S_3 wr S_7 naturalized in S_21
  const auto w = wreath_gens(3, 7);
  CHECK(StabilizerChain::build(w, 21).order() == BigInt(1410877440ul));
}

TEST_CASE("membership") {
  const auto dbl = Permutation::parse("(1 2)(3 4)", 4);
  auto chain = StabilizerChain::build({dbl}, 4);
  CHECK(chain.contains(Permutation(4)));
  CHECK(chain.contains(dbl));
  CHECK_FALSE(chain.contains(Permutation::parse("(1 2)", 4)));

  // odd permutation never sits in a chain for A_n
  auto a6 = StabilizerChain::build(
      {Permutation::parse("(1 2 3)", 6), Permutation::parse("(2 3 4 5 6)", 6)}, 6);
  CHECK(a6.order() == 360);
  CHECK_FALSE(a6.contains(Permutation::parse("(1 2)", 6)));
  CHECK_THROWS(a6.contains(Permutation(5)));
}

TEST_CASE("generates_alternating examples") {
  const auto x = Permutation::parse("(1 2 3)", 5);
  const auto y = Permutation::parse("(3 4 5)", 5);
  CHECK(generates_alternating(x, y));
  CHECK_FALSE(generates_alternating(x, x));
  CHECK_FALSE(generates_alternating(Permutation::parse("(1 2 3)", 6),
                                    Permutation::parse("(4 5 6)", 6)));
  CHECK_THROWS(generates_alternating(Permutation::parse("(1 2)", 5),
                                     Permutation::parse("(1 2 3)", 5)));
  CHECK_THROWS(generates_alternating(x, Permutation::parse("(1 2 3)", 6)));
}

TEST_CASE("order divides n! and n!/2 for even generators; soak membership") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 25; ++trial) {
    const unsigned n = 4 + rng() % 5;
    std::vector<Permutation> gens{random_even(n, rng), random_even(n, rng)};
    auto chain = StabilizerChain::build(gens, n);
    const BigInt half = factorial(n) / 2;
    CHECK(factorial(n) % chain.order() == 0);
    CHECK(half % chain.order() == 0);  // all generators even
    // random subproducts stay inside
    Permutation w(n);
    for (int k = 0; k < 30; ++k) {
      w = compose(w, gens[rng() % gens.size()]);
      CHECK(chain.contains(w));
    }
  }
}

TEST_CASE("generates_alternating is symmetric and conjugation-invariant") {
  std::mt19937_64 rng(123);
  for (int trial = 0; trial < 40; ++trial) {
    const unsigned n = 5 + rng() % 3;
    const auto x = random_even(n, rng);
    const auto y = random_even(n, rng);
    const bool xy = generates_alternating(x, y);
    CHECK(xy == generates_alternating(y, x));
    std::vector<unsigned> img(n);
    std::iota(img.begin(), img.end(), 0u);
    for (unsigned i = n - 1; i > 0; --i) std::swap(img[i], img[rng() % (i + 1)]);
    const auto t = Permutation::from_images(std::move(img));
    CHECK(xy == generates_alternating(conjugate(x, t), conjugate(y, t)));
  }
}

TEST_CASE("agreement with exhaustive closure oracle for degree <= 7") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 15; ++trial) {
    const unsigned n = 5 + rng() % 3;
    const auto x = random_even(n, rng);
    const auto y = random_even(n, rng);
    const bool via_chain = generates_alternating(x, y);
    const bool via_closure = closure_order({x, y}, n) * 2 == factorial(n).get_ui();
    CHECK(via_chain == via_closure);
    CHECK(StabilizerChain::build({x, y}, n).order().get_ui() == closure_order({x, y}, n));
  }
}

TEST_CASE("block systems and primitivity") {
  const auto w = wreath_gens(3, 2);  // blocks {1,2,3},{4,5,6}
  const auto sys = minimal_block_system(w, 6, 0, 1);
  REQUIRE(!sys.empty());
  CHECK(sys[0] == sys[1]);
  CHECK(sys[0] == sys[2]);
  CHECK(sys[0] != sys[3]);
  CHECK_FALSE(is_primitive(w, 6));
  CHECK(is_primitive({Permutation::parse("(1 2 3 4 5)", 5),
                      Permutation::parse("(1 2 3)", 5)}, 5));
}
