#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <random>

#include "covernum/perm.hpp"
#include "doctest.h"

using namespace covernum;

namespace {

Permutation random_perm(unsigned n, std::mt19937_64& rng) {
  std::vector<unsigned> img(n);
  for (unsigned i = 0; i < n; ++i) img[i] = i;
  for (unsigned i = n - 1; i > 0; --i) std::swap(img[i], img[rng() % (i + 1)]);
  return Permutation::from_images(std::move(img));
}

}  // namespace

TEST_CASE("compose basics and convention") {
  const auto p = Permutation::parse("(1 2)", 3);
  const auto q = Permutation::parse("(2 3)", 3);
  const auto id = Permutation(3);
  CHECK(compose(id, p) == p);
  CHECK(compose(p, p.inverse()) == id);
  // compose applies the left argument first: (1 2) then (2 3) sends 1 to 3.
  CHECK(compose(p, q) == Permutation::parse("(1 3 2)", 3));
  // the mathematical composition (1 2) after (2 3) is the 3-cycle 1->2->3->1
  CHECK(compose(q, p) == Permutation::parse("(1 2 3)", 3));
}

TEST_CASE("compose rejects degree mismatch") {
  CHECK_THROWS(compose(Permutation(3), Permutation(4)));
}

TEST_CASE("cycle_type") {
  CHECK(Permutation(5).cycle_type() == CycleType({1, 1, 1, 1, 1}));
  CHECK(canonical_of_type(CycleType({21})).cycle_type() == CycleType({21}));
  const auto t = CycleType({4, 8, 9});
  CHECK(canonical_of_type(t).cycle_type() == t);
  CHECK(t.degree() == 21);
  CHECK(t.str() == "4+8+9");
}

TEST_CASE("parity") {
  CHECK(Permutation(4).even());
  CHECK(canonical_of_type(CycleType({9})).even());           // n-cycle, n odd
  CHECK_FALSE(canonical_of_type(CycleType({2, 3})).even());  // 1+2 transpositions
}

TEST_CASE("orbits_of_power") {
  const auto c9 = canonical_of_type(CycleType({9}));
  const auto orbits = c9.orbits_of_power(3);
  REQUIRE(orbits.size() == 3);
  CHECK(orbits[0] == std::vector<unsigned>{0, 3, 6});
  CHECK(orbits[1] == std::vector<unsigned>{1, 4, 7});
  CHECK(orbits[2] == std::vector<unsigned>{2, 5, 8});

  const auto c6 = canonical_of_type(CycleType({6}));
  const auto o2 = c6.orbits_of_power(2);
  REQUIRE(o2.size() == 2);
  CHECK(o2[0] == std::vector<unsigned>{0, 2, 4});
  CHECK(o2[1] == std::vector<unsigned>{1, 3, 5});
}

TEST_CASE("parser accepts fixed points implicitly and round-trips") {
  const auto p = Permutation::parse("(1 2 3)(4 5)", 7);
  CHECK(p[0] == 1);
  CHECK(p[5] == 5);
  CHECK(Permutation::parse(p.str(), 7) == p);
  CHECK(Permutation(6).str() == "()");
  CHECK_THROWS(Permutation::parse("(1 8)", 7));
  CHECK_THROWS(Permutation::parse("(1 2", 7));
  CHECK_THROWS(Permutation::parse("(1 2)(2 3)", 7));
}

TEST_CASE("properties on random permutations") {
  std::mt19937_64 rng(2718);
  for (int trial = 0; trial < 200; ++trial) {
    const unsigned n = 3 + rng() % 10;
    const auto p = random_perm(n, rng);
    const auto q = random_perm(n, rng);
    // conjugation preserves cycle type
    CHECK(conjugate(p, q).cycle_type() == p.cycle_type());
    // parity is a homomorphism
    CHECK(compose(p, q).even() == (p.even() == q.even()));
    // parts sum to the degree
    CHECK(p.cycle_type().degree() == n);
    // orbits of p^m refine orbits of p
    const unsigned m = 1 + rng() % 4;
    const auto coarse = p.orbits_of_power(1);
    for (const auto& fine : p.orbits_of_power(m)) {
      bool inside_one = false;
      for (const auto& big : coarse) {
        if (std::includes(big.begin(), big.end(), fine.begin(), fine.end())) {
          inside_one = true;
          break;
        }
      }
      CHECK(inside_one);
    }
  }
}
