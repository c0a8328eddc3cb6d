#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace covernum {

// Multiset of cycle lengths, sorted ascending, fixed points included.
struct CycleType {
  std::vector<unsigned> parts;

  CycleType() = default;
  explicit CycleType(std::vector<unsigned> p);

  unsigned degree() const;
  std::size_t num_parts() const { return parts.size(); }
  std::string str() const;  // "a+b+c"

  bool operator==(const CycleType&) const = default;
  bool operator<(const CycleType& o) const { return parts < o.parts; }
};

// A bijection of {1..n}. Stored 0-based; text I/O is 1-based cycle notation.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(unsigned degree);  // identity
  static Permutation from_images(std::vector<unsigned> images0);

  unsigned degree() const { return static_cast<unsigned>(img_.size()); }
  unsigned operator[](unsigned i) const { return img_[i]; }
  const std::vector<unsigned>& images() const { return img_; }

  bool is_identity() const;
  bool even() const;  // parity: (degree - #cycles) mod 2 == 0
  Permutation inverse() const;
  CycleType cycle_type() const;

  // Orbit partition of <p^m>; blocks and their points sorted ascending.
  std::vector<std::vector<unsigned>> orbits_of_power(unsigned m) const;

  Permutation power(long e) const;

  // "(1 2 3)(4 5)" with fixed points implicit; identity prints "()".
  static Permutation parse(const std::string& cycles, unsigned degree);
  std::string str() const;

  bool operator==(const Permutation&) const = default;
  bool operator<(const Permutation& o) const { return img_ < o.img_; }

 private:
  std::vector<unsigned> img_;
};

// Applies p first, then q: i -> q(p(i)). Degrees must match.
Permutation compose(const Permutation& p, const Permutation& q);

// by^-1 * p * by (p conjugated by `by`, left-to-right application).
Permutation conjugate(const Permutation& p, const Permutation& by);

// Helper for building test fixtures: a permutation with the given cycle
// lengths laid out consecutively on {1..n}: (1..a1)(a1+1..a1+a2)...
Permutation canonical_of_type(const CycleType& t);

struct PermHash {
  std::size_t operator()(const Permutation& p) const {
    std::size_t h = 1469598103934665603ull;
    for (unsigned v : p.images()) {
      h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }
};

}  // namespace covernum
