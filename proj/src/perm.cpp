#include "covernum/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace covernum {

CycleType::CycleType(std::vector<unsigned> p) : parts(std::move(p)) {
  for (unsigned x : parts) {
    if (x == 0) throw std::invalid_argument("CycleType: zero part");
  }
  std::sort(parts.begin(), parts.end());
}

unsigned CycleType::degree() const {
  return std::accumulate(parts.begin(), parts.end(), 0u);
}

std::string CycleType::str() const {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) s += '+';
    s += std::to_string(parts[i]);
  }
  return s;
}

Permutation::Permutation(unsigned degree) : img_(degree) {
  std::iota(img_.begin(), img_.end(), 0u);
}

Permutation Permutation::from_images(std::vector<unsigned> images0) {
  const auto n = images0.size();
  std::vector<bool> seen(n, false);
  for (unsigned v : images0) {
    if (v >= n || seen[v]) throw std::invalid_argument("not a bijection");
    seen[v] = true;
  }
  Permutation p;
  p.img_ = std::move(images0);
  return p;
}

bool Permutation::is_identity() const {
  for (unsigned i = 0; i < degree(); ++i) {
    if (img_[i] != i) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<unsigned> inv(degree());
  for (unsigned i = 0; i < degree(); ++i) inv[img_[i]] = i;
  Permutation p;
  p.img_ = std::move(inv);
  return p;
}

CycleType Permutation::cycle_type() const {
  std::vector<unsigned> parts;
  std::vector<bool> seen(degree(), false);
  for (unsigned i = 0; i < degree(); ++i) {
    if (seen[i]) continue;
    unsigned len = 0, j = i;
    while (!seen[j]) {
      seen[j] = true;
      j = img_[j];
      ++len;
    }
    parts.push_back(len);
  }
  return CycleType(std::move(parts));
}

bool Permutation::even() const {
  unsigned cycles = 0;
  std::vector<bool> seen(degree(), false);
  for (unsigned i = 0; i < degree(); ++i) {
    if (seen[i]) continue;
    ++cycles;
    unsigned j = i;
    while (!seen[j]) {
      seen[j] = true;
      j = img_[j];
    }
  }
  return ((degree() - cycles) & 1u) == 0;
}

std::vector<std::vector<unsigned>> Permutation::orbits_of_power(unsigned m) const {
  const Permutation pm = power(static_cast<long>(m));
  std::vector<std::vector<unsigned>> out;
  std::vector<bool> seen(degree(), false);
  for (unsigned i = 0; i < degree(); ++i) {
    if (seen[i]) continue;
    std::vector<unsigned> orb;
    unsigned j = i;
    while (!seen[j]) {
      seen[j] = true;
      orb.push_back(j);
      j = pm[j];
    }
    std::sort(orb.begin(), orb.end());
    out.push_back(std::move(orb));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Permutation Permutation::power(long e) const {
  Permutation base = *this;
  if (e < 0) {
    base = inverse();
    e = -e;
  }
  Permutation acc(degree());
  while (e > 0) {
    if (e & 1) acc = compose(acc, base);
    base = compose(base, base);
    e >>= 1;
  }
  return acc;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) throw std::invalid_argument("compose: degree mismatch");
  std::vector<unsigned> img(p.degree());
  for (unsigned i = 0; i < p.degree(); ++i) img[i] = q[p[i]];
  return Permutation::from_images(std::move(img));
}

Permutation conjugate(const Permutation& p, const Permutation& by) {
  return compose(compose(by.inverse(), p), by);
}

Permutation Permutation::parse(const std::string& cycles, unsigned degree) {
  std::vector<unsigned> img(degree);
  std::iota(img.begin(), img.end(), 0u);
  std::size_t i = 0;
  const auto skip_ws = [&] {
    while (i < cycles.size() && (cycles[i] == ' ' || cycles[i] == ',')) ++i;
  };
  skip_ws();
  while (i < cycles.size()) {
    if (cycles[i] != '(') throw std::invalid_argument("cycle notation: expected '('");
    ++i;
    std::vector<unsigned> cyc;
    skip_ws();
    while (i < cycles.size() && cycles[i] != ')') {
      if (!isdigit(static_cast<unsigned char>(cycles[i])))
        throw std::invalid_argument("cycle notation: expected digit");
      unsigned v = 0;
      while (i < cycles.size() && isdigit(static_cast<unsigned char>(cycles[i]))) {
        v = v * 10 + (cycles[i] - '0');
        ++i;
      }
      if (v == 0 || v > degree) throw std::invalid_argument("cycle notation: point out of range");
      cyc.push_back(v - 1);
      skip_ws();
    }
    if (i >= cycles.size()) throw std::invalid_argument("cycle notation: unterminated cycle");
    ++i;  // ')'
    for (std::size_t k = 0; k + 1 < cyc.size(); ++k) {
      if (img[cyc[k]] != cyc[k]) throw std::invalid_argument("cycle notation: repeated point");
      img[cyc[k]] = cyc[k + 1];
    }
    if (cyc.size() >= 2) {
      if (img[cyc.back()] != cyc.back()) throw std::invalid_argument("cycle notation: repeated point");
      img[cyc.back()] = cyc.front();
    }
    skip_ws();
  }
  return from_images(std::move(img));
}

std::string Permutation::str() const {
  std::string s;
  std::vector<bool> seen(degree(), false);
  for (unsigned i = 0; i < degree(); ++i) {
    if (seen[i] || img_[i] == i) {
      seen[i] = true;
      continue;
    }
    s += '(';
    unsigned j = i;
    bool first = true;
    while (!seen[j]) {
      if (!first) s += ' ';
      s += std::to_string(j + 1);
      seen[j] = true;
      first = false;
      j = img_[j];
    }
    s += ')';
  }
  if (s.empty()) s = "()";
  return s;
}

Permutation canonical_of_type(const CycleType& t) {
  std::vector<unsigned> img(t.degree());
  unsigned base = 0;
  for (unsigned len : t.parts) {
    for (unsigned k = 0; k < len; ++k) img[base + k] = base + (k + 1) % len;
    base += len;
  }
  return Permutation::from_images(std::move(img));
}

}  // namespace covernum
