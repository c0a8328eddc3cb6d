#include "covernum/catalog.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "covernum/stabchain.hpp"
#include "json.hpp"

namespace covernum {

extern const char* kEmbeddedPrimitiveTable;  // generated, degrees 5..21

namespace {

using nlohmann::json;

PrimitiveEntry parse_entry(const json& e) {
  PrimitiveEntry out;
  out.label = e.at("label").get<std::string>();
  out.order = BigInt(e.at("order").get<std::string>());
  for (const auto& g : e.at("generators")) out.generator_strings.push_back(g.get<std::string>());
  if (e.contains("normalizer_order"))
    out.normalizer_order = BigInt(e.at("normalizer_order").get<std::string>());
  if (e.contains("maximal")) out.maximal = e.at("maximal").get<bool>();
  if (e.contains("sn_class_of")) out.sn_class_of = e.at("sn_class_of").get<std::string>();
  if (e.contains("sn_conjugacy_witness"))
    out.sn_conjugacy_witness = e.at("sn_conjugacy_witness").get<std::string>();
  return out;
}

}  // namespace

static PrimitiveTable parse_table(const std::string& text, const std::string& what) {
  PrimitiveTable out;
  json j;
  try {
    j = json::parse(text);
  } catch (const std::exception& ex) {
    throw std::runtime_error("primitive table " + what + ": malformed JSON: " + ex.what());
  }
  std::string version = j.value("version", std::string("unversioned"));
  std::map<unsigned, std::vector<PrimitiveEntry>> by_degree, twins;
  for (const auto& t : j.at("tables")) {
    const unsigned deg = t.at("degree").get<unsigned>();
    by_degree[deg];  // degree key present even with zero entries
    twins[deg];
    for (const auto& e : t.at("entries")) {
      PrimitiveEntry pe = parse_entry(e);
      if (pe.sn_class_of.empty())
        by_degree[deg].push_back(std::move(pe));
      else
        twins[deg].push_back(std::move(pe));
    }
  }
  return PrimitiveTable::make(version, std::move(by_degree), std::move(twins));
}

PrimitiveTable PrimitiveTable::make(std::string version,
                                    std::map<unsigned, std::vector<PrimitiveEntry>> by_degree,
                                    std::map<unsigned, std::vector<PrimitiveEntry>> twins) {
  PrimitiveTable t;
  t.version_ = std::move(version);
  t.by_degree_ = std::move(by_degree);
  t.twins_ = std::move(twins);
  return t;
}

PrimitiveTable PrimitiveTable::embedded() {
  return parse_table(kEmbeddedPrimitiveTable, "(embedded)");
}

PrimitiveTable PrimitiveTable::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("primitive table: cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_table(ss.str(), path);
}

void PrimitiveTable::merge(const PrimitiveTable& other) {
  for (const auto& [deg, entries] : other.by_degree_) {
    by_degree_[deg] = entries;
    auto it = other.twins_.find(deg);
    twins_[deg] = (it == other.twins_.end()) ? std::vector<PrimitiveEntry>{} : it->second;
  }
  if (!other.version_.empty()) version_ = other.version_;
}

bool PrimitiveTable::has_degree(unsigned n) const { return by_degree_.count(n) > 0; }

const std::vector<PrimitiveEntry>& PrimitiveTable::entries(unsigned n) const {
  auto it = by_degree_.find(n);
  if (it == by_degree_.end())
    throw std::runtime_error("primitive table missing for degree " + std::to_string(n));
  return it->second;
}

const std::vector<PrimitiveEntry>& PrimitiveTable::twins(unsigned n) const {
  static const std::vector<PrimitiveEntry> empty;
  auto it = twins_.find(n);
  return it == twins_.end() ? empty : it->second;
}

std::vector<unsigned> PrimitiveTable::degrees() const {
  std::vector<unsigned> out;
  for (const auto& [d, _] : by_degree_) out.push_back(d);
  return out;
}

void PrimitiveTable::verify_degree(unsigned n) const {
  auto check = [&](const PrimitiveEntry& e) {
    std::vector<Permutation> gens;
    for (const auto& s : e.generator_strings) {
      Permutation g = Permutation::parse(s, n);
      if (!g.even())
        throw std::runtime_error("primitive table: odd generator in " + e.label);
      gens.push_back(std::move(g));
    }
    auto chain = StabilizerChain::build(gens, n);
    if (chain.order() != e.order)
      throw std::runtime_error("primitive table: order mismatch for " + e.label +
                               " (declared " + e.order.get_str() + ", computed " +
                               chain.order().get_str() + ")");
    if (!chain.is_transitive())
      throw std::runtime_error("primitive table: " + e.label + " is not transitive");
    if (!is_primitive(gens, n))
      throw std::runtime_error("primitive table: " + e.label + " is not primitive");
  };
  for (const auto& e : entries(n)) check(e);
  for (const auto& e : twins(n)) check(e);
}

std::string SubgroupDescriptor::label() const {
  switch (kind) {
    case SubgroupKind::Intransitive:
      return "intransitive(" + std::to_string(a) + ")";
    case SubgroupKind::Imprimitive:
      return "imprimitive(" + std::to_string(block_size) + "," + std::to_string(block_count) + ")";
    case SubgroupKind::Primitive:
      return "primitive:" + primitive.label;
  }
  return "?";
}

std::vector<SubgroupDescriptor> enumerate_maximal_classes(unsigned n, const PrimitiveTable& table) {
  if (n < 5) throw std::invalid_argument("enumerate_maximal_classes: degree must be >= 5");
  std::vector<SubgroupDescriptor> out;
  for (unsigned a = 1; 2 * a < n; ++a) {
    SubgroupDescriptor d;
    d.kind = SubgroupKind::Intransitive;
    d.degree = n;
    d.a = a;
    out.push_back(std::move(d));
  }
  for (unsigned bs = 2; bs <= n / 2; ++bs) {
    if (n % bs) continue;
    const unsigned bc = n / bs;
    if (bc < 2) continue;
    SubgroupDescriptor d;
    d.kind = SubgroupKind::Imprimitive;
    d.degree = n;
    d.block_size = bs;
    d.block_count = bc;
    // Known exception: (S_2 wr S_4) cap A_8 sits inside AGL(3,2); the class
    // still exists and all counting predicates apply to it.
    if (n == 8 && bs == 2) d.maximal = false;
    out.push_back(std::move(d));
  }
  for (const auto& e : table.entries(n)) {
    SubgroupDescriptor d;
    d.kind = SubgroupKind::Primitive;
    d.degree = n;
    d.primitive = e;
    d.maximal = e.maximal;
    out.push_back(std::move(d));
  }
  return out;
}

BigInt normalizer_order(const SubgroupDescriptor& d) {
  switch (d.kind) {
    case SubgroupKind::Intransitive:
      return factorial(d.a) * factorial(d.degree - d.a);
    case SubgroupKind::Imprimitive:
      return pow_big(factorial(d.block_size), d.block_count) * factorial(d.block_count);
    case SubgroupKind::Primitive:
      if (d.primitive.normalizer_order == 0)
        throw std::runtime_error("primitive table entry lacks normalizer data: " + d.primitive.label);
      return d.primitive.normalizer_order;
  }
  throw std::logic_error("bad descriptor");
}

ClassStats class_stats(const SubgroupDescriptor& d) {
  ClassStats s;
  const unsigned n = d.degree;
  switch (d.kind) {
    case SubgroupKind::Intransitive:
      s.class_size = binomial(n, d.a);
      s.member_order = exact_div(factorial(d.a) * factorial(n - d.a), 2);
      return s;
    case SubgroupKind::Imprimitive: {
      const BigInt w = pow_big(factorial(d.block_size), d.block_count) * factorial(d.block_count);
      s.class_size = exact_div(factorial(n), w);
      s.member_order = exact_div(w, 2);
      return s;
    }
    case SubgroupKind::Primitive:
      s.class_size = exact_div(factorial(n), normalizer_order(d));
      s.member_order = d.primitive.order;
      return s;
  }
  throw std::logic_error("bad descriptor");
}

BigInt intransitive_contains_type(unsigned a, const CycleType& t) {
  // Subset-sum over cycles; cycles of equal length are interchangeable, so
  // count sub-multisets with binomial weights.
  std::vector<BigInt> ways(a + 1, 0);
  ways[0] = 1;
  std::size_t i = 0;
  while (i < t.parts.size()) {
    const unsigned v = t.parts[i];
    unsigned k = 0;
    while (i < t.parts.size() && t.parts[i] == v) {
      ++k;
      ++i;
    }
    std::vector<BigInt> next(a + 1, 0);
    for (unsigned c = 0; c <= k; ++c) {
      const BigInt w = binomial(k, c);
      const unsigned long add = static_cast<unsigned long>(c) * v;
      for (unsigned s = 0; s + add <= a; ++s) {
        if (ways[s] != 0) next[s + add] += ways[s] * w;
      }
    }
    ways.swap(next);
  }
  return ways[a];
}

bool stabilizes_three_blocks(const CycleType& t, unsigned m) {
  if (t.num_parts() != 3) throw std::invalid_argument("stabilizes_three_blocks: need 3 parts");
  if (m % 3 || t.degree() != m) throw std::invalid_argument("stabilizes_three_blocks: bad degree");
  const unsigned a = t.parts[0], b = t.parts[1], c = t.parts[2];
  const unsigned q = m / 3;
  if (a == q && b == q && c == q) return true;
  const unsigned g = std::gcd(a, std::gcd(b, c));
  if (g % 3 == 0) return true;
  if (a == 2 * q || b == 2 * q || c == 2 * q) return true;
  auto even2 = [](unsigned x, unsigned y) { return x % 2 == 0 && y % 2 == 0; };
  if ((a == q && even2(b, c)) || (b == q && even2(a, c)) || (c == q && even2(a, b))) return true;
  return false;
}

BigInt count_ncycles_in_imprimitive(unsigned n, unsigned m) {
  if (m <= 1 || m >= n || n % m) throw std::invalid_argument("count_ncycles_in_imprimitive: bad m");
  const BigInt w = pow_big(factorial(n / m), m) * factorial(m);
  return exact_div(w, n);  // throws if not divisible (internal consistency)
}

namespace {

// Set partitions of {0..k-1} as group-id vectors, k small.
void set_partitions(unsigned k, std::vector<std::vector<unsigned>>& out) {
  std::vector<unsigned> assign(k, 0);
  std::function<void(unsigned, unsigned)> rec = [&](unsigned i, unsigned maxg) {
    if (i == k) {
      out.push_back(assign);
      return;
    }
    for (unsigned g = 0; g <= maxg; ++g) {
      assign[i] = g;
      rec(i + 1, std::max(maxg, g + 1));
    }
  };
  rec(0, 0);
}

}  // namespace

BigInt imprimitive_contains_count(unsigned block_size, unsigned block_count, const CycleType& t) {
  const unsigned k = static_cast<unsigned>(t.num_parts());
  if (k > 3)
    throw std::invalid_argument("imprimitive_contains_count: unsupported shape (more than 3 parts)");
  if (t.degree() != block_size * block_count)
    throw std::invalid_argument("imprimitive_contains_count: degree mismatch");
  // An invariant block system decomposes into block orbits; each orbit's
  // support is a union of cycles, the orbit length L satisfies L*d = sum of
  // those cycle lengths and L divides each of them, and the orbit contributes
  // L^(r-1) distinct systems for r cycles in the group.
  std::vector<std::vector<unsigned>> partitions;
  set_partitions(k, partitions);
  BigInt total = 0;
  for (const auto& assign : partitions) {
    const unsigned ngroups = *std::max_element(assign.begin(), assign.end()) + 1;
    BigInt prod = 1;
    bool ok = true;
    for (unsigned g = 0; g < ngroups && ok; ++g) {
      unsigned long sum = 0;
      unsigned count = 0;
      for (unsigned i = 0; i < k; ++i) {
        if (assign[i] == g) {
          sum += t.parts[i];
          ++count;
        }
      }
      if (sum % block_size) {
        ok = false;
        break;
      }
      const unsigned long L = sum / block_size;
      for (unsigned i = 0; i < k; ++i) {
        if (assign[i] == g && t.parts[i] % L) {
          ok = false;
          break;
        }
      }
      if (ok && count > 1) prod *= pow_big(BigInt(static_cast<unsigned long>(L)), count - 1);
    }
    if (ok) total += prod;
  }
  return total;
}

namespace {

// Generators of the even part of <gens>: Schreier generators for the
// index-2 subgroup w.r.t. the transversal {1, t} with t an odd generator.
std::vector<Permutation> even_part(const std::vector<Permutation>& gens) {
  const Permutation* odd = nullptr;
  for (const auto& g : gens) {
    if (!g.even()) {
      odd = &g;
      break;
    }
  }
  if (!odd) return gens;
  const Permutation t = *odd;
  const Permutation tinv = t.inverse();
  std::vector<Permutation> out;
  for (const auto& s : gens) {
    if (s.even()) {
      out.push_back(s);
      out.push_back(compose(compose(t, s), tinv));
    } else {
      out.push_back(compose(s, tinv));
      out.push_back(compose(t, s));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  std::erase_if(out, [](const Permutation& p) { return p.is_identity(); });
  return out;
}

Permutation transposition(unsigned n, unsigned i, unsigned j) {
  std::vector<unsigned> img(n);
  std::iota(img.begin(), img.end(), 0u);
  std::swap(img[i], img[j]);
  return Permutation::from_images(std::move(img));
}

Permutation range_cycle(unsigned n, unsigned lo, unsigned hi) {  // (lo lo+1 .. hi)
  std::vector<unsigned> img(n);
  std::iota(img.begin(), img.end(), 0u);
  for (unsigned i = lo; i < hi; ++i) img[i] = i + 1;
  img[hi] = lo;
  return Permutation::from_images(std::move(img));
}

}  // namespace

std::vector<Permutation> concrete_generators(const SubgroupDescriptor& d) {
  const unsigned n = d.degree;
  switch (d.kind) {
    case SubgroupKind::Intransitive: {
      std::vector<Permutation> w;
      if (d.a >= 2) {
        w.push_back(transposition(n, 0, 1));
        if (d.a >= 3) w.push_back(range_cycle(n, 0, d.a - 1));
      }
      const unsigned b = n - d.a;
      if (b >= 2) {
        w.push_back(transposition(n, d.a, d.a + 1));
        if (b >= 3) w.push_back(range_cycle(n, d.a, n - 1));
      }
      return even_part(w);
    }
    case SubgroupKind::Imprimitive: {
      const unsigned bs = d.block_size, bc = d.block_count;
      std::vector<Permutation> w;
      if (bs >= 2) {
        w.push_back(transposition(n, 0, 1));
        if (bs >= 3) w.push_back(range_cycle(n, 0, bs - 1));
      }
      {  // swap blocks 0 and 1 pointwise
        std::vector<unsigned> img(n);
        std::iota(img.begin(), img.end(), 0u);
        for (unsigned i = 0; i < bs; ++i) std::swap(img[i], img[bs + i]);
        w.push_back(Permutation::from_images(std::move(img)));
      }
      if (bc >= 3) {  // cycle the blocks
        std::vector<unsigned> img(n);
        for (unsigned i = 0; i < n; ++i) img[i] = (i + bs) % n;
        w.push_back(Permutation::from_images(std::move(img)));
      }
      return even_part(w);
    }
    case SubgroupKind::Primitive: {
      std::vector<Permutation> out;
      for (const auto& s : d.primitive.generator_strings) out.push_back(Permutation::parse(s, n));
      return out;
    }
  }
  throw std::logic_error("bad descriptor");
}

BigInt sn_class_size(const CycleType& t) {
  const unsigned n = t.degree();
  BigInt denom = 1;
  std::size_t i = 0;
  while (i < t.parts.size()) {
    const unsigned v = t.parts[i];
    unsigned k = 0;
    while (i < t.parts.size() && t.parts[i] == v) {
      ++k;
      ++i;
    }
    denom *= pow_big(v, k) * factorial(k);
  }
  return exact_div(factorial(n), denom);
}

bool an_class_splits(const CycleType& t) {
  for (std::size_t i = 0; i < t.parts.size(); ++i) {
    if (t.parts[i] % 2 == 0) return false;
    if (i && t.parts[i] == t.parts[i - 1]) return false;
  }
  return true;
}

}  // namespace covernum
