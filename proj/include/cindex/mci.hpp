#pragma once

// Maximum centralizer index, prime graph, bad primes and the bound ledger.
//
//   mci(G) = max { |C_G(g) : <g>| : g in G \ Z(G) }   for non-abelian G.

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "cindex/arith.hpp"
#include "cindex/pgroup.hpp"
#include "cindex/structure.hpp"

namespace cindex {

using BigInt = boost::multiprecision::cpp_int;

class AbelianGroupError : public GroupError {
 public:
  AbelianGroupError() : GroupError("invariant undefined: the group is abelian") {}
};

/// Conjugacy classes as class ids per element; class ids are assigned in order
/// of each class's smallest element.
struct ConjugacyClasses {
  std::vector<index_t> class_of;
  std::vector<std::size_t> size;
  std::vector<index_t> min_element;
};

inline ConjugacyClasses conjugacy_classes(const Group& g) {
  constexpr index_t kUnset = ~index_t{0};
  ConjugacyClasses cc;
  cc.class_of.assign(g.order(), kUnset);
  std::vector<index_t> orbit;
  for (index_t x = 0; x < g.order(); ++x) {
    if (cc.class_of[x] != kUnset) continue;
    const auto id = static_cast<index_t>(cc.size.size());
    orbit.assign(1, x);
    cc.class_of[x] = id;
    for (std::size_t head = 0; head < orbit.size(); ++head)
      for (auto s : g.generators()) {
        const index_t y = g.conjugate(orbit[head], s);
        if (cc.class_of[y] == kUnset) {
          cc.class_of[y] = id;
          orbit.push_back(y);
        }
      }
    cc.size.push_back(orbit.size());
    cc.min_element.push_back(x);
  }
  return cc;
}

struct MciReport {
  std::uint64_t m = 0;
  ElementRef witness;
  bool is_abelian = false;
  std::optional<unsigned> k_exp;  // m = p^k when G is a p-group
};

/// |C_G(g)| = |G| / |g^G|, so one pass over conjugacy classes suffices.
/// The witness is the smallest element index attaining the maximum.
inline MciReport mci(const Group& g) {
  if (is_abelian(g)) throw AbelianGroupError();
  const auto cc = conjugacy_classes(g);
  std::uint64_t best = 0;
  index_t witness = 0;
  for (std::size_t c = 0; c < cc.size.size(); ++c) {
    if (cc.size[c] == 1) continue;  // central
    const index_t x = cc.min_element[c];
    const std::uint64_t cent = g.order() / cc.size[c];
    const std::uint64_t idx = cent / g.element_order(x);
    if (idx > best || (idx == best && x < witness)) {
      best = idx;
      witness = x;
    }
  }
  MciReport r;
  r.m = best;
  r.witness = g.element(witness);
  if (auto pp = small_prime_power(g.order())) {
    unsigned k = 0;
    std::uint64_t t = 1;
    while (t < best) {
      t *= pp->first;
      ++k;
    }
    if (t == best) r.k_exp = k;
  }
  return r;
}

struct PrimeGraph {
  std::vector<std::uint64_t> vertices;
  std::vector<std::vector<bool>> adjacent;  // indexed like `vertices`
  std::vector<std::vector<std::uint64_t>> components;
  std::vector<std::uint64_t> isolated;

  bool connected(std::uint64_t p, std::uint64_t q) const {
    auto ip = std::find(vertices.begin(), vertices.end(), p);
    auto iq = std::find(vertices.begin(), vertices.end(), q);
    if (ip == vertices.end() || iq == vertices.end()) return false;
    return adjacent[ip - vertices.begin()][iq - vertices.begin()];
  }
  bool is_isolated(std::uint64_t p) const { return std::find(isolated.begin(), isolated.end(), p) != isolated.end(); }
};

/// Gruenberg-Kegel graph from the element-order multiset: p ~ q iff some
/// element order is divisible by pq.
inline PrimeGraph prime_graph(const Group& g) {
  if (g.order() == 1) throw GroupError("prime graph of the trivial group has no vertices");
  PrimeGraph pg;
  pg.vertices = prime_divisors(g.order());
  const std::size_t v = pg.vertices.size();
  pg.adjacent.assign(v, std::vector<bool>(v, false));
  std::vector<bool> seen_order(g.order() + 1, false);
  for (index_t x = 0; x < g.order(); ++x) seen_order[g.element_order(x)] = true;
  for (std::size_t o = 1; o <= g.order(); ++o) {
    if (!seen_order[o]) continue;
    for (std::size_t i = 0; i < v; ++i)
      for (std::size_t j = i + 1; j < v; ++j)
        if (o % (pg.vertices[i] * pg.vertices[j]) == 0) pg.adjacent[i][j] = pg.adjacent[j][i] = true;
  }
  std::vector<std::size_t> root(v);
  std::iota(root.begin(), root.end(), 0);
  auto find = [&](std::size_t a) {
    while (root[a] != a) a = root[a] = root[root[a]];
    return a;
  };
  for (std::size_t i = 0; i < v; ++i)
    for (std::size_t j = i + 1; j < v; ++j)
      if (pg.adjacent[i][j]) root[find(j)] = find(i);
  std::vector<std::ptrdiff_t> comp_of(v, -1);
  for (std::size_t i = 0; i < v; ++i) {
    const auto r = find(i);
    if (comp_of[r] < 0) {
      comp_of[r] = static_cast<std::ptrdiff_t>(pg.components.size());
      pg.components.emplace_back();
    }
    pg.components[comp_of[r]].push_back(pg.vertices[i]);
  }
  for (std::size_t i = 0; i < v; ++i)
    if (std::none_of(pg.adjacent[i].begin(), pg.adjacent[i].end(), [](bool b) { return b; }))
      pg.isolated.push_back(pg.vertices[i]);
  return pg;
}

/// pi*(G): primes p whose Sylow P has order p and C_G(P) = P Z(G). Ascending.
inline std::vector<std::uint64_t> bad_primes(const Group& g) {
  if (is_abelian(g)) throw AbelianGroupError();
  std::vector<std::uint64_t> out;
  const Subgroup z = center(g);
  for (auto [p, e] : factorize(g.order())) {
    if (e != 1) continue;
    const Subgroup s = sylow(g, p);
    if (centralizer(g, s) == join(s, z)) out.push_back(p);
  }
  return out;
}

/// For centerless G: pi*(G) equals the primes dividing |G| exactly once that
/// are isolated in the prime graph.
inline bool isolated_equivalence_check(const Group& g) {
  if (!center(g).is_trivial()) throw GroupError("isolated-vertex check requires a trivial center");
  if (g.order() == 1) return true;
  const auto pg = prime_graph(g);
  std::vector<std::uint64_t> expected;
  for (auto [p, e] : factorize(g.order()))
    if (e == 1 && pg.is_isolated(p)) expected.push_back(p);
  return bad_primes(g) == expected;
}

/// With pi*(G) nonempty: G/Z(G) is centerless, pi*(G) is contained in
/// pi*(G/Z(G)), and the image of each bad Sylow is self-centralizing.
inline bool reduction_check(const Group& g) {
  const auto pis = bad_primes(g);
  if (pis.empty()) throw GroupError("reduction check requires a nonempty set of bad primes");
  const Subgroup z = center(g);
  const QuotientResult q = quotient(g, z);
  const Group& gbar = q.quotient;
  if (!center(gbar).is_trivial()) return false;
  if (is_abelian(gbar)) return false;
  const auto pis_bar = bad_primes(gbar);
  for (auto p : pis) {
    if (!std::binary_search(pis_bar.begin(), pis_bar.end(), p)) return false;
    const Subgroup pbar = image(q, sylow(g, p));
    if (!(centralizer(gbar, pbar) == pbar)) return false;
  }
  return true;
}

inline BigInt big_pow(BigInt b, unsigned e) {
  BigInt r = 1;
  while (e--) r *= b;
  return r;
}

/// prod over primes p <= max(m, 2) of 8 m^4.
inline BigInt f0_explicit(std::uint64_t m) {
  const BigInt factor = 8 * big_pow(BigInt(m), 4);
  BigInt r = 1;
  for (std::uint64_t p = 2; p <= std::max<std::uint64_t>(m, 2); ++p)
    if (is_small_prime(p)) r *= factor;
  return r;
}

inline const BigInt& j4_bad_prime_product() {
  static const BigInt v = BigInt(23) * 29 * 31 * 37 * 43;
  return v;
}

/// Order 8, non-abelian, exactly one involution.
inline bool looks_like_q8(const Group& g) {
  if (g.order() != 8 || is_abelian(g)) return false;
  int involutions = 0;
  for (index_t x = 0; x < g.order(); ++x) involutions += g.element_order(x) == 2;
  return involutions == 1;
}

struct ClaimRecord {
  std::string claim;   // TA, P1, SR, T2, TB, PS
  std::string detail;  // e.g. "p=2"
  BigInt lhs;
  BigInt rhs;
  bool holds = false;
  std::string exemption;
};

struct BoundLedger {
  std::uint64_t m = 0;
  std::vector<ClaimRecord> records;
  std::vector<std::uint64_t> pi_star;
  BigInt f0;
  BigInt f1;
  BigInt product_pi_star;
  BigInt general_bound;  // product_pi_star * f1, with the |pi*| = 5 constant folded into f1

  bool all_hold() const {
    return std::all_of(records.begin(), records.end(), [](const ClaimRecord& r) { return r.holds; });
  }
};

namespace detail {

inline ClaimRecord le_record(std::string claim, std::string detail, BigInt lhs, BigInt rhs) {
  ClaimRecord r{std::move(claim), std::move(detail), std::move(lhs), std::move(rhs), false, {}};
  r.holds = r.lhs <= r.rhs;
  return r;
}

}  // namespace detail

inline BoundLedger build_ledger(const Group& g) {
  const MciReport rep = mci(g);
  const std::uint64_t m = rep.m;
  BoundLedger L;
  L.m = m;
  L.pi_star = bad_primes(g);
  L.f0 = f0_explicit(m);
  L.f1 = L.f0;
  L.product_pi_star = 1;
  for (auto p : L.pi_star) L.product_pi_star *= p;
  L.general_bound = L.product_pi_star * L.f1;
  if (L.pi_star.size() == 5) L.general_bound = L.f1 * j4_bad_prime_product();

  if (auto pp = small_prime_power(g.order())) {
    const std::uint64_t p = pp->first;
    // m is a power of p for p-groups.
    const unsigned k = rep.k_exp.value_or(0);
    auto r = detail::le_record("TA", "p=" + std::to_string(p) + ",k=" + std::to_string(k), BigInt(g.order()),
                               big_pow(BigInt(p), 2 * k + 2));
    if (!rep.k_exp) r.holds = false;
    if (!r.holds && looks_like_q8(g)) {
      r.holds = true;
      r.exemption = "Q8";
    }
    L.records.push_back(std::move(r));
  }

  const BigInt m4 = big_pow(BigInt(m), 4);
  for (auto [p, e] : factorize(g.order())) {
    const Subgroup s = sylow(g, p);
    if (is_abelian(s)) continue;
    const std::string d = "p=" + std::to_string(p);
    L.records.push_back(detail::le_record("P1", d, BigInt(s.order()), 8 * m4));
    const MciReport sub = mci(as_group(s).group);
    L.records.push_back(detail::le_record("SR", d, BigInt(sub.m), BigInt(m)));
  }

  if (is_nilpotent(g)) L.records.push_back(detail::le_record("T2", "", BigInt(g.order()), 8 * m4 * m));

  L.records.push_back(detail::le_record("TB", "", BigInt(g.order()), L.product_pi_star * L.f0));

  const bool soluble = is_soluble(g);
  L.records.push_back(detail::le_record("PS", soluble ? "soluble" : "insoluble", BigInt(L.pi_star.size()),
                                        BigInt(soluble ? 2 : 5)));
  return L;
}

}  // namespace cindex
