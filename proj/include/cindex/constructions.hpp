#pragma once

// Direct realizations of standard families: no presentations, no coset
// enumeration. Up to the table limit, the pair (i, j) of a cyclic-by-cyclic
// product is element i + n * j.

#include <numeric>
#include <string>
#include <vector>

#include "cindex/arith.hpp"
#include "cindex/group.hpp"

namespace cindex {

inline std::uint64_t mod_pow(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  if (m == 1) return 0;
  unsigned __int128 r = 1, x = b % m;
  while (e) {
    if (e & 1) r = r * x % m;
    x = x * x % m;
    e >>= 1;
  }
  return static_cast<std::uint64_t>(r);
}

/// C_n x| C_m where the generator of C_m acts by a -> a^t.
struct SemidirectSpec {
  std::uint64_t n = 1;
  std::uint64_t m = 1;
  std::uint64_t t = 1;

  void validate() const {
    if (n == 0 || m == 0) throw GroupError("cyclic factor orders must be positive");
    if (std::gcd(t % n, n) != 1 && n > 1) throw GroupError("action exponent is not a unit modulo n");
    if (mod_pow(t, m, n) != 1 % n) throw GroupError("action exponent t does not satisfy t^m = 1 (mod n)");
  }
};

namespace detail {

template <class Mul>
Group realize(std::string label, std::size_t order, Mul&& mul, std::vector<index_t> gens, std::size_t cap) {
  if (order > cap) throw GroupError("group of order " + std::to_string(order) + " exceeds element cap of " + std::to_string(cap));
  if (order <= Group::kTableLimit) return Group::from_rule(std::move(label), order, mul, std::move(gens));
  // Right regular action of the generators.
  std::vector<std::vector<index_t>> perms;
  for (auto s : gens) {
    std::vector<index_t> p(order);
    for (std::size_t x = 0; x < order; ++x) p[x] = static_cast<index_t>(mul(static_cast<index_t>(x), s));
    perms.push_back(std::move(p));
  }
  return Group::from_permutations(std::move(label), order, perms, cap);
}

}  // namespace detail

inline Group semidirect_cyclic(const SemidirectSpec& spec, std::string label = {}, std::size_t cap = Group::kDefaultCap) {
  spec.validate();
  const std::uint64_t n = spec.n, m = spec.m;
  std::vector<std::uint64_t> tpow(m);
  for (std::uint64_t j = 0; j < m; ++j) tpow[j] = mod_pow(spec.t, j, n);
  if (label.empty())
    label = "C" + std::to_string(n) + ":C" + std::to_string(m) + "[t=" + std::to_string(spec.t) + "]";
  auto mul = [n, m, tpow](index_t x, index_t y) {
    const std::uint64_t i = x % n, j = x / n, i2 = y % n, j2 = y / n;
    const std::uint64_t ri = (i + i2 * tpow[j]) % n;
    const std::uint64_t rj = (j + j2) % m;
    return static_cast<index_t>(ri + n * rj);
  };
  std::vector<index_t> gens;
  if (n > 1) gens.push_back(1);
  if (m > 1) gens.push_back(static_cast<index_t>(n));
  return detail::realize(std::move(label), n * m, mul, std::move(gens), cap);
}

/// <a, b | a^{p^{k+1}} = b^{p^{k+1}} = 1, a^b = a^{1+p^k}>, of order p^{2k+2}.
inline Group modular_example(std::uint64_t p, unsigned k, std::size_t cap = Group::kDefaultCap) {
  if (!is_small_prime(p)) throw GroupError(std::to_string(p) + " is not prime");
  if (k < 1) throw GroupError("k must be at least 1");
  const std::uint64_t pk1 = ipow(p, k + 1);
  if (pk1 * pk1 > cap) throw GroupError("M(p,k) exceeds element cap of " + std::to_string(cap));
  Group g = semidirect_cyclic({pk1, pk1, 1 + ipow(p, k)},
                              "M(" + std::to_string(p) + "," + std::to_string(k) + ")", cap);
  if (g.order() != ipow(p, 2 * k + 2)) throw GroupError("M(p,k) has the wrong order");
  return g;
}

inline Group cyclic(std::uint64_t n, std::size_t cap = Group::kDefaultCap) {
  if (n == 0) throw GroupError("cyclic group order must be positive");
  return semidirect_cyclic({n, 1, 1}, "C" + std::to_string(n), cap);
}

/// (Z/p)^r with element index = base-p digit vector.
inline Group elementary_abelian(std::uint64_t p, unsigned r, std::size_t cap = Group::kDefaultCap) {
  if (!is_small_prime(p)) throw GroupError(std::to_string(p) + " is not prime");
  const std::uint64_t n = ipow(p, r);
  auto mul = [p, r](index_t x, index_t y) {
    std::uint64_t out = 0, place = 1;
    for (unsigned d = 0; d < r; ++d) {
      out += ((x / place % p + y / place % p) % p) * place;
      place *= p;
    }
    return static_cast<index_t>(out);
  };
  std::vector<index_t> gens;
  for (unsigned d = 0; d < r; ++d) gens.push_back(static_cast<index_t>(ipow(p, d)));
  return detail::realize("E(" + std::to_string(p) + "^" + std::to_string(r) + ")", n, mul, std::move(gens), cap);
}

/// Dihedral group of the given order 2n (rotations i, reflections i + n).
inline Group dihedral(std::uint64_t order, std::size_t cap = Group::kDefaultCap) {
  if (order < 2 || order % 2) throw GroupError("dihedral group order must be even and at least 2");
  const std::uint64_t n = order / 2;
  return semidirect_cyclic({n, 2, n - 1}, "D" + std::to_string(order), cap);
}

/// Q8 = <a, b | a^4 = 1, b^2 = a^2, a^b = a^-1>; element a^i b^j is i + 4j.
inline Group quaternion8() {
  auto mul = [](index_t x, index_t y) {
    const unsigned i = x % 4, j = x / 4, i2 = y % 4, j2 = y / 4;
    unsigned ri = (i + (j ? 4 - i2 : i2)) % 4;
    unsigned rj = j + j2;
    if (rj == 2) {
      rj = 0;
      ri = (ri + 2) % 4;
    }
    return static_cast<index_t>(ri + 4 * rj);
  };
  return Group::from_rule("Q8", 8, mul, {1, 4});
}

/// The non-abelian group C_q x| C_p; requires primes p < q with q = 1 (mod p).
inline Group nonabelian_pq(std::uint64_t p, std::uint64_t q, std::size_t cap = Group::kDefaultCap) {
  if (!is_small_prime(p) || !is_small_prime(q)) throw GroupError("p and q must be prime");
  if (p >= q) throw GroupError("require p < q");
  if (q % p != 1) throw GroupError("no non-abelian group of order pq: q is not 1 mod p");
  std::uint64_t t = 2;
  while (t < q && mod_pow(t, p, q) != 1) ++t;
  return semidirect_cyclic({q, p, t}, "pq(" + std::to_string(p) + "," + std::to_string(q) + ")", cap);
}

}  // namespace cindex
