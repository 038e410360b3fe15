#pragma once

// Cyclotomic values Phi_15, Phi_20, Phi_24, Phi_30 at prime powers
// q = 0, 1, 4 (mod 5), primality of those values, and a resumable search for
// prime powers where all four are prime simultaneously.

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "cindex/group.hpp"

namespace cindex::cyclo {

using BigInt = boost::multiprecision::cpp_int;

inline constexpr std::array<unsigned, 4> kIndices{15, 20, 24, 30};

/// Coefficients of Phi_n, constant term first.
inline const std::vector<int>& coefficients(unsigned n) {
  static const std::vector<int> phi15{1, -1, 0, 1, -1, 1, 0, -1, 1};
  static const std::vector<int> phi20{1, 0, -1, 0, 1, 0, -1, 0, 1};
  static const std::vector<int> phi24{1, 0, 0, 0, -1, 0, 0, 0, 1};
  static const std::vector<int> phi30{1, 1, 0, -1, -1, -1, 0, 1, 1};
  switch (n) {
    case 15: return phi15;
    case 20: return phi20;
    case 24: return phi24;
    case 30: return phi30;
    default: throw GroupError("unsupported cyclotomic index " + std::to_string(n));
  }
}

/// Phi_n(q) for n in {15, 20, 24, 30}, by Horner's rule on the explicit polynomial.
inline BigInt phi_eval(unsigned n, const BigInt& q) {
  if (q < 0) throw GroupError("phi_eval requires q >= 0");
  const auto& c = coefficients(n);
  BigInt acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * q + *it;
  return acc;
}

inline int mobius(unsigned n) {
  int mu = 1;
  for (unsigned d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    n /= d;
    if (n % d == 0) return 0;
    mu = -mu;
  }
  if (n > 1) mu = -mu;
  return mu;
}

/// Phi_n(q) = prod_{d | n} (q^d - 1)^{mu(n/d)} for any n >= 1 and q >= 2.
inline BigInt phi_mobius(unsigned n, const BigInt& q) {
  if (q < 2) throw GroupError("phi_mobius requires q >= 2");
  BigInt num = 1, den = 1;
  for (unsigned d = 1; d <= n; ++d) {
    if (n % d) continue;
    const int mu = mobius(n / d);
    if (mu == 0) continue;
    BigInt term = boost::multiprecision::pow(q, d) - 1;
    (mu > 0 ? num : den) *= term;
  }
  return num / den;
}

enum class Primality { composite, prime, probable_prime };

inline const char* to_string(Primality v) {
  switch (v) {
    case Primality::composite: return "composite";
    case Primality::prime: return "prime";
    case Primality::probable_prime: return "probable";
  }
  return "?";
}

namespace detail {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = mulmod(r, b, m);
    b = mulmod(b, b, m);
    e >>= 1;
  }
  return r;
}

inline bool strong_probable_prime(std::uint64_t n, std::uint64_t a) {
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  std::uint64_t x = powmod(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (unsigned r = 1; r < s; ++r) {
    x = mulmod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

inline constexpr std::array<std::uint32_t, 12> kWitnesses{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

inline const std::vector<std::uint32_t>& small_primes() {
  static const std::vector<std::uint32_t> v = [] {
    std::vector<std::uint32_t> out;
    for (std::uint32_t n = 2; n < 1000; ++n) {
      bool prime = true;
      for (auto p : out) {
        if (p * p > n) break;
        if (n % p == 0) {
          prime = false;
          break;
        }
      }
      if (prime) out.push_back(n);
    }
    return out;
  }();
  return v;
}

inline BigInt mod(const BigInt& a, const BigInt& n) {
  BigInt r = a % n;
  if (r < 0) r += n;
  return r;
}

inline bool strong_probable_prime_big(const BigInt& n, const BigInt& a) {
  BigInt d = n - 1;
  unsigned s = 0;
  while (!boost::multiprecision::bit_test(d, 0)) {
    d >>= 1;
    ++s;
  }
  BigInt x = boost::multiprecision::powm(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (unsigned r = 1; r < s; ++r) {
    x = x * x % n;
    if (x == n - 1) return true;
  }
  return false;
}

// Jacobi symbol (a / n) for odd positive n.
inline int jacobi(BigInt a, BigInt n) {
  a = mod(a, n);
  int result = 1;
  while (a != 0) {
    while (!boost::multiprecision::bit_test(a, 0)) {
      a >>= 1;
      const unsigned r = static_cast<unsigned>(n % 8);
      if (r == 3 || r == 5) result = -result;
    }
    std::swap(a, n);
    if (a % 4 == 3 && n % 4 == 3) result = -result;
    a %= n;
  }
  return n == 1 ? result : 0;
}

inline BigInt half_mod(const BigInt& x, const BigInt& n) {
  if (boost::multiprecision::bit_test(x, 0)) return BigInt((x + n) >> 1);
  return BigInt(x >> 1);
}

// Strong Lucas probable-prime test with Selfridge's parameter choice.
inline bool strong_lucas_probable_prime(const BigInt& n) {
  const BigInt root = boost::multiprecision::sqrt(n);
  if (root * root == n) return false;
  long long dval = 5;
  for (;;) {
    const int j = jacobi(BigInt(dval), n);
    if (j == -1) break;
    if (j == 0 && boost::multiprecision::abs(BigInt(dval)) != n) return false;
    dval = dval > 0 ? -(dval + 2) : -dval + 2;
  }
  const BigInt D = mod(BigInt(dval), n);
  const BigInt P = 1;
  const BigInt Q = mod(BigInt((1 - dval) / 4), n);

  BigInt d = n + 1;
  unsigned s = 0;
  while (!boost::multiprecision::bit_test(d, 0)) {
    d >>= 1;
    ++s;
  }
  BigInt U = 1, V = P, Qk = Q;
  const unsigned bits = static_cast<unsigned>(boost::multiprecision::msb(d));
  for (int b = static_cast<int>(bits) - 1; b >= 0; --b) {
    U = U * V % n;
    V = mod(V * V - 2 * Qk, n);
    Qk = Qk * Qk % n;
    if (boost::multiprecision::bit_test(d, static_cast<unsigned>(b))) {
      const BigInt U2 = half_mod(mod(P * U + V, n), n);
      const BigInt V2 = half_mod(mod(D * U + P * V, n), n);
      U = U2;
      V = V2;
      Qk = Qk * Q % n;
    }
  }
  if (U == 0 || V == 0) return true;
  for (unsigned r = 1; r < s; ++r) {
    V = mod(V * V - 2 * Qk, n);
    Qk = Qk * Qk % n;
    if (V == 0) return true;
  }
  return false;
}

}  // namespace detail

/// Deterministic below 2^64 (strong probable prime to the first twelve prime
/// bases, which has no pseudoprimes below 3.3 * 10^24).
inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : detail::kWitnesses) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  for (std::uint64_t a : detail::kWitnesses)
    if (!detail::strong_probable_prime(n, a)) return false;
  return true;
}

/// Exact below 2^64; above, a Baillie-PSW verdict reported as probable.
inline Primality is_prime(const BigInt& n) {
  if (n < 2) return Primality::composite;
  if (n <= std::numeric_limits<std::uint64_t>::max())
    return is_prime_u64(static_cast<std::uint64_t>(n)) ? Primality::prime : Primality::composite;
  for (auto p : detail::small_primes())
    if (n % p == 0) return Primality::composite;
  if (!detail::strong_probable_prime_big(n, 2)) return Primality::composite;
  if (!detail::strong_lucas_probable_prime(n)) return Primality::composite;
  return Primality::probable_prime;
}

inline bool is_prime_verdict(Primality v) { return v != Primality::composite; }

/// (p, e) with q = p^e, p prime, e >= 1; none for 0, 1 and everything else.
inline std::optional<std::pair<std::uint64_t, unsigned>> is_prime_power(std::uint64_t q) {
  if (q < 2) return std::nullopt;
  for (unsigned e = 63; e >= 1; --e) {
    auto r = static_cast<std::uint64_t>(std::llround(std::pow(static_cast<double>(q), 1.0 / e)));
    for (std::uint64_t c = r > 1 ? r - 1 : 1; c <= r + 1; ++c) {
      if (c < 2) continue;
      unsigned __int128 acc = 1;
      unsigned i = 0;
      while (i < e && acc <= q) {
        acc *= c;
        ++i;
      }
      if (i == e && acc == q && is_prime_u64(c)) return std::make_pair(c, e);
    }
  }
  return std::nullopt;
}

struct HuntRecord {
  std::uint64_t q = 0;
  std::uint64_t p = 0;
  unsigned e = 0;
  std::array<BigInt, 4> values;         // Phi_15, Phi_20, Phi_24, Phi_30
  std::array<Primality, 4> verdicts{};  // same order
  bool simultaneous = false;

  /// `q p e phi15 phi20 phi24 phi30 verdicts`
  std::string to_line() const {
    std::string out = std::to_string(q) + ' ' + std::to_string(p) + ' ' + std::to_string(e);
    for (const auto& v : values) out += ' ' + v.str();
    out += ' ';
    for (std::size_t i = 0; i < verdicts.size(); ++i) {
      if (i) out += ',';
      out += to_string(verdicts[i]);
    }
    return out;
  }
};

struct HuntSummary {
  std::uint64_t scanned = 0;
  std::uint64_t hits = 0;
  std::array<std::uint64_t, 4> rejected_by{};  // composite first seen at Phi_15, 20, 24, 30
  std::optional<std::uint64_t> last_scanned;
};

struct HuntOptions {
  std::optional<std::uint64_t> resume_after;  // checkpoint: largest fully scanned q
  unsigned jobs = 1;
};

/// Prime powers q <= q_max with q mod 5 in {0, 1, 4}, ascending.
inline std::vector<std::pair<std::uint64_t, std::pair<std::uint64_t, unsigned>>> hunt_candidates(std::uint64_t q_max) {
  std::vector<bool> composite(q_max + 1, false);
  std::vector<std::pair<std::uint64_t, std::pair<std::uint64_t, unsigned>>> out;
  for (std::uint64_t p = 2; p <= q_max; ++p) {
    if (composite[p]) continue;
    for (std::uint64_t m = p * p; m <= q_max; m += p) composite[m] = true;
    unsigned e = 1;
    for (std::uint64_t q = p;; ++e) {
      const auto r = q % 5;
      if (r == 0 || r == 1 || r == 4) out.push_back({q, {p, e}});
      if (q > q_max / p) break;
      q *= p;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace detail {

// Cheapest rejection first: Phi_24 has three terms.
inline constexpr std::array<std::size_t, 4> kEvalOrder{2, 1, 0, 3};

struct Outcome {
  int rejected_slot = -1;  // index into kIndices, or -1 for a hit
  HuntRecord record;
};

inline Outcome evaluate(std::uint64_t q, std::uint64_t p, unsigned e) {
  Outcome out;
  out.record.q = q;
  out.record.p = p;
  out.record.e = e;
  for (auto slot : kEvalOrder) {
    out.record.values[slot] = phi_eval(kIndices[slot], BigInt(q));
    out.record.verdicts[slot] = is_prime(out.record.values[slot]);
    if (out.record.verdicts[slot] == Primality::composite) {
      out.rejected_slot = static_cast<int>(slot);
      return out;
    }
  }
  out.record.simultaneous = true;
  return out;
}

}  // namespace detail

/// Scans candidates above the checkpoint in ascending order and calls `emit`
/// for every simultaneous hit.
inline HuntSummary hunt(std::uint64_t q_max, const std::function<void(const HuntRecord&)>& emit, const HuntOptions& opt = {}) {
  if (q_max < 2) throw GroupError("hunt requires qMax >= 2");
  if (opt.resume_after && *opt.resume_after > q_max)
    throw GroupError("checkpoint " + std::to_string(*opt.resume_after) + " is beyond qMax " + std::to_string(q_max));
  auto cands = hunt_candidates(q_max);
  if (opt.resume_after)
    std::erase_if(cands, [&](const auto& c) { return c.first <= *opt.resume_after; });

  std::vector<detail::Outcome> outcomes(cands.size());
  const unsigned jobs = std::max(1u, opt.jobs);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < cands.size();)
      outcomes[i] = detail::evaluate(cands[i].first, cands[i].second.first, cands[i].second.second);
  };
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  HuntSummary sum;
  sum.last_scanned = opt.resume_after;
  for (const auto& o : outcomes) {
    ++sum.scanned;
    sum.last_scanned = o.record.q;
    if (o.rejected_slot >= 0) {
      ++sum.rejected_by[o.rejected_slot];
    } else {
      ++sum.hits;
      emit(o.record);
    }
  }
  return sum;
}

}  // namespace cindex::cyclo
