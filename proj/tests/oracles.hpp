#pragma once

// Brute-force reference computations. Everything here uses only mul() and
// raw index loops, never the library's subgroup machinery, so the unit tests
// compare two independent derivations.

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "cindex/cindex.hpp"

namespace oracle {

using cindex::Group;
using cindex::index_t;

inline std::filesystem::path fixture_dir() { return CINDEX_FIXTURE_DIR; }

inline Group perm_fixture(const std::string& name) {
  return cindex::load_group(cindex::read_text_file(fixture_dir() / "perm" / (name + ".txt")));
}

struct Entry {
  std::size_t order;
  std::string label;
  Group group;
};

/// The whole SmallGroups fixture, loaded once.
inline const std::vector<Entry>& catalog() {
  static const std::vector<Entry> all = [] {
    std::vector<Entry> out;
    std::vector<std::filesystem::path> files;
    for (const auto& e : std::filesystem::directory_iterator(fixture_dir() / "catalog")) files.push_back(e.path());
    std::sort(files.begin(), files.end());
    for (const auto& f : files)
      for (auto& e : cindex::load_catalog_file(f)) out.push_back({e.group.order(), e.label, e.group});
    return out;
  }();
  return all;
}

inline bool trial_division_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline std::vector<std::uint64_t> trial_factor(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    while (n % d == 0) {
      out.push_back(d);
      n /= d;
    }
  if (n > 1) out.push_back(n);
  return out;
}

inline std::uint64_t order_by_powers(const Group& g, index_t x) {
  std::uint64_t t = 1;
  for (index_t y = x; y != 0; y = g.mul(y, x)) ++t;
  return t;
}

inline bool commute(const Group& g, index_t x, index_t y) { return g.mul(x, y) == g.mul(y, x); }

inline std::vector<bool> center(const Group& g) {
  std::vector<bool> in(g.order(), true);
  for (index_t z = 0; z < g.order(); ++z)
    for (index_t x = 0; x < g.order() && in[z]; ++x) in[z] = oracle::commute(g, z, x);
  return in;
}

inline std::vector<bool> centralizer(const Group& g, index_t x) {
  std::vector<bool> in(g.order());
  for (index_t y = 0; y < g.order(); ++y) in[y] = oracle::commute(g, x, y);
  return in;
}

inline std::size_t count(const std::vector<bool>& v) { return static_cast<std::size_t>(std::count(v.begin(), v.end(), true)); }

/// Closure under products by naive fixed-point iteration.
inline std::vector<bool> closure(const Group& g, const std::vector<index_t>& gens) {
  std::vector<bool> in(g.order(), false);
  in[0] = true;
  for (auto s : gens) in[s] = true;
  bool grew = true;
  while (grew) {
    grew = false;
    for (index_t a = 0; a < g.order(); ++a) {
      if (!in[a]) continue;
      for (index_t b = 0; b < g.order(); ++b)
        if (in[b] && !in[g.mul(a, b)]) {
          in[g.mul(a, b)] = true;
          grew = true;
        }
    }
  }
  return in;
}

inline std::vector<bool> members(const cindex::Subgroup& h) {
  std::vector<bool> out(h.parent().order());
  for (index_t x = 0; x < out.size(); ++x) out[x] = h.contains(x);
  return out;
}

inline std::vector<bool> derived(const Group& g) {
  std::vector<index_t> comms;
  for (index_t x = 0; x < g.order(); ++x)
    for (index_t y = 0; y < g.order(); ++y) comms.push_back(g.mul(g.mul(g.inv(x), g.inv(y)), g.mul(x, y)));
  std::sort(comms.begin(), comms.end());
  comms.erase(std::unique(comms.begin(), comms.end()), comms.end());
  return oracle::closure(g, comms);
}

/// max over non-central x of |C(x)| / o(x), by direct centralizer scans.
inline std::uint64_t mci(const Group& g) {
  const auto z = oracle::center(g);
  std::uint64_t best = 0;
  for (index_t x = 0; x < g.order(); ++x) {
    if (z[x]) continue;
    best = std::max<std::uint64_t>(best, oracle::count(oracle::centralizer(g, x)) / oracle::order_by_powers(g, x));
  }
  return best;
}

inline std::uint64_t p_part(std::uint64_t n, std::uint64_t p) {
  std::uint64_t r = 1;
  while (n % p == 0) {
    n /= p;
    r *= p;
  }
  return r;
}

/// Primes p with |G|_p = p and C_G(P) = P Z(G). All Sylows are conjugate, so
/// any subgroup of order p stands in for P.
inline std::vector<std::uint64_t> bad_primes(const Group& g) {
  std::vector<std::uint64_t> out;
  const auto z = oracle::center(g);
  std::set<std::uint64_t> primes;
  for (auto p : oracle::trial_factor(g.order())) primes.insert(p);
  for (auto p : primes) {
    if (oracle::p_part(g.order(), p) != p) continue;
    index_t x = 0;
    while (oracle::order_by_powers(g, x) != p) ++x;
    const auto c = oracle::centralizer(g, x);
    std::vector<bool> pz(g.order(), false);
    for (index_t y = x, i = 0; i < p; ++i, y = g.mul(y, x))
      for (index_t w = 0; w < g.order(); ++w)
        if (z[w]) pz[g.mul(y, w)] = true;
    if (c == pz) out.push_back(p);
  }
  return out;
}

/// Edges p~q of the prime graph: an element whose order pq divides.
inline std::set<std::pair<std::uint64_t, std::uint64_t>> prime_graph_edges(const Group& g) {
  std::set<std::pair<std::uint64_t, std::uint64_t>> edges;
  std::set<std::uint64_t> orders;
  for (index_t x = 0; x < g.order(); ++x) orders.insert(oracle::order_by_powers(g, x));
  for (auto o : orders) {
    auto f = oracle::trial_factor(o);
    f.erase(std::unique(f.begin(), f.end()), f.end());
    for (std::size_t i = 0; i < f.size(); ++i)
      for (std::size_t j = i + 1; j < f.size(); ++j) edges.insert({f[i], f[j]});
  }
  return edges;
}

inline bool is_pq_nonabelian_order(std::uint64_t n) {
  const auto f = oracle::trial_factor(n);
  return f.size() == 2 && f[0] != f[1] && f[1] % f[0] == 1;
}

/// Order 8, non-abelian, exactly one involution.
inline bool is_q8(const Group& g) {
  if (g.order() != 8 || oracle::count(oracle::center(g)) == 8) return false;
  int involutions = 0;
  for (index_t x = 1; x < 8; ++x) involutions += oracle::order_by_powers(g, x) == 2;
  return involutions == 1;
}

}  // namespace oracle
