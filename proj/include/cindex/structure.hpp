#pragma once

// Sylow subgroups, derived and upper central series, nilpotency and
// solubility, and maximal abelian normal subgroups of bounded exponent.
//
// Candidate elements are always scanned in increasing index order, so every
// result here is reproducible.

#include <numeric>
#include <vector>

#include "cindex/arith.hpp"
#include "cindex/subgroup.hpp"

namespace cindex {

/// The p-part of x: x raised to the coprime part of its order.
inline index_t p_part_element(const Group& g, index_t x, std::uint64_t p) {
  const std::uint64_t o = g.element_order(x);
  return g.pow(x, o / p_part(o, p));
}

/// Sylow p-subgroup by normalizer climbing.
inline Subgroup sylow(const Group& g, std::uint64_t p) {
  if (!is_small_prime(p)) throw GroupError(std::to_string(p) + " is not prime");
  const std::uint64_t target = p_part(g.order(), p);
  Subgroup s = trivial_subgroup(g);
  while (s.order() < target) {
    const Subgroup n = normalizer(g, s);
    bool grown = false;
    for (auto x : n.elements()) {
      if (s.contains(x)) continue;
      const index_t y = p_part_element(g, x, p);
      if (s.contains(y)) continue;
      std::vector<index_t> gens(s.generators().begin(), s.generators().end());
      gens.push_back(y);
      s = generated_subgroup(g, gens);
      grown = true;
      break;
    }
    if (!grown) throw GroupError("Sylow climbing stalled (group axioms violated?)");
  }
  return s;
}

inline bool is_nilpotent(const Group& g) {
  for (auto p : prime_divisors(g.order()))
    if (!is_normal(g, sylow(g, p))) return false;
  return true;
}

enum class SeriesKind { derived, upper_central };

struct SeriesProfile {
  SeriesKind kind;
  std::vector<Subgroup> terms;
  bool stabilized = false;
};

/// G = G^(0) >= G^(1) >= ... until two consecutive terms agree.
inline SeriesProfile derived_series(const Group& g) {
  SeriesProfile s{SeriesKind::derived, {whole_group(g)}, false};
  for (;;) {
    Subgroup next = derived_subgroup(s.terms.back());
    if (next == s.terms.back()) break;
    s.terms.push_back(std::move(next));
  }
  s.stabilized = true;
  return s;
}

inline bool is_soluble(const Group& g) { return derived_series(g).terms.back().is_trivial(); }

/// Z_0 = 1 <= Z_1 = Z(G) <= ..., where Z_{i+1}/Z_i = Z(G/Z_i); equivalently
/// Z_{i+1} = { x : [x, s] in Z_i for every generator s }.
inline SeriesProfile upper_central_series(const Group& g) {
  SeriesProfile s{SeriesKind::upper_central, {trivial_subgroup(g)}, false};
  for (;;) {
    const Subgroup& prev = s.terms.back();
    MemberSet in(g.order());
    for (index_t x = 0; x < g.order(); ++x) {
      bool ok = true;
      for (auto t : g.generators())
        if (!prev.contains(g.commutator(x, t))) {
          ok = false;
          break;
        }
      if (ok) in.set(x);
    }
    Subgroup next = subgroup_from_members(g, in);
    if (next == prev) break;
    s.terms.push_back(std::move(next));
  }
  s.stabilized = true;
  return s;
}

inline std::uint64_t exponent_of(const Subgroup& h) {
  std::uint64_t e = 1;
  for (auto x : h.elements()) e = std::lcm(e, std::uint64_t{h.parent().element_order(x)});
  return e;
}

/// Exponent bound p^{1+eps} with eps = 0 for odd p and eps = 1 for p = 2.
inline std::uint64_t alperin_exponent_bound(std::uint64_t p) { return p == 2 ? 4 : p; }

/// An abelian normal subgroup of exponent dividing `exp_bound` that is not
/// properly contained in any other such subgroup. Starts from the
/// exp_bound-torsion of the center and adjoins the normal closure of any
/// element that keeps the subgroup abelian with bounded exponent.
inline Subgroup maximal_abelian_normal(const Group& g, std::uint64_t exp_bound) {
  const auto pp = small_prime_power(g.order());
  if (!pp) throw GroupError("maximal_abelian_normal requires a p-group");
  const std::uint64_t p = pp->first;
  if (exp_bound < p || p_part(exp_bound, p) != exp_bound) throw GroupError("exponent bound must be a positive power of p");

  const Subgroup z = center(g);
  MemberSet torsion(g.order());
  for (auto x : z.elements())
    if (exp_bound % g.element_order(x) == 0) torsion.set(x);
  Subgroup a = subgroup_from_members(g, torsion);

  for (index_t x = 0; x < g.order(); ++x) {
    if (a.contains(x) || exp_bound % g.element_order(x) != 0) continue;
    std::vector<index_t> gens(a.generators().begin(), a.generators().end());
    gens.push_back(x);
    Subgroup cand = normal_closure(g, gens);
    if (!is_abelian(cand)) continue;
    if (exp_bound % exponent_of(cand) != 0) continue;
    a = std::move(cand);
  }
  return a;
}

}  // namespace cindex
