#pragma once

// Invariants of finite p-groups: Omega and agemo towers, exponent, Frattini
// subgroup, and the p-central / powerful / Camina / special predicates.
//
// The prime is read off |G|; a group whose order is not a prime power is
// rejected. PGroupProfile computes the towers once and every predicate reads
// from it.

#include <optional>
#include <vector>

#include "cindex/arith.hpp"
#include "cindex/structure.hpp"

namespace cindex {

struct PrimePower {
  std::uint64_t p = 0;
  unsigned e = 0;
};

inline PrimePower require_p_group(const Group& g) {
  auto pp = small_prime_power(g.order());
  if (!pp) throw GroupError("group of order " + std::to_string(g.order()) + " is not a p-group");
  return {pp->first, pp->second};
}

inline bool is_p_group(const Group& g) { return small_prime_power(g.order()).has_value(); }

/// Subgroup generated by the elements of order at most p^i.
inline Subgroup omega(const Group& g, unsigned i) {
  const auto [p, e] = require_p_group(g);
  const std::uint64_t bound = ipow(p, std::min(i, e));
  std::vector<index_t> gens;
  for (index_t x = 1; x < g.order(); ++x)
    if (g.element_order(x) <= bound) gens.push_back(x);
  return generated_subgroup(g, gens);
}

/// Subgroup generated by the p^i-th powers.
inline Subgroup agemo(const Group& g, unsigned i) {
  const auto [p, e] = require_p_group(g);
  const std::uint64_t q = ipow(p, std::min(i, e));
  MemberSet seen(g.order());
  std::vector<index_t> gens;
  for (index_t x = 0; x < g.order(); ++x) {
    const index_t y = g.pow(x, q);
    if (y != 0 && !seen.test(y)) {
      seen.set(y);
      gens.push_back(y);
    }
  }
  return generated_subgroup(g, gens);
}

/// lcm of element orders; defined for every group.
inline std::uint64_t exponent_of(const Group& g) {
  std::uint64_t e = 1;
  for (index_t x = 0; x < g.order(); ++x) e = std::lcm(e, std::uint64_t{g.element_order(x)});
  return e;
}

/// Phi(G) = G' G^p, valid for p-groups.
inline Subgroup frattini(const Group& g) {
  require_p_group(g);
  return join(derived_subgroup(g), agemo(g, 1));
}

class PGroupProfile {
 public:
  explicit PGroupProfile(Group g) : g_(std::move(g)) {
    const auto pp = require_p_group(g_);
    p_ = pp.p;
    order_exp_ = pp.e;
    const std::uint64_t exp = exponent_of(g_);
    exponent_exp_ = 0;
    for (std::uint64_t t = 1; t < exp; t *= p_) ++exponent_exp_;
    for (unsigned i = 0; i <= exponent_exp_; ++i) {
      omegas_.push_back(cindex::omega(g_, i));
      agemos_.push_back(cindex::agemo(g_, i));
    }
    center_ = cindex::center(g_);
    derived_ = derived_subgroup(g_);
    frattini_ = join(derived_, agemos_.size() > 1 ? agemos_[1] : agemos_[0]);
    abelian_ = derived_.is_trivial();
  }

  const Group& group() const noexcept { return g_; }
  std::uint64_t p() const noexcept { return p_; }
  unsigned order_exp() const noexcept { return order_exp_; }
  unsigned exponent_exp() const noexcept { return exponent_exp_; }
  bool is_abelian() const noexcept { return abelian_; }

  /// Omega_i(G); indices past the exponent return G.
  const Subgroup& omega(unsigned i) const { return omegas_[std::min<std::size_t>(i, omegas_.size() - 1)]; }
  /// G^{p^i}; indices past the exponent return the trivial subgroup.
  const Subgroup& agemo(unsigned i) const { return agemos_[std::min<std::size_t>(i, agemos_.size() - 1)]; }
  const Subgroup& center() const noexcept { return center_; }
  const Subgroup& derived() const noexcept { return derived_; }
  const Subgroup& frattini() const noexcept { return frattini_; }

  std::vector<std::size_t> omega_orders() const {
    std::vector<std::size_t> out;
    for (const auto& s : omegas_) out.push_back(s.order());
    return out;
  }
  std::vector<std::size_t> agemo_orders() const {
    std::vector<std::size_t> out;
    for (const auto& s : agemos_) out.push_back(s.order());
    return out;
  }

  /// Omega_1 <= Z for odd p, Omega_2 <= Z for p = 2.
  bool is_p_central() const { return omega(p_ == 2 ? 2 : 1).is_subgroup_of(center_); }

  /// G' <= G^p for odd p, G' <= G^4 for p = 2.
  bool is_powerful() const { return derived_.is_subgroup_of(agemo(p_ == 2 ? 2 : 1)); }

  bool is_special() const { return derived_ == frattini_ && derived_ == center_; }

  /// For every g outside G', { [g, x] : x in G } is all of G'.
  bool is_camina() const {
    if (abelian_) throw GroupError("Camina condition is defined for non-abelian groups only");
    const std::size_t target = derived_.order();
    MemberSet seen(g_.order());
    for (index_t x = 0; x < g_.order(); ++x) {
      if (derived_.contains(x)) continue;
      seen = MemberSet(g_.order());
      std::size_t count = 0;
      for (index_t y = 0; y < g_.order() && count < target; ++y) {
        const index_t c = g_.commutator(x, y);
        if (!seen.test(c)) {
          seen.set(c);
          ++count;
        }
      }
      if (count < target) return false;
    }
    return true;
  }

  /// Largest r with Omega_r <= Z(G).
  unsigned central_omega_level() const {
    unsigned r = 0;
    while (r + 1 < omegas_.size() && omegas_[r + 1].is_subgroup_of(center_)) ++r;
    return r;
  }

 private:
  Group g_;
  std::uint64_t p_ = 0;
  unsigned order_exp_ = 0;
  unsigned exponent_exp_ = 0;
  std::vector<Subgroup> omegas_;
  std::vector<Subgroup> agemos_;
  Subgroup center_, derived_, frattini_;
  bool abelian_ = false;
};

inline bool is_p_central(const Group& g) { return PGroupProfile(g).is_p_central(); }
inline bool is_powerful(const Group& g) { return PGroupProfile(g).is_powerful(); }
inline bool is_camina(const Group& g) { return PGroupProfile(g).is_camina(); }
inline bool is_special(const Group& g) { return PGroupProfile(g).is_special(); }

}  // namespace cindex
