#pragma once

// Subgroups of a concrete Group and the primitive subgroup constructions:
// closures, centers, centralizers, normalizers, quotients, derived subgroups.

#include <algorithm>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cindex/group.hpp"

namespace cindex {

class Subgroup {
 public:
  Subgroup() = default;

  const Group& parent() const noexcept { return parent_; }
  std::size_t order() const noexcept { return size_; }
  bool contains(index_t x) const noexcept { return members_.test(x); }
  bool contains(const ElementRef& e) const { return members_.test(parent_.check(e)); }
  const MemberSet& members() const noexcept { return members_; }
  std::vector<index_t> elements() const { return members_.elements(); }
  std::span<const index_t> generators() const noexcept { return generators_; }

  bool is_trivial() const noexcept { return size_ == 1; }
  bool is_whole() const noexcept { return size_ == parent_.order(); }
  bool is_subgroup_of(const Subgroup& other) const {
    require_same_parent(other);
    return members_.subset_of(other.members_);
  }

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.parent_.same_as(b.parent_) && a.members_ == b.members_;
  }

  void require_same_parent(const Subgroup& other) const {
    if (!parent_.same_as(other.parent_)) throw GroupError("subgroups belong to different groups");
  }

 private:
  friend Subgroup make_subgroup(const Group&, MemberSet, std::vector<index_t>);

  Subgroup(Group parent, MemberSet members, std::vector<index_t> generators)
      : parent_(std::move(parent)), members_(std::move(members)), generators_(std::move(generators)) {
    size_ = members_.count();
    if (size_ == 0 || !members_.test(0)) throw GroupError("subgroup does not contain the identity");
    if (parent_.order() % size_ != 0)
      throw GroupError("subgroup order " + std::to_string(size_) + " does not divide " + std::to_string(parent_.order()));
  }

  Group parent_;
  MemberSet members_;
  std::vector<index_t> generators_;
  std::size_t size_ = 0;
};

inline Subgroup make_subgroup(const Group& g, MemberSet members, std::vector<index_t> gens) {
  return Subgroup(g, std::move(members), std::move(gens));
}

namespace detail {

// Extends `members`/`in` to the closure under right multiplication by `gens`.
inline void close_right(const Group& g, std::span<const index_t> gens, MemberSet& in, std::vector<index_t>& members) {
  for (std::size_t head = 0; head < members.size(); ++head)
    for (auto s : gens) {
      const index_t y = g.mul(members[head], s);
      if (!in.test(y)) {
        in.set(y);
        members.push_back(y);
      }
    }
}

}  // namespace detail

/// Smallest subgroup containing `gens`. The empty list yields the trivial subgroup.
inline Subgroup generated_subgroup(const Group& g, std::span<const index_t> gens) {
  std::vector<index_t> kept;
  for (auto s : gens) {
    if (s >= g.order()) throw GroupError("generator index out of range");
    if (s != 0 && std::find(kept.begin(), kept.end(), s) == kept.end()) kept.push_back(s);
  }
  MemberSet in(g.order());
  in.set(0);
  std::vector<index_t> members{0};
  detail::close_right(g, kept, in, members);
  return make_subgroup(g, std::move(in), std::move(kept));
}

inline Subgroup generated_subgroup(const Group& g, std::initializer_list<index_t> gens) {
  return generated_subgroup(g, std::span<const index_t>(gens.begin(), gens.size()));
}

inline Subgroup trivial_subgroup(const Group& g) { return generated_subgroup(g, std::span<const index_t>{}); }

inline Subgroup whole_group(const Group& g) {
  MemberSet all(g.order());
  for (index_t x = 0; x < g.order(); ++x) all.set(x);
  return make_subgroup(g, std::move(all), std::vector<index_t>(g.generators().begin(), g.generators().end()));
}

inline Subgroup cyclic_subgroup(const Group& g, index_t x) { return generated_subgroup(g, {x}); }
inline Subgroup cyclic_subgroup(const Group& g, const ElementRef& x) { return cyclic_subgroup(g, g.check(x)); }

/// Wraps a member set known to be a subgroup. Generators are chosen greedily in
/// ascending index order; a set that is not closed is rejected.
inline Subgroup subgroup_from_members(const Group& g, const MemberSet& members) {
  if (members.universe() != g.order()) throw GroupError("member set has the wrong universe");
  std::vector<index_t> gens;
  MemberSet in(g.order());
  in.set(0);
  std::vector<index_t> closure{0};
  for (auto x : members.elements()) {
    if (in.test(x)) continue;
    gens.push_back(x);
    detail::close_right(g, gens, in, closure);
  }
  if (!(in == members)) throw GroupError("member set is not closed under multiplication");
  return make_subgroup(g, std::move(in), std::move(gens));
}

inline Subgroup join(const Subgroup& a, const Subgroup& b) {
  a.require_same_parent(b);
  std::vector<index_t> gens(a.generators().begin(), a.generators().end());
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return generated_subgroup(a.parent(), gens);
}

inline Subgroup intersection(const Subgroup& a, const Subgroup& b) {
  a.require_same_parent(b);
  return subgroup_from_members(a.parent(), a.members() & b.members());
}

inline bool is_abelian(const Group& g) {
  const auto gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (g.mul(gens[i], gens[j]) != g.mul(gens[j], gens[i])) return false;
  return true;
}

inline bool is_abelian(const Subgroup& h) {
  const auto& g = h.parent();
  const auto gens = h.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (g.mul(gens[i], gens[j]) != g.mul(gens[j], gens[i])) return false;
  return true;
}

/// Elements commuting with every element of `h` (checked on its generators).
inline Subgroup centralizer(const Group& g, const Subgroup& h) {
  MemberSet in(g.order());
  const auto gens = h.generators();
  for (index_t x = 0; x < g.order(); ++x) {
    bool ok = true;
    for (auto s : gens)
      if (g.mul(x, s) != g.mul(s, x)) {
        ok = false;
        break;
      }
    if (ok) in.set(x);
  }
  return subgroup_from_members(g, in);
}

inline Subgroup centralizer(const Group& g, index_t x) {
  MemberSet in(g.order());
  for (index_t y = 0; y < g.order(); ++y)
    if (g.mul(x, y) == g.mul(y, x)) in.set(y);
  return subgroup_from_members(g, in);
}

inline Subgroup centralizer(const Group& g, const ElementRef& x) { return centralizer(g, g.check(x)); }

inline std::size_t centralizer_order(const Group& g, index_t x) {
  std::size_t c = 0;
  for (index_t y = 0; y < g.order(); ++y) c += g.mul(x, y) == g.mul(y, x);
  return c;
}

inline Subgroup center(const Group& g) { return centralizer(g, whole_group(g)); }

inline bool is_normal(const Group& g, const Subgroup& h) {
  for (auto s : g.generators())
    for (auto t : h.generators())
      if (!h.contains(g.conjugate(t, s))) return false;
  return true;
}

/// { x : x^-1 H x = H }
inline Subgroup normalizer(const Group& g, const Subgroup& h) {
  MemberSet in(g.order());
  for (index_t x = 0; x < g.order(); ++x) {
    bool ok = true;
    for (auto t : h.generators())
      if (!h.contains(g.conjugate(t, x))) {
        ok = false;
        break;
      }
    if (ok) in.set(x);
  }
  return subgroup_from_members(g, in);
}

/// Smallest normal subgroup containing `gens`.
inline Subgroup normal_closure(const Group& g, std::span<const index_t> gens) {
  Subgroup h = generated_subgroup(g, gens);
  std::vector<index_t> current(h.generators().begin(), h.generators().end());
  for (;;) {
    std::vector<index_t> extra;
    for (auto t : current)
      for (auto s : g.generators()) {
        const index_t c = g.conjugate(t, s);
        if (!h.contains(c) && std::find(extra.begin(), extra.end(), c) == extra.end()) extra.push_back(c);
      }
    if (extra.empty()) return h;
    current.insert(current.end(), extra.begin(), extra.end());
    h = generated_subgroup(g, current);
  }
}

inline Subgroup normal_closure(const Subgroup& h) {
  return normal_closure(h.parent(), h.generators());
}

/// Derived subgroup: normal closure of the commutators of generator pairs.
inline Subgroup derived_subgroup(const Group& g) {
  std::vector<index_t> comms;
  const auto gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      const index_t c = g.commutator(gens[i], gens[j]);
      if (c != 0) comms.push_back(c);
    }
  return normal_closure(g, comms);
}

/// Derived subgroup of a subgroup, as a subgroup of the same parent.
inline Subgroup derived_subgroup(const Subgroup& h) {
  const auto& g = h.parent();
  std::vector<index_t> comms;
  const auto gens = h.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      const index_t c = g.commutator(gens[i], gens[j]);
      if (c != 0) comms.push_back(c);
    }
  Subgroup d = generated_subgroup(g, comms);
  std::vector<index_t> current(d.generators().begin(), d.generators().end());
  for (;;) {
    std::vector<index_t> extra;
    for (auto t : current)
      for (auto s : gens) {
        const index_t c = g.conjugate(t, s);
        if (!d.contains(c) && std::find(extra.begin(), extra.end(), c) == extra.end()) extra.push_back(c);
      }
    if (extra.empty()) return d;
    current.insert(current.end(), extra.begin(), extra.end());
    d = generated_subgroup(g, current);
  }
}

struct QuotientResult {
  Group quotient;
  std::vector<index_t> projection;  // element of G -> element of G/N
  std::vector<index_t> representative;  // element of G/N -> smallest element of its coset
};

/// G/N for normal N. Cosets are numbered by their smallest representative, so
/// the coset N itself is the identity 0.
inline QuotientResult quotient(const Group& g, const Subgroup& n) {
  if (!n.parent().same_as(g)) throw GroupError("subgroup belongs to a different group");
  if (!is_normal(g, n)) throw GroupError("quotient by a non-normal subgroup");
  const std::size_t k = g.order() / n.order();
  if (k > Group::kTableLimit)
    throw GroupError("quotient of order " + std::to_string(k) + " exceeds the table limit");
  constexpr index_t kUnset = ~index_t{0};
  std::vector<index_t> coset(g.order(), kUnset);
  std::vector<index_t> rep;
  const auto nel = n.elements();
  for (index_t x = 0; x < g.order(); ++x) {
    if (coset[x] != kUnset) continue;
    const auto c = static_cast<index_t>(rep.size());
    rep.push_back(x);
    for (auto y : nel) coset[g.mul(x, y)] = c;
  }
  std::vector<index_t> table(k * k);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) table[a * k + b] = coset[g.mul(rep[a], rep[b])];
  Group q = Group::from_table(g.label() + "/N", k, std::move(table));
  return {std::move(q), std::move(coset), std::move(rep)};
}

inline Subgroup image(const QuotientResult& q, const Subgroup& h) {
  std::vector<index_t> gens;
  for (auto s : h.generators()) gens.push_back(q.projection[s]);
  return generated_subgroup(q.quotient, gens);
}

inline Subgroup preimage(const Group& g, const QuotientResult& q, const Subgroup& h) {
  MemberSet in(g.order());
  for (index_t x = 0; x < g.order(); ++x)
    if (h.contains(q.projection[x])) in.set(x);
  return subgroup_from_members(g, in);
}

struct EmbeddedGroup {
  Group group;
  std::vector<index_t> embedding;  // element of the new group -> element of the parent
};

/// A subgroup as a standalone table group, with members renumbered in
/// ascending parent-index order.
inline EmbeddedGroup as_group(const Subgroup& h, std::string label = {}) {
  if (h.order() > Group::kTableLimit) throw GroupError("subgroup too large for a table group");
  const auto& g = h.parent();
  auto el = h.elements();
  std::vector<index_t> pos(g.order(), 0);
  for (std::size_t i = 0; i < el.size(); ++i) pos[el[i]] = static_cast<index_t>(i);
  const std::size_t m = el.size();
  std::vector<index_t> table(m * m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) table[a * m + b] = pos[g.mul(el[a], el[b])];
  if (label.empty()) label = g.label() + "/sub";
  return {Group::from_table(std::move(label), m, std::move(table)), std::move(el)};
}

/// Direct product with componentwise multiplication. Up to the table limit,
/// the pair (i, j) is element i + |G| * j; larger products are realized as
/// permutation groups on the disjoint union of both regular actions.
inline Group direct_product(const Group& a, const Group& b, std::size_t cap = Group::kDefaultCap) {
  const std::size_t na = a.order(), nb = b.order();
  const std::size_t n = na * nb;
  if (n > cap) throw GroupError("direct product exceeds element cap of " + std::to_string(cap));
  std::string label = a.label() + " x " + b.label();
  if (n <= Group::kTableLimit) {
    std::vector<index_t> gens;
    for (auto s : a.generators()) gens.push_back(s);
    for (auto t : b.generators()) gens.push_back(static_cast<index_t>(na * t));
    return Group::from_rule(std::move(label), n, [&](index_t x, index_t y) {
      return a.mul(x % na, y % na) + na * b.mul(x / na, y / na);
    }, std::move(gens));
  }
  const std::size_t degree = na + nb;
  std::vector<std::vector<index_t>> perms;
  for (auto s : a.generators()) {
    std::vector<index_t> p(degree);
    for (std::size_t i = 0; i < na; ++i) p[i] = a.mul(static_cast<index_t>(i), s);
    for (std::size_t j = 0; j < nb; ++j) p[na + j] = static_cast<index_t>(na + j);
    perms.push_back(std::move(p));
  }
  for (auto t : b.generators()) {
    std::vector<index_t> p(degree);
    for (std::size_t i = 0; i < na; ++i) p[i] = static_cast<index_t>(i);
    for (std::size_t j = 0; j < nb; ++j) p[na + j] = static_cast<index_t>(na + b.mul(static_cast<index_t>(j), t));
    perms.push_back(std::move(p));
  }
  return Group::from_permutations(std::move(label), degree, perms, cap);
}

/// Exhaustive (n <= 256) or sampled associativity plus identity/inverse/closure.
/// Returns an error description, or an empty string when the axioms hold.
template <class Rng>
std::string check_group_axioms(const Group& g, Rng& rng, std::size_t samples = 10000) {
  const std::size_t n = g.order();
  for (index_t x = 0; x < n; ++x) {
    if (g.mul(0, x) != x || g.mul(x, 0) != x) return "identity fails at " + std::to_string(x);
    const index_t y = g.inv(x);
    if (y >= n || g.mul(x, y) != 0 || g.mul(y, x) != 0) return "inverse fails at " + std::to_string(x);
  }
  auto assoc = [&](index_t a, index_t b, index_t c) { return g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c)); };
  if (n <= 256) {
    for (index_t a = 0; a < n; ++a)
      for (index_t b = 0; b < n; ++b)
        for (index_t c = 0; c < n; ++c)
          if (!assoc(a, b, c))
            return "associativity fails at (" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
  } else {
    for (std::size_t s = 0; s < samples; ++s) {
      const auto a = static_cast<index_t>(rng() % n), b = static_cast<index_t>(rng() % n), c = static_cast<index_t>(rng() % n);
      if (!assoc(a, b, c))
        return "associativity fails at (" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
    }
  }
  return {};
}

}  // namespace cindex
