#pragma once

// Dense index-based finite groups.
//
// Elements are integers in [0, n) with the identity pinned to 0. Groups up to
// Group::kTableLimit elements carry a full n x n multiplication table; larger
// permutation groups keep their permutation images and resolve products through
// a hash from permutation to index.

#include <atomic>
#include <bit>
#include <cstdint>
#include <memory>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace cindex {

using index_t = std::uint32_t;

class GroupError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Fixed-size bitset over element indices.
class MemberSet {
 public:
  MemberSet() = default;
  explicit MemberSet(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}

  std::size_t universe() const noexcept { return n_; }
  bool test(index_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(index_t i) noexcept { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(index_t i) noexcept { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  std::size_t count() const noexcept {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool subset_of(const MemberSet& other) const noexcept {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & ~other.words_[k]) return false;
    return true;
  }

  MemberSet operator&(const MemberSet& other) const {
    MemberSet r(n_);
    for (std::size_t k = 0; k < words_.size(); ++k) r.words_[k] = words_[k] & other.words_[k];
    return r;
  }

  std::vector<index_t> elements() const {
    std::vector<index_t> out;
    for (std::size_t k = 0; k < words_.size(); ++k) {
      std::uint64_t w = words_[k];
      while (w) {
        out.push_back(static_cast<index_t>(k * 64 + std::countr_zero(w)));
        w &= w - 1;
      }
    }
    return out;
  }

  std::span<const std::uint64_t> words() const noexcept { return words_; }

  friend bool operator==(const MemberSet&, const MemberSet&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

struct MemberSetHash {
  std::size_t operator()(const MemberSet& s) const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ull;
    for (auto w : s.words()) h = (h ^ w) * 0x100000001b3ull + (h >> 29);
    return static_cast<std::size_t>(h);
  }
};

class Group;

/// An element tagged with the identity of its owning group.
struct ElementRef {
  std::uint64_t group_id = 0;
  index_t idx = 0;
  friend bool operator==(const ElementRef&, const ElementRef&) = default;
};

namespace detail {

struct VectorHash {
  std::size_t operator()(const std::vector<index_t>& v) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (auto x : v) h = (h ^ x) * 1099511628211ull;
    return static_cast<std::size_t>(h);
  }
};

inline std::uint64_t next_group_id() {
  static std::atomic<std::uint64_t> counter{1};
  return counter.fetch_add(1, std::memory_order_relaxed);
}

struct GroupImpl {
  std::uint64_t id = 0;
  std::string label;
  std::size_t n = 0;
  std::vector<index_t> generators;

  // Exactly one backend is populated.
  std::vector<index_t> table;  // n * n, row-major: table[a * n + b] = a * b

  std::size_t degree = 0;     // permutation backend
  std::vector<index_t> perms;  // n * degree images, 0-based
  std::unordered_map<std::vector<index_t>, index_t, VectorHash> perm_index;

  std::vector<index_t> inverse;
  std::vector<index_t> element_order;

  index_t mul(index_t a, index_t b) const {
    if (!table.empty()) return table[static_cast<std::size_t>(a) * n + b];
    // Right action: i^(ab) = (i^a)^b.
    std::vector<index_t> img(degree);
    const index_t* pa = perms.data() + static_cast<std::size_t>(a) * degree;
    const index_t* pb = perms.data() + static_cast<std::size_t>(b) * degree;
    for (std::size_t i = 0; i < degree; ++i) img[i] = pb[pa[i]];
    return perm_index.at(img);
  }

  // Orders and inverses by walking cyclic subgroups; x^k inherits o/gcd(o,k).
  void compute_orders_and_inverses() {
    inverse.assign(n, 0);
    element_order.assign(n, 0);
    std::vector<index_t> powers;
    for (index_t x = 0; x < n; ++x) {
      if (element_order[x] != 0) continue;
      powers.clear();
      powers.push_back(0);
      index_t y = x;
      while (y != 0) {
        powers.push_back(y);
        y = mul(y, x);
        if (powers.size() > n) throw GroupError("element order exceeds group order");
      }
      const std::size_t o = powers.size();
      for (std::size_t k = 0; k < o; ++k) {
        const index_t z = powers[k];
        if (element_order[z] == 0) element_order[z] = static_cast<index_t>(o / std::gcd(o, k == 0 ? o : k));
        inverse[z] = powers[(o - k) % o];
      }
    }
  }
};

}  // namespace detail

class Group {
 public:
  static constexpr std::size_t kTableLimit = 4096;
  static constexpr std::size_t kDefaultCap = 50000;

  Group() = default;

  /// Builds a group from a row-major Cayley table. Row and column 0 must be the
  /// identity; closure and two-sided inverses are checked.
  static Group from_table(std::string label, std::size_t n, std::vector<index_t> table) {
    if (n == 0) throw GroupError("group order must be positive");
    if (table.size() != n * n) throw GroupError("table size does not match order");
    for (auto v : table)
      if (v >= n) throw GroupError("table entry out of range");
    for (index_t x = 0; x < n; ++x)
      if (table[x] != x || table[static_cast<std::size_t>(x) * n] != x)
        throw GroupError("element 0 is not a two-sided identity");
    for (index_t x = 0; x < n; ++x) {
      bool found = false;
      for (index_t y = 0; y < n && !found; ++y)
        found = table[static_cast<std::size_t>(x) * n + y] == 0 && table[static_cast<std::size_t>(y) * n + x] == 0;
      if (!found) throw GroupError("element " + std::to_string(x) + " has no two-sided inverse");
    }
    auto impl = std::make_shared<detail::GroupImpl>();
    impl->id = detail::next_group_id();
    impl->label = std::move(label);
    impl->n = n;
    impl->table = std::move(table);
    impl->compute_orders_and_inverses();
    Group g(std::move(impl));
    g.set_greedy_generators();
    return g;
  }

  /// Closes a set of permutations (0-based image lists) under multiplication.
  /// The identity permutation becomes index 0; elements are numbered in BFS order.
  static Group from_permutations(std::string label, std::size_t degree,
                                 const std::vector<std::vector<index_t>>& gens,
                                 std::size_t cap = kDefaultCap) {
    if (degree == 0) throw GroupError("permutation degree must be positive");
    for (const auto& g : gens) {
      if (g.size() != degree) throw GroupError("generator length does not match degree");
      std::vector<bool> seen(degree, false);
      for (auto v : g) {
        if (v >= degree || seen[v]) throw GroupError("generator is not a permutation");
        seen[v] = true;
      }
    }
    std::vector<index_t> perms;
    std::unordered_map<std::vector<index_t>, index_t, detail::VectorHash> index;
    std::vector<index_t> identity(degree);
    std::iota(identity.begin(), identity.end(), 0);
    perms.insert(perms.end(), identity.begin(), identity.end());
    index.emplace(identity, 0);

    // BFS over right multiplication by generators; remember a spanning tree so
    // the full table can be filled without hashing every product.
    std::vector<index_t> parent{0}, via{0};
    std::vector<index_t> img(degree);
    for (std::size_t head = 0; head < index.size(); ++head) {
      for (std::size_t gi = 0; gi < gens.size(); ++gi) {
        const index_t* pa = perms.data() + head * degree;
        for (std::size_t i = 0; i < degree; ++i) img[i] = gens[gi][pa[i]];
        if (index.find(img) == index.end()) {
          if (index.size() >= cap)
            throw GroupError("closure exceeds element cap of " + std::to_string(cap));
          const auto id = static_cast<index_t>(index.size());
          index.emplace(img, id);
          perms.insert(perms.end(), img.begin(), img.end());
          parent.push_back(static_cast<index_t>(head));
          via.push_back(static_cast<index_t>(gi));
        }
      }
    }
    const std::size_t n = index.size();

    auto impl = std::make_shared<detail::GroupImpl>();
    impl->id = detail::next_group_id();
    impl->label = std::move(label);
    impl->n = n;

    std::vector<index_t> gen_index(gens.size());
    for (std::size_t gi = 0; gi < gens.size(); ++gi) gen_index[gi] = index.at(gens[gi]);

    if (n <= kTableLimit) {
      // right[x * k + gi] = x * gen_gi
      const std::size_t k = gens.size();
      std::vector<index_t> right(n * k);
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t gi = 0; gi < k; ++gi) {
          const index_t* px = perms.data() + x * degree;
          for (std::size_t i = 0; i < degree; ++i) img[i] = gens[gi][px[i]];
          right[x * k + gi] = index.at(img);
        }
      impl->table.assign(n * n, 0);
      for (std::size_t a = 0; a < n; ++a) {
        impl->table[a * n] = static_cast<index_t>(a);
        for (std::size_t b = 1; b < n; ++b)
          impl->table[a * n + b] = right[impl->table[a * n + parent[b]] * k + via[b]];
      }
    } else {
      impl->degree = degree;
      impl->perms = std::move(perms);
      impl->perm_index = std::move(index);
    }
    impl->compute_orders_and_inverses();
    for (auto g : gen_index)
      if (g != 0) impl->generators.push_back(g);
    Group grp(std::move(impl));
    if (grp.impl_->generators.empty() && n > 1) grp.set_greedy_generators();
    return grp;
  }

  /// Builds a table group from a product rule on [0, n).
  template <class Mul>
  static Group from_rule(std::string label, std::size_t n, Mul&& mul, std::vector<index_t> generators = {}) {
    if (n > kTableLimit) throw GroupError("rule-defined groups are limited to " + std::to_string(kTableLimit) + " elements");
    std::vector<index_t> table(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) table[a * n + b] = static_cast<index_t>(mul(static_cast<index_t>(a), static_cast<index_t>(b)));
    Group g = from_table(std::move(label), n, std::move(table));
    if (!generators.empty()) {
      std::erase(generators, index_t{0});
      auto impl = std::const_pointer_cast<detail::GroupImpl>(g.impl_);
      impl->generators = std::move(generators);
    }
    return g;
  }

  bool valid() const noexcept { return impl_ != nullptr; }
  std::uint64_t id() const noexcept { return impl_->id; }
  std::size_t order() const noexcept { return impl_->n; }
  const std::string& label() const noexcept { return impl_->label; }
  std::span<const index_t> generators() const noexcept { return impl_->generators; }
  bool has_table() const noexcept { return !impl_->table.empty(); }

  index_t mul(index_t a, index_t b) const { return impl_->mul(a, b); }
  index_t inv(index_t a) const noexcept { return impl_->inverse[a]; }
  index_t element_order(index_t a) const noexcept { return impl_->element_order[a]; }

  index_t pow(index_t a, std::uint64_t e) const {
    e %= impl_->element_order[a];
    index_t r = 0, base = a;
    while (e) {
      if (e & 1) r = mul(r, base);
      base = mul(base, base);
      e >>= 1;
    }
    return r;
  }

  /// [a, b] = a^-1 b^-1 a b
  index_t commutator(index_t a, index_t b) const { return mul(mul(inv(a), inv(b)), mul(a, b)); }
  /// h^g = g^-1 h g
  index_t conjugate(index_t h, index_t g) const { return mul(mul(inv(g), h), g); }

  ElementRef element(index_t idx) const {
    if (idx >= order()) throw GroupError("element index out of range");
    return {id(), idx};
  }
  ElementRef identity() const { return {id(), 0}; }

  index_t check(const ElementRef& e) const {
    if (e.group_id != id()) throw GroupError("element belongs to a different group");
    if (e.idx >= order()) throw GroupError("element index out of range");
    return e.idx;
  }

  ElementRef mul(const ElementRef& a, const ElementRef& b) const { return {id(), mul(check(a), check(b))}; }
  ElementRef inv(const ElementRef& a) const { return {id(), inv(check(a))}; }
  index_t element_order(const ElementRef& a) const { return element_order(check(a)); }

  bool same_as(const Group& other) const noexcept { return impl_ == other.impl_; }

 private:
  explicit Group(std::shared_ptr<const detail::GroupImpl> impl) : impl_(std::move(impl)) {}

  // Ascending scan: adjoin any element outside the current closure.
  void set_greedy_generators() {
    const std::size_t n = order();
    std::vector<index_t> gens;
    MemberSet in(n);
    in.set(0);
    std::vector<index_t> members{0};
    for (index_t x = 1; x < n; ++x) {
      if (in.test(x)) continue;
      gens.push_back(x);
      for (std::size_t head = 0; head < members.size(); ++head)
        for (auto g : gens) {
          const index_t y = mul(members[head], g);
          if (!in.test(y)) {
            in.set(y);
            members.push_back(y);
          }
        }
    }
    auto impl = std::const_pointer_cast<detail::GroupImpl>(impl_);
    impl->generators = std::move(gens);
  }

  std::shared_ptr<const detail::GroupImpl> impl_;
};

}  // namespace cindex
