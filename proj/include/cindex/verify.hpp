#pragma once

// Claim checks over catalog groups. Each check re-derives its statement on one
// group and reports violations with enough indices to replay it in isolation.

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "cindex/mci.hpp"
#include "cindex/pgroup.hpp"
#include "cindex/report.hpp"

namespace cindex {

enum class Claim { TA, P1, T2, TB, PS, L21, L36, OMEGA };

inline constexpr Claim kAllClaims[] = {Claim::TA, Claim::P1, Claim::T2, Claim::TB,
                                       Claim::PS, Claim::L21, Claim::L36, Claim::OMEGA};

inline std::string_view claim_name(Claim c) {
  switch (c) {
    case Claim::TA: return "TA";
    case Claim::P1: return "P1";
    case Claim::T2: return "T2";
    case Claim::TB: return "TB";
    case Claim::PS: return "PS";
    case Claim::L21: return "L21";
    case Claim::L36: return "L36";
    case Claim::OMEGA: return "OMEGA";
  }
  return "?";
}

inline Claim parse_claim(std::string_view s) {
  for (auto c : kAllClaims)
    if (claim_name(c) == s) return c;
  throw GroupError("unknown claim '" + std::string(s) + "'");
}

/// Comma-separated claim list; "all" selects every claim.
inline std::vector<Claim> parse_claims(std::string_view s) {
  std::vector<Claim> out;
  if (s == "all") return {std::begin(kAllClaims), std::end(kAllClaims)};
  std::size_t pos = 0;
  while (pos <= s.size()) {
    auto comma = s.find(',', pos);
    if (comma == std::string_view::npos) comma = s.size();
    auto tok = s.substr(pos, comma - pos);
    if (!tok.empty()) {
      const Claim c = parse_claim(tok);
      if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
    }
    pos = comma + 1;
  }
  if (out.empty()) throw GroupError("no claims selected");
  return out;
}

struct Violation {
  Claim claim;
  std::string detail;
};

struct ClaimOutcome {
  Claim claim;
  bool applicable = false;
  std::vector<Violation> violations;
};

/// Non-abelian of order pq (p < q primes, q = 1 mod p), or Q8 by invariants.
inline bool expected_mci_one(const Group& g) {
  if (is_abelian(g)) return false;
  if (looks_like_q8(g)) return true;
  const auto f = factorize(g.order());
  return f.size() == 2 && f[0].second == 1 && f[1].second == 1 && f[1].first % f[0].first == 1;
}

namespace detail {

inline std::string indices(std::span<const index_t> v) {
  std::ostringstream ss;
  ss << '[';
  for (std::size_t i = 0; i < v.size(); ++i) ss << (i ? " " : "") << v[i];
  ss << ']';
  return ss.str();
}

// Omega-index monotonicity and the standard p-central facts on one p-central p-group.
inline std::vector<std::string> omega_failures(const PGroupProfile& prof) {
  std::vector<std::string> out;
  const std::uint64_t p = prof.p();
  const unsigned top = prof.exponent_exp() + 2;
  auto ord = [&](unsigned i) { return prof.omega(i).order(); };
  for (unsigned i = 0; i + 2 <= top; ++i) {
    const std::size_t upper = ord(i + 2) / ord(i + 1), lower = ord(i + 1) / ord(i);
    if (upper > lower)
      out.push_back("|Omega_" + std::to_string(i + 2) + ":Omega_" + std::to_string(i + 1) + "| = " + std::to_string(upper) +
                    " > " + std::to_string(lower));
  }
  for (unsigned i = 1; i <= prof.exponent_exp(); ++i) {
    const std::uint64_t e = exponent_of(prof.omega(i));
    if (e > ipow(p, i))
      out.push_back("exp Omega_" + std::to_string(i) + " = " + std::to_string(e) + " > p^" + std::to_string(i) +
                    " generators " + indices(prof.omega(i).generators()));
  }
  const std::size_t index_gp = prof.group().order() / prof.agemo(1).order();
  if (index_gp > ord(1))
    out.push_back("|G:G^p| = " + std::to_string(index_gp) + " > |Omega_1| = " + std::to_string(ord(1)));
  if (!prof.is_abelian()) {
    const unsigned r = prof.central_omega_level();
    const std::size_t gap = ord(r + 1) / ord(r);
    if (gap < p * p)
      out.push_back("first gap |Omega_" + std::to_string(r + 1) + ":Omega_" + std::to_string(r) + "| = " +
                    std::to_string(gap) + " < p^2");
  }
  return out;
}

}  // namespace detail

/// Evaluates the selected claims on one group.
inline std::vector<ClaimOutcome> verify_group(const Group& g, std::span<const Claim> claims) {
  std::vector<ClaimOutcome> out;
  const bool abelian = is_abelian(g);
  std::optional<BoundLedger> ledger;
  std::optional<MciReport> rep;
  if (!abelian) {
    rep = mci(g);
    ledger = build_ledger(g);
  }
  auto ledger_claim = [&](ClaimOutcome& o, const char* id) {
    if (!ledger) return;
    for (const auto& rec : ledger->records) {
      if (rec.claim != id) continue;
      o.applicable = true;
      if (!rec.holds) {
        std::ostringstream ss;
        ss << id;
        if (!rec.detail.empty()) ss << " [" << rec.detail << "]";
        ss << ": " << rec.lhs << " > " << rec.rhs << " m=" << ledger->m << " witness=" << rep->witness.idx;
        o.violations.push_back({o.claim, ss.str()});
      }
    }
  };

  for (auto c : claims) {
    ClaimOutcome o{c, false, {}};
    switch (c) {
      case Claim::TA: ledger_claim(o, "TA"); break;
      case Claim::P1:
        ledger_claim(o, "P1");
        ledger_claim(o, "SR");
        break;
      case Claim::T2: ledger_claim(o, "T2"); break;
      case Claim::TB: ledger_claim(o, "TB"); break;
      case Claim::PS: ledger_claim(o, "PS"); break;
      case Claim::L21: {
        if (abelian) break;
        o.applicable = true;
        const bool is_one = rep->m == 1;
        if (is_one != expected_mci_one(g))
          o.violations.push_back({c, "mci=" + std::to_string(rep->m) + " witness=" + std::to_string(rep->witness.idx) +
                                         " expected mci=1: " + (expected_mci_one(g) ? "yes" : "no")});
        break;
      }
      case Claim::L36: {
        if (abelian) break;
        if (center(g).is_trivial()) {
          o.applicable = true;
          if (!isolated_equivalence_check(g)) {
            const auto pis = bad_primes(g);
            o.violations.push_back({c, "isolated-vertex equivalence fails; pi*={" + detail::join_list(pis) + "}"});
          }
        }
        if (!ledger->pi_star.empty()) {
          o.applicable = true;
          if (!reduction_check(g))
            o.violations.push_back({c, "reduction to G/Z(G) fails; pi*={" + detail::join_list(ledger->pi_star) + "}"});
        }
        break;
      }
      case Claim::OMEGA: {
        if (!is_p_group(g)) break;
        PGroupProfile prof(g);
        if (!prof.is_p_central()) break;
        o.applicable = true;
        for (auto& f : detail::omega_failures(prof)) o.violations.push_back({c, std::move(f)});
        break;
      }
    }
    out.push_back(std::move(o));
  }
  return out;
}

}  // namespace cindex
