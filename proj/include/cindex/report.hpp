#pragma once

// One-group analysis reports and their TSV / JSON renderings.

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cindex/mci.hpp"
#include "cindex/pgroup.hpp"

namespace cindex {

struct PGroupFlags {
  std::uint64_t p = 0;
  bool p_central = false;
  bool powerful = false;
  bool special = false;
  std::optional<bool> camina;  // undefined for abelian groups
  std::vector<std::size_t> omega_orders;
  std::vector<std::size_t> agemo_orders;
};

struct GroupReport {
  std::string source;
  std::string label;
  std::size_t order = 0;
  bool abelian = false;
  bool nilpotent = false;
  bool soluble = false;
  std::optional<MciReport> mci;
  std::vector<std::uint64_t> pi_star;
  std::optional<PrimeGraph> graph;
  std::optional<PGroupFlags> pflags;
  std::optional<BoundLedger> ledger;
};

inline GroupReport analyze(const Group& g, std::string source = {}) {
  GroupReport r;
  r.source = std::move(source);
  r.label = g.label();
  r.order = g.order();
  r.abelian = is_abelian(g);
  r.nilpotent = is_nilpotent(g);
  r.soluble = is_soluble(g);
  if (g.order() > 1) r.graph = prime_graph(g);
  if (is_p_group(g)) {
    PGroupProfile prof(g);
    PGroupFlags f;
    f.p = prof.p();
    f.p_central = prof.is_p_central();
    f.powerful = prof.is_powerful();
    f.special = prof.is_special();
    if (!prof.is_abelian()) f.camina = prof.is_camina();
    f.omega_orders = prof.omega_orders();
    f.agemo_orders = prof.agemo_orders();
    r.pflags = std::move(f);
  }
  if (!r.abelian) {
    r.mci = mci(g);
    r.ledger = build_ledger(g);
    r.pi_star = r.ledger->pi_star;
  }
  return r;
}

inline const std::vector<std::string>& ledger_claims() {
  static const std::vector<std::string> v{"TA", "P1", "SR", "T2", "TB", "PS"};
  return v;
}

/// "ok", "exempt", "FAIL", or "-" when the claim does not apply.
inline std::string claim_verdict(const GroupReport& r, const std::string& claim) {
  if (!r.ledger) return "-";
  bool any = false, exempt = false;
  for (const auto& rec : r.ledger->records) {
    if (rec.claim != claim) continue;
    any = true;
    if (!rec.holds) return "FAIL";
    if (!rec.exemption.empty()) exempt = true;
  }
  if (!any) return "-";
  return exempt ? "exempt" : "ok";
}

namespace detail {

template <class T>
std::string join_list(const std::vector<T>& v, const char* sep = ",") {
  std::ostringstream ss;
  for (std::size_t i = 0; i < v.size(); ++i) ss << (i ? sep : "") << v[i];
  return ss.str();
}

inline std::string components_string(const PrimeGraph& g) {
  std::string out;
  for (std::size_t i = 0; i < g.components.size(); ++i) {
    if (i) out += ';';
    out += join_list(g.components[i]);
  }
  return out;
}

inline std::vector<std::string> flag_names(const GroupReport& r) {
  std::vector<std::string> f;
  if (r.nilpotent) f.push_back("nilpotent");
  if (r.soluble) f.push_back("soluble");
  if (r.pflags) {
    if (r.pflags->p_central) f.push_back("pcentral");
    if (r.pflags->powerful) f.push_back("powerful");
    if (r.pflags->camina.value_or(false)) f.push_back("camina");
    if (r.pflags->special) f.push_back("special");
  }
  return f;
}

inline std::string or_dash(const std::string& s) { return s.empty() ? "-" : s; }

}  // namespace detail

/// Columns: label order abelian m witness kexp pistar components flags TA P1 SR T2 TB PS
inline std::string tsv_header() {
  std::string h = "label\torder\tabelian\tm\twitness\tkexp\tpistar\tcomponents\tflags";
  for (const auto& c : ledger_claims()) h += "\t" + c;
  return h;
}

inline std::string to_tsv(const GroupReport& r) {
  std::ostringstream ss;
  ss << r.label << '\t' << r.order << '\t' << (r.abelian ? "yes" : "no") << '\t';
  if (r.mci) {
    ss << r.mci->m << '\t' << r.mci->witness.idx << '\t';
    ss << (r.mci->k_exp ? std::to_string(*r.mci->k_exp) : "-") << '\t';
  } else {
    ss << "abelian\t-\t-\t";
  }
  ss << (r.abelian ? "-" : detail::or_dash(detail::join_list(r.pi_star))) << '\t';
  ss << (r.graph ? detail::or_dash(detail::components_string(*r.graph)) : "-") << '\t';
  ss << detail::or_dash(detail::join_list(detail::flag_names(r)));
  for (const auto& c : ledger_claims()) ss << '\t' << claim_verdict(r, c);
  return ss.str();
}

inline nlohmann::ordered_json to_json(const GroupReport& r) {
  nlohmann::ordered_json j;
  if (!r.source.empty()) j["source"] = r.source;
  j["label"] = r.label;
  j["order"] = r.order;
  j["abelian"] = r.abelian;
  j["nilpotent"] = r.nilpotent;
  j["soluble"] = r.soluble;
  if (r.mci) {
    j["mci"] = r.mci->m;
    j["witness"] = r.mci->witness.idx;
    j["kexp"] = r.mci->k_exp ? nlohmann::ordered_json(*r.mci->k_exp) : nlohmann::ordered_json();
    j["pistar"] = r.pi_star;
  } else {
    j["mci"] = nullptr;
  }
  if (r.graph) {
    j["prime_graph"] = {{"vertices", r.graph->vertices},
                        {"components", r.graph->components},
                        {"isolated", r.graph->isolated}};
  }
  if (r.pflags) {
    nlohmann::ordered_json p;
    p["p"] = r.pflags->p;
    p["p_central"] = r.pflags->p_central;
    p["powerful"] = r.pflags->powerful;
    p["special"] = r.pflags->special;
    p["camina"] = r.pflags->camina ? nlohmann::ordered_json(*r.pflags->camina) : nlohmann::ordered_json();
    p["omega_orders"] = r.pflags->omega_orders;
    p["agemo_orders"] = r.pflags->agemo_orders;
    j["pgroup"] = p;
  }
  j["flags"] = detail::flag_names(r);
  if (r.ledger) {
    nlohmann::ordered_json recs = nlohmann::ordered_json::array();
    for (const auto& rec : r.ledger->records) {
      recs.push_back({{"claim", rec.claim},
                      {"detail", rec.detail},
                      {"lhs", rec.lhs.str()},
                      {"rhs", rec.rhs.str()},
                      {"holds", rec.holds},
                      {"exemption", rec.exemption}});
    }
    j["ledger"] = {{"records", recs},
                   {"f0", r.ledger->f0.str()},
                   {"f1", r.ledger->f1.str()},
                   {"product_pistar", r.ledger->product_pi_star.str()},
                   {"general_bound", r.ledger->general_bound.str()}};
  }
  nlohmann::ordered_json verdicts;
  for (const auto& c : ledger_claims()) verdicts[c] = claim_verdict(r, c);
  j["verdicts"] = verdicts;
  return j;
}

/// Human-readable multi-line report used by `analyze`.
inline std::string to_text(const GroupReport& r) {
  std::ostringstream ss;
  ss << "group      " << r.label << '\n';
  ss << "order      " << r.order << '\n';
  ss << "abelian    " << (r.abelian ? "yes" : "no") << '\n';
  if (r.mci) {
    ss << "mci        " << r.mci->m << " (witness " << r.mci->witness.idx;
    if (r.mci->k_exp) ss << ", k = " << *r.mci->k_exp;
    ss << ")\n";
    ss << "pi*        {" << detail::join_list(r.pi_star) << "}\n";
  } else {
    ss << "mci        abelian (undefined)\n";
  }
  if (r.graph) ss << "components " << detail::or_dash(detail::components_string(*r.graph)) << '\n';
  ss << "flags      " << detail::or_dash(detail::join_list(detail::flag_names(r))) << '\n';
  if (r.pflags) {
    ss << "omega      " << detail::join_list(r.pflags->omega_orders) << '\n';
    ss << "agemo      " << detail::join_list(r.pflags->agemo_orders) << '\n';
  }
  if (r.ledger) {
    for (const auto& rec : r.ledger->records) {
      ss << "claim " << rec.claim;
      if (!rec.detail.empty()) ss << " [" << rec.detail << "]";
      ss << ": " << rec.lhs << " <= " << rec.rhs << "  " << (rec.holds ? "holds" : "FAILS");
      if (!rec.exemption.empty()) ss << " (exemption " << rec.exemption << ")";
      ss << '\n';
    }
  }
  return ss.str();
}

}  // namespace cindex
