// cindex: batch front end for the centralizer-index toolkit.
//
// Exit codes: 0 success, 1 input error, 2 claim violation.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cindex/cindex.hpp"

namespace fs = std::filesystem;
using namespace cindex;

namespace {

constexpr int kOk = 0;
constexpr int kInputError = 1;
constexpr int kViolation = 2;

const char* kTsvHelp =
    "TSV columns (scan --format tsv):\n"
    "  label       group label from the catalog\n"
    "  order       |G|\n"
    "  abelian     yes | no\n"
    "  m           maximum centralizer index, or 'abelian'\n"
    "  witness     smallest element index attaining m\n"
    "  kexp        k with m = p^k for p-groups, else '-'\n"
    "  pistar      bad primes, comma-joined ('-' if none)\n"
    "  components  prime-graph components, ';'-separated\n"
    "  flags       nilpotent,soluble,pcentral,powerful,camina,special\n"
    "  TA P1 SR T2 TB PS   ledger verdicts: ok | exempt | FAIL | -\n";

struct LoadedGroup {
  std::string path;
  CatalogEntry entry;
};

std::vector<fs::path> collect_files(const std::vector<std::string>& inputs, std::vector<std::string>& errors) {
  std::vector<fs::path> files;
  for (const auto& in : inputs) {
    std::error_code ec;
    if (fs::is_directory(in, ec)) {
      for (const auto& e : fs::recursive_directory_iterator(in, ec))
        if (e.is_regular_file()) files.push_back(e.path());
    } else if (fs::is_regular_file(in, ec)) {
      files.emplace_back(in);
    } else {
      errors.push_back(in + ": no such file or directory");
    }
  }
  std::sort(files.begin(), files.end());
  return files;
}

// Groups ordered by path, then label.
std::vector<LoadedGroup> load_all(const std::vector<std::string>& inputs, std::size_t cap, std::vector<std::string>& errors) {
  std::vector<LoadedGroup> out;
  for (const auto& f : collect_files(inputs, errors)) {
    try {
      auto entries = load_catalog_file(f, cap);
      std::stable_sort(entries.begin(), entries.end(),
                       [](const CatalogEntry& a, const CatalogEntry& b) { return a.label < b.label; });
      for (auto& e : entries) out.push_back({f.string(), std::move(e)});
    } catch (const std::exception& e) {
      errors.push_back(f.string() + ": " + e.what());
    }
  }
  return out;
}

int report_errors(const std::vector<std::string>& errors) {
  for (const auto& e : errors) std::cerr << "error: " << e << '\n';
  return kInputError;
}

int cmd_analyze(const std::string& path, const std::string& format, std::size_t cap) {
  Group g;
  try {
    g = load_group(read_text_file(path), cap);
  } catch (const std::exception& e) {
    std::cerr << "error: " << path << ": " << e.what() << '\n';
    return kInputError;
  }
  const GroupReport r = analyze(g);
  if (format == "json") {
    std::cout << to_json(r).dump(2) << '\n';
  } else if (format == "tsv") {
    std::cout << tsv_header() << '\n' << to_tsv(r) << '\n';
  } else {
    std::cout << to_text(r);
  }
  return r.ledger && !r.ledger->all_hold() ? kViolation : kOk;
}

int cmd_scan(const std::vector<std::string>& inputs, const std::string& format, unsigned jobs, std::size_t cap) {
  std::vector<std::string> errors;
  auto groups = load_all(inputs, cap, errors);
  if (!errors.empty()) return report_errors(errors);
  if (groups.empty()) return report_errors({"empty catalog"});
  auto reports = parallel_map(groups.size(), jobs, [&](std::size_t i) { return analyze(groups[i].entry.group, groups[i].path); });
  bool failed = false;
  if (format == "json") {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : reports) arr.push_back(to_json(r));
    std::cout << arr.dump(2) << '\n';
  } else {
    std::cout << tsv_header() << '\n';
    for (const auto& r : reports) std::cout << to_tsv(r) << '\n';
  }
  for (const auto& r : reports) failed |= r.ledger && !r.ledger->all_hold();
  return failed ? kViolation : kOk;
}

int cmd_verify(const std::vector<std::string>& inputs, const std::string& claims_arg, const std::string& format,
               unsigned jobs, std::size_t cap) {
  std::vector<Claim> claims;
  try {
    claims = parse_claims(claims_arg);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  std::vector<std::string> errors;
  auto groups = load_all(inputs, cap, errors);
  if (!errors.empty()) return report_errors(errors);
  if (groups.empty()) return report_errors({"empty catalog"});
  auto outcomes = parallel_map(groups.size(), jobs, [&](std::size_t i) { return verify_group(groups[i].entry.group, claims); });

  std::size_t total = 0;
  if (format == "json") {
    nlohmann::ordered_json summary = nlohmann::ordered_json::array();
    nlohmann::ordered_json violations = nlohmann::ordered_json::array();
    for (std::size_t k = 0; k < claims.size(); ++k) {
      std::size_t applicable = 0, bad = 0;
      for (std::size_t i = 0; i < groups.size(); ++i) {
        const auto& o = outcomes[i][k];
        applicable += o.applicable;
        for (const auto& v : o.violations) {
          ++bad;
          violations.push_back({{"claim", claim_name(v.claim)},
                                {"source", groups[i].path},
                                {"label", groups[i].entry.label},
                                {"detail", v.detail}});
        }
      }
      total += bad;
      summary.push_back({{"claim", claim_name(claims[k])}, {"groups", groups.size()}, {"applicable", applicable}, {"violations", bad}});
    }
    std::cout << nlohmann::ordered_json{{"summary", summary}, {"violations", violations}}.dump(2) << '\n';
  } else {
    for (std::size_t k = 0; k < claims.size(); ++k) {
      std::size_t applicable = 0, bad = 0;
      for (std::size_t i = 0; i < groups.size(); ++i) {
        const auto& o = outcomes[i][k];
        applicable += o.applicable;
        for (const auto& v : o.violations) {
          ++bad;
          std::cout << "VIOLATION\t" << claim_name(v.claim) << '\t' << groups[i].path << '\t' << groups[i].entry.label
                    << '\t' << v.detail << '\n';
        }
      }
      total += bad;
      std::cout << claim_name(claims[k]) << "\tgroups=" << groups.size() << "\tapplicable=" << applicable
                << "\tviolations=" << bad << '\n';
    }
  }
  return total == 0 ? kOk : kViolation;
}

Group build_family(const std::string& family, const std::vector<std::uint64_t>& params, std::size_t cap) {
  auto need = [&](std::size_t n) {
    if (params.size() != n)
      throw GroupError("family '" + family + "' takes " + std::to_string(n) + " parameter(s)");
  };
  if (family == "cyclic") {
    need(1);
    return cyclic(params[0], cap);
  }
  if (family == "elementary") {
    need(2);
    return elementary_abelian(params[0], static_cast<unsigned>(params[1]), cap);
  }
  if (family == "dihedral") {
    need(1);
    return dihedral(params[0], cap);
  }
  if (family == "quaternion") {
    need(0);
    return quaternion8();
  }
  if (family == "pq") {
    need(2);
    return nonabelian_pq(params[0], params[1], cap);
  }
  if (family == "modular") {
    need(2);
    return modular_example(params[0], static_cast<unsigned>(params[1]), cap);
  }
  if (family == "semidirect") {
    need(3);
    return semidirect_cyclic({params[0], params[1], params[2]}, {}, cap);
  }
  throw GroupError("unknown family '" + family + "'");
}

int cmd_construct(const std::string& family, const std::vector<std::uint64_t>& params, const std::string& out_path,
                  std::size_t cap) {
  std::string text;
  try {
    text = to_table_block(build_family(family, params, cap));
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
    return kOk;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!(out << text)) {
    std::cerr << "error: cannot write " << out_path << '\n';
    return kInputError;
  }
  return kOk;
}

int cmd_hunt(std::uint64_t q_max, const std::string& checkpoint, const std::string& log_path, unsigned jobs) {
  cyclo::HuntOptions opt;
  opt.jobs = jobs;
  if (!checkpoint.empty() && fs::exists(checkpoint)) {
    std::ifstream in(checkpoint);
    std::uint64_t v = 0;
    if (!(in >> v)) {
      std::cerr << "error: malformed checkpoint " << checkpoint << '\n';
      return kInputError;
    }
    opt.resume_after = v;
  }
  std::ofstream log;
  if (!log_path.empty()) {
    log.open(log_path, std::ios::app | std::ios::binary);
    if (!log) {
      std::cerr << "error: cannot open " << log_path << '\n';
      return kInputError;
    }
  }
  std::ostream& sink = log_path.empty() ? std::cout : log;
  cyclo::HuntSummary sum;
  try {
    sum = cyclo::hunt(q_max, [&](const cyclo::HuntRecord& r) { sink << r.to_line() << '\n'; }, opt);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  sink.flush();
  // Largest fully scanned prime power; unchanged when nothing was scanned.
  if (!checkpoint.empty() && sum.last_scanned) {
    std::ofstream out(checkpoint, std::ios::trunc);
    out << *sum.last_scanned << '\n';
    if (!out) {
      std::cerr << "error: cannot write " << checkpoint << '\n';
      return kInputError;
    }
  }
  std::cerr << "scanned " << sum.scanned << " prime powers";
  if (opt.resume_after) std::cerr << " after " << *opt.resume_after;
  std::cerr << ", hits " << sum.hits;
  if (sum.hits == 0) std::cerr << " (none found <= " << q_max << ")";
  std::cerr << "; first composite at Phi_15/20/24/30: " << sum.rejected_by[0] << '/' << sum.rejected_by[1] << '/'
            << sum.rejected_by[2] << '/' << sum.rejected_by[3] << '\n';
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cindex: maximum centralizer index, bad primes and bound checks for finite groups"};
  app.footer(kTsvHelp);
  app.require_subcommand(1);

  std::string format = "tsv";
  unsigned jobs = 1;
  std::size_t cap = Group::kDefaultCap;

  auto add_common = [&](CLI::App* sub, bool with_jobs) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"tsv", "json", "text"}));
    sub->add_option("--cap", cap, "Element cap for closures")->check(CLI::PositiveNumber);
    if (with_jobs) sub->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  };

  std::string analyze_path;
  auto* analyze = app.add_subcommand("analyze", "Analyze one catalog entry");
  analyze->add_option("path", analyze_path, "Catalog file with one group")->required();
  add_common(analyze, false);

  std::vector<std::string> scan_inputs;
  auto* scan = app.add_subcommand("scan", "Report one row per group of a catalog");
  scan->add_option("inputs", scan_inputs, "Catalog files or directories")->required();
  add_common(scan, true);

  std::vector<std::string> verify_inputs;
  std::string claims = "all";
  auto* verify = app.add_subcommand("verify", "Check claims on every group of a catalog");
  verify->add_option("inputs", verify_inputs, "Catalog files or directories")->required();
  verify->add_option("--claims", claims, "Comma-separated subset of TA,P1,T2,TB,PS,L21,L36,OMEGA (or 'all')");
  add_common(verify, true);

  std::string family, out_path;
  std::vector<std::uint64_t> params;
  auto* construct = app.add_subcommand("construct", "Write a named family member as a Cayley table");
  construct->add_option("family", family, "cyclic|elementary|dihedral|quaternion|pq|modular|semidirect")->required();
  construct->add_option("params", params, "Family parameters");
  construct->add_option("-o,--output", out_path, "Output file (default stdout)");
  construct->add_option("--cap", cap, "Element cap")->check(CLI::PositiveNumber);

  std::uint64_t q_max = 0;
  std::string checkpoint, log_path;
  auto* hunt = app.add_subcommand("hunt", "Search prime powers q <= qMax for simultaneous prime cyclotomic values");
  hunt->add_option("qmax", q_max, "Upper bound for q")->required();
  hunt->add_option("--checkpoint", checkpoint, "Checkpoint file (read to resume, rewritten on success)");
  hunt->add_option("--log", log_path, "Hit log (appended; default stdout)");
  hunt->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kInputError;
  }

  try {
    if (*analyze) return cmd_analyze(analyze_path, analyze->count("--format") ? format : "text", cap);
    if (*scan) return cmd_scan(scan_inputs, format, jobs, cap);
    if (*verify) return cmd_verify(verify_inputs, claims, verify->count("--format") ? format : "tsv", jobs, cap);
    if (*construct) return cmd_construct(family, params, out_path, cap);
    if (*hunt) return cmd_hunt(q_max, checkpoint, log_path, jobs);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kOk;
}
