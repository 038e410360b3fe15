// Acceptance suite: one PASS/FAIL line per criterion, with wall-clock limits.
// Exit status is nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <thread>

#include "cli_support.hpp"
#include "oracles.hpp"

using namespace cindex;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

struct Criterion {
  int id;
  std::string name;
  double limit_s;  // 0 means no limit
  std::function<Outcome()> run;
};

bool is_p_group_order(std::size_t n) { return n > 1 && small_prime_power(n).has_value(); }

Outcome anchors() {
  const auto q = mci(quaternion8()).m, d = mci(dihedral(8)).m;
  return {q == 1 && d == 2, "mci(Q8)=" + std::to_string(q) + " mci(D8)=" + std::to_string(d)};
}

Outcome sharpness() {
  Outcome o;
  std::ostringstream ss;
  for (auto [p, k] : std::vector<std::pair<std::uint64_t, unsigned>>{{2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}, {5, 1}}) {
    const Group g = modular_example(p, k);
    const std::uint64_t n = ipow(p, k + 1);
    const auto z = center(g);
    bool orders = true;
    for (index_t x = 0; x < g.order(); ++x)
      if (!z.contains(x)) orders &= g.element_order(x) == n;
    const bool ok = g.order() == ipow(p, 2 * k + 2) && mci(g).m == ipow(p, k) &&
                    generated_subgroup(g, {index_t(p), index_t(n * p)}) == z && orders;
    o.ok &= ok;
    ss << "M(" << p << "," << k << "):" << (ok ? "ok" : "BAD") << ' ';
  }
  o.detail = ss.str();
  return o;
}

Outcome order_bound() {
  std::size_t tested = 0, violations = 0, exempt = 0;
  const std::set<std::size_t> orders{8, 16, 32, 64, 27, 81, 243, 125, 343};
  std::set<std::size_t> seen;
  for (const auto& e : oracle::catalog()) {
    if (!orders.count(e.order)) continue;
    seen.insert(e.order);
    if (is_abelian(e.group)) continue;
    ++tested;
    const auto pp = *small_prime_power(e.order);
    const auto r = mci(e.group);
    const bool within = r.k_exp && e.order <= ipow(pp.first, 2 * *r.k_exp + 2);
    if (!within && oracle::is_q8(e.group)) {
      ++exempt;
      continue;
    }
    violations += !within;
  }
  return {violations == 0 && seen == orders && exempt == 1,
          std::to_string(tested) + " non-abelian p-groups, " + std::to_string(violations) + " violations, " +
              std::to_string(exempt) + " Q8 exemption"};
}

Outcome classification() {
  std::size_t discrepancies = 0, ones = 0;
  for (const auto& e : oracle::catalog()) {
    if (e.order > 100 || is_abelian(e.group)) continue;
    const bool one = mci(e.group).m == 1;
    ones += one;
    discrepancies += one != (oracle::is_q8(e.group) || oracle::is_pq_nonabelian_order(e.order));
  }
  return {discrepancies == 0, std::to_string(ones) + " groups with mci=1, " + std::to_string(discrepancies) + " discrepancies"};
}

Outcome omega_monotone() {
  std::size_t tested = 0, violations = 0;
  for (const auto& e : oracle::catalog()) {
    if (!is_p_group_order(e.order)) continue;
    const PGroupProfile prof(e.group);
    if (!prof.is_p_central()) continue;
    ++tested;
    const std::uint64_t p = prof.p();
    for (unsigned i = 0; i <= prof.exponent_exp(); ++i) {
      const auto a = prof.omega(i).order(), b = prof.omega(i + 1).order(), c = prof.omega(i + 2).order();
      violations += c / b > b / a;
    }
    for (unsigned i = 1; i <= prof.exponent_exp(); ++i) violations += exponent_of(prof.omega(i)) > ipow(p, i);
    violations += e.order / prof.agemo(1).order() > prof.omega(1).order();
  }
  return {violations == 0 && tested > 0, std::to_string(tested) + " p-central p-groups, " + std::to_string(violations) + " violations"};
}

Outcome bounds_sweep() {
  std::vector<Group> groups;
  for (const auto& e : oracle::catalog())
    if (e.order <= 512 && !is_abelian(e.group)) groups.push_back(e.group);
  for (const char* name : {"S3", "S4", "A4", "A5", "S5"}) groups.push_back(oracle::perm_fixture(name));
  const auto ledgers = parallel_map(groups.size(), std::max(1u, std::thread::hardware_concurrency()), [&](std::size_t i) { return build_ledger(groups[i]); });
  std::size_t violations = 0, records = 0;
  std::string first;
  for (std::size_t i = 0; i < groups.size(); ++i)
    for (const auto& r : ledgers[i].records) {
      if (r.claim == "TA") continue;
      ++records;
      if (!r.holds) {
        ++violations;
        if (first.empty()) first = " first: " + groups[i].label() + " " + r.claim;
      }
    }
  return {violations == 0, std::to_string(groups.size()) + " groups, " + std::to_string(records) + " P1/SR/T2/TB/PS records, " +
                               std::to_string(violations) + " violations" + first};
}

Outcome bad_prime_checks() {
  Outcome o;
  const bool s3 = bad_primes(oracle::perm_fixture("S3")) == std::vector<std::uint64_t>{2, 3};
  const bool a5 = bad_primes(oracle::perm_fixture("A5")) == std::vector<std::uint64_t>{3, 5};
  const bool q8 = bad_primes(quaternion8()).empty();
  const bool oracles = oracle::bad_primes(oracle::perm_fixture("S3")) == std::vector<std::uint64_t>{2, 3} &&
                       oracle::bad_primes(oracle::perm_fixture("A5")) == std::vector<std::uint64_t>{3, 5} &&
                       oracle::bad_primes(quaternion8()).empty();
  std::vector<Group> groups;
  for (const auto& e : oracle::catalog()) groups.push_back(e.group);
  for (const char* name : {"S3", "S4", "A4", "A5", "S5"}) groups.push_back(oracle::perm_fixture(name));
  std::size_t centerless = 0, iso_fail = 0, with_pistar = 0, red_fail = 0;
  for (const auto& g : groups) {
    if (g.order() == 1 || is_abelian(g)) continue;
    if (center(g).is_trivial()) {
      ++centerless;
      iso_fail += !isolated_equivalence_check(g);
    }
    if (!bad_primes(g).empty()) {
      ++with_pistar;
      red_fail += !reduction_check(g);
    }
  }
  o.ok = s3 && a5 && q8 && oracles && iso_fail == 0 && red_fail == 0;
  o.detail = std::string("spot checks ") + (s3 && a5 && q8 && oracles ? "ok" : "BAD") + ", isolated " +
             std::to_string(centerless - iso_fail) + "/" + std::to_string(centerless) + ", reduction " +
             std::to_string(with_pistar - red_fail) + "/" + std::to_string(with_pistar);
  return o;
}

Outcome cyclotomic() {
  using cyclo::BigInt;
  Outcome o;
  std::size_t phi_bad = 0, div_bad = 0, prime_bad = 0;
  for (std::uint64_t q = 2; q <= 10000; ++q)
    for (unsigned n : cyclo::kIndices) phi_bad += cyclo::phi_eval(n, q) != cyclo::phi_mobius(n, q);
  std::mt19937_64 rng(128);
  for (int t = 0; t < 1000; ++t) {
    BigInt q = (BigInt(rng()) << 64) | rng();
    if (q < 2) q = 2;
    for (unsigned n : cyclo::kIndices) div_bad += (boost::multiprecision::pow(q, n) - 1) % cyclo::phi_eval(n, q) != 0;
  }
  for (std::uint64_t n = 0; n <= 1000000; ++n) prime_bad += cyclo::is_prime_u64(n) != oracle::trial_division_prime(n);

  const auto t0 = std::chrono::steady_clock::now();
  std::vector<std::string> full, split;
  const auto sum = cyclo::hunt(100000, [&](const cyclo::HuntRecord& r) { full.push_back(r.to_line()); });
  const double hunt_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  cyclo::HuntOptions opt;
  const auto a = cyclo::hunt(40000, [&](const cyclo::HuntRecord& r) { split.push_back(r.to_line()); }, opt);
  opt.resume_after = a.last_scanned;
  const auto b = cyclo::hunt(100000, [&](const cyclo::HuntRecord& r) { split.push_back(r.to_line()); }, opt);
  const bool restart = split == full && a.scanned + b.scanned == sum.scanned && b.last_scanned == sum.last_scanned;

  o.ok = phi_bad == 0 && div_bad == 0 && prime_bad == 0 && hunt_s < 60.0 && restart;
  std::ostringstream ss;
  ss << "phi/mobius mismatches " << phi_bad << ", divisibility failures " << div_bad << ", primality mismatches "
     << prime_bad << ", hunt(1e5) " << sum.scanned << " scanned, " << sum.hits << " hits";
  if (sum.hits == 0) ss << " (none found <= 100000)";
  ss << " in " << hunt_s << " s, restart " << (restart ? "identical" : "DIFFERS");
  o.detail = ss.str();
  return o;
}

Outcome determinism() {
  const std::string inputs = (oracle::fixture_dir() / "catalog").string() + " " + (oracle::fixture_dir() / "perm").string();
  const auto one = cli::run("verify --jobs 1 " + inputs);
  const auto eight = cli::run("verify --jobs 8 " + inputs);
  const auto j1 = cli::run("verify --format json --jobs 1 " + inputs);
  const auto j8 = cli::run("verify --format json --jobs 8 " + inputs);
  const bool same = one.out == eight.out && j1.out == j8.out && !one.out.empty();
  return {same && one.status == 0 && eight.status == 0,
          std::string(same ? "byte-identical" : "DIFFERENT") + " reports (" + std::to_string(one.out.size()) +
              " bytes tsv), exit " + std::to_string(one.status) + "/" + std::to_string(eight.status)};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "anchor values mci(Q8)=1, mci(D8)=2", 1.0, anchors},
      {2, "sharpness family M(p,k)", 30.0, sharpness},
      {3, "order bound sweep over p-group fixtures", 300.0, order_bound},
      {4, "mci=1 classification, orders <= 100", 0.0, classification},
      {5, "Omega-index monotonicity on p-central fixtures", 0.0, omega_monotone},
      {6, "Sylow, nilpotent, bad-prime and pi* bounds sweep", 0.0, bounds_sweep},
      {7, "bad-prime spot checks", 0.0, bad_prime_checks},
      {8, "cyclotomic evaluation, primality and hunt", 0.0, cyclotomic},
      {9, "verify determinism, --jobs 1 vs --jobs 8", 0.0, determinism},
  };
  oracle::catalog();  // load fixtures outside the timed sections
  int failures = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = c.limit_s == 0.0 || secs < c.limit_s;
    const bool pass = o.ok && in_time;
    failures += !pass;
    char timing[64];
    if (c.limit_s > 0)
      std::snprintf(timing, sizeof timing, "%.2fs < %.0fs", secs, c.limit_s);
    else
      std::snprintf(timing, sizeof timing, "%.2fs", secs);
    std::cout << (pass ? "PASS" : "FAIL") << "  criterion " << c.id << ": " << c.name << " [" << timing << "] " << o.detail
              << (in_time ? "" : " (time limit exceeded)") << std::endl;
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
