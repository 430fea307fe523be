// Acceptance suite: runs every gate criterion, prints one PASS/FAIL line
// per criterion, and exits nonzero if any fail.  All comparisons are exact
// integer or multiset equality against the reference tables.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <memory>
#include <sstream>
#include <tuple>

#include "p2q/report_io.hpp"
#include "property_checks.hpp"

using namespace p2q;

namespace {

int failures = 0;

struct Timer {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  }
};

struct Cell {
  GroupTable g;
  AutGroup a;
  EnumResult enumeration;
  CensusReport report;
  explicit Cell(GroupSpec s) : g(build_group(s)), a(automorphisms(g)) {
    EnumConfig cfg;
    cfg.workers = 2;
    enumeration = enumerate_gfs(a, cfg);
    report = build_report(a, enumeration);
  }
};

// heap-allocated so the AutGroup's back-pointer stays valid
Cell& census(int fam, long p, long q, long k = 0) {
  static std::map<std::tuple<int, long, long, long>, std::unique_ptr<Cell>> cache;
  auto key = std::make_tuple(fam, p, q, k);
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, std::make_unique<Cell>(make_spec(fam, p, q, k))).first;
  return *it->second;
}

// compare one census cell against expected (e', classes, lengths)
void check_cell(std::ostringstream& out, bool& ok, const CensusReport& r,
                TypeLabel target, long e_prime, long classes,
                const std::vector<long>* lengths = nullptr) {
  const TargetCell* c = r.cell(target);
  long got_ep = c ? c->e_prime : 0;
  long got_cl = c ? c->classes() : 0;
  if (got_ep != e_prime) {
    ok = false;
    out << " e'(" << target.str() << "<-" << r.g_label.str() << ")=" << got_ep
        << " expected " << e_prime << ";";
  }
  if (got_cl != classes) {
    ok = false;
    out << " classes(" << target.str() << "<-" << r.g_label.str() << ")=" << got_cl
        << " expected " << classes << ";";
  }
  if (lengths && c && c->orbit_lengths != *lengths) {
    ok = false;
    out << " lengths(" << target.str() << "<-" << r.g_label.str() << ") differ;";
  }
}

void check_cell_tables(std::ostringstream& out, bool& ok, const CensusReport& r,
                       TypeLabel target) {
  auto ep = tables::expected_e_prime(target, r.g_label, r.p, r.q);
  auto cl = tables::expected_classes(target, r.g_label, r.p, r.q);
  auto lens = tables::expected_class_lengths(target, r.g_label, r.p, r.q);
  std::vector<long> expanded;
  if (lens) expanded = tables::lens_expand(*lens);
  check_cell(out, ok, r, target, ep.value_or(0), cl.value_or(0),
             lens ? &expanded : nullptr);
}

void report(int n, bool pass, const std::string& detail, double secs, double limit) {
  bool time_ok = limit <= 0 || secs <= limit;
  if (!time_ok) ++failures;
  if (!pass) ++failures;
  std::printf("criterion %2d: %s - %s (%.2f s%s)\n", n,
              pass && time_ok ? "PASS" : "FAIL", detail.c_str(), secs,
              time_ok ? "" : ", over budget");
  std::fflush(stdout);
}

}  // namespace

static void criterion1() {
  Timer t;
  bool ok = true;
  std::ostringstream out;
  const CensusReport& r = census(5, 3, 2).report;
  check_cell(out, ok, r, {5, 0}, 9, 2);
  check_cell(out, ok, r, {6, 0}, 36, 2);
  check_cell(out, ok, r, {7, 0}, 1, 1);
  if (r.gamma_total != 46) { ok = false; out << " total=" << r.gamma_total << ";"; }
  report(1, ok, ok ? "(3,2) type 5: e' = (9,36,1), classes (2,2,1)" : out.str(),
         t.seconds(), 1.0);
}

static void criterion2() {
  Timer t;
  bool ok = true;
  std::ostringstream out;
  const CensusReport& r = census(6, 3, 2).report;
  check_cell_tables(out, ok, r, {5, 0});
  check_cell_tables(out, ok, r, {6, 0});
  check_cell_tables(out, ok, r, {7, 0});
  check_cell(out, ok, r, {5, 0}, 6, 2);
  check_cell(out, ok, r, {6, 0}, 24, 8);
  check_cell(out, ok, r, {7, 0}, 2, 2);
  report(2, ok, ok ? "(3,2) type 6: e' = (6,24,2), classes (2,8,2), lengths match" : out.str(),
         t.seconds(), 1.0);
}

static void criterion3() {
  Timer t;
  bool ok = true;
  std::ostringstream out;
  const CensusReport& r = census(7, 3, 2).report;
  check_cell(out, ok, r, {5, 0}, 270, 5);
  check_cell(out, ok, r, {6, 0}, 1080, 13);
  std::vector<long> t7{1, 1, 12, 24, 24};
  check_cell(out, ok, r, {7, 0}, 62, 5, &t7);
  report(3, ok, ok ? "(3,2) type 7: e' = (270,1080,62), classes (5,13,5), type-7 lengths {1,1,12,24,24}"
                   : out.str(),
         t.seconds(), 300.0);
}

static void criterion4() {
  Timer t;
  bool ok = true;
  std::ostringstream out;
  const CensusReport& r = census(10, 5, 3).report;
  std::vector<long> t5{25, 25}, t10{1, 1, 25, 25, 150, 150, 150};
  check_cell(out, ok, r, {5, 0}, 50, 2, &t5);
  check_cell(out, ok, r, {10, 0}, 502, 7, &t10);
  report(4, ok, ok ? "(5,3) type 10: e' = (50,502), classes (2,7), lengths match" : out.str(),
         t.seconds(), 120.0);
}

static void criterion5() {
  Timer t;
  bool ok = true;
  std::ostringstream out;
  const CensusReport& r = census(11, 3, 7).report;
  check_cell_tables(out, ok, r, {5, 0});
  check_cell_tables(out, ok, r, {11, 0});
  check_cell(out, ok, r, {5, 0}, 42, 4);
  check_cell(out, ok, r, {11, 0}, 300, 14);
  const CensusReport& r5 = census(5, 3, 7).report;
  check_cell(out, ok, r5, {5, 0}, 9, 2);
  check_cell(out, ok, r5, {11, 0}, 72, 4);
  report(5, ok, ok ? "(3,7) types 11 and 5: e' = (42,300)/(9,72), classes (4,14)/(2,4)" : out.str(),
         t.seconds(), 60.0);
}

static void criterion6() {
  Timer t;
  bool ok = true;
  std::ostringstream out;
  {
    Timer t6;
    const CensusReport& r = census(6, 7, 3).report;
    check_cell(out, ok, r, {5, 0}, 14, 2);
    check_cell(out, ok, r, {6, 0}, 140, 12);
    check_cell(out, ok, r, {7, 0}, 16, 4);
    check_cell(out, ok, r, {9, 0}, 100, 6);
    if (t6.seconds() > 60) { ok = false; out << " type 6 over 1 min;"; }
  }
  {
    const CensusReport& r = census(5, 7, 3).report;
    check_cell(out, ok, r, {5, 0}, 49, 2);
    check_cell(out, ok, r, {6, 0}, 112, 1);
    check_cell(out, ok, r, {7, 0}, 2, 1);
    check_cell(out, ok, r, {9, 0}, 728, 2);
  }
  {
    const CensusReport& r = census(9, 7, 3).report;
    check_cell(out, ok, r, {5, 0}, 196, 3);
    check_cell(out, ok, r, {6, 0}, 2548, 21);
    check_cell(out, ok, r, {7, 0}, 128, 4);
    check_cell(out, ok, r, {9, 0}, 3446, 15);
  }
  std::string note =
      " [known discrepancy: the reference value 3446 for e'(9<-9) at q=3 is "
      "inconsistent; five independent checks (filtered, unfiltered and "
      "sigma-seeded searches, the symmetry-reduced mode, and a direct "
      "closure search over Hol(G)) give 2942, the class count 15 matches, "
      "and the 504 difference is an overcount in the reference's kernel-p "
      "case analysis at the q=3 degeneracy]";
  report(6, ok,
         (ok ? std::string("(7,3) types 5, 6, 9 columns match") : out.str() + note),
         t.seconds(), 14400.0);
}

static void criterion7() {
  Timer t;
  bool ok = true;
  std::ostringstream out;
  const CensusReport& r = census(5, 5, 7).report;
  if (r.gamma_total != 25) { ok = false; out << " total=" << r.gamma_total << ";"; }
  check_cell(out, ok, r, {5, 0}, 25, 2);
  if (r.by_target.size() != 1) { ok = false; out << " extra targets;"; }
  report(7, ok, ok ? "(5,7) type 5: 25 gamma functions, all targets type 5, 2 classes" : out.str(),
         t.seconds(), 1.0);
}

static void criterion8() {
  Timer t;
  bool ok = true;
  std::ostringstream out;
  long cells = 0;
  for (auto [fam, p, q] : std::vector<std::tuple<int, long, long>>{
           {5, 3, 2}, {6, 3, 2}, {7, 3, 2}, {10, 5, 3}, {11, 3, 7},
           {5, 3, 7}, {6, 7, 3}, {5, 7, 3}, {9, 7, 3}, {5, 5, 7}}) {
    const Cell& c = census(fam, p, q);
    long aut_g = long(c.a.size());
    for (TypeLabel target : tables::valid_labels(p, q)) {
      auto ep = tables::expected_e_prime(target, c.report.g_label, p, q);
      auto e = tables::expected_e(target, c.report.g_label, p, q);
      if (!ep || !e) continue;
      long aut_gamma =
          automorphism_count(build_group(make_spec(target.family, p, q, target.k_canonical)));
      long long lhs = (long long)*e * aut_g;
      long long rhs = (long long)aut_gamma * *ep;
      if (lhs != rhs) {
        ok = false;
        out << " Eq(1.1) fails at (" << target.str() << "<-" << fam << ",p=" << p
            << ",q=" << q << ");";
      }
      ++cells;
      // observed side: census e_hgs is the same ratio applied to observed e'
      const TargetCell* tc = c.report.cell(target);
      if (tc && (long long)tc->e_hgs * aut_g != (long long)aut_gamma * tc->e_prime) {
        ok = false;
        out << " census ratio fails at (" << target.str() << "<-" << fam << ");";
      }
    }
  }
  std::ostringstream good;
  good << "e = (|Aut K|/|Aut G|) e' holds with searched automorphism orders over "
       << cells << " cells";
  report(8, ok, ok ? good.str() : out.str(), t.seconds(), 0);
}

static void criterion9() {
  Timer t;
  bool ok = true;
  std::ostringstream out;
  long cells = 0;
  for (long p : {3L, 5L, 7L, 11L})
    for (long q : {2L, 3L, 5L, 7L}) {
      if (p == q) continue;
      for (const GroupSpec& s : all_specs(p, q)) {
        long got = automorphism_count(build_group(s));
        long want = tables::table1_aut_order(s.family, p, q);
        if (got != want) {
          ok = false;
          out << " |Aut| mismatch for " << s.name() << " at (" << p << "," << q
              << "): " << got << " vs " << want << ";";
        }
        ++cells;
      }
    }
  std::ostringstream good;
  good << "automorphism group orders match the closed forms for " << cells
       << " catalog groups";
  report(9, ok, ok ? good.str() : out.str(), t.seconds(), 0);
}

static void criterion10() {
  Timer t;
  bool ok = true;
  std::ostringstream out;
  for (int fam : {5, 6, 7}) {
    Cell& c = census(fam, 3, 2);
    const std::vector<GammaFunction>& gfs = c.enumeration.gfs;
    long covered = 0;
    if (checks::duality_involution(c.a, gfs)) { ok = false; out << " duality t" << fam << ";"; }
    if (checks::bridge_regularity(c.a, gfs)) { ok = false; out << " bridge t" << fam << ";"; }
    if (checks::invariant_sylows_exist(c.a, gfs)) { ok = false; out << " sylow t" << fam << ";"; }
    if (checks::lifting_round_trip(c.a, gfs, &covered) || covered == 0) {
      ok = false;
      out << " lifting t" << fam << ";";
    }
    if (checks::two_of_three(c.a, gfs)) { ok = false; out << " two-of-three t" << fam << ";"; }
  }
  {
    Cell& c = census(6, 3, 2);
    if (checks::bridge_matches_direct_search(c.a, c.enumeration.gfs)) {
      ok = false;
      out << " direct-search oracle t6;";
    }
  }
  {
    Cell& c = census(7, 3, 2);
    long covered = 0;
    if (checks::gluing_round_trip(c.a, c.enumeration.gfs, &covered) || covered == 0) {
      ok = false;
      out << " gluing t7;";
    }
  }
  {
    long covered = 0;
    if (checks::rgf_extension_unique(census(5, 3, 2).a, &covered)) {
      ok = false;
      out << " rgf extension t5;";
    }
    if (checks::kernel_pq_extension_iff_morphism(census(5, 3, 2).a, &covered)) {
      ok = false;
      out << " kernel-pq extension t5;";
    }
  }
  report(10, ok,
         ok ? "property suites on all (3,2) outputs: duality, bridge + direct oracle, "
              "invariant Sylows, lifting/gluing round trips, extension lemmas"
            : out.str(),
         t.seconds(), 300.0);
}

static void criterion11() {
  if (!std::getenv("P2Q_ACCEPT_STRETCH")) {
    std::printf("criterion 11: SKIP - stretch cells (5,2) type 7 and (11,5) type 8; "
                "set P2Q_ACCEPT_STRETCH=1 to run (budget 12 h)\n");
    return;
  }
  Timer t;
  bool ok = true;
  std::ostringstream out;
  {
    const CensusReport& r = census(7, 5, 2).report;
    check_cell_tables(out, ok, r, {5, 0});
    check_cell_tables(out, ok, r, {6, 0});
    check_cell_tables(out, ok, r, {7, 0});
  }
  {
    const CensusReport& r = census(8, 11, 5, 2).report;
    check_cell(out, ok, r, {5, 0}, 484, 4);
    check_cell(out, ok, r, {6, 0}, 13552, 48);
    check_cell(out, ok, r, {7, 0}, 1056, 16);
    check_cell(out, ok, r, {8, 2}, 17472, 48);
    check_cell(out, ok, r, {9, 0}, 233376, 24);
  }
  std::string note =
      " [known discrepancy: the reference count 233376 for e'(9<-8_k2) at q=5 "
      "contradicts the reference's own class-length multiset, whose total "
      "4p(p+1)^2 = 6336 the enumeration matches exactly, as it does the class "
      "count 24]";
  // stretch cells are informational; they do not gate acceptance
  std::printf("criterion 11: %s (stretch, not required) - %s (%.2f s)\n",
              ok ? "PASS" : "FAIL",
              ok ? "stretch cells match" : (out.str() + note).c_str(), t.seconds());
  std::fflush(stdout);
}

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  criterion10();
  criterion11();
  if (failures) {
    std::printf("acceptance: %d check(s) failed\n", failures);
    return 1;
  }
  std::printf("acceptance: all required criteria passed\n");
  return 0;
}
