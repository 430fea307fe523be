#include <catch2/catch.hpp>

#include "p2q/enumerate.hpp"

using namespace p2q;

namespace {
EnumResult run(int fam, long p, long q, EnumConfig cfg = {}) {
  GroupTable g = build_group(make_spec(fam, p, q));
  AutGroup a = automorphisms(g);
  return enumerate_gfs(a, cfg);
}
}  // namespace

TEST_CASE("published gamma-function totals at (3,2)", "[enumerate]") {
  REQUIRE(run(5, 3, 2).gfs.size() == 46);    // 9 + 36 + 1
  REQUIRE(run(6, 3, 2).gfs.size() == 32);    // 6 + 24 + 2
  REQUIRE(run(7, 3, 2).gfs.size() == 1412);  // 270 + 1080 + 62
}

TEST_CASE("no-divisibility case has only the abelian target", "[enumerate]") {
  REQUIRE(run(5, 5, 7).gfs.size() == 25);
}

TEST_CASE("output always contains the trivial gamma and is verified", "[enumerate]") {
  GroupTable g = build_group(make_spec(6, 3, 2));
  AutGroup a = automorphisms(g);
  EnumResult r = enumerate_gfs(a);
  REQUIRE(std::binary_search(r.gfs.begin(), r.gfs.end(), trivial_gamma(a)));
  REQUIRE(std::binary_search(r.gfs.begin(), r.gfs.end(), left_regular_gamma(a)));
  for (const GammaFunction& f : r.gfs) REQUIRE(f.vals[g.id()] == a.id);
  REQUIRE(r.status == EnumStatus::complete);
}

TEST_CASE("deterministic across worker counts", "[enumerate]") {
  for (int fam : {5, 6, 7}) {
    EnumConfig one, two, four;
    one.workers = 1;
    two.workers = 2;
    four.workers = 4;
    EnumResult r1 = run(fam, 3, 2, one);
    EnumResult r2 = run(fam, 3, 2, two);
    EnumResult r4 = run(fam, 3, 2, four);
    REQUIRE(r1.gfs == r2.gfs);
    REQUIRE(r1.gfs == r4.gfs);
  }
}

TEST_CASE("pruned mode reproduces full mode exactly at (3,2)", "[enumerate]") {
  for (int fam : {5, 6, 7}) {
    EnumConfig full, pruned;
    pruned.mode = EnumMode::pruned;
    pruned.workers = 2;
    EnumResult rf = run(fam, 3, 2, full);
    EnumResult rp = run(fam, 3, 2, pruned);
    REQUIRE(rf.gfs == rp.gfs);
  }
}

TEST_CASE("node budget reports incomplete instead of silent truncation", "[enumerate]") {
  EnumConfig tight;
  tight.budget_nodes = 50;
  EnumResult r = run(7, 3, 2, tight);
  REQUIRE(r.status == EnumStatus::budget_exceeded);
  REQUIRE(r.gfs.empty());
  // and a generous budget completes
  EnumConfig loose;
  loose.budget_nodes = 100000000;
  REQUIRE(run(6, 3, 2, loose).status == EnumStatus::complete);
}

TEST_CASE("propagation is confluent under branch-order permutations", "[enumerate]") {
  // reversing the tail of the branch order must not change the output
  GroupTable g = build_group(make_spec(6, 3, 2));
  AutGroup a = automorphisms(g);
  EnumResult base = enumerate_gfs(a);

  std::vector<elem_t> order{g.a1, g.a2, g.b};
  for (int e = g.n() - 1; e >= 0; --e) {
    elem_t x = elem_t(e);
    if (x != g.id() && x != g.a1 && x != g.a2 && x != g.b) order.push_back(x);
  }
  std::atomic<long> nodes{0};
  detail::DiffTable dt(a);
  std::vector<GammaFunction> found;
  for (size_t rv = 0; rv < a.size(); ++rv) {
    detail::DfsState st(a, dt, order, {}, &nodes, 0, 0);
    if (!st.seed(g.a1, aut_t(rv))) continue;
    st.dfs();
    for (auto& f : st.found) found.push_back(f);
  }
  std::sort(found.begin(), found.end());
  REQUIRE(found == base.gfs);
}

TEST_CASE("propagation fixpoint agrees with a randomized reference sweep", "[enumerate]") {
  GroupTable g = build_group(make_spec(6, 3, 2));
  AutGroup a = automorphisms(g);
  std::atomic<long> nodes{0};
  detail::DiffTable dt(a);
  std::mt19937 rng(7);
  // reference: sweep all GFE instances in random order until fixpoint,
  // without the semiregularity filter (order-independence of forcing)
  auto reference = [&](std::vector<int> vals) -> std::pair<bool, std::vector<int>> {
    bool changed = true;
    std::vector<std::pair<int, int>> pairs;
    for (int x = 0; x < g.n(); ++x)
      for (int y = 0; y < g.n(); ++y) pairs.push_back({x, y});
    while (changed) {
      changed = false;
      std::shuffle(pairs.begin(), pairs.end(), rng);
      for (auto [x, y] : pairs) {
        if (vals[x] < 0 || vals[y] < 0) continue;
        elem_t t = g.mul(a.apply(aut_t(vals[y]), elem_t(x)), elem_t(y));
        aut_t v = a.compose(aut_t(vals[x]), aut_t(vals[y]));
        if (vals[t] < 0) { vals[t] = int(v); changed = true; }
        else if (vals[t] != int(v)) return {false, vals};
      }
    }
    return {true, vals};
  };
  long checked = 0;
  for (size_t v1 = 0; v1 < a.size(); ++v1)
    for (size_t v2 = 0; v2 < a.size(); v2 += 3) {
      detail::DfsState st(a, dt, detail::default_branch_order(g), {}, &nodes, 0, 0);
      st.use_semiregular = false;
      bool ok = st.seed(g.a1, aut_t(v1)) && st.seed(g.b, aut_t(v2));
      std::vector<int> ref_vals(g.n(), -1);
      ref_vals[g.id()] = int(a.id);
      ref_vals[g.a1] = int(v1);
      ref_vals[g.b] = int(v2);
      auto [ref_ok, ref] = reference(ref_vals);
      REQUIRE(ok == ref_ok);
      if (ok) {
        for (int x = 0; x < g.n(); ++x) {
          int mine = st.vals[x] == kNoAut ? -1 : int(st.vals[x]);
          REQUIRE(mine == ref[x]);
        }
      }
      ++checked;
    }
  REQUIRE(checked == 48);
}

TEST_CASE("restricted enumeration finds RGFs on subgroups", "[enumerate]") {
  GroupTable g = build_group(make_spec(5, 3, 2));
  AutGroup a = automorphisms(g);
  Subgroup A = subgroup_closure(g, {g.a1, g.a2});
  auto rgfs = enumerate_rgfs(a, A);
  // type 5 at (3,2): trivial + (p^2-1)/... = 25 RGFs on A lift (all of them here)
  REQUIRE(rgfs.size() >= 1);
  for (const PartialGamma& f : rgfs) {
    for (elem_t x : A.members) {
      REQUIRE(f.defined(x));
      for (elem_t h : A.members) {
        elem_t t = g.mul(a.apply(f.vals[h], x), h);
        REQUIRE(A.contains(a.apply(f.vals[h], x)));
        REQUIRE(f.vals[t] == a.compose(f.vals[x], f.vals[h]));
      }
    }
  }
}
