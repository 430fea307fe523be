#include <catch2/catch.hpp>

#include <map>
#include <tuple>

#include "p2q/group.hpp"
#include "p2q/identify.hpp"

using namespace p2q;

namespace {
const GroupTable& table(int family, long p, long q, long k = 0) {
  static std::map<std::tuple<int, long, long, long>, GroupTable> cache;
  auto key = std::make_tuple(family, p, q, k);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, build_group(make_spec(family, p, q, k))).first;
  return it->second;
}
}  // namespace

TEST_CASE("type 5 direct product is abelian", "[group]") {
  const GroupTable& g = table(5, 3, 2);
  REQUIRE(g.n() == 18);
  REQUIRE(g.tab.is_abelian());
}

TEST_CASE("presentation relations hold in built tables", "[group]") {
  {  // type 6 at (3,2), lambda = 2: b^-1 a2 b = a2^2, a1 central
    const GroupTable& g = table(6, 3, 2);
    REQUIRE(g.tab.conj(g.a2, g.b) == g.tab.power(g.a2, 2));
    REQUIRE(g.tab.conj(g.a1, g.b) == g.a1);
  }
  {  // type 11 at (3,7), u = 2: a1^-1 b a1 = b^2, a2 central
    const GroupTable& g = table(11, 3, 7);
    REQUIRE(g.tab.conj(g.b, g.a1) == g.tab.power(g.b, 2));
    REQUIRE(g.tab.commute(g.a2, g.b));
    REQUIRE(g.tab.commute(g.a2, g.a1));
  }
  {  // type 10 at (5,3): b^-1 a1 b = a1^t a2, b^-1 a2 b = a1^-1
    const GroupTable& g = table(10, 5, 3);
    REQUIRE(g.tab.conj(g.a1, g.b) == g.mul(g.tab.power(g.a1, g.spec.trace_t), g.a2));
    REQUIRE(g.tab.conj(g.a2, g.b) == g.inv(g.a1));
  }
}

TEST_CASE("element orders", "[group]") {
  const GroupTable& g = table(5, 3, 2);
  REQUIRE(element_order(g, g.id()) == 1);
  REQUIRE(element_order(g, g.a1) == 3);
  REQUIRE(element_order(g, g.mul(g.a1, g.b)) == 6);  // pq in the direct product
  for (int t : {6, 7}) {
    const GroupTable& h = table(t, 3, 2);
    REQUIRE(element_order(h, h.a1) == 3);
    REQUIRE(element_order(h, h.b) == 2);
    for (int x = 0; x < h.n(); ++x) REQUIRE(18 % element_order(h, elem_t(x)) == 0);
  }
}

TEST_CASE("Sylow p-subgroups are elementary abelian", "[group]") {
  for (long p : {3L, 5L}) {
    long q = (p == 3) ? 2 : 3;
    for (const GroupSpec& s : all_specs(p, q)) {
      GroupTable g = build_group(s);
      int count = 0;
      for (int x = 0; x < g.n(); ++x) {
        int o = g.order_of(elem_t(x));
        REQUIRE(o != int(p * p));
        if (o == 1 || o == int(p)) ++count;
      }
      if (s.family != 11) REQUIRE(count >= int(p * p));  // the Sylow p sits among them
    }
  }
}

TEST_CASE("center and derived subgroup", "[group]") {
  REQUIRE(center(table(7, 3, 2)).members == std::vector<elem_t>{0});
  REQUIRE(center(table(6, 3, 2)).order() == 3);  // <a1>
  {
    const GroupTable& g = table(6, 3, 2);
    Subgroup z = center(g);
    REQUIRE(z.contains(g.a1));
  }
  REQUIRE(center(table(5, 3, 2)).order() == 18);
  REQUIRE(derived_subgroup(table(5, 3, 2)).order() == 1);
  REQUIRE(derived_subgroup(table(6, 3, 2)).order() == 3);   // <a2>
  REQUIRE(derived_subgroup(table(7, 3, 2)).order() == 9);   // all of A
  REQUIRE(derived_subgroup(table(11, 3, 7)).order() == 7);  // <b>
}

TEST_CASE("subgroup closure", "[group]") {
  const GroupTable& g = table(6, 3, 2);
  REQUIRE(subgroup_closure(g, {g.id()}).members == std::vector<elem_t>{0});
  REQUIRE(subgroup_closure(g, {g.a1, g.a2}).order() == 9);
  REQUIRE(subgroup_closure(g, {g.a2, g.b}).order() == 6);
  REQUIRE(subgroup_closure(g, {g.a1, g.a2, g.b}).order() == 18);
}

TEST_CASE("Sylow subgroup counts per type", "[group]") {
  auto sylow_q_count = [](const GroupTable& g) {
    return sylow_subgroups(g, g.spec.q).size();
  };
  auto sylow_p_count = [](const GroupTable& g) {
    return sylow_subgroups(g, g.spec.p).size();
  };
  REQUIRE(sylow_q_count(table(5, 3, 2)) == 1);
  REQUIRE(sylow_q_count(table(6, 3, 2)) == 3);    // p
  REQUIRE(sylow_q_count(table(7, 3, 2)) == 9);    // p^2
  REQUIRE(sylow_q_count(table(9, 7, 3)) == 49);   // p^2
  REQUIRE(sylow_q_count(table(10, 5, 3)) == 25);  // p^2
  REQUIRE(sylow_q_count(table(11, 3, 7)) == 1);
  REQUIRE(sylow_p_count(table(5, 3, 2)) == 1);
  REQUIRE(sylow_p_count(table(7, 3, 2)) == 1);
  REQUIRE(sylow_p_count(table(11, 3, 7)) == 7);  // q Sylow p-subgroups

  for (const GroupSpec& s : all_specs(7, 3)) {
    GroupTable g = build_group(s);
    for (long r : {g.spec.p, g.spec.q}) {
      size_t c = sylow_subgroups(g, r).size();
      REQUIRE(c % r == 1);
      REQUIRE((size_t(g.n()) % c) == 0);
    }
  }
}

TEST_CASE("action matrices of b on the Sylow p-subgroup", "[group]") {
  {
    const GroupTable& g = table(9, 7, 3);
    Mat2 m = action_matrix(g, g.b, {g.a1, g.a2});
    long lam = g.spec.lambda;
    REQUIRE(m == Mat2::diag(7, lam, inv_mod(lam, 7)));
    REQUIRE(action_matrix(g, g.id(), {g.a1, g.a2}) == Mat2::identity(7));
  }
  {
    const GroupTable& g = table(10, 5, 3);
    Mat2 m = action_matrix(g, g.b, {g.a1, g.a2});
    REQUIRE(m.det() == 1);
    REQUIRE(m.trace() == g.spec.trace_t);
  }
  {  // conjugation by b on A is scalar for type 7
    const GroupTable& g = table(7, 3, 2);
    Mat2 m = action_matrix(g, g.b, {g.a1, g.a2});
    REQUIRE(m == Mat2::scalar(3, 2));
  }
  // non-invariant span is rejected: in type 11 conjugation by b moves a1
  // out of the Sylow p-subgroup
  const GroupTable& g = table(11, 3, 7);
  REQUIRE_THROWS_AS(action_matrix(g, g.b, {g.a1, g.a2}), unsupported_shape);
}

TEST_CASE("identify_type round trip over the catalog", "[catalog][identify]") {
  for (auto [p, q] : std::vector<std::pair<long, long>>{
           {3, 2}, {5, 2}, {7, 2}, {7, 3}, {5, 3}, {11, 3}, {3, 7}, {5, 7}, {11, 5}}) {
    for (const GroupSpec& s : all_specs(p, q)) {
      GroupTable g = build_group(s);
      REQUIRE(identify_type(g) == label_of(s));
    }
  }
}

TEST_CASE("identify_type rejects cyclic Sylow p", "[identify]") {
  // multiplication table of C_12 = C_4 x C_3 has a cyclic Sylow 2-subgroup;
  // at (p,q) = (2,3) that is out of scope, and order 12 = p^2 q
  CayleyTable t;
  t.n = 12;
  t.mul.resize(144);
  for (int x = 0; x < 12; ++x)
    for (int y = 0; y < 12; ++y) t.mul[x * 12 + y] = elem_t((x + y) % 12);
  t.finish();
  REQUIRE_THROWS_AS(identify_type(t, 2, 3), unsupported_shape);
}
