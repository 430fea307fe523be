// Dense Cayley tables for the catalog groups.  Elements are indices into a
// fixed normal form a1^i a2^j b^m, so every later stage works on plain
// integer tables and never sees a presentation again.

#ifndef P2Q_GROUP_HPP_
#define P2Q_GROUP_HPP_

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "catalog.hpp"

namespace p2q {

using elem_t = std::uint16_t;

struct unsupported_shape : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ElementCoord {
  int i = 0, j = 0, m = 0;  // exponents of a1, a2, b
};

// Any finite group given by its multiplication table.  Used both for the
// catalog groups and for circle tables produced by gamma functions.
struct CayleyTable {
  int n = 0;
  std::vector<elem_t> mul;       // n*n, row-major: mul[x*n+y] = x*y
  elem_t id = 0;
  std::vector<elem_t> inv;
  std::vector<int> elem_order;

  elem_t at(elem_t x, elem_t y) const { return mul[size_t(x) * n + y]; }

  elem_t power(elem_t x, long e) const {
    elem_t r = id;
    e = mod_val(e, elem_order[x]);
    for (long t = 0; t < e; ++t) r = at(r, x);
    return r;
  }

  elem_t conj(elem_t x, elem_t g) const {  // g^-1 x g
    return at(at(inv[g], x), g);
  }

  bool commute(elem_t x, elem_t y) const { return at(x, y) == at(y, x); }

  bool is_abelian() const {
    for (elem_t x = 0; x < n; ++x)
      for (elem_t y = x + 1; y < n; ++y)
        if (!commute(x, y)) return false;
    return true;
  }

  // Derive id/inv/orders from the raw table; throws if it is not a group
  // table with two-sided identity and inverses.
  void finish() {
    int found = -1;
    for (int e = 0; e < n; ++e) {
      bool ok = true;
      for (int x = 0; x < n && ok; ++x)
        ok = at(elem_t(e), elem_t(x)) == x && at(elem_t(x), elem_t(e)) == x;
      if (ok) { found = e; break; }
    }
    if (found < 0) throw unsupported_shape("table has no two-sided identity");
    id = elem_t(found);
    inv.assign(n, 0);
    for (int x = 0; x < n; ++x) {
      int ix = -1;
      for (int y = 0; y < n; ++y)
        if (at(elem_t(x), elem_t(y)) == id && at(elem_t(y), elem_t(x)) == id) { ix = y; break; }
      if (ix < 0) throw unsupported_shape("table element without inverse");
      inv[x] = elem_t(ix);
    }
    elem_order.assign(n, 0);
    for (int x = 0; x < n; ++x) {
      elem_t y = elem_t(x);
      int k = 1;
      while (y != id) { y = at(y, elem_t(x)); ++k; }
      elem_order[x] = k;
    }
  }
};

struct Subgroup {
  std::vector<elem_t> members;  // sorted
  size_t order() const { return members.size(); }
  bool contains(elem_t x) const {
    return std::binary_search(members.begin(), members.end(), x);
  }
  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.members == b.members;
  }
  friend bool operator<(const Subgroup& a, const Subgroup& b) {
    return a.members < b.members;
  }
};

struct GroupTable {
  CayleyTable tab;
  GroupSpec spec;
  std::vector<ElementCoord> coords;
  elem_t a1 = 0, a2 = 0, b = 0;

  int n() const { return tab.n; }
  elem_t mul(elem_t x, elem_t y) const { return tab.at(x, y); }
  elem_t inv(elem_t x) const { return tab.inv[x]; }
  elem_t id() const { return tab.id; }
  int order_of(elem_t x) const { return tab.elem_order[x]; }
  elem_t index_of(long i, long j, long m) const {
    return elem_t((mod_val(i, spec.p) * spec.p + mod_val(j, spec.p)) * spec.q +
                  mod_val(m, spec.q));
  }
};

inline int element_order(const GroupTable& g, elem_t x) { return g.order_of(x); }

namespace detail {

// Row-convention matrix of conjugation by b on A = <a1, a2>, families 5..10.
inline Mat2 b_action(const GroupSpec& s) {
  long p = s.p;
  switch (s.family) {
    case 5: return Mat2::identity(p);
    case 6: return Mat2::diag(p, 1, s.lambda);
    case 7: return Mat2::scalar(p, s.lambda);
    case 8: return Mat2::diag(p, s.lambda, pow_mod(s.lambda, s.k, p));
    case 9: return Mat2::diag(p, s.lambda, inv_mod(s.lambda, p));
    case 10: return Mat2(p, s.trace_t, 1, -1, 0);
    default: throw invalid_parameters("b_action: family without normal Sylow p");
  }
}

inline void verify_associativity(const CayleyTable& t) {
  if (t.n <= 200) {
    for (int x = 0; x < t.n; ++x)
      for (int y = 0; y < t.n; ++y)
        for (int z = 0; z < t.n; ++z)
          if (t.at(t.at(elem_t(x), elem_t(y)), elem_t(z)) !=
              t.at(elem_t(x), t.at(elem_t(y), elem_t(z))))
            throw std::logic_error("built table not associative");
    return;
  }
  std::mt19937 rng(12345);
  std::uniform_int_distribution<int> d(0, t.n - 1);
  for (int s = 0; s < 200000; ++s) {
    elem_t x = elem_t(d(rng)), y = elem_t(d(rng)), z = elem_t(d(rng));
    if (t.at(t.at(x, y), z) != t.at(x, t.at(y, z)))
      throw std::logic_error("built table not associative (sampled)");
  }
}

}  // namespace detail

// Materialize the Cayley table of a validated GroupSpec.  The normal form
// a1^i a2^j b^m indexes elements as (i*p + j)*q + m; multiplication moves
// b-powers past A with the action matrix (families 5..10) or a1-powers
// past b (family 11).
inline GroupTable build_group(const GroupSpec& spec) {
  const long p = spec.p, q = spec.q, n = p * p * q;
  if (n > 60000) throw invalid_parameters("group order too large to materialize");
  GroupTable g;
  g.spec = spec;
  g.tab.n = int(n);
  g.tab.mul.assign(size_t(n) * n, 0);
  g.coords.resize(n);
  for (long i = 0; i < p; ++i)
    for (long j = 0; j < p; ++j)
      for (long m = 0; m < q; ++m)
        g.coords[(i * p + j) * q + m] = ElementCoord{int(i), int(j), int(m)};
  g.a1 = g.index_of(1, 0, 0);
  g.a2 = g.index_of(0, 1, 0);
  g.b = g.index_of(0, 0, 1);

  if (spec.family != 11) {
    Mat2 z = detail::b_action(spec);
    std::vector<Mat2> zpow(q, Mat2::identity(p));
    for (long m = 1; m < q; ++m) zpow[m] = zpow[m - 1] * z;
    // x*y with x = A1 b^m1, y = A2 b^m2:  A-part is A1 + A2 * Z^-m1.
    for (long i1 = 0; i1 < p; ++i1)
      for (long j1 = 0; j1 < p; ++j1)
        for (long m1 = 0; m1 < q; ++m1) {
          elem_t x = g.index_of(i1, j1, m1);
          const Mat2& zm = zpow[(q - m1) % q];
          for (long i2 = 0; i2 < p; ++i2)
            for (long j2 = 0; j2 < p; ++j2) {
              auto v = zm.apply(i2, j2);
              long ri = mod_val(i1 + v[0], p), rj = mod_val(j1 + v[1], p);
              for (long m2 = 0; m2 < q; ++m2)
                g.tab.mul[size_t(x) * n + g.index_of(i2, j2, m2)] =
                    g.index_of(ri, rj, m1 + m2);
            }
        }
  } else {
    // b^m a1^i = a1^i b^(m u^i); a2 central.
    std::vector<long> upow(p, 1);
    for (long i = 1; i < p; ++i) upow[i] = mul_mod(upow[i - 1], spec.u, q);
    for (long i1 = 0; i1 < p; ++i1)
      for (long j1 = 0; j1 < p; ++j1)
        for (long m1 = 0; m1 < q; ++m1) {
          elem_t x = g.index_of(i1, j1, m1);
          for (long i2 = 0; i2 < p; ++i2)
            for (long j2 = 0; j2 < p; ++j2)
              for (long m2 = 0; m2 < q; ++m2)
                g.tab.mul[size_t(x) * n + g.index_of(i2, j2, m2)] =
                    g.index_of(i1 + i2, j1 + j2, m1 * upow[i2] + m2);
        }
  }

  g.tab.finish();
  if (g.tab.id != 0) throw std::logic_error("normal form identity not at index 0");
  detail::verify_associativity(g.tab);
  return g;
}

inline Subgroup subgroup_closure(const CayleyTable& t, std::vector<elem_t> gens) {
  std::vector<char> in(t.n, 0);
  std::vector<elem_t> work{t.id};
  in[t.id] = 1;
  for (elem_t x : gens)
    if (!in[x]) { in[x] = 1; work.push_back(x); }
  gens.push_back(t.id);
  for (size_t h = 0; h < work.size(); ++h) {
    elem_t x = work[h];
    for (size_t i = 0; i < work.size(); ++i) {
      elem_t y = t.at(x, work[i]);
      if (!in[y]) { in[y] = 1; work.push_back(y); }
      y = t.at(work[i], x);
      if (!in[y]) { in[y] = 1; work.push_back(y); }
    }
  }
  Subgroup s;
  for (int x = 0; x < t.n; ++x)
    if (in[x]) s.members.push_back(elem_t(x));
  return s;
}

inline Subgroup subgroup_closure(const GroupTable& g, const std::vector<elem_t>& gens) {
  return subgroup_closure(g.tab, gens);
}

inline Subgroup center(const CayleyTable& t) {
  Subgroup s;
  for (int x = 0; x < t.n; ++x) {
    bool c = true;
    for (int y = 0; y < t.n && c; ++y) c = t.commute(elem_t(x), elem_t(y));
    if (c) s.members.push_back(elem_t(x));
  }
  return s;
}
inline Subgroup center(const GroupTable& g) { return center(g.tab); }

inline Subgroup derived_subgroup(const CayleyTable& t) {
  std::vector<elem_t> comms;
  for (int x = 0; x < t.n; ++x)
    for (int y = 0; y < t.n; ++y) {
      elem_t c = t.at(t.at(t.inv[x], t.inv[y]), t.at(elem_t(x), elem_t(y)));
      comms.push_back(c);
    }
  std::sort(comms.begin(), comms.end());
  comms.erase(std::unique(comms.begin(), comms.end()), comms.end());
  return subgroup_closure(t, comms);
}
inline Subgroup derived_subgroup(const GroupTable& g) { return derived_subgroup(g.tab); }

// Complete list of Sylow r-subgroups, r in {p, q}.  Sylows here are either
// C_r or C_p x C_p, so closures of single r-elements resp. pairs exhaust
// them.
inline std::vector<Subgroup> sylow_subgroups(const CayleyTable& t, long p, long q, long r) {
  if (r != p && r != q) throw invalid_parameters("sylow_subgroups: r must be p or q");
  size_t target = (r == p) ? size_t(p) * p : size_t(q);
  std::vector<elem_t> rel;
  for (int x = 0; x < t.n; ++x) {
    if (t.elem_order[x] == r) rel.push_back(elem_t(x));
    if (t.elem_order[x] == r * r)
      throw unsupported_shape("non-elementary Sylow subgroup");
  }
  std::vector<Subgroup> out;
  auto add = [&](Subgroup s) {
    if (s.order() != target) return;
    if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(std::move(s));
  };
  if (r == q) {
    for (elem_t x : rel) add(subgroup_closure(t, {x}));
  } else {
    for (size_t i = 0; i < rel.size(); ++i)
      for (size_t j = i + 1; j < rel.size(); ++j) {
        Subgroup s = subgroup_closure(t, {rel[i], rel[j]});
        add(std::move(s));
      }
    if (out.empty() && rel.size() + 1 == target) add(subgroup_closure(t, rel));
  }
  std::sort(out.begin(), out.end());
  return out;
}
inline std::vector<Subgroup> sylow_subgroups(const GroupTable& g, long r) {
  return sylow_subgroups(g.tab, g.spec.p, g.spec.q, r);
}

// Matrix of conjugation by g on the span of (basis[0], basis[1]) in row
// convention.  Throws if g does not normalize that span.
inline Mat2 action_matrix(const CayleyTable& t, long p, elem_t g,
                          std::pair<elem_t, elem_t> basis) {
  std::vector<int> ci(t.n, -1), cj(t.n, -1);
  elem_t x = t.id;
  for (long i = 0; i < p; ++i, x = t.at(x, basis.first)) {
    elem_t y = x;
    for (long j = 0; j < p; ++j, y = t.at(y, basis.second)) {
      if (ci[y] >= 0) throw invalid_parameters("action_matrix: basis does not span freely");
      ci[y] = int(i);
      cj[y] = int(j);
    }
  }
  elem_t c1 = t.conj(basis.first, g), c2 = t.conj(basis.second, g);
  if (ci[c1] < 0 || ci[c2] < 0)
    throw unsupported_shape("action_matrix: subgroup not invariant under g");
  return Mat2(p, ci[c1], cj[c1], ci[c2], cj[c2]);
}
inline Mat2 action_matrix(const GroupTable& g, elem_t x, std::pair<elem_t, elem_t> basis) {
  return action_matrix(g.tab, g.spec.p, x, basis);
}

}  // namespace p2q

#endif  // P2Q_GROUP_HPP_
