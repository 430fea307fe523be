// Automorphism groups of the catalog groups, computed by searching images
// of (a1, a2, b) among elements of matching order, checking the defining
// relations, and extending along the normal form.  A triple satisfying the
// relations induces a homomorphism (von Dyck), and generation makes it an
// automorphism; the test suite re-checks the homomorphism property
// exhaustively at small orders.

#ifndef P2Q_AUT_HPP_
#define P2Q_AUT_HPP_

#include <cstdint>
#include <functional>
#include <unordered_map>

#include "group.hpp"

namespace p2q {

using aut_t = std::uint16_t;
constexpr aut_t kNoAut = 0xffff;

struct Automorphism {
  std::vector<elem_t> perm;
  elem_t operator()(elem_t x) const { return perm[x]; }
  friend bool operator==(const Automorphism& a, const Automorphism& b) {
    return a.perm == b.perm;
  }
  friend bool operator<(const Automorphism& a, const Automorphism& b) {
    return a.perm < b.perm;
  }
};

namespace detail {

// Enumerate all (x, y, z) := (phi(a1), phi(a2), phi(b)) satisfying the
// defining relations of g's presentation plus generation.
template <typename F>
void for_each_aut_triple(const GroupTable& g, F&& emit) {
  const CayleyTable& t = g.tab;
  const GroupSpec& s = g.spec;
  const long p = s.p, q = s.q;

  std::vector<elem_t> order_p, order_q, x_cands;
  for (int e = 0; e < t.n; ++e) {
    if (t.elem_order[e] == p) order_p.push_back(elem_t(e));
    if (t.elem_order[e] == q) order_q.push_back(elem_t(e));
  }
  std::vector<elem_t> centre_p;
  if (s.family == 6 || s.family == 11) {
    Subgroup z = center(t);
    for (elem_t c : z.members)
      if (t.elem_order[c] == p) centre_p.push_back(c);
  }

  const std::vector<elem_t>& xs = (s.family == 6) ? centre_p : order_p;
  const std::vector<elem_t>& ys = (s.family == 11) ? centre_p : order_p;

  std::vector<char> in_span(t.n, 0);
  for (elem_t x : xs) {
    // exponent words required of the images under conjugation by z
    elem_t x_exp = 0;
    switch (s.family) {
      case 5: case 6: x_exp = x; break;
      case 7: case 8: case 9: x_exp = t.power(x, s.lambda); break;
      case 10: x_exp = t.power(x, s.trace_t); break;  // completed with y below
      case 11: break;
      default: throw invalid_parameters("for_each_aut_triple: bad family");
    }
    std::fill(in_span.begin(), in_span.end(), 0);
    elem_t w = t.id;
    for (long i = 0; i < p; ++i, w = t.at(w, x)) in_span[w] = 1;

    for (elem_t y : ys) {
      if (s.family != 11 && in_span[y]) continue;  // need <x,y> = A
      if (!t.commute(x, y)) continue;
      elem_t y_exp = 0;
      switch (s.family) {
        case 5: case 11: y_exp = y; break;
        case 6: case 7: y_exp = t.power(y, s.lambda); break;
        case 8: y_exp = t.power(y, pow_mod(s.lambda, s.k, p)); break;
        case 9: y_exp = t.power(y, inv_mod(s.lambda, p)); break;
        case 10: y_exp = t.inv[x]; break;
      }
      elem_t x_exp_full = (s.family == 10) ? t.at(x_exp, y) : x_exp;
      for (elem_t z : order_q) {
        if (s.family == 11) {
          if (!t.commute(y, z)) continue;
          if (t.conj(z, x) != t.power(z, s.u)) continue;
        } else {
          if (t.conj(x, z) != x_exp_full) continue;
          if (t.conj(y, z) != y_exp) continue;
        }
        emit(x, y, z);
      }
    }
  }
}

}  // namespace detail

// Order of Aut(g) without materializing the elements.
inline long automorphism_count(const GroupTable& g) {
  long c = 0;
  detail::for_each_aut_triple(g, [&](elem_t, elem_t, elem_t) { ++c; });
  return c;
}

struct AutGroup {
  const GroupTable* g = nullptr;
  std::vector<Automorphism> elems;  // sorted by permutation array
  std::vector<elem_t> apply_tab;    // |A| * n, row a: elems[a].perm
  std::vector<aut_t> inverse;
  std::vector<aut_t> gens;          // small generating set
  aut_t id = 0;
  std::vector<aut_t> compose_tab;   // |A|^2 when small enough, else empty
  std::unordered_map<std::uint64_t, aut_t> by_gen_images;

  size_t size() const { return elems.size(); }
  int n() const { return g->n(); }

  std::uint64_t triple_key(elem_t x, elem_t y, elem_t z) const {
    std::uint64_t n_ = std::uint64_t(n());
    return (std::uint64_t(x) * n_ + y) * n_ + z;
  }

  elem_t apply(aut_t a, elem_t x) const { return apply_tab[size_t(a) * n() + x]; }

  // Index of the automorphism with the given generator images; kNoAut if none.
  aut_t find_by_images(elem_t x, elem_t y, elem_t z) const {
    auto it = by_gen_images.find(triple_key(x, y, z));
    return it == by_gen_images.end() ? kNoAut : it->second;
  }
  aut_t index_of(const Automorphism& a) const {
    return find_by_images(a.perm[g->a1], a.perm[g->a2], a.perm[g->b]);
  }

  // "Apply a, then b" (exponent-style product ab).
  aut_t compose(aut_t a, aut_t b) const {
    if (!compose_tab.empty()) return compose_tab[size_t(a) * size() + b];
    const elem_t* pb = &apply_tab[size_t(b) * n()];
    return find_by_images(pb[apply(a, g->a1)], pb[apply(a, g->a2)], pb[apply(a, g->b)]);
  }

  int order_of(aut_t a) const {
    aut_t x = a;
    int k = 1;
    while (x != id) { x = compose(x, a); ++k; }
    return k;
  }
};

// Complete automorphism group.  Materialization is refused above 60000
// automorphisms (use automorphism_count for the order alone); the
// composition table is built when it fits in a few hundred MB.
inline AutGroup automorphisms(const GroupTable& g, bool want_compose_table = true) {
  AutGroup a;
  a.g = &g;
  const int n = g.n();
  detail::for_each_aut_triple(g, [&](elem_t x, elem_t y, elem_t z) {
    if (a.elems.size() >= 60000)
      throw std::runtime_error("automorphisms: group too large to materialize");
    Automorphism f;
    f.perm.resize(n);
    std::vector<elem_t> xp(g.spec.p), yp(g.spec.p), zp(g.spec.q);
    elem_t w = g.id();
    for (long i = 0; i < g.spec.p; ++i, w = g.mul(w, x)) xp[i] = w;
    w = g.id();
    for (long j = 0; j < g.spec.p; ++j, w = g.mul(w, y)) yp[j] = w;
    w = g.id();
    for (long m = 0; m < g.spec.q; ++m, w = g.mul(w, z)) zp[m] = w;
    for (int e = 0; e < n; ++e) {
      const ElementCoord& c = g.coords[e];
      f.perm[e] = g.mul(g.mul(xp[c.i], yp[c.j]), zp[c.m]);
    }
    a.elems.push_back(std::move(f));
  });
  std::sort(a.elems.begin(), a.elems.end());

  const size_t sz = a.elems.size();
  a.apply_tab.resize(sz * n);
  a.by_gen_images.reserve(sz * 2);
  for (size_t i = 0; i < sz; ++i) {
    std::copy(a.elems[i].perm.begin(), a.elems[i].perm.end(),
              a.apply_tab.begin() + i * n);
    a.by_gen_images.emplace(
        a.triple_key(a.elems[i].perm[g.a1], a.elems[i].perm[g.a2], a.elems[i].perm[g.b]),
        aut_t(i));
  }
  a.id = a.find_by_images(g.a1, g.a2, g.b);
  if (a.id == kNoAut) throw std::logic_error("automorphisms: identity missing");

  if (want_compose_table && sz <= 13000) {
    a.compose_tab.resize(sz * sz);
    for (size_t i = 0; i < sz; ++i) {
      const elem_t* pi = &a.apply_tab[i * n];
      elem_t i1 = pi[g.a1], i2 = pi[g.a2], i3 = pi[g.b];
      for (size_t j = 0; j < sz; ++j) {
        const elem_t* pj = &a.apply_tab[j * n];
        a.compose_tab[i * sz + j] = a.find_by_images(pj[i1], pj[i2], pj[i3]);
      }
    }
  }

  a.inverse.resize(sz);
  std::vector<elem_t> invp(n);
  for (size_t i = 0; i < sz; ++i) {
    const elem_t* pi = &a.apply_tab[i * n];
    for (int e = 0; e < n; ++e) invp[pi[e]] = elem_t(e);
    a.inverse[i] = a.find_by_images(invp[g.a1], invp[g.a2], invp[g.b]);
    if (a.inverse[i] == kNoAut) throw std::logic_error("automorphisms: inverse missing");
  }

  // greedy generating set
  {
    std::vector<char> in(sz, 0);
    std::vector<aut_t> closure{a.id};
    in[a.id] = 1;
    for (size_t c = 0; c < sz; ++c) {
      if (in[c]) continue;
      a.gens.push_back(aut_t(c));
      for (size_t h = 0; h < closure.size(); ++h) {
        for (aut_t gen : a.gens) {
          aut_t y = a.compose(closure[h], gen);
          if (!in[y]) { in[y] = 1; closure.push_back(y); }
          y = a.compose(gen, closure[h]);
          if (!in[y]) { in[y] = 1; closure.push_back(y); }
        }
      }
      if (closure.size() == sz) break;
    }
  }
  return a;
}

// Conjugation x -> g^-1 x g as an Automorphism.
inline Automorphism inner(const GroupTable& g, elem_t c) {
  Automorphism f;
  f.perm.resize(g.n());
  for (int x = 0; x < g.n(); ++x) f.perm[x] = g.tab.conj(elem_t(x), c);
  return f;
}

// Index of inner(g, c) in a.
inline aut_t inner_index(const AutGroup& a, elem_t c) {
  const GroupTable& g = *a.g;
  return a.find_by_images(g.tab.conj(g.a1, c), g.tab.conj(g.a2, c), g.tab.conj(g.b, c));
}

}  // namespace p2q

#endif  // P2Q_AUT_HPP_
