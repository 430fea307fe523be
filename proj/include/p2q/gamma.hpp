// Gamma functions gamma: G -> Aut(G) with the functional equation
//   gamma(g^gamma(h) * h) = gamma(g) gamma(h)
// (automorphisms compose exponent-style, left factor applied first).
// Each valid gamma encodes one regular subgroup of Hol(G), one circle
// operation g o h = g^gamma(h) * h, and one skew brace (G, *, o).

#ifndef P2Q_GAMMA_HPP_
#define P2Q_GAMMA_HPP_

#include "holomorph.hpp"

namespace p2q {

struct precondition_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct GammaFunction {
  std::vector<aut_t> vals;  // vals[g] = index of gamma(g) in the AutGroup

  friend bool operator==(const GammaFunction& a, const GammaFunction& b) {
    return a.vals == b.vals;
  }
  friend bool operator<(const GammaFunction& a, const GammaFunction& b) {
    return a.vals < b.vals;
  }
};

inline GammaFunction trivial_gamma(const AutGroup& a) {
  return GammaFunction{std::vector<aut_t>(a.n(), a.id)};
}

// gamma(g) = inner(g^-1); the left regular representation.
inline GammaFunction left_regular_gamma(const AutGroup& a) {
  GammaFunction f;
  f.vals.resize(a.n());
  for (int x = 0; x < a.n(); ++x) {
    aut_t v = inner_index(a, a.g->inv(elem_t(x)));
    if (v == kNoAut) throw std::logic_error("inner automorphism missing from AutGroup");
    f.vals[x] = v;
  }
  return f;
}

inline bool check_gfe(const AutGroup& a, const GammaFunction& f) {
  const GroupTable& g = *a.g;
  for (int x = 0; x < g.n(); ++x)
    for (int h = 0; h < g.n(); ++h) {
      elem_t t = g.mul(a.apply(f.vals[h], elem_t(x)), elem_t(h));
      if (f.vals[t] != a.compose(f.vals[x], f.vals[h])) return false;
    }
  return true;
}

// Cayley table of (G, o) with g o h = g^gamma(h) * h.
inline CayleyTable circle_table(const AutGroup& a, const GammaFunction& f) {
  const GroupTable& g = *a.g;
  CayleyTable t;
  t.n = g.n();
  t.mul.resize(size_t(t.n) * t.n);
  for (int x = 0; x < t.n; ++x)
    for (int h = 0; h < t.n; ++h)
      t.mul[size_t(x) * t.n + h] = g.mul(a.apply(f.vals[h], elem_t(x)), elem_t(h));
  t.finish();
  return t;
}

inline Subgroup gamma_kernel(const AutGroup& a, const GammaFunction& f) {
  Subgroup s;
  for (int x = 0; x < a.n(); ++x)
    if (f.vals[x] == a.id) s.members.push_back(elem_t(x));
  return s;
}

inline std::vector<HolElement> to_regular_subgroup(const AutGroup& a, const GammaFunction& f) {
  std::vector<HolElement> s;
  s.reserve(a.n());
  for (int x = 0; x < a.n(); ++x) s.push_back(HolElement{elem_t(x), f.vals[x]});
  return s;
}

// Dual gamma function gamma~(x) = gamma(x^-1) inner(x^-1); an involution.
inline GammaFunction dual(const AutGroup& a, const GammaFunction& f) {
  const GroupTable& g = *a.g;
  GammaFunction d;
  d.vals.resize(g.n());
  for (int x = 0; x < g.n(); ++x) {
    elem_t xi = g.inv(elem_t(x));
    aut_t ii = inner_index(a, xi);
    if (ii == kNoAut) throw std::logic_error("dual: inner automorphism missing");
    d.vals[x] = a.compose(f.vals[xi], ii);
  }
  return d;
}

// gamma^phi(g) = phi^-1 gamma(g^(phi^-1)) phi; the Aut(G)-action whose
// orbits are the skew-brace isomorphism classes.
inline GammaFunction conjugate_gf(const AutGroup& a, const GammaFunction& f, aut_t phi) {
  GammaFunction r;
  r.vals.resize(a.n());
  aut_t pi = a.inverse[phi];
  for (int x = 0; x < a.n(); ++x)
    r.vals[x] = a.compose(a.compose(pi, f.vals[a.apply(pi, elem_t(x))]), phi);
  return r;
}

struct InvariantSylow {
  Subgroup subgroup;  // first invariant Sylow r-subgroup in sorted order
  int count = 0;      // how many Sylow r-subgroups are invariant
};

// Sylow r-subgroups H with H^gamma(h) = H for all h in H.  At least one
// must exist for a valid gamma; zero is a property violation and throws.
inline InvariantSylow invariant_sylow(const AutGroup& a, const GammaFunction& f, long r) {
  const GroupTable& g = *a.g;
  InvariantSylow out;
  for (const Subgroup& s : sylow_subgroups(g, r)) {
    bool inv = true;
    for (elem_t h : s.members) {
      for (elem_t x : s.members)
        if (!s.contains(a.apply(f.vals[h], x))) { inv = false; break; }
      if (!inv) break;
    }
    if (inv) {
      if (out.count == 0) out.subgroup = s;
      ++out.count;
    }
  }
  if (out.count == 0)
    throw std::logic_error("invariant_sylow: no invariant Sylow subgroup (property violation)");
  return out;
}

// A partial gamma given on a subset of G; vals[x] = kNoAut where undefined.
struct PartialGamma {
  std::vector<aut_t> vals;
  bool defined(elem_t x) const { return vals[x] != kNoAut; }
};

// Lifting: from a relative gamma function gamma' on A (trivial on A n B,
// with B invariant under {gamma'(a) inner(a)}) to gamma(ab) = gamma'(a) on
// G = AB.  Precondition failures name the clause.
inline GammaFunction lift_rgf(const AutGroup& a, const PartialGamma& gp,
                              const Subgroup& A, const Subgroup& B) {
  const GroupTable& g = *a.g;
  for (elem_t x : A.members)
    if (!gp.defined(x)) throw precondition_error("lift: gamma' not total on A");

  // GFE on A and A invariant under gamma'(A)
  for (elem_t x : A.members)
    for (elem_t h : A.members) {
      elem_t xi = a.apply(gp.vals[h], x);
      if (!A.contains(xi)) throw precondition_error("lift: A not invariant under gamma'(A)");
      elem_t t = g.mul(xi, h);
      if (gp.vals[t] != a.compose(gp.vals[x], gp.vals[h]))
        throw precondition_error("lift: gamma' violates the GFE on A");
    }
  for (elem_t x : A.members)
    if (B.contains(x) && gp.vals[x] != a.id)
      throw precondition_error("lift: gamma' not trivial on A intersect B");
  for (elem_t x : A.members) {
    aut_t ii = inner_index(a, x);
    if (ii == kNoAut) throw precondition_error("lift: inner automorphism missing");
    aut_t w = a.compose(gp.vals[x], ii);
    for (elem_t bb : B.members)
      if (!B.contains(a.apply(w, bb)))
        throw precondition_error("lift: B not invariant under gamma'(a) inner(a)");
  }

  GammaFunction f;
  f.vals.assign(g.n(), kNoAut);
  for (elem_t x : A.members)
    for (elem_t bb : B.members) {
      elem_t t = g.mul(x, bb);
      if (f.vals[t] != kNoAut && f.vals[t] != gp.vals[x])
        throw precondition_error("lift: gamma(ab) = gamma'(a) is not well defined");
      f.vals[t] = gp.vals[x];
    }
  for (int x = 0; x < g.n(); ++x)
    if (f.vals[x] == kNoAut) throw precondition_error("lift: G != A*B");
  if (!check_gfe(a, f)) throw precondition_error("lift: lifted map violates the GFE");
  return f;
}

// Endomorphism sigma of A = <a1-line, a2-line> as a row-convention matrix.
using SigmaMatrix = Mat2;

struct relation_violated : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

namespace detail {

// Coordinates of the Sylow p-subgroup members in the (a1, a2) basis.
struct ACoords {
  std::vector<int> ci, cj;     // -1 outside A
  std::vector<elem_t> at;      // at[i*p+j]
  long p;
  ACoords(const GroupTable& g) : ci(g.n(), -1), cj(g.n(), -1), p(g.spec.p) {
    at.resize(p * p);
    for (long i = 0; i < p; ++i)
      for (long j = 0; j < p; ++j) {
        elem_t e = g.index_of(i, j, 0);
        ci[e] = int(i);
        cj[e] = int(j);
        at[i * p + j] = e;
      }
  }
  bool in(elem_t x) const { return ci[x] >= 0; }
  elem_t of(long i, long j) const { return at[mod_val(i, p) * p + mod_val(j, p)]; }
};

// Matrix of phi restricted to A, row convention; requires A invariant.
inline Mat2 restriction_matrix(const AutGroup& a, const ACoords& ac, aut_t phi) {
  const GroupTable& g = *a.g;
  elem_t i1 = a.apply(phi, g.a1), i2 = a.apply(phi, g.a2);
  if (!ac.in(i1) || !ac.in(i2))
    throw relation_violated("restriction_matrix: A not invariant");
  return Mat2(g.spec.p, ac.ci[i1], ac.cj[i1], ac.ci[i2], ac.cj[i2]);
}

}  // namespace detail

// Gluing: from sigma in End(A) and an RGF on a Sylow q-subgroup B, build
//   gamma(a b) = inner(a^(-gamma(b)^-1 sigma)) gamma(b)
// subject to sigma gamma(b)|A (sigma - 1) = (sigma - 1) gamma(b)|A inner(b)|A sigma.
// Requires A characteristic abelian with A n Z(G) = 1, G = AB, A n B = 1.
inline GammaFunction glue(const AutGroup& a, const SigmaMatrix& sigma,
                          const PartialGamma& gamma_b, const Subgroup& B) {
  const GroupTable& g = *a.g;
  const long p = g.spec.p;
  if (g.spec.family == 11) throw precondition_error("glue: A is not the normal Sylow p here");
  detail::ACoords ac(g);

  {
    Subgroup z = center(g);
    for (elem_t x : z.members)
      if (x != g.id() && ac.in(x))
        throw precondition_error("glue: A intersects the centre");
  }
  for (elem_t x : B.members) {
    if (x != g.id() && ac.in(x)) throw precondition_error("glue: A intersect B nontrivial");
    if (!gamma_b.defined(x)) throw precondition_error("glue: gamma_B not total on B");
  }
  if (B.order() * ac.at.size() != size_t(g.n()))
    throw precondition_error("glue: G != A*B");

  const Mat2 one = Mat2::identity(p);
  for (elem_t x : B.members) {
    Mat2 gb = detail::restriction_matrix(a, ac, gamma_b.vals[x]);
    aut_t ib = inner_index(a, x);
    if (ib == kNoAut) throw std::logic_error("glue: inner automorphism missing");
    Mat2 ibm = detail::restriction_matrix(a, ac, ib);
    if (sigma * gb * (sigma - one) != (sigma - one) * gb * ibm * sigma)
      throw relation_violated("glue: sigma relation fails on B");
  }

  GammaFunction f;
  f.vals.assign(g.n(), kNoAut);
  for (elem_t bb : B.members) {
    aut_t gb = gamma_b.vals[bb];
    Mat2 gbi = detail::restriction_matrix(a, ac, a.inverse[gb]);
    Mat2 m = gbi * sigma;
    for (long i = 0; i < p; ++i)
      for (long j = 0; j < p; ++j) {
        auto v = m.apply(i, j);
        elem_t w = ac.of(-v[0], -v[1]);  // a^(-gamma(b)^-1 sigma)
        aut_t iw = inner_index(a, w);
        if (iw == kNoAut) throw std::logic_error("glue: inner automorphism missing");
        elem_t t = g.mul(ac.of(i, j), bb);
        f.vals[t] = a.compose(iw, gb);
      }
  }
  for (int x = 0; x < g.n(); ++x)
    if (f.vals[x] == kNoAut) throw precondition_error("glue: G != A*B");
  if (!check_gfe(a, f)) throw relation_violated("glue: extension violates the GFE");
  return f;
}

struct hypothesis_violation : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// The unique RGF on A = <x1, x2> extending gamma(x1) = eta1, gamma(x2) = eta2
// when eta1 is trivial on A, x1^eta2 = x1 and x2^eta2 = x2 x1^k:
//   gamma(x1^i x2^j) = eta1^(i - k*(1 + ... + (j-1))) eta2^j.
// (x1, x2) is any basis of a Sylow p-subgroup, passed explicitly because the
// roles are asymmetric.
inline PartialGamma rgf_extend_ker_q(const AutGroup& a, elem_t x1, elem_t x2,
                                     aut_t eta1, aut_t eta2, long k) {
  const GroupTable& g = *a.g;
  const long p = g.spec.p;
  std::vector<elem_t> span(p * p);
  std::vector<long> si(g.n(), -1);
  {
    elem_t x = g.id();
    for (long i = 0; i < p; ++i, x = g.mul(x, x1)) {
      elem_t y = x;
      for (long j = 0; j < p; ++j, y = g.mul(y, x2)) {
        if (si[y] >= 0) throw hypothesis_violation("rgf_extend_ker_q: (x1, x2) not a basis");
        si[y] = i * p + j;
        span[i * p + j] = y;
      }
    }
  }
  auto of = [&](long i, long j) { return span[mod_val(i, p) * p + mod_val(j, p)]; };
  for (long i = 0; i < p * p; ++i)
    if (a.apply(eta1, span[i]) != span[i])
      throw hypothesis_violation("rgf_extend_ker_q: eta1 not trivial on A");
  if (a.apply(eta2, x1) != x1)
    throw hypothesis_violation("rgf_extend_ker_q: eta2 must fix x1");
  if (a.apply(eta2, x2) != of(mod_val(k, p), 1))
    throw hypothesis_violation("rgf_extend_ker_q: x2^eta2 != x2 x1^k");

  std::vector<aut_t> e1pow(p), e2pow(p);
  e1pow[0] = e2pow[0] = a.id;
  for (long i = 1; i < p; ++i) {
    e1pow[i] = a.compose(e1pow[i - 1], eta1);
    e2pow[i] = a.compose(e2pow[i - 1], eta2);
  }
  PartialGamma f;
  f.vals.assign(g.n(), kNoAut);
  for (long i = 0; i < p; ++i)
    for (long j = 0; j < p; ++j) {
      long tri = j * (j - 1) / 2;  // 1 + 2 + ... + (j-1)
      long e = mod_val(i - k * tri, p);
      f.vals[of(i, j)] = a.compose(e1pow[e], e2pow[j]);
    }
  // The hypotheses make this an RGF; anything else (an eta of wrong order,
  // say) surfaces here.
  for (long i = 0; i < p * p; ++i)
    for (long j = 0; j < p * p; ++j) {
      elem_t x = span[i], h = span[j];
      elem_t xi = a.apply(f.vals[h], x);
      if (si[xi] < 0) throw hypothesis_violation("rgf_extend_ker_q: A not invariant");
      if (f.vals[g.mul(xi, h)] != a.compose(f.vals[x], f.vals[h]))
        throw hypothesis_violation("rgf_extend_ker_q: extension violates the GFE");
    }
  return f;
}

}  // namespace p2q

#endif  // P2Q_GAMMA_HPP_
