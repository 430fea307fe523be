// Holomorph elements (g, phi) acting on G by x -> x^phi * g.  Under this
// convention the map g -> (g, gamma(g)) is a homomorphism from (G, o) for
// any gamma function, which is what the bridge tests lock in.

#ifndef P2Q_HOLOMORPH_HPP_
#define P2Q_HOLOMORPH_HPP_

#include <set>

#include "aut.hpp"

namespace p2q {

struct not_a_subgroup : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct HolElement {
  elem_t g = 0;
  aut_t phi = 0;
  friend bool operator==(const HolElement& a, const HolElement& b) {
    return a.g == b.g && a.phi == b.phi;
  }
  friend bool operator<(const HolElement& a, const HolElement& b) {
    return a.g != b.g ? a.g < b.g : a.phi < b.phi;
  }
};

inline elem_t hol_apply(const AutGroup& a, elem_t x, const HolElement& h) {
  return a.g->mul(a.apply(h.phi, x), h.g);
}

// Apply h1 then h2: (g1, f1)*(g2, f2) = (g1^f2 * g2, f1 f2).
inline HolElement hol_compose(const AutGroup& a, const HolElement& h1, const HolElement& h2) {
  return HolElement{a.g->mul(a.apply(h2.phi, h1.g), h2.g), a.compose(h1.phi, h2.phi)};
}

inline HolElement hol_identity(const AutGroup& a) { return HolElement{a.g->id(), a.id}; }

inline HolElement hol_inverse(const AutGroup& a, const HolElement& h) {
  aut_t fi = a.inverse[h.phi];
  return HolElement{a.g->inv(a.apply(fi, h.g)), fi};
}

// True iff S is a regular subgroup of Hol(G): |S| = |G| and the orbit of
// the identity hits every point once.  Throws not_a_subgroup if S is not
// closed under composition.
inline bool is_regular(const AutGroup& a, const std::vector<HolElement>& s) {
  const GroupTable& g = *a.g;
  std::set<HolElement> in(s.begin(), s.end());
  if (in.size() != s.size()) throw not_a_subgroup("is_regular: repeated elements");
  for (const HolElement& h1 : s)
    for (const HolElement& h2 : s)
      if (!in.count(hol_compose(a, h1, h2)))
        throw not_a_subgroup("is_regular: not closed under composition");
  if (s.size() != size_t(g.n())) return false;
  std::vector<char> hit(g.n(), 0);
  for (const HolElement& h : s) {
    elem_t x = hol_apply(a, g.id(), h);
    if (hit[x]) return false;
    hit[x] = 1;
  }
  return true;
}

}  // namespace p2q

#endif  // P2Q_HOLOMORPH_HPP_
