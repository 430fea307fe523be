// Isomorphism-type classifier for Cayley tables of order p^2*q with
// elementary abelian Sylow p-subgroup.  Decision tree on Sylow structure
// and the eigenvalues of a q-element acting on the Sylow p-subgroup.

#ifndef P2Q_IDENTIFY_HPP_
#define P2Q_IDENTIFY_HPP_

#include "group.hpp"

namespace p2q {

inline TypeLabel identify_type(const CayleyTable& t, long p, long q) {
  if (t.n != p * p * q) throw invalid_parameters("identify_type: order mismatch");
  for (int x = 0; x < t.n; ++x) {
    int o = t.elem_order[x];
    if (o % p == 0 && o != p && x != t.id)
      if (o == p * p) throw unsupported_shape("identify_type: cyclic Sylow p-subgroup");
  }
  if (t.is_abelian()) return TypeLabel{5, 0};

  std::vector<elem_t> p_elems, q_elems;
  for (int x = 0; x < t.n; ++x) {
    if (t.elem_order[x] == p) p_elems.push_back(elem_t(x));
    if (t.elem_order[x] == q) q_elems.push_back(elem_t(x));
  }

  // Unique Sylow q + centre of order p marks type 11.
  if (q_elems.size() == size_t(q - 1)) {
    if (center(t).order() == size_t(p) && (q - 1) % p == 0) return TypeLabel{11, 0};
    throw unsupported_shape("identify_type: normal Sylow q of unexpected shape");
  }

  // Here the p-elements must form the unique Sylow p-subgroup.
  if (p_elems.size() != size_t(p) * p - 1)
    throw unsupported_shape("identify_type: no normal Sylow p-subgroup");
  elem_t x1 = p_elems.front(), x2 = 0;
  {
    std::vector<char> in_span(t.n, 0);
    elem_t y = t.id;
    for (long i = 0; i < p; ++i, y = t.at(y, x1)) in_span[y] = 1;
    for (elem_t c : p_elems)
      if (!in_span[c]) { x2 = c; break; }
  }
  elem_t b = q_elems.front();
  Mat2 m = action_matrix(t, p, b, {x1, x2});

  long tr = m.trace(), det = m.det();
  long disc = mod_val(tr * tr - 4 * det, p);
  if (!is_square_mod(disc, p)) return TypeLabel{10, 0};

  long s = 0;
  while (mod_val(s * s, p) != disc) ++s;
  long half = inv_mod(2, p);
  long mu1 = mul_mod(mod_val(tr + s, p), half, p);
  long mu2 = mul_mod(mod_val(tr - s, p), half, p);
  if (mu1 == mu2) {
    if (!m.is_scalar() || mu1 == 1)
      throw unsupported_shape("identify_type: unipotent q-action");
    return TypeLabel{7, 0};
  }
  if (mu1 == 1 || mu2 == 1) return TypeLabel{6, 0};
  if (mul_mod(mu1, mu2, p) == 1) return TypeLabel{9, 0};

  long lam = smallest_of_order(q, p);
  long e1 = discrete_log(mu1, lam, p), e2 = discrete_log(mu2, lam, p);
  long k = mul_mod(e2, inv_mod(e1, q), q);
  return TypeLabel{8, canonical_k(k, q)};
}

inline TypeLabel identify_type(const GroupTable& g) {
  return identify_type(g.tab, g.spec.p, g.spec.q);
}

}  // namespace p2q

#endif  // P2Q_IDENTIFY_HPP_
