// Catalog of the groups of order p^2*q with elementary abelian Sylow
// p-subgroup: validated parameter sets for the families 5..11, canonical
// parameter choices, and the representative set K for the type-8 classes
// G_k ~ G_{k^-1}.

#ifndef P2Q_CATALOG_HPP_
#define P2Q_CATALOG_HPP_

#include <string>
#include <vector>

#include "modarith.hpp"

namespace p2q {

struct invalid_parameters : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Family presentations, common part <a1, a2, b | a1^p = a2^p = b^q = 1, [a1,a2] = 1>:
//   5:  direct product, b central
//   6:  a2^b = a2^lambda                      (q | p-1)
//   7:  a1^b = a1^lambda, a2^b = a2^lambda    (q | p-1)
//   8:  a1^b = a1^lambda, a2^b = a2^(lambda^k)  (q | p-1, q > 3, k != 0, +-1)
//   9:  a1^b = a1^lambda, a2^b = a2^(lambda^-1) (q | p-1, q > 2)
//   10: a1^b = a1^t a2,  a2^b = a1^-1          (q | p+1, q > 2)
//   11: b^(a1) = b^u, a2 central               (p | q-1)
struct GroupSpec {
  int family = 0;   // 5..11
  long p = 0, q = 0;
  long k = 0;       // family 8 only, canonical representative in K(q)
  long lambda = 0;  // families 6..9: element of order q mod p
  long u = 0;       // family 11: element of order p mod q
  long trace_t = 0; // family 10: trace of the order-q companion matrix

  long order() const { return p * p * q; }
  std::string name() const {
    std::string s = "type " + std::to_string(family);
    if (family == 8) s += " (k=" + std::to_string(k) + ")";
    return s;
  }
};

// Isomorphism-type label of a group of order p^2*q (elementary abelian
// Sylow p case).  For family 8 the label carries min(k, k^-1 mod q).
struct TypeLabel {
  int family = 0;
  long k_canonical = 0;  // family 8 only

  friend bool operator==(const TypeLabel& a, const TypeLabel& b) {
    return a.family == b.family && a.k_canonical == b.k_canonical;
  }
  friend bool operator!=(const TypeLabel& a, const TypeLabel& b) { return !(a == b); }
  friend bool operator<(const TypeLabel& a, const TypeLabel& b) {
    return a.family != b.family ? a.family < b.family : a.k_canonical < b.k_canonical;
  }
  std::string str() const {
    std::string s = std::to_string(family);
    if (family == 8) s += "_k" + std::to_string(k_canonical);
    return s;
  }
};

inline long canonical_k(long k, long q) {
  k = mod_val(k, q);
  long ki = inv_mod(k, q);
  return k < ki ? k : ki;
}

// Representatives of the type-8 isomorphism classes: one of {k, k^-1} per
// class, k != 0, +-1, canonical pick min(k, k^-1 mod q).  Size (q-3)/2.
inline std::vector<long> kappa_set(long q) {
  if (!is_prime(q) || q <= 3) throw invalid_parameters("kappa_set: need prime q > 3");
  std::vector<long> ks;
  for (long k = 2; k <= q - 2; ++k)
    if (canonical_k(k, q) == k) ks.push_back(k);
  return ks;
}

inline void check_pq(long p, long q) {
  if (!is_prime(p) || !is_prime(q) || p == q || p <= 2)
    throw invalid_parameters("need distinct primes with p > 2");
}

// Smallest trace t such that x^2 - t x + 1 is irreducible mod p and its
// companion matrix has multiplicative order q.
inline long canonical_trace(long p, long q) {
  for (long t = 0; t < p; ++t) {
    if (!quad_irreducible_mod(t, p)) continue;
    Mat2 c(p, t, 1, -1, 0);
    if (c.order() == q) return t;
  }
  throw invalid_parameters("no order-q companion matrix trace mod p");
}

inline GroupSpec make_spec(int family, long p, long q, long k = 0) {
  check_pq(p, q);
  GroupSpec s;
  s.family = family;
  s.p = p;
  s.q = q;
  switch (family) {
    case 5:
      break;
    case 6:
    case 7:
      if ((p - 1) % q != 0)
        throw invalid_parameters("type " + std::to_string(family) + " needs q | p-1");
      s.lambda = smallest_of_order(q, p);
      break;
    case 8: {
      if ((p - 1) % q != 0) throw invalid_parameters("type 8 needs q | p-1");
      if (q <= 3) throw invalid_parameters("type 8 needs q > 3");
      k = mod_val(k, q);
      if (k == 0 || k == 1 || k == q - 1)
        throw invalid_parameters("type 8 needs k != 0, +-1 mod q");
      s.k = canonical_k(k, q);
      s.lambda = smallest_of_order(q, p);
      break;
    }
    case 9:
      if ((p - 1) % q != 0) throw invalid_parameters("type 9 needs q | p-1");
      if (q <= 2) throw invalid_parameters("type 9 needs q > 2");
      s.lambda = smallest_of_order(q, p);
      break;
    case 10:
      if ((p + 1) % q != 0) throw invalid_parameters("type 10 needs q | p+1");
      if (q <= 2) throw invalid_parameters("type 10 needs q > 2");
      s.trace_t = canonical_trace(p, q);
      break;
    case 11:
      if ((q - 1) % p != 0) throw invalid_parameters("type 11 needs p | q-1");
      s.u = smallest_of_order(p, q);
      break;
    default:
      throw invalid_parameters("family must be 5..11");
  }
  return s;
}

// All valid GroupSpecs at (p, q), type 8 expanded over K(q).
inline std::vector<GroupSpec> all_specs(long p, long q) {
  check_pq(p, q);
  std::vector<GroupSpec> v;
  v.push_back(make_spec(5, p, q));
  if ((p - 1) % q == 0) {
    v.push_back(make_spec(6, p, q));
    v.push_back(make_spec(7, p, q));
    if (q > 3)
      for (long k : kappa_set(q)) v.push_back(make_spec(8, p, q, k));
    if (q > 2) v.push_back(make_spec(9, p, q));
  }
  if (q > 2 && (p + 1) % q == 0) v.push_back(make_spec(10, p, q));
  if ((q - 1) % p == 0) v.push_back(make_spec(11, p, q));
  return v;
}

inline TypeLabel label_of(const GroupSpec& s) { return TypeLabel{s.family, s.k}; }

}  // namespace p2q

#endif  // P2Q_CATALOG_HPP_
