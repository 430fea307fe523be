// Small modular arithmetic over F_p and 2x2 matrices, sized for p*p*q group
// orders of a few hundred.  Everything brute-force and exact.

#ifndef P2Q_MODARITH_HPP_
#define P2Q_MODARITH_HPP_

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace p2q {

inline bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline long mod_val(long a, long m) {
  long r = a % m;
  return r < 0 ? r + m : r;
}

inline long mul_mod(long a, long b, long m) { return (a * b) % m; }

inline long pow_mod(long a, long e, long m) {
  a = mod_val(a, m);
  long r = 1;
  for (; e > 0; e >>= 1) {
    if (e & 1) r = (r * a) % m;
    a = (a * a) % m;
  }
  return r;
}

inline long inv_mod(long a, long m) {
  a = mod_val(a, m);
  for (long x = 1; x < m; ++x)
    if ((a * x) % m == 1) return x;
  throw std::invalid_argument("inv_mod: " + std::to_string(a) +
                              " not invertible mod " + std::to_string(m));
}

// Multiplicative order of a mod m; a must be a unit.
inline long mult_order(long a, long m) {
  a = mod_val(a, m);
  if (a == 0) throw std::invalid_argument("mult_order of 0");
  long x = a;
  for (long k = 1; k <= m; ++k) {
    if (x == 1) return k;
    x = (x * a) % m;
  }
  throw std::invalid_argument("mult_order: not a unit");
}

// Smallest element of given multiplicative order mod m, or 0 if none.
inline long smallest_of_order(long order, long m) {
  for (long a = 1; a < m; ++a)
    if (mult_order(a, m) == order) return a;
  return 0;
}

// Discrete log base g (g of known small order) by scan: g^x = a mod m.
inline long discrete_log(long a, long g, long m) {
  a = mod_val(a, m);
  long x = 1;
  for (long e = 0; e < m; ++e) {
    if (x == a) return e;
    x = (x * g) % m;
  }
  throw std::invalid_argument("discrete_log: no solution");
}

inline bool is_square_mod(long a, long p) {
  a = mod_val(a, p);
  for (long s = 0; s < p; ++s)
    if ((s * s) % p == a) return true;
  return false;
}

// 2x2 matrix over F_p acting on row vectors: coords(x^phi) = coords(x) * M.
// With that convention the matrix of "apply f then g" is M_f * M_g, so
// products read left to right like composed exponents.
struct Mat2 {
  long p = 0;
  std::array<long, 4> a{};  // row-major: [ a00 a01 ; a10 a11 ]

  Mat2() = default;
  Mat2(long p_, long a00, long a01, long a10, long a11)
      : p(p_), a{mod_val(a00, p_), mod_val(a01, p_), mod_val(a10, p_), mod_val(a11, p_)} {}

  static Mat2 identity(long p) { return Mat2(p, 1, 0, 0, 1); }
  static Mat2 zero(long p) { return Mat2(p, 0, 0, 0, 0); }
  static Mat2 scalar(long p, long s) { return Mat2(p, s, 0, 0, s); }
  static Mat2 diag(long p, long d0, long d1) { return Mat2(p, d0, 0, 0, d1); }

  long at(int r, int c) const { return a[2 * r + c]; }

  friend bool operator==(const Mat2& x, const Mat2& y) { return x.p == y.p && x.a == y.a; }
  friend bool operator!=(const Mat2& x, const Mat2& y) { return !(x == y); }

  Mat2 operator*(const Mat2& o) const {
    return Mat2(p, a[0] * o.a[0] + a[1] * o.a[2], a[0] * o.a[1] + a[1] * o.a[3],
                a[2] * o.a[0] + a[3] * o.a[2], a[2] * o.a[1] + a[3] * o.a[3]);
  }
  Mat2 operator+(const Mat2& o) const {
    return Mat2(p, a[0] + o.a[0], a[1] + o.a[1], a[2] + o.a[2], a[3] + o.a[3]);
  }
  Mat2 operator-(const Mat2& o) const {
    return Mat2(p, a[0] - o.a[0], a[1] - o.a[1], a[2] - o.a[2], a[3] - o.a[3]);
  }

  long det() const { return mod_val(a[0] * a[3] - a[1] * a[2], p); }
  long trace() const { return mod_val(a[0] + a[3], p); }
  bool is_scalar() const { return a[1] == 0 && a[2] == 0 && a[0] == a[3]; }

  bool invertible() const { return det() != 0; }
  Mat2 inverse() const {
    long d = det();
    if (d == 0) throw std::invalid_argument("Mat2::inverse: singular");
    long di = inv_mod(d, p);
    return Mat2(p, a[3] * di, -a[1] * di, -a[2] * di, a[0] * di);
  }

  Mat2 pow(long e) const {
    Mat2 r = identity(p), b = *this;
    for (; e > 0; e >>= 1) {
      if (e & 1) r = r * b;
      b = b * b;
    }
    return r;
  }

  long order() const {
    if (!invertible()) throw std::invalid_argument("Mat2::order: singular");
    Mat2 x = *this;
    const Mat2 id = identity(p);
    long bound = (p * p - 1) * (p * p - p);
    for (long k = 1; k <= bound; ++k) {
      if (x == id) return k;
      x = x * (*this);
    }
    throw std::logic_error("Mat2::order: overflow");
  }

  // Apply to a row vector (i, j).
  std::array<long, 2> apply(long i, long j) const {
    return {mod_val(i * a[0] + j * a[2], p), mod_val(i * a[1] + j * a[3], p)};
  }
};

// x^2 - t x + 1 irreducible over F_p?
inline bool quad_irreducible_mod(long t, long p) {
  long disc = mod_val(t * t - 4, p);
  return !is_square_mod(disc, p);
}

}  // namespace p2q

#endif  // P2Q_MODARITH_HPP_
