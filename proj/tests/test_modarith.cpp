#include <catch2/catch.hpp>

#include "p2q/modarith.hpp"

using namespace p2q;

TEST_CASE("primes and units", "[modarith]") {
  REQUIRE(is_prime(2));
  REQUIRE(is_prime(11));
  REQUIRE_FALSE(is_prime(1));
  REQUIRE_FALSE(is_prime(91));
  REQUIRE(pow_mod(3, 5, 11) == 1);
  REQUIRE(inv_mod(2, 11) == 6);
  REQUIRE(mult_order(3, 11) == 5);
  REQUIRE(mult_order(2, 11) == 10);
  REQUIRE(smallest_of_order(5, 11) == 3);
  REQUIRE(smallest_of_order(2, 3) == 2);
  REQUIRE(discrete_log(9, 3, 11) == 2);
}

TEST_CASE("Mat2 arithmetic", "[modarith]") {
  Mat2 z(5, 4, 1, -1, 0);  // trace 4, det 1
  REQUIRE(z.det() == 1);
  REQUIRE(z.trace() == 4);
  REQUIRE(z.order() == 3);
  REQUIRE(z * z.inverse() == Mat2::identity(5));
  REQUIRE(z.pow(3) == Mat2::identity(5));

  // row convention: applying d = diag(2, 3) then s = [[0,1],[1,0]] is d*s
  Mat2 d = Mat2::diag(7, 2, 3), s(7, 0, 1, 1, 0);
  auto v = d.apply(1, 1);
  auto w = s.apply(v[0], v[1]);
  auto u = (d * s).apply(1, 1);
  REQUIRE(w == u);
}

TEST_CASE("quadratic irreducibility", "[modarith]") {
  REQUIRE(quad_irreducible_mod(4, 5));        // x^2 - 4x + 1 has no root mod 5
  REQUIRE_FALSE(quad_irreducible_mod(0, 5));  // x^2 + 1 = (x-2)(x-3) mod 5
  REQUIRE_FALSE(quad_irreducible_mod(2, 5));  // (x-1)^2
}
