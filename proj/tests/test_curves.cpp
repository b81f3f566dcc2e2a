#include "p4geo/curves.hpp"

#include <doctest.h>

using namespace p4geo;

TEST_CASE("rr_curve_chi") {
  for (long long g = 0; g <= 8; ++g) CHECK(rr_curve_chi(0, g) == 1 - g);
  CHECK(rr_curve_chi(5, 6) == 0);   // degree-5 bundle on the genus-6 curve
  CHECK(rr_curve_chi(10, 6) == 5);  // the "= 5 + h^1" step
  CHECK_THROWS_AS(rr_curve_chi(3, -1), std::invalid_argument);
}

TEST_CASE("clifford_max_h0") {
  CHECK(clifford_max_h0(5) == Rational(Int(7), Int(2)));
  CHECK(clifford_max_h0(0) == Rational(1));
  CHECK(clifford_max_h0(12) == Rational(7));  // the -H.K = 12 rearrangement
  CHECK_THROWS_AS(clifford_max_h0(-1), std::invalid_argument);
}

TEST_CASE("castelnuovo_max_genus") {
  CHECK(castelnuovo_max_genus(6, 3) == 4);
  CHECK(castelnuovo_max_genus(5, 4) == 1);
  for (long long N = 2; N <= 9; ++N) CHECK(castelnuovo_max_genus(N, N) == 0);
  CHECK_THROWS_AS(castelnuovo_max_genus(0, 3), std::invalid_argument);
  CHECK_THROWS_AS(castelnuovo_max_genus(5, 1), std::invalid_argument);
}

TEST_CASE("castelnuovo monotonicity and plane-curve consistency") {
  for (long long d = 1; d <= 60; ++d) {
    CHECK(castelnuovo_max_genus(d, 2) == (d - 1) * (d - 2) / 2);
    for (long long N = 2; N <= 9; ++N) {
      if (d > 1) CHECK(castelnuovo_max_genus(d, N) >= castelnuovo_max_genus(d - 1, N));
      if (N > 2) CHECK(castelnuovo_max_genus(d, N) <= castelnuovo_max_genus(d, N - 1));
    }
  }
}

TEST_CASE("plane_curve_omega_degree") {
  CHECK(plane_curve_omega_degree(3) == 0);
  CHECK(plane_curve_omega_degree(7) == 28);
  CHECK(plane_curve_omega_degree(6) == 18);
  CHECK_THROWS_AS(plane_curve_omega_degree(0), std::invalid_argument);
}
