#include "p4geo/invariants.hpp"
#include "testutil.hpp"

#include <doctest.h>

using namespace p4geo;

namespace {

const SurfaceInvariants kAbelian{10, 0, 0, 0, 2};
const SurfaceInvariants kScroll{5, -5, 0, 0, 1};
const SurfaceInvariants kAdsr{8, 0, -8, 0, 1};

}  // namespace

TEST_CASE("noether_c2") {
  CHECK(noether_c2(SurfaceInvariants{1, 0, 0, 0}) == 0);
  CHECK(noether_c2(kAdsr) == 8);  // conic-bundle relations: c2 = -4(q-1) + delta
  CHECK(noether_c2(ci_invariants(4)) == 288);
}

TEST_CASE("sectional_genus_two_g_minus_2") {
  CHECK(sectional_genus_two_g_minus_2(kScroll) == 0);
  CHECK(sectional_genus_two_g_minus_2(kAdsr) == 8);
  CHECK(sectional_genus_two_g_minus_2(ci_invariants(4)) == 64);  // g = 33
}

TEST_CASE("dpf_residual") {
  CHECK(dpf_residual(kAbelian) == 0);
  CHECK(dpf_residual(kScroll) == 0);
  CHECK(dpf_residual(kAdsr) == 0);
  CHECK(dpf_residual(SurfaceInvariants{10, 0, 0, 1}) == 12);
}

TEST_CASE("slope") {
  CHECK(slope(ci_invariants(4)) == Rational(4));
  CHECK(slope(SurfaceInvariants{10, 0, 6, 1}) == Rational(6));
  CHECK(slope(ci_invariants(7)) == Rational(Int(36), Int(7)));
  CHECK_THROWS_AS(slope(kScroll), std::domain_error);
}

TEST_CASE("ci_invariants") {
  auto a2 = ci_invariants(2);
  CHECK(a2.d == 8);
  CHECK(a2.hk == 8);
  CHECK(a2.k2 == 8);
  CHECK(a2.chi == 6);
  CHECK(a2.q == 0);

  auto a4 = ci_invariants(4);
  CHECK(a4.d == 16);
  CHECK(a4.hk == 48);
  CHECK(a4.k2 == 144);
  CHECK(a4.chi == 36);

  CHECK_THROWS_AS(ci_invariants(1), std::invalid_argument);
}

TEST_CASE("complete intersections satisfy the double point formula") {
  for (long long a = 2; a <= 50; ++a) CHECK(dpf_residual(ci_invariants(a)) == 0);
}

TEST_CASE("complete-intersection slope is increasing and below 6") {
  Rational prev = slope(ci_invariants(2));
  for (long long a = 3; a <= 50; ++a) {
    Rational s = slope(ci_invariants(a));
    CHECK(prev < s);
    CHECK(s < Rational(6));
    prev = s;
  }
  CHECK(slope(ci_invariants(7)) > Rational(5));
  for (long long a = 60; a <= 80; ++a) {
    Rational gap = Rational(6) - slope(ci_invariants(a));
    CHECK(gap > Rational(0));
    CHECK(gap < Rational(Int(1), Int(10)));
  }
}

TEST_CASE("slope form of the double point formula") {
  // With dpf = 0 and alpha = k2/chi: 2(6-alpha) chi = 5 hk + 10d - d^2.
  testutil::Lcg rng(11);
  int tested = 0;
  while (tested < 100) {
    long long d = rng.in_range(1, 30);
    long long chi = rng.in_range(1, 20);
    long long k2 = rng.in_range(-40, 40);
    // choose hk to zero the residual: 5 hk = d^2 - 10d + 12 chi - 2 k2
    long long num = d * d - 10 * d + 12 * chi - 2 * k2;
    if (num % 5 != 0) continue;
    SurfaceInvariants inv{d, num / 5, k2, chi};
    REQUIRE(dpf_residual(inv) == 0);
    Rational alpha = slope(inv);
    Rational lhs = Rational(2) * (Rational(6) - alpha) * Rational(chi);
    Rational rhs = Rational(5 * inv.hk + 10 * d - d * d);
    CHECK(lhs == rhs);
    ++tested;
  }
}
