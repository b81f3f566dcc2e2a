#include "p4geo/bounds.hpp"
#include "testutil.hpp"

#include <doctest.h>

using namespace p4geo;

namespace {

// Independent oracle: the expanded quartic-case cubic
// (1/96) d^3 - (19/16) d^2 + (10/3) d + 5/4.
Rational p4_expansion(long long d) {
  Rational dd(d);
  return dd * dd * dd / Rational(96) - Rational(19) * dd * dd / Rational(16) +
         Rational(10) * dd / Rational(3) + Rational(Int(5), Int(4));
}

// Independent oracle: d(d^2 - 40d + 95)/25.
Rational p5_closed(long long d) {
  Rational dd(d);
  return dd * (dd * dd - Rational(40) * dd + Rational(95)) / Rational(25);
}

// The degree cubic governing slope-5 surfaces on a quartic.
long long slope5_degree_cubic(long long d) {
  return d * d * d - 126 * d * d + 80 * d + 120;
}

// Independent oracles for the quadric/cubic cases of the m*C(..,3) form:
// P_2(d) = (d-1)(d-3)(d-5)/24 - d(d-3)/4 + 1,
// P_3(d) = d(d-3)(d-6)/54 - (2/3) d(d-3) + 1.
Rational p2_expansion(long long d) {
  Rational dd(d);
  return (dd - Rational(1)) * (dd - Rational(3)) * (dd - Rational(5)) / Rational(24) -
         dd * (dd - Rational(3)) / Rational(4) + Rational(1);
}

Rational p3_expansion(long long d) {
  Rational dd(d);
  return dd * (dd - Rational(3)) * (dd - Rational(6)) / Rational(54) -
         Rational(2) * dd * (dd - Rational(3)) / Rational(3) + Rational(1);
}

}  // namespace

TEST_CASE("pm_polynomial") {
  CHECK(pm_polynomial(4, 12) == Rational(Int(-447), Int(4)));
  CHECK(pm_polynomial(4, 12) == p4_expansion(12));
  CHECK(pm_polynomial(5, 45) == Rational(576));
  CHECK(pm_polynomial(5, 45) == p5_closed(45));
  CHECK(pm_polynomial(5, 0) == Rational(0));
  CHECK_THROWS_AS(pm_polynomial(1, 10), std::invalid_argument);
  CHECK_THROWS_AS(pm_polynomial(6, 10), std::invalid_argument);

  for (long long d = 1; d <= 100; ++d) {
    CHECK(pm_polynomial(2, d) == p2_expansion(d));
    CHECK(pm_polynomial(3, d) == p3_expansion(d));
    CHECK(pm_polynomial(4, d) == p4_expansion(d));
    CHECK(pm_polynomial(5, d) == p5_closed(d));
  }
}

TEST_CASE("chi_lower_bound_applies") {
  CHECK(chi_lower_bound_applies(4, 11));
  CHECK_FALSE(chi_lower_bound_applies(4, 10));
  CHECK(chi_lower_bound_applies(5, 18));
  CHECK_FALSE(chi_lower_bound_applies(5, 17));
}

TEST_CASE("ep_genus_bound") {
  CHECK(ep_genus_bound(4, 16) == Rational(64));  // CI(4,4) meets it exactly
  CHECK(ep_genus_bound(5, 5) == Rational(10));
  CHECK(ep_genus_bound(4, 0) == Rational(0));
  CHECK_THROWS_AS(ep_genus_bound(3, 10), std::invalid_argument);
}

TEST_CASE("chi_upper_bound") {
  CHECK(chi_upper_bound(4, Rational(4), 16) == Rational(36));
  CHECK(chi_upper_bound(5, Rational(5), 10) == Rational(50));
  CHECK(chi_upper_bound(5, Rational(7), 30) == Rational(10));
  CHECK_THROWS_AS(chi_upper_bound(4, Rational(6), 10), std::domain_error);
  CHECK_THROWS_AS(chi_upper_bound(5, Rational(6), 10), std::domain_error);
}

TEST_CASE("d_alpha quartic case") {
  // alpha = 5: d^3 - 126 d^2 + 80 d + 120, sign flip at 125/126.
  CHECK(slope5_degree_cubic(125) == -5505);
  CHECK(slope5_degree_cubic(126) == 10200);
  CHECK(d_alpha(4, Rational(5)) == 125);
  CHECK(d_alpha(4, Rational(4)) == 118);
  CHECK_THROWS_AS(d_alpha(4, Rational(6)), std::domain_error);
}

TEST_CASE("d_alpha quintic case") {
  CHECK(d_alpha(5, Rational(5)) == 164);  // d^2 - 165 d + 95 <= 0
  CHECK(d_alpha(5, Rational(Int(13), Int(2))) == 37);
  CHECK(d_alpha(5, Rational(7)) == 37);  // d^2 - 40 d + 95 <= 25/3
  CHECK_THROWS_AS(d_alpha(5, Rational(6)), std::domain_error);
}

TEST_CASE("d_alpha at extreme slopes") {
  // As alpha -> -inf the cap settles on the largest d where the base cubic
  // d^3 - 114 d^2 + 320 d + 120 is still negative, i.e. 111.
  auto base = [](long long d) { return d * d * d - 114 * d * d + 320 * d + 120; };
  CHECK(base(111) == -1323);
  CHECK(base(112) == 10872);
  CHECK(d_alpha(4, Rational(-100)) == 111);
  CHECK(d_alpha(4, Rational(-1000000)) == 111);
  // alpha = 23/4: scaled inequality d^3 - 162 d^2 - 640 d + 120 <= 0,
  // largest solution 165 (independent sign check below).
  auto scaled = [](long long d) {
    return d * d * d - 162 * d * d - 640 * d + 120;
  };
  CHECK(scaled(165) == -23805);
  CHECK(scaled(166) == 4104);
  CHECK(d_alpha(4, Rational(Int(23), Int(4))) == 165);
}

TEST_CASE("d_alpha(4, .) is nondecreasing in alpha") {
  // The (6 - alpha) factor of the degree inequality shrinks as alpha grows,
  // so the admissible set only widens: 118 at alpha = 4, 125 at alpha = 5.
  long long prev = d_alpha(4, Rational(0));
  for (long long twice = 1; twice <= 11; ++twice) {
    long long cur = d_alpha(4, Rational(Int(twice), Int(2)));
    CHECK(cur >= 10);
    CHECK(cur >= prev);
    prev = cur;
  }
}

TEST_CASE("bogomolov_discriminant") {
  CHECK(bogomolov_discriminant({2, Rational(0), {}, {}, Rational(3)}) == Rational(12));
  // T_xi-like rank 3 with c1^2 = 8, c2 = 16
  CHECK(bogomolov_discriminant({3, Rational(8), {}, {}, Rational(16)}) == Rational(80));
  CHECK(bogomolov_discriminant({1, Rational(99), {}, {}, Rational(7)}) == Rational(14));
}

TEST_CASE("txi_chern") {
  SurfaceInvariants abelian{10, 0, 0, 0};
  auto t4 = txi_chern(4, abelian);
  CHECK(t4.rank == 3);
  CHECK(t4.c1_sq == Rational(10));
  CHECK(t4.c2 == Rational(0));

  SurfaceInvariants any{7, 3, -2, 1};
  auto t5 = txi_chern(5, any);
  CHECK(t5.c1_sq == Rational(0));
  CHECK(t5.c2 == Rational(noether_c2(any) - any.k2));

  SurfaceInvariants scroll{5, -5, 0, 0};
  auto t2 = txi_chern(2, scroll);
  CHECK(t2.c1_sq == Rational(45));
  CHECK(t2.c2 == Rational(15));
}

TEST_CASE("general_type_c2_minus_k2_lower_bound") {
  SurfaceInvariants ci44{16, 48, 144, 36};
  CHECK(general_type_c2_minus_k2_lower_bound(4, ci44, StabilityBranch::Semistable) ==
        Rational(Int(160), Int(3)));
  CHECK(general_type_c2_minus_k2_lower_bound(
            4, ci44, StabilityBranch::UnstableRank1Sub) == Rational(28));
  SurfaceInvariants quadric{5, 0, 0, 1};
  CHECK(general_type_c2_minus_k2_lower_bound(2, quadric, StabilityBranch::Semistable) ==
        Rational(15));
  CHECK_THROWS_AS(
      general_type_c2_minus_k2_lower_bound(5, ci44, StabilityBranch::Semistable),
      std::invalid_argument);
}

TEST_CASE("bmy, miyaoka, varchenko, thm44") {
  CHECK(bmy_ok({10, 0, 9, 1}));
  CHECK_FALSE(bmy_ok({10, 0, 10, 1}));
  CHECK(bmy_ok({10, 0, 0, 0}));

  CHECK(miyaoka_c2_min(Rational(0)) == Rational(0));
  CHECK(miyaoka_c2_min(Rational(10)) == Rational(Int(10), Int(3)));
  CHECK(miyaoka_c2_min(Rational(15)) == Rational(5));

  CHECK(varchenko_bound() == 45);

  SurfaceInvariants abelian{10, 0, 0, 0};
  CHECK(thm44_bound_check(abelian, Rational(10)));  // k2 = c2 = 0
  // gap = k2 - c2 = 6 with L^2 = 10, d = 10: 6 <= 20/3 and 10 <= 10.
  SurfaceInvariants gap6{10, 0, 3, 0};
  REQUIRE(gap6.k2 - noether_c2(gap6) == 6);
  CHECK(thm44_bound_check(gap6, Rational(10)));
  // gap = 4 with L^2 = 9, d = 10: 4 <= 6 and 9 <= 10.
  SurfaceInvariants gap4{10, 0, 2, 0};
  REQUIRE(gap4.k2 - noether_c2(gap4) == 4);
  CHECK(thm44_bound_check(gap4, Rational(9)));
  // gap = 6 with L^2 = 8: 6 > 16/3 fails.
  CHECK_FALSE(thm44_bound_check(gap6, Rational(8)));
  // L^2 = 11 > d = 10 fails the second inequality.
  CHECK_FALSE(thm44_bound_check(gap6, Rational(11)));
}

TEST_CASE("discriminant sign matches the semistable inequality (sample grid)") {
  for (int m = 2; m <= 5; ++m) {
    for (long long d = 1; d <= 12; ++d) {
      for (long long hk = -15; hk <= 15; ++hk) {
        for (long long k2 = -15; k2 <= 15; ++k2) {
          for (long long chi = 0; chi <= 6; ++chi) {
            SurfaceInvariants inv{d, hk, k2, chi};
            bool delta_ok = bogomolov_discriminant(txi_chern(m, inv)).sign() >= 0;
            long long gap = noether_c2(inv) - inv.k2;
            bool ineq = m == 5 ? inv.k2 <= noether_c2(inv)
                               : Rational(gap) >= general_type_c2_minus_k2_lower_bound(
                                                      m, inv, StabilityBranch::Semistable);
            CHECK(delta_ok == ineq);
          }
        }
      }
    }
  }
}
