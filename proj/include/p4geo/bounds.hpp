#pragma once

#include "p4geo/invariants.hpp"
#include "p4geo/rational.hpp"

namespace p4geo {

/// Shape of the Bogomolov filtration of the rank-3 extension bundle:
/// semistable, two-step with a rank-2 (resp. rank-1) subsheaf, or the
/// full three-step ladder.
enum class StabilityBranch {
  Semistable,
  UnstableRank2Sub,
  UnstableRank1Sub,
  UnstableFullLadder,
};

/// Chern data of a coherent sheaf, reduced to the intersection numbers
/// every computation here actually consumes.
struct SheafChern {
  int rank = 1;
  Rational c1_sq;
  Rational c1_dot_H;
  Rational c1_dot_K;
  Rational c2;
};

/// Decker-Schreyer lower-bound polynomial P_m(d) for chi(O_X).
/// For m in {2,3,4} this evaluates
///   m*C(d/m + (m-3)/2, 3) - ((m-1)^2/2m) d(d-3) - C(m-1,4) + 1
/// with C(x,3) the cubic polynomial extension of the binomial coefficient.
/// For m = 5 it evaluates d(d^2 - 40d + 95)/25, the closed form every
/// degree-5 computation downstream relies on.
Rational pm_polynomial(int m, long long d);

/// True iff the chi >= P_m(d) lower bound is in force, i.e. d >= (m-1)^2 + 2.
bool chi_lower_bound_applies(int m, long long d);

/// Ellingsrud-Peskine sectional-genus ceiling: the maximum of 2g(H) - 2,
/// namely d^2/4 for m = 4 and (d^2 + 5d)/5 for m = 5.
Rational ep_genus_bound(int m, long long d);

/// chi(alpha, d): (d^2+20d)/(8(6-alpha)) for m = 4 (alpha < 6);
/// 5d/(6-alpha) resp. d/(3(alpha-6)) for m = 5 according to the side of 6.
Rational chi_upper_bound(int m, const Rational& alpha, long long d);

/// Degree ceiling d(alpha) = max(floor_base, d0), where d0 is the largest
/// integer solution of the slope-vs-P_m inequality and floor_base is 10
/// (m = 4) or 17 (m = 5).  Exact upward scan; see d0 stopping rule in the
/// implementation.
long long d_alpha(int m, const Rational& alpha);

/// Bogomolov discriminant 2r c2 - (r-1) c1^2.
Rational bogomolov_discriminant(const SheafChern& s);

/// Chern data of the rank-3 extension bundle T_xi attached to a degree-m
/// hypersurface through the surface: c1 = -(5-m)H and
/// c2 = c_2 - K^2 - (5-m) H.K.
SheafChern txi_chern(int m, const SurfaceInvariants& inv);

/// Lower bound for c_2 - K^2 from the Bogomolov (semi)stability of T_xi.
/// Unstable branches return the min over the filtration cases.
Rational general_type_c2_minus_k2_lower_bound(int m, const SurfaceInvariants& inv,
                                              StabilityBranch branch);

/// Bogomolov-Miyaoka-Yau: K^2 <= 9 chi.
bool bmy_ok(const SurfaceInvariants& inv);

/// Miyaoka's bound c2(F) >= L^2 / 3 for a semistable destabilizing quotient.
Rational miyaoka_c2_min(const Rational& l_sq);

/// Maximal number of ordinary double points of a quartic threefold.
int varchenko_bound();

/// K^2 - c2 <= 0, or 0 < K^2 - c2 <= (2/3) L^2 with L^2 <= d.
bool thm44_bound_check(const SurfaceInvariants& inv, const Rational& l_sq);

}  // namespace p4geo
