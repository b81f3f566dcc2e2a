#pragma once

#include "p4geo/bounds.hpp"
#include "p4geo/invariants.hpp"

#include <vector>

namespace p4geo {

/// Intersection data for the Koszul sequence of a section of the twisted
/// normal bundle, 0 -> O(K+(5-m)H+Z1) -> N_X -> J_{Z0}(mH-Z1) -> 0.
/// Z1 is the divisorial part of the zero locus; all three numbers are zero
/// when Z1 = 0.  For a ruling on a scroll use z1_sq = 0, z1_dot_K = -2.
struct KoszulDatum {
  int m = 4;
  long long z1_dot_H = 0;
  long long z1_dot_K = 0;
  long long z1_sq = 0;
};

/// Intersection data of the positive-cone classes B1 (and B2, full-ladder
/// case only) carried by a Bogomolov filtration of T_xi.
struct FiltrationData {
  StabilityBranch branch = StabilityBranch::UnstableRank2Sub;
  Rational b1_sq;
  Rational b1_dot_H;
  Rational b2_sq;
  Rational b2_dot_H;
  Rational b1_dot_b2;
};

/// One graded piece c1(F_i/F_{i-1}) written in the (H, B1[, B2]) basis,
/// with its H-degree and self-intersection expanded against the supplied
/// intersection data.
struct FiltrationClass {
  std::vector<Rational> coeffs;  // coefficients of H, B1 [, B2]
  Rational dot_H;
  Rational sq;
};

/// Whitney sum: Chern data of the middle term of
/// 0 -> sub -> E -> quot -> 0 given the cross term c1(sub).c1(quot).
SheafChern whitney_c(const SheafChern& sub, const SheafChern& quot,
                     const Rational& c1_sub_dot_c1_quot);

/// deg Z0 solved from c2(N_X) = d^2 against the Koszul sequence:
/// d^2 - (K + (5-m)H + Z1).(mH - Z1).  A negative value signals numeric
/// inconsistency to the caller.
long long ndp_deg_z(const SurfaceInvariants& inv, const KoszulDatum& kd);

/// Chern data of N*_X(kH): rank 2, c1 = (2k-5)H - K,
/// c2 = d^2 + (-K-5H).kH + k^2 d.
SheafChern conormal_twist_chern(const SurfaceInvariants& inv, long long k);

/// The graded pieces of the Bogomolov filtration in the (H, B1[, B2])
/// basis; their c1's always sum to -H (checked).
std::vector<FiltrationClass> filtration_classes(const FiltrationData& fd,
                                                long long d);

/// Branch-specific lower bound for c2(T_xi) = c2 - K^2 - H.K:
/// (1/12)(4d - B1^2), (1/3)(d - B1^2) or (1/3)(d - B1^2 - B2^2 - B1.B2).
Rational filtration_c2_lower_bound(const FiltrationData& fd, long long d);

/// True iff the two Albanese-dimension-2 constraints for m = 4 conflict:
/// deg Z0 <= 4d against deg Z0 >= 6d - 1.
bool m4_albanese2_infeasible(long long d);

}  // namespace p4geo
