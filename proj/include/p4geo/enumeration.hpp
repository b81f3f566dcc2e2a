#pragma once

#include "p4geo/invariants.hpp"
#include "p4geo/rational.hpp"

#include <utility>
#include <vector>

namespace p4geo {

/// Query for the Hilbert-triple finiteness enumerator: hypersurface degree
/// m (4 or 5), exact slope alpha, optional extra filters.
struct FamilyQuery {
  int m = 4;
  Rational alpha;
  bool use_hodge = false;
  bool require_hk_positive = false;
};

/// The degree-8 conic bundle record of the quartic analysis, together with
/// the derived invariants.
struct ConicBundleSolution {
  long long d = 0;
  long long q = 0;
  long long delta = 0;
  long long d_prime = 0;
  long long k2 = 0;
  long long hk = 0;
  long long c2 = 0;
  long long deg_z = 0;

  friend bool operator==(const ConicBundleSolution&,
                         const ConicBundleSolution&) = default;
};

enum class DegZBranch { Stable, Unstable };

/// All Hilbert triples (d, H.K, chi) admissible for slope alpha on a
/// degree-m hypersurface, d from 5 to d_alpha and chi from 1 to
/// chi_upper_bound, filtered by integrality, the double point formula,
/// sectional-genus parity, the EP genus ceiling and the P_m chi floor.
/// Sorted by (d, chi).
std::vector<HilbertTriple> enumerate_families(const FamilyQuery& q);

/// Scroll classification: (d, q) with d^2 - 5d = 6(q-1), q >= 1, then the
/// section-family consistency chain (d odd, 2(q-1) = (a+1)(a-2) and
/// 3(a+1)(a-2) = (2a+1)(2a-4) for a = (d-1)/2).
std::vector<std::pair<long long, long long>> enumerate_irrational_scrolls(
    long long d_max);

/// Solves the quartic conic-bundle constraint system; the scan is over
/// d' in 3..6, q up to the Castelnuovo bound in P^3, 5 <= d <= 45.
std::vector<ConicBundleSolution> enumerate_quartic_conic_bundles();

/// Admissible deg Z values for an irregular surface of degree d on a nodal
/// quartic: deg Z <= 45, deg Z = d^2 (mod 8), Stable iff deg Z >= 4d,
/// Unstable entries additionally need deg Z >= 3d.
std::vector<std::pair<long long, DegZBranch>> admissible_quartic_deg_z(long long d);

/// Brute force over the general-type branch eliminated by the m = 5
/// trivial-class analysis; the expected (and asserted) result is empty.
std::vector<SurfaceInvariants> m5_trivial_class_search();

/// The H = 2F computation on a singular quadric scroll: returns
/// (deg Z, d); the contradiction is deg Z = d against deg Z < d.
std::pair<long long, long long> quadric_scroll_contradiction(long long d);

}  // namespace p4geo
