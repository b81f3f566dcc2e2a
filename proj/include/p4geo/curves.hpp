#pragma once

#include "p4geo/rational.hpp"

namespace p4geo {

/// Riemann-Roch on a curve: chi = deg + 1 - g.
long long rr_curve_chi(long long deg, long long genus);

/// Clifford ceiling for h^0 of a special divisor: deg/2 + 1.
Rational clifford_max_h0(long long deg);

/// Classical Castelnuovo genus bound for a nondegenerate curve of degree d
/// in P^N: with m = floor((d-1)/(N-1)) and eps = d-1 - m(N-1),
/// pi = m(m-1)(N-1)/2 + m*eps.
long long castelnuovo_max_genus(long long d, long long N);

/// Degree of the dualizing sheaf of a plane divisor: d_B (d_B - 3).
long long plane_curve_omega_degree(long long d_b);

}  // namespace p4geo
