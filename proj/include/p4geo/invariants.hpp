#pragma once

#include "p4geo/rational.hpp"

#include <optional>

namespace p4geo {

/// Numerical invariants of a smooth surface in P^4: degree d = H^2,
/// H.K_X, K_X^2, chi(O_X) and (optionally) the irregularity q.
/// c_2 is never stored; it is always derived through Noether's formula.
struct SurfaceInvariants {
  long long d = 0;
  long long hk = 0;
  long long k2 = 0;
  long long chi = 0;
  std::optional<long long> q;
};

/// Coefficient triple (d, H.K, chi) of the Hilbert polynomial
/// P(t) = (d/2) t^2 - (H.K/2) t + chi.
struct HilbertTriple {
  long long d = 0;
  long long hk = 0;
  long long chi = 0;

  friend bool operator==(const HilbertTriple&, const HilbertTriple&) = default;
};

/// c_2 = 12 chi - K^2 (Noether).
long long noether_c2(const SurfaceInvariants& inv);

/// 2g(H) - 2 = H^2 + H.K.
long long sectional_genus_two_g_minus_2(const SurfaceInvariants& inv);

/// d^2 - 5d - 10(g-1) + (c_2 - K^2); zero iff the double point formula holds.
long long dpf_residual(const SurfaceInvariants& inv);

/// Slope K^2 / chi.  Requires chi > 0.
Rational slope(const SurfaceInvariants& inv);

/// Invariants of the smooth complete intersection of a quartic and a
/// degree-a hypersurface in P^4.  chi comes from the Koszul resolution.
SurfaceInvariants ci_invariants(long long a);

}  // namespace p4geo
