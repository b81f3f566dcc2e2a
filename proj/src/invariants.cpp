#include "p4geo/invariants.hpp"

#include <stdexcept>

namespace p4geo {

namespace {

// t(t-1)(t-2)(t-3)/24, the degree-4 binomial coefficient as a polynomial.
long long binom4(long long t) { return t * (t - 1) * (t - 2) * (t - 3) / 24; }

}  // namespace

long long noether_c2(const SurfaceInvariants& inv) { return 12 * inv.chi - inv.k2; }

long long sectional_genus_two_g_minus_2(const SurfaceInvariants& inv) {
  return inv.d + inv.hk;
}

long long dpf_residual(const SurfaceInvariants& inv) {
  // 10(g-1) = 5(2g-2) = 5(d + hk)
  return inv.d * inv.d - 5 * inv.d - 5 * (inv.d + inv.hk) +
         (noether_c2(inv) - inv.k2);
}

Rational slope(const SurfaceInvariants& inv) {
  if (inv.chi <= 0) throw std::domain_error("slope: requires chi > 0");
  return Rational(Int(inv.k2), Int(inv.chi));
}

SurfaceInvariants ci_invariants(long long a) {
  if (a < 2) throw std::invalid_argument("ci_invariants: requires a >= 2");
  SurfaceInvariants inv;
  inv.d = 4 * a;
  inv.hk = 4 * a * (a - 1);           // K = (a-1)H
  inv.k2 = 4 * a * (a - 1) * (a - 1);
  // Koszul resolution 0 -> O(-4-a) -> O(-4)+O(-a) -> O -> O_X -> 0:
  // chi = 1 - chi(O(-4)) - chi(O(-a)) + chi(O(-4-a)) with chi(O(t-4)) = binom4(t).
  inv.chi = 1 - binom4(4 - 4) - binom4(4 - a) + binom4(-a);
  inv.q = 0;
  if (dpf_residual(inv) != 0)
    throw std::logic_error("ci_invariants: double point formula violated");
  return inv;
}

}  // namespace p4geo
