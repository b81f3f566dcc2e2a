#include "p4geo/bounds.hpp"

#include <stdexcept>

namespace p4geo {

namespace {

void require_m(int m, int lo, int hi, const char* who) {
  if (m < lo || m > hi)
    throw std::invalid_argument(std::string(who) + ": m out of range");
}

// C(x,3) = x(x-1)(x-2)/6 extended to rational x.
Rational binom3(const Rational& x) {
  return x * (x - Rational(1)) * (x - Rational(2)) / Rational(6);
}

long long binom4_int(long long t) { return t * (t - 1) * (t - 2) * (t - 3) / 24; }

// The inequality g(d) <= 0 whose largest integer solution is d0(alpha).
// g has positive leading coefficient, so the admissible set is bounded.
Rational d_alpha_gap(int m, const Rational& alpha, long long d) {
  Rational dd(d);
  if (m == 4) {
    // (6-a)(d^3/12 - 19 d^2/2 + 80 d/3 + 10) - (d^2 + 20 d)
    Rational cubic = dd * dd * dd / Rational(12) -
                     Rational(19) * dd * dd / Rational(2) +
                     Rational(80) * dd / Rational(3) + Rational(10);
    return (Rational(6) - alpha) * cubic - (dd * dd + Rational(20) * dd);
  }
  Rational quad = dd * dd - Rational(40) * dd + Rational(95);
  if (alpha < Rational(6))
    return (Rational(6) - alpha) * quad / Rational(25) - Rational(5) * dd;
  return (alpha - Rational(6)) * quad / Rational(25) - Rational(1) / Rational(3);
}

}  // namespace

Rational pm_polynomial(int m, long long d) {
  require_m(m, 2, 5, "pm_polynomial");
  Rational dd(d);
  if (m == 5) return dd * (dd * dd - Rational(40) * dd + Rational(95)) / Rational(25);
  Rational x = dd / Rational(m) + Rational(m - 3) / Rational(2);
  return Rational(m) * binom3(x) -
         Rational((m - 1) * (m - 1)) / Rational(2 * m) * dd * (dd - Rational(3)) -
         Rational(binom4_int(m - 1)) + Rational(1);
}

bool chi_lower_bound_applies(int m, long long d) {
  return d >= (m - 1) * (m - 1) + 2;
}

Rational ep_genus_bound(int m, long long d) {
  Rational dd(d);
  if (m == 4) return dd * dd / Rational(4);
  if (m == 5) return (dd * dd + Rational(5) * dd) / Rational(5);
  throw std::invalid_argument("ep_genus_bound: only m = 4 or 5");
}

Rational chi_upper_bound(int m, const Rational& alpha, long long d) {
  Rational dd(d);
  if (m == 4) {
    if (!(alpha < Rational(6)))
      throw std::domain_error("chi_upper_bound: m=4 needs alpha < 6");
    return (dd * dd + Rational(20) * dd) / (Rational(8) * (Rational(6) - alpha));
  }
  if (m == 5) {
    if (alpha == Rational(6))
      throw std::domain_error("chi_upper_bound: m=5 excludes alpha = 6");
    if (alpha < Rational(6)) return Rational(5) * dd / (Rational(6) - alpha);
    return dd / (Rational(3) * (alpha - Rational(6)));
  }
  throw std::invalid_argument("chi_upper_bound: only m = 4 or 5");
}

long long d_alpha(int m, const Rational& alpha) {
  long long floor_base;
  if (m == 4) {
    if (!(alpha < Rational(6)))
      throw std::domain_error("d_alpha: m=4 needs alpha < 6");
    floor_base = 10;
  } else if (m == 5) {
    if (alpha == Rational(6))
      throw std::domain_error("d_alpha: m=5 excludes alpha = 6");
    floor_base = 17;
  } else {
    throw std::invalid_argument("d_alpha: only m = 4 or 5");
  }

  // Upward scan for the largest d with g(d) <= 0.  g has positive leading
  // coefficient, so once g > 0 with positive and growing forward
  // difference no further solution exists.
  long long d0 = 0;
  Rational g = d_alpha_gap(m, alpha, 1);
  Rational g1 = d_alpha_gap(m, alpha, 2);
  Rational g2 = d_alpha_gap(m, alpha, 3);
  for (long long d = 1;; ++d) {
    if (g.sign() <= 0) d0 = d;
    Rational diff = g1 - g;
    if (g.sign() > 0 && diff.sign() > 0 && (g2 - g1 - diff).sign() > 0) break;
    g = g1;
    g1 = g2;
    g2 = d_alpha_gap(m, alpha, d + 3);
  }
  return d0 > floor_base ? d0 : floor_base;
}

Rational bogomolov_discriminant(const SheafChern& s) {
  return Rational(2 * s.rank) * s.c2 - Rational(s.rank - 1) * s.c1_sq;
}

SheafChern txi_chern(int m, const SurfaceInvariants& inv) {
  require_m(m, 2, 5, "txi_chern");
  long long t = 5 - m;
  SheafChern s;
  s.rank = 3;
  s.c1_sq = Rational(t * t * inv.d);
  s.c1_dot_H = Rational(-t * inv.d);
  s.c1_dot_K = Rational(-t * inv.hk);
  s.c2 = Rational(noether_c2(inv) - inv.k2 - t * inv.hk);
  return s;
}

Rational general_type_c2_minus_k2_lower_bound(int m, const SurfaceInvariants& inv,
                                              StabilityBranch branch) {
  require_m(m, 2, 4, "general_type_c2_minus_k2_lower_bound");
  Rational hk(inv.hk), d(inv.d);
  bool semistable = branch == StabilityBranch::Semistable;
  switch (m) {
    case 2:
      return semistable ? Rational(3) * hk + Rational(3) * d
                        : Rational(3) * hk / Rational(2) + Rational(9) * d / Rational(4);
    case 3: {
      if (semistable) return Rational(2) * hk + Rational(4) * d / Rational(3);
      Rational a = hk + d;
      Rational b = Rational(3) * hk / Rational(2) + d / Rational(3);
      return a < b ? a : b;
    }
    default: {  // m == 4
      if (semistable) return hk + d / Rational(3);
      Rational a = Rational(3) * hk / Rational(4);
      Rational b = hk / Rational(2) + d / Rational(4);
      return a < b ? a : b;
    }
  }
}

bool bmy_ok(const SurfaceInvariants& inv) { return inv.k2 <= 9 * inv.chi; }

Rational miyaoka_c2_min(const Rational& l_sq) { return l_sq / Rational(3); }

int varchenko_bound() { return 45; }

bool thm44_bound_check(const SurfaceInvariants& inv, const Rational& l_sq) {
  Rational gap = Rational(inv.k2 - noether_c2(inv));
  if (gap.sign() <= 0) return true;
  return gap <= Rational(2) * l_sq / Rational(3) && l_sq <= Rational(inv.d);
}

}  // namespace p4geo
