#include "p4geo/enumeration.hpp"

#include "p4geo/bounds.hpp"
#include "p4geo/curves.hpp"
#include "p4geo/parallel.hpp"

#include <algorithm>
#include <stdexcept>

namespace p4geo {

std::vector<HilbertTriple> enumerate_families(const FamilyQuery& q) {
  if (q.m != 4 && q.m != 5)
    throw std::invalid_argument("enumerate_families: only m = 4 or 5");
  if (q.m == 4 && !(q.alpha < Rational(6)))
    throw std::domain_error("enumerate_families: m=4 needs alpha < 6");
  if (q.m == 5 && q.alpha == Rational(6))
    throw std::domain_error("enumerate_families: m=5 excludes alpha = 6");

  const long long d_max = d_alpha(q.m, q.alpha);
  std::vector<std::vector<HilbertTriple>> slots(worker_count());
  parallel_chunks(5, d_max + 1, [&](long long lo, long long hi, unsigned slot) {
    auto& out = slots[slot];
    for (long long d = lo; d < hi; ++d) {
      const Rational chi_max = chi_upper_bound(q.m, q.alpha, d);
      const Rational ep = ep_genus_bound(q.m, d);
      const bool floor_active = chi_lower_bound_applies(q.m, d);
      const Rational pm = floor_active ? pm_polynomial(q.m, d) : Rational(0);
      for (long long chi = 1; Rational(chi) <= chi_max; ++chi) {
        Rational k2r = q.alpha * Rational(chi);
        if (!k2r.is_integer()) continue;
        long long k2 = static_cast<long long>(k2r.num());
        // hk forced by the double point formula at slope alpha:
        // 5 hk = d^2 - 10d + 2(6-alpha) chi.
        long long num = d * d - 10 * d + 12 * chi - 2 * k2;
        if (num % 5 != 0) continue;
        long long hk = num / 5;
        if ((d + hk) % 2 != 0) continue;  // integral sectional genus
        if (Rational(d + hk) > ep) continue;
        if (floor_active && Rational(chi) < pm) continue;
        if (q.use_hodge && hk * hk < d * k2) continue;
        if (q.require_hk_positive && hk < 1) continue;
        out.push_back({d, hk, chi});
      }
    }
  });
  std::vector<HilbertTriple> out;
  for (auto& s : slots) out.insert(out.end(), s.begin(), s.end());
  std::sort(out.begin(), out.end(), [](const HilbertTriple& a, const HilbertTriple& b) {
    return a.d != b.d ? a.d < b.d : a.chi < b.chi;
  });
  return out;
}

std::vector<std::pair<long long, long long>> enumerate_irrational_scrolls(
    long long d_max) {
  if (d_max < 3)
    throw std::invalid_argument("enumerate_irrational_scrolls: d_max >= 3");
  std::vector<std::pair<long long, long long>> out;
  for (long long d = 3; d <= d_max; ++d) {
    long long lhs = d * d - 5 * d;  // = 6(q-1)
    if (lhs % 6 != 0) continue;
    long long q = lhs / 6 + 1;
    if (q < 1) continue;
    if (d % 2 == 0) continue;  // H = Gamma + aF forces d = 2a+1
    long long a = (d - 1) / 2;
    if (2 * (q - 1) != (a + 1) * (a - 2)) continue;  // plane-section genus
    if (3 * (a + 1) * (a - 2) != (2 * a + 1) * (2 * a - 4)) continue;
    out.emplace_back(d, q);
  }
  return out;
}

std::vector<ConicBundleSolution> enumerate_quartic_conic_bundles() {
  std::vector<ConicBundleSolution> out;
  // deg Z = d + 6d' <= 45 with d >= 5 forces d' <= 6.
  for (long long dp = 3; dp <= 6; ++dp) {
    long long q_max = castelnuovo_max_genus(dp, 3);
    for (long long q = 1; q <= q_max; ++q) {
      for (long long d = 5; d <= 45; ++d) {
        if (d * d - 9 * d + 2 * dp != 16 * (q - 1)) continue;
        long long delta = 3 * d - 4 * dp;
        if (delta < 0) continue;
        long long deg_z = d + 6 * dp;
        if (deg_z > varchenko_bound()) continue;
        ConicBundleSolution s;
        s.d = d;
        s.q = q;
        s.delta = delta;
        s.d_prime = dp;
        s.k2 = -8 * (q - 1) - delta;
        s.hk = 4 * (q - 1) - (d - delta) / 2;
        s.c2 = -4 * (q - 1) + delta;
        s.deg_z = deg_z;
        out.push_back(s);
      }
    }
  }
  std::sort(out.begin(), out.end(),
            [](const ConicBundleSolution& a, const ConicBundleSolution& b) {
              return a.d != b.d ? a.d < b.d : a.d_prime < b.d_prime;
            });
  return out;
}

std::vector<std::pair<long long, DegZBranch>> admissible_quartic_deg_z(long long d) {
  if (d < 5 || d > 11)
    throw std::invalid_argument("admissible_quartic_deg_z: d in 5..11");
  std::vector<std::pair<long long, DegZBranch>> out;
  long long r = (d * d) % 8;
  for (long long z = r == 0 ? 8 : r; z <= varchenko_bound(); z += 8) {
    if (z >= 4 * d)
      out.emplace_back(z, DegZBranch::Stable);
    else if (z >= 3 * d)
      out.emplace_back(z, DegZBranch::Unstable);
  }
  return out;
}

std::vector<SurfaceInvariants> m5_trivial_class_search() {
  std::vector<SurfaceInvariants> out;
  for (long long chi = 1; chi <= 2; ++chi) {
    for (long long d = 5; d <= 16; ++d) {
      long long k2_hi = std::min({d - 1, 14LL, 9 * chi});
      for (long long k2 = 6 * chi + 1; k2 <= k2_hi; ++k2) {
        // d^2 - 10d - 5 hk = 2 k2 - 12 chi
        long long num = d * d - 10 * d - 2 * k2 + 12 * chi;
        if (num % 5 != 0) continue;
        long long hk = num / 5;
        if (hk < 1 || hk >= d) continue;
        if (hk * hk < d * k2) continue;  // Hodge index
        out.push_back({d, hk, k2, chi, std::nullopt});
      }
    }
  }
  return out;
}

std::pair<long long, long long> quadric_scroll_contradiction(long long d) {
  if (d < 4 || d % 4 != 0)
    throw std::invalid_argument("quadric_scroll_contradiction: 4 | d");
  // 2(g-1) = d(d-5)/2 and deg Z = d^2 - 4d - 4(g-1).
  long long two_g_minus_2 = d * (d - 5) / 2;
  long long deg_z = d * d - 4 * d - 2 * two_g_minus_2;
  return {deg_z, d};
}

}  // namespace p4geo
