#include "p4geo/sequences.hpp"

#include <stdexcept>

namespace p4geo {

SheafChern whitney_c(const SheafChern& sub, const SheafChern& quot,
                     const Rational& c1_sub_dot_c1_quot) {
  SheafChern s;
  s.rank = sub.rank + quot.rank;
  s.c1_sq = sub.c1_sq + Rational(2) * c1_sub_dot_c1_quot + quot.c1_sq;
  s.c1_dot_H = sub.c1_dot_H + quot.c1_dot_H;
  s.c1_dot_K = sub.c1_dot_K + quot.c1_dot_K;
  s.c2 = sub.c2 + quot.c2 + c1_sub_dot_c1_quot;
  return s;
}

long long ndp_deg_z(const SurfaceInvariants& inv, const KoszulDatum& kd) {
  if (kd.m < 2 || kd.m > 5) throw std::invalid_argument("ndp_deg_z: m in 2..5");
  long long m = kd.m;
  long long t = 5 - m;
  // (K + tH + Z1).(mH - Z1)
  long long cross = m * inv.hk + t * m * inv.d + (m - t) * kd.z1_dot_H -
                    kd.z1_dot_K - kd.z1_sq;
  return inv.d * inv.d - cross;
}

SheafChern conormal_twist_chern(const SurfaceInvariants& inv, long long k) {
  SheafChern s;
  s.rank = 2;
  // c1 = (2k-5)H - K
  long long a = 2 * k - 5;
  s.c1_sq = Rational(a * a * inv.d - 2 * a * inv.hk + inv.k2);
  s.c1_dot_H = Rational(a * inv.d - inv.hk);
  s.c1_dot_K = Rational(a * inv.hk - inv.k2);
  // c2(N*(kH)) = c2(N*) + c1(N*).kH + k^2 H^2, with c1(N*) = -K-5H,
  // c2(N*) = c2(N) = d^2.
  s.c2 = Rational(inv.d * inv.d + k * (-inv.hk - 5 * inv.d) + k * k * inv.d);
  return s;
}

namespace {

void require_positive_cone(const FiltrationData& fd) {
  if (!(fd.b1_dot_H > Rational(0)))
    throw std::invalid_argument("filtration data: B1.H must be positive");
}

}  // namespace

std::vector<FiltrationClass> filtration_classes(const FiltrationData& fd,
                                                long long d) {
  require_positive_cone(fd);
  Rational third(Int(1), Int(3));
  std::vector<std::vector<Rational>> rows;
  switch (fd.branch) {
    case StabilityBranch::Semistable:
      throw std::domain_error("filtration_classes: semistable has no filtration");
    case StabilityBranch::UnstableRank2Sub:
      rows = {{-Rational(2) * third, third}, {-third, -third}};
      break;
    case StabilityBranch::UnstableRank1Sub:
      rows = {{-third, Rational(2) * third}, {-Rational(2) * third, -Rational(2) * third}};
      break;
    case StabilityBranch::UnstableFullLadder:
      rows = {{-third, Rational(2) * third, third},
              {-third, -third, third},
              {-third, -third, -Rational(2) * third}};
      break;
  }

  // The graded c1's must sum to c1(T_xi) = -H.
  std::vector<Rational> sum(rows[0].size());
  for (const auto& r : rows)
    for (std::size_t j = 0; j < r.size(); ++j) sum[j] += r[j];
  if (sum[0] != Rational(-1)) throw std::logic_error("filtration rows: H sum != -1");
  for (std::size_t j = 1; j < sum.size(); ++j)
    if (!sum[j].is_zero()) throw std::logic_error("filtration rows: B sum != 0");

  std::vector<FiltrationClass> out;
  for (const auto& r : rows) {
    FiltrationClass fc;
    fc.coeffs = r;
    fc.dot_H = r[0] * Rational(d) + r[1] * fd.b1_dot_H;
    fc.sq = r[0] * r[0] * Rational(d) + r[1] * r[1] * fd.b1_sq +
            Rational(2) * r[0] * r[1] * fd.b1_dot_H;
    if (r.size() > 2) {
      fc.dot_H += r[2] * fd.b2_dot_H;
      fc.sq += r[2] * r[2] * fd.b2_sq + Rational(2) * r[0] * r[2] * fd.b2_dot_H +
               Rational(2) * r[1] * r[2] * fd.b1_dot_b2;
    }
    out.push_back(std::move(fc));
  }
  return out;
}

Rational filtration_c2_lower_bound(const FiltrationData& fd, long long d) {
  require_positive_cone(fd);
  Rational dd(d);
  switch (fd.branch) {
    case StabilityBranch::Semistable:
      throw std::domain_error("filtration_c2_lower_bound: semistable branch");
    case StabilityBranch::UnstableRank2Sub:
      return (Rational(4) * dd - fd.b1_sq) / Rational(12);
    case StabilityBranch::UnstableRank1Sub:
      return (dd - fd.b1_sq) / Rational(3);
    case StabilityBranch::UnstableFullLadder:
      return (dd - fd.b1_sq - fd.b2_sq - fd.b1_dot_b2) / Rational(3);
  }
  throw std::logic_error("unreachable");
}

bool m4_albanese2_infeasible(long long d) {
  if (d < 1) throw std::invalid_argument("m4_albanese2_infeasible: d >= 1");
  return 6 * d - 1 > 4 * d;
}

}  // namespace p4geo
