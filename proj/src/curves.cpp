#include "p4geo/curves.hpp"

#include <stdexcept>

namespace p4geo {

long long rr_curve_chi(long long deg, long long genus) {
  if (genus < 0) throw std::invalid_argument("rr_curve_chi: genus >= 0");
  return deg + 1 - genus;
}

Rational clifford_max_h0(long long deg) {
  if (deg < 0) throw std::invalid_argument("clifford_max_h0: deg >= 0");
  return Rational(deg) / Rational(2) + Rational(1);
}

long long castelnuovo_max_genus(long long d, long long N) {
  if (d < 1 || N < 2)
    throw std::invalid_argument("castelnuovo_max_genus: d >= 1, N >= 2");
  long long m = (d - 1) / (N - 1);
  long long eps = d - 1 - m * (N - 1);
  return m * (m - 1) * (N - 1) / 2 + m * eps;
}

long long plane_curve_omega_degree(long long d_b) {
  if (d_b < 1) throw std::invalid_argument("plane_curve_omega_degree: d >= 1");
  return d_b * (d_b - 3);
}

}  // namespace p4geo
