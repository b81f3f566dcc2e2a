#include "p4geo/lattice.hpp"

#include <stdexcept>

namespace p4geo {

namespace {

void require_same_lattice(const DivisorClass& a, const DivisorClass& b) {
  if (!a.lattice || a.lattice != b.lattice)
    throw std::invalid_argument("divisor classes live in different lattices");
}

void require_coords(const DivisorClass& d) {
  if (!d.lattice || d.coords.size() != d.lattice->rank())
    throw std::invalid_argument("coordinate vector length != lattice rank");
}

}  // namespace

LatticePtr make_lattice(std::vector<std::string> labels,
                        std::vector<std::vector<long long>> gram,
                        std::vector<long long> canonical, long long chi_O) {
  auto n = labels.size();
  if (gram.size() != n || canonical.size() != n)
    throw std::invalid_argument("lattice: inconsistent dimensions");
  for (std::size_t i = 0; i < n; ++i) {
    if (gram[i].size() != n) throw std::invalid_argument("lattice: gram not square");
    for (std::size_t j = 0; j < n; ++j)
      if (gram[i][j] != gram[j][i])
        throw std::invalid_argument("lattice: gram not symmetric");
  }
  auto lat = std::make_shared<Lattice>();
  lat->basis_labels = std::move(labels);
  lat->gram = std::move(gram);
  lat->canonical = std::move(canonical);
  lat->chi_O = chi_O;
  return lat;
}

LatticePtr polarization_lattice(long long d, long long canonical_multiple,
                                long long chi_O) {
  return make_lattice({"H"}, {{d}}, {canonical_multiple}, chi_O);
}

DivisorClass divisor(LatticePtr lat, std::vector<Rational> coords) {
  DivisorClass d{std::move(lat), std::move(coords)};
  require_coords(d);
  return d;
}

DivisorClass divisor(LatticePtr lat, std::vector<long long> coords) {
  std::vector<Rational> c(coords.begin(), coords.end());
  return divisor(std::move(lat), std::move(c));
}

DivisorClass canonical_class(LatticePtr lat) {
  std::vector<long long> c(lat->canonical.begin(), lat->canonical.end());
  return divisor(std::move(lat), std::move(c));
}

DivisorClass zero_class(LatticePtr lat) {
  std::vector<Rational> c(lat->rank());
  return divisor(std::move(lat), std::move(c));
}

DivisorClass add(const DivisorClass& a, const DivisorClass& b) {
  require_same_lattice(a, b);
  DivisorClass r = a;
  for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] += b.coords[i];
  return r;
}

DivisorClass sub(const DivisorClass& a, const DivisorClass& b) {
  require_same_lattice(a, b);
  DivisorClass r = a;
  for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] -= b.coords[i];
  return r;
}

DivisorClass scale(const Rational& c, const DivisorClass& a) {
  DivisorClass r = a;
  for (auto& x : r.coords) x *= c;
  return r;
}

Rational intersect(const DivisorClass& d1, const DivisorClass& d2) {
  require_same_lattice(d1, d2);
  require_coords(d1);
  require_coords(d2);
  const auto& g = d1.lattice->gram;
  Rational acc;
  for (std::size_t i = 0; i < d1.coords.size(); ++i) {
    if (d1.coords[i].is_zero()) continue;
    Rational row;
    for (std::size_t j = 0; j < d2.coords.size(); ++j)
      row += Rational(g[i][j]) * d2.coords[j];
    acc += d1.coords[i] * row;
  }
  return acc;
}

bool hodge_index_ok(const DivisorClass& H, const DivisorClass& D) {
  Rational h2 = intersect(H, H);
  if (!(h2 > Rational(0)))
    throw std::domain_error("hodge_index_ok: H^2 must be positive");
  Rational hd = intersect(H, D);
  return hd * hd >= h2 * intersect(D, D);
}

Rational rr_surface_chi(const DivisorClass& D) {
  auto K = canonical_class(D.lattice);
  return Rational(D.lattice->chi_O) + intersect(D, sub(D, K)) / Rational(2);
}

Rational adjunction_two_g_minus_2(const DivisorClass& C) {
  auto K = canonical_class(C.lattice);
  return intersect(C, add(C, K));
}

bool lattice_signature_ok(const Lattice& lat) {
  auto n = lat.rank();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (lat.gram[i][j] != lat.gram[j][i]) return false;

  // Lagrange diagonalization of the form over Q; counts pivot signs.
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = Rational(lat.gram[i][j]);

  int pos = 0, neg = 0;
  for (std::size_t k = 0; k < n; ++k) {
    if (a[k][k].is_zero()) {
      std::size_t p = k;
      while (p < n && a[p][p].is_zero()) ++p;
      if (p < n) {
        // symmetric swap of basis vectors k and p
        for (std::size_t j = 0; j < n; ++j) std::swap(a[k][j], a[p][j]);
        for (std::size_t i = 0; i < n; ++i) std::swap(a[i][k], a[i][p]);
      } else {
        std::size_t q = k + 1;
        while (q < n && a[k][q].is_zero()) ++q;
        if (q == n) continue;  // zero row: degenerate direction
        // e_k <- e_k + e_q makes the diagonal entry 2*a[k][q] != 0
        for (std::size_t j = 0; j < n; ++j) a[k][j] += a[q][j];
        for (std::size_t i = 0; i < n; ++i) a[i][k] += a[i][q];
      }
    }
    if (a[k][k].is_zero()) continue;
    if (a[k][k].sign() > 0)
      ++pos;
    else
      ++neg;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a[i][k].is_zero()) continue;
      Rational f = a[i][k] / a[k][k];
      for (std::size_t j = 0; j < n; ++j) a[i][j] -= f * a[k][j];
      for (std::size_t j = 0; j < n; ++j) a[j][i] = a[i][j];
    }
  }
  return pos == 1 && neg == static_cast<int>(n) - 1;
}

}  // namespace p4geo
