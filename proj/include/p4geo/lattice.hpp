#pragma once

#include "p4geo/rational.hpp"

#include <memory>
#include <string>
#include <vector>

namespace p4geo {

/// Minimal Neron-Severi model: an integral symmetric intersection form
/// together with the class of the canonical divisor and chi(O_X).
/// Treated as immutable once built; share freely across threads.
struct Lattice {
  std::vector<std::string> basis_labels;
  std::vector<std::vector<long long>> gram;  // symmetric
  std::vector<long long> canonical;          // coordinates of K
  long long chi_O = 0;

  std::size_t rank() const { return basis_labels.size(); }
};

using LatticePtr = std::shared_ptr<Lattice>;

/// A divisor class is a coordinate vector in a fixed lattice.
struct DivisorClass {
  LatticePtr lattice;
  std::vector<Rational> coords;
};

LatticePtr make_lattice(std::vector<std::string> labels,
                        std::vector<std::vector<long long>> gram,
                        std::vector<long long> canonical, long long chi_O);

/// Rank-1 lattice generated by the polarization H with H^2 = d.
/// K = canonical_multiple * H.
LatticePtr polarization_lattice(long long d, long long canonical_multiple = 0,
                                long long chi_O = 1);

DivisorClass divisor(LatticePtr lat, std::vector<Rational> coords);
DivisorClass divisor(LatticePtr lat, std::vector<long long> coords);
DivisorClass canonical_class(LatticePtr lat);
DivisorClass zero_class(LatticePtr lat);

DivisorClass add(const DivisorClass& a, const DivisorClass& b);
DivisorClass sub(const DivisorClass& a, const DivisorClass& b);
DivisorClass scale(const Rational& c, const DivisorClass& a);

/// Evaluates the NS pairing D1^T * gram * D2.  Both classes must live in
/// the same lattice.
Rational intersect(const DivisorClass& d1, const DivisorClass& d2);

/// Hodge index check: true iff (H.D)^2 >= H^2 * D^2.  Requires H^2 > 0.
bool hodge_index_ok(const DivisorClass& H, const DivisorClass& D);

/// chi(O_X(D)) = chi(O_X) + D.(D - K)/2.
Rational rr_surface_chi(const DivisorClass& D);

/// 2g(C) - 2 = C.(C + K).
Rational adjunction_two_g_minus_2(const DivisorClass& C);

/// True iff gram is symmetric and its signature is (1, rank-1).
bool lattice_signature_ok(const Lattice& lat);

}  // namespace p4geo
