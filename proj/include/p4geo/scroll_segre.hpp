#pragma once

#include "p4geo/invariants.hpp"
#include "p4geo/lattice.hpp"

#include <array>
#include <cstddef>
#include <string>
#include <vector>

namespace p4geo {

/// The elliptic quintic scroll: NS lattice with basis {Gamma, f},
/// gram [[1,1],[1,0]], K = -2 Gamma + f, chi(O) = 0, H = Gamma + 2f,
/// plus the stored cohomological constants that lattice data alone
/// cannot produce.
struct ScrollModel {
  LatticePtr lattice;
  DivisorClass H;
  long long h0_conormal3H = 5;
  long long deg_Zs = 10;
  long long dim_IX3 = 5;
};

const ScrollModel& scroll_model();

/// Surface invariants (d, H.K, K^2, chi, q) of the scroll: (5,-5,0,0,1).
SurfaceInvariants scroll_invariants();

/// Named divisor classes on the scroll: "H", "K", "Gamma", "f", "H-K",
/// "H+5f", "2H".
DivisorClass scroll_named_class(const std::string& name);

/// The cross-checked numerology of the scroll in P^4.
struct ScrollReport {
  long long conormal3h_c1_sq = 0;   // (H-K)^2
  long long conormal3h_c2 = 0;      // = deg Z_s
  long long h0_conormal3h = 0;      // stored constant
  long long dim_ix3 = 0;            // stored constant
  long long genus_H = 0;
  long long genus_Gamma = 0;
  long long genus_HminusK = 0;
  long long chi_jz_2h = 0;          // chi(J_{Z_s}(2H)) = chi(O(2H)) - deg Z_s
  long long ndp_m3_deg_z = 0;
  long long k2 = 0;
  long long dpf = 0;                // residual of (5,-5,0,0)
};

ScrollReport scroll_sanity_report();

/// Degrees of the auxiliary varieties of the appendix construction.
struct AppendixDegrees {
  long long deg_y0 = 0;       // secant quintic
  long long deg_x_prime = 0;  // singular scroll (H+5f)^2
  long long deg_t_prime = 0;  // trisecant quintic, via deg F = 5
  long long deg_s_e = 0;      // rational cubic scroll
  long long delta_e_ruling_coeff = 0;  // b in Delta_E = 2L + b f
  std::string delta_e_class;
};

AppendixDegrees appendix_degrees();

/// A point of the configuration: an unordered pair of labels (stored
/// sorted).
using ConfigPoint = std::array<std::string, 2>;

struct ConfigPlane {
  char kind = 'A';                 // 'A' (indexed by a label) or 'B' (by a pair)
  std::vector<std::string> index;  // one label for A, two for B
  std::vector<ConfigPoint> members;
};

/// The (10_4, 15_6) configuration of the nodes of a Segre cubic through
/// the scroll, built combinatorially over a 5-element label set.
struct IncidenceStructure {
  std::vector<std::string> labels;
  std::vector<ConfigPoint> points;
  std::vector<ConfigPlane> planes;
};

IncidenceStructure segre_configuration(const std::vector<std::string>& labels);

enum class MeetKind { Point, Line };

struct PlaneMeet {
  std::vector<ConfigPoint> shared;
  MeetKind kind = MeetKind::Point;
};

/// Intersection of two distinct planes: the shared configuration points,
/// classified as a Point (one shared point) or Line (two).
PlaneMeet plane_meet(const IncidenceStructure& cfg, std::size_t p, std::size_t q);

}  // namespace p4geo
