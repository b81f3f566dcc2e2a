#include "p4geo/scroll_segre.hpp"

#include "p4geo/sequences.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace p4geo {

const ScrollModel& scroll_model() {
  static const ScrollModel model = [] {
    ScrollModel m;
    m.lattice = make_lattice({"Gamma", "f"}, {{1, 1}, {1, 0}}, {-2, 1}, 0);
    m.H = divisor(m.lattice, std::vector<long long>{1, 2});
    return m;
  }();
  return model;
}

SurfaceInvariants scroll_invariants() { return {5, -5, 0, 0, 1}; }

DivisorClass scroll_named_class(const std::string& name) {
  const auto& lat = scroll_model().lattice;
  auto mk = [&](long long a, long long b) {
    return divisor(lat, std::vector<long long>{a, b});
  };
  if (name == "H") return mk(1, 2);
  if (name == "K") return mk(-2, 1);
  if (name == "Gamma") return mk(1, 0);
  if (name == "f") return mk(0, 1);
  if (name == "H-K") return mk(3, 1);
  if (name == "H+5f") return mk(1, 7);
  if (name == "2H") return mk(2, 4);
  throw std::invalid_argument("scroll_named_class: unknown name '" + name + "'");
}

ScrollReport scroll_sanity_report() {
  const auto& model = scroll_model();
  const auto inv = scroll_invariants();
  ScrollReport r;

  auto conormal = conormal_twist_chern(inv, 3);
  r.conormal3h_c1_sq = static_cast<long long>(conormal.c1_sq.num());
  r.conormal3h_c2 = static_cast<long long>(conormal.c2.num());
  r.h0_conormal3h = model.h0_conormal3H;
  r.dim_ix3 = model.dim_IX3;

  auto genus = [&](const std::string& name) {
    Rational two_g_minus_2 = adjunction_two_g_minus_2(scroll_named_class(name));
    return static_cast<long long>(((two_g_minus_2 + Rational(2)) / Rational(2)).num());
  };
  r.genus_H = genus("H");
  r.genus_Gamma = genus("Gamma");
  r.genus_HminusK = genus("H-K");

  Rational chi2h = rr_surface_chi(scroll_named_class("2H"));
  r.chi_jz_2h = static_cast<long long>((chi2h - Rational(model.deg_Zs)).num());

  r.ndp_m3_deg_z = ndp_deg_z(inv, KoszulDatum{3, 0, 0, 0});
  r.k2 = static_cast<long long>(
      intersect(canonical_class(model.lattice), canonical_class(model.lattice)).num());
  r.dpf = dpf_residual(inv);
  return r;
}

AppendixDegrees appendix_degrees() {
  const auto& model = scroll_model();
  const auto inv = scroll_invariants();
  AppendixDegrees a;

  auto h_minus_k = scroll_named_class("H-K");
  auto conormal = conormal_twist_chern(inv, 3);
  a.deg_y0 = static_cast<long long>(
      (intersect(h_minus_k, h_minus_k) - conormal.c2).num());
  auto x_prime_class = scroll_named_class("H+5f");
  a.deg_x_prime = static_cast<long long>(intersect(x_prime_class, x_prime_class).num());
  a.deg_t_prime = static_cast<long long>(intersect(model.H, model.H).num());
  a.deg_s_e = 3;
  // Delta_E = 2L + b f on the cubic scroll S'_e: 5 = deg = 2 + b.
  a.delta_e_ruling_coeff = 5 - 2;
  a.delta_e_class = "2L+" + std::to_string(a.delta_e_ruling_coeff) + "f";
  return a;
}

namespace {

ConfigPoint make_point(const std::string& a, const std::string& b) {
  return a < b ? ConfigPoint{a, b} : ConfigPoint{b, a};
}

bool contains(const std::vector<ConfigPoint>& pts, const ConfigPoint& p) {
  return std::find(pts.begin(), pts.end(), p) != pts.end();
}

}  // namespace

IncidenceStructure segre_configuration(const std::vector<std::string>& labels) {
  if (labels.size() != 5)
    throw std::invalid_argument("segre_configuration: exactly 5 labels");
  if (std::set<std::string>(labels.begin(), labels.end()).size() != 5)
    throw std::invalid_argument("segre_configuration: labels must be distinct");

  IncidenceStructure cfg;
  cfg.labels = labels;
  std::sort(cfg.labels.begin(), cfg.labels.end());
  const auto& ls = cfg.labels;

  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = i + 1; j < 5; ++j)
      cfg.points.push_back(make_point(ls[i], ls[j]));

  // Kind A: Pi_e = the four points through e.
  for (const auto& e : ls) {
    ConfigPlane pl;
    pl.kind = 'A';
    pl.index = {e};
    for (const auto& p : cfg.points)
      if (p[0] == e || p[1] == e) pl.members.push_back(p);
    cfg.planes.push_back(std::move(pl));
  }
  // Kind B: Pi_{e.e'} = {e.e'} plus the three points of the complement triple.
  for (std::size_t i = 0; i < 5; ++i) {
    for (std::size_t j = i + 1; j < 5; ++j) {
      ConfigPlane pl;
      pl.kind = 'B';
      pl.index = {ls[i], ls[j]};
      pl.members.push_back(make_point(ls[i], ls[j]));
      for (const auto& p : cfg.points)
        if (p[0] != ls[i] && p[0] != ls[j] && p[1] != ls[i] && p[1] != ls[j])
          pl.members.push_back(p);
      cfg.planes.push_back(std::move(pl));
    }
  }

  // Re-verify the (10_4, 15_6) counts.
  if (cfg.points.size() != 10 || cfg.planes.size() != 15)
    throw std::logic_error("segre_configuration: wrong counts");
  for (const auto& pl : cfg.planes)
    if (pl.members.size() != 4)
      throw std::logic_error("segre_configuration: plane without 4 points");
  for (const auto& p : cfg.points) {
    int deg = 0;
    for (const auto& pl : cfg.planes)
      if (contains(pl.members, p)) ++deg;
    if (deg != 6) throw std::logic_error("segre_configuration: point degree != 6");
  }
  return cfg;
}

PlaneMeet plane_meet(const IncidenceStructure& cfg, std::size_t p, std::size_t q) {
  if (p >= cfg.planes.size() || q >= cfg.planes.size())
    throw std::invalid_argument("plane_meet: plane index out of range");
  if (p == q) throw std::invalid_argument("plane_meet: planes must be distinct");
  PlaneMeet m;
  for (const auto& pt : cfg.planes[p].members)
    if (contains(cfg.planes[q].members, pt)) m.shared.push_back(pt);
  m.kind = m.shared.size() >= 2 ? MeetKind::Line : MeetKind::Point;
  return m;
}

}  // namespace p4geo
