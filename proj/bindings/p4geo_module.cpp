#include "p4geo/bounds.hpp"
#include "p4geo/curves.hpp"
#include "p4geo/enumeration.hpp"
#include "p4geo/invariants.hpp"
#include "p4geo/lattice.hpp"
#include "p4geo/scroll_segre.hpp"
#include "p4geo/sequences.hpp"

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace p4geo;

namespace {

py::object int_to_py(const Int& v) {
  std::string s = v.str();
  PyObject* obj = PyLong_FromString(s.c_str(), nullptr, 10);
  if (!obj) throw py::error_already_set();
  return py::reinterpret_steal<py::object>(obj);
}

}  // namespace

PYBIND11_MODULE(p4geo, m) {
  m.doc() = "Exact numerics of smooth surfaces in P^4 on small degree hypersurfaces.";

  py::class_<Rational>(m, "Rational")
      .def(py::init<long long>())
      .def(py::init([](long long n, long long d) {
        return Rational(Int(n), Int(d));
      }))
      .def(py::init(&Rational::parse))
      .def_property_readonly("numerator", [](const Rational& r) { return int_to_py(r.num()); })
      .def_property_readonly("denominator", [](const Rational& r) { return int_to_py(r.den()); })
      .def("is_integer", &Rational::is_integer)
      .def("floor", [](const Rational& r) { return int_to_py(r.floor()); })
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(py::self / py::self)
      .def(-py::self)
      .def(py::self == py::self)
      .def(py::self != py::self)
      .def(py::self < py::self)
      .def(py::self <= py::self)
      .def(py::self > py::self)
      .def(py::self >= py::self)
      .def("__str__", &Rational::str)
      .def("__repr__", [](const Rational& r) { return "Rational('" + r.str() + "')"; });

  // lattice
  py::class_<Lattice, LatticePtr>(m, "Lattice")
      .def_readonly("basis_labels", &Lattice::basis_labels)
      .def_readonly("gram", &Lattice::gram)
      .def_readonly("canonical", &Lattice::canonical)
      .def_readonly("chi_O", &Lattice::chi_O)
      .def("rank", &Lattice::rank);
  py::class_<DivisorClass>(m, "DivisorClass")
      .def_readonly("coords", &DivisorClass::coords);
  m.def("make_lattice", &make_lattice, py::arg("basis_labels"), py::arg("gram"),
        py::arg("canonical"), py::arg("chi_O"));
  m.def("polarization_lattice", &polarization_lattice, py::arg("d"),
        py::arg("canonical_multiple") = 0, py::arg("chi_O") = 1);
  m.def("divisor",
        py::overload_cast<LatticePtr, std::vector<long long>>(&divisor));
  m.def("canonical_class", &canonical_class);
  m.def("zero_class", &zero_class);
  m.def("intersect", &intersect);
  m.def("hodge_index_ok", &hodge_index_ok);
  m.def("rr_surface_chi", &rr_surface_chi);
  m.def("adjunction_two_g_minus_2", &adjunction_two_g_minus_2);
  m.def("lattice_signature_ok", &lattice_signature_ok);

  // invariants
  py::class_<SurfaceInvariants>(m, "SurfaceInvariants")
      .def(py::init([](long long d, long long hk, long long k2, long long chi,
                       std::optional<long long> q) {
             return SurfaceInvariants{d, hk, k2, chi, q};
           }),
           py::arg("d"), py::arg("hk"), py::arg("k2"), py::arg("chi"),
           py::arg("q") = std::nullopt)
      .def_readwrite("d", &SurfaceInvariants::d)
      .def_readwrite("hk", &SurfaceInvariants::hk)
      .def_readwrite("k2", &SurfaceInvariants::k2)
      .def_readwrite("chi", &SurfaceInvariants::chi)
      .def_readwrite("q", &SurfaceInvariants::q);
  py::class_<HilbertTriple>(m, "HilbertTriple")
      .def_readonly("d", &HilbertTriple::d)
      .def_readonly("hk", &HilbertTriple::hk)
      .def_readonly("chi", &HilbertTriple::chi)
      .def("__repr__", [](const HilbertTriple& t) {
        return "HilbertTriple(d=" + std::to_string(t.d) +
               ", hk=" + std::to_string(t.hk) + ", chi=" + std::to_string(t.chi) + ")";
      });
  m.def("noether_c2", &noether_c2);
  m.def("sectional_genus_two_g_minus_2", &sectional_genus_two_g_minus_2);
  m.def("dpf_residual", &dpf_residual);
  m.def("slope", &slope);
  m.def("ci_invariants", &ci_invariants);

  // bounds
  py::enum_<StabilityBranch>(m, "StabilityBranch")
      .value("Semistable", StabilityBranch::Semistable)
      .value("UnstableRank2Sub", StabilityBranch::UnstableRank2Sub)
      .value("UnstableRank1Sub", StabilityBranch::UnstableRank1Sub)
      .value("UnstableFullLadder", StabilityBranch::UnstableFullLadder);
  py::class_<SheafChern>(m, "SheafChern")
      .def(py::init([](int rank, Rational c1_sq, Rational c1_dot_H, Rational c1_dot_K,
                       Rational c2) {
             return SheafChern{rank, c1_sq, c1_dot_H, c1_dot_K, c2};
           }),
           py::arg("rank"), py::arg("c1_sq"), py::arg("c1_dot_H"),
           py::arg("c1_dot_K"), py::arg("c2"))
      .def_readwrite("rank", &SheafChern::rank)
      .def_readwrite("c1_sq", &SheafChern::c1_sq)
      .def_readwrite("c1_dot_H", &SheafChern::c1_dot_H)
      .def_readwrite("c1_dot_K", &SheafChern::c1_dot_K)
      .def_readwrite("c2", &SheafChern::c2);
  m.def("pm_polynomial", &pm_polynomial);
  m.def("chi_lower_bound_applies", &chi_lower_bound_applies);
  m.def("ep_genus_bound", &ep_genus_bound);
  m.def("chi_upper_bound", &chi_upper_bound);
  m.def("d_alpha", &d_alpha);
  m.def("bogomolov_discriminant", &bogomolov_discriminant);
  m.def("txi_chern", &txi_chern);
  m.def("general_type_c2_minus_k2_lower_bound", &general_type_c2_minus_k2_lower_bound);
  m.def("bmy_ok", &bmy_ok);
  m.def("miyaoka_c2_min", &miyaoka_c2_min);
  m.def("varchenko_bound", &varchenko_bound);
  m.def("thm44_bound_check", &thm44_bound_check);

  // curves
  m.def("rr_curve_chi", &rr_curve_chi);
  m.def("clifford_max_h0", &clifford_max_h0);
  m.def("castelnuovo_max_genus", &castelnuovo_max_genus);
  m.def("plane_curve_omega_degree", &plane_curve_omega_degree);

  // sequences
  py::class_<KoszulDatum>(m, "KoszulDatum")
      .def(py::init([](int mm, long long z1_dot_H, long long z1_dot_K, long long z1_sq) {
             return KoszulDatum{mm, z1_dot_H, z1_dot_K, z1_sq};
           }),
           py::arg("m"), py::arg("z1_dot_H") = 0, py::arg("z1_dot_K") = 0,
           py::arg("z1_sq") = 0)
      .def_readwrite("m", &KoszulDatum::m)
      .def_readwrite("z1_dot_H", &KoszulDatum::z1_dot_H)
      .def_readwrite("z1_dot_K", &KoszulDatum::z1_dot_K)
      .def_readwrite("z1_sq", &KoszulDatum::z1_sq);
  py::class_<FiltrationData>(m, "FiltrationData")
      .def(py::init([](StabilityBranch branch, Rational b1_sq, Rational b1_dot_H,
                       Rational b2_sq, Rational b2_dot_H, Rational b1_dot_b2) {
             return FiltrationData{branch, b1_sq, b1_dot_H, b2_sq, b2_dot_H, b1_dot_b2};
           }),
           py::arg("branch"), py::arg("b1_sq") = Rational(0),
           py::arg("b1_dot_H") = Rational(0), py::arg("b2_sq") = Rational(0),
           py::arg("b2_dot_H") = Rational(0), py::arg("b1_dot_b2") = Rational(0));
  py::class_<FiltrationClass>(m, "FiltrationClass")
      .def_readonly("coeffs", &FiltrationClass::coeffs)
      .def_readonly("dot_H", &FiltrationClass::dot_H);
  m.def("whitney_c", &whitney_c);
  m.def("ndp_deg_z", &ndp_deg_z);
  m.def("conormal_twist_chern", &conormal_twist_chern);
  m.def("filtration_classes", &filtration_classes);
  m.def("filtration_c2_lower_bound", &filtration_c2_lower_bound);
  m.def("m4_albanese2_infeasible", &m4_albanese2_infeasible);

  // enumeration
  py::class_<FamilyQuery>(m, "FamilyQuery")
      .def(py::init([](int mm, Rational alpha, bool use_hodge, bool require_hk_positive) {
             return FamilyQuery{mm, alpha, use_hodge, require_hk_positive};
           }),
           py::arg("m"), py::arg("alpha"), py::arg("use_hodge") = false,
           py::arg("require_hk_positive") = false)
      .def_readwrite("m", &FamilyQuery::m)
      .def_readwrite("alpha", &FamilyQuery::alpha)
      .def_readwrite("use_hodge", &FamilyQuery::use_hodge)
      .def_readwrite("require_hk_positive", &FamilyQuery::require_hk_positive);
  py::class_<ConicBundleSolution>(m, "ConicBundleSolution")
      .def_readonly("d", &ConicBundleSolution::d)
      .def_readonly("q", &ConicBundleSolution::q)
      .def_readonly("delta", &ConicBundleSolution::delta)
      .def_readonly("d_prime", &ConicBundleSolution::d_prime)
      .def_readonly("k2", &ConicBundleSolution::k2)
      .def_readonly("hk", &ConicBundleSolution::hk)
      .def_readonly("c2", &ConicBundleSolution::c2)
      .def_readonly("deg_z", &ConicBundleSolution::deg_z);
  py::enum_<DegZBranch>(m, "DegZBranch")
      .value("Stable", DegZBranch::Stable)
      .value("Unstable", DegZBranch::Unstable);
  m.def("enumerate_families", &enumerate_families);
  m.def("enumerate_irrational_scrolls", &enumerate_irrational_scrolls);
  m.def("enumerate_quartic_conic_bundles", &enumerate_quartic_conic_bundles);
  m.def("admissible_quartic_deg_z", &admissible_quartic_deg_z);
  m.def("m5_trivial_class_search", &m5_trivial_class_search);
  m.def("quadric_scroll_contradiction", &quadric_scroll_contradiction);

  // scroll & Segre configuration
  py::class_<ScrollReport>(m, "ScrollReport")
      .def_readonly("conormal3h_c1_sq", &ScrollReport::conormal3h_c1_sq)
      .def_readonly("conormal3h_c2", &ScrollReport::conormal3h_c2)
      .def_readonly("h0_conormal3h", &ScrollReport::h0_conormal3h)
      .def_readonly("dim_ix3", &ScrollReport::dim_ix3)
      .def_readonly("genus_H", &ScrollReport::genus_H)
      .def_readonly("genus_Gamma", &ScrollReport::genus_Gamma)
      .def_readonly("genus_HminusK", &ScrollReport::genus_HminusK)
      .def_readonly("chi_jz_2h", &ScrollReport::chi_jz_2h)
      .def_readonly("ndp_m3_deg_z", &ScrollReport::ndp_m3_deg_z)
      .def_readonly("k2", &ScrollReport::k2)
      .def_readonly("dpf", &ScrollReport::dpf);
  py::class_<AppendixDegrees>(m, "AppendixDegrees")
      .def_readonly("deg_y0", &AppendixDegrees::deg_y0)
      .def_readonly("deg_x_prime", &AppendixDegrees::deg_x_prime)
      .def_readonly("deg_t_prime", &AppendixDegrees::deg_t_prime)
      .def_readonly("deg_s_e", &AppendixDegrees::deg_s_e)
      .def_readonly("delta_e_class", &AppendixDegrees::delta_e_class);
  py::class_<ConfigPlane>(m, "ConfigPlane")
      .def_readonly("kind", &ConfigPlane::kind)
      .def_readonly("index", &ConfigPlane::index)
      .def_readonly("members", &ConfigPlane::members);
  py::class_<IncidenceStructure>(m, "IncidenceStructure")
      .def_readonly("labels", &IncidenceStructure::labels)
      .def_readonly("points", &IncidenceStructure::points)
      .def_readonly("planes", &IncidenceStructure::planes);
  py::enum_<MeetKind>(m, "MeetKind")
      .value("Point", MeetKind::Point)
      .value("Line", MeetKind::Line);
  py::class_<PlaneMeet>(m, "PlaneMeet")
      .def_readonly("shared", &PlaneMeet::shared)
      .def_readonly("kind", &PlaneMeet::kind);
  m.def("scroll_invariants", &scroll_invariants);
  m.def("scroll_named_class", &scroll_named_class);
  m.def("scroll_sanity_report", &scroll_sanity_report);
  m.def("appendix_degrees", &appendix_degrees);
  m.def("segre_configuration", &segre_configuration);
  m.def("plane_meet", &plane_meet);
}
