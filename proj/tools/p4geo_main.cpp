#include "p4geo/bounds.hpp"
#include "p4geo/enumeration.hpp"
#include "p4geo/invariants.hpp"
#include "p4geo/scroll_segre.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

using nlohmann::json;
using namespace p4geo;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInconsistent = 1;
constexpr int kExitUsage = 2;

enum class Format { Table, Json, Csv };

Format parse_format(const std::string& s) {
  if (s == "table") return Format::Table;
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  throw CLI::ValidationError("--format must be table, json or csv");
}

// Rows-with-header printer shared by the tabular reports.
void print_rows(Format fmt, const std::vector<std::string>& header,
                const std::vector<std::vector<std::string>>& rows) {
  if (fmt == Format::Json) {
    json arr = json::array();
    for (const auto& r : rows) {
      json obj = json::object();
      for (std::size_t i = 0; i < header.size(); ++i) {
        const std::string& cell = r[i];
        // numeric columns stay numeric in JSON
        bool numeric = !cell.empty() &&
                       cell.find_first_not_of("-0123456789") == std::string::npos;
        if (numeric)
          obj[header[i]] = std::stoll(cell);
        else
          obj[header[i]] = cell;
      }
      arr.push_back(obj);
    }
    std::cout << arr.dump(2) << "\n";
    return;
  }
  const char* sep = fmt == Format::Csv ? "," : "  ";
  for (std::size_t i = 0; i < header.size(); ++i)
    std::cout << (i ? sep : "") << header[i];
  std::cout << "\n";
  for (const auto& r : rows) {
    for (std::size_t i = 0; i < r.size(); ++i) std::cout << (i ? sep : "") << r[i];
    std::cout << "\n";
  }
}

SurfaceInvariants invariants_from_json(const json& j) {
  SurfaceInvariants inv;
  inv.d = j.at("d").get<long long>();
  inv.hk = j.at("hk").get<long long>();
  inv.k2 = j.at("k2").get<long long>();
  inv.chi = j.at("chi").get<long long>();
  if (j.contains("q") && !j.at("q").is_null()) inv.q = j.at("q").get<long long>();
  if (inv.d < 1) throw std::invalid_argument("degree must be >= 1");
  if (inv.q && (*inv.q < 0 || inv.chi - 1 + *inv.q < 0))
    throw std::invalid_argument("q must be >= 0 with p_g = chi - 1 + q >= 0");
  return inv;
}

int cmd_families(int m, const std::string& alpha_str, const std::string& hodge,
                 const std::string& hk_positive, Format fmt) {
  FamilyQuery q;
  q.m = m;
  q.alpha = Rational::parse(alpha_str);
  q.use_hodge = hodge == "on";
  q.require_hk_positive = hk_positive == "on";
  auto triples = enumerate_families(q);

  std::vector<std::vector<std::string>> rows;
  for (const auto& t : triples) {
    Rational k2 = q.alpha * Rational(t.chi);  // integral by construction
    rows.push_back({std::to_string(t.d), std::to_string(t.hk),
                    std::to_string(t.chi), k2.str()});
  }
  print_rows(fmt, {"d", "hk", "chi", "k2"}, rows);
  return kExitOk;
}

int cmd_check(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "check: cannot open '" << path << "'\n";
    return kExitUsage;
  }
  json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    std::cerr << "check: invalid JSON: " << e.what() << "\n";
    return kExitUsage;
  }

  SurfaceInvariants inv;
  try {
    inv = invariants_from_json(j);
  } catch (const std::exception& e) {
    std::cerr << "check: bad record: " << e.what() << "\n";
    return kExitUsage;
  }

  long long c2 = noether_c2(inv);
  long long res = dpf_residual(inv);
  std::cout << "record d=" << inv.d << " hk=" << inv.hk << " k2=" << inv.k2
            << " chi=" << inv.chi;
  if (inv.q) std::cout << " q=" << *inv.q;
  std::cout << "\n";
  std::cout << "c2 (noether) " << c2 << "\n";
  std::cout << "sectional 2g-2 " << sectional_genus_two_g_minus_2(inv) << "\n";
  std::cout << "dpf-residual " << res << " " << (res == 0 ? "pass" : "FAIL") << "\n";
  if (inv.chi > 0)
    std::cout << "slope " << slope(inv).str() << "\n";
  else
    std::cout << "slope n/a (chi <= 0)\n";
  std::cout << "bmy " << inv.k2 << " <= " << 9 * inv.chi << " "
            << (bmy_ok(inv) ? "pass" : "FAIL") << "\n";

  Rational gap(c2 - inv.k2);
  for (int m : {2, 3, 4}) {
    Rational bound =
        general_type_c2_minus_k2_lower_bound(m, inv, StabilityBranch::Semistable);
    std::cout << "semistable-bound m=" << m << " c2-k2 " << gap.str() << " >= "
              << bound.str() << " " << (gap >= bound ? "pass" : "FAIL") << "\n";
  }
  std::cout << "m=5 first clause k2 <= c2 " << inv.k2 << " <= " << c2 << " "
            << (inv.k2 <= c2 ? "pass" : "FAIL") << "\n";
  return res == 0 ? kExitOk : kExitInconsistent;
}

int catalog_conic_bundles(Format fmt) {
  std::vector<std::vector<std::string>> rows;
  for (const auto& s : enumerate_quartic_conic_bundles())
    rows.push_back({std::to_string(s.d), std::to_string(s.q), std::to_string(s.delta),
                    std::to_string(s.d_prime), std::to_string(s.k2),
                    std::to_string(s.hk), std::to_string(s.c2),
                    std::to_string(s.deg_z)});
  print_rows(fmt, {"d", "q", "delta", "d_prime", "k2", "hk", "c2", "deg_z"}, rows);
  return kExitOk;
}

int catalog_scrolls(long long d_max, Format fmt) {
  std::vector<std::vector<std::string>> rows;
  for (const auto& [d, q] : enumerate_irrational_scrolls(d_max))
    rows.push_back({std::to_string(d), std::to_string(q)});
  print_rows(fmt, {"d", "q"}, rows);
  return kExitOk;
}

int catalog_quartic_degz(long long d, Format fmt) {
  std::vector<std::vector<std::string>> rows;
  for (const auto& [z, br] : admissible_quartic_deg_z(d))
    rows.push_back(
        {std::to_string(z), br == DegZBranch::Stable ? "Stable" : "Unstable"});
  print_rows(fmt, {"deg_z", "branch"}, rows);
  return kExitOk;
}

json point_json(const ConfigPoint& p) { return json::array({p[0], p[1]}); }

int catalog_segre_config(Format fmt) {
  auto cfg = segre_configuration({"a", "b", "c", "d", "e"});
  if (fmt == Format::Json) {
    json out;
    out["points"] = json::array();
    for (const auto& p : cfg.points) out["points"].push_back(point_json(p));
    out["planes"] = json::array();
    for (const auto& pl : cfg.planes) {
      json jp;
      jp["kind"] = std::string(1, pl.kind);
      if (pl.kind == 'A')
        jp["index"] = pl.index[0];
      else
        jp["index"] = json::array({pl.index[0], pl.index[1]});
      jp["members"] = json::array();
      for (const auto& p : pl.members) jp["members"].push_back(point_json(p));
      out["planes"].push_back(jp);
    }
    std::cout << out.dump(2) << "\n";
    return kExitOk;
  }
  const char* sep = fmt == Format::Csv ? "," : "  ";
  std::cout << cfg.points.size() << " points / " << cfg.planes.size()
            << " planes / 4 per plane / 6 per point\n";
  for (const auto& pl : cfg.planes) {
    std::cout << "plane" << sep << pl.kind << sep;
    for (std::size_t i = 0; i < pl.index.size(); ++i)
      std::cout << (i ? "." : "") << pl.index[i];
    for (const auto& p : pl.members) std::cout << sep << p[0] << p[1];
    std::cout << "\n";
  }
  return kExitOk;
}

int catalog_scroll_report(Format fmt) {
  auto r = scroll_sanity_report();
  std::vector<std::pair<std::string, long long>> fields = {
      {"conormal3h_c1_sq", r.conormal3h_c1_sq},
      {"conormal3h_c2", r.conormal3h_c2},
      {"h0_conormal3h", r.h0_conormal3h},
      {"dim_ix3", r.dim_ix3},
      {"genus_H", r.genus_H},
      {"genus_Gamma", r.genus_Gamma},
      {"genus_HminusK", r.genus_HminusK},
      {"chi_jz_2h", r.chi_jz_2h},
      {"ndp_m3_deg_z", r.ndp_m3_deg_z},
      {"k2", r.k2},
      {"dpf_residual", r.dpf},
  };
  if (fmt == Format::Json) {
    json out;
    for (const auto& [k, v] : fields) out[k] = v;
    std::cout << out.dump(2) << "\n";
    return kExitOk;
  }
  const char* sep = fmt == Format::Csv ? "," : " ";
  for (const auto& [k, v] : fields) std::cout << k << sep << v << "\n";
  return kExitOk;
}

int catalog_appendix_degrees(Format fmt) {
  auto a = appendix_degrees();
  if (fmt == Format::Json) {
    json out;
    out["deg_y0"] = a.deg_y0;
    out["deg_x_prime"] = a.deg_x_prime;
    out["deg_t_prime"] = a.deg_t_prime;
    out["deg_s_e"] = a.deg_s_e;
    out["delta_e"] = a.delta_e_class;
    std::cout << out.dump(2) << "\n";
    return kExitOk;
  }
  const char* sep = fmt == Format::Csv ? "," : " ";
  std::cout << "deg_y0" << sep << a.deg_y0 << "\n";
  std::cout << "deg_x_prime" << sep << a.deg_x_prime << "\n";
  std::cout << "deg_t_prime" << sep << a.deg_t_prime << "\n";
  std::cout << "deg_s_e" << sep << a.deg_s_e << "\n";
  std::cout << "delta_e" << sep << a.delta_e_class << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact numerics of smooth surfaces in P^4 on small degree hypersurfaces"};
  app.require_subcommand(1);

  // families
  auto* fam = app.add_subcommand("families", "Enumerate Hilbert triples for a slope");
  int fam_m = 4;
  std::string fam_alpha, fam_hodge = "off", fam_hkpos = "off", fam_fmt = "table";
  fam->add_option("--m", fam_m, "hypersurface degree (4 or 5)")->required();
  fam->add_option("--alpha", fam_alpha, "slope K^2/chi as p/q")->required();
  fam->add_option("--hodge", fam_hodge, "on/off: require hk^2 >= d k2")
      ->check(CLI::IsMember({"on", "off"}));
  fam->add_option("--hk-positive", fam_hkpos, "on/off: require hk >= 1")
      ->check(CLI::IsMember({"on", "off"}));
  fam->add_option("--format", fam_fmt)->check(CLI::IsMember({"table", "json", "csv"}));

  // check
  auto* chk = app.add_subcommand("check", "Check a surface-invariants JSON record");
  std::string chk_path;
  chk->add_option("file", chk_path, "path to the JSON record")->required();

  // catalog
  auto* cat = app.add_subcommand("catalog", "Print one of the built-in tables");
  std::string cat_name, cat_fmt = "table";
  long long cat_d = -1;
  cat->add_option("name", cat_name, "conic-bundles | scrolls | quartic-degz | "
                                    "segre-config | scroll-report | appendix-degrees")
      ->required();
  cat->add_option("--d", cat_d, "degree (quartic-degz) or degree cap (scrolls)");
  cat->add_option("--format", cat_fmt)->check(CLI::IsMember({"table", "json", "csv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (fam->parsed())
      return cmd_families(fam_m, fam_alpha, fam_hodge, fam_hkpos,
                          parse_format(fam_fmt));
    if (chk->parsed()) return cmd_check(chk_path);
    Format fmt = parse_format(cat_fmt);
    if (cat_name == "conic-bundles") return catalog_conic_bundles(fmt);
    if (cat_name == "scrolls") return catalog_scrolls(cat_d < 0 ? 100 : cat_d, fmt);
    if (cat_name == "quartic-degz") {
      if (cat_d < 0) {
        std::cerr << "catalog quartic-degz: --d is required (5..11)\n";
        return kExitUsage;
      }
      return catalog_quartic_degz(cat_d, fmt);
    }
    if (cat_name == "segre-config") return catalog_segre_config(fmt);
    if (cat_name == "scroll-report") return catalog_scroll_report(fmt);
    if (cat_name == "appendix-degrees") return catalog_appendix_degrees(fmt);
    std::cerr << "catalog: unknown table '" << cat_name << "'\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
