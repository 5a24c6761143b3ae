#include "charvar/classify.hpp"

#include <algorithm>
#include <sstream>

#include "charvar/errors.hpp"

namespace charvar {

using nlohmann::json;

namespace {

const Citation kNormalCite{
    "normality",
    "the representation variety is a normal complete intersection and the character "
    "variety is its GIT quotient, hence normal"};

const Citation kSymplecticCite{
    "symplectic-singularities",
    "the character variety carries a symplectic singularity in the sense of Beauville "
    "(Goldman form on the smooth locus; cf. Bellamy-Schedler for rank one)"};

const Citation kTerminalCite{
    "terminality-criterion",
    "a symplectic singularity is terminal iff its singular locus has codimension >= 4 "
    "(Namikawa); the codimension is controlled by the reducible and endoscopic strata"};

const Citation kQFactorialIdentityCite{
    "q-factoriality-identity",
    "the identity component is Q-factorial (descent of local factoriality of the "
    "representation variety through the quotient, after Knop-Kraft-Vust)"};

const Citation kQFactorialUnknownCite{
    "q-factoriality-open",
    "Q-factoriality of non-identity components is an open question; no claim is made"};

std::string type_list_to_string(const std::vector<SimpleTypeRank>& types) {
  if (types.empty()) return "torus";
  std::string out;
  for (std::size_t i = 0; i < types.size(); ++i) {
    if (i) out += "+";
    out += types[i].to_string();
  }
  return out;
}

/// A1 factors of the cover whose twist coordinate is trivial (z_i = 1).
std::vector<std::size_t> trivially_twisted_a1_factors(const ReductiveGroupDatum& datum,
                                                      const CenterElement& z) {
  std::vector<std::size_t> out;
  for (std::size_t fi = 0; fi < datum.factors.size(); ++fi) {
    const SimpleTypeRank& tr = datum.factors[fi].type;
    if (tr.family != 'A' || tr.rank != 1) continue;
    bool trivial = true;
    for (const Int& r : z.residues[fi])
      if (r != 0) trivial = false;
    if (trivial) out.push_back(fi);
  }
  return out;
}

void check_component_twist(const ReductiveGroupDatum& datum, const CenterElement& z) {
  validate_twist(datum, z);
  // A simply connected factor accepts every central twist (each labels a
  // twisted representation variety); any other factor only accepts elements
  // of the isogeny kernel, which label actual components.
  for (std::size_t fi = 0; fi < datum.factors.size(); ++fi) {
    auto allowed = factor_twist_labels(datum.factors[fi]);
    if (!std::binary_search(allowed.begin(), allowed.end(), z.residues[fi]))
      throw ValidationError("twist " + z.to_string() + " is not a component label for factor " +
                            datum.factors[fi].type.to_string() +
                            ": it lies outside the fundamental group of the derived subgroup");
  }
}

json center_element_to_json(const CenterElement& z) {
  json out = json::array();
  for (const auto& tuple : z.residues) {
    json t = json::array();
    for (const Int& r : tuple) t.push_back(r.convert_to<long>());
    out.push_back(t);
  }
  return out;
}

json codim_report_to_json(const CodimReport& report) {
  json entries = json::array();
  for (const CodimEntry& e : report.entries) {
    entries.push_back(json{{"removed_node", e.removed_node},
                           {"dim_U", e.dim_U},
                           {"dim_ZL", e.dim_ZL},
                           {"bound", e.bound}});
  }
  return json{{"entries", entries},
              {"min_bound", report.min_bound},
              {"tag", to_string(report.tag)},
              {"note", report.note}};
}

json citation_to_json(const Citation& c) {
  return json{{"rule", c.rule}, {"basis", c.basis}};
}

}  // namespace

ComponentVerdict classify_component(const ReductiveGroupDatum& datum, GenusDatum g,
                                    const CenterElement& z) {
  validate_datum(datum);
  validate_genus(g);
  check_component_twist(datum, z);

  ComponentVerdict v;
  v.component = z;
  v.normal = true;
  v.normal_cite = kNormalCite;
  v.symplectic = true;
  v.symplectic_cite = kSymplecticCite;
  v.terminal_cite = kTerminalCite;

  auto bad_a1 = trivially_twisted_a1_factors(datum, z);
  if (g.g > 2) {
    v.terminal = true;
    v.terminal_reason = "genus " + std::to_string(g.g) + " > 2";
  } else if (bad_a1.empty()) {
    v.terminal = true;
    v.terminal_reason =
        "genus 2 and every A1 factor of the simply connected cover carries a "
        "nontrivial twist coordinate";
  } else {
    v.terminal = false;
    v.terminal_reason = "genus 2 and factor " + std::to_string(bad_a1.front() + 1) +
                        " of type A1 has trivial twist coordinate";
  }

  if (z.is_identity()) {
    v.q_factorial = QFactorial::True;
    v.q_factorial_cite = kQFactorialIdentityCite;
  } else {
    v.q_factorial = QFactorial::Unknown;
    v.q_factorial_cite = kQFactorialUnknownCite;
  }

  for (std::size_t fi = 0; fi < datum.factors.size(); ++fi) {
    ReductiveGroupDatum single;
    single.factors.push_back(datum.factors[fi]);
    CenterElement zi;
    zi.residues.push_back(z.residues[fi]);
    v.rep_properties.push_back(rep_variety_properties(single, g, zi));

    RootSystem rs = build_root_system(datum.factors[fi].type);
    FactorSupport support;
    support.type = datum.factors[fi].type;
    support.reducible = reducible_locus_report(rs, g);
    support.min_endoscopic_codim = min_endoscopic_codim(rs, g);
    v.supporting.push_back(std::move(support));
  }
  return v;
}

RepProperties rep_variety_properties(const ReductiveGroupDatum& datum, GenusDatum g,
                                     const CenterElement& z) {
  validate_datum(datum);
  validate_genus(g);
  if (datum.factors.size() != 1)
    throw ValidationError(
        "rep_variety_properties applies to a single almost-simple factor; "
        "record the property per factor for products");
  validate_twist(datum, z);

  RepProperties p;
  p.factor_type = datum.factors[0].type;
  p.normal = true;
  const int rank = datum.factors[0].type.rank;
  bool identity = z.is_identity();
  if (identity && g.g == 2 && rank == 1) {
    p.locally_factorial = false;
    p.note = "identity component with (genus, rank) = (2, 1)";
  } else {
    p.locally_factorial = true;
    p.note = identity ? "codimension bounds rule out divisorial singular strata"
                      : "twisted component: every representation is irreducible, "
                        "so the representation variety is smooth";
  }
  return p;
}

json analyze(const AnalysisRequest& request) {
  const ReductiveGroupDatum& datum = request.datum;
  validate_datum(datum);
  validate_genus(request.genus);
  const auto [dim_g, dim_z] = dims(datum);

  json report;
  json group;
  group["description"] = datum_to_string(datum);
  group["central_torus_rank"] = datum.central_torus_rank;
  group["dim"] = dim_g;
  group["dim_center"] = dim_z;
  json factor_list = json::array();
  for (const GroupFactor& f : datum.factors) {
    json fj;
    fj["type"] = f.type.to_string();
    switch (f.isogeny.kind) {
      case IsogenyKind::SimplyConnected: fj["isogeny"] = "sc"; break;
      case IsogenyKind::Adjoint: fj["isogeny"] = "adjoint"; break;
      case IsogenyKind::Intermediate: fj["isogeny"] = "intermediate"; break;
    }
    json orders = json::array();
    for (const Int& d : center_cyclic_orders(f.type)) orders.push_back(d.convert_to<long>());
    fj["center_orders"] = orders;
    factor_list.push_back(fj);
  }
  group["factors"] = factor_list;
  report["group"] = group;
  report["genus"] = request.genus.g;
  report["dim_rep"] = dim_rep(datum, request.genus);
  report["dim_ch"] = dim_ch(datum, request.genus);

  json pi1 = json::array();
  for (const Int& d : fundamental_group_of_derived(datum).invariant_factors)
    pi1.push_back(d.convert_to<long>());
  report["pi1_derived"] = pi1;

  json factor_reports = json::array();
  for (const GroupFactor& f : datum.factors) {
    RootSystem rs = build_root_system(f.type);
    json fj;
    fj["type"] = f.type.to_string();
    fj["positive_roots"] = static_cast<long>(rs.positive.size());
    fj["dim"] = rs.dim();
    fj["reducible_locus"] = codim_report_to_json(reducible_locus_report(rs, request.genus));
    json strata = json::array();
    for (const PseudoLevi& pl : enumerate_pseudo_levis(rs)) {
      if (!pl.proper || pl.subsystem_positive_roots == 0) continue;
      StratumReport sr = stratum_report(rs, request.genus, pl);
      strata.push_back(json{{"subsystem", type_list_to_string(pl.subsystem_type)},
                            {"dim_H", pl.dim_H},
                            {"dim_stratum_upper", sr.dim_stratum_upper},
                            {"codim_lower", sr.codim_lower}});
    }
    fj["endoscopic_strata"] = strata;
    auto min_codim = min_endoscopic_codim(rs, request.genus);
    if (min_codim)
      fj["min_endoscopic_codim"] = *min_codim;
    else
      fj["min_endoscopic_codim"] = nullptr;
    factor_reports.push_back(fj);
  }
  report["factors"] = factor_reports;

  std::vector<CenterElement> targets;
  if (request.twist) {
    check_component_twist(datum, *request.twist);
    targets.push_back(*request.twist);
  } else {
    targets = all_twist_labels(datum);
  }

  json components = json::array();
  for (const CenterElement& z : targets) {
    ComponentVerdict v = classify_component(datum, request.genus, z);
    json cj;
    cj["twist"] = center_element_to_json(z);
    cj["label"] = z.to_string();
    cj["normal"] = v.normal;
    cj["symplectic"] = v.symplectic;
    cj["terminal"] = v.terminal;
    cj["terminal_reason"] = v.terminal_reason;
    cj["q_factorial"] = (v.q_factorial == QFactorial::True) ? "true" : "unknown";
    cj["citations"] = json{{"normal", citation_to_json(v.normal_cite)},
                           {"symplectic", citation_to_json(v.symplectic_cite)},
                           {"terminal", citation_to_json(v.terminal_cite)},
                           {"q_factorial", citation_to_json(v.q_factorial_cite)}};
    json reps = json::array();
    for (const RepProperties& p : v.rep_properties)
      reps.push_back(json{{"factor", p.factor_type.to_string()},
                          {"normal", p.normal},
                          {"locally_factorial", p.locally_factorial},
                          {"note", p.note}});
    cj["rep_variety"] = reps;
    components.push_back(cj);
  }
  report["components"] = components;
  return report;
}

std::string render_report_text(const json& report) {
  std::ostringstream os;
  os << "Group: " << report.at("group").at("description").get<std::string>() << "  (dim "
     << report.at("group").at("dim").get<long>() << ", center dim "
     << report.at("group").at("dim_center").get<long>() << ")\n";
  os << "Genus: " << report.at("genus").get<int>() << "\n";
  os << "dim Rep = " << report.at("dim_rep").get<long>()
     << "   dim Ch = " << report.at("dim_ch").get<long>() << "\n";
  os << "pi1(derived subgroup) = ";
  const auto& pi1 = report.at("pi1_derived");
  if (pi1.empty()) {
    os << "trivial\n";
  } else {
    for (std::size_t i = 0; i < pi1.size(); ++i) os << (i ? " x " : "") << "Z/" << pi1[i].get<long>();
    os << "\n";
  }
  for (const auto& fj : report.at("factors")) {
    os << "Factor " << fj.at("type").get<std::string>() << ": "
       << fj.at("positive_roots").get<long>() << " positive roots, dim "
       << fj.at("dim").get<long>() << "\n";
    const auto& red = fj.at("reducible_locus");
    os << "  reducible locus: min codim bound " << red.at("min_bound").get<long>() << " ["
       << red.at("tag").get<std::string>() << "]";
    if (!red.at("note").get<std::string>().empty())
      os << " -- " << red.at("note").get<std::string>();
    os << "\n";
    if (fj.at("min_endoscopic_codim").is_null())
      os << "  endoscopic strata: none\n";
    else
      os << "  endoscopic strata: min codim bound "
         << fj.at("min_endoscopic_codim").get<long>() << " over "
         << fj.at("endoscopic_strata").size() << " strata\n";
  }
  for (const auto& cj : report.at("components")) {
    os << "Component " << cj.at("label").get<std::string>() << ":\n";
    os << "  normal:      " << (cj.at("normal").get<bool>() ? "yes" : "no") << "\n";
    os << "  symplectic:  " << (cj.at("symplectic").get<bool>() ? "yes" : "no") << "\n";
    os << "  terminal:    " << (cj.at("terminal").get<bool>() ? "yes" : "no") << "  ("
       << cj.at("terminal_reason").get<std::string>() << ")\n";
    os << "  Q-factorial: " << cj.at("q_factorial").get<std::string>() << "\n";
    for (const auto& rp : cj.at("rep_variety"))
      os << "  rep variety [" << rp.at("factor").get<std::string>()
         << "]: locally factorial = " << (rp.at("locally_factorial").get<bool>() ? "yes" : "no")
         << " (" << rp.at("note").get<std::string>() << ")\n";
  }
  return os.str();
}

}  // namespace charvar
