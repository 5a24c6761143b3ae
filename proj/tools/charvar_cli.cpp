// charvar: singularity analysis of surface-group character varieties from
// root-system data. See README.md for usage and file formats.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "charvar/classify.hpp"
#include "charvar/dimensions.hpp"
#include "charvar/endoscopy.hpp"
#include "charvar/errors.hpp"
#include "charvar/group_datum.hpp"
#include "charvar/lattice_action.hpp"
#include "charvar/parabolics.hpp"
#include "charvar/root_system.hpp"
#include "charvar/tangent.hpp"

namespace {

using charvar::Int;
using nlohmann::json;

std::string slurp_or_inline(const std::string& arg) {
  std::ifstream in(arg);
  if (!in.good()) return arg;
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::string root_to_string(const charvar::Root& r) {
  std::string out = "(";
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(r[i]);
  }
  return out + ")";
}

int run_analyze(const std::string& group_arg, int genus, const std::string& twist_arg,
                bool all_components, const std::string& format) {
  charvar::AnalysisRequest req;
  req.datum = charvar::parse_group_spec(slurp_or_inline(group_arg));
  req.genus = charvar::GenusDatum{genus};
  if (!all_components) {
    // Default to the identity component when no twist is given.
    req.twist = charvar::parse_twist_spec(req.datum, twist_arg.empty() ? "identity" : twist_arg);
  }
  json report = charvar::analyze(req);
  if (format == "structured")
    std::cout << report.dump(2) << "\n";
  else
    std::cout << charvar::render_report_text(report);
  return 0;
}

int run_roots(const std::string& family, int rank, const std::string& format) {
  auto tr = charvar::parse_type(family, rank);
  auto rs = charvar::build_root_system(tr);
  auto theta = charvar::highest_root(rs);
  auto center = charvar::center_of_simply_connected(tr);
  if (format == "structured") {
    json j;
    j["type"] = tr.to_string();
    j["rank"] = rs.rank();
    j["positive_roots"] = static_cast<long>(rs.positive.size());
    j["dim"] = rs.dim();
    json hr = json::array();
    for (int c : theta) hr.push_back(c);
    j["highest_root"] = hr;
    json orders = json::array();
    for (const Int& d : center.invariant_factors) orders.push_back(d.convert_to<long>());
    j["center_invariant_factors"] = orders;
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "Type " << tr.to_string() << ": " << rs.positive.size()
            << " positive roots, dim " << rs.dim() << "\n";
  std::cout << "Highest root " << root_to_string(theta) << "\n";
  std::cout << "Center of simply connected form: ";
  if (center.trivial()) {
    std::cout << "trivial\n";
  } else {
    for (std::size_t i = 0; i < center.invariant_factors.size(); ++i)
      std::cout << (i ? " x " : "") << "Z/" << center.invariant_factors[i];
    std::cout << "\n";
  }
  std::cout << "Positive roots (simple-root coordinates):\n";
  for (const auto& r : rs.positive) std::cout << "  " << root_to_string(r) << "\n";
  return 0;
}

int run_parabolics(const std::string& family, int rank, int genus, const std::string& format) {
  auto tr = charvar::parse_type(family, rank);
  auto rs = charvar::build_root_system(tr);
  auto maximal = charvar::enumerate_maximal_parabolics(rs);
  json rows = json::array();
  for (const auto& levi : maximal) {
    int removed = -1;
    for (int i = 0, k = 0; i < rs.rank(); ++i)
      if (k >= static_cast<int>(levi.levi_nodes.size()) || levi.levi_nodes[k] != i)
        removed = i;
      else
        ++k;
    json row;
    row["removed_node"] = removed + 1;  // 1-based, matching diagram numbering
    row["levi_positive_roots"] = levi.levi_positive_root_count;
    row["dim_L"] = levi.dim_L;
    row["dim_U"] = levi.dim_U;
    row["dim_ZL"] = levi.dim_ZL;
    std::string lt;
    for (std::size_t i = 0; i < levi.levi_type.size(); ++i)
      lt += (i ? "+" : "") + levi.levi_type[i].to_string();
    row["levi_type"] = lt.empty() ? "torus" : lt;
    if (genus >= 2)
      row["codim_bound"] = charvar::codim_reducible_bound(rs, charvar::GenusDatum{genus},
                                                          levi.levi_nodes);
    rows.push_back(row);
  }
  json j;
  j["type"] = tr.to_string();
  j["positive_roots"] = static_cast<long>(rs.positive.size());
  j["maximal_parabolics"] = rows;
  if (genus >= 2) {
    auto report = charvar::reducible_locus_report(rs, charvar::GenusDatum{genus});
    j["min_bound"] = report.min_bound;
    j["tag"] = charvar::to_string(report.tag);
    j["note"] = report.note;
  }
  if (format == "structured") {
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "Type " << tr.to_string() << ": " << rs.positive.size() << " positive roots\n";
  for (const auto& row : j["maximal_parabolics"]) {
    std::cout << "  remove node " << row["removed_node"].get<int>() << ": Levi "
              << row["levi_type"].get<std::string>() << ", "
              << row["levi_positive_roots"].get<long>() << " Levi positive roots, dim U = "
              << row["dim_U"].get<long>() << ", dim Z(L) = " << row["dim_ZL"].get<long>();
    if (row.contains("codim_bound"))
      std::cout << ", codim bound " << row["codim_bound"].get<long>();
    std::cout << "\n";
  }
  if (j.contains("min_bound"))
    std::cout << "Reducible locus at genus " << genus << ": min codim bound "
              << j["min_bound"].get<long>() << " [" << j["tag"].get<std::string>() << "]\n";
  return 0;
}

int run_endoscopy(const std::string& family, int rank, int genus, const std::string& format) {
  auto tr = charvar::parse_type(family, rank);
  auto rs = charvar::build_root_system(tr);
  charvar::GenusDatum g{genus};
  charvar::validate_genus(g);
  auto levis = charvar::enumerate_pseudo_levis(rs);
  json rows = json::array();
  for (const auto& pl : levis) {
    if (!pl.proper || pl.subsystem_positive_roots == 0) continue;
    auto sr = charvar::stratum_report(rs, g, pl);
    std::string name;
    for (std::size_t i = 0; i < pl.subsystem_type.size(); ++i)
      name += (i ? "+" : "") + pl.subsystem_type[i].to_string();
    rows.push_back(json{{"subsystem", name.empty() ? "torus" : name},
                        {"dim_H", pl.dim_H},
                        {"dim_stratum_upper", sr.dim_stratum_upper},
                        {"codim_lower", sr.codim_lower},
                        {"provenance", pl.provenance}});
  }
  auto min_codim = charvar::min_endoscopic_codim(rs, g);
  json j;
  j["type"] = tr.to_string();
  j["genus"] = genus;
  j["strata"] = rows;
  j["min_codim"] = min_codim ? json(*min_codim) : json(nullptr);
  if (format == "structured") {
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "Endoscopic strata for " << tr.to_string() << " at genus " << genus << ":\n";
  if (rows.empty()) std::cout << "  no strata\n";
  for (const auto& row : rows)
    std::cout << "  " << row["subsystem"].get<std::string>() << ": dim H = "
              << row["dim_H"].get<long>() << ", stratum dim <= "
              << row["dim_stratum_upper"].get<long>() << ", codim >= "
              << row["codim_lower"].get<long>() << "\n";
  if (min_codim) std::cout << "Minimum codimension bound: " << *min_codim << "\n";
  return 0;
}

int run_tangent_check(int genus, bool twisted, const std::string& format) {
  auto tuple = charvar::quaternion_tuple(genus, twisted);
  long centralizer = charvar::centralizer_dim(tuple);
  long tdim = charvar::tangent_dim(tuple);
  long expected = (2L * genus - 1) * 3;
  bool smooth_point = (centralizer == 0 && tdim == expected);
  if (format == "structured") {
    json j;
    j["genus"] = genus;
    j["twisted"] = twisted;
    j["centralizer_dim"] = centralizer;
    j["tangent_dim"] = tdim;
    j["expected_dim"] = expected;
    j["smooth_point"] = smooth_point;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "Quaternion tuple, genus " << genus << (twisted ? ", twisted" : "") << ":\n";
    std::cout << "  centralizer dimension " << centralizer << "\n";
    std::cout << "  tangent dimension " << tdim << " (expected " << expected << ")\n";
    std::cout << (smooth_point ? "  smooth point of the representation variety\n"
                               : "  NOT a smooth point\n");
  }
  return smooth_point ? 0 : 3;
}

int run_torus_check(const std::string& path, const std::string& format) {
  std::ifstream in(path);
  if (!in.good()) throw charvar::ValidationError("cannot open file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw charvar::ValidationError(std::string("bad matrices JSON: ") + e.what());
  }
  charvar::LatticeAction act;
  act.rank = j.at("rank").get<int>();
  for (const auto& gen : j.at("generators")) {
    charvar::IntMat m(act.rank, act.rank);
    if (static_cast<int>(gen.size()) != act.rank)
      throw charvar::ValidationError("generator has wrong number of rows");
    for (int i = 0; i < act.rank; ++i) {
      if (static_cast<int>(gen[i].size()) != act.rank)
        throw charvar::ValidationError("generator has wrong number of columns");
      for (int k = 0; k < act.rank; ++k) m.at(i, k) = Int(gen[i][k].get<long>());
    }
    act.generators.push_back(std::move(m));
  }
  charvar::validate(act);
  long fr = charvar::fixed_rank(act);
  long cr = charvar::commutator_rank(act);
  long ir = charvar::intersection_rank(act);
  bool ok = charvar::verify_torus_lemma(act) && ir == 0;
  if (format == "structured") {
    json out;
    out["rank"] = act.rank;
    out["fixed_rank"] = fr;
    out["commutator_rank"] = cr;
    out["intersection_rank"] = ir;
    out["lemma_holds"] = ok;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "rank " << act.rank << " = fixed " << fr << " + commutator " << cr
              << "; intersection rank " << ir << "\n";
    std::cout << (ok ? "torus lemma verified\n" : "torus lemma FAILED\n");
  }
  return ok ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Singularity analysis of surface-group character varieties"};
  app.require_subcommand(1);
  std::string format = "text";

  auto add_format = [&format](CLI::App* cmd) {
    cmd->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "structured"}));
  };

  std::string group_arg, twist_arg;
  int genus = 2;
  bool all_components = false;
  auto* analyze = app.add_subcommand("analyze", "Classify the components of Ch(Pi, G)");
  analyze->add_option("--group", group_arg, "Group spec: name, inline JSON, or file path")
      ->required();
  analyze->add_option("--genus", genus, "Surface genus (>= 2)")->required();
  auto* twist_opt = analyze->add_option("--twist", twist_arg, "Component label");
  analyze->add_flag("--all-components", all_components, "Analyze every component")
      ->excludes(twist_opt);
  add_format(analyze);

  std::string family;
  int rank = 0;
  auto* roots = app.add_subcommand("roots", "Print a root system");
  roots->add_option("--type", family, "Family letter A-G")->required();
  roots->add_option("--rank", rank, "Rank")->required();
  add_format(roots);

  int pgenus = 0;
  auto* parabolics = app.add_subcommand("parabolics", "Maximal parabolic table");
  parabolics->add_option("--type", family, "Family letter A-G")->required();
  parabolics->add_option("--rank", rank, "Rank")->required();
  parabolics->add_option("--genus", pgenus, "Also print codimension bounds");
  add_format(parabolics);

  auto* endoscopy = app.add_subcommand("endoscopy", "Pseudo-Levi strata table");
  endoscopy->add_option("--type", family, "Family letter A-G")->required();
  endoscopy->add_option("--rank", rank, "Rank")->required();
  endoscopy->add_option("--genus", genus, "Surface genus (>= 2)")->required();
  add_format(endoscopy);

  bool twisted = false;
  auto* tangent = app.add_subcommand("tangent-check", "Exact tangent-space check at the quaternion tuple");
  tangent->add_option("--genus", genus, "Surface genus (>= 2)")->required();
  tangent->add_flag("--twisted", twisted, "Use the twisted (z = -1) tuple");
  add_format(tangent);

  std::string file;
  auto* torus = app.add_subcommand("torus-check", "Verify the torus lemma for a lattice action");
  torus->add_option("--file", file, "JSON file {\"rank\": n, \"generators\": [...]}")->required();
  add_format(torus);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (analyze->parsed()) return run_analyze(group_arg, genus, twist_arg, all_components, format);
    if (roots->parsed()) return run_roots(family, rank, format);
    if (parabolics->parsed()) return run_parabolics(family, rank, pgenus, format);
    if (endoscopy->parsed()) return run_endoscopy(family, rank, genus, format);
    if (tangent->parsed()) return run_tangent_check(genus, twisted, format);
    if (torus->parsed()) return run_torus_check(file, format);
  } catch (const charvar::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const charvar::InvariantViolation& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
