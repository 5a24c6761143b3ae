#include "charvar/group_datum.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "charvar/errors.hpp"

namespace charvar {

using nlohmann::json;

Int FiniteAbelianGroup::order() const {
  Int o = 1;
  for (const Int& d : invariant_factors) o *= d;
  return o;
}

FiniteAbelianGroup center_of_simply_connected(const SimpleTypeRank& tr) {
  validate_type(tr);
  auto c = cartan_matrix(tr);
  const int n = tr.rank;
  IntMat m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.at(i, j) = c[j][i];
  auto diag = smith_invariants(m);
  FiniteAbelianGroup g;
  for (const Int& d : diag) {
    if (d == 0) throw InvariantViolation("Cartan matrix must be nonsingular");
    if (d > 1) g.invariant_factors.push_back(d);
  }
  return g;
}

std::vector<Int> center_cyclic_orders(const SimpleTypeRank& tr) {
  return center_of_simply_connected(tr).invariant_factors;
}

void validate_datum(const ReductiveGroupDatum& datum) {
  if (datum.central_torus_rank < 0)
    throw ValidationError("central_torus_rank must be non-negative");
  for (const GroupFactor& f : datum.factors) {
    validate_type(f.type);
    if (f.isogeny.kind == IsogenyKind::Intermediate) {
      auto orders = center_cyclic_orders(f.type);
      for (const auto& g : f.isogeny.subgroup_generators) {
        if (g.size() != orders.size())
          throw ValidationError("intermediate isogeny generator for factor " +
                                f.type.to_string() + " must have " +
                                std::to_string(orders.size()) + " residues");
      }
    }
  }
}

bool CenterElement::is_identity() const {
  for (const auto& tuple : residues)
    for (const Int& r : tuple)
      if (r != 0) return false;
  return true;
}

std::string CenterElement::to_string() const {
  if (is_identity()) return "identity";
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < residues.size(); ++i) {
    if (i) os << "; ";
    for (std::size_t j = 0; j < residues[i].size(); ++j) {
      if (j) os << ",";
      os << residues[i][j];
    }
    if (residues[i].empty()) os << "0";
  }
  os << ")";
  return os.str();
}

CenterElement identity_center_element(const ReductiveGroupDatum& datum) {
  CenterElement z;
  for (const GroupFactor& f : datum.factors)
    z.residues.emplace_back(center_cyclic_orders(f.type).size(), Int(0));
  return z;
}

std::pair<long, long> dims(const ReductiveGroupDatum& datum) {
  validate_datum(datum);
  long dim_g = datum.central_torus_rank;
  for (const GroupFactor& f : datum.factors)
    dim_g += f.type.rank + 2 * positive_count_closed_form(f.type);
  return {dim_g, datum.central_torus_rank};
}

namespace {

std::vector<std::vector<Int>> all_elements(const std::vector<Int>& orders) {
  std::vector<std::vector<Int>> out{std::vector<Int>(orders.size(), Int(0))};
  for (std::size_t i = 0; i < orders.size(); ++i) {
    std::vector<std::vector<Int>> next;
    for (const auto& e : out)
      for (Int r = 0; r < orders[i]; ++r) {
        auto f = e;
        f[i] = r;
        next.push_back(f);
      }
    out = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<Int>> subgroup_closure(const std::vector<Int>& orders,
                                               const std::vector<std::vector<Int>>& gens) {
  std::set<std::vector<Int>> elems;
  elems.insert(std::vector<Int>(orders.size(), Int(0)));
  std::vector<std::vector<Int>> frontier(elems.begin(), elems.end());
  while (!frontier.empty()) {
    std::vector<std::vector<Int>> next;
    for (const auto& e : frontier)
      for (const auto& g : gens) {
        std::vector<Int> s(orders.size());
        for (std::size_t i = 0; i < orders.size(); ++i) s[i] = (e[i] + g[i]) % orders[i];
        if (elems.insert(s).second) next.push_back(s);
      }
    frontier = std::move(next);
  }
  return {elems.begin(), elems.end()};
}

}  // namespace

FiniteAbelianGroup subgroup_invariant_factors(const std::vector<Int>& orders,
                                              const std::vector<std::vector<Int>>& generators) {
  auto gens = generators;
  for (auto& g : gens)
    for (std::size_t i = 0; i < orders.size(); ++i) g[i] = ((g[i] % orders[i]) + orders[i]) % orders[i];
  auto elems = subgroup_closure(orders, gens);
  const Int n = static_cast<long>(elems.size());

  // Structure of the p-part from counts of elements killed by p^i.
  std::map<Int, std::vector<int>> prime_exponents;  // p -> exponents of cyclic p-factors, descending
  Int rest = n;
  for (Int p = 2; p * p <= rest || (rest > 1 && p <= rest); ++p) {
    if (rest % p != 0) continue;
    while (rest % p == 0) rest /= p;
    std::vector<Int> counts{1};  // n_0 = 1
    Int pk = 1;
    while (true) {
      pk *= p;
      Int cnt = 0;
      for (const auto& e : elems) {
        bool killed = true;
        for (std::size_t i = 0; i < orders.size() && killed; ++i)
          if ((e[i] * pk) % orders[i] != 0) killed = false;
        if (killed) ++cnt;
      }
      if (cnt == counts.back()) break;
      counts.push_back(cnt);
    }
    // Number of cyclic factors of order >= p^i is log_p(n_i / n_{i-1}).
    std::vector<int> at_least;
    for (std::size_t i = 1; i < counts.size(); ++i) {
      Int q = counts[i] / counts[i - 1];
      int k = 0;
      while (q > 1) {
        q /= p;
        ++k;
      }
      at_least.push_back(k);
    }
    std::vector<int> exps;
    for (int f = 0; f < (at_least.empty() ? 0 : at_least[0]); ++f) {
      int e = 0;
      for (std::size_t i = 0; i < at_least.size(); ++i)
        if (at_least[i] > f) e = static_cast<int>(i) + 1;
      exps.push_back(e);
    }
    std::sort(exps.rbegin(), exps.rend());
    prime_exponents[p] = exps;
  }

  std::size_t k = 0;
  for (const auto& [p, exps] : prime_exponents) k = std::max(k, exps.size());
  std::vector<Int> factors_desc;
  for (std::size_t i = 0; i < k; ++i) {
    Int d = 1;
    for (const auto& [p, exps] : prime_exponents)
      if (i < exps.size())
        for (int e = 0; e < exps[i]; ++e) d *= p;
    factors_desc.push_back(d);
  }
  FiniteAbelianGroup g;
  for (auto it = factors_desc.rbegin(); it != factors_desc.rend(); ++it)
    if (*it > 1) g.invariant_factors.push_back(*it);
  return g;
}

std::vector<std::vector<Int>> kernel_subgroup_elements(const GroupFactor& factor) {
  auto orders = center_cyclic_orders(factor.type);
  switch (factor.isogeny.kind) {
    case IsogenyKind::SimplyConnected:
      return {std::vector<Int>(orders.size(), Int(0))};
    case IsogenyKind::Adjoint:
      return all_elements(orders);
    case IsogenyKind::Intermediate: {
      auto gens = factor.isogeny.subgroup_generators;
      for (auto& g : gens)
        for (std::size_t i = 0; i < orders.size(); ++i)
          g[i] = ((g[i] % orders[i]) + orders[i]) % orders[i];
      return subgroup_closure(orders, gens);
    }
  }
  throw InvariantViolation("unreachable isogeny kind");
}

FiniteAbelianGroup fundamental_group_of_derived(const ReductiveGroupDatum& datum) {
  validate_datum(datum);
  // Assemble the product of the per-factor kernels inside the product of
  // the cyclic coordinates of all factors.
  std::vector<Int> orders;
  std::vector<std::size_t> offsets;
  for (const GroupFactor& f : datum.factors) {
    offsets.push_back(orders.size());
    auto o = center_cyclic_orders(f.type);
    orders.insert(orders.end(), o.begin(), o.end());
  }
  std::vector<std::vector<Int>> gens;
  for (std::size_t fi = 0; fi < datum.factors.size(); ++fi) {
    for (const auto& e : kernel_subgroup_elements(datum.factors[fi])) {
      std::vector<Int> g(orders.size(), Int(0));
      std::copy(e.begin(), e.end(), g.begin() + offsets[fi]);
      gens.push_back(std::move(g));
    }
  }
  return subgroup_invariant_factors(orders, gens);
}

std::vector<CenterElement> connected_components(const ReductiveGroupDatum& datum) {
  validate_datum(datum);
  std::vector<CenterElement> out{CenterElement{}};
  out[0] = identity_center_element(datum);
  std::vector<CenterElement> acc{out[0]};
  for (std::size_t fi = 0; fi < datum.factors.size(); ++fi) {
    auto elems = kernel_subgroup_elements(datum.factors[fi]);
    std::vector<CenterElement> next;
    for (const auto& base : acc)
      for (const auto& e : elems) {
        CenterElement z = base;
        z.residues[fi] = e;
        next.push_back(z);
      }
    acc = std::move(next);
  }
  std::sort(acc.begin(), acc.end());
  return acc;
}

std::vector<std::vector<Int>> factor_twist_labels(const GroupFactor& factor) {
  if (factor.isogeny.kind == IsogenyKind::SimplyConnected)
    return all_elements(center_cyclic_orders(factor.type));
  return kernel_subgroup_elements(factor);
}

std::vector<CenterElement> all_twist_labels(const ReductiveGroupDatum& datum) {
  validate_datum(datum);
  std::vector<CenterElement> acc{identity_center_element(datum)};
  for (std::size_t fi = 0; fi < datum.factors.size(); ++fi) {
    auto elems = factor_twist_labels(datum.factors[fi]);
    std::vector<CenterElement> next;
    for (const auto& base : acc)
      for (const auto& e : elems) {
        CenterElement z = base;
        z.residues[fi] = e;
        next.push_back(z);
      }
    acc = std::move(next);
  }
  std::sort(acc.begin(), acc.end());
  return acc;
}

bool twist_in_fundamental_group(const ReductiveGroupDatum& datum, const CenterElement& z) {
  for (std::size_t fi = 0; fi < datum.factors.size(); ++fi) {
    auto elems = kernel_subgroup_elements(datum.factors[fi]);
    if (!std::binary_search(elems.begin(), elems.end(), z.residues[fi])) return false;
  }
  return true;
}

void validate_twist(const ReductiveGroupDatum& datum, const CenterElement& z) {
  if (z.residues.size() != datum.factors.size())
    throw ValidationError("twist must carry one residue tuple per factor");
  for (std::size_t fi = 0; fi < datum.factors.size(); ++fi) {
    auto orders = center_cyclic_orders(datum.factors[fi].type);
    if (z.residues[fi].size() != orders.size())
      throw ValidationError("twist tuple for factor " + datum.factors[fi].type.to_string() +
                            " must have " + std::to_string(orders.size()) + " residues");
    for (std::size_t j = 0; j < orders.size(); ++j)
      if (z.residues[fi][j] < 0 || z.residues[fi][j] >= orders[j])
        throw ValidationError("twist residue out of range for factor " +
                              datum.factors[fi].type.to_string());
  }
}

namespace {

IsogenyLabel parse_isogeny(const json& j) {
  IsogenyLabel lab;
  if (j.is_string()) {
    std::string s = j.get<std::string>();
    if (s == "sc" || s == "simply_connected")
      lab.kind = IsogenyKind::SimplyConnected;
    else if (s == "adjoint")
      lab.kind = IsogenyKind::Adjoint;
    else
      throw ValidationError("isogeny must be \"sc\", \"adjoint\" or {\"subgroup\": ...}");
  } else if (j.is_object() && j.contains("subgroup")) {
    lab.kind = IsogenyKind::Intermediate;
    for (const auto& gen : j.at("subgroup")) {
      std::vector<Int> g;
      for (const auto& r : gen) g.push_back(Int(r.get<long>()));
      lab.subgroup_generators.push_back(std::move(g));
    }
  } else {
    throw ValidationError("isogeny must be \"sc\", \"adjoint\" or {\"subgroup\": ...}");
  }
  return lab;
}

ReductiveGroupDatum parse_group_json(const json& j) {
  ReductiveGroupDatum d;
  if (!j.is_object()) throw ValidationError("group spec must be a JSON object");
  if (j.contains("central_torus_rank")) d.central_torus_rank = j.at("central_torus_rank").get<int>();
  if (j.contains("factors")) {
    for (const auto& fj : j.at("factors")) {
      GroupFactor f;
      std::string fam = fj.at("family").get<std::string>();
      f.type = parse_type(fam, fj.at("rank").get<int>());
      if (fj.contains("isogeny")) f.isogeny = parse_isogeny(fj.at("isogeny"));
      d.factors.push_back(std::move(f));
    }
  }
  validate_datum(d);
  return d;
}

ReductiveGroupDatum named_group(const std::string& name) {
  auto simple = [](SimpleTypeRank tr, IsogenyKind kind, int torus = 0) {
    ReductiveGroupDatum d;
    d.factors.push_back({tr, {kind, {}}});
    d.central_torus_rank = torus;
    validate_datum(d);
    return d;
  };
  auto num = [&](std::size_t prefix_len) {
    int n = std::stoi(name.substr(prefix_len));
    if (n <= 0) throw ValidationError("bad rank in group name: " + name);
    return n;
  };
  if (name.rfind("SL", 0) == 0) {
    int n = num(2);
    if (n < 2) throw ValidationError("SL requires n >= 2");
    return simple({'A', n - 1}, IsogenyKind::SimplyConnected);
  }
  if (name.rfind("PGL", 0) == 0) {
    int n = num(3);
    if (n < 2) throw ValidationError("PGL requires n >= 2");
    return simple({'A', n - 1}, IsogenyKind::Adjoint);
  }
  if (name.rfind("GL", 0) == 0) {
    int n = num(2);
    if (n == 1) {
      ReductiveGroupDatum d;
      d.central_torus_rank = 1;
      return d;
    }
    return simple({'A', n - 1}, IsogenyKind::SimplyConnected, 1);
  }
  if (name.rfind("Spin", 0) == 0) {
    int n = num(4);
    if (n == 3) return simple({'A', 1}, IsogenyKind::SimplyConnected);
    if (n >= 5 && n % 2 == 1) return simple({'B', n / 2}, IsogenyKind::SimplyConnected);
    if (n >= 8 && n % 2 == 0) return simple({'D', n / 2}, IsogenyKind::SimplyConnected);
    throw ValidationError("Spin(n) supported for n = 3, odd n >= 5, even n >= 8");
  }
  if (name.rfind("Sp", 0) == 0) {
    int n = num(2);
    if (n == 2) return simple({'A', 1}, IsogenyKind::SimplyConnected);
    if (n < 4 || n % 2 != 0) throw ValidationError("Sp(2n) requires an even argument >= 4");
    return simple({'C', n / 2}, IsogenyKind::SimplyConnected);
  }
  if (name.rfind("SO", 0) == 0) {
    int n = num(2);
    if (n == 3) return simple({'A', 1}, IsogenyKind::Adjoint);
    if (n >= 5 && n % 2 == 1) return simple({'B', n / 2}, IsogenyKind::Adjoint);
    if (n >= 8 && n % 2 == 0) {
      int m = n / 2;
      ReductiveGroupDatum d;
      IsogenyLabel lab{IsogenyKind::Intermediate, {}};
      if (m % 2 == 1)
        lab.subgroup_generators.push_back({Int(2)});  // Z/2 inside Z/4
      else
        lab.subgroup_generators.push_back({Int(1), Int(0)});  // one Z/2 inside Z/2 x Z/2
      d.factors.push_back({{'D', m}, lab});
      return d;
    }
    throw ValidationError("SO(n) supported for n = 3, odd n >= 5, even n >= 8");
  }
  if (name.rfind("T", 0) == 0 && name.size() > 1 && std::isdigit(name[1])) {
    ReductiveGroupDatum d;
    d.central_torus_rank = num(1);
    return d;
  }
  if (name.size() >= 2 && name[0] >= 'A' && name[0] <= 'G' && std::isdigit(name[1]))
    return simple(parse_type(name.substr(0, 1), std::stoi(name.substr(1))),
                  IsogenyKind::SimplyConnected);
  throw ValidationError("unrecognized group spec: " + name);
}

}  // namespace

ReductiveGroupDatum parse_group_spec(const std::string& text) {
  std::string s = text;
  s.erase(0, s.find_first_not_of(" \t\n\r"));
  if (!s.empty() && s[0] == '{') {
    json j;
    try {
      j = json::parse(s);
    } catch (const json::parse_error& e) {
      throw ValidationError(std::string("bad group JSON: ") + e.what());
    }
    return parse_group_json(j);
  }
  s.erase(s.find_last_not_of(" \t\n\r") + 1);
  return named_group(s);
}

CenterElement parse_twist_spec(const ReductiveGroupDatum& datum, const std::string& text) {
  std::string s = text;
  s.erase(0, s.find_first_not_of(" \t\n\r"));
  s.erase(s.find_last_not_of(" \t\n\r") + 1);
  if (s == "1" || s == "identity") return identity_center_element(datum);
  if (s == "-1") {
    // Convenience for rank-1 situations: the nontrivial element of a Z/2 center.
    CenterElement z = identity_center_element(datum);
    bool placed = false;
    for (std::size_t fi = 0; fi < datum.factors.size(); ++fi) {
      auto orders = center_cyclic_orders(datum.factors[fi].type);
      if (orders.size() == 1 && orders[0] == 2) {
        z.residues[fi][0] = 1;
        placed = true;
      }
    }
    if (!placed) throw ValidationError("twist -1 requires a factor with center Z/2");
    return z;
  }
  json j;
  try {
    j = json::parse(s);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("bad twist JSON: ") + e.what());
  }
  CenterElement z;
  for (const auto& tuple : j) {
    std::vector<Int> t;
    for (const auto& r : tuple) t.push_back(Int(r.get<long>()));
    z.residues.push_back(std::move(t));
  }
  validate_twist(datum, z);
  return z;
}

std::string datum_to_string(const ReductiveGroupDatum& datum) {
  std::ostringstream os;
  bool first = true;
  for (const GroupFactor& f : datum.factors) {
    if (!first) os << " x ";
    first = false;
    os << f.type.to_string();
    switch (f.isogeny.kind) {
      case IsogenyKind::SimplyConnected: os << "(sc)"; break;
      case IsogenyKind::Adjoint: os << "(adjoint)"; break;
      case IsogenyKind::Intermediate: os << "(intermediate)"; break;
    }
  }
  if (datum.central_torus_rank > 0) {
    if (!first) os << " x ";
    os << "T" << datum.central_torus_rank;
    first = false;
  }
  if (first) os << "trivial group";
  return os.str();
}

}  // namespace charvar
