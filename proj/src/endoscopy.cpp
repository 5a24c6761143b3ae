#include "charvar/endoscopy.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

#include "charvar/errors.hpp"

namespace charvar {

namespace {

using TypeMultiset = std::vector<SimpleTypeRank>;  // sorted

std::string multiset_to_string(const TypeMultiset& ms) {
  if (ms.empty()) return "torus";
  std::ostringstream os;
  for (std::size_t i = 0; i < ms.size(); ++i) {
    if (i) os << "+";
    os << ms[i].to_string();
  }
  return os.str();
}

const ExtendedDiagram& cached_extended(const SimpleTypeRank& tr) {
  static std::map<SimpleTypeRank, ExtendedDiagram> cache;
  auto it = cache.find(tr);
  if (it == cache.end())
    it = cache.emplace(tr, extended_diagram(build_root_system(tr))).first;
  return it->second;
}

/// Types obtained by extending one component's diagram and deleting a
/// nonempty node subset; one result per deletion mask.
std::vector<TypeMultiset> component_deletions(const SimpleTypeRank& tr) {
  const ExtendedDiagram& ed = cached_extended(tr);
  const int m = tr.rank + 1;
  std::vector<TypeMultiset> out;
  for (unsigned mask = 1; mask < (1u << m); ++mask) {
    std::vector<int> keep;
    for (int i = 0; i < m; ++i)
      if (!(mask & (1u << i))) keep.push_back(i);
    TypeMultiset comps;
    if (!keep.empty()) {
      std::vector<std::vector<int>> sub(keep.size(), std::vector<int>(keep.size()));
      for (std::size_t a = 0; a < keep.size(); ++a)
        for (std::size_t b = 0; b < keep.size(); ++b)
          sub[a][b] = ed.ext_cartan[keep[a]][keep[b]];
      comps = classify_diagram(sub);
    }
    out.push_back(std::move(comps));
  }
  return out;
}

long positive_count(const TypeMultiset& ms) {
  long s = 0;
  for (const SimpleTypeRank& tr : ms) s += positive_count_closed_form(tr);
  return s;
}

}  // namespace

std::vector<std::vector<SimpleTypeRank>> pseudo_levi_successors(
    const std::vector<SimpleTypeRank>& state) {
  std::vector<TypeMultiset> out;
  for (std::size_t k = 0; k < state.size(); ++k) {
    if (k > 0 && state[k] == state[k - 1]) continue;  // identical component, same successors
    for (const TypeMultiset& comps : component_deletions(state[k])) {
      TypeMultiset next;
      next.reserve(state.size() - 1 + comps.size());
      for (std::size_t j = 0; j < state.size(); ++j)
        if (j != k) next.push_back(state[j]);
      next.insert(next.end(), comps.begin(), comps.end());
      std::sort(next.begin(), next.end());
      out.push_back(std::move(next));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<PseudoLevi> enumerate_pseudo_levis(const RootSystem& rs) {
  // Canonical name of the full system (B2 is classified as C2).
  const TypeMultiset whole = classify_diagram(rs.cartan);
  std::map<TypeMultiset, std::string> provenance;
  provenance[whole] = multiset_to_string(whole);
  std::deque<TypeMultiset> queue{whole};
  while (!queue.empty()) {
    TypeMultiset state = queue.front();
    queue.pop_front();
    for (const TypeMultiset& next : pseudo_levi_successors(state)) {
      auto [it, inserted] =
          provenance.emplace(next, provenance[state] + " -> " + multiset_to_string(next));
      if (inserted) queue.push_back(next);
    }
  }

  std::vector<PseudoLevi> out;
  for (const auto& [state, prov] : provenance) {
    PseudoLevi pl;
    pl.subsystem_type = state;
    pl.subsystem_positive_roots = positive_count(state);
    pl.dim_H = rs.rank() + 2 * pl.subsystem_positive_roots;
    pl.proper = state != whole;
    pl.provenance = prov;
    if (pl.proper && pl.dim_H >= rs.dim())
      throw InvariantViolation("proper pseudo-Levi with dim H >= dim G");
    out.push_back(std::move(pl));
  }
  std::sort(out.begin(), out.end(), [](const PseudoLevi& a, const PseudoLevi& b) {
    if (a.dim_H != b.dim_H) return a.dim_H > b.dim_H;
    return a.subsystem_type < b.subsystem_type;
  });
  return out;
}

StratumReport stratum_report(const RootSystem& rs, GenusDatum g, const PseudoLevi& pl) {
  validate_genus(g);
  StratumReport sr;
  sr.pseudo_levi = pl;
  sr.dim_stratum_upper = (2L * g.g - 2) * pl.dim_H;
  sr.codim_lower = (2L * g.g - 2) * (rs.dim() - pl.dim_H);
  return sr;
}

std::optional<long> min_endoscopic_codim(const RootSystem& rs, GenusDatum g) {
  validate_genus(g);
  std::optional<long> best;
  for (const PseudoLevi& pl : enumerate_pseudo_levis(rs)) {
    if (!pl.proper || pl.subsystem_positive_roots == 0) continue;
    long codim = stratum_report(rs, g, pl).codim_lower;
    if (!best || codim < *best) best = codim;
  }
  return best;
}

}  // namespace charvar
