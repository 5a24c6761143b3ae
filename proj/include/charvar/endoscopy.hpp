#pragma once

#include <optional>
#include <string>
#include <vector>

#include "charvar/dimensions.hpp"
#include "charvar/root_system.hpp"

namespace charvar {

/// Identity component of the centralizer of a torsion semisimple element,
/// recorded by the type of its root subsystem. Contains the full maximal
/// torus, so dim H = rank G + 2 * (positive roots of the subsystem).
struct PseudoLevi {
  std::vector<SimpleTypeRank> subsystem_type;  // sorted multiset; empty = maximal torus
  long subsystem_positive_roots = 0;
  long dim_H = 0;
  bool proper = false;
  std::string provenance;  // one witness chain of extend-and-delete steps
};

/// All subsystem types reachable by iterating (extend each component's
/// diagram, delete at least one node) to closure, starting from the full
/// system. Deduplicated by type; includes the improper entry and the torus.
/// Sorted by decreasing dim_H, then by type.
std::vector<PseudoLevi> enumerate_pseudo_levis(const RootSystem& rs);

/// One extend-and-delete step applied to every component of a subsystem
/// type; used by the enumeration and by its closure check.
std::vector<std::vector<SimpleTypeRank>> pseudo_levi_successors(
    const std::vector<SimpleTypeRank>& state);

struct StratumReport {
  PseudoLevi pseudo_levi;
  long dim_stratum_upper = 0;  // (2g-2) dim H
  long codim_lower = 0;        // (2g-2) (dim G - dim H)
};

StratumReport stratum_report(const RootSystem& rs, GenusDatum g, const PseudoLevi& pl);

/// Minimum codimension bound over proper pseudo-Levis of positive dimension;
/// nullopt means there are no such strata.
std::optional<long> min_endoscopic_codim(const RootSystem& rs, GenusDatum g);

}  // namespace charvar
