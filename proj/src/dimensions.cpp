#include "charvar/dimensions.hpp"

#include <algorithm>

#include "charvar/errors.hpp"

namespace charvar {

void validate_genus(const GenusDatum& g) {
  if (g.g < 2) throw ValidationError("genus must be at least 2");
}

long dim_rep(const ReductiveGroupDatum& datum, GenusDatum g) {
  validate_genus(g);
  auto [dim_g, dim_z] = dims(datum);
  return (2L * g.g - 1) * dim_g + dim_z;
}

long dim_ch(const ReductiveGroupDatum& datum, GenusDatum g) {
  validate_genus(g);
  auto [dim_g, dim_z] = dims(datum);
  return (2L * g.g - 2) * dim_g + 2 * dim_z;
}

long codim_reducible_bound(const RootSystem& rs, GenusDatum g,
                           const std::vector<int>& levi_nodes) {
  validate_genus(g);
  if (static_cast<int>(levi_nodes.size()) >= rs.rank())
    throw ValidationError("codim_reducible_bound requires a proper parabolic");
  LeviDatum ld = levi_datum(rs, levi_nodes);
  return (2L * g.g - 3) * ld.dim_U - ld.dim_ZL;
}

long levi_image_codim_in_ch(const RootSystem& rs, GenusDatum g,
                            const std::vector<int>& levi_nodes) {
  validate_genus(g);
  if (static_cast<int>(levi_nodes.size()) >= rs.rank())
    throw ValidationError("levi_image_codim_in_ch requires a proper parabolic");
  if (g.g == 2 && rs.rank() == 1)
    throw ValidationError("levi_image_codim_in_ch excludes (g, rank) = (2, 1)");
  LeviDatum ld = levi_datum(rs, levi_nodes);
  return 2 * (2L * g.g - 2) * ld.dim_U - 2 * ld.dim_ZL;
}

CodimReport reducible_locus_report(const RootSystem& rs, GenusDatum g) {
  validate_genus(g);
  CodimReport rep;

  if (rs.typerank == SimpleTypeRank{'A', 1}) {
    rep.tag = ReducibleTag::rank1;
    rep.min_bound = 1;
    rep.note =
        "rank 1: the reducible locus has positive codimension (Simpson); "
        "the parabolic bound is vacuous here";
    return rep;
  }

  auto maximals = enumerate_maximal_parabolics(rs);
  bool first = true;
  for (int removed = 0; removed < rs.rank(); ++removed) {
    const LeviDatum& ld = maximals[removed];
    CodimEntry e;
    e.removed_node = removed;
    e.dim_U = ld.dim_U;
    e.dim_ZL = ld.dim_ZL;
    e.bound = (2L * g.g - 3) * ld.dim_U - ld.dim_ZL;
    rep.entries.push_back(e);
    if (first || e.bound < rep.min_bound) rep.min_bound = e.bound;
    first = false;
  }

  if (rep.min_bound >= 4) {
    rep.tag = ReducibleTag::ge4;
    return rep;
  }

  const SimpleTypeRank& tr = rs.typerank;
  bool exceptional_type =
      (tr.family == 'A' && tr.rank >= 2 && tr.rank <= 4) ||
      ((tr.family == 'B' || tr.family == 'C') && tr.rank == 2);
  if (g.g == 2 && exceptional_type) {
    rep.tag = ReducibleTag::ge2_exception;
    if (tr.family == 'A' && tr.rank == 2) {
      rep.note =
          "raw bound is 1; codimension >= 2 follows from the known type A results "
          "(Simpson, Bellamy-Schedler) at genus 2";
      if (rep.min_bound < 1)
        throw InvariantViolation("A2 at genus 2 must have bound exactly 1");
    } else {
      rep.note = "codimension >= 2 verified; genus 2 exceptional type";
      if (rep.min_bound < 2)
        throw InvariantViolation("exceptional genus-2 type with bound < 2");
    }
    return rep;
  }
  throw InvariantViolation("reducible locus bound below 4 outside the known exceptions");
}

std::string to_string(ReducibleTag tag) {
  switch (tag) {
    case ReducibleTag::ge4: return "ge4";
    case ReducibleTag::ge2_exception: return "ge2_exception";
    case ReducibleTag::rank1: return "rank1";
  }
  return "?";
}

}  // namespace charvar
