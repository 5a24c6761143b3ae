#pragma once

#include <string>
#include <vector>

#include "charvar/group_datum.hpp"
#include "charvar/parabolics.hpp"
#include "charvar/root_system.hpp"

namespace charvar {

/// Genus of the surface group; only g >= 2 is supported.
struct GenusDatum {
  int g = 2;
};

void validate_genus(const GenusDatum& g);

/// Dimension of the representation variety: (2g-1) dim G + dim Z_G.
long dim_rep(const ReductiveGroupDatum& datum, GenusDatum g);

/// Dimension of the character variety: (2g-2) dim G + 2 dim Z_G.
long dim_ch(const ReductiveGroupDatum& datum, GenusDatum g);

/// Lower bound (2g-3) dim U - dim Z_L on the codimension of the locus of
/// representations reducible to the standard parabolic P_I. I must be proper.
long codim_reducible_bound(const RootSystem& rs, GenusDatum g, const std::vector<int>& levi_nodes);

/// Lower bound 2(2g-2) dim U - 2 dim Z_L on the codimension of the image of
/// the Levi character variety inside the full one. Excluded: (g, rank) = (2, 1).
long levi_image_codim_in_ch(const RootSystem& rs, GenusDatum g, const std::vector<int>& levi_nodes);

enum class ReducibleTag { ge4, ge2_exception, rank1 };

std::string to_string(ReducibleTag tag);

struct CodimEntry {
  int removed_node = 0;
  long dim_U = 0;
  long dim_ZL = 0;
  long bound = 0;  // lower bound, never an exact codimension
};

struct CodimReport {
  std::vector<CodimEntry> entries;  // one per maximal parabolic
  long min_bound = 0;
  ReducibleTag tag = ReducibleTag::ge4;
  std::string note;  // recorded facts covering the small cases
};

/// Evaluates the codimension bound over all maximal parabolics and
/// classifies the reducible locus.
CodimReport reducible_locus_report(const RootSystem& rs, GenusDatum g);

}  // namespace charvar
