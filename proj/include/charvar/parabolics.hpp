#pragma once

#include <map>
#include <vector>

#include "charvar/root_system.hpp"

namespace charvar {

/// Standard parabolic P_I with Levi data: I is the subset of simple-root
/// indices spanning the Levi; I = all nodes gives G, I = {} gives a Borel.
struct LeviDatum {
  std::vector<int> levi_nodes;  // sorted
  long levi_positive_root_count = 0;
  long dim_L = 0;
  long dim_U = 0;
  long dim_ZL = 0;
  std::vector<SimpleTypeRank> levi_type;  // sorted multiset of semisimple components
};

/// Levi datum of the standard parabolic attached to I.
LeviDatum levi_datum(const RootSystem& rs, std::vector<int> levi_nodes);

/// One Levi datum per single-node removal, ordered by removed node index.
std::vector<LeviDatum> enumerate_maximal_parabolics(const RootSystem& rs);

/// The subset I defining P_lambda for a cocharacter lambda in fundamental
/// coweight coordinates. A non-dominant lambda is first moved to the
/// dominant chamber by simple reflections.
std::vector<int> parabolic_from_cocharacter(const RootSystem& rs, std::vector<long> lam);

/// Weights of the one-dimensional Levi center on the roots of U, for
/// |I| = rank - 1. The generator is the primitive dominant vector of the
/// rank-1 lattice of coroot-lattice elements pairing to zero with I.
std::map<Root, long> center_weights_on_U(const RootSystem& rs, const std::vector<int>& levi_nodes);

}  // namespace charvar
