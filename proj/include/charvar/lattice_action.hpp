#pragma once

#include <vector>

#include "charvar/intlinalg.hpp"

namespace charvar {

/// A finite abelian group acting on a torus, given on the cocharacter
/// lattice by commuting finite-order integer matrices of determinant +-1.
struct LatticeAction {
  int rank = 0;
  std::vector<IntMat> generators;
};

/// Throws ValidationError unless every generator is rank x rank, has
/// determinant +-1 and finite order (capped at 10^4), and all pairs commute.
void validate(const LatticeAction& act);

/// Rank of the fixed sublattice: kernel of the stacked (gamma - 1).
long fixed_rank(const LatticeAction& act);

/// Rank of the sublattice spanned by the columns of all (gamma - 1).
long commutator_rank(const LatticeAction& act);

/// Rank of the intersection of the fixed sublattice with the span of the
/// (gamma - 1) columns; zero means the corresponding subtori meet finitely.
long intersection_rank(const LatticeAction& act);

/// fixed_rank + commutator_rank == rank.
bool verify_torus_lemma(const LatticeAction& act);

}  // namespace charvar
