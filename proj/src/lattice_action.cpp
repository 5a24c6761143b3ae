#include "charvar/lattice_action.hpp"

#include "charvar/errors.hpp"

namespace charvar {

namespace {

constexpr int kOrderCap = 10000;

IntMat stacked_differences(const LatticeAction& act) {
  const std::size_t n = act.rank;
  IntMat s(n * act.generators.size(), n);
  for (std::size_t k = 0; k < act.generators.size(); ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        s.at(k * n + i, j) = act.generators[k].at(i, j) - (i == j ? 1 : 0);
  return s;
}

IntMat side_by_side_differences(const LatticeAction& act) {
  const std::size_t n = act.rank;
  IntMat s(n, n * act.generators.size());
  for (std::size_t k = 0; k < act.generators.size(); ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        s.at(i, k * n + j) = act.generators[k].at(i, j) - (i == j ? 1 : 0);
  return s;
}

}  // namespace

void validate(const LatticeAction& act) {
  if (act.rank <= 0) throw ValidationError("lattice action rank must be positive");
  const std::size_t n = act.rank;
  for (const IntMat& g : act.generators) {
    if (g.rows() != n || g.cols() != n)
      throw ValidationError("generator has wrong shape");
    Int d = determinant(g);
    if (d != 1 && d != -1)
      throw ValidationError("generator must have determinant +1 or -1");
    IntMat power = g;
    const IntMat id = IntMat::identity(n);
    int order = 1;
    while (power != id) {
      power = power * g;
      if (++order > kOrderCap)
        throw ValidationError("generator order exceeds the cap; not a finite-order action");
    }
  }
  for (std::size_t a = 0; a < act.generators.size(); ++a)
    for (std::size_t b = a + 1; b < act.generators.size(); ++b)
      if (!(act.generators[a] * act.generators[b] == act.generators[b] * act.generators[a]))
        throw ValidationError("generators must commute pairwise");
}

long fixed_rank(const LatticeAction& act) {
  validate(act);
  if (act.generators.empty()) return act.rank;
  return act.rank - static_cast<long>(rank(stacked_differences(act)));
}

long commutator_rank(const LatticeAction& act) {
  validate(act);
  if (act.generators.empty()) return 0;
  return static_cast<long>(rank(side_by_side_differences(act)));
}

long intersection_rank(const LatticeAction& act) {
  validate(act);
  if (act.generators.empty()) return 0;
  auto fixed = kernel_basis(stacked_differences(act));
  IntMat cols = side_by_side_differences(act);
  long cr = static_cast<long>(rank(cols));

  // Rank of [fixed basis | commutator columns]; the spans intersect
  // trivially iff the ranks add.
  const std::size_t n = act.rank;
  IntMat joint(n, fixed.size() + cols.cols());
  for (std::size_t j = 0; j < fixed.size(); ++j)
    for (std::size_t i = 0; i < n; ++i) joint.at(i, j) = fixed[j][i];
  for (std::size_t j = 0; j < cols.cols(); ++j)
    for (std::size_t i = 0; i < n; ++i) joint.at(i, fixed.size() + j) = cols.at(i, j);
  long jr = static_cast<long>(rank(joint));
  return static_cast<long>(fixed.size()) + cr - jr;
}

bool verify_torus_lemma(const LatticeAction& act) {
  return fixed_rank(act) + commutator_rank(act) == act.rank;
}

}  // namespace charvar
