#include "charvar/parabolics.hpp"

#include <algorithm>
#include <set>

#include "charvar/errors.hpp"
#include "charvar/intlinalg.hpp"

namespace charvar {

namespace {

bool supported_on(const Root& beta, const std::vector<bool>& in_levi) {
  for (std::size_t i = 0; i < beta.size(); ++i)
    if (beta[i] != 0 && !in_levi[i]) return false;
  return true;
}

}  // namespace

LeviDatum levi_datum(const RootSystem& rs, std::vector<int> levi_nodes) {
  std::sort(levi_nodes.begin(), levi_nodes.end());
  levi_nodes.erase(std::unique(levi_nodes.begin(), levi_nodes.end()), levi_nodes.end());
  const int n = rs.rank();
  for (int i : levi_nodes)
    if (i < 0 || i >= n) throw ValidationError("Levi node index out of range");

  std::vector<bool> in_levi(n, false);
  for (int i : levi_nodes) in_levi[i] = true;

  LeviDatum ld;
  ld.levi_nodes = levi_nodes;
  for (const Root& beta : rs.positive)
    if (supported_on(beta, in_levi)) ++ld.levi_positive_root_count;
  ld.dim_U = static_cast<long>(rs.positive.size()) - ld.levi_positive_root_count;
  ld.dim_L = n + 2 * ld.levi_positive_root_count;
  ld.dim_ZL = n - static_cast<long>(levi_nodes.size());
  if (ld.dim_L + 2 * ld.dim_U != rs.dim())
    throw InvariantViolation("levi_datum: dim L + 2 dim U != dim G");

  if (!levi_nodes.empty()) {
    std::vector<std::vector<int>> sub(levi_nodes.size(),
                                      std::vector<int>(levi_nodes.size()));
    for (std::size_t a = 0; a < levi_nodes.size(); ++a)
      for (std::size_t b = 0; b < levi_nodes.size(); ++b)
        sub[a][b] = rs.cartan[levi_nodes[a]][levi_nodes[b]];
    ld.levi_type = classify_diagram(sub);
  }
  return ld;
}

std::vector<LeviDatum> enumerate_maximal_parabolics(const RootSystem& rs) {
  std::vector<LeviDatum> out;
  for (int removed = 0; removed < rs.rank(); ++removed) {
    std::vector<int> nodes;
    for (int i = 0; i < rs.rank(); ++i)
      if (i != removed) nodes.push_back(i);
    out.push_back(levi_datum(rs, nodes));
  }
  return out;
}

std::vector<int> parabolic_from_cocharacter(const RootSystem& rs, std::vector<long> lam) {
  const int n = rs.rank();
  if (static_cast<int>(lam.size()) != n)
    throw ValidationError("cocharacter must have one coordinate per simple root");

  // Move to the dominant chamber: in fundamental coweight coordinates,
  // s_i acts by lam_j -> lam_j - lam_i * cartan[j][i].
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i = 0; i < n; ++i) {
      if (lam[i] >= 0) continue;
      long li = lam[i];
      for (int j = 0; j < n; ++j) lam[j] -= li * rs.cartan[j][i];
      moved = true;
      break;
    }
  }

  std::vector<int> levi_nodes;
  for (int i = 0; i < n; ++i)
    if (lam[i] == 0) levi_nodes.push_back(i);

  // The root set of P_lambda must be the positive roots plus the Levi roots.
  std::vector<bool> in_levi(n, false);
  for (int i : levi_nodes) in_levi[i] = true;
  for (const Root& beta : rs.all_roots) {
    long p = 0;
    for (int i = 0; i < n; ++i) p += static_cast<long>(beta[i]) * lam[i];
    bool positive = std::all_of(beta.begin(), beta.end(), [](int x) { return x >= 0; });
    bool in_p = p >= 0;
    bool expected = positive || supported_on(beta, in_levi);
    if (in_p != expected)
      throw InvariantViolation("parabolic_from_cocharacter: root set mismatch");
  }
  return levi_nodes;
}

std::map<Root, long> center_weights_on_U(const RootSystem& rs,
                                         const std::vector<int>& levi_nodes) {
  const int n = rs.rank();
  if (static_cast<int>(levi_nodes.size()) != n - 1)
    throw ValidationError(
        "center_weights_on_U supports only one-dimensional Levi centers (|I| = rank - 1)");

  // Primitive generator of {lambda in the coroot lattice : <alpha_i, lambda> = 0
  // for i in I}, in coroot coordinates.
  IntMat m(levi_nodes.size(), n);
  for (std::size_t a = 0; a < levi_nodes.size(); ++a)
    for (int k = 0; k < n; ++k) m.at(a, k) = rs.cartan[levi_nodes[a]][k];
  std::vector<Int> lambda = primitive_kernel_vector(m);

  std::vector<bool> in_levi(n, false);
  for (int i : levi_nodes) in_levi[i] = true;

  std::map<Root, long> weights;
  for (const Root& beta : rs.positive) {
    if (supported_on(beta, in_levi)) continue;
    Int w = 0;
    for (int k = 0; k < n; ++k) w += lambda[k] * rs.pairing_with_simple_coroot(beta, k);
    weights[beta] = static_cast<long>(w);
  }

  // Normalize the generator to be dominant: all U-weights positive.
  bool any_negative = std::any_of(weights.begin(), weights.end(),
                                  [](const auto& kv) { return kv.second < 0; });
  if (any_negative)
    for (auto& [beta, w] : weights) w = -w;
  for (const auto& [beta, w] : weights)
    if (w <= 0) throw InvariantViolation("center weight on U must be nonzero of uniform sign");
  return weights;
}

}  // namespace charvar
