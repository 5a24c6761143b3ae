#pragma once

#include <string>
#include <vector>

namespace charvar {

/// Irreducible type in the Killing-Cartan classification.
/// Bourbaki node numbering throughout:
///   A_n, B_n, C_n: a chain alpha_1 - ... - alpha_n; for B_n the short root
///   is alpha_n, for C_n the long root is alpha_n.
///   D_n: chain alpha_1 - ... - alpha_{n-2} with alpha_{n-1} and alpha_n
///   both attached to alpha_{n-2}.
///   E_n: chain alpha_1 - alpha_3 - alpha_4 - ... - alpha_n, with alpha_2
///   attached to alpha_4.
///   F_4: alpha_1, alpha_2 long; alpha_3, alpha_4 short; double bond 2-3.
///   G_2: alpha_1 short, alpha_2 long.
struct SimpleTypeRank {
  char family = 'A';  // one of A B C D E F G
  int rank = 1;

  auto operator<=>(const SimpleTypeRank&) const = default;
  std::string to_string() const;
};

/// Throws ValidationError if the rank is outside the admissible range
/// (A: >=1; B, C: >=2; D: >=4 since D2 = A1 x A1 and D3 = A3; E: 6..8;
/// F: 4; G: 2).
void validate_type(const SimpleTypeRank& tr);

SimpleTypeRank parse_type(const std::string& family, int rank);

/// Number of positive roots, by the classical closed forms.
long positive_count_closed_form(const SimpleTypeRank& tr);

/// Roots are integer vectors in simple-root coordinates, so simple root i
/// is the i-th standard unit vector.
using Root = std::vector<int>;

struct RootSystem {
  SimpleTypeRank typerank;
  /// cartan[i][j] = <alpha_i, alpha_j^vee>
  std::vector<std::vector<int>> cartan;
  /// Symmetrizer d with (alpha_i, alpha_j) proportional to cartan[i][j] * d[j].
  std::vector<int> symmetrizer;
  std::vector<Root> all_roots;  // lexicographically sorted
  std::vector<Root> positive;   // lexicographically sorted

  int rank() const { return typerank.rank; }
  long dim() const { return rank() + static_cast<long>(all_roots.size()); }

  /// <beta, alpha_j^vee> for beta in simple-root coordinates.
  long pairing_with_simple_coroot(const Root& beta, int j) const;
  /// Scaled invariant inner product (x, y).
  long inner(const Root& x, const Root& y) const;
  /// <x, beta^vee> = 2 (x, beta) / (beta, beta) for any root beta.
  long pairing_with_coroot(const Root& x, const Root& beta) const;
};

std::vector<std::vector<int>> cartan_matrix(const SimpleTypeRank& tr);
std::vector<int> cartan_symmetrizer(const SimpleTypeRank& tr);

/// Closes the simple roots under simple reflections
/// s_i(beta) = beta - <beta, alpha_i^vee> alpha_i. Deterministic output.
RootSystem build_root_system(const SimpleTypeRank& tr);

std::vector<Root> positive_roots(const RootSystem& rs);

/// The unique root of maximal height.
Root highest_root(const RootSystem& rs);

struct ExtendedDiagram {
  RootSystem base;
  Root affine_node;         // the lowest root, -theta
  std::vector<Root> nodes;  // simple roots followed by the affine node
  /// (rank+1) x (rank+1) pairings <node_i, node_j^vee>; singular by construction.
  std::vector<std::vector<int>> ext_cartan;
};

ExtendedDiagram extended_diagram(const RootSystem& rs);

/// Decomposes a diagram given by generalized Cartan pairings
/// (2 on the diagonal, <=0 off it) into irreducible components and names
/// each one. B2 is reported as C2. Sorted output.
std::vector<SimpleTypeRank> classify_diagram(const std::vector<std::vector<int>>& pairings);

}  // namespace charvar
