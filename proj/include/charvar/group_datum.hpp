#pragma once

#include <optional>
#include <string>
#include <vector>

#include "charvar/intlinalg.hpp"
#include "charvar/root_system.hpp"

namespace charvar {

/// Finite abelian group as invariant factors d1 | d2 | ... (each >= 2);
/// the empty list is the trivial group.
struct FiniteAbelianGroup {
  std::vector<Int> invariant_factors;

  Int order() const;
  bool trivial() const { return invariant_factors.empty(); }
  bool operator==(const FiniteAbelianGroup&) const = default;
};

/// Cyclic coordinates used for center elements of one simply connected
/// factor: the list of cyclic orders (equal to the invariant factors).
/// Elements are residue tuples against these orders.
std::vector<Int> center_cyclic_orders(const SimpleTypeRank& tr);

/// Center of the simply connected group of the given type, computed as the
/// cokernel of the transposed Cartan matrix via Smith normal form.
FiniteAbelianGroup center_of_simply_connected(const SimpleTypeRank& tr);

enum class IsogenyKind { SimplyConnected, Adjoint, Intermediate };

struct IsogenyLabel {
  IsogenyKind kind = IsogenyKind::SimplyConnected;
  /// For Intermediate: generators of the kernel subgroup, as residue tuples
  /// in the cyclic coordinates of the factor's center.
  std::vector<std::vector<Int>> subgroup_generators;
};

struct GroupFactor {
  SimpleTypeRank type;
  IsogenyLabel isogeny;
};

/// A connected reductive group as combinatorial data: almost-simple factors
/// with isogeny labels plus a central torus.
struct ReductiveGroupDatum {
  std::vector<GroupFactor> factors;
  int central_torus_rank = 0;
};

void validate_datum(const ReductiveGroupDatum& datum);

/// Element of the center of the simply connected cover: one residue tuple
/// per factor (the central torus contributes nothing).
struct CenterElement {
  std::vector<std::vector<Int>> residues;

  bool is_identity() const;
  bool operator==(const CenterElement&) const = default;
  bool operator<(const CenterElement& other) const { return residues < other.residues; }
  std::string to_string() const;
};

CenterElement identity_center_element(const ReductiveGroupDatum& datum);

/// (dim G, dim Z_G).
std::pair<long, long> dims(const ReductiveGroupDatum& datum);

/// Elements of the kernel of the isogeny from the simply connected form of
/// one factor: trivial for sc, the whole center for adjoint, the generated
/// subgroup for intermediate labels. Sorted residue tuples.
std::vector<std::vector<Int>> kernel_subgroup_elements(const GroupFactor& factor);

/// pi_1 of the derived subgroup, as an abstract finite abelian group.
FiniteAbelianGroup fundamental_group_of_derived(const ReductiveGroupDatum& datum);

/// Component labels of the character variety: the elements of pi_1 of the
/// derived subgroup, as center elements of the cover. Deterministic order,
/// identity first.
std::vector<CenterElement> connected_components(const ReductiveGroupDatum& datum);

/// True if z lies in the per-factor kernel subgroups (i.e. labels an actual
/// connected component for this isogeny type).
bool twist_in_fundamental_group(const ReductiveGroupDatum& datum, const CenterElement& z);

/// Twist labels analyzed for one factor: every center element when the
/// factor is simply connected (each z gives a twisted representation
/// variety), otherwise the kernel elements (component labels).
std::vector<std::vector<Int>> factor_twist_labels(const GroupFactor& factor);

/// Product of factor_twist_labels over the factors; sorted, identity first.
std::vector<CenterElement> all_twist_labels(const ReductiveGroupDatum& datum);

/// Checks that z is a valid element of the cover's center (residues within
/// range); throws ValidationError otherwise.
void validate_twist(const ReductiveGroupDatum& datum, const CenterElement& z);

/// Invariant factors of the subgroup of prod Z/orders[i] generated by the
/// given residue tuples.
FiniteAbelianGroup subgroup_invariant_factors(const std::vector<Int>& orders,
                                              const std::vector<std::vector<Int>>& generators);

/// Parses a group datum from JSON text (see README for the schema) or from
/// a named shorthand such as SL3, GL2, PGL4, Sp4, SO7, Spin8, F4, T2.
ReductiveGroupDatum parse_group_spec(const std::string& text);

/// Parses a twist spec: "1"/"identity", or a JSON list of residue tuples,
/// one per factor.
CenterElement parse_twist_spec(const ReductiveGroupDatum& datum, const std::string& text);

std::string datum_to_string(const ReductiveGroupDatum& datum);

}  // namespace charvar
