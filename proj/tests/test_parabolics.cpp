#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "charvar/errors.hpp"
#include "charvar/parabolics.hpp"

using namespace charvar;

namespace {

std::vector<long> maximal_levi_positive_counts(const SimpleTypeRank& tr) {
  RootSystem rs = build_root_system(tr);
  std::vector<long> out;
  for (const LeviDatum& l : enumerate_maximal_parabolics(rs))
    out.push_back(l.levi_positive_root_count);
  return out;
}

std::multiset<long> weight_multiset(const std::map<Root, long>& w) {
  std::multiset<long> out;
  for (const auto& [root, weight] : w) out.insert(weight);
  return out;
}

}  // namespace

TEST_CASE("maximal parabolic tables for the classical small ranks") {
  // Ordered by removed node (Bourbaki numbering).
  CHECK(maximal_levi_positive_counts({'B', 4}) == std::vector<long>{9, 5, 4, 6});
  CHECK(maximal_levi_positive_counts({'C', 4}) == std::vector<long>{9, 5, 4, 6});
  CHECK(maximal_levi_positive_counts({'B', 3}) == std::vector<long>{4, 2, 3});
  CHECK(maximal_levi_positive_counts({'C', 3}) == std::vector<long>{4, 2, 3});
  CHECK(maximal_levi_positive_counts({'D', 4}) == std::vector<long>{6, 3, 6, 6});
  CHECK(maximal_levi_positive_counts({'F', 4}) == std::vector<long>{9, 4, 4, 9});
  CHECK(maximal_levi_positive_counts({'G', 2}) == std::vector<long>{1, 1});
  CHECK(maximal_levi_positive_counts({'B', 2}) == std::vector<long>{1, 1});
}

TEST_CASE("Levi dimension identities across subsets") {
  std::mt19937 rng(23);
  for (const auto& tr : std::vector<SimpleTypeRank>{
           {'A', 3}, {'B', 3}, {'C', 4}, {'D', 5}, {'F', 4}, {'G', 2}, {'E', 6}}) {
    RootSystem rs = build_root_system(tr);
    CAPTURE(tr.to_string());
    std::uniform_int_distribution<int> coin(0, 1);
    for (int trial = 0; trial < 12; ++trial) {
      std::vector<int> nodes;
      for (int i = 0; i < rs.rank(); ++i)
        if (coin(rng)) nodes.push_back(i);
      LeviDatum l = levi_datum(rs, nodes);
      CHECK(l.dim_L + 2 * l.dim_U == rs.dim());
      CHECK(l.dim_ZL == rs.rank() - static_cast<int>(nodes.size()));
      CHECK(l.dim_L == rs.rank() + 2 * l.levi_positive_root_count);
      long type_rank = 0;
      for (const auto& t : l.levi_type) type_rank += t.rank;
      CHECK(type_rank == static_cast<long>(nodes.size()));
    }
    // Extremes: full set gives G, empty set gives the Borel.
    std::vector<int> all(rs.rank());
    for (int i = 0; i < rs.rank(); ++i) all[i] = i;
    CHECK(levi_datum(rs, all).dim_U == 0);
    CHECK(levi_datum(rs, {}).dim_U == static_cast<long>(rs.positive.size()));
  }
}

TEST_CASE("parabolic from cocharacter") {
  RootSystem a2 = build_root_system({'A', 2});
  // Dominant: I = vanishing coordinates.
  CHECK(parabolic_from_cocharacter(a2, {0, 1}) == std::vector<int>{0});
  CHECK(parabolic_from_cocharacter(a2, {2, 3}) == std::vector<int>{});
  CHECK(parabolic_from_cocharacter(a2, {0, 0}) == std::vector<int>{0, 1});
  // Non-dominant cocharacters are first moved into the dominant chamber.
  CHECK(parabolic_from_cocharacter(a2, {-1, 0}) == std::vector<int>{0});
  CHECK(parabolic_from_cocharacter(a2, {-1, -1}).size() == 0);

  // Conjugating by a Weyl reflection never changes the number of zero walls.
  std::mt19937 rng(31);
  for (const auto& tr : std::vector<SimpleTypeRank>{{'B', 3}, {'C', 2}, {'D', 4}, {'G', 2}}) {
    RootSystem rs = build_root_system(tr);
    CAPTURE(tr.to_string());
    std::uniform_int_distribution<long> coord(-2, 2);
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<long> lam(rs.rank());
      for (auto& x : lam) x = coord(rng);
      auto nodes = parabolic_from_cocharacter(rs, lam);
      // The Levi subset has one node per zero coordinate of the dominant form.
      LeviDatum l = levi_datum(rs, nodes);
      CHECK(l.dim_ZL == rs.rank() - static_cast<long>(nodes.size()));
    }
  }
}

TEST_CASE("center weights on the unipotent radical: C2 and A2 values") {
  RootSystem c2 = build_root_system({'C', 2});
  // Levi GL2 (keep the short node alpha_1): all three weights are 2.
  CHECK(weight_multiset(center_weights_on_U(c2, {0})) == std::multiset<long>{2, 2, 2});
  // Levi C* x SL2 (keep the long node alpha_2): weights 1, 1, 2.
  CHECK(weight_multiset(center_weights_on_U(c2, {1})) == std::multiset<long>{1, 1, 2});

  RootSystem a2 = build_root_system({'A', 2});
  // Primitive coroot-lattice generator pairs to 3 on both radical roots.
  CHECK(weight_multiset(center_weights_on_U(a2, {0})) == std::multiset<long>{3, 3});
  CHECK(weight_multiset(center_weights_on_U(a2, {1})) == std::multiset<long>{3, 3});
}

TEST_CASE("center weights are positive on every maximal parabolic") {
  for (const auto& tr : std::vector<SimpleTypeRank>{
           {'A', 4}, {'B', 3}, {'C', 3}, {'D', 4}, {'F', 4}, {'G', 2}, {'E', 6}}) {
    RootSystem rs = build_root_system(tr);
    CAPTURE(tr.to_string());
    for (int removed = 0; removed < rs.rank(); ++removed) {
      std::vector<int> nodes;
      for (int i = 0; i < rs.rank(); ++i)
        if (i != removed) nodes.push_back(i);
      auto weights = center_weights_on_U(rs, nodes);
      LeviDatum l = levi_datum(rs, nodes);
      CHECK(static_cast<long>(weights.size()) == l.dim_U);
      for (const auto& [root, w] : weights) CHECK(w > 0);
    }
  }
  // Non-maximal subsets are rejected.
  RootSystem b3 = build_root_system({'B', 3});
  CHECK_THROWS_AS((void)center_weights_on_U(b3, {0}), ValidationError);
}
