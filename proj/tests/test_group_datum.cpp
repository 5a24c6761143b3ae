#include <doctest.h>

#include "charvar/errors.hpp"
#include "charvar/group_datum.hpp"

using namespace charvar;

namespace {

ReductiveGroupDatum simple_datum(SimpleTypeRank tr, IsogenyKind kind) {
  ReductiveGroupDatum d;
  d.factors.push_back({tr, {kind, {}}});
  return d;
}

}  // namespace

TEST_CASE("centers of the simply connected groups") {
  for (int n = 1; n <= 8; ++n)
    CHECK(center_of_simply_connected({'A', n}).invariant_factors == std::vector<Int>{n + 1});
  for (int n = 2; n <= 8; ++n) {
    CHECK(center_of_simply_connected({'B', n}).invariant_factors == std::vector<Int>{2});
    CHECK(center_of_simply_connected({'C', n}).invariant_factors == std::vector<Int>{2});
  }
  CHECK(center_of_simply_connected({'D', 4}).invariant_factors == std::vector<Int>{2, 2});
  CHECK(center_of_simply_connected({'D', 5}).invariant_factors == std::vector<Int>{4});
  CHECK(center_of_simply_connected({'D', 6}).invariant_factors == std::vector<Int>{2, 2});
  CHECK(center_of_simply_connected({'D', 7}).invariant_factors == std::vector<Int>{4});
  CHECK(center_of_simply_connected({'E', 6}).invariant_factors == std::vector<Int>{3});
  CHECK(center_of_simply_connected({'E', 7}).invariant_factors == std::vector<Int>{2});
  CHECK(center_of_simply_connected({'E', 8}).trivial());
  CHECK(center_of_simply_connected({'F', 4}).trivial());
  CHECK(center_of_simply_connected({'G', 2}).trivial());
}

TEST_CASE("subgroup invariant factors") {
  using VV = std::vector<std::vector<Int>>;
  CHECK(subgroup_invariant_factors({2, 2}, VV{{1, 0}, {0, 1}}).invariant_factors ==
        std::vector<Int>{2, 2});
  CHECK(subgroup_invariant_factors({4}, VV{{2}}).invariant_factors == std::vector<Int>{2});
  CHECK(subgroup_invariant_factors({6}, VV{{2}}).invariant_factors == std::vector<Int>{3});
  CHECK(subgroup_invariant_factors({2, 4}, VV{{1, 2}}).invariant_factors == std::vector<Int>{2});
  CHECK(subgroup_invariant_factors({4, 4}, VV{{1, 0}, {0, 2}}).invariant_factors ==
        std::vector<Int>{2, 4});
  CHECK(subgroup_invariant_factors({5}, VV{}).trivial());
  CHECK(subgroup_invariant_factors({12}, VV{{4}}).invariant_factors == std::vector<Int>{3});
}

TEST_CASE("connected components per isogeny type") {
  CHECK(connected_components(parse_group_spec("SL2")).size() == 1);
  CHECK(connected_components(parse_group_spec("PGL2")).size() == 2);
  // SO5 = adjoint C2.
  CHECK(connected_components(parse_group_spec("SO5")).size() == 2);
  CHECK(connected_components(simple_datum({'D', 4}, IsogenyKind::Adjoint)).size() == 4);
  CHECK(connected_components(parse_group_spec("SO8")).size() == 2);
  auto comps = connected_components(parse_group_spec("PGL4"));
  CHECK(comps.size() == 4);
  CHECK(comps[0].is_identity());
}

TEST_CASE("fundamental group of the derived subgroup") {
  CHECK(fundamental_group_of_derived(parse_group_spec("SL2")).trivial());
  CHECK(fundamental_group_of_derived(parse_group_spec("PGL4")).invariant_factors ==
        std::vector<Int>{4});
  CHECK(fundamental_group_of_derived(parse_group_spec("SO8")).invariant_factors ==
        std::vector<Int>{2});
  ReductiveGroupDatum prod;
  prod.factors.push_back({{'A', 2}, {IsogenyKind::SimplyConnected, {}}});
  prod.factors.push_back({{'A', 1}, {IsogenyKind::Adjoint, {}}});
  CHECK(fundamental_group_of_derived(prod).invariant_factors == std::vector<Int>{2});
}

TEST_CASE("dims of group data") {
  CHECK(dims(parse_group_spec("SL2")) == std::pair<long, long>{3, 0});
  CHECK(dims(parse_group_spec("GL2")) == std::pair<long, long>{4, 1});
  CHECK(dims(parse_group_spec("Sp4")) == std::pair<long, long>{10, 0});
  CHECK(dims(parse_group_spec("T3")) == std::pair<long, long>{3, 3});
  CHECK(dims(parse_group_spec("E8")) == std::pair<long, long>{248, 0});
}

TEST_CASE("named group parsing") {
  auto sl2 = parse_group_spec("SL2");
  REQUIRE(sl2.factors.size() == 1);
  CHECK(sl2.factors[0].type == SimpleTypeRank{'A', 1});
  CHECK(sl2.factors[0].isogeny.kind == IsogenyKind::SimplyConnected);

  auto so7 = parse_group_spec("SO7");
  CHECK(so7.factors[0].type == SimpleTypeRank{'B', 3});
  CHECK(so7.factors[0].isogeny.kind == IsogenyKind::Adjoint);

  auto spin10 = parse_group_spec("Spin10");
  CHECK(spin10.factors[0].type == SimpleTypeRank{'D', 5});
  CHECK(spin10.factors[0].isogeny.kind == IsogenyKind::SimplyConnected);

  auto so8 = parse_group_spec("SO8");
  CHECK(so8.factors[0].type == SimpleTypeRank{'D', 4});
  CHECK(so8.factors[0].isogeny.kind == IsogenyKind::Intermediate);

  CHECK(parse_group_spec("F4").factors[0].type == SimpleTypeRank{'F', 4});
  CHECK(parse_group_spec("T2").central_torus_rank == 2);
  CHECK(parse_group_spec("GL1").central_torus_rank == 1);

  CHECK_THROWS_AS(parse_group_spec("SO4"), ValidationError);
  CHECK_THROWS_AS(parse_group_spec("Sp3"), ValidationError);
  CHECK_THROWS_AS(parse_group_spec("XYZ"), ValidationError);
}

TEST_CASE("JSON group parsing") {
  auto d = parse_group_spec(R"({"factors": [{"family": "C", "rank": 2, "isogeny": "sc"},
                                            {"family": "A", "rank": 1, "isogeny": "adjoint"}],
                                "central_torus_rank": 1})");
  REQUIRE(d.factors.size() == 2);
  CHECK(d.factors[0].type == SimpleTypeRank{'C', 2});
  CHECK(d.factors[1].isogeny.kind == IsogenyKind::Adjoint);
  CHECK(d.central_torus_rank == 1);

  auto inter = parse_group_spec(
      R"({"factors": [{"family": "D", "rank": 4, "isogeny": {"subgroup": [[1, 0]]}}]})");
  CHECK(inter.factors[0].isogeny.kind == IsogenyKind::Intermediate);

  CHECK_THROWS_AS(parse_group_spec("{bad json"), ValidationError);
  CHECK_THROWS_AS(parse_group_spec(R"({"factors": [{"family": "D", "rank": 3}]})"),
                  ValidationError);
}

TEST_CASE("twist parsing and validation") {
  auto sl2 = parse_group_spec("SL2");
  CHECK(parse_twist_spec(sl2, "identity").is_identity());
  CHECK(parse_twist_spec(sl2, "1").is_identity());
  auto minus = parse_twist_spec(sl2, "-1");
  CHECK_FALSE(minus.is_identity());
  CHECK(minus.residues == std::vector<std::vector<Int>>{{1}});
  CHECK(parse_twist_spec(sl2, "[[1]]") == minus);
  CHECK_THROWS_AS(parse_twist_spec(sl2, "[[2]]"), ValidationError);
  CHECK_THROWS_AS(parse_twist_spec(parse_group_spec("E8"), "-1"), ValidationError);

  CHECK(twist_in_fundamental_group(sl2, parse_twist_spec(sl2, "1")));
  CHECK_FALSE(twist_in_fundamental_group(sl2, minus));
  auto pgl2 = parse_group_spec("PGL2");
  CHECK(twist_in_fundamental_group(pgl2, parse_twist_spec(pgl2, "-1")));
}

TEST_CASE("twist labels for analysis") {
  // Simply connected factors expose every central twist.
  CHECK(all_twist_labels(parse_group_spec("SL2")).size() == 2);
  CHECK(all_twist_labels(parse_group_spec("Sp4")).size() == 2);
  CHECK(all_twist_labels(parse_group_spec("E8")).size() == 1);
  CHECK(all_twist_labels(parse_group_spec("SO8")).size() == 2);
  auto labels = all_twist_labels(parse_group_spec("SL2"));
  CHECK(labels[0].is_identity());
}
