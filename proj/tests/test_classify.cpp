#include <doctest.h>

#include "charvar/classify.hpp"
#include "charvar/errors.hpp"

using namespace charvar;

namespace {

ComponentVerdict verdict_for(const std::string& group, int g, const std::string& twist) {
  auto datum = parse_group_spec(group);
  return classify_component(datum, {g}, parse_twist_spec(datum, twist));
}

}  // namespace

TEST_CASE("verdict grid: rank one") {
  auto sl2_id = verdict_for("SL2", 2, "1");
  CHECK(sl2_id.normal);
  CHECK(sl2_id.symplectic);
  CHECK_FALSE(sl2_id.terminal);
  CHECK(sl2_id.q_factorial == QFactorial::True);
  REQUIRE(sl2_id.rep_properties.size() == 1);
  CHECK_FALSE(sl2_id.rep_properties[0].locally_factorial);

  auto sl2_tw = verdict_for("SL2", 2, "-1");
  CHECK(sl2_tw.terminal);
  CHECK(sl2_tw.q_factorial == QFactorial::Unknown);
  CHECK(sl2_tw.rep_properties[0].locally_factorial);

  CHECK(verdict_for("SL2", 3, "1").terminal);
  CHECK(verdict_for("SL2", 3, "1").rep_properties[0].locally_factorial);

  // PGL2: the nonidentity component is terminal at genus 2.
  auto pgl2 = parse_group_spec("PGL2");
  auto comps = connected_components(pgl2);
  REQUIRE(comps.size() == 2);
  CHECK_FALSE(classify_component(pgl2, {2}, comps[0]).terminal);
  CHECK(classify_component(pgl2, {2}, comps[1]).terminal);
}

TEST_CASE("verdict grid: no A1 factor means terminal at every genus") {
  for (const std::string& name : {"SL3", "Sp4", "SO5", "Spin7", "SO7", "Spin8", "SO8",
                                  "F4", "G2", "E8", "PGL3"})
    for (int g = 2; g <= 3; ++g) {
      auto datum = parse_group_spec(name);
      for (const CenterElement& z : all_twist_labels(datum)) {
        CAPTURE(name);
        CAPTURE(g);
        CHECK(classify_component(datum, {g}, z).terminal);
      }
    }
}

TEST_CASE("terminality is monotone in the genus") {
  for (const std::string& name : {"SL2", "Sp4", "SO8"}) {
    auto datum = parse_group_spec(name);
    for (const CenterElement& z : all_twist_labels(datum))
      for (int g = 2; g <= 4; ++g) {
        bool now = classify_component(datum, {g}, z).terminal;
        bool next = classify_component(datum, {g + 1}, z).terminal;
        CHECK((!now || next));
      }
  }
}

TEST_CASE("q-factoriality claims") {
  for (const std::string& name : {"SL2", "Sp4", "PGL2", "SO8", "E8"}) {
    auto datum = parse_group_spec(name);
    for (const CenterElement& z : all_twist_labels(datum)) {
      auto v = classify_component(datum, {2}, z);
      if (z.is_identity())
        CHECK(v.q_factorial == QFactorial::True);
      else
        CHECK(v.q_factorial == QFactorial::Unknown);
      CHECK_FALSE(v.q_factorial_cite.rule.empty());
    }
  }
}

TEST_CASE("A1 x (no-A1) product: the A1 coordinate decides at genus 2") {
  auto datum = parse_group_spec(
      R"({"factors": [{"family": "A", "rank": 1, "isogeny": "sc"},
                      {"family": "C", "rank": 2, "isogeny": "sc"}]})");
  auto labels = all_twist_labels(datum);
  REQUIRE(labels.size() == 4);
  for (const CenterElement& z : labels) {
    bool a1_twisted = (z.residues[0][0] != 0);
    CHECK(classify_component(datum, {2}, z).terminal == a1_twisted);
    CHECK(classify_component(datum, {3}, z).terminal);
  }
}

TEST_CASE("rep variety properties") {
  auto sl2 = parse_group_spec("SL2");
  auto id = identity_center_element(sl2);
  auto p = rep_variety_properties(sl2, {2}, id);
  CHECK(p.normal);
  CHECK_FALSE(p.locally_factorial);
  CHECK(rep_variety_properties(sl2, {3}, id).locally_factorial);
  CHECK(rep_variety_properties(parse_group_spec("F4"), {2},
                               identity_center_element(parse_group_spec("F4")))
            .locally_factorial);

  auto two = parse_group_spec(
      R"({"factors": [{"family": "A", "rank": 1}, {"family": "A", "rank": 1}]})");
  CHECK_THROWS_AS((void)rep_variety_properties(two, {2}, identity_center_element(two)),
                  ValidationError);
}

TEST_CASE("invalid twists are rejected") {
  auto so8 = parse_group_spec("SO8");
  // (0,1) is central in Spin8 but lies outside the chosen SO8 kernel.
  CenterElement outside;
  outside.residues = {{Int(0), Int(1)}};
  CHECK_THROWS_AS((void)classify_component(so8, {2}, outside), ValidationError);
  CenterElement bad_range;
  bad_range.residues = {{Int(2), Int(0)}};
  CHECK_THROWS_AS((void)classify_component(so8, {2}, bad_range), ValidationError);
}

TEST_CASE("analyze: C2 report values") {
  AnalysisRequest req;
  req.datum = parse_group_spec("C2");
  req.genus = {2};
  auto report = analyze(req);  // all components
  CHECK(report.at("dim_ch").get<long>() == 20);
  CHECK(report.at("dim_rep").get<long>() == 30);
  REQUIRE(report.at("factors").size() == 1);
  CHECK(report.at("factors")[0].at("reducible_locus").at("min_bound").get<long>() == 2);
  CHECK(report.at("factors")[0].at("min_endoscopic_codim").get<long>() == 8);
  REQUIRE(report.at("components").size() == 2);
  for (const auto& comp : report.at("components")) {
    CHECK(comp.at("terminal").get<bool>());
    CHECK(comp.at("normal").get<bool>());
    CHECK(comp.at("symplectic").get<bool>());
  }
  // Deterministic serialization.
  CHECK(analyze(req).dump() == report.dump());
  // Text rendering mentions the headline numbers.
  std::string text = render_report_text(report);
  CHECK(text.find("dim Ch = 20") != std::string::npos);
}

TEST_CASE("analyze: pure torus is trivially smooth") {
  AnalysisRequest req;
  req.datum = parse_group_spec("T3");
  req.genus = {2};
  auto report = analyze(req);
  CHECK(report.at("dim_ch").get<long>() == 12);
  CHECK(report.at("dim_rep").get<long>() == 12);
  REQUIRE(report.at("components").size() == 1);
  CHECK(report.at("components")[0].at("terminal").get<bool>());
  CHECK(report.at("components")[0].at("q_factorial").get<std::string>() == "true");
}

TEST_CASE("analyze: A1 endoscopy reports no strata") {
  AnalysisRequest req;
  req.datum = parse_group_spec("SL2");
  req.genus = {2};
  req.twist = identity_center_element(req.datum);
  auto report = analyze(req);
  CHECK(report.at("factors")[0].at("min_endoscopic_codim").is_null());
  CHECK(report.at("factors")[0].at("endoscopic_strata").empty());
}
