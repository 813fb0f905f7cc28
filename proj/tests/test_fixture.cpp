#include <gtest/gtest.h>

#include "wlab/fixture.hpp"

using namespace wlab;

namespace {

const std::string kHeader =
    "surface = CP2_6_conic\n"
    "class = 6,-2,-2,-2,-2,-2,-2\n"
    "minus_two_class = 2,-1,-1,-1,-1,-1,-1\n"
    "chi_source = -1\n"
    "components = S:nonorientable\n"
    "r = 5\n";

}  // namespace

TEST(Fixture, ParsesAggregated) {
  const auto set = parse_fixture_text(kHeader + "mode = aggregated\nrow = k:0 n_plus:78 n_minus:78  # comment\n");
  EXPECT_EQ(set.surface, &models::cp2_6_conic());
  EXPECT_EQ(set.source.euler_char, -1);
  EXPECT_EQ(set.source.selected_component, "S");
  ASSERT_EQ(set.rows.size(), 1u);
  EXPECT_EQ(set.rows[0].n_plus, 78);
}

TEST(Fixture, CurveDefaults) {
  const auto set = parse_fixture_text(kHeader + "mode = perCurve\ncurve = k:1 m:1 alpha:2 beta:0\n");
  ASSERT_EQ(set.curves.size(), 1u);
  EXPECT_EQ(set.curves[0].mass_in_s, 1u);
  EXPECT_EQ(set.curves[0].count, 1);
}

TEST(Fixture, Errors) {
  const std::vector<std::string> bad = {
      kHeader + "mode = aggregated\n",                                             // no rows
      kHeader + "mode = sometimes\nrow = k:0 n_plus:1 n_minus:1\n",               // mode
      kHeader + "mode = aggregated\nrow = k:0 n_plus:x n_minus:1\n",              // integer
      kHeader + "mode = aggregated\nrow = k:0 n_plus:1\n",                        // missing field
      kHeader + "mode = aggregated\nrow = k:0 n_plus:1 n_minus:1 extra:2\n",      // unknown field
      kHeader + "mode = aggregated\ncolour = blue\nrow = k:0 n_plus:1 n_minus:1\n",
      kHeader + "mode = aggregated\nr = 3\nrow = k:0 n_plus:1 n_minus:1\n",       // repeated key
      kHeader + "mode = aggregated\ncurve = k:0 m:0 alpha:0 beta:0\n",            // curve in aggregated file
      kHeader + "mode = aggregated\njust some text\n",
      "surface = P7\n",
  };
  for (const auto& text : bad) EXPECT_THROW(parse_fixture_text(text), InputError) << text;
  EXPECT_THROW(load_fixture("/nonexistent/file.fix"), InputError);
}

TEST(Fixture, WriteRoundTrip) {
  const auto set = load_fixture(std::filesystem::path(WLAB_FIXTURE_DIR) / "synthetic_per_curve.fix");
  const auto again = parse_fixture_text(write_fixture(set));
  EXPECT_EQ(again.rows, set.rows);
  EXPECT_EQ(again.curves.size(), set.curves.size());
  EXPECT_EQ(again.source, set.source);
  EXPECT_EQ(write_fixture(again), write_fixture(set));
}

TEST(Json, RoundTrip) {
  InvariantResult res;
  res.surface = "F0";
  res.class_coeffs = {2, 3};
  res.real_structure = RealStructureDescriptor(0, parse_components("T2:orientable"));
  res.r = 9;
  res.value = 48;
  res.provenance = "floor diagrams";
  EXPECT_EQ(invariant_result_from_json(to_json(res)), res);

  res.value = pow2(100);
  const auto j = to_json(res);
  EXPECT_TRUE(j["value"].is_string());
  EXPECT_EQ(invariant_result_from_json(nlohmann::json::parse(j.dump())), res);

  EXPECT_THROW(invariant_result_from_json(nlohmann::json::parse("{\"surface\":\"F0\"}")), InputError);
}
