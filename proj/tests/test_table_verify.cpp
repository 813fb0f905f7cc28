#include <gtest/gtest.h>

#include "wlab/table.hpp"
#include "wlab/verify.hpp"

using namespace wlab;

namespace {

std::vector<RelativeCountSet> shipped() {
  std::vector<RelativeCountSet> sets;
  for (const auto& col : verify::reference_table())
    sets.push_back(load_fixture(std::filesystem::path(WLAB_FIXTURE_DIR) / col.file));
  return sets;
}

}  // namespace

TEST(Table, MatchesReferenceCells) {
  const auto t = build_table(shipped());
  ASSERT_EQ(t.columns.size(), 4u);
  const std::int64_t chis[] = {-5, -3, -1, 1};
  const int plus[4][3] = {{522, 236, 1}, {236, 140, 1}, {78, 76, 1}, {0, 36, 1}};
  const int minus[4] = {522, 236, 78, 0};
  for (int c = 0; c < 4; ++c) {
    EXPECT_EQ(t.columns[c].chi, chis[c]);
    for (std::uint32_t k = 0; k < 3; ++k) {
      EXPECT_EQ(table_cell(t, t.columns[c], k).n_plus, plus[c][k]);
      EXPECT_EQ(table_cell(t, t.columns[c], k).n_minus, k == 0 ? minus[c] : 0);
    }
    EXPECT_EQ(t.columns[c].w_minus, minus[c]);
  }
}

TEST(Table, SingleColumn) {
  const auto out = emit_table({shipped()[2]}, TableFormat::text);
  EXPECT_EQ(out.exit_code, 0);
  EXPECT_NE(out.payload.find("n+(-1)"), std::string::npos);
  EXPECT_EQ(out.payload.find("n+(-3)"), std::string::npos);
}

TEST(Table, InconsistentInputs) {
  auto sets = shipped();
  sets.push_back(sets.front());
  EXPECT_EQ(emit_table(sets, TableFormat::text).exit_code, 2);

  auto other = load_fixture(std::filesystem::path(WLAB_FIXTURE_DIR) / "synthetic_per_curve.fix");
  other.target_class = 2 * other.target_class;
  EXPECT_EQ(emit_table({shipped()[0], other}, TableFormat::csv).exit_code, 2);
}

TEST(Verify, Suites) {
  const verify::SuiteOptions opt{WLAB_FIXTURE_DIR, false, 1};
  EXPECT_EQ(verify::run_verify_suite("paper", opt).exit_code, 0);
  EXPECT_EQ(verify::run_verify_suite("cross", opt).exit_code, 0);
  EXPECT_EQ(verify::run_verify_suite("bogus", opt).exit_code, 2);
  EXPECT_EQ(verify::run_verify_suite("paper", {"/nonexistent", false, 1}).exit_code, 2);
}
