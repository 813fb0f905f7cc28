#include <gtest/gtest.h>

#include "wlab/fixture.hpp"

using namespace wlab;

namespace {

std::filesystem::path fixture(const std::string& name) { return std::filesystem::path(WLAB_FIXTURE_DIR) / name; }

RelativeCountSet per_curve_set(std::vector<CurveRecord> curves) {
  RelativeCountSet set;
  set.surface = &models::cp2_6_conic();
  set.target_class = models::delta_class();
  set.minus_two_class = models::conic_class();
  set.source = RealStructureDescriptor(-5, parse_components("S:nonorientable"));
  set.r = 5;
  set.mode = RecordMode::per_curve;
  set.curves = std::move(curves);
  return set;
}

InvariantResult f0_result(std::int64_t chi, BigInt value) {
  InvariantResult res;
  res.surface = chi == 2 ? "Q" : "F0";
  res.class_coeffs = {1, 1};
  res.real_structure = RealStructureDescriptor(chi, parse_components(chi == 2 ? "S2:orientable" : "T2:orientable"));
  res.r = 3;
  res.value = value;
  return res;
}

}  // namespace

TEST(WSide, ShippedFixture) {
  const auto set = load_fixture(fixture("cp2_6_conic_chi_m5.fix"));
  EXPECT_EQ(w_minus(set), 522);
  EXPECT_EQ(w_plus(set), 759);
  EXPECT_EQ(w_minus(load_fixture(fixture("cp2_6_conic_chi_p1.fix"))), 0);
}

TEST(ApplyMorse, Examples) {
  EXPECT_EQ(apply_morse(load_fixture(fixture("cp2_6_conic_chi_m5.fix")), -3).value, 522);
  EXPECT_EQ(apply_morse(load_fixture(fixture("cp2_6_conic_chi_m1.fix")), 1).value, 78);
  EXPECT_THROW(apply_morse(load_fixture(fixture("cp2_6_conic_chi_m5.fix")), 0), InputError);
}

TEST(ApplyMorse, PlusKeepsChi) {
  const auto res = apply_morse(load_fixture(fixture("cp2_6_conic_chi_m3.fix")), -3);
  EXPECT_EQ(res.value, 377);
  EXPECT_EQ(res.real_structure.euler_char, -3);
}

TEST(ApplyMorse, DisconnectedTargetFlagged) {
  const auto res = apply_morse(load_fixture(fixture("cp2_6_conic_chi_p1.fix")), 3);
  EXPECT_EQ(res.value, 0);
  EXPECT_EQ(res.real_structure.components.size(), 2u);
  EXPECT_NE(res.provenance.find("vanishing confirmed"), std::string::npos);
}

TEST(ApplyMorse, NonzeroOnDisconnectedTargetIsAnError) {
  auto set = load_fixture(fixture("cp2_6_conic_chi_p1.fix"));
  set.rows[0].n_minus = 4;
  set.rows[0].n_plus = 4;
  EXPECT_THROW(apply_morse(set, 3), VerificationError);
}

TEST(ComplexTotal, Examples) {
  CurveRecord single;
  single.count = 17;
  // tangency budget at k=0 is zero, so the profile is empty
  EXPECT_EQ(complex_total(per_curve_set({single})), 17);

  CurveRecord k1;
  k1.k = 1;
  k1.profile = {2, 0};
  EXPECT_EQ(complex_total(per_curve_set({CurveRecord{}, k1})), 3);

  EXPECT_THROW(complex_total(load_fixture(fixture("cp2_6_conic_chi_m5.fix"))), InputError);
}

TEST(PerCurve, SyntheticFixture) {
  const auto set = load_fixture(fixture("synthetic_per_curve.fix"));
  const auto rows = aggregate_rows(set);
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_EQ(rows[0], (AggregatedRow{0, 7, 7}));
  EXPECT_EQ(rows[1], (AggregatedRow{1, 10, 4}));
  EXPECT_EQ(rows[2], (AggregatedRow{2, 6, 4}));
  EXPECT_EQ(w_plus(set), 23);
  EXPECT_EQ(w_minus(set), 15);
  EXPECT_EQ(modified_w(set, MorseSign::plus), 33);
  EXPECT_EQ(modified_w(set, MorseSign::minus), 21);
  EXPECT_EQ(complex_total(set), 45);
}

TEST(ModifiedW, Examples) {
  CurveRecord c;
  c.mass = 2;
  c.mass_in_s = 1;
  const auto set = per_curve_set({c});
  EXPECT_EQ(w_plus(set), 1);
  EXPECT_EQ(modified_w(set, MorseSign::plus), -1);

  auto full = load_fixture(fixture("synthetic_per_curve.fix"));
  for (auto& rec : full.curves) rec.mass_in_s = rec.mass;
  full.rows.clear();
  EXPECT_EQ(modified_w(full, MorseSign::plus), w_plus(full));
  EXPECT_EQ(modified_w(full, MorseSign::minus), w_minus(full));

  EXPECT_THROW(modified_w(load_fixture(fixture("cp2_6_conic_chi_m5.fix")), MorseSign::plus), InputError);
}

TEST(Validate, RejectsBadInput) {
  CurveRecord wrong_budget;
  wrong_budget.k = 1;
  wrong_budget.profile = {1, 0};
  EXPECT_THROW(per_curve_set({wrong_budget}).validate(), InputError);

  auto bad_r = per_curve_set({});
  bad_r.r = 4;
  EXPECT_THROW(bad_r.validate(), InputError);
  bad_r.r = 7;
  EXPECT_THROW(bad_r.validate(), InputError);

  auto dup = load_fixture(fixture("cp2_6_conic_chi_m5.fix"));
  dup.rows.push_back(dup.rows.front());
  EXPECT_THROW(dup.validate(), InputError);

  auto mismatch = load_fixture(fixture("synthetic_per_curve.fix"));
  mismatch.rows[1].n_plus = 11;
  EXPECT_THROW(mismatch.validate(), VerificationError);
}

TEST(Vanishing, Examples) {
  const RealStructureDescriptor two(0, parse_components("A:orientable,B:orientable"));
  const RealStructureDescriptor one(0, parse_components("A:orientable"));
  EXPECT_TRUE(vanishing_rule(two, 2).applies);
  EXPECT_FALSE(vanishing_rule(one, 5).applies);
  EXPECT_FALSE(vanishing_rule(two, 0).applies);
}

TEST(Monotonicity, DecreasingSequencePasses) {
  std::vector<InvariantResult> results;
  for (const auto& [src, target] : {std::pair{"cp2_6_conic_chi_m5.fix", -3}, {"cp2_6_conic_chi_m3.fix", -1},
                                    {"cp2_6_conic_chi_m1.fix", 1}, {"cp2_6_conic_chi_p1.fix", 3}})
    results.push_back(apply_morse(load_fixture(fixture(src)), target));
  EXPECT_TRUE(monotonicity_audit(results).empty());
}

TEST(Monotonicity, Examples) {
  EXPECT_TRUE(monotonicity_audit({f0_result(0, 1), f0_result(2, 1)}).empty());
  const auto v = monotonicity_audit({f0_result(0, 5), f0_result(2, 7)});
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].lower_chi.value, 5);
  EXPECT_EQ(v[0].higher_chi.value, 7);
}

TEST(Monotonicity, RejectsMixedInput) {
  auto other = f0_result(2, 1);
  other.class_coeffs = {2, 2};
  EXPECT_THROW(monotonicity_audit({f0_result(0, 1), other}), InputError);
  auto partial = f0_result(2, 1);
  partial.r = 1;
  EXPECT_THROW(monotonicity_audit({f0_result(0, 1), partial}), InputError);
}
