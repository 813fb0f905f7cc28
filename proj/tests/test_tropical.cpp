#include <gtest/gtest.h>

#include "wlab/tropical/tropical.hpp"
#include "wlab/tropical/kontsevich.hpp"

using namespace wlab;
using namespace wlab::tropical;

namespace {

std::vector<LatticePoint> vertices(const NewtonPolygon& p) { return p.vertices(); }

// Same vertex set regardless of the starting vertex.
bool same_cycle(std::vector<LatticePoint> a, std::vector<LatticePoint> b) {
  std::sort(a.begin(), a.end(), lambda_less);
  std::sort(b.begin(), b.end(), lambda_less);
  return a == b;
}

FloorDiagram diagram_with_weights(std::vector<int> weights) {
  FloorDiagram d;
  d.bottom_ends.assign(weights.size() + 1, 0);
  d.top_ends.assign(weights.size() + 1, 0);
  for (std::size_t i = 0; i < weights.size(); ++i)
    d.elevators.push_back({static_cast<int>(i + 1), static_cast<int>(i), weights[i]});
  return d;
}

}  // namespace

TEST(Polygon, Examples) {
  EXPECT_TRUE(same_cycle(vertices(polygon_for(models::f2(), models::f2().make_class({1, 0}))), {{0, 0}, {0, 1}, {2, 0}}));
  EXPECT_TRUE(same_cycle(vertices(polygon_for(models::p2(), models::p2().make_class({2}))), {{0, 0}, {2, 0}, {0, 2}}));
  EXPECT_TRUE(same_cycle(vertices(polygon_for(models::f2(), models::f2().make_class({1, 1}))),
                         {{0, 0}, {0, 1}, {1, 1}, {3, 0}}));
  EXPECT_THROW(polygon_for(models::cp2_6_conic(), models::delta_class()), InputError);
}

TEST(Polygon, LatticePoints) {
  const auto tri = polygon_for(models::p2(), models::p2().make_class({3}));
  EXPECT_EQ(tri.lattice_points().size(), 10u);
  EXPECT_EQ(tri.boundary_length(), 9);
  const auto pts = tri.lattice_points();
  EXPECT_TRUE(std::is_sorted(pts.begin(), pts.end(), lambda_less));
  EXPECT_THROW(NewtonPolygon({{0, 0}, {0, 1}, {1, 0}}), InputError);  // clockwise
}

TEST(FloorDiagrams, SmallEnumerations) {
  const auto p2_1 = enumerate_floor_diagrams(toric_class(models::p2(), models::p2().make_class({1})));
  ASSERT_EQ(p2_1.size(), 1u);
  EXPECT_EQ(p2_1[0].marking_count, 1);
  EXPECT_EQ(p2_1[0].diagram.bottom_ends, std::vector<int>{1});

  const auto p2_2 = enumerate_floor_diagrams(toric_class(models::p2(), models::p2().make_class({2})));
  ASSERT_EQ(p2_2.size(), 1u);
  EXPECT_EQ(p2_2[0].marking_count, 1);
  ASSERT_EQ(p2_2[0].diagram.elevators.size(), 1u);
  EXPECT_EQ(p2_2[0].diagram.elevators[0].weight, 1);

  const auto f2_b = enumerate_floor_diagrams(toric_class(models::f2(), models::f2().make_class({1, 0})));
  ASSERT_EQ(f2_b.size(), 1u);
  EXPECT_EQ(f2_b[0].marking_count, 1);
  EXPECT_EQ(f2_b[0].diagram.bottom_ends, std::vector<int>{2});
}

TEST(FloorDiagrams, EnumeratedDiagramsAreValid) {
  const auto tc = toric_class(models::p2(), models::p2().make_class({4}));
  for (const auto& md : enumerate_floor_diagrams(tc)) {
    EXPECT_EQ(diagram_defect(md.diagram, floor_shape(tc)), "");
    EXPECT_GT(md.marking_count, 0);
  }
}

TEST(FloorDiagrams, Multiplicities) {
  EXPECT_EQ(complex_multiplicity(diagram_with_weights({1, 1})), 1);
  EXPECT_EQ(complex_multiplicity(diagram_with_weights({2})), 4);
  EXPECT_EQ(complex_multiplicity(diagram_with_weights({1, 3})), 9);
  EXPECT_EQ(real_multiplicity(diagram_with_weights({1, 1})), 1);
  EXPECT_EQ(real_multiplicity(diagram_with_weights({1, 2})), 0);
  EXPECT_EQ(real_multiplicity(diagram_with_weights({1, 3})), 1);
}

TEST(Counts, Examples) {
  const auto& f2 = models::f2();
  const auto& p2 = models::p2();
  for (auto alg : {Algorithm::floor_diagram, Algorithm::lattice_path}) {
    EXPECT_EQ(count_welschinger_real(f2, f2.make_class({1, 0}), alg), 1);
    EXPECT_EQ(count_complex(p2, p2.make_class({1}), alg), 1);
    EXPECT_EQ(count_complex(p2, p2.make_class({3}), alg), 12);
    EXPECT_EQ(count_welschinger_real(p2, p2.make_class({3}), alg), 8);
    EXPECT_EQ(count_complex(p2, p2.make_class({4}), alg), 620);
  }
}

TEST(Counts, ThreadCountDoesNotChangeResults) {
  const auto& f0 = models::f0();
  const auto d = f0.make_class({3, 3});
  for (auto alg : {Algorithm::floor_diagram, Algorithm::lattice_path}) {
    EXPECT_EQ(count_complex(f0, d, alg, 1), count_complex(f0, d, alg, 3));
    EXPECT_EQ(count_welschinger_real(f0, d, alg, 1), count_welschinger_real(f0, d, alg, 4));
  }
}

TEST(Counts, FibreClasses) {
  const auto& f0 = models::f0();
  EXPECT_EQ(count_complex(f0, f0.make_class({0, 1})), 1);
  EXPECT_EQ(count_complex(f0, f0.make_class({0, 2})), 0);
  EXPECT_EQ(count_complex(f0, f0.make_class({0, 2}), Algorithm::lattice_path), 0);
}

TEST(TriangleFactor, RealMode) {
  EXPECT_EQ(triangle_factor({0, 0}, {1, 0}, {0, 1}, CountMode::complex), 1);
  EXPECT_EQ(triangle_factor({0, 0}, {1, 0}, {0, 1}, CountMode::real), 1);
  EXPECT_EQ(triangle_factor({0, 0}, {2, 0}, {0, 1}, CountMode::complex), 2);
  EXPECT_EQ(triangle_factor({0, 0}, {2, 0}, {0, 1}, CountMode::real), 0);
  // 2*Area = 3 with one interior point
  EXPECT_EQ(triangle_factor({0, 0}, {2, 1}, {1, 2}, CountMode::real), -1);
}

TEST(Kontsevich, Values) {
  EXPECT_EQ(kontsevich_oracle(1), 1);
  EXPECT_EQ(kontsevich_oracle(3), 12);
  EXPECT_EQ(kontsevich_oracle(4), 620);
  EXPECT_EQ(kontsevich_oracle(5), 87304);
  EXPECT_THROW(kontsevich_oracle(0), InputError);
}

TEST(Quadric, Examples) {
  EXPECT_EQ(w_quadric_ellipsoid(1).value, 1);
  EXPECT_EQ(w_quadric_ellipsoid(2).value, count_welschinger_real(models::f2(), models::f2().make_class({2, 0})));
  EXPECT_EQ(w_quadric_ellipsoid(2).r, 7);
  EXPECT_THROW(w_quadric_ellipsoid(0), InputError);
}

TEST(TropicalResult, CarriesStructure) {
  const auto res = tropical_result(models::f0(), models::f0().make_class({2, 2}), CountMode::real,
                                   Algorithm::lattice_path, 1);
  EXPECT_EQ(res.value, 8);
  EXPECT_EQ(res.r, 7);
  EXPECT_EQ(res.real_structure.euler_char, 0);
}

TEST(Parsing, Names) {
  EXPECT_EQ(parse_algorithm("lattice-path"), Algorithm::lattice_path);
  EXPECT_EQ(parse_invariant("welschinger"), CountMode::real);
  EXPECT_THROW(parse_algorithm("brute"), InputError);
  EXPECT_THROW(parse_invariant("quantum"), InputError);
}
