#pragma once

// Newton polygons of curve classes on the toric surfaces P2, F0 and F2.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "wlab/error.hpp"
#include "wlab/surface_model.hpp"

namespace wlab::tropical {

struct LatticePoint {
  int x = 0;
  int y = 0;
  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
  LatticePoint operator+(const LatticePoint& o) const { return {x + o.x, y + o.y}; }
  LatticePoint operator-(const LatticePoint& o) const { return {x - o.x, y - o.y}; }
};

/// Order by lambda(x, y) = x - eps*y for an infinitesimal eps > 0, i.e.
/// lexicographic on (x, -y). Exact, no floating point.
inline bool lambda_less(const LatticePoint& a, const LatticePoint& b) {
  return a.x != b.x ? a.x < b.x : a.y > b.y;
}

/// Twice the signed area of (o, a, b); positive for a left turn o -> a -> b.
inline std::int64_t cross(const LatticePoint& o, const LatticePoint& a, const LatticePoint& b) {
  return std::int64_t{a.x - o.x} * (b.y - o.y) - std::int64_t{a.y - o.y} * (b.x - o.x);
}

inline int lattice_length(const LatticePoint& v) { return std::gcd(std::abs(v.x), std::abs(v.y)); }

/// Counterclockwise convex lattice polygon. Two vertices describe a segment,
/// the Newton polygon of a class whose curves are unions of fibres.
class NewtonPolygon {
 public:
  explicit NewtonPolygon(std::vector<LatticePoint> vertices) : vertices_(std::move(vertices)) {
    const auto n = vertices_.size();
    if (n == 2) {
      if (vertices_[0] == vertices_[1]) throw InputError("degenerate polygon with a single point");
      return;
    }
    if (n < 3) throw InputError("polygon needs at least two vertices");
    for (std::size_t i = 0; i < n; ++i)
      if (cross(vertices_[i], vertices_[(i + 1) % n], vertices_[(i + 2) % n]) <= 0)
        throw InputError("polygon vertices are not strictly convex and counterclockwise");
  }

  const std::vector<LatticePoint>& vertices() const { return vertices_; }
  bool is_segment() const { return vertices_.size() == 2; }

  bool contains(const LatticePoint& p) const {
    const auto n = vertices_.size();
    if (is_segment())
      return cross(vertices_[0], vertices_[1], p) == 0 &&
             std::min(vertices_[0].x, vertices_[1].x) <= p.x && p.x <= std::max(vertices_[0].x, vertices_[1].x) &&
             std::min(vertices_[0].y, vertices_[1].y) <= p.y && p.y <= std::max(vertices_[0].y, vertices_[1].y);
    for (std::size_t i = 0; i < n; ++i)
      if (cross(vertices_[i], vertices_[(i + 1) % n], p) < 0) return false;
    return true;
  }

  /// All lattice points, sorted by lambda.
  std::vector<LatticePoint> lattice_points() const {
    int x0 = vertices_[0].x, x1 = x0, y0 = vertices_[0].y, y1 = y0;
    for (const auto& v : vertices_) {
      x0 = std::min(x0, v.x); x1 = std::max(x1, v.x);
      y0 = std::min(y0, v.y); y1 = std::max(y1, v.y);
    }
    std::vector<LatticePoint> pts;
    for (int x = x0; x <= x1; ++x)
      for (int y = y0; y <= y1; ++y)
        if (contains({x, y})) pts.push_back({x, y});
    std::sort(pts.begin(), pts.end(), lambda_less);
    return pts;
  }

  /// Boundary lattice points in counterclockwise order starting at vertex 0.
  std::vector<LatticePoint> boundary_points() const {
    std::vector<LatticePoint> out;
    const auto n = vertices_.size();
    const auto edges = is_segment() ? std::size_t{2} : n;
    for (std::size_t i = 0; i < edges; ++i) {
      const auto a = vertices_[i];
      const auto d = vertices_[(i + 1) % n] - a;
      const int g = lattice_length(d);
      for (int t = 0; t < g; ++t) out.push_back({a.x + d.x / g * t, a.y + d.y / g * t});
    }
    return out;
  }

  /// Lattice length of the boundary, which is c1 . d for a toric class.
  int boundary_length() const {
    int total = 0;
    const auto n = vertices_.size();
    for (std::size_t i = 0; i < n; ++i) total += lattice_length(vertices_[(i + 1) % n] - vertices_[i]);
    return total;
  }

  friend bool operator==(const NewtonPolygon&, const NewtonPolygon&) = default;

 private:
  std::vector<LatticePoint> vertices_;
};

/// A curve class on one of the toric surfaces in (floors, width) form:
/// P2 degree d -> (d, 0); F0 class aB1 + bB2 -> (a, b); F2 class aB + bF -> (a, b).
struct ToricClass {
  ToricFamily family = ToricFamily::none;
  int a = 0;
  int b = 0;
};

inline ToricClass toric_class(const SurfaceModel& surface, const DivisorClass& d) {
  require_in_model(surface, d);
  ToricClass tc{surface.toric, 0, 0};
  switch (surface.toric) {
    case ToricFamily::p2:
      tc.a = static_cast<int>(d[0]);
      if (tc.a < 1) throw InputError("P2 degree must be positive");
      break;
    case ToricFamily::f0:
    case ToricFamily::f2:
      tc.a = static_cast<int>(d[0]);
      tc.b = static_cast<int>(d[1]);
      if (tc.a < 0 || tc.b < 0 || tc.a + tc.b == 0)
        throw InputError("class " + d.to_string() + " must have nonnegative coordinates, not all zero");
      break;
    case ToricFamily::none:
      throw InputError("surface " + surface.name + " has no tropical model (expected P2, F0 or F2)");
  }
  if (tc.a > 64 || tc.b > 64) throw InputError("class " + d.to_string() + " is too large");
  return tc;
}

inline NewtonPolygon polygon_for(const ToricClass& tc) {
  const int a = tc.a, b = tc.b;
  switch (tc.family) {
    case ToricFamily::p2:
      return NewtonPolygon({{0, 0}, {a, 0}, {0, a}});
    case ToricFamily::f0:
      if (a == 0) return NewtonPolygon({{0, 0}, {b, 0}});
      if (b == 0) return NewtonPolygon({{0, 0}, {0, a}});
      return NewtonPolygon({{0, 0}, {b, 0}, {b, a}, {0, a}});
    case ToricFamily::f2:
      // Top-right vertex is (b, a): the right edge then has direction (2, -1),
      // dual to the fan of F2.
      if (a == 0) return NewtonPolygon({{0, 0}, {b, 0}});
      if (b == 0) return NewtonPolygon({{0, 0}, {2 * a, 0}, {0, a}});
      return NewtonPolygon({{0, 0}, {2 * a + b, 0}, {b, a}, {0, a}});
    case ToricFamily::none:
      break;
  }
  throw InputError("no Newton polygon for this surface");
}

inline NewtonPolygon polygon_for(const SurfaceModel& surface, const DivisorClass& d) {
  return polygon_for(toric_class(surface, d));
}

}  // namespace wlab::tropical
