#pragma once

// Lattice path count of rational tropical curves with a given Newton polygon.
//
// Paths run through lattice points of the polygon from the lambda-minimal
// vertex p to the lambda-maximal vertex q, strictly increasing in lambda, with
// one step per marked point. Each path gets the product of a positive and a
// negative multiplicity, computed by cutting corners towards the upper
// (clockwise) and lower (counterclockwise) boundary arcs:
//
//   mu(path) = t(u, v, w) * mu(path without v) + mu(path with v -> u + w - v)
//
// at the first corner v turning away from the target arc. The recursion also
// records which steps end up on the same connected piece of the curve: a
// triangle joins its two path edges into one trivalent vertex, a
// parallelogram only lets two edges cross. Only pairs of positive and
// negative histories whose combined pieces are connected count, so reducible
// curves (a line together with a cubic through nine of eleven points, say)
// are excluded.

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "wlab/bigint.hpp"
#include "wlab/error.hpp"
#include "wlab/parallel.hpp"
#include "wlab/tropical/polygon.hpp"

namespace wlab::tropical {

enum class CountMode { complex, real };

inline const char* to_string(CountMode m) { return m == CountMode::complex ? "complex" : "real"; }

/// Vertex factor of a triangle. Complex: twice its area. Real (all points
/// real): zero for even doubled area, otherwise (-1)^(interior lattice points).
inline std::int64_t triangle_factor(const LatticePoint& u, const LatticePoint& v, const LatticePoint& w,
                                    CountMode mode) {
  const std::int64_t doubled = std::abs(cross(u, v, w));
  if (mode == CountMode::complex) return doubled;
  if (doubled % 2 == 0) return 0;
  const std::int64_t boundary = lattice_length(v - u) + lattice_length(w - v) + lattice_length(u - w);
  const std::int64_t interior = (doubled - boundary + 2) / 2;  // Pick
  return interior % 2 == 0 ? 1 : -1;
}

namespace detail {

using StepLabels = std::string;  // block id per path step, first-occurrence order
using Histories = std::map<StepLabels, BigInt>;

inline StepLabels normalize_labels(const StepLabels& raw) {
  StepLabels out(raw.size(), 0);
  std::string seen;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    auto pos = seen.find(raw[i]);
    if (pos == std::string::npos) {
      pos = seen.size();
      seen.push_back(raw[i]);
    }
    out[i] = static_cast<char>(pos);
  }
  return out;
}

inline std::string path_key(const std::vector<LatticePoint>& path) {
  std::string key;
  key.reserve(path.size() * 2);
  for (const auto& p : path) {
    key.push_back(static_cast<char>(p.x + 64));
    key.push_back(static_cast<char>(p.y + 64));
  }
  return key;
}

/// One-sided multiplicity with connectivity history, memoized per path.
class SideMultiplicity {
 public:
  SideMultiplicity(const NewtonPolygon& poly, std::vector<LatticePoint> target, bool positive, CountMode mode)
      : poly_(poly), target_(std::move(target)), positive_(positive), mode_(mode) {}

  const Histories& operator()(const std::vector<LatticePoint>& path) {
    auto key = path_key(path);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    Histories result = compute(path);
    return memo_.emplace(std::move(key), std::move(result)).first->second;
  }

 private:
  Histories compute(const std::vector<LatticePoint>& path) {
    const std::size_t steps = path.size() - 1;
    Histories out;
    if (path == target_) {
      StepLabels singletons(steps, 0);
      for (std::size_t i = 0; i < steps; ++i) singletons[i] = static_cast<char>(i);
      out.emplace(std::move(singletons), 1);
      return out;
    }
    for (std::size_t j = 1; j + 1 < path.size(); ++j) {
      const auto& u = path[j - 1];
      const auto& v = path[j];
      const auto& w = path[j + 1];
      const auto turn = cross(u, v, w);
      if (positive_ ? turn <= 0 : turn >= 0) continue;

      if (const auto t = triangle_factor(u, v, w, mode_); t != 0) {
        auto shorter = path;
        shorter.erase(shorter.begin() + static_cast<std::ptrdiff_t>(j));
        for (const auto& [labels, weight] : (*this)(shorter)) {
          StepLabels lifted;
          lifted.reserve(steps);
          lifted.append(labels, 0, j);
          lifted.push_back(labels[j - 1]);  // steps j-1 and j meet at the new vertex
          lifted.append(labels, j, std::string::npos);
          out[normalize_labels(lifted)] += t * weight;
        }
      }
      const LatticePoint flipped = u + w - v;
      if (poly_.contains(flipped) && lambda_less(u, flipped) && lambda_less(flipped, w)) {
        auto moved = path;
        moved[j] = flipped;
        for (const auto& [labels, weight] : (*this)(moved)) {
          StepLabels lifted = labels;
          std::swap(lifted[j - 1], lifted[j]);  // parallel edges pass through each other
          out[normalize_labels(lifted)] += weight;
        }
      }
      std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
      return out;
    }
    return out;  // no admissible corner: the path cannot be completed
  }

  const NewtonPolygon& poly_;
  std::vector<LatticePoint> target_;
  bool positive_;
  CountMode mode_;
  std::unordered_map<std::string, Histories> memo_;
};

inline bool pieces_connected(const StepLabels& a, const StepLabels& b) {
  const std::size_t n = a.size();
  std::vector<std::size_t> parent(n);
  for (std::size_t i = 0; i < n; ++i) parent[i] = i;
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto* labels : {&a, &b}) {
    std::vector<std::size_t> first(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      const auto block = static_cast<std::size_t>((*labels)[i]);
      if (first[block] == n) first[block] = i;
      else parent[find(i)] = find(first[block]);
    }
  }
  const auto root = find(0);
  for (std::size_t i = 1; i < n; ++i)
    if (find(i) != root) return false;
  return true;
}

struct PathArcs {
  LatticePoint p, q;
  std::vector<LatticePoint> upper;  // clockwise from p to q
  std::vector<LatticePoint> lower;  // counterclockwise from p to q
};

inline PathArcs boundary_arcs(const NewtonPolygon& poly) {
  const auto ring = poly.boundary_points();
  const auto n = ring.size();
  const auto ip = static_cast<std::size_t>(std::min_element(ring.begin(), ring.end(), lambda_less) - ring.begin());
  const auto iq = static_cast<std::size_t>(std::max_element(ring.begin(), ring.end(), lambda_less) - ring.begin());
  PathArcs arcs{ring[ip], ring[iq], {}, {}};
  for (std::size_t i = ip;; i = (i + 1) % n) {
    arcs.lower.push_back(ring[i]);
    if (i == iq) break;
  }
  for (std::size_t i = ip;; i = (i + n - 1) % n) {
    arcs.upper.push_back(ring[i]);
    if (i == iq) break;
  }
  return arcs;
}

}  // namespace detail

/// Number of lambda-increasing paths of the given length, with no weights.
inline std::uint64_t count_lambda_paths(const NewtonPolygon& poly, int steps) {
  const auto pts = poly.lattice_points();
  const auto arcs = detail::boundary_arcs(poly);
  // ways[i][s]: paths from p to pts[i] with s steps
  const auto n = pts.size();
  std::vector<std::vector<std::uint64_t>> ways(n, std::vector<std::uint64_t>(steps + 1, 0));
  ways[0][0] = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (int s = 0; s < steps; ++s) ways[j][s + 1] += ways[i][s];
  for (std::size_t i = 0; i < n; ++i)
    if (pts[i] == arcs.q) return ways[i][steps];
  return 0;
}

/// Count of irreducible rational curves through boundary_length - 1 points.
inline BigInt lattice_path_count(const NewtonPolygon& poly, CountMode mode, unsigned threads = 1) {
  if (poly.is_segment()) {
    // Only a single primitive fibre is irreducible.
    return lattice_length(poly.vertices()[1] - poly.vertices()[0]) == 1 ? 1 : 0;
  }
  const int steps = poly.boundary_length() - 1;
  const auto pts = poly.lattice_points();
  const auto arcs = detail::boundary_arcs(poly);
  const auto q_index = static_cast<std::size_t>(std::find(pts.begin(), pts.end(), arcs.q) - pts.begin());

  // Partition the path space by the first step.
  std::vector<std::size_t> firsts;
  for (std::size_t i = 1; i <= q_index; ++i) firsts.push_back(i);

  // One memo per worker; worker w takes every first step f with f % workers == w.
  const auto workers = static_cast<std::size_t>(std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(firsts.size()))));
  auto task = [&](std::size_t w) {
    detail::SideMultiplicity plus(poly, arcs.upper, true, mode);
    detail::SideMultiplicity minus(poly, arcs.lower, false, mode);
    BigInt total = 0;
    std::vector<LatticePoint> path;
    auto rec = [&](auto&& self, std::size_t last, int left) -> void {
      if (left == 0) {
        if (last != q_index) return;
        const auto& up = plus(path);
        if (up.empty()) return;
        const auto& down = minus(path);
        for (const auto& [la, wa] : up)
          for (const auto& [lb, wb] : down)
            if (detail::pieces_connected(la, lb)) total += wa * wb;
        return;
      }
      // Each remaining step needs a distinct point strictly after `last`, up to q.
      if (q_index - last < static_cast<std::size_t>(left)) return;
      for (std::size_t i = last + 1; i <= q_index; ++i) {
        if (i == q_index && left != 1) continue;
        path.push_back(pts[i]);
        self(self, i, left - 1);
        path.pop_back();
      }
    };
    for (std::size_t f = w; f < firsts.size(); f += workers) {
      path = {pts[0], pts[firsts[f]]};
      rec(rec, firsts[f], steps - 1);
    }
    return total;
  };
  return parallel_reduce<BigInt>(workers, static_cast<unsigned>(workers), BigInt(0), task,
                                 [](BigInt acc, BigInt part) { return acc + part; });
}

}  // namespace wlab::tropical
