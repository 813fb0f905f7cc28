#pragma once

// Genus-0 floor diagrams for the h-transverse polygons of P2, F0 and F2.
//
// A diagram has `a` floors joined by a tree of weighted elevators oriented
// downward, plus weight-one ends below (bottom) or above (top) floors. Every
// floor has divergence n = 0, 1, 2 for F0, P2, F2:
//
//   (weights leaving downward + bottom ends) - (weights entering from above + top ends) = n.
//
// Cutting an elevator splits the floors into two sets; summing divergences
// over the upper set U gives its weight as n|U| - bottom(U) + top(U), so a
// diagram is fixed by its oriented tree and the distribution of ends.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "wlab/bigint.hpp"
#include "wlab/error.hpp"
#include "wlab/parallel.hpp"
#include "wlab/tropical/polygon.hpp"

namespace wlab::tropical {

struct Elevator {
  int upper = 0;
  int lower = 0;
  int weight = 1;
  friend auto operator<=>(const Elevator&, const Elevator&) = default;
};

/// Floors are indexed 0..a-1 bottom to top: every elevator runs from a higher
/// index to a lower one.
struct FloorDiagram {
  int divergence = 1;
  std::vector<Elevator> elevators;
  std::vector<int> bottom_ends;  // per floor
  std::vector<int> top_ends;     // per floor

  int floors() const { return static_cast<int>(bottom_ends.size()); }
  int end_count() const {
    return std::accumulate(bottom_ends.begin(), bottom_ends.end(), 0) +
           std::accumulate(top_ends.begin(), top_ends.end(), 0);
  }
  int element_count() const { return floors() + static_cast<int>(elevators.size()) + end_count(); }

  friend auto operator<=>(const FloorDiagram&, const FloorDiagram&) = default;
};

struct MarkedFloorDiagram {
  FloorDiagram diagram;
  BigInt marking_count = 0;  // linear extensions up to automorphism
};

/// Floors, ends and divergence required by a toric class.
struct FloorShape {
  int floors = 0;
  int bottom = 0;
  int top = 0;
  int divergence = 0;
  int mark_budget() const { return floors + (floors - 1) + bottom + top; }
};

inline FloorShape floor_shape(const ToricClass& tc) {
  switch (tc.family) {
    case ToricFamily::p2: return {tc.a, tc.a, 0, 1};
    case ToricFamily::f0: return {tc.a, tc.b, tc.b, 0};
    case ToricFamily::f2: return {tc.a, 2 * tc.a + tc.b, tc.b, 2};
    case ToricFamily::none: break;
  }
  throw InputError("no floor diagrams for this surface");
}

/// Largest marking poset handled; linear extensions are counted with a
/// 2^n-state table of 64-bit counts, exact up to 20! .
inline constexpr int kMaxFloorElements = 20;

inline BigInt complex_multiplicity(const FloorDiagram& d) {
  BigInt m = 1;
  for (const auto& e : d.elevators) m *= e.weight * e.weight;
  return m;
}

/// 1 when every elevator has odd weight, else 0.
inline int real_multiplicity(const FloorDiagram& d) {
  return std::all_of(d.elevators.begin(), d.elevators.end(), [](const Elevator& e) { return e.weight % 2 == 1; })
             ? 1 : 0;
}

/// Checks the structural invariants; returns an empty string when all hold.
inline std::string diagram_defect(const FloorDiagram& d, const FloorShape& shape) {
  const int a = d.floors();
  if (a != shape.floors) return "wrong number of floors";
  if (static_cast<int>(d.top_ends.size()) != a) return "end lists disagree on the floor count";
  if (static_cast<int>(d.elevators.size()) != a - 1) return "a tree on the floors needs a-1 elevators";
  std::vector<int> parent(a);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& e : d.elevators) {
    if (e.upper < 0 || e.upper >= a || e.lower < 0 || e.lower >= a) return "elevator endpoint out of range";
    if (e.upper <= e.lower) return "elevator does not point downward in the floor order";
    if (e.weight < 1) return "elevator weight below one";
    const int ru = find(e.upper), rl = find(e.lower);
    if (ru == rl) return "elevators contain a cycle";
    parent[ru] = rl;
  }
  std::vector<int> div(a, 0);
  for (const auto& e : d.elevators) {
    div[e.upper] += e.weight;
    div[e.lower] -= e.weight;
  }
  for (int v = 0; v < a; ++v) {
    if (d.bottom_ends[v] < 0 || d.top_ends[v] < 0) return "negative end count";
    if (div[v] + d.bottom_ends[v] - d.top_ends[v] != shape.divergence) return "divergence condition fails";
  }
  if (std::accumulate(d.bottom_ends.begin(), d.bottom_ends.end(), 0) != shape.bottom) return "wrong bottom end count";
  if (std::accumulate(d.top_ends.begin(), d.top_ends.end(), 0) != shape.top) return "wrong top end count";
  if (d.element_count() != shape.mark_budget()) return "element count differs from the mark budget";
  return {};
}

namespace detail {

/// Poset of floors, elevators and ends: an elevator sits strictly between its
/// floors, a bottom end strictly below its floor, a top end strictly above.
inline std::vector<std::uint32_t> marking_predecessors(const FloorDiagram& d) {
  const int n = d.element_count();
  if (n > kMaxFloorElements) throw InputError("floor diagram with " + std::to_string(n) + " elements exceeds the supported size");
  std::vector<std::uint32_t> preds(n, 0);
  int next = d.floors();
  for (const auto& e : d.elevators) {
    preds[next] |= 1u << e.lower;
    preds[e.upper] |= 1u << next;
    ++next;
  }
  for (int v = 0; v < d.floors(); ++v) {
    for (int i = 0; i < d.bottom_ends[v]; ++i) preds[v] |= 1u << next++;
    for (int i = 0; i < d.top_ends[v]; ++i) preds[next++] |= 1u << v;
  }
  return preds;
}

inline std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

/// Relabels floors by `perm` (old -> new) and returns the canonical layout.
inline FloorDiagram relabel(const FloorDiagram& d, const std::vector<int>& perm) {
  FloorDiagram out;
  out.divergence = d.divergence;
  out.bottom_ends.assign(d.floors(), 0);
  out.top_ends.assign(d.floors(), 0);
  for (int v = 0; v < d.floors(); ++v) {
    out.bottom_ends[perm[v]] = d.bottom_ends[v];
    out.top_ends[perm[v]] = d.top_ends[v];
  }
  for (const auto& e : d.elevators) out.elevators.push_back({perm[e.upper], perm[e.lower], e.weight});
  std::sort(out.elevators.begin(), out.elevators.end());
  return out;
}

/// Minimal relabeling among those listing floors bottom to top.
inline FloorDiagram canonical_form(const FloorDiagram& d) {
  std::vector<int> perm(d.floors());
  std::iota(perm.begin(), perm.end(), 0);
  std::optional<FloorDiagram> best;
  do {
    bool ordered = true;
    for (const auto& e : d.elevators)
      if (perm[e.upper] <= perm[e.lower]) { ordered = false; break; }
    if (!ordered) continue;
    auto cand = relabel(d, perm);
    if (!best || cand < *best) best = std::move(cand);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return *best;
}

/// Labeled trees on a vertices via Pruefer sequences.
inline std::vector<std::vector<std::pair<int, int>>> labeled_trees(int a) {
  std::vector<std::vector<std::pair<int, int>>> out;
  if (a == 1) return {{}};
  if (a == 2) return {{{0, 1}}};
  std::vector<int> seq(a - 2, 0);
  while (true) {
    std::vector<int> deg(a, 1);
    for (int s : seq) ++deg[s];
    std::vector<std::pair<int, int>> edges;
    for (int s : seq) {
      int leaf = 0;
      while (deg[leaf] != 1) ++leaf;
      edges.emplace_back(leaf, s);
      --deg[leaf];
      --deg[s];
    }
    int u = -1, w = -1;
    for (int i = 0; i < a; ++i)
      if (deg[i] == 1) (u < 0 ? u : w) = i;
    edges.emplace_back(u, w);
    out.push_back(std::move(edges));
    int pos = a - 3;
    while (pos >= 0 && seq[pos] == a - 1) seq[pos--] = 0;
    if (pos < 0) break;
    ++seq[pos];
  }
  return out;
}

/// All ways to write `total` as an ordered sum of `parts` nonnegative integers.
inline std::vector<std::vector<int>> compositions(int total, int parts) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(parts, 0);
  auto rec = [&](auto&& self, int i, int left) -> void {
    if (i == parts - 1) {
      cur[i] = left;
      out.push_back(cur);
      return;
    }
    for (int x = 0; x <= left; ++x) {
      cur[i] = x;
      self(self, i + 1, left - x);
    }
  };
  if (parts > 0) rec(rec, 0, total);
  return out;
}

}  // namespace detail

/// Linear extensions of the marking poset, every element distinguishable.
inline std::uint64_t count_linear_extensions(const FloorDiagram& d) {
  const auto preds = detail::marking_predecessors(d);
  const int n = static_cast<int>(preds.size());
  const std::uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);
  std::vector<std::uint64_t> ways(std::size_t{1} << n, 0);
  ways[0] = 1;
  for (std::uint32_t mask = 0; mask < full; ++mask) {
    if (!ways[mask]) continue;
    for (int i = 0; i < n; ++i)
      if (!(mask >> i & 1u) && (preds[i] & mask) == preds[i]) ways[mask | (1u << i)] += ways[mask];
  }
  return ways[full];
}

/// Floor relabelings preserving the diagram, times permutations of ends sharing a floor.
inline std::uint64_t automorphism_count(const FloorDiagram& d) {
  std::vector<int> perm(d.floors());
  std::iota(perm.begin(), perm.end(), 0);
  const auto base = detail::relabel(d, perm);
  std::uint64_t floor_autos = 0;
  do {
    if (detail::relabel(d, perm) == base) ++floor_autos;
  } while (std::next_permutation(perm.begin(), perm.end()));
  for (int v = 0; v < d.floors(); ++v)
    floor_autos *= detail::factorial(d.bottom_ends[v]) * detail::factorial(d.top_ends[v]);
  return floor_autos;
}

inline BigInt marking_count(const FloorDiagram& d) {
  const auto ext = count_linear_extensions(d);
  const auto aut = automorphism_count(d);
  if (ext % aut != 0) throw VerificationError("automorphisms do not act freely on markings");
  return BigInt(ext / aut);
}

/// Every genus-0 floor diagram of the class up to isomorphism, with its
/// marking count, in canonical order.
inline std::vector<MarkedFloorDiagram> enumerate_floor_diagrams(const ToricClass& tc, unsigned threads = 1) {
  const auto shape = floor_shape(tc);
  if (shape.floors == 0) return {};
  if (shape.mark_budget() > kMaxFloorElements)
    throw InputError("class needs " + std::to_string(shape.mark_budget()) +
                     " marked points; floor diagrams support at most " + std::to_string(kMaxFloorElements));
  const int a = shape.floors;
  const auto trees = detail::labeled_trees(a);
  const auto bottoms = detail::compositions(shape.bottom, a);
  const auto tops = detail::compositions(shape.top, a);

  using Found = std::set<FloorDiagram>;
  auto task = [&](std::size_t t) {
    Found found;
    const auto& tree = trees[t];
    const int edges = static_cast<int>(tree.size());
    // Per orientation and edge: the floors on the upper side of the cut.
    for (std::uint32_t orient = 0; orient < (1u << edges); ++orient) {
      std::vector<std::pair<int, int>> directed;  // (upper, lower)
      for (int i = 0; i < edges; ++i) {
        auto [u, v] = tree[i];
        directed.push_back((orient >> i & 1u) ? std::pair{v, u} : std::pair{u, v});
      }
      std::vector<std::vector<int>> upper_side(edges);
      for (int i = 0; i < edges; ++i) {
        std::vector<int> seen{directed[i].first};
        std::vector<bool> in(a, false);
        in[directed[i].first] = true;
        for (std::size_t s = 0; s < seen.size(); ++s)
          for (int j = 0; j < edges; ++j) {
            if (j == i) continue;
            auto [x, y] = directed[j];
            if (x == seen[s] && !in[y]) { in[y] = true; seen.push_back(y); }
            if (y == seen[s] && !in[x]) { in[x] = true; seen.push_back(x); }
          }
        upper_side[i] = std::move(seen);
      }
      for (const auto& bottom : bottoms)
        for (const auto& top : tops) {
          FloorDiagram d;
          d.divergence = shape.divergence;
          d.bottom_ends = bottom;
          d.top_ends = top;
          bool ok = true;
          for (int i = 0; i < edges && ok; ++i) {
            int w = shape.divergence * static_cast<int>(upper_side[i].size());
            for (int v : upper_side[i]) w += top[v] - bottom[v];
            if (w < 1) ok = false;
            d.elevators.push_back({directed[i].first, directed[i].second, w});
          }
          if (!ok) continue;
          found.insert(detail::canonical_form(d));
        }
    }
    return found;
  };
  auto merged = parallel_reduce<Found>(trees.size(), threads, Found{}, task, [](Found acc, Found part) {
    acc.merge(part);
    return acc;
  });

  std::vector<FloorDiagram> unique(merged.begin(), merged.end());
  for (const auto& d : unique)
    if (auto defect = diagram_defect(d, shape); !defect.empty())
      throw VerificationError("enumerated floor diagram violates an invariant: " + defect);
  using Marked = std::vector<MarkedFloorDiagram>;
  return parallel_reduce<Marked>(
      unique.size(), threads, Marked{},
      [&](std::size_t i) { return Marked{{unique[i], marking_count(unique[i])}}; },
      [](Marked acc, Marked part) {
        for (auto& m : part) acc.push_back(std::move(m));
        return acc;
      });
}

}  // namespace wlab::tropical
