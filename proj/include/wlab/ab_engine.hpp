#pragma once

// Aggregation of relative curve data along a real (-2)-curve E into the
// numbers W+ and W-, their identification with Welschinger invariants of the
// two real smoothings, and the qualitative audits built on top of them.

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wlab/bigint.hpp"
#include "wlab/error.hpp"
#include "wlab/multiplicity.hpp"
#include "wlab/surface_model.hpp"

namespace wlab {

enum class RecordMode { aggregated, per_curve };

/// Pre-aggregated contributions of R_k: n+ = sum of mu+_k, n- = sum of mu-_k.
struct AggregatedRow {
  std::uint32_t k = 0;
  BigInt n_plus = 0;
  BigInt n_minus = 0;
  friend bool operator==(const AggregatedRow&, const AggregatedRow&) = default;
};

/// Relative curve data for a class d on a surface with a real (-2)-curve E,
/// through a configuration with r real points.
struct RelativeCountSet {
  const SurfaceModel* surface = nullptr;
  DivisorClass target_class;
  DivisorClass minus_two_class;
  RealStructureDescriptor source;
  // Components of the real locus after each smoothing; the source list is
  // reused when absent.
  std::optional<std::vector<RealComponent>> plus_target_components;
  std::optional<std::vector<RealComponent>> minus_target_components;
  std::int64_t r = 0;
  RecordMode mode = RecordMode::aggregated;
  std::vector<AggregatedRow> rows;   // aggregated data, or redundant rows in per-curve mode
  std::vector<CurveRecord> curves;   // per-curve mode only

  void validate() const;
};

namespace detail {

inline std::map<std::uint32_t, AggregatedRow> derive_rows(const RelativeCountSet& set, bool modified) {
  std::map<std::uint32_t, AggregatedRow> rows;
  for (const auto& c : set.curves) {
    auto& row = rows[c.k];
    row.k = c.k;
    const auto m = modified ? c.mass_in_s : c.mass;
    row.n_plus += c.count * mu_plus(m, c.profile.alpha, c.profile.beta, c.k);
    row.n_minus += c.count * mu_minus(m, c.profile.alpha, c.profile.beta, c.k);
  }
  return rows;
}

inline void require_per_curve(const RelativeCountSet& set, const char* what) {
  if (set.mode != RecordMode::per_curve)
    throw InputError(std::string(what) + " requires per-curve data");
}

}  // namespace detail

inline void RelativeCountSet::validate() const {
  if (!surface) throw InputError("relative count set without a surface");
  require_in_model(*surface, target_class);
  if (!is_minus_two_curve_class(*surface, minus_two_class))
    throw InputError("minus_two_class " + minus_two_class.to_string() +
                     " does not satisfy E.E = -2 and c1.E = 0");
  const auto n = points_required(*surface, target_class);
  if (r < 0 || r > n)
    throw InputError("r = " + std::to_string(r) + " outside [0, " + std::to_string(n) + "]");
  if ((n - r) % 2 != 0)
    throw InputError("r = " + std::to_string(r) + " has the wrong parity for " +
                     std::to_string(n) + " points");

  std::vector<std::uint32_t> ks;
  for (const auto& row : rows) ks.push_back(row.k);
  std::sort(ks.begin(), ks.end());
  if (std::adjacent_find(ks.begin(), ks.end()) != ks.end())
    throw InputError("duplicate k in aggregated rows");

  if (mode == RecordMode::aggregated) {
    if (!curves.empty()) throw InputError("curve records in an aggregated fixture");
    return;
  }
  for (const auto& c : curves) {
    c.validate();
    const auto budget = tangency_budget(*surface, target_class, minus_two_class, c.k);
    if (c.profile.points() != budget)
      throw InputError("curve record at k=" + std::to_string(c.k) + " has alpha+2beta=" +
                       std::to_string(c.profile.points()) + ", expected " + std::to_string(budget));
  }
  if (!rows.empty()) {
    auto derived = detail::derive_rows(*this, false);
    for (const auto& row : rows) {
      auto it = derived.find(row.k);
      const AggregatedRow expect = it == derived.end() ? AggregatedRow{row.k, 0, 0} : it->second;
      if (!(expect == row))
        throw VerificationError("row k=" + std::to_string(row.k) + " disagrees with curve records (n+ " +
                                to_string(expect.n_plus) + ", n- " + to_string(expect.n_minus) + ")");
    }
    for (const auto& [k, row] : derived) {
      const bool listed = std::any_of(rows.begin(), rows.end(), [k = k](const AggregatedRow& x) { return x.k == k; });
      if (!listed && (row.n_plus != 0 || row.n_minus != 0))
        throw VerificationError("curve records give nonzero row k=" + std::to_string(k) +
                                " missing from the supplied rows");
    }
  }
}

/// Per-k rows; in per-curve mode they are recomputed from the records.
inline std::vector<AggregatedRow> aggregate_rows(const RelativeCountSet& set) {
  if (set.mode == RecordMode::aggregated) {
    auto rows = set.rows;
    std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.k < b.k; });
    return rows;
  }
  std::vector<AggregatedRow> out;
  for (auto& [k, row] : detail::derive_rows(set, false)) out.push_back(row);
  return out;
}

inline BigInt w_side(const RelativeCountSet& set, MorseSign side) {
  BigInt total = 0;
  for (const auto& row : aggregate_rows(set)) total += side == MorseSign::plus ? row.n_plus : row.n_minus;
  return total;
}

inline BigInt w_plus(const RelativeCountSet& set) { return w_side(set, MorseSign::plus); }
inline BigInt w_minus(const RelativeCountSet& set) { return w_side(set, MorseSign::minus); }

/// Same aggregation with the sign taken from the solitary nodes lying in S.
inline BigInt modified_w(const RelativeCountSet& set, MorseSign side) {
  detail::require_per_curve(set, "modified invariant");
  BigInt total = 0;
  for (const auto& [k, row] : detail::derive_rows(set, true))
    total += side == MorseSign::plus ? row.n_plus : row.n_minus;
  return total;
}

/// Sum of C(alpha + 2 beta, k) over all records, ignoring masses.
inline BigInt complex_total(const RelativeCountSet& set) {
  detail::require_per_curve(set, "complex total");
  BigInt total = 0;
  for (const auto& c : set.curves) total += c.count * complex_weight(c.profile.alpha, c.profile.beta, c.k);
  return total;
}

/// A computed invariant together with where it came from.
struct InvariantResult {
  std::string surface;
  std::vector<std::int64_t> class_coeffs;
  RealStructureDescriptor real_structure;
  std::int64_t r = 0;
  BigInt value = 0;
  std::string provenance;

  friend bool operator==(const InvariantResult&, const InvariantResult&) = default;
};

struct VanishingVerdict {
  bool applies = false;
};

/// A real locus with at least two components kills every invariant with r >= 2.
inline VanishingVerdict vanishing_rule(const RealStructureDescriptor& rs, std::int64_t r) {
  return {rs.components.size() >= 2 && r >= 2};
}

inline RealStructureDescriptor morse_target_structure(const RelativeCountSet& set, MorseSign sign) {
  const auto& override_comps = sign == MorseSign::plus ? set.plus_target_components : set.minus_target_components;
  auto comps = override_comps ? *override_comps : set.source.components;
  std::string selected = set.source.selected_component;
  if (std::none_of(comps.begin(), comps.end(), [&](const RealComponent& c) { return c.label == selected; }))
    selected = comps.empty() ? std::string{} : comps.front().label;
  return RealStructureDescriptor(morse_target_chi(set.source.euler_char, sign), std::move(comps), selected);
}

/// Invariant of the smoothing with the given chi: W+ when chi is unchanged,
/// W- when it grows by two.
inline InvariantResult apply_morse(const RelativeCountSet& set, std::int64_t target_chi) {
  set.validate();
  const auto chi = set.source.euler_char;
  MorseSign sign;
  if (target_chi == chi) sign = MorseSign::plus;
  else if (target_chi == chi + 2) sign = MorseSign::minus;
  else
    throw InputError("target chi " + std::to_string(target_chi) +
                     " is not a Morse simplification of this source (chi " + std::to_string(chi) + ")");
  build_morse_move(*set.surface, set.minus_two_class, set.source, sign);

  InvariantResult out;
  out.surface = set.surface->name;
  out.class_coeffs = set.target_class.coeffs();
  out.real_structure = morse_target_structure(set, sign);
  out.r = set.r;
  out.value = w_side(set, sign);
  out.provenance = sign == MorseSign::plus
                       ? "Morse smoothing c+ (chi unchanged): W = W+ summed over k of mu+_k"
                       : "Morse smoothing c- (chi + 2): W = W- summed over k of mu-_k";
  out.provenance += set.mode == RecordMode::aggregated ? " [aggregated rows]" : " [per-curve records]";
  if (vanishing_rule(out.real_structure, out.r).applies) {
    if (out.value != 0)
      throw VerificationError("invariant " + to_string(out.value) +
                              " on a disconnected real locus with r >= 2 must vanish");
    out.provenance += "; disconnected real locus with r >= 2: vanishing confirmed";
  }
  return out;
}

struct MonotonicityViolation {
  InvariantResult lower_chi;   // chi(X1) <= chi(X2) ...
  InvariantResult higher_chi;  // ... yet W(X1) < W(X2)
};

namespace detail {
inline const SurfaceModel& deformation_family(const std::string& surface) {
  if (surface == "F0" || surface == "Q") return models::f0();
  if (surface == "CP2_6_conic") return models::cp2_6_conic();
  throw InputError("surface '" + surface + "' is not in an F0-type or CP2_6-type deformation family");
}
}  // namespace detail

/// Ordered pairs (X1, X2) with chi(X1) <= chi(X2) but W(X1) < W(X2). Results
/// must share a deformation family, a class and the purely real r.
inline std::vector<MonotonicityViolation> monotonicity_audit(const std::vector<InvariantResult>& results) {
  if (results.empty()) return {};
  const auto& family = detail::deformation_family(results.front().surface);
  for (const auto& res : results) {
    if (&detail::deformation_family(res.surface) != &family)
      throw InputError("monotonicity audit mixes deformation families");
    if (res.class_coeffs != results.front().class_coeffs) throw InputError("monotonicity audit mixes classes");
  }
  const auto full = points_required(family, family.make_class(results.front().class_coeffs));
  for (const auto& res : results)
    if (res.r != full)
      throw InputError("monotonicity audit needs purely real configurations (r = " + std::to_string(full) + ")");

  std::vector<MonotonicityViolation> out;
  for (const auto& a : results)
    for (const auto& b : results)
      if (&a != &b && a.real_structure.euler_char <= b.real_structure.euler_char && a.value < b.value)
        out.push_back({a, b});
  return out;
}

}  // namespace wlab
