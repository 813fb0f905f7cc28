#pragma once

// Integer homology models of the rational surfaces handled by wlab:
// intersection lattices, divisor classes, the anticanonical pairing, real
// structure descriptors and the bookkeeping of the two real smoothings of a
// (-2)-curve.

#include <algorithm>
#include <cstdint>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "wlab/error.hpp"

namespace wlab {

class IntersectionLattice {
 public:
  IntersectionLattice(std::vector<std::string> basis_labels,
                      std::vector<std::vector<std::int64_t>> pairing)
      : labels_(std::move(basis_labels)), pairing_(std::move(pairing)) {
    if (labels_.empty()) throw InputError("intersection lattice must have positive rank");
    if (pairing_.size() != labels_.size())
      throw InputError("pairing matrix row count does not match the basis");
    for (const auto& row : pairing_)
      if (row.size() != labels_.size())
        throw InputError("pairing matrix is not square");
    for (std::size_t i = 0; i < rank(); ++i)
      for (std::size_t j = 0; j < i; ++j)
        if (pairing_[i][j] != pairing_[j][i])
          throw InputError("pairing matrix is not symmetric");
  }

  std::size_t rank() const { return labels_.size(); }
  const std::vector<std::string>& basis_labels() const { return labels_; }
  std::int64_t pairing(std::size_t i, std::size_t j) const { return pairing_[i][j]; }

  friend bool operator==(const IntersectionLattice&, const IntersectionLattice&) = default;

 private:
  std::vector<std::string> labels_;
  std::vector<std::vector<std::int64_t>> pairing_;
};

using LatticePtr = std::shared_ptr<const IntersectionLattice>;

/// A class in H_2 given by its coordinates in the lattice basis.
class DivisorClass {
 public:
  DivisorClass() = default;
  DivisorClass(LatticePtr lattice, std::vector<std::int64_t> coeffs)
      : lattice_(std::move(lattice)), coeffs_(std::move(coeffs)) {
    if (!lattice_) throw InputError("divisor class without a lattice");
    if (coeffs_.size() != lattice_->rank()) {
      std::ostringstream msg;
      msg << "class has " << coeffs_.size() << " coefficients, lattice rank is "
          << lattice_->rank();
      throw InputError(msg.str());
    }
  }

  const LatticePtr& lattice() const { return lattice_; }
  const std::vector<std::int64_t>& coeffs() const { return coeffs_; }
  std::int64_t operator[](std::size_t i) const { return coeffs_[i]; }

  bool same_lattice(const DivisorClass& other) const {
    if (!lattice_ || !other.lattice_) return false;
    return lattice_ == other.lattice_ || *lattice_ == *other.lattice_;
  }

  DivisorClass operator+(const DivisorClass& o) const { return combine(o, 1); }
  DivisorClass operator-(const DivisorClass& o) const { return combine(o, -1); }
  friend DivisorClass operator*(std::int64_t s, const DivisorClass& c) {
    auto out = c.coeffs_;
    for (auto& x : out) x *= s;
    return DivisorClass(c.lattice_, std::move(out));
  }

  friend bool operator==(const DivisorClass& a, const DivisorClass& b) {
    return a.same_lattice(b) && a.coeffs_ == b.coeffs_;
  }

  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(coeffs_[i]);
    }
    return s;
  }

 private:
  DivisorClass combine(const DivisorClass& o, std::int64_t sign) const {
    if (!same_lattice(o)) throw InputError("classes belong to different lattices");
    auto out = coeffs_;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += sign * o.coeffs_[i];
    return DivisorClass(lattice_, std::move(out));
  }

  LatticePtr lattice_;
  std::vector<std::int64_t> coeffs_;
};

/// c1^T * pairing * c2.
inline std::int64_t intersect(const DivisorClass& c1, const DivisorClass& c2) {
  if (!c1.same_lattice(c2)) throw InputError("cannot intersect classes from different lattices");
  const auto& lat = *c1.lattice();
  std::int64_t sum = 0;
  for (std::size_t i = 0; i < lat.rank(); ++i)
    for (std::size_t j = 0; j < lat.rank(); ++j) sum += c1[i] * lat.pairing(i, j) * c2[j];
  return sum;
}

enum class ToricFamily { none, p2, f0, f2 };

struct SurfaceModel {
  std::string name;
  LatticePtr lattice;
  std::vector<std::int64_t> canonical;  // K in the lattice basis
  ToricFamily toric = ToricFamily::none;

  DivisorClass canonical_class() const { return DivisorClass(lattice, canonical); }
  DivisorClass anticanonical_class() const { return -1 * canonical_class(); }

  /// Parses a comma-separated coefficient vector in this model's basis order.
  DivisorClass parse_class(const std::string& text) const;
  DivisorClass make_class(std::vector<std::int64_t> coeffs) const {
    return DivisorClass(lattice, std::move(coeffs));
  }
};

inline std::vector<std::int64_t> parse_int_list(const std::string& text) {
  std::vector<std::int64_t> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    auto b = item.find_first_not_of(" \t");
    auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw InputError("empty entry in integer list '" + text + "'");
    item = item.substr(b, e - b + 1);
    std::size_t used = 0;
    std::int64_t v = 0;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception&) {
      throw InputError("not an integer: '" + item + "'");
    }
    if (used != item.size()) throw InputError("not an integer: '" + item + "'");
    out.push_back(v);
  }
  if (out.empty()) throw InputError("empty integer list");
  return out;
}

inline DivisorClass SurfaceModel::parse_class(const std::string& text) const {
  return DivisorClass(lattice, parse_int_list(text));
}

namespace models {

inline const SurfaceModel& p2() {
  static const SurfaceModel m{
      "P2", std::make_shared<IntersectionLattice>(std::vector<std::string>{"H"},
                                                  std::vector<std::vector<std::int64_t>>{{1}}),
      {-3}, ToricFamily::p2};
  return m;
}

inline const SurfaceModel& f0() {
  static const SurfaceModel m{
      "F0",
      std::make_shared<IntersectionLattice>(std::vector<std::string>{"B1", "B2"},
                                            std::vector<std::vector<std::int64_t>>{{0, 1}, {1, 0}}),
      {-2, -2}, ToricFamily::f0};
  return m;
}

/// Basis (B, F) with B^2 = 2; the (-2)-section is B - 2F.
inline const SurfaceModel& f2() {
  static const SurfaceModel m{
      "F2",
      std::make_shared<IntersectionLattice>(std::vector<std::string>{"B", "F"},
                                            std::vector<std::vector<std::int64_t>>{{2, 1}, {1, 0}}),
      {-2, 0}, ToricFamily::f2};
  return m;
}

/// CP^2 blown up at six points on a conic; basis H, E1..E6.
inline const SurfaceModel& cp2_6_conic() {
  static const SurfaceModel m = [] {
    std::vector<std::string> labels{"H"};
    for (int i = 1; i <= 6; ++i) labels.push_back("E" + std::to_string(i));
    std::vector<std::vector<std::int64_t>> pairing(7, std::vector<std::int64_t>(7, 0));
    pairing[0][0] = 1;
    for (int i = 1; i < 7; ++i) pairing[i][i] = -1;
    return SurfaceModel{"CP2_6_conic",
                        std::make_shared<IntersectionLattice>(std::move(labels), std::move(pairing)),
                        {-3, 1, 1, 1, 1, 1, 1}, ToricFamily::none};
  }();
  return m;
}

inline const std::vector<const SurfaceModel*>& all() {
  static const std::vector<const SurfaceModel*> v{&p2(), &f0(), &f2(), &cp2_6_conic()};
  return v;
}

inline const SurfaceModel& by_name(const std::string& name) {
  for (const auto* m : all())
    if (m->name == name) return *m;
  throw InputError("unknown surface '" + name + "' (expected P2, F0, F2 or CP2_6_conic)");
}

/// E = B - 2F on F2.
inline DivisorClass f2_minus_two_section() { return f2().make_class({1, -2}); }
/// The conic class 2H - sum(Ei) on CP2_6_conic.
inline DivisorClass conic_class() { return cp2_6_conic().make_class({2, -1, -1, -1, -1, -1, -1}); }
/// Twice the anticanonical class on CP2_6_conic.
inline DivisorClass delta_class() { return -2 * cp2_6_conic().canonical_class(); }

}  // namespace models

inline void require_in_model(const SurfaceModel& x, const DivisorClass& d) {
  if (!d.lattice() || (d.lattice() != x.lattice && !(*d.lattice() == *x.lattice)))
    throw InputError("class does not belong to the lattice of " + x.name);
}

/// c1(X) . d = (-K) . d
inline std::int64_t chern_degree(const SurfaceModel& x, const DivisorClass& d) {
  require_in_model(x, d);
  return intersect(x.anticanonical_class(), d);
}

/// Size of a generic point configuration cutting out finitely many rational curves.
inline std::int64_t points_required(const SurfaceModel& x, const DivisorClass& d) {
  return chern_degree(x, d) - 1;
}

inline bool is_minus_two_curve_class(const SurfaceModel& x, const DivisorClass& e) {
  require_in_model(x, e);
  return intersect(e, e) == -2 && chern_degree(x, e) == 0;
}

/// (d - kE) . E, the number alpha + 2 beta of intersection points with E.
inline std::int64_t tangency_budget(const SurfaceModel& x, const DivisorClass& d,
                                    const DivisorClass& e, std::int64_t k) {
  if (k < 0) throw InputError("k must be nonnegative");
  if (!is_minus_two_curve_class(x, e))
    throw InputError("E must satisfy E.E = -2 and c1.E = 0");
  require_in_model(x, d);
  const std::int64_t b = intersect(d - k * e, e);
  if (b < 0)
    throw InputError("class cannot meet E transversally with this k (budget " +
                     std::to_string(b) + ")");
  return b;
}

struct RealComponent {
  std::string label;
  bool orientable = false;
  friend bool operator==(const RealComponent&, const RealComponent&) = default;
};

/// Topological data of a real structure used by the invariants: chi of the
/// real locus, its components, and the component S carrying the real points.
struct RealStructureDescriptor {
  std::int64_t euler_char = 0;
  std::vector<RealComponent> components;
  std::string selected_component;

  RealStructureDescriptor() = default;
  RealStructureDescriptor(std::int64_t chi, std::vector<RealComponent> comps, std::string selected = {})
      : euler_char(chi), components(std::move(comps)), selected_component(std::move(selected)) {
    if (selected_component.empty() && !components.empty())
      selected_component = components.front().label;
    if (!selected_component.empty() &&
        std::none_of(components.begin(), components.end(),
                     [&](const RealComponent& c) { return c.label == selected_component; }))
      throw InputError("selected component '" + selected_component + "' is not a component");
  }

  friend bool operator==(const RealStructureDescriptor&, const RealStructureDescriptor&) = default;
};

/// "S1:nonorientable,S2:orientable"; an empty string means an empty real locus.
inline std::vector<RealComponent> parse_components(const std::string& text) {
  std::vector<RealComponent> out;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    auto b = item.find_first_not_of(" \t");
    if (b == std::string::npos) continue;
    item = item.substr(b, item.find_last_not_of(" \t") - b + 1);
    auto colon = item.find(':');
    RealComponent c;
    c.label = item.substr(0, colon);
    if (c.label.empty()) throw InputError("component without a label in '" + text + "'");
    if (colon != std::string::npos) {
      const auto kind = item.substr(colon + 1);
      if (kind == "orientable") c.orientable = true;
      else if (kind == "nonorientable") c.orientable = false;
      else throw InputError("component kind must be orientable or nonorientable, got '" + kind + "'");
    }
    for (const auto& seen : out)
      if (seen.label == c.label) throw InputError("duplicate component label '" + c.label + "'");
    out.push_back(std::move(c));
  }
  return out;
}

inline std::string format_components(const std::vector<RealComponent>& comps) {
  std::string s;
  for (const auto& c : comps) {
    if (!s.empty()) s += ',';
    s += c.label + (c.orientable ? ":orientable" : ":nonorientable");
  }
  return s;
}

enum class MorseSign { plus, minus };

inline const char* to_string(MorseSign s) { return s == MorseSign::plus ? "plus" : "minus"; }

inline MorseSign parse_sign(const std::string& s) {
  if (s == "plus") return MorseSign::plus;
  if (s == "minus") return MorseSign::minus;
  throw InputError("side must be plus or minus, got '" + s + "'");
}

/// One of the two real smoothings along a real (-2)-curve. The plus smoothing
/// keeps chi of the real locus, the minus smoothing raises it by two.
struct MorseMove {
  const SurfaceModel* surface = nullptr;
  DivisorClass minus_two_class;
  RealStructureDescriptor source;
  MorseSign sign = MorseSign::plus;
  std::int64_t target_euler_char = 0;
};

inline std::int64_t morse_target_chi(std::int64_t source_chi, MorseSign sign) {
  return sign == MorseSign::plus ? source_chi : source_chi + 2;
}

inline MorseMove build_morse_move(const SurfaceModel& x, const DivisorClass& e,
                                  const RealStructureDescriptor& rs, MorseSign sign) {
  if (!is_minus_two_curve_class(x, e))
    throw InputError("class " + e.to_string() + " is not a (-2)-curve class on " + x.name);
  return MorseMove{&x, e, rs, sign, morse_target_chi(rs.euler_char, sign)};
}

}  // namespace wlab
