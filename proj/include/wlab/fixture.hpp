#pragma once

// Line-oriented fixture files for relative curve data, and the JSON form of
// InvariantResult.
//
//   surface = CP2_6_conic
//   class = 6,-2,-2,-2,-2,-2,-2
//   minus_two_class = 2,-1,-1,-1,-1,-1,-1
//   chi_source = -5
//   components = S1:nonorientable
//   r = 5
//   mode = aggregated
//   row = k:0 n_plus:522 n_minus:522
//
// Per-curve files use `curve = k:1 m:0 alpha:2 beta:0 m_in_s:0 count:118`
// lines. Optional keys: selected_component, plus_target_components,
// minus_target_components.

#include <filesystem>
#include <limits>
#include <optional>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include <json.hpp>

#include "wlab/ab_engine.hpp"

namespace wlab {

namespace detail {

inline std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

/// "k:1 m:0 alpha:2" -> {k:1, m:0, alpha:2}; values kept as text.
inline std::map<std::string, std::string> parse_fields(const std::string& text, const std::string& where) {
  std::map<std::string, std::string> out;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    const auto colon = tok.find(':');
    if (colon == std::string::npos || colon == 0 || colon + 1 == tok.size())
      throw InputError(where + ": expected name:value, got '" + tok + "'");
    if (!out.emplace(tok.substr(0, colon), tok.substr(colon + 1)).second)
      throw InputError(where + ": repeated field '" + tok.substr(0, colon) + "'");
  }
  return out;
}

inline BigInt field_int(const std::map<std::string, std::string>& f, const std::string& name,
                        const std::string& where, std::optional<BigInt> fallback = std::nullopt) {
  auto it = f.find(name);
  if (it == f.end()) {
    if (fallback) return *fallback;
    throw InputError(where + ": missing field '" + name + "'");
  }
  BigInt v;
  if (!parse_bigint(it->second, v)) throw InputError(where + ": field '" + name + "' is not an integer");
  return v;
}

inline std::uint32_t field_u32(const std::map<std::string, std::string>& f, const std::string& name,
                               const std::string& where, std::optional<std::uint32_t> fallback = std::nullopt) {
  const auto v = field_int(f, name, where, fallback ? std::optional<BigInt>(*fallback) : std::nullopt);
  if (v < 0 || v > 1'000'000) throw InputError(where + ": field '" + name + "' out of range");
  return v.convert_to<std::uint32_t>();
}

inline void reject_unknown(const std::map<std::string, std::string>& f, const std::set<std::string>& known,
                           const std::string& where) {
  for (const auto& [k, v] : f)
    if (!known.count(k)) throw InputError(where + ": unknown field '" + k + "'");
}

inline std::int64_t parse_i64(const std::string& text, const std::string& where) {
  const auto v = parse_int_list(text);
  if (v.size() != 1) throw InputError(where + ": expected a single integer");
  return v.front();
}

}  // namespace detail

inline RelativeCountSet parse_fixture(std::istream& in, const std::string& source_name = "<fixture>") {
  std::map<std::string, std::string> scalars;
  std::vector<std::pair<int, std::string>> row_lines, curve_lines;
  std::string line;
  int lineno = 0;
  static const std::set<std::string> scalar_keys{
      "surface", "class", "minus_two_class", "chi_source", "components", "selected_component",
      "plus_target_components", "minus_target_components", "r", "mode"};

  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = detail::trim(line);
    if (line.empty()) continue;
    const auto where = source_name + ":" + std::to_string(lineno);
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw InputError(where + ": expected key = value");
    const auto key = detail::trim(line.substr(0, eq));
    const auto value = detail::trim(line.substr(eq + 1));
    if (key == "row") row_lines.emplace_back(lineno, value);
    else if (key == "curve") curve_lines.emplace_back(lineno, value);
    else if (scalar_keys.count(key)) {
      if (!scalars.emplace(key, value).second) throw InputError(where + ": repeated key '" + key + "'");
    } else
      throw InputError(where + ": unknown key '" + key + "'");
  }

  auto require = [&](const std::string& key) -> const std::string& {
    auto it = scalars.find(key);
    if (it == scalars.end()) throw InputError(source_name + ": missing key '" + key + "'");
    return it->second;
  };

  RelativeCountSet set;
  set.surface = &models::by_name(require("surface"));
  set.target_class = set.surface->parse_class(require("class"));
  set.minus_two_class = set.surface->parse_class(require("minus_two_class"));
  set.source = RealStructureDescriptor(
      detail::parse_i64(require("chi_source"), source_name + ": chi_source"),
      parse_components(scalars.count("components") ? scalars["components"] : std::string{}),
      scalars.count("selected_component") ? scalars["selected_component"] : std::string{});
  if (scalars.count("plus_target_components"))
    set.plus_target_components = parse_components(scalars["plus_target_components"]);
  if (scalars.count("minus_target_components"))
    set.minus_target_components = parse_components(scalars["minus_target_components"]);
  set.r = detail::parse_i64(require("r"), source_name + ": r");

  const auto& mode = require("mode");
  if (mode == "aggregated") set.mode = RecordMode::aggregated;
  else if (mode == "perCurve" || mode == "per_curve") set.mode = RecordMode::per_curve;
  else throw InputError(source_name + ": mode must be aggregated or perCurve, got '" + mode + "'");

  for (const auto& [no, text] : row_lines) {
    const auto where = source_name + ":" + std::to_string(no);
    const auto f = detail::parse_fields(text, where);
    detail::reject_unknown(f, {"k", "n_plus", "n_minus"}, where);
    set.rows.push_back({detail::field_u32(f, "k", where), detail::field_int(f, "n_plus", where),
                        detail::field_int(f, "n_minus", where)});
  }
  for (const auto& [no, text] : curve_lines) {
    const auto where = source_name + ":" + std::to_string(no);
    if (set.mode != RecordMode::per_curve) throw InputError(where + ": curve line in an aggregated fixture");
    const auto f = detail::parse_fields(text, where);
    detail::reject_unknown(f, {"k", "m", "alpha", "beta", "m_in_s", "count"}, where);
    CurveRecord c;
    c.k = detail::field_u32(f, "k", where);
    c.mass = detail::field_u32(f, "m", where);
    c.mass_in_s = detail::field_u32(f, "m_in_s", where, c.mass);
    c.profile = {detail::field_u32(f, "alpha", where), detail::field_u32(f, "beta", where)};
    c.count = detail::field_int(f, "count", where, BigInt(1));
    set.curves.push_back(std::move(c));
  }
  if (set.mode == RecordMode::aggregated && set.rows.empty())
    throw InputError(source_name + ": aggregated fixture without rows");

  set.validate();
  return set;
}

inline RelativeCountSet parse_fixture_text(const std::string& text, const std::string& source_name = "<fixture>") {
  std::istringstream in(text);
  return parse_fixture(in, source_name);
}

inline RelativeCountSet load_fixture(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open fixture '" + path.string() + "'");
  return parse_fixture(in, path.string());
}

inline std::string write_fixture(const RelativeCountSet& set) {
  std::ostringstream out;
  out << "surface = " << set.surface->name << '\n'
      << "class = " << set.target_class.to_string() << '\n'
      << "minus_two_class = " << set.minus_two_class.to_string() << '\n'
      << "chi_source = " << set.source.euler_char << '\n'
      << "components = " << format_components(set.source.components) << '\n';
  if (!set.source.selected_component.empty())
    out << "selected_component = " << set.source.selected_component << '\n';
  if (set.plus_target_components)
    out << "plus_target_components = " << format_components(*set.plus_target_components) << '\n';
  if (set.minus_target_components)
    out << "minus_target_components = " << format_components(*set.minus_target_components) << '\n';
  out << "r = " << set.r << '\n'
      << "mode = " << (set.mode == RecordMode::aggregated ? "aggregated" : "perCurve") << '\n';
  for (const auto& row : set.rows)
    out << "row = k:" << row.k << " n_plus:" << row.n_plus << " n_minus:" << row.n_minus << '\n';
  for (const auto& c : set.curves)
    out << "curve = k:" << c.k << " m:" << c.mass << " alpha:" << c.profile.alpha << " beta:" << c.profile.beta
        << " m_in_s:" << c.mass_in_s << " count:" << c.count << '\n';
  return out.str();
}

// JSON: {"surface","class","chi_target","r","value","provenance"} plus the
// component list. Values beyond 64 bits are written as decimal strings.

inline nlohmann::json to_json(const InvariantResult& res) {
  nlohmann::json j;
  j["surface"] = res.surface;
  j["class"] = res.class_coeffs;
  j["chi_target"] = res.real_structure.euler_char;
  j["components"] = format_components(res.real_structure.components);
  j["selected_component"] = res.real_structure.selected_component;
  j["r"] = res.r;
  if (res.value >= std::numeric_limits<std::int64_t>::min() && res.value <= std::numeric_limits<std::int64_t>::max())
    j["value"] = res.value.convert_to<std::int64_t>();
  else
    j["value"] = res.value.str();
  j["provenance"] = res.provenance;
  return j;
}

inline InvariantResult invariant_result_from_json(const nlohmann::json& j) {
  try {
    InvariantResult res;
    res.surface = j.at("surface").get<std::string>();
    res.class_coeffs = j.at("class").get<std::vector<std::int64_t>>();
    res.real_structure = RealStructureDescriptor(
        j.at("chi_target").get<std::int64_t>(),
        parse_components(j.value("components", std::string{})), j.value("selected_component", std::string{}));
    res.r = j.at("r").get<std::int64_t>();
    const auto& v = j.at("value");
    if (v.is_string()) {
      if (!parse_bigint(v.get<std::string>(), res.value)) throw InputError("value is not an integer");
    } else {
      res.value = v.get<std::int64_t>();
    }
    res.provenance = j.value("provenance", std::string{});
    return res;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed invariant JSON: ") + e.what());
  }
}

}  // namespace wlab
