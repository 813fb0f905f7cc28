#pragma once

// The n+/n- table of several relative count sets sharing one class, one
// column pair per source Euler characteristic, with the W+/W- column sums.

#include <algorithm>
#include <iomanip>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "wlab/ab_engine.hpp"

namespace wlab {

struct CommandOutcome {
  int exit_code = 0;
  std::string payload;      // standard output
  std::string diagnostics;  // standard error
};

struct TableColumn {
  std::int64_t chi = 0;
  std::map<std::uint32_t, AggregatedRow> rows;  // by k
  BigInt w_plus = 0;
  BigInt w_minus = 0;
};

struct CountTable {
  std::vector<std::uint32_t> ks;
  std::vector<TableColumn> columns;  // increasing chi
};

inline std::string row_label(std::uint32_t k) {
  if (k == 0) return "d";
  if (k == 1) return "d-E";
  return "d-" + std::to_string(k) + "E";
}

inline CountTable build_table(const std::vector<RelativeCountSet>& sets) {
  if (sets.empty()) throw InputError("table needs at least one fixture");
  const auto& first = sets.front();
  std::set<std::int64_t> chis;
  std::set<std::uint32_t> ks;
  CountTable table;
  for (const auto& s : sets) {
    if (s.surface != first.surface || !(s.target_class == first.target_class) ||
        !(s.minus_two_class == first.minus_two_class) || s.r != first.r)
      throw InputError("fixtures disagree on surface, class, E or r");
    if (!chis.insert(s.source.euler_char).second)
      throw InputError("two fixtures for chi = " + std::to_string(s.source.euler_char));
    TableColumn col;
    col.chi = s.source.euler_char;
    for (const auto& row : aggregate_rows(s)) {
      col.rows[row.k] = row;
      ks.insert(row.k);
    }
    col.w_plus = w_plus(s);
    col.w_minus = w_minus(s);
    table.columns.push_back(std::move(col));
  }
  std::sort(table.columns.begin(), table.columns.end(), [](const auto& a, const auto& b) { return a.chi < b.chi; });
  table.ks.assign(ks.begin(), ks.end());
  return table;
}

inline const AggregatedRow& table_cell(const CountTable& t, const TableColumn& col, std::uint32_t k) {
  static const AggregatedRow zero{};
  auto it = col.rows.find(k);
  return it == col.rows.end() ? zero : it->second;
}

inline std::string render_table_text(const CountTable& t) {
  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> header{"class"};
  for (const auto& c : t.columns) {
    header.push_back("n+(" + std::to_string(c.chi) + ")");
    header.push_back("n-(" + std::to_string(c.chi) + ")");
  }
  cells.push_back(header);
  for (auto k : t.ks) {
    std::vector<std::string> line{row_label(k)};
    for (const auto& c : t.columns) {
      const auto& cell = table_cell(t, c, k);
      line.push_back(cell.n_plus.str());
      line.push_back(cell.n_minus.str());
    }
    cells.push_back(line);
  }
  std::vector<std::string> sums{"W"};
  for (const auto& c : t.columns) {
    sums.push_back(c.w_plus.str());
    sums.push_back(c.w_minus.str());
  }
  cells.push_back(sums);

  std::vector<std::size_t> width(header.size(), 0);
  for (const auto& line : cells)
    for (std::size_t i = 0; i < line.size(); ++i) width[i] = std::max(width[i], line[i].size());
  std::ostringstream out;
  for (std::size_t r = 0; r < cells.size(); ++r) {
    if (r + 1 == cells.size()) {
      std::size_t total = 0;
      for (auto w : width) total += w + 2;
      out << std::string(total - 2, '-') << '\n';
    }
    for (std::size_t i = 0; i < cells[r].size(); ++i) {
      if (i) out << "  ";
      if (i == 0) out << std::left << std::setw(static_cast<int>(width[i])) << cells[r][i];
      else out << std::right << std::setw(static_cast<int>(width[i])) << cells[r][i];
    }
    out << '\n';
  }
  return out.str();
}

/// `class,chi,n_plus,n_minus`; the column sums appear under class `W`.
inline std::string render_table_csv(const CountTable& t) {
  std::ostringstream out;
  out << "class,chi,n_plus,n_minus\n";
  for (auto k : t.ks)
    for (const auto& c : t.columns) {
      const auto& cell = table_cell(t, c, k);
      out << row_label(k) << ',' << c.chi << ',' << cell.n_plus << ',' << cell.n_minus << '\n';
    }
  for (const auto& c : t.columns) out << "W," << c.chi << ',' << c.w_plus << ',' << c.w_minus << '\n';
  return out.str();
}

enum class TableFormat { text, csv };

inline CommandOutcome emit_table(const std::vector<RelativeCountSet>& sets, TableFormat format) {
  try {
    const auto t = build_table(sets);
    return {0, format == TableFormat::csv ? render_table_csv(t) : render_table_text(t), {}};
  } catch (const InputError& e) {
    return {2, {}, e.what()};
  }
}

}  // namespace wlab
