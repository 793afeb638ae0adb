#pragma once

#include <array>
#include <bit>
#include <concepts>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "surfclass/workspace.hpp"

namespace surfclass {

using TriangleIndex = std::uint64_t;  // 1-based; 0 never names a triangle

class IndexOutOfRange : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// One of the six oriented edge symbols of a labelled triangle.
enum class EdgeLabel : std::uint8_t { e12, e23, e31, e21, e32, e13 };

/// The three gluing-table columns. Each column is the forward label of one edge.
enum class Column : std::uint8_t { c12 = 0, c23 = 1, c31 = 2 };

inline constexpr std::array<Column, 3> kColumns{Column::c12, Column::c23, Column::c31};
inline constexpr std::array<EdgeLabel, 6> kLabels{EdgeLabel::e12, EdgeLabel::e21, EdgeLabel::e23,
                                                  EdgeLabel::e32, EdgeLabel::e31, EdgeLabel::e13};

/// (ij) -> (ji). A fixed-point-free involution.
constexpr EdgeLabel reverse(EdgeLabel e) noexcept {
  switch (e) {
    case EdgeLabel::e12: return EdgeLabel::e21;
    case EdgeLabel::e21: return EdgeLabel::e12;
    case EdgeLabel::e23: return EdgeLabel::e32;
    case EdgeLabel::e32: return EdgeLabel::e23;
    case EdgeLabel::e31: return EdgeLabel::e13;
    case EdgeLabel::e13: return EdgeLabel::e31;
  }
  return e;
}

/// True for (12), (23), (31): the labels that name a column.
constexpr bool is_forward(EdgeLabel e) noexcept {
  return e == EdgeLabel::e12 || e == EdgeLabel::e23 || e == EdgeLabel::e31;
}

constexpr EdgeLabel label_of(Column c) noexcept {
  switch (c) {
    case Column::c12: return EdgeLabel::e12;
    case Column::c23: return EdgeLabel::e23;
    case Column::c31: return EdgeLabel::e31;
  }
  return EdgeLabel::e12;
}

/// The column holding the undirected edge underlying e.
constexpr Column column_of(EdgeLabel e) noexcept {
  switch (e) {
    case EdgeLabel::e12:
    case EdgeLabel::e21: return Column::c12;
    case EdgeLabel::e23:
    case EdgeLabel::e32: return Column::c23;
    case EdgeLabel::e31:
    case EdgeLabel::e13: return Column::c31;
  }
  return Column::c12;
}

/// First corner i of the label (ij).
constexpr int first_corner(EdgeLabel e) noexcept {
  switch (e) {
    case EdgeLabel::e12:
    case EdgeLabel::e13: return 1;
    case EdgeLabel::e23:
    case EdgeLabel::e21: return 2;
    case EdgeLabel::e31:
    case EdgeLabel::e32: return 3;
  }
  return 1;
}

/// Second corner j of the label (ij).
constexpr int second_corner(EdgeLabel e) noexcept { return first_corner(reverse(e)); }

constexpr std::string_view to_string(EdgeLabel e) noexcept {
  switch (e) {
    case EdgeLabel::e12: return "(12)";
    case EdgeLabel::e21: return "(21)";
    case EdgeLabel::e23: return "(23)";
    case EdgeLabel::e32: return "(32)";
    case EdgeLabel::e31: return "(31)";
    case EdgeLabel::e13: return "(13)";
  }
  return "";
}

constexpr std::string_view to_string(Column c) noexcept {
  switch (c) {
    case Column::c12: return "12";
    case Column::c23: return "23";
    case Column::c31: return "31";
  }
  return "";
}

/// A table cell: either a boundary edge or a gluing to edge `label` of triangle `target`.
struct GluingEntry {
  TriangleIndex target = 0;  // 0 encodes Boundary
  EdgeLabel label = EdgeLabel::e12;

  static constexpr GluingEntry boundary() noexcept { return {}; }
  static constexpr GluingEntry glued(TriangleIndex target, EdgeLabel label) noexcept {
    return {target, label};
  }

  constexpr bool is_boundary() const noexcept { return target == 0; }

  friend constexpr bool operator==(const GluingEntry& a, const GluingEntry& b) noexcept {
    return a.is_boundary() ? b.is_boundary() : (a.target == b.target && a.label == b.label);
  }
};

using Row = std::array<GluingEntry, 3>;

/// n labelled triangles and their 3-column gluing table.
///
/// Construction checks well-formedness only (every glued target in [1, n]);
/// whether the table describes a surface is decided by check_surface().
class Triangulation {
 public:
  Triangulation() = default;
  explicit Triangulation(std::vector<Row> rows) : rows_(std::move(rows)) {
    const auto n = size();
    for (TriangleIndex t = 1; t <= n; ++t)
      for (Column c : kColumns) {
        const auto& y = rows_[t - 1][static_cast<int>(c)];
        if (!y.is_boundary() && y.target > n)
          throw IndexOutOfRange("row " + std::to_string(t) + " column " +
                                std::string(to_string(c)) + " targets triangle " +
                                std::to_string(y.target) + " but n = " + std::to_string(n));
      }
  }

  TriangleIndex size() const noexcept { return rows_.size(); }
  bool empty() const noexcept { return rows_.empty(); }

  /// Row t (1-based), column c.
  const GluingEntry& entry(TriangleIndex t, Column c) const {
    if (t < 1 || t > size())
      throw IndexOutOfRange("triangle " + std::to_string(t) + " outside [1, " +
                            std::to_string(size()) + "]");
    return rows_[t - 1][static_cast<int>(c)];
  }

  const std::vector<Row>& rows() const noexcept { return rows_; }

  friend bool operator==(const Triangulation&, const Triangulation&) = default;

 private:
  std::vector<Row> rows_;
};

/// Anything that answers "row t, column c" for t in [1, size()].
///
/// Triangulation is the materialized case. The metered engine composes lazy
/// sources (double cover, component extraction) that recompute each entry
/// from their upstream source on demand instead of storing a table.
template <class S>
concept TableSource = requires(const S& s, TriangleIndex t, Column c) {
  { s.size() } -> std::convertible_to<TriangleIndex>;
  { s.entry(t, c) } -> std::convertible_to<GluingEntry>;
};

/// Read row t column c of the input. Inside a workspace the read is counted;
/// it is never charged work bits.
inline GluingEntry read_entry(const Triangulation& tri, TriangleIndex t, Column c,
                              Workspace* ws = nullptr) {
  GluingEntry y = tri.entry(t, c);
  if (ws != nullptr) ws->note_input_read();
  return y;
}

/// Input-tape view of a triangulation bound to a workspace: every entry() is a
/// counted read.
class TapeSource {
 public:
  TapeSource(const Triangulation& tri, Workspace& ws) : tri_(&tri), ws_(&ws) {}

  TriangleIndex size() const noexcept { return tri_->size(); }
  GluingEntry entry(TriangleIndex t, Column c) const { return read_entry(*tri_, t, c, ws_); }

  const Triangulation& triangulation() const noexcept { return *tri_; }

 private:
  const Triangulation* tri_;
  Workspace* ws_;
};

/// Copy any table source into a concrete triangulation.
template <TableSource S>
Triangulation materialize(const S& source) {
  const TriangleIndex n = source.size();
  std::vector<Row> rows(n);
  for (TriangleIndex t = 1; t <= n; ++t)
    for (Column c : kColumns) rows[t - 1][static_cast<int>(c)] = source.entry(t, c);
  return Triangulation(std::move(rows));
}

/// Number of boundary entries, x.
template <TableSource S>
std::uint64_t boundary_entry_count(const S& source) {
  std::uint64_t x = 0;
  for (TriangleIndex t = 1; t <= source.size(); ++t)
    for (Column c : kColumns)
      if (source.entry(t, c).is_boundary()) ++x;
  return x;
}

/// Length of the tape encoding in symbols: one per '#', per boundary mark,
/// per binary digit and per edge label.
inline std::uint64_t tape_symbol_count(const Triangulation& tri) {
  std::uint64_t symbols = tri.size();
  for (const Row& row : tri.rows())
    for (const GluingEntry& y : row)
      symbols += y.is_boundary() ? 1 : static_cast<std::uint64_t>(std::bit_width(y.target)) + 1;
  return symbols;
}

}  // namespace surfclass
