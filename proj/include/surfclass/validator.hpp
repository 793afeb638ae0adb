#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "surfclass/tape_format.hpp"
#include "surfclass/triangulation.hpp"
#include "surfclass/workspace.hpp"

namespace surfclass {

/// The five table conditions, in the order they are checked for each (t, e).
enum class ViolationKind : std::uint8_t {
  DuplicateTarget,           // (t,e) or (t,ē) occurs more than once
  BoundaryReferenced,        // row t column e is boundary, yet (t,e)/(t,ē) occurs
  AsymmetricGluing,          // (s,f), f forward, but row s column f != (t,e)
  AsymmetricReversedGluing,  // (s,f), f reversed, but row s column f̄ != (t,ē)
  SelfGluing,                // row t column e is (t,e) or (t,ē)
};

constexpr std::string_view to_string(ViolationKind k) noexcept {
  switch (k) {
    case ViolationKind::DuplicateTarget: return "DuplicateTarget";
    case ViolationKind::BoundaryReferenced: return "BoundaryReferenced";
    case ViolationKind::AsymmetricGluing: return "AsymmetricGluing";
    case ViolationKind::AsymmetricReversedGluing: return "AsymmetricReversedGluing";
    case ViolationKind::SelfGluing: return "SelfGluing";
  }
  return "";
}

struct Violation {
  ViolationKind kind;
  TriangleIndex t;
  Column e;
  std::string detail;

  friend bool operator==(const Violation&, const Violation&) = default;
};

/// "KIND t=<t> e=<e>: <detail>"
inline std::string format_violation(const Violation& v) {
  return std::string(to_string(v.kind)) + " t=" + std::to_string(v.t) + " e=" +
         std::string(to_string(v.e)) + ": " + v.detail;
}

namespace detail {

inline std::string describe(const GluingEntry& y) {
  if (y.is_boundary()) return "-";
  return std::to_string(y.target) + "," + std::string(to_string(y.label));
}

inline std::string site(TriangleIndex t, EdgeLabel e) {
  return "(" + std::to_string(t) + "," + std::string(to_string(e)) + ")";
}

/// Conditions 1-5 at (t, e), given the joint occurrence count of (t,e)/(t,ē).
template <TableSource S>
void check_site(const S& table, TriangleIndex t, Column col, std::uint64_t occurrences,
                std::vector<Violation>& out) {
  const EdgeLabel e = label_of(col);
  if (occurrences > 1)
    out.push_back({ViolationKind::DuplicateTarget, t, col,
                   site(t, e) + " or " + site(t, reverse(e)) + " occurs " +
                       std::to_string(occurrences) + " times"});

  const GluingEntry y = table.entry(t, col);
  if (y.is_boundary()) {
    if (occurrences != 0)
      out.push_back({ViolationKind::BoundaryReferenced, t, col,
                     "boundary edge referenced " + std::to_string(occurrences) + " time(s)"});
    return;
  }

  const TriangleIndex s = y.target;
  const EdgeLabel f = y.label;
  if (is_forward(f)) {
    const GluingEntry z = table.entry(s, column_of(f));
    if (!(z == GluingEntry::glued(t, e)))
      out.push_back({ViolationKind::AsymmetricGluing, t, col,
                     "entry " + describe(y) + " but row " + std::to_string(s) + " column " +
                         std::string(to_string(column_of(f))) + " holds " + describe(z) +
                         ", expected " + describe(GluingEntry::glued(t, e))});
  } else {
    const GluingEntry z = table.entry(s, column_of(f));
    if (!(z == GluingEntry::glued(t, reverse(e))))
      out.push_back({ViolationKind::AsymmetricReversedGluing, t, col,
                     "entry " + describe(y) + " but row " + std::to_string(s) + " column " +
                         std::string(to_string(column_of(f))) + " holds " + describe(z) +
                         ", expected " + describe(GluingEntry::glued(t, reverse(e)))});
  }

  if (s == t && column_of(f) == col)
    out.push_back({ViolationKind::SelfGluing, t, col, "edge glued to itself"});
}

}  // namespace detail

/// Decide whether a well-formed table is a surface. Returns every violation;
/// an empty list means the table passes. Linear time: occurrence counts are
/// tallied in one pass.
inline std::vector<Violation> check_surface(const Triangulation& tri) {
  const TriangleIndex n = tri.size();
  std::vector<std::uint64_t> occurrences(3 * n, 0);
  for (const Row& row : tri.rows())
    for (const GluingEntry& y : row)
      if (!y.is_boundary())
        ++occurrences[3 * (y.target - 1) + static_cast<std::size_t>(column_of(y.label))];

  std::vector<Violation> out;
  for (TriangleIndex t = 1; t <= n; ++t)
    for (Column col : kColumns)
      detail::check_site(tri, t, col, occurrences[3 * (t - 1) + static_cast<std::size_t>(col)],
                         out);
  return out;
}

/// The same decision as a bounded-memory double scan: for each (t, e) a binary
/// counter re-scans the whole table. Work memory is the loop indices and the
/// counter, charged to `ws`. Violations are collected in the same order as
/// check_surface().
template <TableSource S>
std::vector<Violation> check_surface_scan(const S& table, Workspace& ws) {
  const TriangleIndex n = table.size();
  auto n_bits = ws.charge_counter(n);
  auto t_bits = ws.charge_counter(n);
  auto e_bits = ws.charge(2);
  std::vector<Violation> out;
  for (TriangleIndex t = 1; t <= n; ++t)
    for (Column col : kColumns) {
      auto count_bits = ws.charge_counter(3 * n);
      auto row_bits = ws.charge_counter(n);
      auto col_bits = ws.charge(2);
      const EdgeLabel e = label_of(col);
      std::uint64_t occurrences = 0;
      for (TriangleIndex r = 1; r <= n; ++r)
        for (Column c : kColumns) {
          const GluingEntry y = table.entry(r, c);
          if (!y.is_boundary() && y.target == t && (y.label == e || y.label == reverse(e)))
            ++occurrences;
        }
      detail::check_site(table, t, col, occurrences, out);
    }
  return out;
}

/// Raised by operations that require a valid surface.
class InvalidSurface : public std::runtime_error {
 public:
  InvalidSurface(std::string which, std::vector<Violation> violations)
      : std::runtime_error(which + " is not a surface (" + std::to_string(violations.size()) +
                           " violation(s); first: " +
                           (violations.empty() ? std::string("none")
                                               : format_violation(violations.front())) +
                           ")"),
        which_(std::move(which)),
        violations_(std::move(violations)) {}

  const std::string& which() const noexcept { return which_; }
  const std::vector<Violation>& violations() const noexcept { return violations_; }

 private:
  std::string which_;
  std::vector<Violation> violations_;
};

inline void require_surface(const Triangulation& tri, const std::string& which = "input") {
  auto violations = check_surface(tri);
  if (!violations.empty()) throw InvalidSurface(which, std::move(violations));
}

}  // namespace surfclass
