#pragma once

// The auxiliary structures derived from a gluing table: the face-dual graph,
// the corner graphs K (vertex identification) and K' (K plus one edge per
// boundary edge), and the orientation double cover.
//
// Each comes in two forms. The *Stream / *Source templates recompute their
// output from an upstream table source on every request and hold no storage;
// the metered engine composes them. The plain functions at the bottom
// materialize the same objects for the baseline engine.

#include <array>
#include <cstdint>
#include <vector>

#include "surfclass/graph.hpp"
#include "surfclass/triangulation.hpp"

namespace surfclass {

/// Corner i (1..3) of triangle t.
struct CornerId {
  TriangleIndex t;
  int i;

  friend bool operator==(const CornerId&, const CornerId&) = default;
};

/// Graph vertex id of a corner: 3(t-1) + i, so ids run 1..3n.
constexpr VertexId corner_vertex(TriangleIndex t, int i) noexcept {
  return 3 * (t - 1) + static_cast<VertexId>(i);
}

constexpr CornerId corner_of(VertexId v) noexcept {
  return {(v - 1) / 3 + 1, static_cast<int>((v - 1) % 3) + 1};
}

/// The two columns of a triangle that contain corner i.
constexpr std::array<Column, 2> columns_at_corner(int i) noexcept {
  switch (i) {
    case 1: return {Column::c12, Column::c31};
    case 2: return {Column::c12, Column::c23};
    default: return {Column::c23, Column::c31};
  }
}

/// Face-dual graph: vertex per triangle, edge {s,t} (s != t) when either row
/// refers to the other.
template <TableSource S>
class FaceDualStream {
 public:
  explicit FaceDualStream(const S& table) : table_(&table) {}

  std::uint64_t vertex_count() const { return table_->size(); }

  bool adjacent(VertexId a, VertexId b) const {
    return a != b && (refers_to(a, b) || refers_to(b, a));
  }

  template <class F>
  void for_each_edge(F&& f) const {
    const TriangleIndex n = table_->size();
    for (TriangleIndex t = 1; t <= n; ++t)
      for (Column c : kColumns) {
        const GluingEntry y = table_->entry(t, c);
        if (!y.is_boundary() && y.target != t) f(t, y.target);
      }
  }

  template <class F>
  void for_each_neighbour(VertexId v, F&& f) const {
    for (Column c : kColumns) {
      const GluingEntry y = table_->entry(v, c);
      if (!y.is_boundary() && y.target != v) f(static_cast<VertexId>(y.target));
    }
  }

 private:
  bool refers_to(TriangleIndex from, TriangleIndex to) const {
    for (Column c : kColumns) {
      const GluingEntry y = table_->entry(from, c);
      if (!y.is_boundary() && y.target == to) return true;
    }
    return false;
  }

  const S* table_;
};

/// Corner graph on the 3n corners. Row t column (ij) glued to (s,(pq))
/// identifies w(t,i)~w(s,p) and w(t,j)~w(s,q). With WithBoundary, a boundary
/// entry at (t,(ij)) adds w(t,i)~w(t,j): that is K'; without it, K.
template <TableSource S, bool WithBoundary>
class CornerStream {
 public:
  explicit CornerStream(const S& table) : table_(&table) {}

  std::uint64_t vertex_count() const { return 3 * table_->size(); }

  bool adjacent(VertexId a, VertexId b) const {
    if (a == b) return false;
    bool found = false;
    for_each_neighbour(a, [&](VertexId w) { found = found || w == b; });
    if (found) return true;
    for_each_neighbour(b, [&](VertexId w) { found = found || w == a; });
    return found;
  }

  template <class F>
  void for_each_edge(F&& f) const {
    const TriangleIndex n = table_->size();
    for (TriangleIndex t = 1; t <= n; ++t)
      for (Column c : kColumns) {
        const EdgeLabel e = label_of(c);
        const int i = first_corner(e);
        const int j = second_corner(e);
        const GluingEntry y = table_->entry(t, c);
        if (!y.is_boundary()) {
          emit(f, corner_vertex(t, i), corner_vertex(y.target, first_corner(y.label)));
          emit(f, corner_vertex(t, j), corner_vertex(y.target, second_corner(y.label)));
        } else if constexpr (WithBoundary) {
          emit(f, corner_vertex(t, i), corner_vertex(t, j));
        }
      }
  }

  /// Corners identified with v through the two table edges at v (loops skipped).
  template <class F>
  void for_each_neighbour(VertexId v, F&& f) const {
    const CornerId corner = corner_of(v);
    for (Column c : columns_at_corner(corner.i)) {
      const EdgeLabel e = label_of(c);
      const bool is_first = first_corner(e) == corner.i;
      const GluingEntry y = table_->entry(corner.t, c);
      VertexId w = 0;
      if (!y.is_boundary()) {
        w = corner_vertex(y.target, is_first ? first_corner(y.label) : second_corner(y.label));
      } else if constexpr (WithBoundary) {
        w = corner_vertex(corner.t, is_first ? second_corner(e) : first_corner(e));
      } else {
        continue;
      }
      if (w != v) f(w);
    }
  }

 private:
  template <class F>
  static void emit(F& f, VertexId a, VertexId b) {
    if (a != b) f(a, b);
  }

  const S* table_;
};

template <TableSource S>
using VertexIdentificationStream = CornerStream<S, false>;
template <TableSource S>
using BoundaryIdentificationStream = CornerStream<S, true>;

/// Orientation double cover: triangles 1..n, then 1'..n' numbered n+1..2n.
/// A gluing along a forward label (12),(23),(31) crosses sheets; along a
/// reversed label it stays on the sheet. Boundary stays boundary on both.
template <TableSource S>
class DoubleCoverSource {
 public:
  explicit DoubleCoverSource(const S& base) : base_(&base) {}

  TriangleIndex size() const { return 2 * base_->size(); }

  GluingEntry entry(TriangleIndex t, Column c) const {
    const TriangleIndex n = base_->size();
    if (t < 1 || t > 2 * n)
      throw IndexOutOfRange("double-cover triangle " + std::to_string(t) + " outside [1, " +
                            std::to_string(2 * n) + "]");
    const bool primed = t > n;
    const GluingEntry y = base_->entry(primed ? t - n : t, c);
    if (y.is_boundary()) return y;
    const bool cross = is_forward(y.label) != primed;
    return GluingEntry::glued(cross ? y.target + n : y.target, y.label);
  }

 private:
  const S* base_;
};

inline UndirectedGraph face_dual(const Triangulation& tri) {
  return materialize_graph(FaceDualStream<Triangulation>(tri));
}

inline UndirectedGraph vertex_identification_graph(const Triangulation& tri) {
  return materialize_graph(VertexIdentificationStream<Triangulation>(tri));
}

inline UndirectedGraph boundary_identification_graph(const Triangulation& tri) {
  return materialize_graph(BoundaryIdentificationStream<Triangulation>(tri));
}

inline Triangulation double_cover(const Triangulation& tri) {
  return materialize(DoubleCoverSource<Triangulation>(tri));
}

/// Corner degrees in the identification multigraph: one corner edge per
/// corner correspondence of each glued pair of triangle edges (each pair
/// counted once), plus, when with_boundary, one edge per boundary edge.
/// A loop adds 2. On a valid surface every K' degree is exactly 2 and every
/// K degree is at most 2; the simple graphs above can show less, since
/// deduplication merges parallel edges.
inline std::vector<std::uint32_t> corner_multidegrees(const Triangulation& tri, bool with_boundary) {
  const TriangleIndex n = tri.size();
  std::vector<std::uint32_t> degree(3 * n, 0);
  auto bump = [&](TriangleIndex t, int i) { ++degree[corner_vertex(t, i) - 1]; };
  for (TriangleIndex t = 1; t <= n; ++t)
    for (Column c : kColumns) {
      const EdgeLabel e = label_of(c);
      const GluingEntry& y = tri.entry(t, c);
      if (y.is_boundary()) {
        if (with_boundary) {
          bump(t, first_corner(e));
          bump(t, second_corner(e));
        }
        continue;
      }
      const auto here = std::pair{t, static_cast<int>(c)};
      const auto there = std::pair{y.target, static_cast<int>(column_of(y.label))};
      if (!(here < there)) continue;
      bump(t, first_corner(e));
      bump(y.target, first_corner(y.label));
      bump(t, second_corner(e));
      bump(y.target, second_corner(y.label));
    }
  return degree;
}

}  // namespace surfclass
