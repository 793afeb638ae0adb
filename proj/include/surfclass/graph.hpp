#pragma once

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

namespace surfclass {

using VertexId = std::uint64_t;

class UnknownVertex : public std::out_of_range {
 public:
  explicit UnknownVertex(VertexId v)
      : std::out_of_range("vertex " + std::to_string(v) + " is not in the graph"), vertex_(v) {}
  VertexId vertex() const noexcept { return vertex_; }

 private:
  VertexId vertex_;
};

/// Simple undirected graph: no loops, no parallel edges, isolated vertices allowed.
/// Vertex ids are kept sorted; edges are stored as (a, b) with a < b in insertion order.
class UndirectedGraph {
 public:
  UndirectedGraph() = default;
  explicit UndirectedGraph(std::vector<VertexId> vertices) : vertices_(std::move(vertices)) {
    std::sort(vertices_.begin(), vertices_.end());
    if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end())
      throw std::invalid_argument("duplicate vertex id");
    adjacency_.resize(vertices_.size());
  }

  /// Vertices 1..count.
  static UndirectedGraph with_vertices(std::uint64_t count) {
    std::vector<VertexId> ids(count);
    for (std::uint64_t i = 0; i < count; ++i) ids[i] = i + 1;
    return UndirectedGraph(std::move(ids));
  }

  /// Adds {a, b}. Loops and repeats are ignored; returns whether an edge was added.
  bool add_edge(VertexId a, VertexId b) {
    if (a == b) {
      (void)position(a);
      return false;
    }
    if (a > b) std::swap(a, b);
    const std::size_t pa = position(a);
    const std::size_t pb = position(b);
    if (!edge_keys_.insert(key(pa, pb)).second) return false;
    edges_.emplace_back(a, b);
    adjacency_[pa].push_back(pb);
    adjacency_[pb].push_back(pa);
    return true;
  }

  const std::vector<VertexId>& vertices() const noexcept { return vertices_; }
  const std::vector<std::pair<VertexId, VertexId>>& edges() const noexcept { return edges_; }
  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  bool contains(VertexId v) const {
    return std::binary_search(vertices_.begin(), vertices_.end(), v);
  }

  /// 0-based position of vertex id v.
  std::size_t position(VertexId v) const {
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
    if (it == vertices_.end() || *it != v) throw UnknownVertex(v);
    return static_cast<std::size_t>(it - vertices_.begin());
  }

  std::size_t degree(VertexId v) const { return adjacency_[position(v)].size(); }

  /// Neighbour positions of the vertex at 0-based position p.
  const std::vector<std::size_t>& neighbours_at(std::size_t p) const { return adjacency_[p]; }

  bool has_edge(VertexId a, VertexId b) const {
    if (a == b) return false;
    return edge_keys_.count(key(position(a), position(b))) != 0;
  }

 private:
  static std::uint64_t key(std::size_t pa, std::size_t pb) {
    if (pa > pb) std::swap(pa, pb);
    return (static_cast<std::uint64_t>(pa) << 32) | static_cast<std::uint64_t>(pb);
  }

  std::vector<VertexId> vertices_;
  std::vector<std::pair<VertexId, VertexId>> edges_;
  std::vector<std::vector<std::size_t>> adjacency_;
  std::unordered_set<std::uint64_t> edge_keys_;
};

/// A graph presented as a restartable computation rather than stored data.
/// Vertices are 1..vertex_count(). for_each_edge() reports every generating
/// site (duplicates and loops allowed); adjacent() answers one edge query.
template <class G>
concept GraphStream = requires(const G& g, VertexId v, VertexId w) {
  { g.vertex_count() } -> std::convertible_to<std::uint64_t>;
  { g.adjacent(v, w) } -> std::convertible_to<bool>;
  g.for_each_edge([](VertexId, VertexId) {});
};

/// Stream over a stored graph, renumbering its vertices by position (1-based).
class StoredGraphStream {
 public:
  explicit StoredGraphStream(const UndirectedGraph& g) : g_(&g) {}

  std::uint64_t vertex_count() const noexcept { return g_->vertex_count(); }

  bool adjacent(VertexId a, VertexId b) const {
    if (a == b) return false;
    const auto& na = g_->neighbours_at(a - 1);
    const auto& nb = g_->neighbours_at(b - 1);
    const auto& shorter = na.size() <= nb.size() ? na : nb;
    const std::size_t other = na.size() <= nb.size() ? b - 1 : a - 1;
    return std::find(shorter.begin(), shorter.end(), other) != shorter.end();
  }

  template <class F>
  void for_each_edge(F&& f) const {
    for (const auto& [a, b] : g_->edges()) f(g_->position(a) + 1, g_->position(b) + 1);
  }

  template <class F>
  void for_each_neighbour(VertexId v, F&& f) const {
    for (std::size_t p : g_->neighbours_at(v - 1)) f(static_cast<VertexId>(p + 1));
  }

 private:
  const UndirectedGraph* g_;
};

/// Store a stream: vertices 1..V, each edge kept at its first generating site.
template <GraphStream G>
UndirectedGraph materialize_graph(const G& stream) {
  UndirectedGraph g = UndirectedGraph::with_vertices(stream.vertex_count());
  stream.for_each_edge([&](VertexId a, VertexId b) { g.add_edge(a, b); });
  return g;
}

}  // namespace surfclass
