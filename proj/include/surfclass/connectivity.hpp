#pragma once

#include <cstdint>
#include <numeric>
#include <string_view>
#include <utility>
#include <vector>

#include "surfclass/graph.hpp"
#include "surfclass/workspace.hpp"

namespace surfclass {

/// Disjoint-set forest with path halving and union by size.
class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n), size_(n, 1), sets_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    --sets_;
    return true;
  }

  std::size_t set_count() const noexcept { return sets_; }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
  std::size_t sets_;
};

/// s,t-connectivity oracle: answers whether two vertices of a graph stream lie
/// in the same component, using (and charging) only the given workspace.
template <class O, class G>
concept ConnectivityOracle = GraphStream<G> && requires(const O& o, const G& g, Workspace& ws) {
  { o.connected(g, VertexId{}, VertexId{}, ws) } -> std::convertible_to<bool>;
};

namespace detail {
template <GraphStream G>
void require_vertex(const G& g, VertexId v) {
  if (v < 1 || v > g.vertex_count()) throw UnknownVertex(v);
}
}  // namespace detail

/// Streams the edges once into a union-find. Charges the parent array,
/// |V| * ceil(log2(|V|+2)) bits, for the duration of the query.
struct UnionFindOracle {
  static constexpr std::string_view name = "unionfind";

  template <GraphStream G>
  bool connected(const G& g, VertexId s, VertexId t, Workspace& ws) const {
    detail::require_vertex(g, s);
    detail::require_vertex(g, t);
    if (s == t) return true;
    const std::uint64_t n = g.vertex_count();
    auto forest_bits = ws.charge(n * counter_bits(n));
    DisjointSets sets(n);
    g.for_each_edge([&](VertexId a, VertexId b) { sets.unite(a - 1, b - 1); });
    return sets.find(s - 1) == sets.find(t - 1);
  }
};

/// Savitch midpoint doubling: reach(u, v, 2^k) holds iff some m has
/// reach(u, m, 2^(k-1)) and reach(m, v, 2^(k-1)). The top call uses
/// 2^ceil(log2 |V|) >= any simple path length. Each recursion frame charges
/// its three vertex registers and its level, so peak work memory is
/// (ceil(log2 |V|) + 1) frames = O(log^2 |V|) bits. Time is |V|^O(log |V|).
struct SavitchOracle {
  static constexpr std::string_view name = "savitch";

  template <GraphStream G>
  bool connected(const G& g, VertexId s, VertexId t, Workspace& ws) const {
    detail::require_vertex(g, s);
    detail::require_vertex(g, t);
    const std::uint64_t n = g.vertex_count();
    const std::uint64_t levels = ceil_log2(n);
    const std::uint64_t frame = 3 * counter_bits(n) + counter_bits(levels);
    return reach(g, s, t, levels, frame, ws);
  }

 private:
  template <GraphStream G>
  static bool reach(const G& g, VertexId u, VertexId v, std::uint64_t level, std::uint64_t frame,
                    Workspace& ws) {
    auto registers = ws.charge(frame);
    if (u == v) return true;
    if (g.adjacent(u, v)) return true;
    if (level == 0) return false;
    const std::uint64_t n = g.vertex_count();
    for (VertexId m = 1; m <= n; ++m) {
      if (m == u || m == v) continue;  // those midpoints reduce to the adjacency test above
      if (reach(g, u, m, level - 1, frame, ws) && reach(g, m, v, level - 1, frame, ws))
        return true;
    }
    return false;
  }
};

/// Forwards to an oracle and counts the calls.
template <class Oracle>
class CountingOracle {
 public:
  explicit CountingOracle(Oracle inner = {}) : inner_(std::move(inner)) {}

  template <GraphStream G>
  bool connected(const G& g, VertexId s, VertexId t, Workspace& ws) const {
    ++calls_;
    return inner_.connected(g, s, t, ws);
  }

  std::uint64_t calls() const noexcept { return calls_; }
  void reset() noexcept { calls_ = 0; }

 private:
  Oracle inner_;
  mutable std::uint64_t calls_ = 0;
};

/// Whether s and t are connected in a stored graph (ids are the graph's own ids).
template <class Oracle>
bool connected(const Oracle& oracle, const UndirectedGraph& g, VertexId s, VertexId t,
               Workspace& ws) {
  const StoredGraphStream stream(g);
  return oracle.connected(stream, g.position(s) + 1, g.position(t) + 1, ws);
}

template <class Oracle>
bool connected(const Oracle& oracle, const UndirectedGraph& g, VertexId s, VertexId t) {
  Workspace ws;
  return connected(oracle, g, s, t, ws);
}

/// Component count with bounded work memory: c starts at 1 and is incremented
/// at each vertex t that is connected to no s < t. The inner loop has no early
/// exit, so exactly |V|(|V|-1)/2 oracle calls are made.
template <class Oracle, GraphStream G>
std::uint64_t count_components_scan(const Oracle& oracle, const G& g, Workspace& ws) {
  const std::uint64_t n = g.vertex_count();
  if (n == 0) return 0;
  auto c_bits = ws.charge_counter(n);
  auto t_bits = ws.charge_counter(n);
  auto s_bits = ws.charge_counter(n);
  auto flag_bit = ws.charge(1);
  std::uint64_t c = 1;
  for (VertexId t = 2; t <= n; ++t) {
    bool seen = false;
    for (VertexId s = 1; s < t; ++s)
      if (oracle.connected(g, s, t, ws)) seen = true;
    if (!seen) ++c;
  }
  return c;
}

/// Component count of a stream by a single union-find pass (baseline).
template <GraphStream G>
std::uint64_t count_components(const G& g) {
  DisjointSets sets(g.vertex_count());
  g.for_each_edge([&](VertexId a, VertexId b) { sets.unite(a - 1, b - 1); });
  return sets.set_count();
}

inline std::uint64_t count_components(const UndirectedGraph& g) {
  return count_components(StoredGraphStream(g));
}

/// Pairwise component count over a stored graph with an arbitrary oracle.
template <class Oracle>
std::uint64_t count_components(const Oracle& oracle, const UndirectedGraph& g, Workspace& ws) {
  return count_components_scan(oracle, StoredGraphStream(g), ws);
}

/// Label each vertex (1-based position) by the lowest vertex of its component.
template <GraphStream G>
std::vector<VertexId> component_representatives(const G& g) {
  const std::uint64_t n = g.vertex_count();
  DisjointSets sets(n);
  g.for_each_edge([&](VertexId a, VertexId b) { sets.unite(a - 1, b - 1); });
  std::vector<VertexId> lowest(n, 0);
  std::vector<VertexId> rep(n);
  for (std::uint64_t v = 0; v < n; ++v) {
    const std::size_t root = sets.find(v);
    if (lowest[root] == 0) lowest[root] = v + 1;
    rep[v] = lowest[root];
  }
  return rep;
}

}  // namespace surfclass
