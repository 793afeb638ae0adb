#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <tuple>

#include "surfclass/builders.hpp"
#include "surfclass/connectivity.hpp"
#include "surfclass/triangulation.hpp"
#include "surfclass/workspace.hpp"

namespace surfclass {

/// (o, chi, b): orientability bit (0 orientable), Euler characteristic,
/// number of boundary components. Ordered lexicographically in that order.
struct InvariantTriple {
  int o = 0;
  std::int64_t chi = 0;
  std::uint64_t b = 0;

  friend auto operator<=>(const InvariantTriple&, const InvariantTriple&) = default;
};

inline std::string to_string(const InvariantTriple& tr) {
  return "(" + std::to_string(tr.o) + ", " + std::to_string(tr.chi) + ", " + std::to_string(tr.b) +
         ")";
}

class NotConnected : public std::runtime_error {
 public:
  explicit NotConnected(std::uint64_t components)
      : std::runtime_error("surface has " + std::to_string(components) +
                           " connected components; expected 1"),
        components_(components) {}
  std::uint64_t components() const noexcept { return components_; }

 private:
  std::uint64_t components_;
};

class ParityError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// |E| = (3n + x) / 2; 3n + x is even on every valid table.
constexpr std::uint64_t edge_count(std::uint64_t n, std::uint64_t x) {
  if ((3 * n + x) % 2 != 0)
    throw ParityError("3n + x = " + std::to_string(3 * n + x) + " is odd");
  return (3 * n + x) / 2;
}

// ---------------------------------------------------------------------------
// Baseline: materialized graphs, one union-find pass each.

inline std::int64_t euler_characteristic(const Triangulation& tri) {
  const std::uint64_t n = tri.size();
  const std::uint64_t x = boundary_entry_count(tri);
  const std::uint64_t edges = edge_count(n, x);
  const std::uint64_t vertices = count_components(VertexIdentificationStream<Triangulation>(tri));
  return static_cast<std::int64_t>(vertices) - static_cast<std::int64_t>(edges) +
         static_cast<std::int64_t>(n);
}

inline std::uint64_t boundary_components(const Triangulation& tri) {
  const std::uint64_t k = count_components(VertexIdentificationStream<Triangulation>(tri));
  const std::uint64_t k_prime = count_components(BoundaryIdentificationStream<Triangulation>(tri));
  const std::uint64_t x = boundary_entry_count(tri);
  if (k_prime + x < k) throw std::logic_error("negative boundary count");
  return k_prime + x - k;
}

inline int orientability(const Triangulation& tri) {
  const std::uint64_t c = count_components(FaceDualStream<Triangulation>(tri));
  if (c != 1) throw NotConnected(c);
  const Triangulation cover = double_cover(tri);
  return count_components(FaceDualStream<Triangulation>(cover)) == 1 ? 1 : 0;
}

/// Invariant triple of a connected surface.
inline InvariantTriple invariant_triple(const Triangulation& tri) {
  const int o = orientability(tri);
  return {o, euler_characteristic(tri), boundary_components(tri)};
}

// ---------------------------------------------------------------------------
// Metered: every graph is a stream over the source, every component count is
// the bounded-memory scan over an oracle, and every integer kept is charged.

template <class Oracle, TableSource S>
std::int64_t euler_characteristic_scan(const S& source, const Oracle& oracle, Workspace& ws) {
  const std::uint64_t n = source.size();
  auto n_bits = ws.charge_counter(n);
  std::uint64_t x = 0;
  auto x_bits = ws.charge_counter(3 * n);
  {
    auto t_bits = ws.charge_counter(n);
    auto c_bits = ws.charge(2);
    x = boundary_entry_count(source);
  }
  auto e_bits = ws.charge_counter(3 * n);
  const std::uint64_t edges = edge_count(n, x);
  const VertexIdentificationStream<S> k_graph(source);
  const std::uint64_t vertices = count_components_scan(oracle, k_graph, ws);
  return static_cast<std::int64_t>(vertices) - static_cast<std::int64_t>(edges) +
         static_cast<std::int64_t>(n);
}

template <class Oracle, TableSource S>
std::uint64_t boundary_components_scan(const S& source, const Oracle& oracle, Workspace& ws) {
  const std::uint64_t n = source.size();
  const VertexIdentificationStream<S> k_graph(source);
  const BoundaryIdentificationStream<S> k_prime_graph(source);
  auto k_bits = ws.charge_counter(3 * n);
  const std::uint64_t k = count_components_scan(oracle, k_graph, ws);
  auto k_prime_bits = ws.charge_counter(3 * n);
  const std::uint64_t k_prime = count_components_scan(oracle, k_prime_graph, ws);
  auto x_bits = ws.charge_counter(3 * n);
  std::uint64_t x = 0;
  {
    auto t_bits = ws.charge_counter(n);
    auto c_bits = ws.charge(2);
    x = boundary_entry_count(source);
  }
  if (k_prime + x < k) throw std::logic_error("negative boundary count");
  return k_prime + x - k;
}

/// Orientability of a source already known to be connected.
template <class Oracle, TableSource S>
int orientability_of_connected_scan(const S& source, const Oracle& oracle, Workspace& ws) {
  const DoubleCoverSource<S> cover(source);
  const FaceDualStream<DoubleCoverSource<S>> cover_dual(cover);
  return count_components_scan(oracle, cover_dual, ws) == 1 ? 1 : 0;
}

template <class Oracle, TableSource S>
int orientability_scan(const S& source, const Oracle& oracle, Workspace& ws) {
  const std::uint64_t c = count_components_scan(oracle, FaceDualStream<S>(source), ws);
  if (c != 1) throw NotConnected(c);
  return orientability_of_connected_scan(source, oracle, ws);
}

/// Triple of a source already known to be connected.
template <class Oracle, TableSource S>
InvariantTriple invariant_triple_of_connected_scan(const S& source, const Oracle& oracle,
                                                   Workspace& ws) {
  auto o_bit = ws.charge(1);
  const int o = orientability_of_connected_scan(source, oracle, ws);
  auto chi_bits = ws.charge(counter_bits(3 * source.size()) + 1);
  const std::int64_t chi = euler_characteristic_scan(source, oracle, ws);
  const std::uint64_t b = boundary_components_scan(source, oracle, ws);
  return {o, chi, b};
}

template <class Oracle, TableSource S>
InvariantTriple invariant_triple_scan(const S& source, const Oracle& oracle, Workspace& ws) {
  const std::uint64_t c = count_components_scan(oracle, FaceDualStream<S>(source), ws);
  if (c != 1) throw NotConnected(c);
  return invariant_triple_of_connected_scan(source, oracle, ws);
}

/// Oracle-parameterised entry points on a stored triangulation: the input is
/// read through a counted tape view and the computation is metered in `ws`.
template <class Oracle>
int orientability(const Triangulation& tri, const Oracle& oracle, Workspace& ws) {
  return orientability_scan(TapeSource(tri, ws), oracle, ws);
}

template <class Oracle>
std::int64_t euler_characteristic(const Triangulation& tri, const Oracle& oracle, Workspace& ws) {
  return euler_characteristic_scan(TapeSource(tri, ws), oracle, ws);
}

template <class Oracle>
std::uint64_t boundary_components(const Triangulation& tri, const Oracle& oracle, Workspace& ws) {
  return boundary_components_scan(TapeSource(tri, ws), oracle, ws);
}

template <class Oracle>
InvariantTriple invariant_triple(const Triangulation& tri, const Oracle& oracle, Workspace& ws) {
  return invariant_triple_scan(TapeSource(tri, ws), oracle, ws);
}

}  // namespace surfclass
