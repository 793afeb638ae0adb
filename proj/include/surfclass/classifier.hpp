#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "surfclass/builders.hpp"
#include "surfclass/connectivity.hpp"
#include "surfclass/invariants.hpp"
#include "surfclass/triangulation.hpp"
#include "surfclass/validator.hpp"
#include "surfclass/workspace.hpp"

namespace surfclass {

class ComponentOutOfRange : public std::out_of_range {
 public:
  ComponentOutOfRange(std::uint64_t requested, std::uint64_t available)
      : std::out_of_range("component " + std::to_string(requested) + " requested, surface has " +
                          std::to_string(available)),
        requested_(requested),
        available_(available) {}
  std::uint64_t requested() const noexcept { return requested_; }
  std::uint64_t available() const noexcept { return available_; }

 private:
  std::uint64_t requested_;
  std::uint64_t available_;
};

/// The i-th connected component of a table source, recomputed on demand.
///
/// The component representative is the i-th triangle (in index order) not
/// connected to any lower triangle. Triangles connected to it are renumbered
/// 1..k in ascending original order, and so are gluing targets. Nothing but
/// the representative index and k is stored; every entry() re-derives its
/// original row and the rank of its target through oracle queries on the
/// parent's face-dual graph.
template <TableSource S, class Oracle>
class ComponentSource {
 public:
  ComponentSource(const S& parent, std::uint64_t i, const Oracle& oracle, Workspace& ws)
      : parent_(&parent), dual_(parent), oracle_(&oracle), ws_(&ws) {
    const TriangleIndex n = parent.size();
    rep_bits_ = ws.charge_counter(n);
    size_bits_ = ws.charge_counter(n);
    if (i == 0 || n == 0) throw ComponentOutOfRange(i, 0);
    {
      auto c_bits = ws.charge_counter(n);
      auto s_bits = ws.charge_counter(n);
      auto flag = ws.charge(1);
      TriangleIndex t = 1;
      std::uint64_t c = 1;
      while (c < i) {
        ++t;
        if (t > n) throw ComponentOutOfRange(i, c);
        bool seen = false;
        for (TriangleIndex s = 1; s < t; ++s)
          if (linked(s, t)) seen = true;
        if (!seen) ++c;
      }
      rep_ = t;
    }
    {
      auto s_bits = ws.charge_counter(n);
      for (TriangleIndex s = rep_; s <= n; ++s)
        if (linked(s, rep_)) ++size_;
    }
  }

  TriangleIndex size() const noexcept { return size_; }
  TriangleIndex representative() const noexcept { return rep_; }

  GluingEntry entry(TriangleIndex j, Column c) const {
    if (j < 1 || j > size_)
      throw IndexOutOfRange("component triangle " + std::to_string(j) + " outside [1, " +
                            std::to_string(size_) + "]");
    const TriangleIndex n = parent_->size();
    auto s_bits = ws_->charge_counter(n);
    auto rank_bits = ws_->charge_counter(n);
    TriangleIndex s = rep_;
    std::uint64_t rank = 0;
    for (;; ++s)
      if (linked(s, rep_) && ++rank == j) break;
    const GluingEntry y = parent_->entry(s, c);
    if (y.is_boundary()) return y;
    auto u_bits = ws_->charge_counter(n);
    auto x_bits = ws_->charge_counter(n);
    std::uint64_t renumbered = 0;
    for (TriangleIndex x = rep_; x <= y.target; ++x)
      if (linked(x, rep_)) ++renumbered;
    return GluingEntry::glued(renumbered, y.label);
  }

 private:
  bool linked(TriangleIndex a, TriangleIndex b) const {
    return oracle_->connected(dual_, a, b, *ws_);
  }

  const S* parent_;
  FaceDualStream<S> dual_;
  const Oracle* oracle_;
  Workspace* ws_;
  ChargeToken rep_bits_;
  ChargeToken size_bits_;
  TriangleIndex rep_ = 0;
  TriangleIndex size_ = 0;
};

/// Baseline extraction of the i-th component (same numbering as ComponentSource).
inline Triangulation extract_component(const Triangulation& tri, std::uint64_t i) {
  const TriangleIndex n = tri.size();
  const std::vector<VertexId> rep = component_representatives(FaceDualStream<Triangulation>(tri));
  std::vector<TriangleIndex> reps;
  for (TriangleIndex t = 1; t <= n; ++t)
    if (rep[t - 1] == t) reps.push_back(t);
  if (i == 0 || i > reps.size()) throw ComponentOutOfRange(i, reps.size());
  const TriangleIndex root = reps[i - 1];

  std::vector<TriangleIndex> renumber(n + 1, 0);
  TriangleIndex k = 0;
  for (TriangleIndex t = root; t <= n; ++t)
    if (rep[t - 1] == root) renumber[t] = ++k;

  std::vector<Row> rows;
  rows.reserve(k);
  for (TriangleIndex t = root; t <= n; ++t) {
    if (rep[t - 1] != root) continue;
    Row row{};
    for (Column c : kColumns) {
      const GluingEntry& y = tri.entry(t, c);
      row[static_cast<int>(c)] =
          y.is_boundary() ? y : GluingEntry::glued(renumber[y.target], y.label);
    }
    rows.push_back(row);
  }
  return Triangulation(std::move(rows));
}

/// Metered extraction, materialized for inspection.
template <class Oracle>
Triangulation extract_component(const Triangulation& tri, std::uint64_t i, const Oracle& oracle,
                                Workspace& ws) {
  const TapeSource tape(tri, ws);
  const ComponentSource<TapeSource, Oracle> component(tape, i, oracle, ws);
  return materialize(component);
}

inline std::uint64_t component_count(const Triangulation& tri) {
  return count_components(FaceDualStream<Triangulation>(tri));
}

enum class Engine { baseline, metered };

/// Sorted triples of all components, computed on stored structures.
inline std::vector<InvariantTriple> classify(const Triangulation& tri) {
  require_surface(tri);
  std::vector<InvariantTriple> triples;
  const std::uint64_t c = component_count(tri);
  if (c == 1) {
    triples.push_back(invariant_triple(tri));
  } else {
    for (std::uint64_t i = 1; i <= c; ++i)
      triples.push_back(invariant_triple(extract_component(tri, i)));
  }
  std::sort(triples.begin(), triples.end());
  return triples;
}

/// Bounded-memory classification. Global chi(S) and b(S) bound the search:
/// each component has chi >= chi(S) - 2(c-1) and b <= b(S). Candidate
/// triples are enumerated in output order, and for each one every component
/// is re-extracted and its triple recomputed; matches are emitted. Nothing
/// per-component is retained between candidates.
template <class Oracle>
std::vector<InvariantTriple> classify_scan(const Triangulation& tri, const Oracle& oracle,
                                           Workspace& ws) {
  const TapeSource tape(tri, ws);
  auto violations = check_surface_scan(tape, ws);
  if (!violations.empty()) throw InvalidSurface("input", std::move(violations));

  std::vector<InvariantTriple> out;
  const TriangleIndex n = tape.size();
  if (n == 0) return out;

  auto c_bits = ws.charge_counter(n);
  const std::uint64_t c = count_components_scan(oracle, FaceDualStream<TapeSource>(tape), ws);
  if (c == 1) {
    out.push_back(invariant_triple_of_connected_scan(tape, oracle, ws));
    return out;
  }

  auto chi_bits = ws.charge(counter_bits(3 * n) + 1);
  const std::int64_t chi_total = euler_characteristic_scan(tape, oracle, ws);
  auto b_bits = ws.charge_counter(3 * n);
  const std::uint64_t b_total = boundary_components_scan(tape, oracle, ws);
  const std::int64_t chi_floor = chi_total - 2 * static_cast<std::int64_t>(c - 1);

  auto o_bit = ws.charge(1);
  auto chi_loop_bits = ws.charge(counter_bits(3 * n + 2 * c) + 1);
  auto x_loop_bits = ws.charge_counter(3 * n);
  auto i_loop_bits = ws.charge_counter(n);
  for (int o = 0; o <= 1; ++o)
    for (std::int64_t chi = chi_floor; chi <= 2; ++chi)
      for (std::uint64_t x = 0; x <= b_total; ++x)
        for (std::uint64_t i = 1; i <= c; ++i) {
          const ComponentSource<TapeSource, Oracle> component(tape, i, oracle, ws);
          // Evaluated in order, stopping at the first mismatch.
          if (orientability_of_connected_scan(component, oracle, ws) != o) continue;
          if (euler_characteristic_scan(component, oracle, ws) != chi) continue;
          if (boundary_components_scan(component, oracle, ws) != x) continue;
          out.push_back({o, chi, x});
        }
  return out;
}

template <class Oracle>
std::vector<InvariantTriple> classify(const Triangulation& tri, Engine engine, const Oracle& oracle,
                                      Workspace& ws) {
  if (engine == Engine::metered) return classify_scan(tri, oracle, ws);
  return classify(tri);
}

/// Same complete invariant, compared as ordered lists.
template <class Oracle>
bool homeomorphic(const Triangulation& first, const Triangulation& second, Engine engine,
                  const Oracle& oracle, Workspace& ws) {
  auto checked = [&](const Triangulation& tri, const char* which) {
    try {
      return classify(tri, engine, oracle, ws);
    } catch (const InvalidSurface& e) {
      throw InvalidSurface(which, e.violations());
    }
  };
  const auto a = checked(first, "first input");
  const auto b = checked(second, "second input");
  return a == b;
}

inline bool homeomorphic(const Triangulation& first, const Triangulation& second) {
  Workspace ws;
  return homeomorphic(first, second, Engine::baseline, UnionFindOracle{}, ws);
}

// ---------------------------------------------------------------------------

class InvalidTriple : public std::invalid_argument {
 public:
  explicit InvalidTriple(const InvariantTriple& tr)
      : std::invalid_argument("no connected surface has invariants " + to_string(tr)) {}
};

/// Name of the standard surface with a given triple. `standard` is always
/// "orientable genus g" / "non-orientable genus k" plus the boundary count;
/// `common` uses sphere, disk, torus, Möbius band, projective plane and Klein
/// bottle where they apply.
struct NormalFormName {
  std::string common;
  std::string standard;
};

inline NormalFormName normal_form_name(const InvariantTriple& tr) {
  const std::int64_t deficit = 2 - tr.chi - static_cast<std::int64_t>(tr.b);
  std::string boundary;
  if (tr.b > 0)
    boundary = " with " + std::to_string(tr.b) + " boundary component" + (tr.b == 1 ? "" : "s");

  if (tr.o == 0) {
    if (deficit < 0 || deficit % 2 != 0) throw InvalidTriple(tr);
    const std::int64_t g = deficit / 2;
    NormalFormName name;
    name.standard = "orientable genus " + std::to_string(g) + boundary;
    if (g == 0 && tr.b == 0) name.common = "sphere";
    else if (g == 0 && tr.b == 1) name.common = "disk";
    else if (g == 0) name.common = "sphere" + boundary;
    else if (g == 1) name.common = "torus" + boundary;
    else name.common = name.standard;
    return name;
  }
  if (tr.o != 1 || deficit < 1) throw InvalidTriple(tr);
  const std::int64_t k = deficit;
  NormalFormName name;
  name.standard = "non-orientable genus " + std::to_string(k) + boundary;
  if (k == 1 && tr.b == 1) name.common = "Möbius band";
  else if (k == 1) name.common = "projective plane" + boundary;
  else if (k == 2) name.common = "Klein bottle" + boundary;
  else name.common = name.standard;
  return name;
}

}  // namespace surfclass
