#pragma once

// Hand-built reference tables and the generator corpus shared by the suites.

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "surfclass/surfclass.hpp"

namespace fixtures {

using namespace surfclass;

inline constexpr const char* kKleinTape =
    "# 10 (13) 11 (12) 11 (32) # 11 (13) - 1 (21) # 1 (23) 1 (13) 10 (21)";

inline GluingEntry g(TriangleIndex t, EdgeLabel e) { return GluingEntry::glued(t, e); }
inline GluingEntry none() { return GluingEntry::boundary(); }

using L = EdgeLabel;

// Punctured Klein bottle, typed in cell by cell.
inline Triangulation punctured_klein() {
  return Triangulation({
      {g(2, L::e13), g(3, L::e12), g(3, L::e32)},
      {g(3, L::e13), none(), g(1, L::e21)},
      {g(1, L::e23), g(1, L::e13), g(2, L::e21)},
  });
}

// Its orientation double cover; rows 1', 2', 3' are 4, 5, 6.
inline Triangulation punctured_klein_cover() {
  return Triangulation({
      {g(2, L::e13), g(6, L::e12), g(3, L::e32)},
      {g(3, L::e13), none(), g(1, L::e21)},
      {g(4, L::e23), g(1, L::e13), g(2, L::e21)},
      {g(5, L::e13), g(3, L::e12), g(6, L::e32)},
      {g(6, L::e13), none(), g(4, L::e21)},
      {g(1, L::e23), g(4, L::e13), g(5, L::e21)},
  });
}

/// w_{t,i} under the 3(t-1)+i encoding.
constexpr VertexId w(TriangleIndex t, int i) { return 3 * (t - 1) + static_cast<VertexId>(i); }

using EdgeSet = std::vector<std::pair<VertexId, VertexId>>;

inline EdgeSet normalized(EdgeSet edges) {
  for (auto& [a, b] : edges)
    if (a > b) std::swap(a, b);
  std::sort(edges.begin(), edges.end());
  return edges;
}

inline EdgeSet edge_set(const UndirectedGraph& graph) {
  return normalized({graph.edges().begin(), graph.edges().end()});
}

inline EdgeSet klein_F() {
  return normalized({{w(1, 1), w(2, 1)}, {w(1, 2), w(2, 3)}, {w(2, 1), w(3, 1)},
                     {w(2, 2), w(3, 3)}, {w(1, 1), w(3, 2)}, {w(1, 3), w(3, 3)},
                     {w(1, 2), w(3, 1)}, {w(1, 3), w(3, 2)}});
}

inline EdgeSet klein_F_prime() {
  EdgeSet f = klein_F();
  f.emplace_back(w(2, 2), w(2, 3));
  return normalized(f);
}

/// Every connected family with g <= 5, k <= 6 and at most 4 punctures, plus
/// the disk and the Moebius band.
inline std::vector<FamilySpec> connected_specs() {
  std::vector<FamilySpec> specs;
  for (std::int64_t genus = 0; genus <= 5; ++genus)
    for (std::uint64_t b = 0; b <= 4; ++b) specs.push_back(FamilySpec::orientable(genus, b));
  for (std::int64_t k = 1; k <= 6; ++k)
    for (std::uint64_t b = 0; b <= 4; ++b) specs.push_back(FamilySpec::nonorientable(k, b));
  specs.push_back(FamilySpec::disk());
  specs.push_back(FamilySpec::moebius());
  return specs;
}

/// Small connected parts for disjoint unions.
inline std::vector<FamilySpec> union_parts() {
  return {FamilySpec::sphere(),          FamilySpec::sphere(1),         FamilySpec::sphere(2),
          FamilySpec::orientable(1),     FamilySpec::orientable(1, 1),  FamilySpec::nonorientable(1),
          FamilySpec::nonorientable(1, 1), FamilySpec::nonorientable(2), FamilySpec::nonorientable(2, 1),
          FamilySpec::nonorientable(3),  FamilySpec::disk(),            FamilySpec::moebius()};
}

inline std::uint64_t size_of(const FamilySpec& spec) { return generate(spec).size(); }

/// Random unions of 2..6 parts, at most `max_triangles` triangles in total.
/// Some carry a relabel or subdivide mutation.
inline std::vector<FamilySpec> union_specs(std::size_t count, std::uint64_t seed,
                                           std::uint64_t max_triangles = 14) {
  const std::vector<FamilySpec> parts = union_parts();
  std::vector<std::uint64_t> sizes;
  for (const FamilySpec& p : parts) sizes.push_back(size_of(p));
  std::mt19937_64 rng(seed);
  std::vector<FamilySpec> specs;
  while (specs.size() < count) {
    const std::size_t c = std::uniform_int_distribution<std::size_t>(2, 6)(rng);
    std::vector<FamilySpec> chosen;
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < c; ++i) {
      const std::size_t pick = std::uniform_int_distribution<std::size_t>(0, parts.size() - 1)(rng);
      chosen.push_back(parts[pick]);
      total += sizes[pick];
    }
    if (total > max_triangles) continue;
    FamilySpec spec = FamilySpec::disjoint_union(std::move(chosen));
    switch (specs.size() % 4) {
      case 1: spec.with(Mutation::relabel(rng())); break;
      case 2: spec.with(Mutation::subdivide(1, rng())); break;
      default: break;
    }
    specs.push_back(std::move(spec));
  }
  return specs;
}

/// The closed-form corpus: 62 connected families and 150 unions.
inline std::vector<FamilySpec> corpus() {
  std::vector<FamilySpec> specs = connected_specs();
  for (FamilySpec& u : union_specs(150, 20240611)) specs.push_back(std::move(u));
  return specs;
}

inline std::string describe(const FamilySpec& spec) {
  auto one = [](const FamilySpec& s) -> std::string {
    switch (s.family) {
      case Family::sphere: return "S0b" + std::to_string(s.punctures);
      case Family::orientable: return "S" + std::to_string(s.genus) + "b" + std::to_string(s.punctures);
      case Family::nonorientable: return "N" + std::to_string(s.genus) + "b" + std::to_string(s.punctures);
      case Family::disk: return "D";
      case Family::moebius: return "M";
      case Family::disjoint_union: return "union";
    }
    return "?";
  };
  if (spec.family != Family::disjoint_union) return one(spec);
  std::string out;
  for (const FamilySpec& part : spec.components) out += (out.empty() ? "" : "+") + one(part);
  if (!spec.mutations.empty()) out += " (mutated)";
  return out;
}

}  // namespace fixtures
