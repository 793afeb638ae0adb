#include <gtest/gtest.h>

#include <deque>
#include <random>

#include "support/fixtures.hpp"

namespace {

using namespace surfclass;

// Reference computations that share no code with the library's graph builders.
namespace reference {

std::size_t corner(TriangleIndex t, int i) { return 3 * (t - 1) + static_cast<std::size_t>(i - 1); }

/// Corner classes under the identifications i~p, j~q of every gluing.
DisjointSets vertex_classes(const Triangulation& tri) {
  DisjointSets sets(3 * tri.size());
  for (TriangleIndex t = 1; t <= tri.size(); ++t)
    for (Column c : kColumns) {
      const GluingEntry& y = tri.entry(t, c);
      if (y.is_boundary()) continue;
      const EdgeLabel e = label_of(c);
      sets.unite(corner(t, first_corner(e)), corner(y.target, first_corner(y.label)));
      sets.unite(corner(t, second_corner(e)), corner(y.target, second_corner(y.label)));
    }
  return sets;
}

std::int64_t euler(const Triangulation& tri) {
  const std::size_t sites = 3 * tri.size();
  DisjointSets edges(sites);
  for (TriangleIndex t = 1; t <= tri.size(); ++t)
    for (Column c : kColumns) {
      const GluingEntry& y = tri.entry(t, c);
      if (!y.is_boundary())
        edges.unite(corner(t, static_cast<int>(c) + 1), corner(y.target, static_cast<int>(column_of(y.label)) + 1));
    }
  const auto vertices = static_cast<std::int64_t>(vertex_classes(tri).set_count());
  return vertices - static_cast<std::int64_t>(edges.set_count()) + static_cast<std::int64_t>(tri.size());
}

/// Boundary circles: boundary edges meeting at a vertex belong to the same circle.
std::uint64_t boundary_walk(const Triangulation& tri) {
  DisjointSets vertices = vertex_classes(tri);
  std::vector<std::pair<std::size_t, std::size_t>> boundary;
  for (TriangleIndex t = 1; t <= tri.size(); ++t)
    for (Column c : kColumns)
      if (tri.entry(t, c).is_boundary()) {
        const EdgeLabel e = label_of(c);
        boundary.emplace_back(vertices.find(corner(t, first_corner(e))),
                              vertices.find(corner(t, second_corner(e))));
      }
  DisjointSets circles(boundary.size());
  for (std::size_t a = 0; a < boundary.size(); ++a)
    for (std::size_t b = a + 1; b < boundary.size(); ++b) {
      const auto [a1, a2] = boundary[a];
      const auto [b1, b2] = boundary[b];
      if (a1 == b1 || a1 == b2 || a2 == b1 || a2 == b2) circles.unite(a, b);
    }
  return circles.set_count();
}

/// Try to orient all triangles coherently. Across a gluing to a forward label
/// the shared edge runs the same way in both triangles, so the orientations
/// must differ; across a reversed label they must agree.
int orientability(const Triangulation& tri) {
  std::vector<int> sign(tri.size() + 1, 0);
  for (TriangleIndex start = 1; start <= tri.size(); ++start) {
    if (sign[start] != 0) continue;
    sign[start] = 1;
    std::deque<TriangleIndex> queue{start};
    while (!queue.empty()) {
      const TriangleIndex t = queue.front();
      queue.pop_front();
      for (Column c : kColumns) {
        const GluingEntry& y = tri.entry(t, c);
        if (y.is_boundary()) continue;
        const int want = is_forward(y.label) ? -sign[t] : sign[t];
        if (sign[y.target] == 0) {
          sign[y.target] = want;
          queue.push_back(y.target);
        } else if (sign[y.target] != want) {
          return 1;
        }
      }
    }
  }
  return 0;
}

}  // namespace reference

const Triangulation kTorus = generate(FamilySpec::orientable(1));

TEST(Orientability, Examples) {
  EXPECT_EQ(orientability(fixtures::punctured_klein()), 1);
  EXPECT_EQ(orientability(two_triangle_sphere()), 0);
  EXPECT_EQ(kTorus.size(), 2u);
  EXPECT_EQ(orientability(kTorus), 0);
}

TEST(Orientability, RefusesDisconnectedInput) {
  const Triangulation two = disjoint_union(kTorus, kTorus);
  EXPECT_THROW(orientability(two), NotConnected);
  Workspace ws;
  EXPECT_THROW(orientability(two, SavitchOracle{}, ws), NotConnected);
  try {
    orientability(two);
  } catch (const NotConnected& e) {
    EXPECT_EQ(e.components(), 2u);
  }
}

TEST(EulerCharacteristic, Examples) {
  EXPECT_EQ(euler_characteristic(fixtures::punctured_klein()), -1);
  EXPECT_EQ(euler_characteristic(parse("# - - -")), 1);
  EXPECT_EQ(euler_characteristic(kTorus), 0);
  EXPECT_EQ(count_components(vertex_identification_graph(kTorus)), 1u);
  EXPECT_EQ(edge_count(3, 1), 5u);
  EXPECT_EQ(edge_count(2, 0), 3u);
  EXPECT_THROW(edge_count(1, 0), ParityError);
}

TEST(BoundaryComponents, Examples) {
  EXPECT_EQ(boundary_components(fixtures::punctured_klein()), 1u);
  EXPECT_EQ(boundary_components(parse("# - - -")), 1u);
  EXPECT_EQ(boundary_components(two_triangle_sphere()), 0u);
}

TEST(InvariantTriple, Examples) {
  EXPECT_EQ(invariant_triple(fixtures::punctured_klein()), (InvariantTriple{1, -1, 1}));
  EXPECT_EQ(invariant_triple(two_triangle_sphere()), (InvariantTriple{0, 2, 0}));
  EXPECT_EQ(invariant_triple(generate(FamilySpec::moebius())), (InvariantTriple{1, 0, 1}));
  EXPECT_EQ(to_string(InvariantTriple{1, -1, 1}), "(1, -1, 1)");
}

TEST(InvariantTriple, OrderIsLexicographicInOChiB) {
  EXPECT_LT((InvariantTriple{0, 2, 0}), (InvariantTriple{1, -5, 0}));
  EXPECT_LT((InvariantTriple{0, -1, 3}), (InvariantTriple{0, 0, 0}));
  EXPECT_LT((InvariantTriple{1, 0, 0}), (InvariantTriple{1, 0, 1}));
}

TEST(Reference, AgreesOnCorpus) {
  for (const FamilySpec& spec : fixtures::corpus()) {
    const Triangulation t = generate(spec);
    EXPECT_EQ(euler_characteristic(t), reference::euler(t)) << fixtures::describe(spec);
    EXPECT_EQ(boundary_components(t), reference::boundary_walk(t)) << fixtures::describe(spec);
    if (spec.family != Family::disjoint_union)
      EXPECT_EQ(orientability(t), reference::orientability(t)) << fixtures::describe(spec);
  }
}

TEST(Properties, TripleOnConnectedCorpusObeysSurfaceConstraints) {
  for (const FamilySpec& spec : fixtures::connected_specs()) {
    const InvariantTriple tr = invariant_triple(generate(spec));
    EXPECT_LE(tr.chi, 2);
    EXPECT_LE(tr.chi + static_cast<std::int64_t>(tr.b), 2);
    if (tr.o == 0) EXPECT_EQ(((tr.chi - static_cast<std::int64_t>(tr.b)) % 2 + 2) % 2, 0);
  }
}

TEST(Properties, DoubleCoverDoublesChi) {
  for (const FamilySpec& spec : fixtures::corpus()) {
    const Triangulation t = generate(spec);
    EXPECT_EQ(euler_characteristic(double_cover(t)), 2 * euler_characteristic(t));
  }
}

TEST(Properties, ChiIsAdditiveOverUnions) {
  for (const FamilySpec& spec : fixtures::union_specs(40, 5)) {
    std::int64_t sum = 0;
    std::uint64_t b = 0;
    for (const FamilySpec& part : spec.components) {
      sum += euler_characteristic(generate(part));
      b += boundary_components(generate(part));
    }
    const Triangulation whole = generate(spec);
    EXPECT_EQ(euler_characteristic(whole), sum);
    EXPECT_EQ(boundary_components(whole), b);
  }
}

TEST(Properties, RelabelAndSubdivideKeepTheTriple) {
  std::mt19937_64 rng(77);
  for (const FamilySpec& spec : fixtures::connected_specs()) {
    const Triangulation t = generate(spec);
    const InvariantTriple tr = invariant_triple(t);
    EXPECT_EQ(invariant_triple(relabel(t, rng)), tr);
    EXPECT_EQ(invariant_triple(subdivide(t, 5, rng)), tr);
  }
}

TEST(Metered, SavitchMatchesBaselineOnSmallSurfaces) {
  for (const FamilySpec& spec : fixtures::connected_specs()) {
    const Triangulation t = generate(spec);
    if (t.size() > 5) continue;
    Workspace ws;
    EXPECT_EQ(invariant_triple(t, SavitchOracle{}, ws), invariant_triple(t)) << fixtures::describe(spec);
    EXPECT_EQ(ws.current_bits(), 0u);
    EXPECT_LE(ws.peak_bits(), default_budget_bits(tape_symbol_count(t)));
  }
}

TEST(Metered, UnionFindOracleMatchesBaselineOnConnectedCorpus) {
  for (const FamilySpec& spec : fixtures::connected_specs()) {
    const Triangulation t = generate(spec);
    Workspace ws;
    EXPECT_EQ(invariant_triple(t, UnionFindOracle{}, ws), invariant_triple(t)) << fixtures::describe(spec);
    EXPECT_EQ(euler_characteristic(t, UnionFindOracle{}, ws), euler_characteristic(t));
    EXPECT_EQ(boundary_components(t, UnionFindOracle{}, ws), boundary_components(t));
  }
}

TEST(Metered, PuncturedKleinSpaceIsWithinBudget) {
  const Triangulation klein = fixtures::punctured_klein();
  Workspace ws(default_budget_bits(tape_symbol_count(klein)));
  EXPECT_EQ(invariant_triple(klein, SavitchOracle{}, ws), (InvariantTriple{1, -1, 1}));
  EXPECT_GT(ws.input_reads(), 0u);
}

}  // namespace
