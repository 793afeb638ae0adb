#pragma once

// Test-corpus generation: triangulations of known homeomorphism type.
//
// Connected surfaces come from polygon words. A word names each side of a
// polygon with a letter and a sign; sides sharing a letter are glued, and a
// letter that appears once is a boundary edge. The polygon is fan-triangulated
// from its first vertex:
//
//   orientable genus g   a1 b1 a1^-1 b1^-1 ... ag bg ag^-1 bg^-1
//   non-orientable k     a1 a1 ... ak ak
//   each puncture        x c x^-1   (c left unglued)
//
// The few words too short to fan-triangulate are special-cased.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "surfclass/invariants.hpp"
#include "surfclass/triangulation.hpp"

namespace surfclass {

class UnsupportedSpec : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Family { sphere, orientable, nonorientable, disk, moebius, disjoint_union };

struct Mutation {
  enum class Kind { relabel, subdivide } kind;
  std::uint64_t seed = 0;
  std::uint64_t count = 0;  // subdivide only

  static Mutation relabel(std::uint64_t seed) { return {Kind::relabel, seed, 0}; }
  static Mutation subdivide(std::uint64_t count, std::uint64_t seed) {
    return {Kind::subdivide, seed, count};
  }
};

struct FamilySpec {
  Family family = Family::sphere;
  std::int64_t genus = 0;  // g for orientable, k for non-orientable
  std::uint64_t punctures = 0;
  std::vector<FamilySpec> components;  // disjoint_union only
  std::vector<Mutation> mutations;

  static FamilySpec sphere(std::uint64_t punctures = 0) {
    return {Family::sphere, 0, punctures, {}, {}};
  }
  static FamilySpec orientable(std::int64_t g, std::uint64_t punctures = 0) {
    return {Family::orientable, g, punctures, {}, {}};
  }
  static FamilySpec nonorientable(std::int64_t k, std::uint64_t punctures = 0) {
    return {Family::nonorientable, k, punctures, {}, {}};
  }
  static FamilySpec disk() { return {Family::disk, 0, 0, {}, {}}; }
  static FamilySpec moebius() { return {Family::moebius, 0, 0, {}, {}}; }
  static FamilySpec disjoint_union(std::vector<FamilySpec> parts) {
    return {Family::disjoint_union, 0, 0, std::move(parts), {}};
  }

  FamilySpec& with(Mutation m) {
    mutations.push_back(m);
    return *this;
  }
};

/// Expected invariant list for a family, sorted.
inline std::vector<InvariantTriple> closed_form_triples(const FamilySpec& spec) {
  const auto b = static_cast<std::int64_t>(spec.punctures);
  switch (spec.family) {
    case Family::sphere: return {{0, 2 - b, spec.punctures}};
    case Family::orientable:
      if (spec.genus < 0) throw UnsupportedSpec("orientable genus must be >= 0");
      return {{0, 2 - 2 * spec.genus - b, spec.punctures}};
    case Family::nonorientable:
      if (spec.genus < 1) throw UnsupportedSpec("non-orientable genus must be >= 1");
      return {{1, 2 - spec.genus - b, spec.punctures}};
    case Family::disk: return {{0, 1, 1}};
    case Family::moebius: return {{1, 0, 1}};
    case Family::disjoint_union: {
      std::vector<InvariantTriple> all;
      for (const FamilySpec& part : spec.components) {
        auto sub = closed_form_triples(part);
        all.insert(all.end(), sub.begin(), sub.end());
      }
      std::sort(all.begin(), all.end());
      return all;
    }
  }
  return {};
}

/// One side of a polygon word: `letter` glues sides pairwise, `inverse` says
/// the side runs against the letter's direction. Letters used once are boundary.
struct WordSide {
  int letter;
  bool inverse;
};

/// Fan triangulation of the polygon with the given side word (>= 3 sides).
/// Triangle j (1-based) has corners (P0, Pj, Pj+1); side s_j runs Pj -> Pj+1.
inline Triangulation polygon_triangulation(const std::vector<WordSide>& word) {
  const std::size_t m = word.size();
  if (m < 3) throw UnsupportedSpec("polygon word needs at least 3 sides");
  const TriangleIndex n = m - 2;
  std::vector<Row> rows(n);
  auto set = [&](TriangleIndex t, Column c, GluingEntry y) { rows[t - 1][static_cast<int>(c)] = y; };

  // Diagonal P0-Pj between triangle j-1 (column 31) and triangle j (column 12).
  for (TriangleIndex j = 2; j <= n; ++j) {
    set(j, Column::c12, GluingEntry::glued(j - 1, EdgeLabel::e13));
    set(j - 1, Column::c31, GluingEntry::glued(j, EdgeLabel::e21));
  }

  struct Site {
    TriangleIndex t;
    Column c;
  };
  auto side_site = [&](std::size_t s) -> Site {
    if (s == 0) return {1, Column::c12};
    if (s == m - 1) return {n, Column::c31};
    return {s, Column::c23};
  };

  std::vector<std::vector<std::size_t>> by_letter;
  for (std::size_t s = 0; s < m; ++s) {
    const auto letter = static_cast<std::size_t>(word[s].letter);
    if (by_letter.size() <= letter) by_letter.resize(letter + 1);
    by_letter[letter].push_back(s);
  }
  for (std::size_t s = 0; s < m; ++s) set(side_site(s).t, side_site(s).c, GluingEntry::boundary());
  for (const auto& sides : by_letter) {
    if (sides.size() <= 1) continue;
    if (sides.size() != 2) throw UnsupportedSpec("a letter may label at most two sides");
    const Site a = side_site(sides[0]);
    const Site b = side_site(sides[1]);
    const bool same = word[sides[0]].inverse == word[sides[1]].inverse;
    const EdgeLabel la = label_of(a.c);
    const EdgeLabel lb = label_of(b.c);
    set(a.t, a.c, GluingEntry::glued(b.t, same ? lb : reverse(lb)));
    set(b.t, b.c, GluingEntry::glued(a.t, same ? la : reverse(la)));
  }
  return Triangulation(std::move(rows));
}

/// The 2-triangle sphere: two triangles glued along all three edges.
inline Triangulation two_triangle_sphere() {
  return Triangulation({
      Row{GluingEntry::glued(2, EdgeLabel::e12), GluingEntry::glued(2, EdgeLabel::e23),
          GluingEntry::glued(2, EdgeLabel::e31)},
      Row{GluingEntry::glued(1, EdgeLabel::e12), GluingEntry::glued(1, EdgeLabel::e23),
          GluingEntry::glued(1, EdgeLabel::e31)},
  });
}

inline Triangulation single_triangle_disk() {
  return Triangulation({Row{GluingEntry::boundary(), GluingEntry::boundary(),
                            GluingEntry::boundary()}});
}

/// One triangle with sides a a c: the Möbius band.
inline Triangulation single_triangle_moebius() {
  return polygon_triangulation({{0, false}, {0, false}, {1, false}});
}

/// Disjoint union; the second table is shifted past the first.
inline Triangulation disjoint_union(const Triangulation& a, const Triangulation& b) {
  std::vector<Row> rows = a.rows();
  const TriangleIndex shift = a.size();
  for (Row row : b.rows()) {
    for (GluingEntry& y : row)
      if (!y.is_boundary()) y.target += shift;
    rows.push_back(row);
  }
  return Triangulation(std::move(rows));
}

/// Renumber triangles: triangle t becomes perm[t-1] (a permutation of 1..n).
inline Triangulation relabel(const Triangulation& tri, const std::vector<TriangleIndex>& perm) {
  const TriangleIndex n = tri.size();
  if (perm.size() != n) throw std::invalid_argument("permutation size mismatch");
  std::vector<Row> rows(n);
  for (TriangleIndex t = 1; t <= n; ++t) {
    Row row = tri.rows()[t - 1];
    for (GluingEntry& y : row)
      if (!y.is_boundary()) y.target = perm[y.target - 1];
    rows[perm[t - 1] - 1] = row;
  }
  return Triangulation(std::move(rows));
}

inline Triangulation relabel(const Triangulation& tri, std::mt19937_64& rng) {
  std::vector<TriangleIndex> perm(tri.size());
  std::iota(perm.begin(), perm.end(), TriangleIndex{1});
  std::shuffle(perm.begin(), perm.end(), rng);
  return relabel(tri, perm);
}

/// Stellar subdivision of triangle t into three: t keeps corners (1,2,c),
/// new triangles n+1 = (2,3,c) and n+2 = (3,1,c). Adds one vertex, three
/// edges and two triangles, so chi is unchanged.
inline Triangulation subdivide_triangle(const Triangulation& tri, TriangleIndex t) {
  const TriangleIndex n = tri.size();
  if (t < 1 || t > n) throw IndexOutOfRange("cannot subdivide triangle " + std::to_string(t));
  const TriangleIndex a = t;
  const TriangleIndex b = n + 1;
  const TriangleIndex c = n + 2;

  // Where a reference to an old edge of t now points.
  auto redirect = [&](GluingEntry y) {
    if (y.is_boundary() || y.target != t) return y;
    switch (y.label) {
      case EdgeLabel::e12: return GluingEntry::glued(a, EdgeLabel::e12);
      case EdgeLabel::e21: return GluingEntry::glued(a, EdgeLabel::e21);
      case EdgeLabel::e23: return GluingEntry::glued(b, EdgeLabel::e12);
      case EdgeLabel::e32: return GluingEntry::glued(b, EdgeLabel::e21);
      case EdgeLabel::e31: return GluingEntry::glued(c, EdgeLabel::e12);
      case EdgeLabel::e13: return GluingEntry::glued(c, EdgeLabel::e21);
    }
    return y;
  };

  std::vector<Row> rows = tri.rows();
  const Row old = rows[t - 1];
  for (Row& row : rows)
    for (GluingEntry& y : row) y = redirect(y);

  auto at = [](const Row& r, Column col) { return r[static_cast<int>(col)]; };
  rows[a - 1] = Row{redirect(at(old, Column::c12)), GluingEntry::glued(b, EdgeLabel::e13),
                    GluingEntry::glued(c, EdgeLabel::e32)};
  rows.push_back(Row{redirect(at(old, Column::c23)), GluingEntry::glued(c, EdgeLabel::e13),
                     GluingEntry::glued(a, EdgeLabel::e32)});
  rows.push_back(Row{redirect(at(old, Column::c31)), GluingEntry::glued(a, EdgeLabel::e13),
                     GluingEntry::glued(b, EdgeLabel::e32)});
  return Triangulation(std::move(rows));
}

inline Triangulation subdivide(const Triangulation& tri, std::uint64_t count, std::mt19937_64& rng) {
  Triangulation out = tri;
  for (std::uint64_t k = 0; k < count && !out.empty(); ++k) {
    std::uniform_int_distribution<TriangleIndex> pick(1, out.size());
    out = subdivide_triangle(out, pick(rng));
  }
  return out;
}

namespace detail {

inline void append_punctures(std::vector<WordSide>& word, int& next_letter, std::uint64_t punctures) {
  for (std::uint64_t p = 0; p < punctures; ++p) {
    const int x = next_letter++;
    const int c = next_letter++;
    word.push_back({x, false});
    word.push_back({c, false});
    word.push_back({x, true});
  }
}

inline Triangulation generate_base(const FamilySpec& spec) {
  std::vector<WordSide> word;
  int next = 0;
  switch (spec.family) {
    case Family::disk: return single_triangle_disk();
    case Family::moebius: return single_triangle_moebius();
    case Family::sphere:
      if (spec.punctures == 0) return two_triangle_sphere();
      append_punctures(word, next, spec.punctures);
      return polygon_triangulation(word);
    case Family::orientable:
      if (spec.genus < 0) throw UnsupportedSpec("orientable genus must be >= 0");
      if (spec.genus == 0) return generate_base(FamilySpec::sphere(spec.punctures));
      for (std::int64_t g = 0; g < spec.genus; ++g) {
        const int a = next++;
        const int b = next++;
        word.insert(word.end(), {{a, false}, {b, false}, {a, true}, {b, true}});
      }
      append_punctures(word, next, spec.punctures);
      return polygon_triangulation(word);
    case Family::nonorientable:
      if (spec.genus < 1) throw UnsupportedSpec("non-orientable genus must be >= 1");
      if (spec.genus == 1 && spec.punctures == 0) {
        // a b a b: the projective plane on a square.
        return polygon_triangulation({{0, false}, {1, false}, {0, false}, {1, false}});
      }
      for (std::int64_t k = 0; k < spec.genus; ++k) {
        const int a = next++;
        word.insert(word.end(), {{a, false}, {a, false}});
      }
      append_punctures(word, next, spec.punctures);
      return polygon_triangulation(word);
    case Family::disjoint_union: break;
  }
  throw UnsupportedSpec("unknown family");
}

}  // namespace detail

/// Build the triangulation a spec describes. Union parts are generated (with
/// their own mutations) and concatenated; the spec's own mutations run last.
inline Triangulation generate(const FamilySpec& spec) {
  Triangulation out;
  if (spec.family == Family::disjoint_union) {
    for (const FamilySpec& part : spec.components) out = disjoint_union(out, generate(part));
  } else {
    out = detail::generate_base(spec);
  }
  for (const Mutation& m : spec.mutations) {
    std::mt19937_64 rng(m.seed);
    out = m.kind == Mutation::Kind::relabel ? relabel(out, rng) : subdivide(out, m.count, rng);
  }
  return out;
}

/// Parse a family spec string: parts joined by '+', each one of
///   S<g>[b<p>]   orientable genus g (S0 is the sphere) with p punctures
///   N<k>[b<p>]   non-orientable genus k >= 1 with p punctures
///   D            disk
///   M            Moebius band
/// A single part yields that family; several yield their disjoint union.
inline FamilySpec parse_family_spec(std::string_view text) {
  auto number = [&](std::string_view& rest, std::string_view part) -> std::uint64_t {
    std::size_t digits = 0;
    while (digits < rest.size() && rest[digits] >= '0' && rest[digits] <= '9') ++digits;
    if (digits == 0 || digits > 9)
      throw UnsupportedSpec("bad number in spec part '" + std::string(part) + "'");
    const std::uint64_t value = std::stoull(std::string(rest.substr(0, digits)));
    rest.remove_prefix(digits);
    return value;
  };
  std::vector<FamilySpec> parts;
  std::size_t pos = 0;
  while (true) {
    const std::size_t plus = text.find('+', pos);
    const std::string_view part =
        text.substr(pos, plus == std::string_view::npos ? std::string_view::npos : plus - pos);
    if (part.empty()) throw UnsupportedSpec("empty spec part in '" + std::string(text) + "'");
    std::string_view rest = part.substr(1);
    switch (part.front()) {
      case 'D':
      case 'M':
        if (!rest.empty()) throw UnsupportedSpec("unexpected text in spec part '" + std::string(part) + "'");
        parts.push_back(part.front() == 'D' ? FamilySpec::disk() : FamilySpec::moebius());
        break;
      case 'S':
      case 'N': {
        const auto genus = static_cast<std::int64_t>(number(rest, part));
        std::uint64_t punctures = 0;
        if (!rest.empty() && rest.front() == 'b') {
          rest.remove_prefix(1);
          punctures = number(rest, part);
        }
        if (!rest.empty()) throw UnsupportedSpec("unexpected text in spec part '" + std::string(part) + "'");
        if (part.front() == 'N' && genus < 1)
          throw UnsupportedSpec("non-orientable genus must be >= 1");
        parts.push_back(part.front() == 'S' ? FamilySpec::orientable(genus, punctures)
                                            : FamilySpec::nonorientable(genus, punctures));
        break;
      }
      default: throw UnsupportedSpec("unknown spec part '" + std::string(part) + "'");
    }
    if (plus == std::string_view::npos) break;
    pos = plus + 1;
  }
  if (parts.size() == 1) return parts.front();
  return FamilySpec::disjoint_union(std::move(parts));
}

}  // namespace surfclass
