#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "surfclass/classifier.hpp"
#include "surfclass/generate.hpp"
#include "surfclass/triangulation.hpp"
#include "surfclass/workspace.hpp"

namespace surfclass {

/// Outcome of one metered classification run.
struct SpaceReport {
  std::uint64_t triangles = 0;
  std::uint64_t input_symbols = 0;
  std::uint64_t budget_bits = 0;
  std::uint64_t peak_bits = 0;
  std::uint64_t input_reads = 0;
  double seconds = 0.0;
  bool completed = false;
  bool timed_out = false;
  std::string failure;  // empty when completed
  std::vector<InvariantTriple> triples;
};

/// Bench input with exactly n triangles (n even, n >= 2): the non-orientable
/// surface of genus n/2 + 1 as one polygon, so a single vertex and a single
/// face-dual component.
inline Triangulation bench_input(std::uint64_t n) {
  if (n < 2 || n % 2 != 0) throw UnsupportedSpec("bench sizes must be even and >= 2");
  return generate(FamilySpec::nonorientable(static_cast<std::int64_t>(n / 2 + 1)));
}

/// Classify with the metered engine and record work-memory use.
/// budget_bits == 0 selects default_budget_bits(N).
template <class Oracle>
SpaceReport measure_space(const Triangulation& tri, const Oracle& oracle,
                          std::uint64_t budget_bits = 0,
                          std::optional<Workspace::Clock::time_point> deadline = std::nullopt) {
  SpaceReport report;
  report.triangles = tri.size();
  report.input_symbols = tape_symbol_count(tri);
  report.budget_bits = budget_bits != 0 ? budget_bits : default_budget_bits(report.input_symbols);
  Workspace ws(report.budget_bits);
  if (deadline) ws.set_deadline(*deadline);
  const auto start = Workspace::Clock::now();
  try {
    report.triples = classify_scan(tri, oracle, ws);
    report.completed = true;
  } catch (const BudgetExceeded& e) {
    report.failure = e.what();
  } catch (const DeadlineExceeded& e) {
    report.failure = e.what();
    report.timed_out = true;
  }
  report.seconds = std::chrono::duration<double>(Workspace::Clock::now() - start).count();
  report.peak_bits = ws.peak_bits();
  report.input_reads = ws.input_reads();
  return report;
}

/// Doubling sizes 8, 16, ..., max_n.
inline std::vector<std::uint64_t> bench_sizes(std::uint64_t max_n = 1024) {
  std::vector<std::uint64_t> sizes;
  for (std::uint64_t n = 8; n <= max_n; n *= 2) sizes.push_back(n);
  return sizes;
}

}  // namespace surfclass
