// surfclass: command-line front end.
//
// Exit codes: 0 success / "Yes", 1 "No" / invalid surface, 2 parse, I/O or
// usage error, 3 work-memory budget exceeded.

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "surfclass/surfclass.hpp"

namespace {

using namespace surfclass;
using nlohmann::json;

enum Exit { kOk = 0, kNo = 1, kUsage = 2, kBudget = 3 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  std::string engine = "baseline";
  std::string oracle;  // empty: engine default
  std::string space_report;
  std::optional<std::uint64_t> seed;
  std::uint64_t budget_bits = 0;
};

std::string read_file(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Triangulation load(const std::string& path) {
  const std::string text = read_file(path);
  try {
    return parse(text);
  } catch (const ParseError& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

Engine engine_of(const Config& cfg) {
  if (cfg.engine == "metered") return Engine::metered;
  return Engine::baseline;
}

/// The oracle a run uses. The metered engine only runs with a bounded-memory
/// oracle; the baseline engine takes anything and uses union-find internally.
std::string oracle_of(const Config& cfg) {
  const bool metered = engine_of(cfg) == Engine::metered;
  const std::string oracle = cfg.oracle.empty() ? (metered ? "savitch" : "unionfind") : cfg.oracle;
  if (oracle == "derand") throw UsageError("the derand oracle is not available in this build");
  if (metered && oracle == "unionfind")
    throw UsageError("--engine metered needs a bounded-memory oracle (savitch)");
  return oracle;
}

void write_space_report(const Config& cfg, std::uint64_t symbols, const Workspace& ws) {
  if (cfg.space_report.empty()) return;
  const json report = {{"input_symbols", symbols},
                       {"budget_bits", ws.budget_bits()},
                       {"peak_bits", ws.peak_bits()},
                       {"input_reads", ws.input_reads()}};
  std::ofstream out(cfg.space_report);
  if (!out) throw std::runtime_error("cannot write '" + cfg.space_report + "'");
  out << report.dump() << '\n';
}

/// Run `body(oracle, ws)` with the configured oracle and a workspace sized for
/// `symbols` input symbols, then write the space report if one was asked for.
template <class Body>
auto metered(const Config& cfg, std::uint64_t symbols, Body&& body) {
  oracle_of(cfg);
  Workspace ws(cfg.budget_bits != 0 ? cfg.budget_bits : default_budget_bits(symbols));
  auto result = body(SavitchOracle{}, ws);
  write_space_report(cfg, symbols, ws);
  return result;
}

void report_violations(const InvalidSurface& e) {
  std::cerr << e.which() << " is not a surface\n";
  for (const Violation& v : e.violations()) std::cerr << format_violation(v) << '\n';
}

std::vector<InvariantTriple> classify_with(const Config& cfg, const Triangulation& tri) {
  if (engine_of(cfg) == Engine::baseline) {
    oracle_of(cfg);
    return classify(tri);
  }
  return metered(cfg, tape_symbol_count(tri), [&](const auto& oracle, Workspace& ws) {
    return classify_scan(tri, oracle, ws);
  });
}

int cmd_check(const Config&, const std::string& path) {
  const auto violations = check_surface(load(path));
  for (const Violation& v : violations) std::cout << format_violation(v) << '\n';
  return violations.empty() ? kOk : kNo;
}

int cmd_classify(const Config& cfg, const std::string& path) {
  for (const InvariantTriple& tr : classify_with(cfg, load(path))) std::cout << to_string(tr) << '\n';
  return kOk;
}

int cmd_invariants(const Config& cfg, const std::string& path) {
  for (const InvariantTriple& tr : classify_with(cfg, load(path)))
    std::cout << "o=" << tr.o << " chi=" << tr.chi << " b=" << tr.b
              << " name=" << normal_form_name(tr).standard << '\n';
  return kOk;
}

int cmd_homeomorphic(const Config& cfg, const std::string& first, const std::string& second) {
  const Triangulation a = load(first);
  const Triangulation b = load(second);
  bool same = false;
  if (engine_of(cfg) == Engine::baseline) {
    oracle_of(cfg);
    same = homeomorphic(a, b);
  } else {
    same = metered(cfg, tape_symbol_count(a) + tape_symbol_count(b),
                   [&](const auto& oracle, Workspace& ws) {
                     return homeomorphic(a, b, Engine::metered, oracle, ws);
                   });
  }
  std::cout << (same ? "Yes" : "No") << '\n';
  return same ? kOk : kNo;
}

int cmd_double_cover(const Config&, const std::string& path) {
  const Triangulation tri = load(path);
  require_surface(tri);
  std::cout << serialize(double_cover(tri)) << '\n';
  return kOk;
}

int cmd_graph(const Config&, const std::string& kind, const std::string& path) {
  const Triangulation tri = load(path);
  UndirectedGraph g;
  if (kind == "dual") g = face_dual(tri);
  else if (kind == "K") g = vertex_identification_graph(tri);
  else g = boundary_identification_graph(tri);
  std::cout << "v " << g.vertex_count() << '\n';
  for (const auto& [a, b] : g.edges()) std::cout << "e " << a << ' ' << b << '\n';
  return kOk;
}

int cmd_generate(const Config& cfg, const std::string& text, bool relabel_it,
                 std::uint64_t subdivisions, const std::string& out_path) {
  FamilySpec spec = parse_family_spec(text);
  const std::uint64_t seed = cfg.seed.value_or(0);
  if (subdivisions > 0) spec.with(Mutation::subdivide(subdivisions, seed));
  if (relabel_it) spec.with(Mutation::relabel(seed + 1));
  const std::string tape = serialize(generate(spec));
  if (out_path.empty()) {
    std::cout << tape << '\n';
  } else {
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot write '" + out_path + "'");
    out << tape << '\n';
  }
  return kOk;
}

void write_report(const std::filesystem::path& path, const json& report) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
  out << report.dump() << '\n';
  std::cout << report.dump() << '\n';
}

int cmd_bench_space(const Config& cfg, const std::string& out_dir, std::uint64_t max_n,
                    double seconds_per_size) {
  if (engine_of(cfg) != Engine::metered) throw UsageError("bench-space needs --engine metered");
  oracle_of(cfg);
  std::filesystem::create_directories(out_dir);
  bool all_completed = true;
  bool timed_out = false;
  for (std::uint64_t n : bench_sizes(max_n)) {
    const auto path = std::filesystem::path(out_dir) / ("space_n" + std::to_string(n) + ".json");
    if (timed_out) {
      // Running time only grows with n, so a timed-out size ends the sweep.
      const json skipped = {{"n", n}, {"completed", false}, {"failure", "skipped: a smaller size did not complete"}};
      write_report(path, skipped);
      continue;
    }
    std::optional<Workspace::Clock::time_point> deadline;
    if (seconds_per_size > 0)
      deadline = Workspace::Clock::now() +
                 std::chrono::duration_cast<Workspace::Clock::duration>(
                     std::chrono::duration<double>(seconds_per_size));
    const SpaceReport r = measure_space(bench_input(n), SavitchOracle{}, cfg.budget_bits, deadline);
    json report = {{"n", n},
                   {"input_symbols", r.input_symbols},
                   {"budget_bits", r.budget_bits},
                   {"peak_bits", r.peak_bits},
                   {"input_reads", r.input_reads},
                   {"completed", r.completed},
                   {"seconds", r.seconds}};
    if (!r.completed) report["failure"] = r.failure;
    write_report(path, report);
    all_completed = all_completed && r.completed;
    timed_out = r.timed_out;
  }
  return all_completed ? kOk : kNo;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Classify triangulated surfaces from their gluing tables"};
  app.require_subcommand(1);
  app.fallthrough();
  Config cfg;
  app.add_option("--engine", cfg.engine, "baseline or metered")
      ->check(CLI::IsMember({"baseline", "metered"}));
  app.add_option("--oracle", cfg.oracle, "connectivity oracle")
      ->check(CLI::IsMember({"unionfind", "savitch", "derand"}));
  app.add_option("--space-report", cfg.space_report, "write a JSON space report (metered engine)");
  app.add_option("--seed", cfg.seed, "seed for generate mutations");
  app.add_option("--budget-bits", cfg.budget_bits, "work-memory budget; 0 picks the default");

  std::string file;
  std::string second;
  std::string kind = "dual";
  std::string spec_text;
  std::string out_path;
  std::string out_dir = "space-reports";
  bool relabel_flag = false;
  std::uint64_t subdivisions = 0;
  std::uint64_t max_n = 1024;
  double seconds_per_size = 0;

  auto* check = app.add_subcommand("check", "list table-condition violations");
  check->add_option("file", file)->required();
  auto* classify_cmd = app.add_subcommand("classify", "print the sorted invariant triples");
  classify_cmd->add_option("file", file)->required();
  auto* invariants = app.add_subcommand("invariants", "print invariants and names per component");
  invariants->add_option("file", file)->required();
  auto* homeo = app.add_subcommand("homeomorphic", "decide whether two surfaces are homeomorphic");
  homeo->add_option("first", file)->required();
  homeo->add_option("second", second)->required();
  auto* cover = app.add_subcommand("double-cover", "print the orientation double cover");
  cover->add_option("file", file)->required();
  auto* graph = app.add_subcommand("graph", "print an auxiliary graph");
  graph->add_option("--kind", kind, "dual, K or Kprime")
      ->check(CLI::IsMember({"dual", "K", "Kprime"}));
  graph->add_option("file", file)->required();
  auto* gen = app.add_subcommand("generate", "emit a triangulation of a named surface");
  gen->add_option("spec", spec_text, "e.g. S2b1+N3+D+M")->required();
  gen->add_flag("--relabel", relabel_flag, "randomly renumber the triangles");
  gen->add_option("--subdivide", subdivisions, "number of random stellar subdivisions");
  gen->add_option("-o,--out", out_path, "output file (default stdout)");
  auto* bench = app.add_subcommand("bench-space", "metered space use over doubling sizes");
  bench->add_option("--out-dir", out_dir, "directory for the per-size JSON reports");
  bench->add_option("--max-n", max_n, "largest size (default 1024)");
  bench->add_option("--seconds-per-size", seconds_per_size, "abandon a size after this long (0: no limit)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (!cfg.space_report.empty() && engine_of(cfg) != Engine::metered)
      throw UsageError("--space-report needs --engine metered");
    if (*check) return cmd_check(cfg, file);
    if (*classify_cmd) return cmd_classify(cfg, file);
    if (*invariants) return cmd_invariants(cfg, file);
    if (*homeo) return cmd_homeomorphic(cfg, file, second);
    if (*cover) return cmd_double_cover(cfg, file);
    if (*graph) return cmd_graph(cfg, kind, file);
    if (*gen) return cmd_generate(cfg, spec_text, relabel_flag, subdivisions, out_path);
    if (*bench) return cmd_bench_space(cfg, out_dir, max_n, seconds_per_size);
  } catch (const InvalidSurface& e) {
    report_violations(e);
    return kNo;
  } catch (const BudgetExceeded& e) {
    std::cerr << e.what() << '\n';
    return kBudget;
  } catch (const UsageError& e) {
    std::cerr << "usage: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << e.what() << '\n';
    return kUsage;
  } catch (const UnsupportedSpec& e) {
    std::cerr << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
