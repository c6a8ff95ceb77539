// Command-line front end: diagrams, curves, reconstruction and the
// round-trip harness.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "pht/complex.hpp"
#include "pht/descriptors.hpp"
#include "pht/edges.hpp"
#include "pht/errors.hpp"
#include "pht/harness.hpp"
#include "pht/higher.hpp"
#include "pht/oracle.hpp"

using namespace pht;

namespace {

std::vector<Rational> parse_list(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(' ');
    const auto e = item.find_last_not_of(' ');
    if (b == std::string::npos) throw InvalidInput("empty entry in list '" + text + "'");
    out.push_back(parse_rational(std::string_view(item).substr(b, e - b + 1)));
  }
  if (out.empty()) throw InvalidInput("empty list");
  return out;
}

Direction parse_direction(const std::string& text, std::size_t dim) {
  auto coords = parse_list(text);
  if (coords.size() != dim)
    throw InvalidInput("direction has " + std::to_string(coords.size()) + " coordinates, complex lives in R^" +
                       std::to_string(dim));
  return Direction(std::move(coords));
}

std::string join(const Vector& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? " " : "") + format_rational(v[i]);
  return out;
}

void print_apd(const AugmentedDiagram& dgm, std::optional<int> dim) {
  std::cout << "direction " << join(dgm.direction.coords()) << '\n';
  for (const auto& p : dgm.points) {
    if (dim && p.dim != *dim) continue;
    std::cout << p.dim << ' ' << format_rational(p.birth) << ' ' << (p.death ? format_rational(*p.death) : "inf")
              << '\n';
  }
}

void print_query_report(const ReconstructionStats& stats, bool details) {
  std::cout << "# queries vertices " << stats.vertex_queries << '\n';
  std::cout << "# queries edges " << stats.edge_queries << '\n';
  for (const auto& [k, p] : stats.predicates) std::cout << "# queries simplices-" << k << ' ' << p.queries << '\n';
  if (stats.lifted_queries) std::cout << "# queries lifted " << stats.lifted_queries << '\n';
  std::cout << "# queries total " << stats.total_queries() << '\n';
  if (!details) return;
  if (stats.fallback_basis) std::cout << "# fallback-basis yes\n";
  std::cout << "# edge-splits " << stats.edge_splits << '\n';
  for (const auto& [k, p] : stats.predicates)
    std::cout << "# predicate " << k << " calls " << p.calls << " accepted " << p.accepted << " per-call "
              << p.min_queries_per_call << ' ' << p.max_queries_per_call << " expected " << predicate_queries(k)
              << " degenerate " << p.degenerate << '\n';
}

void print_report(const VerificationReport& r) {
  if (r.error) {
    std::cout << "  error " << *r.error << '\n';
    return;
  }
  std::cout << "  exact-match " << (r.exact_match ? "yes" : "no") << '\n';
  std::cout << "  vertex-queries " << r.stats.vertex_queries << " expected " << r.expected_vertex_queries
            << (r.vertex_bound_ok ? " ok" : " FAIL") << '\n';
  std::cout << "  edge-queries " << r.stats.edge_queries << " bound " << r.edge_query_limit
            << (r.edge_bound_ok ? " ok" : " FAIL") << '\n';
  for (const auto& [k, p] : r.stats.predicates)
    std::cout << "  predicate-" << k << " calls " << p.calls << " per-call " << p.min_queries_per_call << ".."
              << p.max_queries_per_call << " expected " << predicate_queries(k) << '\n';
  std::cout << "  predicate-bounds " << (r.predicate_bound_ok ? "ok" : "FAIL") << '\n';
  for (const auto& s : r.missing) std::cout << "  missing " << to_string(s) << '\n';
  for (const auto& s : r.extra) std::cout << "  extra " << to_string(s) << '\n';
  for (const auto& v : r.unmatched_vertices) std::cout << "  unmatched-vertex " << join(v) << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reconstruct simplicial complexes from directional augmented persistence diagrams"};
  app.require_subcommand(1);

  std::string complex_path, direction_text, kind = "betti", stage_name = "full", density_text = "1/2";
  std::optional<int> dim;
  bool codim_zero = false, strict = false, show_stats = false;
  int threads = 1;
  std::size_t trials = 50, n0 = 6, ambient = 3;
  int kappa = 2;
  std::uint64_t seed = 1;
  long denominator = 64;

  auto* apd = app.add_subcommand("apd", "Print the augmented persistence diagram in one direction");
  apd->add_option("--complex", complex_path, "Complex file")->required()->check(CLI::ExistingFile);
  apd->add_option("--dir", direction_text, "Direction x1,...,xd")->required();
  apd->add_option("--dim", dim, "Only points of this dimension");

  auto* curves = app.add_subcommand("curves", "Print a Betti or Euler characteristic curve");
  curves->add_option("--complex", complex_path, "Complex file")->required()->check(CLI::ExistingFile);
  curves->add_option("--dir", direction_text, "Direction x1,...,xd")->required();
  curves->add_option("--kind", kind, "betti or euler")->check(CLI::IsMember({"betti", "euler"}));
  curves->add_option("--dim", dim, "Homology dimension for betti curves");

  auto* recon = app.add_subcommand("reconstruct", "Recover a complex from its diagram oracle");
  recon->add_option("--complex", complex_path, "Complex file")->required()->check(CLI::ExistingFile);
  recon->add_flag("--codim-zero", codim_zero, "Also recover d-simplices through the lifted oracle");
  recon->add_option("--stage", stage_name, "vertices, edges or full")
      ->check(CLI::IsMember({"vertices", "edges", "full"}));
  recon->add_flag("--stats", show_stats, "Per-predicate statistics");
  recon->add_flag("--strict", strict, "Fail on shared first coordinates instead of changing basis");
  recon->add_option("--threads", threads, "Worker threads for candidate tests")->check(CLI::PositiveNumber);

  auto* gen = app.add_subcommand("generate", "Sample a random general-position complex");
  gen->add_option("--seed", seed, "Random seed");
  gen->add_option("--n0", n0, "Vertex count");
  gen->add_option("--dim", ambient, "Ambient dimension");
  gen->add_option("--kappa", kappa, "Top simplex dimension");
  gen->add_option("--density", density_text, "Acceptance probability per dimension, comma separated");
  gen->add_option("--denominator", denominator, "Coordinate denominator bound");
  gen->add_flag("--codim-zero", codim_zero, "Allow kappa = dim and require lifted general position");

  auto* verify = app.add_subcommand("verify", "Round-trip random or given complexes");
  verify->add_option("--trials", trials, "Number of seeded trials");
  verify->add_option("--seed", seed, "Batch seed");
  verify->add_option("--complex", complex_path, "Verify this complex instead")->check(CLI::ExistingFile);
  verify->add_flag("--codim-zero", codim_zero, "Use the lifted driver");
  verify->add_flag("--strict", strict, "Fail on shared first coordinates instead of changing basis");
  verify->add_option("--threads", threads, "Worker threads for candidate tests")->check(CLI::PositiveNumber);

  auto* stats = app.add_subcommand("stats", "Query counts of one reconstruction against their bounds");
  stats->add_option("--complex", complex_path, "Complex file")->required()->check(CLI::ExistingFile);
  stats->add_flag("--codim-zero", codim_zero, "Use the lifted driver");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*apd) {
      const auto K = read_complex_file(complex_path);
      print_apd(compute_apd(K, parse_direction(direction_text, K.ambient_dim())), dim);
      return 0;
    }
    if (*curves) {
      const auto K = read_complex_file(complex_path);
      const auto dgm = compute_apd(K, parse_direction(direction_text, K.ambient_dim()));
      if (kind == "betti") {
        const auto c = betti_curve_from_apd(dgm, dim.value_or(0));
        for (const auto& [h, v] : c.breakpoints) std::cout << format_rational(h) << ' ' << v << '\n';
        for (const auto& [h, v] : c.decorations) std::cout << "# decoration " << format_rational(h) << ' ' << v << '\n';
      } else {
        const auto c = euler_curve_from_apd(dgm);
        for (const auto& [h, v] : c.breakpoints)
          std::cout << format_rational(h) << ' ' << v.even << ' ' << v.odd << '\n';
        for (const auto& [h, v] : c.decorations)
          std::cout << "# decoration " << format_rational(h) << ' ' << v.even << ' ' << v.odd << '\n';
      }
      return 0;
    }
    if (*recon) {
      const auto K = read_complex_file(complex_path);
      ComplexOracle oracle(K);
      const Stage stage = stage_name == "vertices" ? Stage::Vertices : stage_name == "edges" ? Stage::Edges
                                                                                              : Stage::Full;
      std::optional<LiftedOracle> lifted;
      if (codim_zero) lifted.emplace(K);
      const auto r = reconstruct_through(oracle, stage, {threads, strict}, lifted ? &*lifted : nullptr);
      std::cout << serialize_complex(r.complex);
      print_query_report(r.stats, show_stats);
      return 0;
    }
    if (*gen) {
      GeneratorConfig config;
      config.ambient_dim = ambient;
      config.vertex_count = n0;
      config.max_dim = kappa;
      config.density = parse_list(density_text);
      config.seed = seed;
      config.coordinate_denominator_bound = denominator;
      config.codim_zero = codim_zero;
      std::cout << serialize_complex(generate_complex(config));
      return 0;
    }
    if (*verify) {
      const VerifyOptions options{codim_zero, strict, threads};
      if (!complex_path.empty()) {
        const auto r = verify_roundtrip(read_complex_file(complex_path), options);
        std::cout << complex_path << '\n';
        print_report(r);
        std::cout << (r.passed() ? "passed 1/1" : "passed 0/1") << '\n';
        return r.passed() ? 0 : 1;
      }
      std::size_t passed = 0;
      for (std::size_t i = 0; i < trials; ++i) {
        const auto config = trial_config(seed, i, codim_zero);
        const auto K = generate_complex(config);
        const auto r = verify_roundtrip(K, options);
        std::cout << "trial " << i << " d " << config.ambient_dim << " n0 " << config.vertex_count << " kappa "
                  << K.kappa() << " simplices " << K.size() << " queries " << r.stats.total_queries() << ' '
                  << (r.passed() ? "PASS" : "FAIL") << '\n';
        if (!r.passed()) print_report(r);
        passed += r.passed();
      }
      std::cout << "passed " << passed << '/' << trials << '\n';
      return passed == trials ? 0 : 1;
    }
    if (*stats) {
      const auto r = verify_roundtrip(read_complex_file(complex_path), {codim_zero, false, 1});
      print_report(r);
      return r.passed() ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
