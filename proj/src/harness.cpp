#include "pht/harness.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "pht/edges.hpp"
#include "pht/errors.hpp"
#include "pht/oracle.hpp"

namespace pht {

void GeneratorConfig::validate() const {
  if (ambient_dim < 2) throw InvalidInput("ambient dimension must be at least 2");
  if (vertex_count < 1) throw InvalidInput("need at least one vertex");
  if (max_dim < 0) throw InvalidInput("max_dim must be nonnegative");
  if (static_cast<std::size_t>(max_dim) > ambient_dim ||
      (!codim_zero && static_cast<std::size_t>(max_dim) >= ambient_dim))
    throw InvalidInput("max_dim must be below the ambient dimension (or equal in codim-zero mode)");
  if (density.empty()) throw InvalidInput("density needs at least one entry");
  for (const auto& p : density)
    if (p < 0 || p > 1) throw InvalidInput("density must lie in [0, 1]");
  if (coordinate_denominator_bound < 1 || coordinate_range < 1)
    throw InvalidInput("coordinate bounds must be positive");
}

Rational GeneratorConfig::density_at(int k) const {
  const std::size_t i = static_cast<std::size_t>(std::max(k, 1) - 1);
  return i < density.size() ? density[i] : density.back();
}

namespace {

// Calls f on every m-subset of 0..n-1 (as sorted indices) until f is false.
template <class F>
bool all_subsets(std::size_t n, std::size_t m, F&& f) {
  std::vector<std::size_t> idx(m);
  for (std::size_t i = 0; i < m; ++i) idx[i] = i;
  while (true) {
    if (!f(idx)) return false;
    std::size_t i = m;
    while (i > 0 && idx[i - 1] == n - m + i - 1) --i;
    if (i == 0) return true;
    ++idx[i - 1];
    for (std::size_t j = i; j < m; ++j) idx[j] = idx[j - 1] + 1;
  }
}

bool subsets_independent(const std::vector<Vector>& points, std::size_t m) {
  m = std::min(m, points.size());
  if (m == 0) return true;
  return all_subsets(points.size(), m, [&](const std::vector<std::size_t>& idx) {
    std::vector<Vector> sub;
    for (std::size_t i : idx) sub.push_back(points[i]);
    return affinely_independent(sub);
  });
}

Rational sample_rational(std::mt19937_64& rng, long range, long max_den) {
  const long den = std::uniform_int_distribution<long>(1, max_den)(rng);
  const long num = std::uniform_int_distribution<long>(-range * den, range * den)(rng);
  Rational r(num, den);
  r.canonicalize();
  return r;
}

bool bernoulli(std::mt19937_64& rng, const Rational& p) {
  if (p >= 1) return true;
  if (p <= 0) return false;
  // p = a/b exactly: accept when a uniform draw from [0, b) lands below a.
  const auto a = p.get_num().get_ui();
  const auto b = p.get_den().get_ui();
  return std::uniform_int_distribution<unsigned long>(0, b - 1)(rng) < a;
}

}  // namespace

bool in_general_position(const std::vector<Vector>& points, bool codim_zero) {
  if (points.empty()) return true;
  const std::size_t d = points[0].size();
  if (!validate_general_position(build_complex(d, points, {})).ok()) return false;
  if (!subsets_independent(points, d + 1)) return false;
  return !codim_zero || subsets_independent(lift_points(points), d + 2);
}

SimplicialComplex generate_complex(const GeneratorConfig& config) {
  config.validate();
  std::mt19937_64 rng(config.seed);
  const std::size_t d = config.ambient_dim;
  const std::size_t n0 = config.vertex_count;

  std::vector<Vector> points;
  bool found = false;
  for (std::size_t round = 0; round < config.max_rounds && !found; ++round) {
    points.assign(n0, Vector{});
    for (auto& p : points)
      for (std::size_t i = 0; i < d; ++i)
        p.push_back(sample_rational(rng, config.coordinate_range, config.coordinate_denominator_bound));
    found = in_general_position(points, config.codim_zero);
  }
  if (!found)
    throw GenerationFailure("no general-position vertex set after " + std::to_string(config.max_rounds) + " rounds");

  // Bottom-up: a k-simplex is a candidate only when all of its facets made it.
  std::set<Simplex> accepted;
  for (VertexId v = 0; v < n0; ++v) accepted.insert(Simplex{v});
  std::vector<Simplex> layer(accepted.begin(), accepted.end());
  std::vector<Simplex> all;
  for (int k = 1; k <= config.max_dim && !layer.empty() && static_cast<std::size_t>(k) < n0; ++k) {
    const Rational p = config.density_at(k);
    std::vector<Simplex> next;
    all_subsets(n0, static_cast<std::size_t>(k) + 1, [&](const std::vector<std::size_t>& idx) {
      const Simplex candidate(std::vector<VertexId>(idx.begin(), idx.end()));
      const auto facets = candidate.facets();
      if (std::all_of(facets.begin(), facets.end(), [&](const Simplex& f) { return accepted.count(f) > 0; }) &&
          bernoulli(rng, p))
        next.push_back(candidate);
      return true;
    });
    accepted.insert(next.begin(), next.end());
    all.insert(all.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return build_complex(d, std::move(points), all);
}

bool VerificationReport::passed() const noexcept {
  return exact_match && !error && vertex_bound_ok && edge_bound_ok && predicate_bound_ok;
}

std::size_t predicate_queries(int k) { return 2 * ((std::size_t{1} << k) - 1); }

VerificationReport verify_roundtrip(const SimplicialComplex& truth, const VerifyOptions& options) {
  VerificationReport report;
  const std::size_t d = truth.ambient_dim();
  report.edge_query_limit = edge_query_bound(truth.vertex_count(), truth.simplices(1));

  Reconstruction result;
  try {
    ComplexOracle oracle(truth);
    ReconstructOptions ropts{options.threads, options.strict};
    if (options.codim_zero) {
      LiftedOracle lifted(truth);
      result = reconstruct_codim_zero(oracle, lifted, ropts);
    } else {
      result = reconstruct(oracle, ropts);
    }
  } catch (const std::exception& e) {
    report.error = e.what();
    return report;
  }
  report.stats = result.stats;

  report.expected_vertex_queries = 2 * d - 1 + (result.stats.fallback_basis ? 2 : 0);
  report.vertex_bound_ok = result.stats.vertex_queries == report.expected_vertex_queries;
  report.edge_bound_ok = result.stats.edge_queries <= report.edge_query_limit;
  report.predicate_bound_ok = true;
  for (const auto& [k, p] : result.stats.predicates) {
    const std::size_t want = predicate_queries(k);
    if (p.degenerate > 0 || (p.calls > 0 && (p.min_queries_per_call != want || p.max_queries_per_call != want)))
      report.predicate_bound_ok = false;
  }

  // Recovered ids follow first-axis order; match them to truth by position.
  const auto& recovered = result.complex;
  std::map<Vector, VertexId> by_point;
  for (VertexId v = 0; v < truth.vertex_count(); ++v) by_point.emplace(truth.point(v), v);
  std::vector<std::optional<VertexId>> to_truth(recovered.vertex_count());
  for (VertexId v = 0; v < recovered.vertex_count(); ++v) {
    auto it = by_point.find(recovered.point(v));
    if (it == by_point.end())
      report.unmatched_vertices.push_back(recovered.point(v));
    else
      to_truth[v] = it->second;
  }

  std::set<Simplex> got;
  for (int k = 0; k <= recovered.kappa(); ++k)
    for (const auto& s : recovered.simplices(k)) {
      std::vector<VertexId> ids;
      bool ok = true;
      for (VertexId v : s.vertices()) {
        if (!to_truth[v]) ok = false;
        else ids.push_back(*to_truth[v]);
      }
      if (ok) got.insert(Simplex(ids));
    }
  std::set<Simplex> want;
  for (int k = 0; k <= truth.kappa(); ++k) want.insert(truth.simplices(k).begin(), truth.simplices(k).end());
  std::set_difference(want.begin(), want.end(), got.begin(), got.end(), std::back_inserter(report.missing));
  std::set_difference(got.begin(), got.end(), want.begin(), want.end(), std::back_inserter(report.extra));
  report.exact_match = report.missing.empty() && report.extra.empty() && report.unmatched_vertices.empty();
  return report;
}

VerificationReport verify_roundtrip(const GeneratorConfig& config, const VerifyOptions& options) {
  return verify_roundtrip(generate_complex(config), options);
}

GeneratorConfig trial_config(std::uint64_t seed, std::size_t index, bool codim_zero) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index)};
  std::mt19937_64 rng(seq);
  GeneratorConfig config;
  config.codim_zero = codim_zero;
  if (codim_zero) {
    config.ambient_dim = 2 + index % 2;
    config.max_dim = static_cast<int>(config.ambient_dim);
    config.density = {Rational(2, 3), Rational(3, 4), Rational(4, 5)};
  } else {
    config.ambient_dim = 3 + index % 3;
    config.max_dim = std::min(3, static_cast<int>(config.ambient_dim) - 1);
    config.density = {Rational(2, 3), Rational(3, 4), Rational(4, 5)};
  }
  config.vertex_count = std::uniform_int_distribution<std::size_t>(4, 10)(rng);
  config.seed = rng();
  return config;
}

}  // namespace pht
