#include "pht/higher.hpp"

#include <algorithm>
#include <exception>
#include <mutex>
#include <optional>
#include <set>

#include "pht/edges.hpp"
#include "pht/errors.hpp"
#include "pht/vertices.hpp"

namespace pht {

long compute_indegree(const std::vector<Vector>& points, const Simplex& sigma, const Direction& s, int k,
                      IndegreeMemo& memo, DiagramOracle& oracle, int depth) {
  if (k <= sigma.dim()) throw InvalidInput("compute_indegree: k must exceed dim(sigma)");
  const auto sigma_points = [&] {
    std::vector<Vector> out;
    for (VertexId v : sigma.vertices()) out.push_back(points.at(v));
    return out;
  }();
  const Rational c = s.height(sigma_points[0]);
  for (const auto& p : sigma_points)
    if (s.height(p) != c) throw PreconditionViolated("vertices of " + to_string(sigma) + " differ in height");

  const auto dgm = oracle.query(s);
  memo.max_depth = std::max(memo.max_depth, depth);
  if (dgm.births_at(0, c) > sigma.size())
    throw PreconditionViolated("another vertex shares the height of " + to_string(sigma));
  long count = static_cast<long>(count_at(dgm, k, c));

  if (sigma.size() > 1) {
    const auto heights = s.heights(points);
    for (const Simplex& tau : sigma.proper_faces()) {
      auto it = memo.table.find(tau);
      if (it == memo.table.end()) {
        std::vector<std::size_t> W;
        for (std::size_t i = 0; i < sigma.size(); ++i)
          if (tau.contains(sigma[i])) W.push_back(i);
        const Direction s_prime = second_perpendicular_direction(points, sigma_points, W, s);
        const Direction s_t = tilt(heights, s_prime.heights(points), s, s_prime);
        const long value = compute_indegree(points, tau, s_t, k, memo, oracle, depth + 1);
        it = memo.table.emplace(tau, value).first;
      }
      count -= it->second;
    }
  }
  if (count < 0) throw NegativeCount("k-indegree of " + to_string(sigma) + " came out negative");
  return count;
}

Wedge simplex_wedge(const std::vector<Vector>& points, const Simplex& sigma, VertexId v) {
  if (sigma.contains(v)) throw InvalidInput("simplex_wedge: v is a vertex of sigma");
  const Simplex big = sigma.with(v);
  std::vector<Vector> big_points;
  for (VertexId u : big.vertices()) big_points.push_back(points.at(u));
  if (!affinely_independent(big_points))
    throw DegeneratePosition(to_string(big) + " is affinely dependent");

  const std::vector<std::size_t> ids(big.vertices().begin(), big.vertices().end());
  const Direction s_star = isolating_perpendicular_direction(points, ids);
  std::vector<std::size_t> W;
  for (std::size_t i = 0; i < big.size(); ++i)
    if (big[i] != v) W.push_back(i);
  const Direction s3 = second_perpendicular_direction(points, big_points, W, s_star);

  const auto H3 = s3.heights(points);
  const Direction lower = tilt(s_star.heights(points), H3, s_star, s3);
  const Direction neg = -s_star;
  const Direction upper = -tilt(neg.heights(points), H3, neg, s3);
  return {lower, upper};
}

namespace {

enum class Verdict { Simplex, NotSimplex, Degenerate };

Verdict evaluate(const std::vector<Vector>& points, const Simplex& sigma, VertexId v, DiagramOracle& oracle) {
  std::optional<Wedge> wedge;
  try {
    wedge = simplex_wedge(points, sigma, v);
  } catch (const DegeneratePosition& e) {
    warn(std::string("skipping candidate: ") + e.what());
    return Verdict::Degenerate;
  }

  const int k = static_cast<int>(sigma.size());
  IndegreeMemo upper_memo, lower_memo;
  const long up = compute_indegree(points, sigma, wedge->upper, k, upper_memo, oracle);
  const long low = compute_indegree(points, sigma, wedge->lower, k, lower_memo, oracle);
  return (up - low == 1 || low - up == 1) ? Verdict::Simplex : Verdict::NotSimplex;
}

}  // namespace

bool is_simplex(const std::vector<Vector>& points, const Simplex& sigma, VertexId v, DiagramOracle& oracle) {
  return evaluate(points, sigma, v, oracle) == Verdict::Simplex;
}

bool is_simplex_lifted(const std::vector<Vector>& points, const Simplex& sigma, VertexId v,
                       DiagramOracle& lifted_oracle) {
  return is_simplex(lift_points(points), sigma, v, lifted_oracle);
}

std::size_t ReconstructionStats::total_queries() const {
  std::size_t total = vertex_queries + edge_queries;
  for (const auto& [dim, p] : predicates) total += p.queries;
  return total;
}

namespace {

struct Candidate {
  Simplex sigma;
  VertexId v;
};

// Tests every (sigma, v) pair with v outside sigma and returns the distinct
// accepted cofaces in lexicographic order.
std::vector<Simplex> grow(const std::vector<Vector>& points, const std::vector<Simplex>& previous,
                          DiagramOracle& oracle, int threads, PredicateStats& stats) {
  std::vector<Candidate> candidates;
  for (const auto& sigma : previous)
    for (VertexId v = 0; v < points.size(); ++v)
      if (!sigma.contains(v)) candidates.push_back({sigma, v});

  const long n = static_cast<long>(candidates.size());
  std::vector<Verdict> verdicts(candidates.size(), Verdict::NotSimplex);
  std::vector<std::size_t> queries(candidates.size(), 0);
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto run = [&](long i) {
    try {
      CountingOracle counted(oracle);
      verdicts[i] = evaluate(points, candidates[i].sigma, candidates[i].v, counted);
      queries[i] = counted.count();
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  };
  if (threads > 1) {
#pragma omp parallel for schedule(dynamic) num_threads(threads)
    for (long i = 0; i < n; ++i) run(i);
  } else {
    for (long i = 0; i < n; ++i) run(i);
  }
  if (failure) std::rethrow_exception(failure);

  std::set<Simplex> found;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    ++stats.calls;
    stats.queries += queries[i];
    if (verdicts[i] == Verdict::Degenerate) {
      ++stats.degenerate;
      continue;
    }
    const bool first = stats.calls - stats.degenerate == 1;
    stats.min_queries_per_call = first ? queries[i] : std::min(stats.min_queries_per_call, queries[i]);
    stats.max_queries_per_call = std::max(stats.max_queries_per_call, queries[i]);
    if (verdicts[i] == Verdict::Simplex) {
      ++stats.accepted;
      found.insert(candidates[i].sigma.with(candidates[i].v));
    }
  }
  return {found.begin(), found.end()};
}

}  // namespace

Reconstruction reconstruct_through(DiagramOracle& oracle, Stage stage, const ReconstructOptions& options,
                                   DiagramOracle* lifted_oracle) {
  const std::size_t d = oracle.ambient_dim();
  if (d < 2) throw InvalidInput("reconstruction needs ambient dimension at least 2");
  if (lifted_oracle && lifted_oracle->ambient_dim() != d + 1)
    throw InvalidInput("the lifted oracle must live in one dimension higher");

  Reconstruction out;
  auto& stats = out.stats;
  CountingOracle counted(oracle);

  // Vertex and edge stages run in a frame where first-axis heights are
  // distinct; the higher stages only need positions, so they use x directly.
  const auto at_e1 = counted.query(Direction::axis(d, 0));
  const auto V1 = vertex_heights(at_e1);
  const bool tied = std::adjacent_find(V1.begin(), V1.end()) != V1.end();
  if (tied && options.strict) throw GeneralPositionViolated("two vertices share an e1-height");

  std::vector<Vector> points;
  std::vector<Simplex> edges;
  std::vector<Simplex> simplices;
  if (!tied) {
    points = find_vertices(counted, at_e1);
    stats.vertex_queries = counted.count();
    if (stage != Stage::Vertices) {
      edges = find_edges(points, counted, nullptr, &stats.edge_splits);
      stats.edge_queries = counted.count() - stats.vertex_queries;
    }
  } else {
    stats.fallback_basis = true;
    warn("vertices share an e1-height; reconstructing in a rotated basis");
    const auto basis = create_unique_height_basis(counted, at_e1);
    BasisOracle frame(counted, basis);
    const auto ys = find_vertices(frame);
    stats.vertex_queries = counted.count();
    if (stage != Stage::Vertices) {
      edges = find_edges(ys, frame, nullptr, &stats.edge_splits);
      stats.edge_queries = counted.count() - stats.vertex_queries;
    }
    for (const auto& y : ys) points.push_back(from_basis(basis, y));
  }

  for (VertexId v = 0; v < points.size(); ++v) simplices.push_back(Simplex{v});
  simplices.insert(simplices.end(), edges.begin(), edges.end());

  if (stage == Stage::Full) {
    std::vector<Simplex> previous = edges;
    for (std::size_t i = 2; i < d && !previous.empty(); ++i) {
      previous = grow(points, previous, counted, options.threads, stats.predicates[static_cast<int>(i)]);
      simplices.insert(simplices.end(), previous.begin(), previous.end());
    }
    if (lifted_oracle && !previous.empty() && previous.front().dim() == static_cast<int>(d) - 1) {
      auto& p = stats.predicates[static_cast<int>(d)];
      previous = grow(lift_points(points), previous, *lifted_oracle, options.threads, p);
      stats.lifted_queries = p.queries;
      simplices.insert(simplices.end(), previous.begin(), previous.end());
    }
  }

  out.complex = build_complex(d, std::move(points), simplices);
  return out;
}

Reconstruction reconstruct(DiagramOracle& oracle, const ReconstructOptions& options) {
  return reconstruct_through(oracle, Stage::Full, options, nullptr);
}

Reconstruction reconstruct_codim_zero(DiagramOracle& oracle, DiagramOracle& lifted_oracle,
                                      const ReconstructOptions& options) {
  return reconstruct_through(oracle, Stage::Full, options, &lifted_oracle);
}

}  // namespace pht
