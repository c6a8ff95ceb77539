#pragma once

// k-indegrees, the wedge simplex predicate, and the reconstruction drivers.

#include <cstddef>
#include <map>
#include <vector>

#include "pht/complex.hpp"
#include "pht/geometry.hpp"
#include "pht/oracle.hpp"

namespace pht {

/// Face indegrees of one root compute_indegree call.
struct IndegreeMemo {
  std::map<Simplex, long> table;
  int max_depth = 0;  // deepest recursion that issued a query
};

/// Number of k-cofaces of sigma whose lower-star height under s equals the
/// common height c of sigma's vertices. Requires every vertex of sigma at
/// height c, no other vertex there, and k > dim(sigma). `points` are all
/// vertex positions, indexed by vertex id. Issues 2^|sigma| - 1 queries when
/// the memo starts empty. Throws PreconditionViolated if the diagram shows
/// extra vertices at c, NegativeCount if the bookkeeping goes negative.
long compute_indegree(const std::vector<Vector>& points, const Simplex& sigma, const Direction& s, int k,
                      IndegreeMemo& memo, DiagramOracle& oracle, int depth = 0);

/// The two directions of the wedge around sigma that separate v: under
/// `lower` v sits just above sigma, under `upper` just below.
struct Wedge {
  Direction lower;
  Direction upper;
};

/// Throws DegeneratePosition if sigma + v is affinely dependent or no
/// isolating direction exists.
Wedge simplex_wedge(const std::vector<Vector>& points, const Simplex& sigma, VertexId v);

/// Whether sigma + v is a simplex of the complex behind `oracle`, for
/// sigma known to be in it. Issues 2(2^k - 1) queries with k = |sigma|.
/// Degenerate candidates produce a warning and false without querying.
bool is_simplex(const std::vector<Vector>& points, const Simplex& sigma, VertexId v, DiagramOracle& oracle);

/// is_simplex on the lifted points v -> (v, v.v) against a lifted oracle.
bool is_simplex_lifted(const std::vector<Vector>& points, const Simplex& sigma, VertexId v,
                       DiagramOracle& lifted_oracle);

struct PredicateStats {
  std::size_t calls = 0;
  std::size_t accepted = 0;
  std::size_t queries = 0;
  std::size_t min_queries_per_call = 0;
  std::size_t max_queries_per_call = 0;
  std::size_t degenerate = 0;  // skipped with a warning
};

struct ReconstructionStats {
  std::size_t vertex_queries = 0;
  std::size_t edge_queries = 0;
  std::size_t edge_splits = 0;
  bool fallback_basis = false;
  std::map<int, PredicateStats> predicates;  // by simplex dimension found
  std::size_t lifted_queries = 0;

  std::size_t total_queries() const;
};

struct ReconstructOptions {
  int threads = 1;      // 1 runs the serial reference path
  bool strict = false;  // shared e1-heights raise instead of changing basis
};

struct Reconstruction {
  SimplicialComplex complex;
  ReconstructionStats stats;
};

/// Vertices, then edges, then k-simplices for k = 2 .. d-1 while the
/// previous dimension is nonempty. Vertex ids follow the first-axis order
/// of the frame used for the vertex stage.
Reconstruction reconstruct(DiagramOracle& oracle, const ReconstructOptions& options = {});

/// As reconstruct, then d-simplices through the lifted oracle.
Reconstruction reconstruct_codim_zero(DiagramOracle& oracle, DiagramOracle& lifted_oracle,
                                      const ReconstructOptions& options = {});

enum class Stage { Vertices, Edges, Full };

/// Stops after the given stage; Full matches reconstruct.
Reconstruction reconstruct_through(DiagramOracle& oracle, Stage stage, const ReconstructOptions& options = {},
                                   DiagramOracle* lifted_oracle = nullptr);

}  // namespace pht
