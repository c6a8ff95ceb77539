#pragma once

// Lower-star filtrations, augmented persistence diagrams over Z/2, and the
// direction oracles the reconstruction stages talk to.

#include <atomic>
#include <cstddef>
#include <deque>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "pht/complex.hpp"
#include "pht/geometry.hpp"

namespace pht {

struct DiagramPoint {
  int dim = 0;
  Rational birth;
  std::optional<Rational> death;  // nullopt is infinity

  bool infinite() const noexcept { return !death.has_value(); }
  bool zero_persistence() const { return death && *death == birth; }

  friend bool operator==(const DiagramPoint&, const DiagramPoint&) = default;
  friend bool operator<(const DiagramPoint& a, const DiagramPoint& b);
};

struct AugmentedDiagram {
  std::vector<DiagramPoint> points;  // sorted: dim, birth, death (infinity last)
  Direction direction = Direction::axis(1, 0);

  AugmentedDiagram restricted(int k) const;
  std::size_t size() const noexcept { return points.size(); }
  std::size_t births_at(int k, const Rational& c) const;
  std::size_t deaths_at(int k, const Rational& c) const;
  std::size_t infinite_count(int k) const;
};

/// Number of k-simplices at lower-star height c: k-births plus (k-1)-deaths
/// at c in one diagram.
std::size_t count_at(const AugmentedDiagram& dgm, int k, const Rational& c);
/// Same count from the two restrictions of one diagram.
std::size_t count_at(const AugmentedDiagram& dgm_k, const AugmentedDiagram& dgm_km1, int k, const Rational& c);

/// h(sigma) = max of s.v over the vertices of sigma, for every simplex.
std::map<Simplex, Rational> lower_star_heights(const SimplicialComplex& K, const Direction& s);

/// Simplices ordered by (height, dimension, vertex tuple).
std::vector<Simplex> index_filtration(const SimplicialComplex& K, const Direction& s);

/// Column reduction over Z/2 in index-filtration order.
AugmentedDiagram compute_apd(const SimplicialComplex& K, const Direction& s);

/// Reduction along a caller-supplied total order, which must list every
/// simplex of K after its faces. Used to check tie-break independence.
AugmentedDiagram compute_apd_in_order(const SimplicialComplex& K, const Direction& s,
                                      const std::vector<Simplex>& order);

/// Reusable reduction state for one complex: facet indices are computed once
/// and each query only sorts and reduces. Thread-safe for concurrent queries.
class FiltrationEngine {
 public:
  explicit FiltrationEngine(const SimplicialComplex& K);

  const SimplicialComplex& complex() const noexcept { return *K_; }
  /// `clearing` skips columns already known to be paired; the
  /// result is identical either way.
  AugmentedDiagram diagram(const Direction& s, bool clearing = true) const;

 private:
  const SimplicialComplex* K_;
  std::vector<int> dims_;
  std::vector<std::vector<std::size_t>> vertices_;  // per simplex, sorted
  std::vector<std::vector<std::size_t>> facets_;    // per simplex, flat indices
};

/// v -> (v, v.v) on every vertex; same combinatorics.
SimplicialComplex lift(const SimplicialComplex& K);
/// v -> (v, v.v), the vertex map of lift.
std::vector<Vector> lift_points(const std::vector<Vector>& points);

/// Counts logical diagram requests. One request returns every dimension, so
/// reading several dimensions of it costs one query.
class QueryLog {
 public:
  QueryLog() = default;
  QueryLog(const QueryLog&) = delete;
  QueryLog& operator=(const QueryLog&) = delete;

  void record(const Direction& s);
  std::size_t count() const noexcept { return count_.load(); }
  std::vector<Direction> directions() const;
  void reset();

 private:
  std::atomic<std::size_t> count_{0};
  mutable std::mutex mutex_;
  std::vector<Direction> directions_;
};

/// Logs one request and returns compute_apd, restricted to dim_filter if set.
AugmentedDiagram query(QueryLog& log, const SimplicialComplex& K, const Direction& s,
                       std::optional<int> dim_filter = std::nullopt);
AugmentedDiagram query_lifted(QueryLog& log, const SimplicialComplex& K, const Direction& s,
                              std::optional<int> dim_filter = std::nullopt);

/// The black box the reconstruction stages see: full diagrams by direction.
class DiagramOracle {
 public:
  virtual ~DiagramOracle() = default;
  virtual std::size_t ambient_dim() const = 0;
  /// One logical query. Implementations must be safe to call concurrently.
  virtual AugmentedDiagram query(const Direction& s) = 0;
};

/// Oracle backed by a known complex. Logs every request and caches results
/// by primitive direction; scaled duplicates hit the cache but still count.
class ComplexOracle : public DiagramOracle {
 public:
  explicit ComplexOracle(const SimplicialComplex& K, std::size_t cache_capacity = 256);

  std::size_t ambient_dim() const override { return K_.ambient_dim(); }
  AugmentedDiagram query(const Direction& s) override;

  const SimplicialComplex& complex() const noexcept { return K_; }
  QueryLog& log() noexcept { return log_; }
  std::size_t cache_hits() const noexcept { return hits_.load(); }

 private:
  SimplicialComplex K_;
  FiltrationEngine engine_;
  QueryLog log_;
  std::size_t capacity_;
  std::mutex cache_mutex_;
  std::map<Direction, std::shared_ptr<const AugmentedDiagram>> cache_;
  std::deque<Direction> fifo_;
  std::atomic<std::size_t> hits_{0};
};

/// Answers for lift(K) in R^{d+1}.
class LiftedOracle : public ComplexOracle {
 public:
  explicit LiftedOracle(const SimplicialComplex& K, std::size_t cache_capacity = 256)
      : ComplexOracle(lift(K), cache_capacity) {}
};

/// Forwards to another oracle and counts the requests passing through.
class CountingOracle : public DiagramOracle {
 public:
  explicit CountingOracle(DiagramOracle& inner) : inner_(&inner) {}

  std::size_t ambient_dim() const override { return inner_->ambient_dim(); }
  AugmentedDiagram query(const Direction& s) override {
    count_.fetch_add(1);
    return inner_->query(s);
  }
  std::size_t count() const noexcept { return count_.load(); }

 private:
  DiagramOracle* inner_;
  std::atomic<std::size_t> count_{0};
};

/// Oracle for the complex expressed in coordinates y = B x, where the rows
/// of B are `basis`. A query s' is answered by the inner oracle at B^T s';
/// heights agree because s'.(Bx) = (B^T s').x.
class BasisOracle : public DiagramOracle {
 public:
  BasisOracle(DiagramOracle& inner, std::vector<Direction> basis);

  std::size_t ambient_dim() const override { return inner_->ambient_dim(); }
  AugmentedDiagram query(const Direction& s) override;

 private:
  DiagramOracle* inner_;
  std::vector<Direction> basis_;
};

}  // namespace pht
