#include <random>
#include <set>

#include "doctest.h"
#include "pht/errors.hpp"
#include "pht/oracle.hpp"
#include "test_support.hpp"

using namespace pht;
using namespace pht::test;

namespace {

// Vertices at e1-heights 0, 1, 2.
SimplicialComplex hollow_triangle() {
  return build_complex(2, {vec({0, 0}), vec({1, 3}), vec({2, 1})}, {Simplex{0, 1}, Simplex{0, 2}, Simplex{1, 2}});
}

SimplicialComplex full_triangle() {
  return build_complex(2, {vec({0, 0}), vec({1, 3}), vec({2, 1})}, {Simplex{0, 1, 2}});
}

DiagramPoint pt(int k, long b, std::optional<long> d) {
  return {k, q(b), d ? std::optional<Rational>(q(*d)) : std::nullopt};
}

}  // namespace

TEST_CASE("lower_star_heights and index_filtration") {
  const auto K = full_triangle();
  const auto s = Direction::axis(2, 0);
  const auto h = lower_star_heights(K, s);
  CHECK(h.at(Simplex{0}) == 0);
  CHECK(h.at(Simplex{0, 1}) == 1);
  CHECK(h.at(Simplex{0, 2}) == 2);
  CHECK(h.at(Simplex{1, 2}) == 2);
  CHECK(h.at(Simplex{0, 1, 2}) == 2);
  for (const auto& [sigma, height] : h)
    for (const auto& f : sigma.proper_faces()) CHECK(h.at(f) <= height);

  const std::vector<Simplex> expected{Simplex{0}, Simplex{1}, Simplex{0, 1}, Simplex{2},
                                      Simplex{0, 2}, Simplex{1, 2}, Simplex{0, 1, 2}};
  CHECK(index_filtration(K, s) == expected);

  // Tied heights: dimension, then lexicographic.
  const auto tied = build_complex(2, {vec({1, 0}), vec({0, 0}), vec({2, 0})}, {Simplex{0, 1}, Simplex{1, 2}});
  const std::vector<Simplex> tied_order{Simplex{0}, Simplex{1}, Simplex{2}, Simplex{0, 1}, Simplex{1, 2}};
  CHECK(index_filtration(tied, Direction::axis(2, 1)) == tied_order);
}

TEST_CASE("compute_apd examples") {
  SUBCASE("single vertex") {
    const auto K = build_complex(1, {vec({3})}, {});
    const auto dgm = compute_apd(K, Direction::axis(1, 0));
    CHECK(dgm.points == std::vector<DiagramPoint>{pt(0, 3, std::nullopt)});
  }
  SUBCASE("edge a(0) - b(1)") {
    const auto K = build_complex(2, {vec({0, 0}), vec({1, 0})}, {Simplex{0, 1}});
    const auto dgm = compute_apd(K, Direction::axis(2, 0));
    CHECK(dgm.points == std::vector<DiagramPoint>{pt(0, 0, std::nullopt), pt(0, 1, 1)});
  }
  SUBCASE("hollow triangle") {
    const auto dgm = compute_apd(hollow_triangle(), Direction::axis(2, 0));
    CHECK(dgm.restricted(0).points == std::vector<DiagramPoint>{pt(0, 0, std::nullopt), pt(0, 1, 1), pt(0, 2, 2)});
    CHECK(dgm.restricted(1).points == std::vector<DiagramPoint>{pt(1, 2, std::nullopt)});
    CHECK(dgm.size() == 4);
  }
  SUBCASE("full triangle kills the cycle at once") {
    const auto dgm = compute_apd(full_triangle(), Direction::axis(2, 0));
    CHECK(dgm.restricted(1).points == std::vector<DiagramPoint>{pt(1, 2, 2)});
    CHECK(dgm.restricted(2).points.empty());
  }
}

TEST_CASE("count_at") {
  const auto s = Direction::axis(2, 0);
  const auto edge = compute_apd(build_complex(2, {vec({0, 0}), vec({1, 0})}, {Simplex{0, 1}}), s);
  CHECK(count_at(edge, 1, q(1)) == 1);
  CHECK(count_at(edge.restricted(1), edge.restricted(0), 1, q(1)) == 1);
  const auto tri = compute_apd(hollow_triangle(), s);
  CHECK(count_at(tri, 1, q(2)) == 2);
  CHECK(count_at(tri, 1, q(7, 3)) == 0);
  CHECK(count_at(tri, 0, q(1)) == 1);
}

TEST_CASE("query counting") {
  const auto K = hollow_triangle();
  QueryLog log;
  const auto dgm = query(log, K, Direction::axis(2, 0));
  const auto d0 = dgm.restricted(0);
  const auto d1 = dgm.restricted(1);
  CHECK(d0.size() == 3);
  CHECK(d1.size() == 1);
  CHECK(log.count() == 1);
  query(log, K, Direction::axis(2, 1));
  CHECK(log.count() == 2);
  CHECK(query(log, K, Direction::axis(2, 1), 5).points.empty());
  CHECK(log.count() == 3);
  CHECK(log.directions().size() == 3);
  log.reset();
  CHECK(log.count() == 0);

  SUBCASE("ComplexOracle caches by primitive direction and still counts") {
    ComplexOracle oracle(K);
    const auto a = oracle.query(dir({1, 2}));
    const auto b = oracle.query(dir({3, 6}));
    CHECK(oracle.log().count() == 2);
    CHECK(oracle.cache_hits() == 1);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      CHECK(b.points[i].birth == 3 * a.points[i].birth);
      CHECK(b.points[i].death.has_value() == a.points[i].death.has_value());
    }
    CHECK(b.direction == dir({3, 6}));
    CHECK(compute_apd(K, dir({3, 6})).points == b.points);
  }
  SUBCASE("CountingOracle") {
    ComplexOracle oracle(K);
    CountingOracle counter(oracle);
    counter.query(dir({1, 1}));
    counter.query(dir({1, 1}));
    CHECK(counter.count() == 2);
    CHECK(oracle.log().count() == 2);
  }
  SUBCASE("wrong dimension") {
    ComplexOracle oracle(K);
    CHECK_THROWS_AS(oracle.query(dir({1, 1, 1})), InvalidInput);
  }
}

TEST_CASE("lift") {
  const auto K = build_complex(2, {vec({1, 2}), vec({0, 0}), vec({q(1, 2), q(1, 3)})}, {Simplex{0, 1, 2}});
  const auto L = lift(K);
  CHECK(L.ambient_dim() == 3);
  CHECK(L.point(0) == vec({1, 2, 5}));
  CHECK(L.point(1) == vec({0, 0, 0}));
  CHECK(L.point(2) == vec({q(1, 2), q(1, 3), q(13, 36)}));
  CHECK(L.count(2) == 1);
  CHECK(L.count(1) == 3);

  QueryLog log;
  const auto s = dir({1, 0, 1});
  CHECK(query_lifted(log, K, s).points == compute_apd(L, s).points);
  CHECK(query_lifted(log, K, s, 7).points.empty());
  CHECK(log.count() == 2);
}

TEST_CASE("reduction properties on random complexes") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t d = 2 + trial % 3;
    // Small integer coordinates and directions give many height ties.
    std::vector<Vector> pts;
    for (std::size_t i = 0; i < 7; ++i) pts.push_back(random_vector(rng, d, 2, 1));
    const auto base = random_complex(rng, d, 7, 6);
    const auto K = build_complex(d, pts, base.maximal_simplices());
    const FiltrationEngine engine(K);
    const auto betti = betti_numbers(K);

    for (int rep = 0; rep < 5; ++rep) {
      const auto s = random_direction(rng, d, 2);
      const auto dgm = compute_apd(K, s);
      // Every simplex is a birth, or the death of exactly one point.
      std::size_t events = 0;
      for (const auto& p : dgm.points) events += p.death ? 2 : 1;
      CHECK(events == K.size());

      // Engine, with and without clearing, matches the reference reduction.
      CHECK(engine.diagram(s, false).points == dgm.points);
      CHECK(engine.diagram(s, true).points == dgm.points);

      // Other compatible orders give the same multiset.
      for (int r = 0; r < 5; ++r) CHECK(compute_apd_in_order(K, s, random_compatible_order(K, s, rng)).points == dgm.points);

      // Each simplex is one birth or one death, counted per height.
      std::set<Rational> heights;
      for (const auto& p : K.points()) heights.insert(s.height(p));
      for (int k = 0; k <= K.kappa(); ++k)
        for (const auto& c : heights) CHECK(count_at(dgm, k, c) == simplices_at_height(K, s, k, c));

      for (int k = 0; k <= K.kappa(); ++k) CHECK(static_cast<long>(dgm.infinite_count(k)) == betti[k]);

      for (const auto& p : dgm.points) CHECK((!p.death || p.birth <= *p.death));

      // Positive scaling scales every height.
      const Rational lambda(7, 3);
      Vector scaled = s.coords();
      for (auto& x : scaled) x *= lambda;
      const auto dgm_scaled = compute_apd(K, Direction(scaled));
      REQUIRE(dgm_scaled.size() == dgm.size());
      for (std::size_t i = 0; i < dgm.size(); ++i) {
        CHECK(dgm_scaled.points[i].dim == dgm.points[i].dim);
        CHECK(dgm_scaled.points[i].birth == lambda * dgm.points[i].birth);
        CHECK(dgm_scaled.points[i].death.has_value() == dgm.points[i].death.has_value());
        if (dgm.points[i].death) CHECK(*dgm_scaled.points[i].death == lambda * *dgm.points[i].death);
      }
    }
  }
}

TEST_CASE("compute_apd_in_order rejects incompatible orders") {
  const auto K = full_triangle();
  const auto s = Direction::axis(2, 0);
  auto order = index_filtration(K, s);
  std::swap(order[1], order[2]);  // edge before its vertex
  CHECK_THROWS_AS(compute_apd_in_order(K, s, order), InvalidInput);
  order = index_filtration(K, s);
  order.pop_back();
  CHECK_THROWS_AS(compute_apd_in_order(K, s, order), InvalidInput);
}

TEST_CASE("BasisOracle answers in transformed coordinates") {
  std::mt19937_64 rng(3);
  const auto K = random_complex(rng, 3, 6, 5);
  const std::vector<Direction> basis{dir({2, 1, 0}), dir({1, -2, 0}), dir({0, 0, 1})};
  std::vector<Vector> moved;
  for (const auto& p : K.points()) moved.push_back(vec({basis[0].height(p), basis[1].height(p), basis[2].height(p)}));
  const auto KB = build_complex(3, moved, K.maximal_simplices());

  ComplexOracle inner(K);
  BasisOracle adapted(inner, basis);
  for (int r = 0; r < 10; ++r) {
    const auto s = random_direction(rng, 3, 3);
    CHECK(adapted.query(s).points == compute_apd(KB, s).points);
  }
  CHECK(inner.log().count() == 10);
}
