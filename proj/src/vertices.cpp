#include "pht/vertices.hpp"

#include <algorithm>

#include "pht/errors.hpp"

namespace pht {

std::vector<Rational> vertex_heights(const AugmentedDiagram& dgm) {
  std::vector<Rational> out;
  for (const auto& p : dgm.points)
    if (p.dim == 0) out.push_back(p.birth);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Rational> find_coordinate(DiagramOracle& oracle, std::size_t i, const std::vector<Rational>& V1) {
  const std::size_t d = oracle.ambient_dim();
  if (i == 0 || i >= d) throw InvalidInput("find_coordinate: axis out of range");
  const Direction e1 = Direction::axis(d, 0);
  const Direction ei = Direction::axis(d, i);

  const auto Hi = vertex_heights(oracle.query(ei));
  if (Hi.size() != V1.size()) throw OracleInconsistency("vertex count differs between e1 and e_i diagrams");
  const Direction st = tilt(V1, Hi, e1, ei);
  const auto Hs = vertex_heights(oracle.query(st));
  if (Hs.size() != V1.size()) throw OracleInconsistency("vertex count differs between e1 and tilted diagrams");

  // s_t = w e1 + eps e_i keeps the e1 order, so sorted births line up.
  const Rational& w = st[0];
  const Rational& eps = st[i];
  std::vector<Rational> x(V1.size());
  for (std::size_t j = 0; j < V1.size(); ++j) x[j] = (Hs[j] - w * V1[j]) / eps;
  return x;
}

std::vector<Vector> find_vertices(DiagramOracle& oracle) {
  return find_vertices(oracle, oracle.query(Direction::axis(oracle.ambient_dim(), 0)));
}

std::vector<Vector> find_vertices(DiagramOracle& oracle, const AugmentedDiagram& at_e1) {
  const std::size_t d = oracle.ambient_dim();
  const auto V1 = vertex_heights(at_e1);
  if (std::adjacent_find(V1.begin(), V1.end()) != V1.end())
    throw GeneralPositionViolated("two vertices share an e1-height");

  std::vector<Vector> points(V1.size(), Vector(d));
  for (std::size_t j = 0; j < V1.size(); ++j) points[j][0] = V1[j];
  for (std::size_t i = 1; i < d; ++i) {
    const auto xi = find_coordinate(oracle, i, V1);
    for (std::size_t j = 0; j < V1.size(); ++j) points[j][i] = xi[j];
  }
  return points;
}

std::vector<Direction> create_unique_height_basis(DiagramOracle& oracle) {
  if (oracle.ambient_dim() < 2) throw InvalidInput("a unique-height basis needs at least two dimensions");
  return create_unique_height_basis(oracle, oracle.query(Direction::axis(oracle.ambient_dim(), 0)));
}

std::vector<Direction> create_unique_height_basis(DiagramOracle& oracle, const AugmentedDiagram& at_e1) {
  const std::size_t d = oracle.ambient_dim();
  if (d < 2) throw InvalidInput("a unique-height basis needs at least two dimensions");
  const Direction e1 = Direction::axis(d, 0);
  const Direction e2 = Direction::axis(d, 1);
  const auto H1 = vertex_heights(at_e1);
  const auto H2 = vertex_heights(oracle.query(e2));
  if (H1.size() != H2.size()) throw OracleInconsistency("vertex count differs between e1 and e2 diagrams");

  std::vector<Direction> basis;
  const Direction b1 = tilt(H1, H2, e1, e2).primitive();
  Vector b2(d, Rational(0));
  b2[0] = b1[1];
  b2[1] = -b1[0];
  basis.push_back(b1);
  basis.emplace_back(std::move(b2));
  for (std::size_t i = 2; i < d; ++i) basis.push_back(Direction::axis(d, i));
  return basis;
}

Vector from_basis(const std::vector<Direction>& basis, const Vector& y) {
  const std::size_t n = basis.size();
  if (y.size() != n) throw InvalidInput("from_basis: dimension mismatch");
  std::vector<Vector> A;
  for (const auto& b : basis) A.push_back(b.coords());
  Vector rhs = y;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && A[p][c] == 0) ++p;
    if (p == n) throw DegeneratePosition("from_basis: basis is singular");
    std::swap(A[p], A[c]);
    std::swap(rhs[p], rhs[c]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || A[r][c] == 0) continue;
      const Rational f = A[r][c] / A[c][c];
      for (std::size_t k = c; k < n; ++k) A[r][k] -= f * A[c][k];
      rhs[r] -= f * rhs[c];
    }
  }
  Vector x(n);
  for (std::size_t c = 0; c < n; ++c) x[c] = rhs[c] / A[c][c];
  return x;
}

}  // namespace pht
