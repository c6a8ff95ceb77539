#include "pht/geometry.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <string>

#include "pht/errors.hpp"

namespace pht {

namespace {

bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& q) { return q == 0; });
}

Vector subtract(const Vector& a, const Vector& b) {
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

// x -= factor * y
void axpy_sub(Vector& x, const Rational& factor, const Vector& y) {
  for (std::size_t i = 0; i < x.size(); ++i) x[i] -= factor * y[i];
}

// Residue of v after removing its components along an orthogonal family.
Vector residue(Vector v, const std::vector<Vector>& ortho) {
  for (const auto& q : ortho) {
    const Rational c = dot(v, q) / dot(q, q);
    if (c != 0) axpy_sub(v, c, q);
  }
  return v;
}

// Unnormalised Gram-Schmidt on the difference vectors of the points.
std::vector<Vector> hull_basis(std::span<const Vector> points) {
  std::vector<Vector> ortho;
  for (std::size_t i = 1; i < points.size(); ++i) {
    Vector r = residue(subtract(points[i], points[0]), ortho);
    if (is_zero(r)) throw DegeneratePosition("points are affinely dependent");
    ortho.push_back(std::move(r));
  }
  return ortho;
}

// Solves the square system A x = b exactly; throws DegeneratePosition if A
// is singular.
Vector solve(std::vector<Vector> A, Vector b) {
  const std::size_t n = A.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && A[pivot][col] == 0) ++pivot;
    if (pivot == n) throw DegeneratePosition("singular Gram system");
    std::swap(A[pivot], A[col]);
    std::swap(b[pivot], b[col]);
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || A[row][col] == 0) continue;
      const Rational f = A[row][col] / A[col][col];
      axpy_sub(A[row], f, A[col]);
      b[row] -= f * b[col];
    }
  }
  Vector x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / A[i][i];
  return x;
}

Rational cross2(const Rational& ax, const Rational& ay, const Rational& bx, const Rational& by) {
  return ax * by - ay * bx;
}

bool upper_half(const RadialEntry& u) { return u.y > 0 || (u.y == 0 && u.x < 0); }

}  // namespace

Rational dot(const Vector& a, const Vector& b) {
  assert(a.size() == b.size());
  Rational sum = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0 && b[i] != 0) sum += a[i] * b[i];
  return sum;
}

Direction::Direction(Vector coords) : coords_(std::move(coords)) {
  if (coords_.empty() || is_zero(coords_)) throw InvalidInput("direction must be a nonzero vector");
}

Direction Direction::axis(std::size_t dim, std::size_t i, bool negative) {
  Vector v(dim, Rational(0));
  v.at(i) = negative ? -1 : 1;
  return Direction(std::move(v));
}

std::vector<Rational> Direction::heights(std::span<const Vector> points) const {
  std::vector<Rational> out;
  out.reserve(points.size());
  for (const auto& p : points) out.push_back(dot(coords_, p));
  return out;
}

Direction Direction::operator-() const {
  Vector v = coords_;
  for (auto& q : v) q = -q;
  return Direction(std::move(v));
}

Direction Direction::primitive() const {
  mpz_class lcm = 1;
  for (const auto& q : coords_) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den_mpz_t());
  std::vector<mpz_class> ints;
  ints.reserve(coords_.size());
  mpz_class g = 0;
  for (const auto& q : coords_) {
    mpz_class z = q.get_num() * (lcm / q.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.get_mpz_t());
    ints.push_back(std::move(z));
  }
  Vector v;
  v.reserve(ints.size());
  for (auto& z : ints) v.emplace_back(z / g);
  return Direction(std::move(v));
}

int affine_rank(std::span<const Vector> points) {
  if (points.empty()) return -1;
  std::vector<Vector> ortho;
  for (std::size_t i = 1; i < points.size(); ++i) {
    Vector r = residue(subtract(points[i], points[0]), ortho);
    if (!is_zero(r)) ortho.push_back(std::move(r));
  }
  return static_cast<int>(ortho.size());
}

bool affinely_independent(std::span<const Vector> points) {
  return affine_rank(points) == static_cast<int>(points.size()) - 1;
}

std::vector<Direction> orthogonal_complement_basis(std::span<const Vector> points, std::size_t ambient_dim) {
  std::vector<Vector> ortho = hull_basis(points);
  std::vector<Direction> complement;
  for (std::size_t j = 0; j < ambient_dim && ortho.size() < ambient_dim; ++j) {
    Vector e(ambient_dim, Rational(0));
    e[j] = 1;
    Vector r = residue(std::move(e), ortho);
    if (is_zero(r)) continue;
    ortho.push_back(r);
    complement.push_back(Direction(std::move(r)).primitive());
  }
  return complement;
}

Direction orthogonal_to_affine_hull(std::span<const Vector> points, std::size_t ambient_dim) {
  if (points.empty()) return Direction::axis(ambient_dim, 0);
  auto basis = orthogonal_complement_basis(points, ambient_dim);
  if (basis.empty()) throw DegeneratePosition("points span the ambient space");
  return basis.front();
}

Direction second_perpendicular_direction(std::span<const Vector> all_points, std::span<const Vector> V,
                                         std::span<const std::size_t> W, const Direction& s) {
  if (V.empty()) throw InvalidInput("second_perpendicular_direction: V is empty");
  const Rational c = s.height(V[0]);
  for (const auto& v : V)
    if (s.height(v) != c) throw PreconditionViolated("s is not orthogonal to aff(V)");
  for (const auto& u : all_points) {
    if (std::find(V.begin(), V.end(), u) != V.end()) continue;
    if (s.height(u) == c) throw PreconditionViolated("a point outside V shares V's height under s");
  }

  std::vector<bool> in_w(V.size(), false);
  for (std::size_t i : W) {
    if (i >= V.size() || in_w[i]) throw InvalidInput("W must be distinct indices into V");
    in_w[i] = true;
  }
  if (W.empty()) return Direction::axis(s.dim(), 0);
  if (W.size() == V.size()) return s;

  // Barycentric functional on aff(V): 0 on W, 1 on V \ W, realised by a
  // vector in the direction space of aff(V).
  const Vector& w0 = V[W[0]];
  std::vector<Vector> rows;
  Vector target;
  for (std::size_t i = 0; i < V.size(); ++i) {
    if (i == W[0]) continue;
    rows.push_back(subtract(V[i], w0));
    target.emplace_back(in_w[i] ? 0 : 1);
  }
  std::vector<Vector> gram(rows.size(), Vector(rows.size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows.size(); ++j) gram[i][j] = dot(rows[i], rows[j]);
  const Vector coeff = solve(std::move(gram), std::move(target));

  Vector out(s.dim(), Rational(0));
  for (std::size_t i = 0; i < rows.size(); ++i) axpy_sub(out, -coeff[i], rows[i]);
  return Direction(std::move(out)).primitive();
}

Direction isolating_perpendicular_direction(std::span<const Vector> all_points, std::span<const std::size_t> subset) {
  if (subset.empty()) throw InvalidInput("isolating_perpendicular_direction: empty subset");
  std::vector<Vector> pts;
  std::vector<bool> inside(all_points.size(), false);
  for (std::size_t i : subset) {
    pts.push_back(all_points[i]);
    inside[i] = true;
  }
  const std::size_t d = all_points[subset[0]].size();
  const auto basis = orthogonal_complement_basis(pts, d);
  if (basis.empty()) throw DegeneratePosition("subset spans the ambient space");

  auto has_tie = [&](const Direction& s) {
    const Rational c = s.height(pts[0]);
    for (std::size_t i = 0; i < all_points.size(); ++i)
      if (!inside[i] && s.height(all_points[i]) == c) return true;
    return false;
  };

  Direction s = basis[0];
  for (std::size_t j = 1; j < basis.size() && has_tie(s); ++j) {
    const auto H = s.heights(all_points);
    const auto H_prime = basis[j].heights(all_points);
    s = tilt(H, H_prime, s, basis[j]).primitive();
  }
  if (has_tie(s)) throw DegeneratePosition("a vertex lies in the affine hull of the subset");
  return s;
}

std::optional<Rational> leftmost_crossing(std::span<const Rational> H, std::span<const Rational> H_prime) {
  if (H.empty() || H_prime.empty()) return std::nullopt;
  // Two segments starting at distinct heights h_a < h_b meet at
  // t = g / (g + (h'_a - h'_b)) with g = h_b - h_a; the minimum pairs the
  // closest distinct start heights with the extreme end heights.
  std::vector<Rational> sorted(H.begin(), H.end());
  std::sort(sorted.begin(), sorted.end());
  std::optional<Rational> gap;
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    if (sorted[i] == sorted[i - 1]) continue;
    Rational g = sorted[i] - sorted[i - 1];
    if (!gap || g < *gap) gap = std::move(g);
  }
  if (!gap) return std::nullopt;
  const auto [lo, hi] = std::minmax_element(H_prime.begin(), H_prime.end());
  return Rational(*gap / (*gap + (*hi - *lo)));
}

Rational tilt_parameter(std::span<const Rational> H, std::span<const Rational> H_prime) {
  if (auto t = leftmost_crossing(H, H_prime)) return *t / 2;
  return Rational(1, 2);
}

Direction tilt(std::span<const Rational> H, std::span<const Rational> H_prime, const Direction& s,
               const Direction& s_prime) {
  if (s.dim() != s_prime.dim()) throw InvalidInput("tilt: dimension mismatch");
  if (H.size() != H_prime.size()) throw InvalidInput("tilt: height lists differ in length");
  bool independent = false;
  for (std::size_t i = 0; i < s.dim() && !independent; ++i)
    for (std::size_t j = i + 1; j < s.dim() && !independent; ++j)
      independent = s[i] * s_prime[j] != s[j] * s_prime[i];
  if (!independent) throw ParallelDirections("tilt: directions are parallel");

  const Rational eps = tilt_parameter(H, H_prime);
  const Rational keep = 1 - eps;
  Vector out(s.dim());
  for (std::size_t i = 0; i < s.dim(); ++i) out[i] = keep * s[i] + eps * s_prime[i];
  return Direction(std::move(out));
}

RadialOrder radial_order(const Vector& center, std::span<const std::pair<std::size_t, Vector>> others) {
  if (center.size() < 2) throw InvalidInput("radial_order needs at least two coordinates");
  RadialOrder order{center, {}};
  order.entries.reserve(others.size());
  for (const auto& [id, p] : others) order.entries.push_back({id, p[0] - center[0], p[1] - center[1]});

  for (std::size_t i = 0; i < order.size(); ++i) {
    const auto& a = order.entries[i];
    if (a.x == 0 && a.y == 0)
      throw DegeneratePosition("vertex " + std::to_string(a.id) + " projects onto the center");
    for (std::size_t j = i + 1; j < order.size(); ++j) {
      const auto& b = order.entries[j];
      if (cross2(a.x, a.y, b.x, b.y) == 0)
        throw DegeneratePosition("vertices " + std::to_string(a.id) + " and " + std::to_string(b.id) +
                                 " are collinear with the center in projection");
    }
  }

  std::sort(order.entries.begin(), order.entries.end(), [](const RadialEntry& a, const RadialEntry& b) {
    const bool ua = upper_half(a);
    if (ua != upper_half(b)) return ua;
    return cross2(a.x, a.y, b.x, b.y) < 0;
  });
  return order;
}

RadialOrder radial_order(const Vector& center, std::span<const Vector> others) {
  std::vector<std::pair<std::size_t, Vector>> tagged;
  tagged.reserve(others.size());
  for (std::size_t i = 0; i < others.size(); ++i) tagged.emplace_back(i, others[i]);
  return radial_order(center, tagged);
}

Direction separating_direction(const RadialOrder& order, std::size_t first, std::size_t after_index,
                               std::size_t last) {
  if (!(first <= after_index && after_index < last && last <= order.size()))
    throw InvalidInput("separating_direction: bad slice");
  const RadialEntry& a = order.entries[after_index];

  // Clockwise angle from a, coarsely: 0 for (0, pi), 1 for pi, 2 for (pi, 2pi).
  auto sector = [&](const Rational& x, const Rational& y) {
    const Rational c = cross2(a.x, a.y, x, y);
    if (c < 0) return 0;
    if (c > 0) return 2;
    return 1;
  };

  // Nearest signed offset (u or -u) clockwise of a.
  std::optional<std::pair<Rational, Rational>> next;
  int next_sector = 3;
  auto consider = [&](const Rational& x, const Rational& y) {
    const int sec = sector(x, y);
    if (sec == 1 && a.x * x + a.y * y > 0) return;  // a itself
    if (!next || sec < next_sector ||
        (sec == next_sector && sec != 1 && cross2(x, y, next->first, next->second) < 0)) {
      next.emplace(x, y);
      next_sector = sec;
    }
  };
  for (const auto& u : order.entries) {
    consider(u.x, u.y);
    consider(-u.x, -u.y);
  }
  assert(next);

  // Line through the center strictly inside the gap (a, next).
  Rational rx, ry;
  if (next_sector == 0) {
    rx = a.x + next->first;
    ry = a.y + next->second;
  } else if (next_sector == 1) {
    rx = a.y;
    ry = -a.x;
  } else {
    rx = -(a.x + next->first);
    ry = -(a.y + next->second);
  }

  Vector coords(order.center.size(), Rational(0));
  coords[0] = ry;
  coords[1] = -rx;
  if (coords[0] * a.x + coords[1] * a.y > 0) {
    coords[0] = -coords[0];
    coords[1] = -coords[1];
  }

  auto offset_height = [&](const RadialEntry& u) -> Rational { return coords[0] * u.x + coords[1] * u.y; };
  for (const auto& u : order.entries)
    if (offset_height(u) == 0) throw DegeneratePosition("separating direction meets a vertex");
  for (std::size_t i = first; i < last; ++i) {
    const bool below = offset_height(order.entries[i]) < 0;
    if (below != (i <= after_index)) throw InvalidInput("separating_direction: slice spans at least pi");
  }
  return Direction(std::move(coords)).primitive();
}

Direction separating_direction(const RadialOrder& order, std::size_t after_index) {
  return separating_direction(order, 0, after_index, order.size());
}

}  // namespace pht
