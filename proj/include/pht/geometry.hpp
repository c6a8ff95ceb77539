#pragma once

// Exact linear algebra over the rationals and the direction constructions
// used by reconstruction: orthogonal directions, tilts, radial orders and
// separating directions in the (e1, e2)-plane.
//
// Directions are never normalised. Only the order and equality of dot
// products matter, and both are invariant under positive scaling.

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "pht/rational.hpp"

namespace pht {

using Vector = std::vector<Rational>;

Rational dot(const Vector& a, const Vector& b);

/// A nonzero rational vector.
class Direction {
 public:
  /// Throws InvalidInput on the zero vector.
  explicit Direction(Vector coords);

  /// The i-th standard basis vector of R^dim (0-based), optionally negated.
  static Direction axis(std::size_t dim, std::size_t i, bool negative = false);

  std::size_t dim() const noexcept { return coords_.size(); }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  const Vector& coords() const noexcept { return coords_; }

  Rational height(const Vector& point) const { return dot(coords_, point); }
  std::vector<Rational> heights(std::span<const Vector> points) const;

  Direction operator-() const;

  /// Positive multiple with coprime integer coordinates. Two directions have
  /// the same primitive form iff one is a positive multiple of the other.
  Direction primitive() const;

  friend bool operator==(const Direction&, const Direction&) = default;
  friend auto operator<=>(const Direction& a, const Direction& b) { return a.coords_ <=> b.coords_; }

 private:
  Vector coords_;
};

/// Dimension of the affine hull of the points (-1 for an empty set).
int affine_rank(std::span<const Vector> points);
bool affinely_independent(std::span<const Vector> points);

/// Orthogonal (unnormalised) basis of the complement of the direction space
/// of aff(points), scanned from the standard basis in index order.
/// Throws DegeneratePosition if the points are affinely dependent.
std::vector<Direction> orthogonal_complement_basis(std::span<const Vector> points, std::size_t ambient_dim);

/// A direction with equal dot product on every input point: the first vector
/// of orthogonal_complement_basis. Throws DegeneratePosition if the points
/// are affinely dependent or span R^d.
Direction orthogonal_to_affine_hull(std::span<const Vector> points, std::size_t ambient_dim);

/// Given s orthogonal to aff(V) with V isolated in s-height among
/// all_points, returns s' orthogonal to aff(W) with s'.w < s'.x for every
/// w in W and x in V \ W. `W` holds indices into `V`.
Direction second_perpendicular_direction(std::span<const Vector> all_points, std::span<const Vector> V,
                                         std::span<const std::size_t> W, const Direction& s);

/// A direction orthogonal to aff(subset) at which no other point of
/// all_points shares the subset's height. `subset` holds indices into
/// all_points. Throws DegeneratePosition when no such direction arises,
/// which needs some other point on aff(subset).
Direction isolating_perpendicular_direction(std::span<const Vector> all_points, std::span<const std::size_t> subset);

/// Smallest t in (0, 1] at which two distinct segments (0,h)->(1,h'),
/// h in H, h' in H', meet; nullopt if none do.
std::optional<Rational> leftmost_crossing(std::span<const Rational> H, std::span<const Rational> H_prime);

/// epsilon = leftmost_crossing / 2, or 1/2 when there is no crossing.
Rational tilt_parameter(std::span<const Rational> H, std::span<const Rational> H_prime);

/// s_t = (1 - eps) s + eps s'. Preserves every strict s-order among the
/// points whose heights are H and breaks s-ties by s'.
/// Throws ParallelDirections if s and s' are parallel.
Direction tilt(std::span<const Rational> H, std::span<const Rational> H_prime, const Direction& s,
               const Direction& s_prime);

struct RadialEntry {
  std::size_t id;
  Rational x;  // offset along e1
  Rational y;  // offset along e2
};

/// Points around a center, projected to coordinates (1, 2) and sorted by
/// descending angle over (-pi, pi]: the upper half-plane left to right,
/// then the lower half-plane right to left.
struct RadialOrder {
  Vector center;
  std::vector<RadialEntry> entries;

  std::size_t size() const noexcept { return entries.size(); }
};

/// Throws DegeneratePosition if some projected offset is zero or two are
/// parallel (including antiparallel).
RadialOrder radial_order(const Vector& center, std::span<const std::pair<std::size_t, Vector>> others);
RadialOrder radial_order(const Vector& center, std::span<const Vector> others);

/// Direction in the (e1, e2)-plane under which no entry of `order` sits at
/// the center's height, the entries at positions [first, after_index] are
/// strictly below the center and those at (after_index, last) strictly above.
/// The slice must span an angle below pi.
Direction separating_direction(const RadialOrder& order, std::size_t first, std::size_t after_index,
                               std::size_t last);
Direction separating_direction(const RadialOrder& order, std::size_t after_index);

}  // namespace pht
