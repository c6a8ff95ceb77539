#pragma once

// Vertex recovery from 2d-1 diagrams: every coordinate is read off the
// 0-births of an axis and of a tilt of e1 toward that axis.

#include <cstddef>
#include <vector>

#include "pht/geometry.hpp"
#include "pht/oracle.hpp"

namespace pht {

/// Sorted 0-births of a diagram: the multiset of vertex heights.
std::vector<Rational> vertex_heights(const AugmentedDiagram& dgm);

/// The i-th coordinates (0-based axis i >= 1) of the vertices, listed in the
/// order of V1, the strictly increasing e1-heights. Two queries: e_i and the
/// tilt of e1 toward e_i. Throws OracleInconsistency if the diagrams
/// disagree on the vertex count.
std::vector<Rational> find_coordinate(DiagramOracle& oracle, std::size_t i, const std::vector<Rational>& V1);

/// All vertices, sorted by e1-height, from exactly 2d-1 queries.
/// Throws GeneralPositionViolated if two vertices share an e1-height.
std::vector<Vector> find_vertices(DiagramOracle& oracle);
/// Same, reusing a diagram already taken at e1 (2d-2 further queries).
std::vector<Vector> find_vertices(DiagramOracle& oracle, const AugmentedDiagram& at_e1);

/// Orthogonal basis b1, b2, e3, ..., ed in which every vertex has a distinct
/// b1-height: b1 tilts e1 toward e2 and b2 is b1 turned by -90 degrees in
/// the first two coordinates. Two queries.
std::vector<Direction> create_unique_height_basis(DiagramOracle& oracle);
/// Same, reusing a diagram already taken at e1 (one further query).
std::vector<Direction> create_unique_height_basis(DiagramOracle& oracle, const AugmentedDiagram& at_e1);

/// x with B x = y, where the rows of B are `basis`.
Vector from_basis(const std::vector<Direction>& basis, const Vector& y);

}  // namespace pht
