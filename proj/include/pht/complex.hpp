#pragma once

// Embedded simplicial complexes with dense integer vertex ids and the
// line-oriented text format used by the CLI.

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "pht/geometry.hpp"

namespace pht {

using VertexId = std::size_t;

/// Sorted tuple of distinct vertex ids.
class Simplex {
 public:
  Simplex() = default;
  /// Sorts the ids. Throws InvalidInput if empty or if an id repeats.
  explicit Simplex(std::vector<VertexId> ids);
  Simplex(std::initializer_list<VertexId> ids) : Simplex(std::vector<VertexId>(ids)) {}

  int dim() const noexcept { return static_cast<int>(ids_.size()) - 1; }
  std::size_t size() const noexcept { return ids_.size(); }
  const std::vector<VertexId>& vertices() const noexcept { return ids_; }
  VertexId operator[](std::size_t i) const { return ids_[i]; }
  bool contains(VertexId v) const;

  /// The simplex with v added (v must not be a vertex).
  Simplex with(VertexId v) const;
  /// Codimension-one faces in lexicographic order. Empty for a vertex.
  std::vector<Simplex> facets() const;
  /// Every nonempty proper face, by dimension then lexicographically.
  std::vector<Simplex> proper_faces() const;

  friend bool operator==(const Simplex&, const Simplex&) = default;
  friend auto operator<=>(const Simplex&, const Simplex&) = default;

 private:
  std::vector<VertexId> ids_;
};

std::string to_string(const Simplex& s);

class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  std::size_t ambient_dim() const noexcept { return ambient_dim_; }
  std::size_t vertex_count() const noexcept { return points_.size(); }
  const Vector& point(VertexId v) const { return points_.at(v); }
  const std::vector<Vector>& points() const noexcept { return points_; }
  std::vector<Vector> points_of(const Simplex& s) const;

  /// Largest dimension with a simplex; -1 for the empty complex.
  int kappa() const noexcept { return static_cast<int>(by_dim_.size()) - 1; }
  /// K_k in lexicographic order (empty outside 0..kappa).
  const std::vector<Simplex>& simplices(int k) const;
  std::size_t count(int k) const { return simplices(k).size(); }
  std::size_t size() const noexcept;
  bool contains(const Simplex& s) const;

  /// Maximal simplices of dimension >= 1, by dimension then lexicographically.
  std::vector<Simplex> maximal_simplices() const;
  long euler_characteristic() const;

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

 private:
  friend SimplicialComplex build_complex(std::size_t, std::vector<Vector>, const std::vector<Simplex>&);

  std::size_t ambient_dim_ = 0;
  std::vector<Vector> points_;
  std::vector<std::vector<Simplex>> by_dim_;
};

/// Downward closure of `simplices` over vertices 0..points.size()-1. Every
/// vertex is a 0-simplex. Throws InvalidInput on unknown ids, repeated ids,
/// a simplex of dimension above ambient_dim, or a point of the wrong length.
SimplicialComplex build_complex(std::size_t ambient_dim, std::vector<Vector> points,
                                const std::vector<Simplex>& simplices);

struct GeneralPositionViolation {
  enum class Kind { SharedE1Height, ProjectedCollinear };
  Kind kind;
  std::vector<VertexId> witness;
};

struct GeneralPositionReport {
  bool unique_e1_heights = true;
  bool no_three_projected_collinear = true;
  std::vector<GeneralPositionViolation> violations;

  bool ok() const noexcept { return violations.empty(); }
};

/// Exact checks of unique first coordinates and of non-collinearity of every
/// vertex triple projected to coordinates (1, 2). Affine independence is
/// checked where hulls are computed, not here.
GeneralPositionReport validate_general_position(const SimplicialComplex& K);

/// Text format:
///   dim <d>
///   vertices <n0>
///   <id> <x1> ... <xd>      (n0 lines, ids a permutation of 0..n0-1)
///   simplices <m>
///   <id> <id> ...           (m lines; closure applied)
/// '#' starts a comment; blank lines are skipped. Throws ParseError.
SimplicialComplex parse_complex(std::string_view text);
/// Writes vertices in id order and the maximal simplices of dimension >= 1.
std::string serialize_complex(const SimplicialComplex& K);

SimplicialComplex read_complex_file(const std::string& path);

}  // namespace pht
