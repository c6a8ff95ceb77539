#pragma once

// Random general-position complexes and round-trip checks against the
// reconstruction drivers.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pht/complex.hpp"
#include "pht/higher.hpp"

namespace pht {

struct GeneratorConfig {
  std::size_t ambient_dim = 3;
  std::size_t vertex_count = 6;
  int max_dim = 2;
  /// Acceptance probability per dimension, density[k-1] for k-simplices;
  /// the last entry repeats for higher dimensions.
  std::vector<Rational> density{Rational(1, 2)};
  std::uint64_t seed = 0;
  long coordinate_denominator_bound = 64;
  long coordinate_range = 8;  // coordinates lie in [-range, range]
  bool codim_zero = false;    // allows max_dim == ambient_dim
  std::size_t max_rounds = 1000;

  /// Throws InvalidInput.
  void validate() const;
  Rational density_at(int k) const;
};

/// Points in general position for reconstruction: distinct first
/// coordinates, no three collinear in the first two coordinates, every
/// min(n0, d+1) of them affinely independent, and in codim-zero mode the
/// same for min(n0, d+2) lifted points.
bool in_general_position(const std::vector<Vector>& points, bool codim_zero);

/// Deterministic for a fixed config. Throws GenerationFailure when no
/// general-position vertex set turns up within max_rounds samples.
SimplicialComplex generate_complex(const GeneratorConfig& config);

struct VerifyOptions {
  bool codim_zero = false;
  bool strict = false;
  int threads = 1;
};

struct VerificationReport {
  bool exact_match = false;
  std::optional<std::string> error;  // set when reconstruction raised
  ReconstructionStats stats;

  std::size_t expected_vertex_queries = 0;
  std::size_t edge_query_limit = 0;
  bool vertex_bound_ok = false;
  bool edge_bound_ok = false;
  bool predicate_bound_ok = false;

  /// Simplices (in ground-truth ids) present on one side only; recovered
  /// vertices with no matching ground-truth point are listed by their
  /// recovered coordinates.
  std::vector<Simplex> missing;
  std::vector<Simplex> extra;
  std::vector<Vector> unmatched_vertices;

  bool passed() const noexcept;
};

/// Runs the driver against an oracle over `truth`, compares simplex sets
/// through the vertex coordinates and audits the query counts. Errors from
/// the driver are reported, not thrown.
VerificationReport verify_roundtrip(const SimplicialComplex& truth, const VerifyOptions& options = {});
VerificationReport verify_roundtrip(const GeneratorConfig& config, const VerifyOptions& options = {});

/// Config of trial `index` in a seeded batch: d in {3, 4, 5} (2 or 3 in
/// codim-zero mode), n0 in 4..10, max_dim up to 3.
GeneratorConfig trial_config(std::uint64_t seed, std::size_t index, bool codim_zero);

/// 2(2^k - 1) for a predicate on a (k-1)-simplex.
std::size_t predicate_queries(int k);

}  // namespace pht
