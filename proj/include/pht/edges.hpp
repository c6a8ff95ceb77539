#pragma once

// Edge recovery: a sweep in e1 order, and around each vertex a binary
// search over radial wedges of the vertices above it.

#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

#include "pht/complex.hpp"
#include "pht/geometry.hpp"
#include "pht/oracle.hpp"

namespace pht {

/// A wedge of candidates around `vertex`: the positions [first, first +
/// candidates.size()) of the radial order, all strictly above the vertex in
/// e1, and how many of them are joined to it.
struct EdgeInterval {
  VertexId vertex = 0;
  std::size_t first = 0;
  std::vector<VertexId> candidates;
  long edge_count = 0;
};

/// Hooks for tests that check the sweep against a known complex.
struct EdgeObserver {
  /// Called before each interval is handled, with the intervals still
  /// stacked (top last) and the up-edges found so far.
  std::function<void(const EdgeInterval& current, const std::vector<EdgeInterval>& stack,
                     const std::vector<VertexId>& found)>
      on_pop;
  std::function<void(const EdgeInterval& left, const EdgeInterval& right)> on_split;
};

/// Radial order of every other vertex about v and the slice [first, last)
/// of the entries above v in e1.
struct UpperFan {
  RadialOrder order;
  std::size_t first = 0;
  std::size_t last = 0;
};
UpperFan upper_fan(const std::vector<Vector>& points, VertexId v);

/// Splits an interval of two or more candidates after its lower middle.
/// `known` holds every neighbour of the vertex found so far: all neighbours
/// below it in e1 and the up-neighbours radially before the interval.
/// Two queries. Throws NegativeCount when the counts are inconsistent.
std::pair<EdgeInterval, EdgeInterval> split_wedge(const EdgeInterval& interval, const std::vector<VertexId>& known,
                                                  const UpperFan& fan, const std::vector<Vector>& points,
                                                  DiagramOracle& oracle);

/// Up-neighbours of v. `down_edges` is the diagram at -e1, shared across
/// the sweep; `known` are v's neighbours below it.
std::vector<VertexId> find_up_edges(VertexId v, const std::vector<VertexId>& known, const std::vector<Vector>& points,
                                    const AugmentedDiagram& down_edges, DiagramOracle& oracle,
                                    const EdgeObserver* observer = nullptr, std::size_t* splits = nullptr);

/// Every edge, for vertices sorted by strictly increasing e1-height.
std::vector<Simplex> find_edges(const std::vector<Vector>& points, DiagramOracle& oracle,
                                const EdgeObserver* observer = nullptr, std::size_t* splits = nullptr);

/// 1 + 2 sum_v (2 deg(v) + 1)(ceil(log2 n0) + 1).
std::size_t edge_query_bound(std::size_t n0, const std::vector<Simplex>& edges);

}  // namespace pht
