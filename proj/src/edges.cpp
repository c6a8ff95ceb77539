#include "pht/edges.hpp"

#include <algorithm>
#include <bit>

#include "pht/errors.hpp"
#include "pht/higher.hpp"

namespace pht {

UpperFan upper_fan(const std::vector<Vector>& points, VertexId v) {
  std::vector<std::pair<std::size_t, Vector>> others;
  for (VertexId u = 0; u < points.size(); ++u)
    if (u != v) others.emplace_back(u, points[u]);
  UpperFan fan{radial_order(points[v], others), 0, 0};
  fan.first = fan.last = fan.order.size();
  for (std::size_t i = 0; i < fan.order.size(); ++i)
    if (fan.order.entries[i].x > 0) {
      if (fan.first == fan.order.size()) fan.first = i;
      fan.last = i + 1;
    }
  if (fan.first == fan.order.size()) fan.last = fan.first;
  return fan;
}

namespace {

long vertex_indegree(const std::vector<Vector>& points, VertexId v, const Direction& s, DiagramOracle& oracle) {
  IndegreeMemo memo;
  return compute_indegree(points, Simplex{v}, s, 1, memo, oracle);
}

EdgeInterval sub_interval(const EdgeInterval& parent, std::size_t offset, std::size_t count, long edge_count) {
  EdgeInterval out;
  out.vertex = parent.vertex;
  out.first = parent.first + offset;
  out.candidates.assign(parent.candidates.begin() + offset, parent.candidates.begin() + offset + count);
  out.edge_count = edge_count;
  return out;
}

}  // namespace

std::pair<EdgeInterval, EdgeInterval> split_wedge(const EdgeInterval& interval, const std::vector<VertexId>& known,
                                                  const UpperFan& fan, const std::vector<Vector>& points,
                                                  DiagramOracle& oracle) {
  const std::size_t k = interval.candidates.size();
  if (k < 2 || interval.edge_count < 1) throw InvalidInput("split_wedge needs two candidates and a positive count");
  const VertexId v = interval.vertex;
  const std::size_t half = k / 2;
  const Direction s = separating_direction(fan.order, fan.first, interval.first + half - 1, fan.last);

  const Rational hv = s.height(points[v]);
  long known_below = 0;
  for (VertexId u : known)
    if (s.height(points[u]) < hv) ++known_below;
  const long known_above = static_cast<long>(known.size()) - known_below;

  const long left_count = vertex_indegree(points, v, s, oracle) - known_below;
  const long right_count = interval.edge_count - left_count;
  const long companion = vertex_indegree(points, v, -s, oracle) - known_above;
  if (left_count < 0 || right_count < 0)
    throw NegativeCount("edge interval of vertex " + std::to_string(v) + " split into a negative count");
  if (left_count > static_cast<long>(half) || right_count > static_cast<long>(k - half) || companion < right_count)
    throw OracleInconsistency("edge counts around vertex " + std::to_string(v) + " are inconsistent");

  return {sub_interval(interval, 0, half, left_count), sub_interval(interval, half, k - half, right_count)};
}

std::vector<VertexId> find_up_edges(VertexId v, const std::vector<VertexId>& known, const std::vector<Vector>& points,
                                    const AugmentedDiagram& down_edges, DiagramOracle& oracle,
                                    const EdgeObserver* observer, std::size_t* splits) {
  // Under -e1 the edges whose height is v's are exactly those going up.
  const Rational c = -points[v][0];
  if (down_edges.births_at(0, c) != 1)
    throw GeneralPositionViolated("vertex " + std::to_string(v) + " does not have a unique e1-height");
  const long indeg = static_cast<long>(count_at(down_edges, 1, c));
  if (indeg == 0) return {};

  const UpperFan fan = upper_fan(points, v);
  if (indeg > static_cast<long>(fan.last - fan.first))
    throw OracleInconsistency("vertex " + std::to_string(v) + " has more up-edges than vertices above it");

  EdgeInterval root;
  root.vertex = v;
  root.first = fan.first;
  for (std::size_t i = fan.first; i < fan.last; ++i) root.candidates.push_back(fan.order.entries[i].id);
  root.edge_count = indeg;

  std::vector<VertexId> found;
  std::vector<VertexId> neighbours = known;
  std::vector<EdgeInterval> stack{std::move(root)};
  while (!stack.empty()) {
    EdgeInterval current = std::move(stack.back());
    stack.pop_back();
    if (observer && observer->on_pop) observer->on_pop(current, stack, found);
    if (current.edge_count == 0) continue;
    if (current.candidates.size() == 1) {
      found.push_back(current.candidates[0]);
      neighbours.push_back(current.candidates[0]);
      continue;
    }
    auto [left, right] = split_wedge(current, neighbours, fan, points, oracle);
    if (splits) ++*splits;
    if (observer && observer->on_split) observer->on_split(left, right);
    stack.push_back(std::move(right));
    stack.push_back(std::move(left));
  }
  return found;
}

std::vector<Simplex> find_edges(const std::vector<Vector>& points, DiagramOracle& oracle, const EdgeObserver* observer,
                                std::size_t* splits) {
  const std::size_t n0 = points.size();
  for (std::size_t i = 1; i < n0; ++i)
    if (!(points[i - 1][0] < points[i][0]))
      throw GeneralPositionViolated("vertices must have strictly increasing e1-heights");
  const auto down_edges = oracle.query(Direction::axis(oracle.ambient_dim(), 0, true));

  std::vector<std::vector<VertexId>> below(n0);
  std::vector<Simplex> edges;
  for (VertexId v = 0; v < n0; ++v)
    for (VertexId u : find_up_edges(v, below[v], points, down_edges, oracle, observer, splits)) {
      edges.push_back(Simplex{v, u});
      below[u].push_back(v);
    }
  std::sort(edges.begin(), edges.end());
  return edges;
}

std::size_t edge_query_bound(std::size_t n0, const std::vector<Simplex>& edges) {
  std::vector<std::size_t> deg(n0, 0);
  for (const auto& e : edges)
    for (VertexId v : e.vertices()) ++deg.at(v);
  const std::size_t log_n = n0 <= 1 ? 0 : std::bit_width(n0 - 1);  // ceil(log2 n0)
  std::size_t sum = 0;
  for (std::size_t v = 0; v < n0; ++v) sum += (2 * deg[v] + 1) * (log_n + 1);
  return 1 + 2 * sum;
}

}  // namespace pht
