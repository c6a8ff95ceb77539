#include "pht/oracle.hpp"

#include <algorithm>
#include <numeric>

#include "pht/errors.hpp"

namespace pht {

bool operator<(const DiagramPoint& a, const DiagramPoint& b) {
  if (a.dim != b.dim) return a.dim < b.dim;
  if (a.birth != b.birth) return a.birth < b.birth;
  if (a.death.has_value() != b.death.has_value()) return a.death.has_value();
  return a.death && *a.death < *b.death;
}

AugmentedDiagram AugmentedDiagram::restricted(int k) const {
  AugmentedDiagram out{{}, direction};
  for (const auto& p : points)
    if (p.dim == k) out.points.push_back(p);
  return out;
}

std::size_t AugmentedDiagram::births_at(int k, const Rational& c) const {
  return std::count_if(points.begin(), points.end(), [&](const DiagramPoint& p) { return p.dim == k && p.birth == c; });
}

std::size_t AugmentedDiagram::deaths_at(int k, const Rational& c) const {
  return std::count_if(points.begin(), points.end(),
                       [&](const DiagramPoint& p) { return p.dim == k && p.death && *p.death == c; });
}

std::size_t AugmentedDiagram::infinite_count(int k) const {
  return std::count_if(points.begin(), points.end(), [&](const DiagramPoint& p) { return p.dim == k && p.infinite(); });
}

std::size_t count_at(const AugmentedDiagram& dgm, int k, const Rational& c) {
  return dgm.births_at(k, c) + (k > 0 ? dgm.deaths_at(k - 1, c) : 0);
}

std::size_t count_at(const AugmentedDiagram& dgm_k, const AugmentedDiagram& dgm_km1, int k, const Rational& c) {
  return dgm_k.births_at(k, c) + (k > 0 ? dgm_km1.deaths_at(k - 1, c) : 0);
}

namespace {

Rational simplex_height(const std::vector<Rational>& vh, const Simplex& s) {
  Rational h = vh[s[0]];
  for (VertexId v : s.vertices())
    if (vh[v] > h) h = vh[v];
  return h;
}

// Symmetric difference of two descending-sorted index lists.
void add_column(std::vector<std::size_t>& into, const std::vector<std::size_t>& other, std::vector<std::size_t>& scratch) {
  scratch.clear();
  auto a = into.cbegin();
  auto b = other.begin();
  while (a != into.cend() && b != other.end()) {
    if (*a > *b) scratch.push_back(*a++);
    else if (*b > *a) scratch.push_back(*b++);
    else ++a, ++b;
  }
  scratch.insert(scratch.end(), a, into.cend());
  scratch.insert(scratch.end(), b, other.end());
  into.swap(scratch);
}

constexpr std::size_t kUnpaired = static_cast<std::size_t>(-1);

// Persistence pairing of a boundary matrix over Z/2. Columns are in
// filtration order and hold the filtration positions of their facets,
// sorted descending. Returns partner[i] (kUnpaired for essential classes).
std::vector<std::size_t> reduce(std::vector<std::vector<std::size_t>> columns, const std::vector<int>& dims,
                                bool clearing) {
  const std::size_t m = columns.size();
  std::vector<std::size_t> partner(m, kUnpaired);
  std::vector<std::size_t> pivot_owner(m, kUnpaired);
  std::vector<std::size_t> scratch;

  auto reduce_column = [&](std::size_t j) {
    auto& col = columns[j];
    while (!col.empty()) {
      const std::size_t owner = pivot_owner[col.front()];
      if (owner == kUnpaired) break;
      add_column(col, columns[owner], scratch);
    }
    if (!col.empty()) {
      pivot_owner[col.front()] = j;
      partner[col.front()] = j;
      partner[j] = col.front();
    }
  };

  if (!clearing) {
    for (std::size_t j = 0; j < m; ++j) reduce_column(j);
    return partner;
  }
  // Highest dimension first: a positive simplex found as a pivot needs no
  // reduction of its own column.
  const int top = dims.empty() ? -1 : *std::max_element(dims.begin(), dims.end());
  std::vector<bool> cleared(m, false);
  for (int k = top; k >= 1; --k)
    for (std::size_t j = 0; j < m; ++j) {
      if (dims[j] != k || cleared[j]) continue;
      reduce_column(j);
      if (!columns[j].empty()) {
        cleared[columns[j].front()] = true;
        columns[columns[j].front()].clear();
      }
    }
  return partner;
}

AugmentedDiagram assemble(const std::vector<std::size_t>& partner, const std::vector<int>& dims,
                          const std::vector<Rational>& heights, const Direction& s) {
  AugmentedDiagram out{{}, s};
  for (std::size_t i = 0; i < partner.size(); ++i) {
    if (partner[i] == kUnpaired)
      out.points.push_back({dims[i], heights[i], std::nullopt});
    else if (partner[i] > i)
      out.points.push_back({dims[i], heights[i], heights[partner[i]]});
  }
  std::sort(out.points.begin(), out.points.end());
  return out;
}

void check_direction(const SimplicialComplex& K, const Direction& s) {
  if (s.dim() != K.ambient_dim())
    throw InvalidInput("direction has " + std::to_string(s.dim()) + " coordinates, complex lives in R^" +
                       std::to_string(K.ambient_dim()));
}

}  // namespace

std::map<Simplex, Rational> lower_star_heights(const SimplicialComplex& K, const Direction& s) {
  check_direction(K, s);
  const auto vh = s.heights(K.points());
  std::map<Simplex, Rational> out;
  for (int k = 0; k <= K.kappa(); ++k)
    for (const auto& sigma : K.simplices(k)) out.emplace(sigma, simplex_height(vh, sigma));
  return out;
}

std::vector<Simplex> index_filtration(const SimplicialComplex& K, const Direction& s) {
  const auto h = lower_star_heights(K, s);
  std::vector<Simplex> order;
  order.reserve(h.size());
  for (const auto& [sigma, height] : h) order.push_back(sigma);
  std::stable_sort(order.begin(), order.end(), [&](const Simplex& a, const Simplex& b) {
    const auto& ha = h.at(a);
    const auto& hb = h.at(b);
    if (ha != hb) return ha < hb;
    if (a.dim() != b.dim()) return a.dim() < b.dim();
    return a < b;
  });
  return order;
}

AugmentedDiagram compute_apd_in_order(const SimplicialComplex& K, const Direction& s,
                                      const std::vector<Simplex>& order) {
  const auto h = lower_star_heights(K, s);
  if (order.size() != h.size()) throw InvalidInput("order must list every simplex exactly once");
  std::map<Simplex, std::size_t> position;
  for (std::size_t i = 0; i < order.size(); ++i)
    if (!position.emplace(order[i], i).second || !h.contains(order[i]))
      throw InvalidInput("order must list every simplex exactly once");

  std::vector<std::vector<std::size_t>> columns(order.size());
  std::vector<int> dims(order.size());
  std::vector<Rational> heights(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    dims[i] = order[i].dim();
    heights[i] = h.at(order[i]);
    if (i > 0 && heights[i] < heights[i - 1]) throw InvalidInput("order is not sorted by lower-star height");
    for (const auto& f : order[i].facets()) {
      const std::size_t p = position.at(f);
      if (p > i) throw InvalidInput("order lists " + to_string(order[i]) + " before its face " + to_string(f));
      columns[i].push_back(p);
    }
    std::sort(columns[i].rbegin(), columns[i].rend());
  }
  return assemble(reduce(std::move(columns), dims, false), dims, heights, s);
}

AugmentedDiagram compute_apd(const SimplicialComplex& K, const Direction& s) {
  return compute_apd_in_order(K, s, index_filtration(K, s));
}

FiltrationEngine::FiltrationEngine(const SimplicialComplex& K) : K_(&K) {
  std::map<Simplex, std::size_t> flat;
  for (int k = 0; k <= K.kappa(); ++k)
    for (const auto& sigma : K.simplices(k)) {
      flat.emplace(sigma, dims_.size());
      dims_.push_back(k);
      vertices_.push_back(sigma.vertices());
    }
  facets_.resize(dims_.size());
  for (const auto& [sigma, idx] : flat)
    for (const auto& f : sigma.facets()) facets_[idx].push_back(flat.at(f));
}

AugmentedDiagram FiltrationEngine::diagram(const Direction& s, bool clearing) const {
  check_direction(*K_, s);
  const std::size_t n0 = K_->vertex_count();
  const std::size_t m = dims_.size();
  const auto vh = s.heights(K_->points());

  // Dense height ranks let the sort compare integers.
  std::vector<std::size_t> by_height(n0);
  std::iota(by_height.begin(), by_height.end(), 0);
  std::sort(by_height.begin(), by_height.end(), [&](std::size_t a, std::size_t b) { return vh[a] < vh[b]; });
  std::vector<std::size_t> rank(n0);
  for (std::size_t i = 0, r = 0; i < n0; ++i) {
    if (i > 0 && vh[by_height[i]] != vh[by_height[i - 1]]) ++r;
    rank[by_height[i]] = r;
  }

  // Flat indices already follow (dimension, lex); rank ties fall back to them.
  std::vector<std::size_t> top(m);
  for (std::size_t i = 0; i < m; ++i) {
    std::size_t best = vertices_[i][0];
    for (std::size_t v : vertices_[i])
      if (rank[v] > rank[best]) best = v;
    top[i] = best;
  }
  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const std::size_t ra = rank[top[a]], rb = rank[top[b]];
    return ra != rb ? ra < rb : a < b;
  });
  std::vector<std::size_t> position(m);
  for (std::size_t i = 0; i < m; ++i) position[order[i]] = i;

  std::vector<std::vector<std::size_t>> columns(m);
  std::vector<int> dims(m);
  std::vector<Rational> heights(m);
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t idx = order[i];
    dims[i] = dims_[idx];
    heights[i] = vh[top[idx]];
    auto& col = columns[i];
    for (std::size_t f : facets_[idx]) col.push_back(position[f]);
    std::sort(col.rbegin(), col.rend());
  }
  return assemble(reduce(std::move(columns), dims, clearing), dims, heights, s);
}

std::vector<Vector> lift_points(const std::vector<Vector>& points) {
  std::vector<Vector> out;
  out.reserve(points.size());
  for (const auto& p : points) {
    Vector x = p;
    x.push_back(dot(p, p));
    out.push_back(std::move(x));
  }
  return out;
}

SimplicialComplex lift(const SimplicialComplex& K) {
  return build_complex(K.ambient_dim() + 1, lift_points(K.points()), K.maximal_simplices());
}

void QueryLog::record(const Direction& s) {
  count_.fetch_add(1);
  std::lock_guard lock(mutex_);
  directions_.push_back(s);
}

std::vector<Direction> QueryLog::directions() const {
  std::lock_guard lock(mutex_);
  return directions_;
}

void QueryLog::reset() {
  std::lock_guard lock(mutex_);
  count_.store(0);
  directions_.clear();
}

AugmentedDiagram query(QueryLog& log, const SimplicialComplex& K, const Direction& s, std::optional<int> dim_filter) {
  log.record(s);
  auto dgm = compute_apd(K, s);
  return dim_filter ? dgm.restricted(*dim_filter) : dgm;
}

AugmentedDiagram query_lifted(QueryLog& log, const SimplicialComplex& K, const Direction& s,
                              std::optional<int> dim_filter) {
  return query(log, lift(K), s, dim_filter);
}

ComplexOracle::ComplexOracle(const SimplicialComplex& K, std::size_t cache_capacity)
    : K_(K), engine_(K_), capacity_(cache_capacity) {}

AugmentedDiagram ComplexOracle::query(const Direction& s) {
  check_direction(K_, s);
  log_.record(s);
  const Direction key = s.primitive();

  std::shared_ptr<const AugmentedDiagram> base;
  {
    std::lock_guard lock(cache_mutex_);
    if (auto it = cache_.find(key); it != cache_.end()) {
      base = it->second;
      hits_.fetch_add(1);
    }
  }
  if (!base) {
    base = std::make_shared<const AugmentedDiagram>(engine_.diagram(key));
    if (capacity_ > 0) {
      std::lock_guard lock(cache_mutex_);
      if (cache_.emplace(key, base).second) {
        fifo_.push_back(key);
        if (fifo_.size() > capacity_) {
          cache_.erase(fifo_.front());
          fifo_.pop_front();
        }
      }
    }
  }

  // s = scale * key with scale > 0; heights scale linearly.
  std::size_t i = 0;
  while (key[i] == 0) ++i;
  const Rational scale = s[i] / key[i];
  AugmentedDiagram out = *base;
  out.direction = s;
  if (scale != 1)
    for (auto& p : out.points) {
      p.birth *= scale;
      if (p.death) *p.death *= scale;
    }
  return out;
}

BasisOracle::BasisOracle(DiagramOracle& inner, std::vector<Direction> basis) : inner_(&inner), basis_(std::move(basis)) {
  if (basis_.size() != inner.ambient_dim()) throw InvalidInput("basis size must match the ambient dimension");
  for (const auto& b : basis_)
    if (b.dim() != inner.ambient_dim()) throw InvalidInput("basis vector has the wrong dimension");
}

AugmentedDiagram BasisOracle::query(const Direction& s) {
  if (s.dim() != basis_.size()) throw InvalidInput("direction has the wrong dimension");
  Vector pulled(basis_.size(), Rational(0));
  for (std::size_t i = 0; i < basis_.size(); ++i)
    for (std::size_t j = 0; j < pulled.size(); ++j) pulled[j] += s[i] * basis_[i][j];
  auto dgm = inner_->query(Direction(std::move(pulled)));
  dgm.direction = s;
  return dgm;
}

}  // namespace pht
