#include "pht/complex.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "pht/errors.hpp"

namespace pht {

Simplex::Simplex(std::vector<VertexId> ids) : ids_(std::move(ids)) {
  if (ids_.empty()) throw InvalidInput("empty simplex");
  std::sort(ids_.begin(), ids_.end());
  if (std::adjacent_find(ids_.begin(), ids_.end()) != ids_.end())
    throw InvalidInput("simplex repeats a vertex: " + to_string(*this));
}

bool Simplex::contains(VertexId v) const { return std::binary_search(ids_.begin(), ids_.end(), v); }

Simplex Simplex::with(VertexId v) const {
  std::vector<VertexId> ids = ids_;
  ids.push_back(v);
  return Simplex(std::move(ids));
}

std::vector<Simplex> Simplex::facets() const {
  std::vector<Simplex> out;
  if (ids_.size() < 2) return out;
  // Dropping the last id first yields lexicographic order.
  for (std::size_t drop = ids_.size(); drop-- > 0;) {
    Simplex f;
    f.ids_.reserve(ids_.size() - 1);
    for (std::size_t i = 0; i < ids_.size(); ++i)
      if (i != drop) f.ids_.push_back(ids_[i]);
    out.push_back(std::move(f));
  }
  return out;
}

std::vector<Simplex> Simplex::proper_faces() const {
  const std::size_t m = ids_.size();
  std::vector<Simplex> out;
  for (unsigned long mask = 1; mask + 1 < (1UL << m); ++mask) {
    Simplex f;
    for (std::size_t i = 0; i < m; ++i)
      if (mask & (1UL << i)) f.ids_.push_back(ids_[i]);
    out.push_back(std::move(f));
  }
  std::sort(out.begin(), out.end(), [](const Simplex& a, const Simplex& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

std::string to_string(const Simplex& s) {
  std::string out = "[";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(s[i]);
  }
  return out + "]";
}

std::vector<Vector> SimplicialComplex::points_of(const Simplex& s) const {
  std::vector<Vector> out;
  out.reserve(s.size());
  for (VertexId v : s.vertices()) out.push_back(points_.at(v));
  return out;
}

const std::vector<Simplex>& SimplicialComplex::simplices(int k) const {
  static const std::vector<Simplex> empty;
  if (k < 0 || k >= static_cast<int>(by_dim_.size())) return empty;
  return by_dim_[k];
}

std::size_t SimplicialComplex::size() const noexcept {
  std::size_t n = 0;
  for (const auto& level : by_dim_) n += level.size();
  return n;
}

bool SimplicialComplex::contains(const Simplex& s) const {
  const auto& level = simplices(s.dim());
  return std::binary_search(level.begin(), level.end(), s);
}

std::vector<Simplex> SimplicialComplex::maximal_simplices() const {
  std::vector<Simplex> out;
  for (int k = 1; k <= kappa(); ++k) {
    std::set<Simplex> covered;
    for (const auto& c : simplices(k + 1))
      for (auto& f : c.facets()) covered.insert(std::move(f));
    for (const auto& s : by_dim_[k])
      if (!covered.contains(s)) out.push_back(s);
  }
  return out;
}

long SimplicialComplex::euler_characteristic() const {
  long chi = 0;
  for (int k = 0; k <= kappa(); ++k) chi += (k % 2 == 0 ? 1 : -1) * static_cast<long>(count(k));
  return chi;
}

SimplicialComplex build_complex(std::size_t ambient_dim, std::vector<Vector> points,
                                const std::vector<Simplex>& simplices) {
  for (std::size_t i = 0; i < points.size(); ++i)
    if (points[i].size() != ambient_dim)
      throw InvalidInput("vertex " + std::to_string(i) + " has " + std::to_string(points[i].size()) +
                         " coordinates, expected " + std::to_string(ambient_dim));

  std::vector<std::set<Simplex>> levels(points.empty() ? 0 : 1);
  for (VertexId v = 0; v < points.size(); ++v) levels[0].insert(Simplex{v});
  for (const auto& s : simplices) {
    if (s.size() == 0) throw InvalidInput("empty simplex");
    for (VertexId v : s.vertices())
      if (v >= points.size()) throw InvalidInput("simplex " + to_string(s) + " uses unknown vertex " + std::to_string(v));
    if (static_cast<std::size_t>(s.dim()) > ambient_dim)
      throw InvalidInput("simplex " + to_string(s) + " exceeds the ambient dimension");
    if (levels.size() <= static_cast<std::size_t>(s.dim())) levels.resize(s.dim() + 1);
    levels[s.dim()].insert(s);
  }
  // Close downward one dimension at a time.
  for (std::size_t k = levels.size(); k-- > 1;)
    for (const auto& s : levels[k])
      for (auto& f : s.facets()) levels[k - 1].insert(std::move(f));

  SimplicialComplex K;
  K.ambient_dim_ = ambient_dim;
  K.points_ = std::move(points);
  for (auto& level : levels) K.by_dim_.emplace_back(level.begin(), level.end());
  return K;
}

GeneralPositionReport validate_general_position(const SimplicialComplex& K) {
  GeneralPositionReport report;
  const auto& p = K.points();
  const std::size_t n = p.size();
  if (K.ambient_dim() == 0) return report;

  std::map<Rational, VertexId> first;
  for (VertexId v = 0; v < n; ++v) {
    auto [it, inserted] = first.emplace(p[v][0], v);
    if (!inserted) {
      report.unique_e1_heights = false;
      report.violations.push_back({GeneralPositionViolation::Kind::SharedE1Height, {it->second, v}});
    }
  }
  if (K.ambient_dim() >= 2) {
    for (VertexId a = 0; a < n; ++a)
      for (VertexId b = a + 1; b < n; ++b)
        for (VertexId c = b + 1; c < n; ++c) {
          const Rational orient =
              (p[b][0] - p[a][0]) * (p[c][1] - p[a][1]) - (p[b][1] - p[a][1]) * (p[c][0] - p[a][0]);
          if (orient == 0) {
            report.no_three_projected_collinear = false;
            report.violations.push_back({GeneralPositionViolation::Kind::ProjectedCollinear, {a, b, c}});
          }
        }
  }
  return report;
}

namespace {

std::vector<std::string_view> tokenize(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::size_t parse_count(std::string_view tok, std::size_t line) {
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw ParseError(line, "expected a non-negative integer, got '" + std::string(tok) + "'");
  return value;
}

}  // namespace

SimplicialComplex parse_complex(std::string_view text) {
  struct Record {
    std::size_t line;
    std::vector<std::string_view> tokens;
  };
  std::vector<Record> records;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    std::string_view line = text.substr(pos, end - pos);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto tokens = tokenize(line);
    if (!tokens.empty()) records.push_back({line_no, std::move(tokens)});
    pos = end + 1;
  }

  std::size_t r = 0;
  auto next = [&](const char* what) -> const Record& {
    if (r >= records.size()) throw ParseError(line_no, std::string("unexpected end of input, expected ") + what);
    return records[r++];
  };
  auto keyword = [&](const char* word) {
    const Record& rec = next(word);
    if (rec.tokens.size() != 2 || rec.tokens[0] != word)
      throw ParseError(rec.line, std::string("expected '") + word + " <count>'");
    return parse_count(rec.tokens[1], rec.line);
  };

  const std::size_t d = keyword("dim");
  const std::size_t n0 = keyword("vertices");
  std::vector<Vector> points(n0);
  std::vector<bool> seen(n0, false);
  for (std::size_t i = 0; i < n0; ++i) {
    const Record& rec = next("a vertex line");
    if (rec.tokens.size() != d + 1)
      throw ParseError(rec.line, "vertex line needs an id and " + std::to_string(d) + " coordinates");
    const std::size_t id = parse_count(rec.tokens[0], rec.line);
    if (id >= n0) throw ParseError(rec.line, "vertex id " + std::to_string(id) + " out of range");
    if (seen[id]) throw ParseError(rec.line, "duplicate vertex id " + std::to_string(id));
    seen[id] = true;
    Vector x;
    for (std::size_t c = 1; c <= d; ++c) {
      try {
        x.push_back(parse_rational(rec.tokens[c]));
      } catch (const InvalidInput& e) {
        throw ParseError(rec.line, e.what());
      }
    }
    points[id] = std::move(x);
  }

  std::vector<Simplex> simplices;
  if (r < records.size()) {
    const std::size_t m = keyword("simplices");
    for (std::size_t i = 0; i < m; ++i) {
      const Record& rec = next("a simplex line");
      std::vector<VertexId> ids;
      for (auto tok : rec.tokens) {
        const std::size_t id = parse_count(tok, rec.line);
        if (id >= n0) throw ParseError(rec.line, "simplex references unknown vertex " + std::to_string(id));
        ids.push_back(id);
      }
      try {
        Simplex s(std::move(ids));
        if (static_cast<std::size_t>(s.dim()) > d) throw InvalidInput("simplex exceeds the ambient dimension");
        simplices.push_back(std::move(s));
      } catch (const InvalidInput& e) {
        throw ParseError(rec.line, e.what());
      }
    }
  }
  if (r < records.size()) throw ParseError(records[r].line, "unexpected trailing content");
  return build_complex(d, std::move(points), simplices);
}

std::string serialize_complex(const SimplicialComplex& K) {
  std::ostringstream out;
  out << "dim " << K.ambient_dim() << '\n';
  out << "vertices " << K.vertex_count() << '\n';
  for (VertexId v = 0; v < K.vertex_count(); ++v) {
    out << v;
    for (const auto& x : K.point(v)) out << ' ' << format_rational(x);
    out << '\n';
  }
  const auto maximal = K.maximal_simplices();
  out << "simplices " << maximal.size() << '\n';
  for (const auto& s : maximal) {
    for (std::size_t i = 0; i < s.size(); ++i) out << (i ? " " : "") << s[i];
    out << '\n';
  }
  return out.str();
}

SimplicialComplex read_complex_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_complex(buf.str());
}

}  // namespace pht
