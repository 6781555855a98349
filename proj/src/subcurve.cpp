#include "tropbn/subcurve.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>

#include "tropbn/error.hpp"

namespace tropbn {

Point SubcurveModel::to_parent(const Point& p) const {
  if (p.is_vertex()) return vertex_origin_.at(p.vertex().value);
  const auto& [edge, start] = edge_origin_.at(p.edge().value);
  return Point::interior(edge, start + p.offset());
}

Point SubcurveModel::from_parent(const TropicalCurve& parent, const Point& p) const {
  for (std::size_t v = 0; v < vertex_origin_.size(); ++v)
    if (vertex_origin_[v] == p) return Point::at(VertexId{v});
  if (!p.is_vertex()) {
    for (std::size_t i = 0; i < edge_origin_.size(); ++i) {
      const auto& [edge, start] = edge_origin_[i];
      if (edge != p.edge()) continue;
      Rational local = p.offset() - start;
      if (local > 0 && local < curve_.edge(EdgeId{i}).length) return Point::interior(EdgeId{i}, local);
    }
  }
  throw DomainError("point " + parent.describe(p) + " is not in the subcurve");
}

namespace {

std::size_t root_of(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

}  // namespace

Subcurve::Subcurve(std::shared_ptr<const TropicalCurve> parent, std::set<VertexId> vertices,
                   std::vector<std::vector<Interval>> intervals)
    : parent_(std::move(parent)), vertices_(std::move(vertices)), intervals_(std::move(intervals)) {
  const auto& curve = *parent_;
  if (intervals_.empty()) intervals_.resize(curve.num_edges());
  if (intervals_.size() != curve.num_edges()) throw DomainError("one interval list per edge expected");
  for (auto v : vertices_)
    if (v.value >= curve.num_vertices()) throw DomainError("unknown vertex in subcurve");
  for (std::size_t i = 0; i < intervals_.size(); ++i) {
    const auto& e = curve.edge(EdgeId{i});
    auto& list = intervals_[i];
    for (const auto& piece : list)
      if (piece.lo < 0 || piece.hi > e.length || piece.lo > piece.hi)
        throw DomainError("segment outside edge " + e.name);
    std::sort(list.begin(), list.end(), [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
    std::vector<Interval> merged;
    for (const auto& piece : list) {
      if (!merged.empty() && piece.lo <= merged.back().hi) {
        if (piece.hi > merged.back().hi) merged.back().hi = piece.hi;
      } else {
        merged.push_back(piece);
      }
    }
    std::vector<Interval> kept;
    for (const auto& piece : merged) {
      if (piece.lo == 0) vertices_.insert(e.tail);
      if (piece.hi == e.length) vertices_.insert(e.head);
      if (piece.hi == 0 || piece.lo == e.length) continue;
      kept.push_back(piece);
    }
    list = std::move(kept);
  }

  // Connectivity over vertex nodes and one node per segment.
  const std::size_t nv = curve.num_vertices();
  std::vector<std::size_t> uf(nv);
  std::size_t total = nv;
  for (const auto& list : intervals_) total += list.size();
  uf.resize(total);
  std::iota(uf.begin(), uf.end(), 0);
  std::size_t node = nv;
  std::size_t nodes = vertices_.size();
  std::size_t components = nodes;
  auto join = [&](std::size_t a, std::size_t b) {
    auto ra = root_of(uf, a), rb = root_of(uf, b);
    if (ra != rb) {
      uf[ra] = rb;
      --components;
    }
  };
  for (std::size_t i = 0; i < intervals_.size(); ++i) {
    const auto& e = curve.edge(EdgeId{i});
    for (const auto& piece : intervals_[i]) {
      ++nodes;
      ++components;
      if (piece.lo == 0) join(node, e.tail.value);
      if (piece.hi == e.length) join(node, e.head.value);
      ++node;
    }
  }
  if (nodes == 0) throw DomainError("subcurve must be non-empty");
  if (components != 1) throw DomainError("subcurve must be connected");
}

Subcurve Subcurve::whole(std::shared_ptr<const TropicalCurve> parent) {
  std::set<VertexId> vertices;
  std::vector<std::vector<Interval>> intervals(parent->num_edges());
  for (std::size_t v = 0; v < parent->num_vertices(); ++v) vertices.insert(VertexId{v});
  for (std::size_t i = 0; i < parent->num_edges(); ++i) intervals[i].push_back({0, parent->edge(EdgeId{i}).length});
  return Subcurve(std::move(parent), std::move(vertices), std::move(intervals));
}

Subcurve Subcurve::point(std::shared_ptr<const TropicalCurve> parent, const Point& p) {
  parent->validate(p);
  std::vector<std::vector<Interval>> intervals(parent->num_edges());
  if (p.is_vertex()) return Subcurve(std::move(parent), {p.vertex()}, std::move(intervals));
  intervals[p.edge().value].push_back({p.offset(), p.offset()});
  return Subcurve(std::move(parent), {}, std::move(intervals));
}

Subcurve Subcurve::induced(std::shared_ptr<const TropicalCurve> parent, const std::set<VertexId>& vertices) {
  std::vector<std::vector<Interval>> intervals(parent->num_edges());
  for (std::size_t i = 0; i < parent->num_edges(); ++i) {
    const auto& e = parent->edge(EdgeId{i});
    if (vertices.count(e.tail) && vertices.count(e.head)) intervals[i].push_back({0, e.length});
  }
  return Subcurve(std::move(parent), vertices, std::move(intervals));
}

bool Subcurve::contains_whole_edge(EdgeId e) const {
  const auto& list = intervals(e);
  return list.size() == 1 && list[0].lo == 0 && list[0].hi == parent_->edge(e).length;
}

bool Subcurve::contains(const Point& p) const {
  if (p.is_vertex()) return vertices_.count(p.vertex()) > 0;
  for (const auto& piece : intervals(p.edge()))
    if (piece.lo <= p.offset() && p.offset() <= piece.hi) return true;
  return false;
}

bool Subcurve::contains(const Subcurve& other) const {
  if (!std::includes(vertices_.begin(), vertices_.end(), other.vertices_.begin(), other.vertices_.end())) return false;
  for (std::size_t i = 0; i < intervals_.size(); ++i) {
    for (const auto& piece : other.intervals_[i]) {
      bool inside = std::any_of(intervals_[i].begin(), intervals_[i].end(), [&](const Interval& mine) {
        return mine.lo <= piece.lo && piece.hi <= mine.hi;
      });
      if (!inside) return false;
    }
  }
  return true;
}

std::vector<Direction> Subcurve::outward_directions() const {
  const auto& curve = *parent_;
  std::vector<Direction> out;
  for (auto v : vertices_) {
    for (const auto& end : curve.incident(v)) {
      const auto& e = curve.edge(end.edge);
      const auto& list = intervals(end.edge);
      if (end.at_tail) {
        if (list.empty() || list.front().lo != 0) out.push_back({Point::at(v), end.edge, Rational(0), true});
      } else {
        if (list.empty() || list.back().hi != e.length) out.push_back({Point::at(v), end.edge, e.length, false});
      }
    }
  }
  for (std::size_t i = 0; i < intervals_.size(); ++i) {
    const auto& e = curve.edge(EdgeId{i});
    for (const auto& piece : intervals_[i]) {
      if (piece.lo > 0) out.push_back({Point::interior(EdgeId{i}, piece.lo), EdgeId{i}, piece.lo, false});
      if (piece.hi < e.length) out.push_back({Point::interior(EdgeId{i}, piece.hi), EdgeId{i}, piece.hi, true});
    }
  }
  return out;
}

std::vector<Point> Subcurve::boundary() const {
  std::vector<Point> out;
  for (const auto& d : outward_directions()) out.push_back(d.base);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

int Subcurve::betti() const {
  const auto& curve = *parent_;
  int nodes = static_cast<int>(vertices_.size());
  int edges = 0;
  for (std::size_t i = 0; i < intervals_.size(); ++i) {
    const auto& e = curve.edge(EdgeId{i});
    for (const auto& piece : intervals_[i]) {
      if (piece.lo == piece.hi) {
        ++nodes;
        continue;
      }
      ++edges;
      if (piece.lo > 0) ++nodes;
      if (piece.hi < e.length) ++nodes;
    }
  }
  return edges - nodes + 1;
}

int Subcurve::genus() const {
  int total = betti();
  for (auto v : vertices_) total += parent_->vertex(v).weight;
  return total;
}

Rational Subcurve::length() const {
  Rational total = 0;
  for (const auto& list : intervals_)
    for (const auto& piece : list) total += piece.hi - piece.lo;
  return total;
}

std::vector<VertexId> Subcurve::weighted_vertices_outside() const {
  std::vector<VertexId> out;
  for (std::size_t v = 0; v < parent_->num_vertices(); ++v)
    if (parent_->vertex(VertexId{v}).weight > 0 && !vertices_.count(VertexId{v})) out.push_back(VertexId{v});
  return out;
}

SubcurveModel Subcurve::model() const {
  const auto& curve = *parent_;
  std::vector<Vertex> vertices;
  std::vector<Point> vertex_origin;
  std::map<VertexId, VertexId> local;
  for (auto v : vertices_) {
    local[v] = VertexId{vertices.size()};
    vertices.push_back(curve.vertex(v));
    vertex_origin.push_back(Point::at(v));
  }
  std::vector<Edge> edges;
  std::vector<std::pair<EdgeId, Rational>> edge_origin;
  auto interior_node = [&](EdgeId e, const Rational& x) {
    VertexId id{vertices.size()};
    vertices.push_back({curve.edge(e).name + "@" + to_string(x), 0});
    vertex_origin.push_back(Point::interior(e, x));
    return id;
  };
  for (std::size_t i = 0; i < intervals_.size(); ++i) {
    EdgeId eid{i};
    const auto& e = curve.edge(eid);
    for (const auto& piece : intervals_[i]) {
      if (piece.lo == piece.hi) {
        interior_node(eid, piece.lo);
        continue;
      }
      VertexId a = piece.lo == 0 ? local.at(e.tail) : interior_node(eid, piece.lo);
      VertexId b = piece.hi == e.length ? local.at(e.head) : interior_node(eid, piece.hi);
      bool whole = piece.lo == 0 && piece.hi == e.length;
      std::string name = whole ? e.name : e.name + "[" + to_string(piece.lo) + "," + to_string(piece.hi) + "]";
      edges.push_back({name, a, b, piece.hi - piece.lo});
      edge_origin.emplace_back(eid, piece.lo);
    }
  }
  return SubcurveModel(TropicalCurve(std::move(vertices), std::move(edges)), std::move(vertex_origin),
                       std::move(edge_origin));
}

std::string Subcurve::describe() const {
  const auto& curve = *parent_;
  std::string out = "{";
  bool first = true;
  for (auto v : vertices_) {
    out += (first ? "" : ", ") + curve.vertex(v).name;
    first = false;
  }
  for (std::size_t i = 0; i < intervals_.size(); ++i)
    for (const auto& piece : intervals_[i]) {
      out += (first ? "" : ", ") + curve.edge(EdgeId{i}).name + "[" + to_string(piece.lo) + "," + to_string(piece.hi) + "]";
      first = false;
    }
  return out + "}";
}

std::vector<Rational> distances_from(const Subcurve& lambda) {
  const auto& curve = lambda.parent();
  const std::size_t n = curve.num_vertices();
  std::vector<std::optional<Rational>> best(n);
  using Item = std::pair<Rational, std::size_t>;
  auto cmp = [](const Item& a, const Item& b) { return a.first > b.first; };
  std::priority_queue<Item, std::vector<Item>, decltype(cmp)> queue(cmp);
  auto relax = [&](std::size_t v, const Rational& d) {
    if (!best[v] || d < *best[v]) {
      best[v] = d;
      queue.emplace(d, v);
    }
  };
  for (auto v : lambda.vertices()) relax(v.value, Rational(0));
  for (std::size_t i = 0; i < curve.num_edges(); ++i) {
    const auto& e = curve.edge(EdgeId{i});
    for (const auto& piece : lambda.intervals(EdgeId{i})) {
      relax(e.tail.value, piece.lo);
      relax(e.head.value, e.length - piece.hi);
    }
  }
  std::vector<bool> done(n, false);
  while (!queue.empty()) {
    auto [d, v] = queue.top();
    queue.pop();
    if (done[v]) continue;
    done[v] = true;
    for (const auto& end : curve.incident(VertexId{v})) {
      const auto& e = curve.edge(end.edge);
      relax(end.at_tail ? e.head.value : e.tail.value, d + e.length);
    }
  }
  std::vector<Rational> out;
  for (auto& b : best) out.push_back(*b);
  return out;
}

Rational distance_to(const Subcurve& lambda, const Point& p) {
  const auto& curve = lambda.parent();
  curve.validate(p);
  if (lambda.contains(p)) return 0;
  auto dist = distances_from(lambda);
  if (p.is_vertex()) return dist[p.vertex().value];
  const auto& e = curve.edge(p.edge());
  Rational best = rmin(dist[e.tail.value] + p.offset(), dist[e.head.value] + e.length - p.offset());
  for (const auto& piece : lambda.intervals(p.edge())) {
    best = rmin(best, abs(p.offset() - piece.lo));
    best = rmin(best, abs(p.offset() - piece.hi));
  }
  return best;
}

Subcurve neighborhood(const Subcurve& lambda, const Rational& delta) {
  if (delta < 0) throw DomainError("neighbourhood radius must be non-negative");
  if (delta == 0) return lambda;
  const auto& curve = lambda.parent();
  auto dist = distances_from(lambda);
  std::set<VertexId> vertices;
  std::vector<std::vector<Interval>> intervals(curve.num_edges());
  for (std::size_t v = 0; v < curve.num_vertices(); ++v)
    if (dist[v] <= delta) vertices.insert(VertexId{v});
  for (std::size_t i = 0; i < curve.num_edges(); ++i) {
    const auto& e = curve.edge(EdgeId{i});
    auto& list = intervals[i];
    if (dist[e.tail.value] <= delta) list.push_back({0, rmin(e.length, delta - dist[e.tail.value])});
    if (dist[e.head.value] <= delta) list.push_back({rmax(Rational(0), e.length - (delta - dist[e.head.value])), e.length});
    for (const auto& piece : lambda.intervals(EdgeId{i}))
      list.push_back({rmax(Rational(0), piece.lo - delta), rmin(e.length, piece.hi + delta)});
  }
  return Subcurve(lambda.parent_ptr(), std::move(vertices), std::move(intervals));
}

bool deformation_retracts(const Subcurve& n, const Subcurve& lambda) {
  return n.contains(lambda) && n.betti() == lambda.betti();
}

}  // namespace tropbn
