#include "tropbn/curve.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>

#include "tropbn/error.hpp"

namespace tropbn {

namespace {

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

bool connected(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& ends) {
  if (n == 0) return false;
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::size_t components = n;
  for (auto [a, b] : ends) {
    auto ra = find_root(parent, a), rb = find_root(parent, b);
    if (ra != rb) {
      parent[ra] = rb;
      --components;
    }
  }
  return components == 1;
}

void check_vertices(const std::vector<Vertex>& vertices) {
  if (vertices.empty()) throw DomainError("curve must have at least one vertex");
  std::set<std::string> names;
  for (const auto& v : vertices) {
    if (v.weight < 0) throw DomainError("negative weight at vertex " + v.name);
    if (!names.insert(v.name).second) throw DomainError("duplicate vertex id " + v.name);
  }
}

}  // namespace

TropicalCurve::TropicalCurve(std::vector<Vertex> vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  check_vertices(vertices_);
  std::set<std::string> names;
  std::vector<std::pair<std::size_t, std::size_t>> ends;
  incidence_.resize(vertices_.size());
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const auto& e = edges_[i];
    if (!names.insert(e.name).second) throw DomainError("duplicate edge id " + e.name);
    if (e.tail.value >= vertices_.size() || e.head.value >= vertices_.size())
      throw DomainError("edge " + e.name + " has an unknown endpoint");
    if (e.length <= 0) throw DomainError("edge " + e.name + " must have positive length");
    ends.emplace_back(e.tail.value, e.head.value);
    incidence_[e.tail.value].push_back({EdgeId{i}, true});
    incidence_[e.head.value].push_back({EdgeId{i}, false});
  }
  if (!connected(vertices_.size(), ends)) throw DomainError("curve must be connected");
}

std::optional<VertexId> TropicalCurve::find_vertex(std::string_view name) const {
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    if (vertices_[i].name == name) return VertexId{i};
  return std::nullopt;
}

std::optional<EdgeId> TropicalCurve::find_edge(std::string_view name) const {
  for (std::size_t i = 0; i < edges_.size(); ++i)
    if (edges_[i].name == name) return EdgeId{i};
  return std::nullopt;
}

int TropicalCurve::betti() const {
  return static_cast<int>(edges_.size()) - static_cast<int>(vertices_.size()) + 1;
}

int TropicalCurve::total_weight() const {
  int total = 0;
  for (const auto& v : vertices_) total += v.weight;
  return total;
}

int TropicalCurve::genus() const { return betti() + total_weight(); }

Rational TropicalCurve::total_length() const {
  Rational total = 0;
  for (const auto& e : edges_) total += e.length;
  return total;
}

Point TropicalCurve::point_on_edge(EdgeId e, const Rational& offset) const {
  if (e.value >= edges_.size()) throw DomainError("unknown edge");
  const auto& edge = edges_[e.value];
  if (offset < 0 || offset > edge.length)
    throw DomainError("offset " + to_string(offset) + " outside edge " + edge.name);
  if (offset == 0) return Point::at(edge.tail);
  if (offset == edge.length) return Point::at(edge.head);
  return Point::interior(e, offset);
}

void TropicalCurve::validate(const Point& p) const {
  if (p.is_vertex()) {
    if (p.vertex().value >= vertices_.size()) throw DomainError("unknown vertex in point");
    return;
  }
  if (p.edge().value >= edges_.size()) throw DomainError("unknown edge in point");
  const auto& edge = edges_[p.edge().value];
  if (p.offset() <= 0 || p.offset() >= edge.length)
    throw DomainError("interior offset must lie strictly inside edge " + edge.name);
}

std::vector<Point> TropicalCurve::vertex_points() const {
  std::vector<Point> out;
  for (std::size_t i = 0; i < vertices_.size(); ++i) out.push_back(Point::at(VertexId{i}));
  return out;
}

std::vector<Rational> TropicalCurve::distances_to_vertices(const Point& p) const {
  validate(p);
  const std::size_t n = vertices_.size();
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
  if (p.is_vertex()) {
    relax(p.vertex().value, Rational(0));
  } else {
    const auto& e = edges_[p.edge().value];
    relax(e.tail.value, p.offset());
    relax(e.head.value, e.length - p.offset());
  }
  std::vector<bool> done(n, false);
  while (!queue.empty()) {
    auto [d, v] = queue.top();
    queue.pop();
    if (done[v]) continue;
    done[v] = true;
    for (const auto& end : incidence_[v]) {
      const auto& e = edges_[end.edge.value];
      auto other = end.at_tail ? e.head.value : e.tail.value;
      relax(other, d + e.length);
    }
  }
  std::vector<Rational> out;
  out.reserve(n);
  for (auto& b : best) out.push_back(*b);
  return out;
}

Rational TropicalCurve::distance(const Point& a, const Point& b) const {
  validate(b);
  auto from_a = distances_to_vertices(a);
  if (b.is_vertex()) return from_a[b.vertex().value];
  const auto& e = edges_[b.edge().value];
  Rational best = from_a[e.tail.value] + b.offset();
  Rational via_head = from_a[e.head.value] + (e.length - b.offset());
  if (via_head < best) best = via_head;
  if (!a.is_vertex() && a.edge() == b.edge()) {
    Rational direct = abs(a.offset() - b.offset());
    if (direct < best) best = direct;
  }
  return best;
}

std::string TropicalCurve::describe(const Point& p) const {
  if (p.is_vertex()) return vertex(p.vertex()).name;
  return edge(p.edge()).name + "@" + to_string(p.offset());
}

int genus(const TropicalCurve& curve) { return curve.genus(); }

TropicalCurve underlying_pure(const TropicalCurve& curve) {
  auto vertices = curve.vertices();
  for (auto& v : vertices) v.weight = 0;
  return TropicalCurve(std::move(vertices), curve.edges());
}

std::vector<Point> lattice_points(const TropicalCurve& curve, int n) {
  if (n < 1) throw DomainError("lattice resolution must be at least 1");
  auto out = curve.vertex_points();
  for (std::size_t i = 0; i < curve.num_edges(); ++i)
    for (int k = 1; k < n; ++k) out.push_back(Point::interior(EdgeId{i}, curve.edge(EdgeId{i}).length * ratio(k, n)));
  return out;
}

TropicalCurve attach_loops(const TropicalCurve& curve, const Rational& eps) {
  if (eps <= 0) throw DomainError("loop length must be positive");
  auto vertices = curve.vertices();
  auto edges = curve.edges();
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (int k = 0; k < vertices[i].weight; ++k)
      edges.push_back({vertices[i].name + "~loop" + std::to_string(k + 1), VertexId{i}, VertexId{i}, eps});
    vertices[i].weight = 0;
  }
  return TropicalCurve(std::move(vertices), std::move(edges));
}

namespace {

TropicalCurve build_refined(const TropicalCurve& original, const std::vector<std::vector<Rational>>& cuts) {
  auto vertices = original.vertices();
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < original.num_edges(); ++i) {
    const auto& e = original.edge(EdgeId{i});
    const auto& c = cuts[i];
    if (c.empty()) {
      edges.push_back(e);
      continue;
    }
    VertexId prev = e.tail;
    Rational prev_offset = 0;
    for (std::size_t k = 0; k <= c.size(); ++k) {
      VertexId next = e.head;
      Rational next_offset = e.length;
      if (k < c.size()) {
        next = VertexId{vertices.size()};
        next_offset = c[k];
        vertices.push_back({e.name + "@" + to_string(c[k]), 0});
      }
      edges.push_back({e.name + "#" + std::to_string(k + 1), prev, next, next_offset - prev_offset});
      prev = next;
      prev_offset = next_offset;
    }
  }
  return TropicalCurve(std::move(vertices), std::move(edges));
}

std::vector<std::vector<Rational>> normalize_cuts(const TropicalCurve& original,
                                                  std::vector<std::vector<Rational>> cuts) {
  if (cuts.size() != original.num_edges()) throw DomainError("one cut list per edge expected");
  for (std::size_t i = 0; i < cuts.size(); ++i) {
    auto& c = cuts[i];
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
    for (const auto& x : c)
      if (x <= 0 || x >= original.edge(EdgeId{i}).length) throw DomainError("cut outside edge interior");
  }
  return cuts;
}

}  // namespace

Refinement::Refinement(const TropicalCurve& original, std::vector<std::vector<Rational>> cuts)
    : curve_(build_refined(original, cuts = normalize_cuts(original, std::move(cuts)))) {
  pieces_.resize(original.num_edges());
  vertex_origin_.resize(curve_.num_vertices());
  for (std::size_t v = 0; v < original.num_vertices(); ++v) vertex_origin_[v] = Point::at(VertexId{v});
  std::size_t next_vertex = original.num_vertices();
  std::size_t next_edge = 0;
  for (std::size_t i = 0; i < original.num_edges(); ++i) {
    auto& pc = pieces_[i];
    pc.cuts = cuts[i];
    Rational start = 0;
    for (std::size_t k = 0; k <= pc.cuts.size(); ++k) {
      pc.pieces.push_back(EdgeId{next_edge++});
      origin_.emplace_back(EdgeId{i}, start);
      if (k < pc.cuts.size()) {
        pc.cut_vertices.push_back(VertexId{next_vertex});
        vertex_origin_[next_vertex++] = Point::interior(EdgeId{i}, pc.cuts[k]);
        start = pc.cuts[k];
      }
    }
  }
}

Point Refinement::forward(const Point& p) const {
  if (p.is_vertex()) return p;
  const auto& pc = pieces_of(p.edge());
  auto it = std::lower_bound(pc.cuts.begin(), pc.cuts.end(), p.offset());
  auto k = static_cast<std::size_t>(it - pc.cuts.begin());
  if (it != pc.cuts.end() && *it == p.offset()) return Point::at(pc.cut_vertices[k]);
  Rational start = k == 0 ? Rational(0) : pc.cuts[k - 1];
  return Point::interior(pc.pieces[k], p.offset() - start);
}

Point Refinement::backward(const Point& p) const {
  if (p.is_vertex()) return *vertex_origin_.at(p.vertex().value);
  const auto& [edge, start] = origin_.at(p.edge().value);
  return Point::interior(edge, start + p.offset());
}

Refinement subdivide(const TropicalCurve& curve, std::span<const Point> marks) {
  std::vector<std::vector<Rational>> cuts(curve.num_edges());
  for (const auto& p : marks) {
    curve.validate(p);
    if (!p.is_vertex()) cuts[p.edge().value].push_back(p.offset());
  }
  return Refinement(curve, std::move(cuts));
}

Refinement loopless_model(const TropicalCurve& curve) {
  std::vector<std::vector<Rational>> cuts(curve.num_edges());
  for (std::size_t i = 0; i < curve.num_edges(); ++i) {
    const auto& e = curve.edge(EdgeId{i});
    if (e.is_loop()) cuts[i].push_back(e.length / 2);
  }
  return Refinement(curve, std::move(cuts));
}

CombinatorialType::CombinatorialType(std::vector<Vertex> vertices, std::vector<EdgeEnds> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  check_vertices(vertices_);
  std::vector<std::pair<std::size_t, std::size_t>> ends;
  std::set<std::string> names;
  for (const auto& e : edges_) {
    if (e.tail.value >= vertices_.size() || e.head.value >= vertices_.size())
      throw DomainError("edge " + e.name + " has an unknown endpoint");
    if (!names.insert(e.name).second) throw DomainError("duplicate edge id " + e.name);
    ends.emplace_back(e.tail.value, e.head.value);
  }
  if (!connected(vertices_.size(), ends)) throw DomainError("combinatorial type must be connected");
}

CombinatorialType CombinatorialType::of(const TropicalCurve& curve) {
  std::vector<EdgeEnds> edges;
  for (const auto& e : curve.edges()) edges.push_back({e.name, e.tail, e.head});
  return CombinatorialType(curve.vertices(), std::move(edges));
}

int CombinatorialType::genus() const {
  int total = static_cast<int>(edges_.size()) - static_cast<int>(vertices_.size()) + 1;
  for (const auto& v : vertices_) total += v.weight;
  return total;
}

TropicalCurve CombinatorialType::unit_curve() const {
  std::vector<Edge> edges;
  for (const auto& e : edges_) edges.push_back({e.name, e.tail, e.head, Rational(1)});
  return TropicalCurve(vertices_, std::move(edges));
}

ConeVector::ConeVector(std::vector<Rational> entries) : entries_(std::move(entries)) {
  for (const auto& x : entries_)
    if (x < 0) throw DomainError("cone vector entries must be non-negative");
}

bool ConeVector::is_interior() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Rational& x) { return x > 0; });
}

Realization::Realization(TropicalCurve curve, std::vector<VertexId> vertex_image,
                         std::vector<std::optional<EdgeId>> edge_image, std::vector<Rational> scale,
                         std::vector<VertexId> edge_base, std::vector<EdgeId> edge_origin)
    : curve_(std::move(curve)),
      vertex_image_(std::move(vertex_image)),
      edge_image_(std::move(edge_image)),
      scale_(std::move(scale)),
      edge_base_(std::move(edge_base)),
      edge_origin_(std::move(edge_origin)) {}

Point Realization::map(const Point& p) const {
  if (p.is_vertex()) return Point::at(vertex_image(p.vertex()));
  auto image = edge_image(p.edge());
  if (!image) return Point::at(edge_base_.at(p.edge().value));
  return Point::interior(*image, p.offset() * scale_.at(p.edge().value));
}

Point Realization::preimage(const Point& p) const {
  if (p.is_vertex()) {
    for (std::size_t v = 0; v < vertex_image_.size(); ++v)
      if (vertex_image_[v] == p.vertex()) return Point::at(VertexId{v});
    throw InvariantViolation("realized vertex without preimage");
  }
  auto origin = edge_origin_.at(p.edge().value);
  return Point::interior(origin, p.offset() / scale_.at(origin.value));
}

std::vector<VertexId> Realization::collapsed_onto(VertexId v) const {
  std::vector<VertexId> out;
  for (std::size_t u = 0; u < vertex_image_.size(); ++u)
    if (vertex_image_[u] == v) out.push_back(VertexId{u});
  return out;
}

Realization realize(const CombinatorialType& type, const ConeVector& s) {
  const auto& tv = type.vertices();
  const auto& te = type.edges();
  if (s.size() != te.size()) throw DomainError("cone vector has the wrong dimension");
  std::vector<std::size_t> parent(tv.size());
  std::iota(parent.begin(), parent.end(), 0);
  for (std::size_t i = 0; i < te.size(); ++i)
    if (s[i] == 0) parent[find_root(parent, te[i].tail.value)] = find_root(parent, te[i].head.value);

  // New vertices are numbered by the smallest original vertex in each class.
  std::map<std::size_t, std::size_t> class_index;
  std::vector<VertexId> vertex_image(tv.size());
  std::vector<std::vector<std::size_t>> members;
  for (std::size_t v = 0; v < tv.size(); ++v) {
    auto root = find_root(parent, v);
    auto [it, inserted] = class_index.emplace(root, members.size());
    if (inserted) members.emplace_back();
    members[it->second].push_back(v);
    vertex_image[v] = VertexId{it->second};
  }
  std::vector<int> contracted_edges(members.size(), 0);
  for (std::size_t i = 0; i < te.size(); ++i)
    if (s[i] == 0) ++contracted_edges[vertex_image[te[i].tail.value].value];

  std::vector<Vertex> vertices;
  for (std::size_t c = 0; c < members.size(); ++c) {
    std::string name;
    int weight = contracted_edges[c] - static_cast<int>(members[c].size()) + 1;
    for (auto v : members[c]) {
      if (!name.empty()) name += "+";
      name += tv[v].name;
      weight += tv[v].weight;
    }
    vertices.push_back({name, weight});
  }
  std::vector<Edge> edges;
  std::vector<std::optional<EdgeId>> edge_image(te.size());
  std::vector<VertexId> edge_base(te.size());
  std::vector<EdgeId> edge_origin;
  std::vector<Rational> scale(te.size());
  for (std::size_t i = 0; i < te.size(); ++i) {
    edge_base[i] = vertex_image[te[i].tail.value];
    scale[i] = s[i];
    if (s[i] == 0) continue;
    edge_image[i] = EdgeId{edges.size()};
    edge_origin.push_back(EdgeId{i});
    edges.push_back({te[i].name, vertex_image[te[i].tail.value], vertex_image[te[i].head.value], s[i]});
  }
  return Realization(TropicalCurve(std::move(vertices), std::move(edges)), std::move(vertex_image),
                     std::move(edge_image), std::move(scale), std::move(edge_base), std::move(edge_origin));
}

Realization rescale(const CombinatorialType& type, const ConeVector& s) {
  if (s.size() != type.num_edges()) throw DomainError("cone vector has the wrong dimension");
  if (!s.is_interior()) throw DomainError("rescale needs strictly positive entries; use realize to contract");
  return realize(type, s);
}

}  // namespace tropbn
