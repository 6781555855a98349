#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tropbn/rational.hpp"

namespace tropbn {

struct VertexId {
  std::size_t value = 0;
  friend auto operator<=>(const VertexId&, const VertexId&) = default;
};

struct EdgeId {
  std::size_t value = 0;
  friend auto operator<=>(const EdgeId&, const EdgeId&) = default;
};

/// A location on a metric graph: a vertex, or an interior position on an edge.
/// Interior offsets are measured from the edge's tail and satisfy 0 < offset < length.
/// Build points through TropicalCurve::point_on_edge so endpoints normalize to vertices.
class Point {
 public:
  static Point at(VertexId v) { return Point(true, v.value, Rational(0)); }
  static Point interior(EdgeId e, Rational offset) { return Point(false, e.value, std::move(offset)); }

  bool is_vertex() const { return on_vertex_; }
  VertexId vertex() const { return VertexId{index_}; }
  EdgeId edge() const { return EdgeId{index_}; }
  const Rational& offset() const { return offset_; }

  friend bool operator==(const Point& a, const Point& b) {
    return a.on_vertex_ == b.on_vertex_ && a.index_ == b.index_ && a.offset_ == b.offset_;
  }
  /// Vertices first (by id), then interior points by (edge, offset).
  friend bool operator<(const Point& a, const Point& b) {
    if (a.on_vertex_ != b.on_vertex_) return a.on_vertex_;
    if (a.index_ != b.index_) return a.index_ < b.index_;
    return a.offset_ < b.offset_;
  }

 private:
  Point(bool on_vertex, std::size_t index, Rational offset)
      : on_vertex_(on_vertex), index_(index), offset_(std::move(offset)) {}

  bool on_vertex_;
  std::size_t index_;
  Rational offset_;
};

struct Vertex {
  std::string name;
  int weight = 0;
};

struct Edge {
  std::string name;
  VertexId tail;
  VertexId head;
  Rational length;
  bool is_loop() const { return tail == head; }
};

/// One end of an edge as seen from an incident vertex. A loop contributes two ends.
struct EdgeEnd {
  EdgeId edge;
  bool at_tail;
};

/// Weighted metric graph (G, w, l). Immutable once constructed.
/// Invariants: at least one vertex, connected, positive lengths, non-negative weights.
class TropicalCurve {
 public:
  TropicalCurve(std::vector<Vertex> vertices, std::vector<Edge> edges);

  std::size_t num_vertices() const { return vertices_.size(); }
  std::size_t num_edges() const { return edges_.size(); }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const Vertex& vertex(VertexId v) const { return vertices_.at(v.value); }
  const Edge& edge(EdgeId e) const { return edges_.at(e.value); }
  std::span<const EdgeEnd> incident(VertexId v) const { return incidence_.at(v.value); }

  std::optional<VertexId> find_vertex(std::string_view name) const;
  std::optional<EdgeId> find_edge(std::string_view name) const;

  /// First Betti number |E| - |V| + 1.
  int betti() const;
  int total_weight() const;
  /// g(G) + sum of weights.
  int genus() const;
  bool is_pure() const { return total_weight() == 0; }
  /// Number of edge ends at v; loops count twice.
  int valence(VertexId v) const { return static_cast<int>(incident(v).size()); }
  Rational total_length() const;

  /// Normalizes offset 0 / length to the tail / head vertex. Throws DomainError outside [0, length].
  Point point_on_edge(EdgeId e, const Rational& offset) const;
  /// Throws DomainError when the point does not belong to this curve.
  void validate(const Point& p) const;
  int weight_at(const Point& p) const { return p.is_vertex() ? vertex(p.vertex()).weight : 0; }
  std::vector<Point> vertex_points() const;

  /// Shortest-path distances from p to every vertex.
  std::vector<Rational> distances_to_vertices(const Point& p) const;
  Rational distance(const Point& a, const Point& b) const;

  std::string describe(const Point& p) const;

 private:
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeEnd>> incidence_;
};

int genus(const TropicalCurve& curve);

/// Same graph and lengths with every weight set to zero.
TropicalCurve underlying_pure(const TropicalCurve& curve);

/// Vertices plus n-1 equispaced interior points on every edge (n >= 1).
std::vector<Point> lattice_points(const TropicalCurve& curve, int n);

/// Pure curve obtained by attaching w(v) loops of length eps at every vertex v.
/// Original vertices and edges keep their ids; the loops are appended.
TropicalCurve attach_loops(const TropicalCurve& curve, const Rational& eps);

/// A refinement of a curve: same metric space, extra weight-0 vertices at cut points.
/// Original vertex ids are preserved; every original edge becomes a chain of pieces.
class Refinement {
 public:
  Refinement(const TropicalCurve& original, std::vector<std::vector<Rational>> cuts);

  const TropicalCurve& curve() const { return curve_; }
  Point forward(const Point& original_point) const;
  Point backward(const Point& refined_point) const;

 private:
  struct Pieces {
    std::vector<Rational> cuts;
    std::vector<VertexId> cut_vertices;
    std::vector<EdgeId> pieces;
  };
  const Pieces& pieces_of(EdgeId e) const { return pieces_.at(e.value); }

  std::vector<Pieces> pieces_;
  std::vector<std::pair<EdgeId, Rational>> origin_;  // refined edge -> (original edge, start offset)
  std::vector<std::optional<Point>> vertex_origin_;  // refined vertex -> original point
  TropicalCurve curve_;
};

/// Each interior mark becomes a weight-0 vertex.
Refinement subdivide(const TropicalCurve& curve, std::span<const Point> marks);

/// Splits every loop at its midpoint.
Refinement loopless_model(const TropicalCurve& curve);

/// Discrete datum (G, w) with a fixed edge order e_1..e_n.
class CombinatorialType {
 public:
  struct EdgeEnds {
    std::string name;
    VertexId tail;
    VertexId head;
  };

  CombinatorialType(std::vector<Vertex> vertices, std::vector<EdgeEnds> edges);
  static CombinatorialType of(const TropicalCurve& curve);

  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<EdgeEnds>& edges() const { return edges_; }
  std::size_t num_edges() const { return edges_.size(); }
  int genus() const;
  /// The curve of this type with every length 1.
  TropicalCurve unit_curve() const;

 private:
  std::vector<Vertex> vertices_;
  std::vector<EdgeEnds> edges_;
};

/// Point s of the cone R_{>=0}^n; zero entries mark contracted edges.
class ConeVector {
 public:
  explicit ConeVector(std::vector<Rational> entries);
  const std::vector<Rational>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  const Rational& operator[](std::size_t i) const { return entries_.at(i); }
  bool is_interior() const;

 private:
  std::vector<Rational> entries_;
};

/// Gamma_s together with the natural map from Gamma_(1,...,1).
class Realization {
 public:
  const TropicalCurve& curve() const { return curve_; }
  /// alpha_s (interior s) or the contraction beta (boundary s).
  Point map(const Point& unit_point) const;
  /// Some preimage of a point of Gamma_s on Gamma_(1,...,1).
  Point preimage(const Point& realized_point) const;
  VertexId vertex_image(VertexId v) const { return vertex_image_.at(v.value); }
  std::optional<EdgeId> edge_image(EdgeId e) const { return edge_image_.at(e.value); }
  /// Vertices of the unit curve collapsed onto realized vertex v.
  std::vector<VertexId> collapsed_onto(VertexId v) const;

 private:
  friend Realization realize(const CombinatorialType&, const ConeVector&);

  Realization(TropicalCurve curve, std::vector<VertexId> vertex_image, std::vector<std::optional<EdgeId>> edge_image,
              std::vector<Rational> scale, std::vector<VertexId> edge_base, std::vector<EdgeId> edge_origin);

  TropicalCurve curve_;
  std::vector<VertexId> vertex_image_;
  std::vector<std::optional<EdgeId>> edge_image_;
  std::vector<Rational> scale_;
  std::vector<VertexId> edge_base_;  // image of each edge's tail
  std::vector<EdgeId> edge_origin_;
};

/// Contracts edges with s_k = 0; collapsed subgraphs H_v give w_s(v) = g(H_v).
Realization realize(const CombinatorialType& type, const ConeVector& s);

/// Interior s only: l(e_i) = s_i, alpha_s scales offsets. Throws on a zero entry.
Realization rescale(const CombinatorialType& type, const ConeVector& s);

}  // namespace tropbn
