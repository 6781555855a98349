#pragma once

#include <memory>
#include <set>
#include <vector>

#include "tropbn/curve.hpp"

namespace tropbn {

/// Closed segment [lo, hi] of an edge, offsets from the tail. lo == hi is a single interior point.
struct Interval {
  Rational lo;
  Rational hi;
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// A tangent direction at a boundary point of a subcurve that leaves the subcurve.
/// `forward` means the offset along `edge` increases when moving away from `base`.
struct Direction {
  Point base;
  EdgeId edge;
  Rational base_offset;
  bool forward;
};

/// A standalone curve built from a subcurve, with maps to and from the parent.
class SubcurveModel {
 public:
  SubcurveModel(TropicalCurve curve, std::vector<Point> vertex_origin, std::vector<std::pair<EdgeId, Rational>> edge_origin)
      : curve_(std::move(curve)), vertex_origin_(std::move(vertex_origin)), edge_origin_(std::move(edge_origin)) {}

  const TropicalCurve& curve() const { return curve_; }
  Point to_parent(const Point& p) const;
  /// Throws DomainError if the parent point is not in the subcurve.
  Point from_parent(const TropicalCurve& parent, const Point& p) const;

 private:
  TropicalCurve curve_;
  std::vector<Point> vertex_origin_;
  std::vector<std::pair<EdgeId, Rational>> edge_origin_;  // (parent edge, offset of this edge's tail)
};

/// Connected closed subset of a curve: a vertex set plus closed segments of edges.
/// Stored normalized: per edge, sorted disjoint intervals; segments reaching an edge end
/// put that end vertex into the vertex set; end-only segments are dropped.
class Subcurve {
 public:
  Subcurve(std::shared_ptr<const TropicalCurve> parent, std::set<VertexId> vertices,
           std::vector<std::vector<Interval>> intervals);

  static Subcurve whole(std::shared_ptr<const TropicalCurve> parent);
  static Subcurve point(std::shared_ptr<const TropicalCurve> parent, const Point& p);
  /// The given vertices together with every edge joining two of them.
  static Subcurve induced(std::shared_ptr<const TropicalCurve> parent, const std::set<VertexId>& vertices);

  const TropicalCurve& parent() const { return *parent_; }
  const std::shared_ptr<const TropicalCurve>& parent_ptr() const { return parent_; }
  const std::set<VertexId>& vertices() const { return vertices_; }
  const std::vector<Interval>& intervals(EdgeId e) const { return intervals_.at(e.value); }
  bool contains_whole_edge(EdgeId e) const;

  bool contains(const Point& p) const;
  bool contains(const Subcurve& other) const;
  friend bool operator==(const Subcurve& a, const Subcurve& b) {
    return a.vertices_ == b.vertices_ && a.intervals_ == b.intervals_;
  }

  std::vector<Direction> outward_directions() const;
  /// Points with at least one outward direction, sorted and unique.
  std::vector<Point> boundary() const;
  int betti() const;
  int genus() const;
  Rational length() const;
  /// Weighted vertices of the parent that lie outside this subcurve.
  std::vector<VertexId> weighted_vertices_outside() const;
  SubcurveModel model() const;
  std::string describe() const;

 private:
  std::shared_ptr<const TropicalCurve> parent_;
  std::set<VertexId> vertices_;
  std::vector<std::vector<Interval>> intervals_;
};

/// Distance from the subcurve to every vertex of the parent.
std::vector<Rational> distances_from(const Subcurve& lambda);
Rational distance_to(const Subcurve& lambda, const Point& p);

/// Closed delta-neighbourhood N_delta(lambda).
Subcurve neighborhood(const Subcurve& lambda, const Rational& delta);

/// True iff n contains lambda and the closure of n minus lambda is a disjoint union of
/// trees each meeting lambda in one point. Decided via b1(n) == b1(lambda).
bool deformation_retracts(const Subcurve& n, const Subcurve& lambda);

}  // namespace tropbn
