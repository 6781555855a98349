#pragma once

#include <vector>

#include "tropbn/curve.hpp"
#include "tropbn/divisor.hpp"

namespace tropbn::checks {

/// Finite multigraph given by its adjacency multiplicities; loops dropped.
struct FiniteGraph {
  std::vector<std::vector<long>> mult;
  std::size_t size() const { return mult.size(); }
  long valence(std::size_t v) const;
};

/// Every edge subdivided once: vertices of the curve first, then one midpoint per edge.
/// Loops become a pair of parallel edges, so nothing is lost.
FiniteGraph midpoint_subdivision(const TropicalCurve& curve);

/// Greedy borrowing test: is d equivalent to an effective divisor on g?
bool greedy_effective(const FiniteGraph& g, std::vector<long> d);

/// Baker-Norine rank on g by enumerating every effective E on the vertices.
int brute_force_rank(const FiniteGraph& g, const std::vector<long>& d);

/// Vertex-supported divisor on the curve as a chip vector on midpoint_subdivision(curve).
std::vector<long> chip_vector(const TropicalCurve& curve, const Divisor& d);

/// Connected pure multigraphs (loops allowed) with unit lengths, one per isomorphism class.
std::vector<TropicalCurve> small_graphs(int max_vertices, int max_edges);

}  // namespace tropbn::checks
