#pragma once

#include <vector>

#include "tropbn/curve.hpp"
#include "tropbn/divisor.hpp"

namespace tropbn {

/// Fundamental cycles of the BFS spanning tree from the first vertex (neighbours in edge order).
/// Each cycle is an integer vector over the edges: +1 on its non-tree edge (tail to head),
/// then the tree path back with signs given by edge orientation.
struct CycleBasis {
  std::vector<std::vector<long>> cycles;
  std::vector<bool> tree_edge;
  std::size_t genus() const { return cycles.size(); }
};

CycleBasis cycle_basis(const TropicalCurve& curve);

/// C_i^s = (s_1 a_i1, ..., s_n a_in).
std::vector<std::vector<Rational>> scale_cycles(const CycleBasis& basis, const ConeVector& s);

/// Q_ij = sum_e l(e) a_ie a_je.
std::vector<std::vector<Rational>> gram_matrix(const TropicalCurve& curve, const CycleBasis& basis);

/// Torus coordinates in [0,1)^g of a degree-0 divisor on the underlying metric graph.
/// The basepoint only fixes the convention; degree-0 classes do not depend on it.
std::vector<Rational> abel_jacobi(const TropicalCurve& curve, const Divisor& d, const Point& basepoint);

struct UniversalCoords {
  ConeVector s;
  std::vector<Rational> t;
  long degree = 0;
  Point basepoint;
};

/// (s, AJ(D - d * image(p))) with the cycle basis of Gamma_s; cycles that contract away do not appear.
UniversalCoords universal_coords(const CombinatorialType& type, const ConeVector& s, const Divisor& d,
                                 const Point& unit_basepoint);

/// Pushes every chip through the rescaling or contraction map.
Divisor pushforward_class(const Realization& realization, const Divisor& d);

}  // namespace tropbn
