#ifndef CREMONA_MULTIDEGREE_HPP
#define CREMONA_MULTIDEGREE_HPP

#include "cremona/triangulation.hpp"

namespace cremona {

struct Multidegree {
  Int g0 = 0, g1 = 0, g2 = 0;
  auto operator<=>(const Multidegree&) const = default;
};

/// Coordinates of a simplicial cell's points restricted to the axes not in
/// its ray set. |S| points in |S|-1 coordinates.
std::vector<std::vector<Int>> project(const Cell& cell);

/// Normalized lattice volume of an i-simplex given as i+1 points in i
/// coordinates: a point counts 1, a segment its length, a triangle twice
/// its area. Degenerate simplices have volume 0.
Int normalized_volume(const std::vector<std::vector<Int>>& points);

/// Sum of normalized projected volumes over the triangulation cells,
/// bucketed by the size of the finite part.
Multidegree multidegree(const MonomialMap& m);
Multidegree multidegree(const MonomialMap& m, const Vec3& distinguished);
Multidegree multidegree_of(const Triangulation& t);

/// |det M| / delta: generic fiber count of the map on the torus; an oracle
/// for the top multidegree component. Throws on det = 0.
Int torus_degree(const MonomialMap& m);

}  // namespace cremona

#endif
