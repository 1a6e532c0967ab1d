#include "cremona/multidegree.hpp"

#include <algorithm>

namespace cremona {

std::vector<std::vector<Int>> project(const Cell& cell) {
  if (cell.order() != 4) throw DomainError("project expects a simplicial (order-4) cell");
  std::vector<int> keep;
  for (int axis = 0; axis < 3; ++axis)
    if (std::find(cell.rays.begin(), cell.rays.end(), axis) == cell.rays.end())
      keep.push_back(axis);
  std::vector<std::vector<Int>> out;
  for (const auto& p : cell.points) {
    std::vector<Int> coords;
    for (int axis : keep) coords.push_back(p[axis]);
    out.push_back(coords);
  }
  return out;
}

Int normalized_volume(const std::vector<std::vector<Int>>& points) {
  if (points.empty() || points.size() > 3)
    throw DomainError("normalized_volume expects 1 to 3 points");
  const std::size_t i = points.size() - 1;
  for (const auto& p : points)
    if (p.size() != i)
      throw DomainError("normalized_volume: expected " + std::to_string(i + 1) +
                        " points in " + std::to_string(i) + " coordinates");
  if (i == 0) return 1;
  if (i == 1) return std::abs(checked_sub(points[1][0], points[0][0]));
  // |det| of the 2x2 edge matrix, i.e. i! times the Lebesgue area
  Int ax = checked_sub(points[1][0], points[0][0]);
  Int ay = checked_sub(points[1][1], points[0][1]);
  Int bx = checked_sub(points[2][0], points[0][0]);
  Int by = checked_sub(points[2][1], points[0][1]);
  return std::abs(checked_sub(checked_mul(ax, by), checked_mul(ay, bx)));
}

Multidegree multidegree_of(const Triangulation& t) {
  Multidegree g;
  for (const auto& cell : t.cells) {
    Int vol = normalized_volume(project(cell));
    switch (cell.points.size()) {
      case 1: g.g0 = checked_add(g.g0, vol); break;
      case 2: g.g1 = checked_add(g.g1, vol); break;
      default: g.g2 = checked_add(g.g2, vol); break;
    }
  }
  return g;
}

Multidegree multidegree(const MonomialMap& m) {
  return multidegree_of(triangulate_default(newton_polyhedron(m)));
}

Multidegree multidegree(const MonomialMap& m, const Vec3& distinguished) {
  return multidegree_of(triangulate(newton_polyhedron(m), distinguished));
}

Int torus_degree(const MonomialMap& m) {
  Int det = determinant(m.matrix);
  if (det == 0) throw DomainError("non-dominant map: determinant is zero");
  const auto& a = m.matrix;
  // dehomogenize by the third variable, compare rows B,C against A
  Int r10 = checked_sub(a(1, 0), a(0, 0));
  Int r11 = checked_sub(a(1, 1), a(0, 1));
  Int r20 = checked_sub(a(2, 0), a(0, 0));
  Int r21 = checked_sub(a(2, 1), a(0, 1));
  return std::abs(checked_sub(checked_mul(r10, r21), checked_mul(r11, r20)));
}

}  // namespace cremona
