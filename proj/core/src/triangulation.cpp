#include "cremona/triangulation.hpp"

#include <algorithm>

namespace cremona {

namespace {

// Triangulate a face of dimension dim into simplicial pieces of order
// dim+1 by pulling its lexicographically smallest vertex.
std::vector<Cell> pull(const Cell& cell, int dim) {
  if (cell.order() == dim + 1) return {cell};

  std::vector<Vec3> verts = cell_vertices(cell);
  if (verts.empty()) throw DomainError("cannot triangulate a cell without vertices");
  Vec3 q = *std::min_element(verts.begin(), verts.end());

  std::vector<Cell> out;
  // The translated recession cone q + cone(V) is a full-dimensional piece
  // only when the recession cone itself has dimension dim.
  if (static_cast<int>(cell.rays.size()) == dim) out.push_back(Cell({q}, cell.rays));

  for (const auto& face : faces_of(cell)) {
    if (face.has_point(q)) continue;
    for (const auto& piece : pull(face, dim - 1)) {
      std::vector<Vec3> pts = piece.points;
      pts.push_back(q);
      out.push_back(Cell(pts, piece.rays));
    }
  }
  return out;
}

}  // namespace

Triangulation triangulate(const NewtonPolyhedron& n, const Vec3& p) {
  Triangulation t;
  t.distinguished = p;
  t.cells.push_back(Cell({p}, {0, 1, 2}));
  for (const auto& facet : facets_avoiding(n, p)) {
    for (const auto& piece : pull(facet, 2)) {
      std::vector<Vec3> pts = piece.points;
      pts.push_back(p);
      t.cells.push_back(Cell(pts, piece.rays));
    }
  }
  std::sort(t.cells.begin(), t.cells.end());
  return t;
}

Triangulation triangulate_default(const NewtonPolyhedron& n) {
  if (n.vertices.empty()) throw DomainError("Newton polyhedron has no vertex");
  Vec3 p = *std::min_element(n.vertices.begin(), n.vertices.end());
  return triangulate(n, p);
}

}  // namespace cremona
