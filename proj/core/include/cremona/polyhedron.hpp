#ifndef CREMONA_POLYHEDRON_HPP
#define CREMONA_POLYHEDRON_HPP

#include <array>
#include <compare>
#include <string>
#include <vector>

#include "cremona/matrix.hpp"

namespace cremona {

/// Point of exponent space.
struct Vec3 {
  std::array<Int, 3> c{};

  Int operator[](int i) const { return c[i]; }
  Int& operator[](int i) { return c[i]; }
  auto operator<=>(const Vec3&) const = default;

  std::string str() const;

  friend Vec3 operator-(const Vec3& a, const Vec3& b) {
    return Vec3{{checked_sub(a[0], b[0]), checked_sub(a[1], b[1]), checked_sub(a[2], b[2])}};
  }
};

inline Vec3 axis_vec(int axis) {
  Vec3 v;
  v[axis] = 1;
  return v;
}

Int dot(const Vec3& a, const Vec3& b);
Vec3 cross(const Vec3& a, const Vec3& b);

/// ch(points) + cone(rays), rays drawn from the standard basis.
/// points sorted and distinct, rays a sorted subset of {0,1,2}.
struct Cell {
  std::vector<Vec3> points;
  std::vector<int> rays;

  Cell() = default;
  Cell(std::vector<Vec3> pts, std::vector<int> rs);

  int order() const { return static_cast<int>(points.size() + rays.size()); }
  bool has_point(const Vec3& p) const;

  auto operator<=>(const Cell&) const = default;

  /// "<(0,0,3);(0,3,0)|e1,e2>"
  std::string str() const;
};

/// Affine dimension of a cell (0..3).
int cell_dim(const Cell& cell);

/// Facet of the Newton polyhedron together with its inward supporting data:
/// n.g >= offset on the whole polyhedron, equality on the facet, n >= 0.
struct Facet {
  Cell cell;
  Vec3 normal;
  Int offset = 0;
};

struct NewtonPolyhedron {
  std::vector<Vec3> generators;  ///< the rows A,B,C, duplicates kept
  std::vector<Vec3> vertices;    ///< generators that are genuine 0-faces
  std::vector<Facet> facets;
  static constexpr int dimension = 3;

  bool is_vertex(const Vec3& p) const;
};

NewtonPolyhedron newton_polyhedron(const MonomialMap& m);
NewtonPolyhedron newton_polyhedron(const ExponentMatrix& m);

/// Facets whose generator set excludes vertex p. Throws when p is not a vertex.
std::vector<Cell> facets_avoiding(const NewtonPolyhedron& n, const Vec3& p);

/// Codimension-1 faces of a cell of dimension <= 2, with minimal generators.
std::vector<Cell> faces_of(const Cell& cell);

/// Rational point in exponent space.
using RatVec = std::array<Rat, 3>;

/// Exact membership of q in ch(points)+cone(rays).
bool cell_contains(const Cell& cell, const RatVec& q);

/// Membership with every barycentric/ray coefficient strictly positive.
/// Only meaningful for full-dimensional simplicial cells.
bool cell_contains_interior(const Cell& cell, const RatVec& q);

/// Vertices (0-faces) of a cell, i.e. points not contained in the hull of
/// the remaining generators.
std::vector<Vec3> cell_vertices(const Cell& cell);

}  // namespace cremona

#endif
