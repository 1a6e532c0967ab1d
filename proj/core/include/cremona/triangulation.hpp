#ifndef CREMONA_TRIANGULATION_HPP
#define CREMONA_TRIANGULATION_HPP

#include "cremona/polyhedron.hpp"

namespace cremona {

/// Pulling triangulation of a Newton polyhedron: simplicial cells of
/// order 4, each containing the distinguished vertex.
struct Triangulation {
  std::vector<Cell> cells;
  Vec3 distinguished;
};

/// Pulling scheme: start with <p; e1,e2,e3>, then cone p over the
/// recursively triangulated facets avoiding p. Throws when p is not a vertex.
Triangulation triangulate(const NewtonPolyhedron& n, const Vec3& p);

/// Same with p the lexicographically smallest vertex.
Triangulation triangulate_default(const NewtonPolyhedron& n);

}  // namespace cremona

#endif
