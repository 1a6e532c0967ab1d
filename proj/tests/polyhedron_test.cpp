#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "cremona/errors.hpp"
#include "helpers.hpp"

using namespace cremona;
using namespace cremona::testing;

namespace {

std::set<std::string> cell_strings(const std::vector<Cell>& cells) {
  std::set<std::string> out;
  for (const auto& c : cells) out.insert(c.str());
  return out;
}

RatVec rat_point(const Vec3& p) {
  return {Rat(p[0], 1), Rat(p[1], 1), Rat(p[2], 1)};
}

}  // namespace

TEST_CASE("cell normalization and serialization") {
  Cell c({v(0, 3, 0), v(0, 0, 3), v(0, 3, 0)}, {1, 0, 1});
  CHECK(c.points == std::vector<Vec3>{v(0, 0, 3), v(0, 3, 0)});
  CHECK(c.rays == std::vector<int>{0, 1});
  CHECK(c.order() == 4);
  CHECK(c.str() == "<(0,0,3);(0,3,0)|e1,e2>");
  CHECK(cell({v(1, 1, 1)}, {}).str() == "<(1,1,1)|>");
}

TEST_CASE("cell_dim") {
  CHECK(cell_dim(cell({v(1, 2, 3)}, {})) == 0);
  CHECK(cell_dim(cell({v(0, 0, 3)}, {2})) == 1);
  CHECK(cell_dim(cell({v(0, 0, 3), v(0, 3, 0)}, {0})) == 2);
  CHECK(cell_dim(cell({v(0, 0, 3)}, {0, 1, 2})) == 3);
  // collinear points add no dimension
  CHECK(cell_dim(cell({v(0, 0, 0), v(1, 1, 1), v(2, 2, 2)}, {})) == 1);
}

TEST_CASE("newton polyhedron of a triangle map") {
  // rows (2,0,1),(1,2,0),(0,1,2): all three generators are vertices
  auto n = newton_polyhedron(map_of("2,0,1;1,2,0;0,1,2"));
  CHECK(n.generators.size() == 3);
  CHECK(n.vertices.size() == 3);
  CHECK(n.is_vertex(v(2, 0, 1)));
  CHECK(n.is_vertex(v(1, 2, 0)));
  CHECK(n.is_vertex(v(0, 1, 2)));
  CHECK_FALSE(n.is_vertex(v(1, 1, 1)));
}

TEST_CASE("non-vertex generator is detected") {
  // (1,1,1) is the midpoint of (2,1,0) and (0,1,2)
  auto n = newton_polyhedron(map_of("1,1,1;2,1,0;0,1,2"));
  CHECK(n.generators.size() == 3);
  CHECK(n.vertices.size() == 2);
  CHECK_FALSE(n.is_vertex(v(1, 1, 1)));
}

TEST_CASE("facets support the polyhedron") {
  std::mt19937 rng(31);
  for (Int delta : {2, 3, 5}) {
    for (int it = 0; it < 20; ++it) {
      auto n = newton_polyhedron(
          MonomialMap::from(random_reduced_equidegree(rng, delta)));
      CHECK(!n.facets.empty());
      for (const auto& f : n.facets) {
        CHECK(cell_dim(f.cell) == 2);
        for (int i = 0; i < 3; ++i) CHECK(f.normal[i] >= 0);
        for (const auto& g : n.generators) {
          Int val = dot(f.normal, g);
          CHECK(val >= f.offset);
          if (f.cell.has_point(g)) CHECK(val == f.offset);
        }
        // facet generators are exactly the tight ones
        for (const auto& g : n.vertices)
          if (dot(f.normal, g) == f.offset) CHECK(f.cell.has_point(g));
        for (int r : f.cell.rays) CHECK(f.normal[r] == 0);
      }
    }
  }
}

TEST_CASE("facets_avoiding the distinguished vertex of a degree-5 map") {
  auto n = newton_polyhedron(map_of("0,0,5;4,1,0;3,1,1"));
  auto avoid = facets_avoiding(n, v(4, 1, 0));
  CHECK(cell_strings(avoid) ==
        std::set<std::string>{"<(0,0,5)|e1,e3>", "<(0,0,5)|e2,e3>",
                              "<(0,0,5);(3,1,1)|e2>"});
  CHECK_THROWS_AS(facets_avoiding(n, v(9, 9, 9)), DomainError);
}

TEST_CASE("faces_of an edge-like 2-cell") {
  auto faces = faces_of(cell({v(0, 3, 0), v(2, 1, 0)}, {0, 1}));
  CHECK(cell_strings(faces) ==
        std::set<std::string>{"<(0,3,0)|e2>", "<(2,1,0)|e1>", "<(0,3,0);(2,1,0)|>"});
}

TEST_CASE("faces_of lower-dimensional cells") {
  auto faces1 = faces_of(cell({v(0, 0, 5)}, {2}));
  CHECK(cell_strings(faces1) == std::set<std::string>{"<(0,0,5)|>"});
  auto faces0 = faces_of(cell({v(0, 0, 5)}, {}));
  CHECK(faces0.empty());
}

TEST_CASE("cell_contains handles hull and recession directions") {
  auto c = cell({v(0, 0, 3), v(0, 3, 0)}, {0});
  CHECK(cell_contains(c, rat_point(v(0, 0, 3))));
  CHECK(cell_contains(c, {Rat(0), Rat(3, 2), Rat(3, 2)}));
  CHECK(cell_contains(c, {Rat(7), Rat(3, 2), Rat(3, 2)}));
  CHECK_FALSE(cell_contains(c, {Rat(-1, 2), Rat(3, 2), Rat(3, 2)}));
  CHECK_FALSE(cell_contains(c, {Rat(0), Rat(0), Rat(0)}));
  CHECK_FALSE(cell_contains(c, {Rat(0), Rat(2), Rat(2)}));
}

TEST_CASE("cell_contains_interior is strict") {
  auto c = cell({v(0, 0, 3)}, {0, 1, 2});
  CHECK(cell_contains_interior(c, {Rat(1, 2), Rat(1, 2), Rat(7, 2)}));
  // boundary: a zero ray coefficient
  CHECK_FALSE(cell_contains_interior(c, {Rat(0), Rat(1), Rat(4)}));
  // the apex itself has zero ray coefficients
  CHECK_FALSE(cell_contains_interior(c, rat_point(v(0, 0, 3))));
}

TEST_CASE("cell_vertices drops redundant generators") {
  auto vs = cell_vertices(cell({v(0, 0, 0), v(1, 1, 1), v(2, 2, 2)}, {}));
  CHECK(vs == std::vector<Vec3>{v(0, 0, 0), v(2, 2, 2)});
}

TEST_CASE("vertices lie on some facet, interior generators on none") {
  std::mt19937 rng(37);
  for (int it = 0; it < 30; ++it) {
    auto n = newton_polyhedron(MonomialMap::from(random_reduced_equidegree(rng, 4)));
    for (const auto& p : n.vertices) {
      int tight = 0;
      for (const auto& f : n.facets)
        if (dot(f.normal, p) == f.offset) ++tight;
      CHECK(tight >= 3);
    }
  }
}
