#include "cremona/polyhedron.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace cremona {

std::string Vec3::str() const {
  std::ostringstream os;
  os << '(' << c[0] << ',' << c[1] << ',' << c[2] << ')';
  return os.str();
}

Int dot(const Vec3& a, const Vec3& b) {
  return checked_add(checked_add(checked_mul(a[0], b[0]), checked_mul(a[1], b[1])),
                     checked_mul(a[2], b[2]));
}

Vec3 cross(const Vec3& a, const Vec3& b) {
  return Vec3{{checked_sub(checked_mul(a[1], b[2]), checked_mul(a[2], b[1])),
               checked_sub(checked_mul(a[2], b[0]), checked_mul(a[0], b[2])),
               checked_sub(checked_mul(a[0], b[1]), checked_mul(a[1], b[0]))}};
}

namespace {

bool is_zero(const Vec3& v) { return v[0] == 0 && v[1] == 0 && v[2] == 0; }

Vec3 gcd_normalize(Vec3 n) {
  Int g = std::gcd(std::gcd(std::abs(n[0]), std::abs(n[1])), std::abs(n[2]));
  if (g > 1)
    for (int i = 0; i < 3; ++i) n[i] /= g;
  return n;
}

std::vector<Vec3> spanning_vectors(const Cell& cell) {
  std::vector<Vec3> vecs;
  for (std::size_t i = 1; i < cell.points.size(); ++i)
    vecs.push_back(cell.points[i] - cell.points[0]);
  for (int r : cell.rays) vecs.push_back(axis_vec(r));
  return vecs;
}

int rank3(const std::vector<Vec3>& vecs) {
  bool any = false;
  for (const auto& v : vecs) any = any || !is_zero(v);
  if (!any) return 0;
  for (std::size_t i = 0; i < vecs.size(); ++i)
    for (std::size_t j = i + 1; j < vecs.size(); ++j) {
      Vec3 c = cross(vecs[i], vecs[j]);
      if (is_zero(c)) continue;
      for (std::size_t k = 0; k < vecs.size(); ++k)
        if (dot(c, vecs[k]) != 0) return 3;
      return 2;
    }
  return 1;
}

}  // namespace

Cell::Cell(std::vector<Vec3> pts, std::vector<int> rs) : points(std::move(pts)), rays(std::move(rs)) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  std::sort(rays.begin(), rays.end());
  rays.erase(std::unique(rays.begin(), rays.end()), rays.end());
}

bool Cell::has_point(const Vec3& p) const {
  return std::binary_search(points.begin(), points.end(), p);
}

std::string Cell::str() const {
  std::ostringstream os;
  os << '<';
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (i) os << ';';
    os << '(' << points[i][0] << ',' << points[i][1] << ',' << points[i][2] << ')';
  }
  os << '|';
  for (std::size_t i = 0; i < rays.size(); ++i) {
    if (i) os << ',';
    os << 'e' << rays[i] + 1;
  }
  os << '>';
  return os.str();
}

int cell_dim(const Cell& cell) { return rank3(spanning_vectors(cell)); }

// --- exact membership -------------------------------------------------------

namespace {

// Columns of the homogeneous system: [point;1] for each point, [ray;0] for
// each ray. q is a member iff the column cone/affine combination hits
// [q;1] with nonnegative coefficients. Any feasible point has a basic
// solution supported on linearly independent columns, so enumerating
// subsets of size <= 4 is exhaustive.
struct MemberSystem {
  std::vector<std::array<Rat, 4>> cols;
  std::array<Rat, 4> target;

  explicit MemberSystem(const Cell& cell, const RatVec& q) {
    for (const auto& p : cell.points)
      cols.push_back({Rat(p[0]), Rat(p[1]), Rat(p[2]), Rat(1)});
    for (int r : cell.rays) {
      Vec3 e = axis_vec(r);
      cols.push_back({Rat(e[0]), Rat(e[1]), Rat(e[2]), Rat(0)});
    }
    target = {q[0], q[1], q[2], Rat(1)};
  }

  // Solve the square-ish system restricted to column subset idx; returns
  // true and fills x when the full system is consistent with support idx
  // and the coefficients are uniquely determined.
  bool solve_subset(const std::vector<int>& idx, std::vector<Rat>& x) const {
    const int k = static_cast<int>(idx.size());
    std::array<std::array<Rat, 6>, 4> aug{};
    for (int row = 0; row < 4; ++row) {
      for (int j = 0; j < k; ++j) aug[row][j] = cols[idx[j]][row];
      aug[row][k] = target[row];
    }
    int r = 0;
    std::vector<int> pivot_col;
    for (int c = 0; c < k && r < 4; ++c) {
      int piv = -1;
      for (int i = r; i < 4; ++i)
        if (!aug[i][c].zero()) {
          piv = i;
          break;
        }
      if (piv < 0) continue;
      std::swap(aug[r], aug[piv]);
      for (int i = 0; i < 4; ++i) {
        if (i == r || aug[i][c].zero()) continue;
        Rat f = aug[i][c] / aug[r][c];
        for (int j = 0; j <= k; ++j) aug[i][j] = aug[i][j] - f * aug[r][j];
      }
      pivot_col.push_back(c);
      ++r;
    }
    for (int i = r; i < 4; ++i)
      if (!aug[i][k].zero()) return false;       // inconsistent
    if (static_cast<int>(pivot_col.size()) < k) return false;  // dependent columns
    x.assign(k, Rat(0));
    for (int i = 0; i < r; ++i) x[pivot_col[i]] = aug[i][k] / aug[i][pivot_col[i]];
    return true;
  }
};

}  // namespace

bool cell_contains(const Cell& cell, const RatVec& q) {
  MemberSystem sys(cell, q);
  const int nv = static_cast<int>(sys.cols.size());
  const int maxk = std::min(nv, 4);
  std::vector<Rat> x;
  for (int k = 1; k <= maxk; ++k) {
    std::vector<int> idx(k);
    // enumerate k-subsets of [0, nv)
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
      if (sys.solve_subset(idx, x) &&
          std::none_of(x.begin(), x.end(), [](const Rat& v) { return v.negative(); }))
        return true;
      int i = k - 1;
      while (i >= 0 && idx[i] == nv - k + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return false;
}

bool cell_contains_interior(const Cell& cell, const RatVec& q) {
  MemberSystem sys(cell, q);
  if (sys.cols.size() != 4) return false;
  std::vector<int> idx{0, 1, 2, 3};
  std::vector<Rat> x;
  if (!sys.solve_subset(idx, x)) return false;
  return std::all_of(x.begin(), x.end(),
                     [](const Rat& v) { return !v.negative() && !v.zero(); });
}

std::vector<Vec3> cell_vertices(const Cell& cell) {
  std::vector<Vec3> out;
  for (const auto& p : cell.points) {
    std::vector<Vec3> others;
    for (const auto& o : cell.points)
      if (o != p) others.push_back(o);
    if (others.empty()) {
      out.push_back(p);
      continue;
    }
    Cell rest(others, cell.rays);
    RatVec q{Rat(p[0]), Rat(p[1]), Rat(p[2])};
    if (!cell_contains(rest, q)) out.push_back(p);
  }
  return out;
}

// --- Newton polyhedron ------------------------------------------------------

namespace {

std::vector<Vec3> dedup_keep_order(const std::vector<Vec3>& gens) {
  std::vector<Vec3> out;
  for (const auto& g : gens)
    if (std::find(out.begin(), out.end(), g) == out.end()) out.push_back(g);
  return out;
}

NewtonPolyhedron build(const std::vector<Vec3>& rows) {
  NewtonPolyhedron n;
  n.generators = rows;
  std::vector<Vec3> gens = dedup_keep_order(rows);

  for (const auto& g : gens) {
    std::vector<Vec3> others;
    for (const auto& o : gens)
      if (o != g) others.push_back(o);
    bool vertex = true;
    if (!others.empty()) {
      Cell rest(others, {0, 1, 2});
      RatVec q{Rat(g[0]), Rat(g[1]), Rat(g[2])};
      vertex = !cell_contains(rest, q);
    }
    if (vertex) n.vertices.push_back(g);
  }

  // Candidate facet normals: cross products of pairs of edge directions.
  // Every facet plane contains two independent directions among the
  // generator differences and the coordinate rays, so this is exhaustive.
  std::vector<Vec3> dirs;
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      Vec3 d = gens[j] - gens[i];
      if (!is_zero(d)) dirs.push_back(d);
    }
  for (int r = 0; r < 3; ++r) dirs.push_back(axis_vec(r));

  std::map<Vec3, Facet> by_normal;
  for (std::size_t i = 0; i < dirs.size(); ++i)
    for (std::size_t j = i + 1; j < dirs.size(); ++j) {
      Vec3 c = cross(dirs[i], dirs[j]);
      if (is_zero(c)) continue;
      for (int sign = 0; sign < 2; ++sign) {
        Vec3 normal = c;
        if (sign)
          for (int k = 0; k < 3; ++k) normal[k] = -normal[k];
        // recession rays e1,e2,e3 must lie on the nonnegative side
        if (normal[0] < 0 || normal[1] < 0 || normal[2] < 0) continue;
        normal = gcd_normalize(normal);
        if (by_normal.count(normal)) continue;
        Int offset = dot(normal, gens[0]);
        for (const auto& g : gens) offset = std::min(offset, dot(normal, g));
        std::vector<Vec3> on_plane;
        for (const auto& g : gens)
          if (dot(normal, g) == offset) on_plane.push_back(g);
        std::vector<int> tight_rays;
        for (int r = 0; r < 3; ++r)
          if (normal[r] == 0) tight_rays.push_back(r);
        Cell cell(on_plane, tight_rays);
        if (cell_dim(cell) == 2) by_normal.emplace(normal, Facet{cell, normal, offset});
      }
    }
  for (auto& [normal, f] : by_normal) n.facets.push_back(f);
  return n;
}

}  // namespace

bool NewtonPolyhedron::is_vertex(const Vec3& p) const {
  return std::find(vertices.begin(), vertices.end(), p) != vertices.end();
}

NewtonPolyhedron newton_polyhedron(const MonomialMap& m) { return newton_polyhedron(m.matrix); }

NewtonPolyhedron newton_polyhedron(const ExponentMatrix& m) {
  std::vector<Vec3> rows;
  for (int r = 0; r < 3; ++r) rows.push_back(Vec3{{m(r, 0), m(r, 1), m(r, 2)}});
  return build(rows);
}

std::vector<Cell> facets_avoiding(const NewtonPolyhedron& n, const Vec3& p) {
  if (!n.is_vertex(p))
    throw DomainError("point is not a vertex of the Newton polyhedron");
  std::vector<Cell> out;
  for (const auto& f : n.facets)
    if (!f.cell.has_point(p)) out.push_back(f.cell);
  return out;
}

std::vector<Cell> faces_of(const Cell& cell) {
  const int dim = cell_dim(cell);
  if (dim == 0) return {};
  if (dim == 1) {
    std::vector<Cell> out;
    for (const auto& v : cell_vertices(cell)) out.push_back(Cell({v}, {}));
    return out;
  }
  if (dim != 2) throw DomainError("faces_of expects a cell of dimension <= 2");

  auto span = spanning_vectors(cell);
  Vec3 plane_normal{};
  for (std::size_t i = 0; i < span.size() && is_zero(plane_normal); ++i)
    for (std::size_t j = i + 1; j < span.size() && is_zero(plane_normal); ++j)
      plane_normal = cross(span[i], span[j]);

  std::vector<Vec3> dirs;
  for (std::size_t i = 0; i < cell.points.size(); ++i)
    for (std::size_t j = i + 1; j < cell.points.size(); ++j) {
      Vec3 d = cell.points[j] - cell.points[i];
      if (!is_zero(d)) dirs.push_back(d);
    }
  for (int r : cell.rays) dirs.push_back(axis_vec(r));

  std::vector<Cell> out;
  for (const auto& u : dirs) {
    Vec3 c = cross(plane_normal, u);
    if (is_zero(c)) continue;
    for (int sign = 0; sign < 2; ++sign) {
      Vec3 normal = c;
      if (sign)
        for (int k = 0; k < 3; ++k) normal[k] = -normal[k];
      bool rays_ok = true;
      for (int r : cell.rays) rays_ok = rays_ok && normal[r] >= 0;
      if (!rays_ok) continue;
      Int offset = dot(normal, cell.points[0]);
      for (const auto& p : cell.points) offset = std::min(offset, dot(normal, p));
      std::vector<Vec3> on_line;
      for (const auto& p : cell.points)
        if (dot(normal, p) == offset) on_line.push_back(p);
      std::vector<int> tight;
      for (int r : cell.rays)
        if (normal[r] == 0) tight.push_back(r);
      Cell face(on_line, tight);
      if (face.order() == cell.order()) continue;  // functional constant on cell
      if (cell_dim(face) != 1) continue;
      // minimal generators: drop points interior to the face
      std::vector<Vec3> verts = cell_vertices(face);
      Cell minimal(verts, face.rays);
      if (std::find(out.begin(), out.end(), minimal) == out.end()) out.push_back(minimal);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace cremona
