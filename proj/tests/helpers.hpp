#ifndef CREMONA_TEST_HELPERS_HPP
#define CREMONA_TEST_HELPERS_HPP

#include <random>
#include <vector>

#include "cremona/classification.hpp"

namespace cremona::testing {

inline ExponentMatrix mat(const char* text) { return ExponentMatrix::parse(text); }

inline MonomialMap map_of(const char* text) { return MonomialMap::from(mat(text)); }

inline Cell cell(std::vector<Vec3> pts, std::vector<int> rays) {
  return Cell(std::move(pts), std::move(rays));
}

inline Vec3 v(Int x, Int y, Int z) { return Vec3{{x, y, z}}; }

/// All reduced matrices whose three rows each sum to delta.
inline std::vector<ExponentMatrix> reduced_equidegree(Int delta) {
  std::vector<std::array<Int, 3>> rows;
  for (Int x = 0; x <= delta; ++x)
    for (Int y = 0; x + y <= delta; ++y) rows.push_back({x, y, delta - x - y});
  std::vector<ExponentMatrix> out;
  for (const auto& r0 : rows)
    for (const auto& r1 : rows)
      for (const auto& r2 : rows) {
        ExponentMatrix m;
        for (int c = 0; c < 3; ++c) {
          m(0, c) = r0[c];
          m(1, c) = r1[c];
          m(2, c) = r2[c];
        }
        bool reduced = true;
        for (int c = 0; c < 3 && reduced; ++c)
          reduced = std::min({m(0, c), m(1, c), m(2, c)}) == 0;
        if (reduced) out.push_back(m);
      }
  return out;
}

inline ExponentMatrix random_matrix(std::mt19937& rng, Int max_entry = 9) {
  std::uniform_int_distribution<Int> dist(0, max_entry);
  ExponentMatrix m;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) m(r, c) = dist(rng);
  return m;
}

/// Random reduced equidegree matrix of degree delta, or nullopt-ish retry
/// until one is found.
inline ExponentMatrix random_reduced_equidegree(std::mt19937& rng, Int delta) {
  std::uniform_int_distribution<Int> dist(0, delta);
  while (true) {
    ExponentMatrix m;
    for (int r = 0; r < 3; ++r) {
      Int x = dist(rng), y = dist(rng);
      if (x + y > delta) continue;
      m(r, 0) = x;
      m(r, 1) = y;
      m(r, 2) = delta - x - y;
    }
    bool ok = true;
    for (int r = 0; r < 3; ++r)
      ok = ok && m(r, 0) + m(r, 1) + m(r, 2) == delta;
    for (int c = 0; c < 3 && ok; ++c)
      ok = std::min({m(0, c), m(1, c), m(2, c)}) == 0;
    if (ok) return m;
  }
}

}  // namespace cremona::testing

#endif
