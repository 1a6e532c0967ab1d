#ifndef CREMONA_MATRIX_HPP
#define CREMONA_MATRIX_HPP

#include <array>
#include <compare>
#include <string>
#include <string_view>

#include "cremona/int_math.hpp"

namespace cremona {

/// 3x3 nonnegative integer exponent matrix of a monomial self-map of the
/// plane. Rows are the three monomials, columns the three variables.
struct ExponentMatrix {
  std::array<std::array<Int, 3>, 3> a{};

  Int& operator()(int r, int c) { return a[r][c]; }
  Int operator()(int r, int c) const { return a[r][c]; }

  auto operator<=>(const ExponentMatrix&) const = default;

  static ExponentMatrix identity();

  /// Text form "a,b,c;d,e,f;g,h,i".
  static ExponentMatrix parse(std::string_view text);
  std::string str() const;
};

/// Row/column index permutation of {0,1,2}. perm[i] = source index of slot i.
using Permutation = std::array<int, 3>;

inline constexpr Permutation kIdentityPerm{0, 1, 2};
const std::array<Permutation, 6>& all_permutations();

/// Subtract each column's minimum; normal form of the underlying map.
ExponentMatrix reduce(const ExponentMatrix& m);

/// Common row sum; throws DomainError when the three row sums differ.
Int degree(const ExponentMatrix& m);

/// Signed exact 3x3 determinant.
Int determinant(const ExponentMatrix& m);

/// Exponent matrix of outer o inner, reduced.
ExponentMatrix compose(const ExponentMatrix& outer, const ExponentMatrix& inner);

/// Permute rows and columns by the same sigma (conjugation by a
/// permutation matrix).
ExponentMatrix sigma_star(const Permutation& sigma, const ExponentMatrix& m);

Permutation compose_perm(const Permutation& sigma, const Permutation& tau);

/// Lexicographically least element of the simultaneous-permutation orbit.
ExponentMatrix canonical_form(const ExponentMatrix& m);

/// Equidegree reduced map: matrix plus its degree.
struct MonomialMap {
  ExponentMatrix matrix;
  Int delta = 0;

  /// Validates equal row sums, stores the reduced matrix.
  static MonomialMap from(const ExponentMatrix& m);
};

}  // namespace cremona

#endif
