#ifndef CREMONA_CLASSIFICATION_HPP
#define CREMONA_CLASSIFICATION_HPP

#include <optional>
#include <string>

#include "cremona/multidegree.hpp"

namespace cremona {

enum class Family { I, II, III, None };

std::string family_name(Family f);

/// Parameters of the normal form
///   [0,0,delta; a,b,0; c,d,e]
/// with a+b = delta, c+d+e = delta, ad-bc = 1 (family II is the c=0
/// instance a=d=1).
struct FamilyParams {
  Int a = 0, b = 0, c = 0, d = 0, e = 0;
  Int delta = 0;
};

struct Classification {
  bool is_cremona = false;
  Family family = Family::None;
  Int delta = 0;  ///< common row sum of the reduced input (0 when invalid)
  std::optional<FamilyParams> params;
  /// Row and column permutations taking the input to the family normal form.
  Permutation row_perm = kIdentityPerm;
  Permutation col_perm = kIdentityPerm;
  std::string reason;  ///< set when not Cremona
};

/// Decide Cremona-ness by the closed-form normal-form criteria, searching
/// all independent row/column permutations.
Classification classify(const ExponentMatrix& m);

/// One representative per normal form of degree delta (delta >= 2).
/// Sorted, deduplicated; size phi(delta) for delta >= 3, 2 for delta = 2.
std::vector<ExponentMatrix> enumerate_cremona(Int delta);

/// Independent oracle: exhaustive scan of all reduced equidegree matrices,
/// keeping those with multidegree (1,delta,1), deduplicated by canonical
/// form under independent row and column permutations. delta <= 12.
std::vector<ExponentMatrix> brute_force_cremona(Int delta);

/// Canonical representative under independent row and column permutations
/// (lex-least over all 36 images).
ExponentMatrix canonical_form_independent(const ExponentMatrix& m);

/// The <= 6 distinct images under the simultaneous permutation action.
std::vector<ExponentMatrix> orbit(const ExponentMatrix& m);

/// Exponent matrix of the inverse map. Throws unless m is Cremona.
MonomialMap inverse(const MonomialMap& m);

/// Degrees d_1..d_n of the reduced compositional powers of m.
std::vector<Int> degree_sequence(const MonomialMap& m, int n);

Int euler_totient(Int n);

}  // namespace cremona

#endif
