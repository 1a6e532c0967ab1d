#include "cremona/classification.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

namespace cremona {

std::string family_name(Family f) {
  switch (f) {
    case Family::I: return "I";
    case Family::II: return "II";
    case Family::III: return "III";
    default: return "none";
  }
}

namespace {

const ExponentMatrix& involution_matrix() {
  static const ExponentMatrix m = ExponentMatrix::parse("0,1,1;1,0,1;1,1,0");
  return m;
}

ExponentMatrix family_two(Int delta) {
  ExponentMatrix m;
  m(0, 2) = delta;
  m(1, 0) = 1;
  m(1, 1) = delta - 1;
  m(2, 1) = 1;
  m(2, 2) = delta - 1;
  return m;
}

ExponentMatrix permute_indep(const ExponentMatrix& m, const Permutation& rows,
                             const Permutation& cols) {
  ExponentMatrix out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) out(i, j) = m(rows[i], cols[j]);
  return out;
}

Int mod_inverse(Int a, Int n) {
  Int t = 0, new_t = 1, r = n, new_r = a % n;
  while (new_r != 0) {
    Int q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (r != 1) throw DomainError("not a unit: " + std::to_string(a));
  return ((t % n) + n) % n;
}

}  // namespace

Classification classify(const ExponentMatrix& m) {
  Classification out;
  ExponentMatrix red = reduce(m);
  try {
    out.delta = degree(red);
  } catch (const DomainError& err) {
    out.reason = err.what();
    return out;
  }
  const Int delta = out.delta;

  const auto& perms = all_permutations();
  // family I: the standard involution, up to independent row/column swaps
  for (const auto& pr : perms)
    for (const auto& pc : perms)
      if (permute_indep(red, pr, pc) == involution_matrix()) {
        out.is_cremona = true;
        out.family = Family::I;
        out.params = FamilyParams{1, 1, 1, 1, 0, 2};
        out.row_perm = pr;
        out.col_perm = pc;
        return out;
      }
  // family II: [0,0,d; 1,d-1,0; 0,1,d-1]
  if (delta >= 2) {
    const ExponentMatrix two = family_two(delta);
    for (const auto& pr : perms)
      for (const auto& pc : perms)
        if (permute_indep(red, pr, pc) == two) {
          out.is_cremona = true;
          out.family = Family::II;
          out.params = FamilyParams{1, delta - 1, 0, 1, delta - 1, delta};
          out.row_perm = pr;
          out.col_perm = pc;
          return out;
        }
  }
  // family III: [0,0,d; a,b,0; c,d,e] with ad-bc = 1
  for (const auto& pr : perms)
    for (const auto& pc : perms) {
      ExponentMatrix t = permute_indep(red, pr, pc);
      if (t(0, 0) != 0 || t(0, 1) != 0 || t(1, 2) != 0) continue;
      Int a = t(1, 0), b = t(1, 1), c = t(2, 0), d = t(2, 1), e = t(2, 2);
      if (checked_sub(checked_mul(a, d), checked_mul(b, c)) != 1) continue;
      out.is_cremona = true;
      out.family = Family::III;
      out.params = FamilyParams{a, b, c, d, e, delta};
      out.row_perm = pr;
      out.col_perm = pc;
      return out;
    }
  out.reason = "no Cremona normal form under row/column permutations";
  return out;
}

std::vector<ExponentMatrix> enumerate_cremona(Int delta) {
  if (delta < 2)
    throw DomainError("enumerate_cremona requires delta >= 2 (degree-1 maps are linear)");
  std::vector<ExponentMatrix> out;
  if (delta == 2) {
    out.push_back(involution_matrix());
    out.push_back(family_two(2));
  } else {
    out.push_back(family_two(delta));
    for (Int a = 2; a < delta; ++a) {
      if (std::gcd(a, delta) != 1) continue;
      Int e = (mod_inverse(a, delta) * (delta - 1)) % delta;
      Int r = (checked_mul(a, e) + 1) / delta;
      Int c = a - r;
      Int d = delta - c - e;
      Int b = delta - a;
      ExponentMatrix m;
      m(0, 2) = delta;
      m(1, 0) = a;
      m(1, 1) = b;
      m(2, 0) = c;
      m(2, 1) = d;
      m(2, 2) = e;
      if ((checked_mul(a, e) + 1) % delta != 0 || c <= 0 || d <= 0 ||
          checked_sub(checked_mul(a, d), checked_mul(b, c)) != 1)
        throw DomainError("internal: degenerate unit solution at a=" + std::to_string(a));
      out.push_back(m);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

ExponentMatrix canonical_form_independent(const ExponentMatrix& m) {
  ExponentMatrix best = m;
  for (const auto& pr : all_permutations())
    for (const auto& pc : all_permutations()) {
      ExponentMatrix cand = permute_indep(m, pr, pc);
      if (cand < best) best = cand;
    }
  return best;
}

std::vector<ExponentMatrix> brute_force_cremona(Int delta) {
  if (delta < 2) throw DomainError("brute_force_cremona requires delta >= 2");
  if (delta > 12)
    throw DomainError("brute_force_cremona is exhaustive; use enumerate_cremona beyond delta = 12");
  std::vector<std::array<Int, 3>> rows;
  for (Int x = 0; x <= delta; ++x)
    for (Int y = 0; x + y <= delta; ++y) rows.push_back({x, y, delta - x - y});
  std::vector<ExponentMatrix> found;
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
        if (!reduced) continue;
        if (multidegree(MonomialMap{m, delta}) != Multidegree{1, delta, 1}) continue;
        found.push_back(canonical_form_independent(m));
      }
  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());
  return found;
}

std::vector<ExponentMatrix> orbit(const ExponentMatrix& m) {
  std::vector<ExponentMatrix> out;
  for (const auto& sigma : all_permutations()) out.push_back(sigma_star(sigma, m));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

MonomialMap inverse(const MonomialMap& m) {
  Classification cls = classify(m.matrix);
  if (!cls.is_cremona)
    throw DomainError("cannot invert: not a Cremona transformation (" + cls.reason + ")");
  const ExponentMatrix& a = m.matrix;
  const Int delta = m.delta;
  Int det = determinant(a);
  Int sign = det < 0 ? -1 : 1;

  // sign(det) * adjugate; its rows sum to 1 and, column by column, its
  // entries agree mod delta, so a constant shift per column makes
  // adj/delta a nonnegative integer matrix: the inverse's exponents.
  ExponentMatrix q;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      int i1 = (j + 1) % 3, i2 = (j + 2) % 3;  // adj = transposed cofactors
      int j1 = (i + 1) % 3, j2 = (i + 2) % 3;
      Int cof = checked_sub(checked_mul(a(i1, j1), a(i2, j2)), checked_mul(a(i1, j2), a(i2, j1)));
      q(i, j) = checked_mul(sign, cof);
    }

  ExponentMatrix inv;
  for (int j = 0; j < 3; ++j) {
    Int residue = ((q(0, j) % delta) + delta) % delta;
    Int lowest = std::min({q(0, j), q(1, j), q(2, j)});
    for (int i = 0; i < 3; ++i)
      if (((q(i, j) % delta) + delta) % delta != residue)
        throw DomainError("internal: adjugate columns not congruent mod delta");
    Int shift = ((delta - residue) % delta);
    if (shift < -lowest) shift += delta * ((-lowest - shift + delta - 1) / delta);
    for (int i = 0; i < 3; ++i) inv(i, j) = (q(i, j) + shift) / delta;
  }
  return MonomialMap::from(inv);
}

std::vector<Int> degree_sequence(const MonomialMap& m, int n) {
  if (n < 1) throw DomainError("degree_sequence requires n >= 1");
  std::vector<Int> out;
  ExponentMatrix power = ExponentMatrix::identity();
  for (int k = 0; k < n; ++k) {
    power = compose(power, m.matrix);
    out.push_back(degree(power));
  }
  return out;
}

Int euler_totient(Int n) {
  if (n < 1) throw DomainError("totient of nonpositive argument");
  Int count = 0;
  for (Int k = 1; k <= n; ++k)
    if (std::gcd(k, n) == 1) ++count;
  return count;
}

}  // namespace cremona
