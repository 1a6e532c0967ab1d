#include "cremona/matrix.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <vector>

namespace cremona {

ExponentMatrix ExponentMatrix::identity() {
  ExponentMatrix m;
  for (int i = 0; i < 3; ++i) m(i, i) = 1;
  return m;
}

namespace {

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (true) {
    std::size_t next = s.find(sep, pos);
    if (next == std::string_view::npos) {
      out.push_back(s.substr(pos));
      return out;
    }
    out.push_back(s.substr(pos, next - pos));
    pos = next + 1;
  }
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

ExponentMatrix ExponentMatrix::parse(std::string_view text) {
  auto rows = split(text, ';');
  if (rows.size() != 3)
    throw ParseError("expected 3 rows, got " + std::to_string(rows.size()));
  ExponentMatrix m;
  for (int r = 0; r < 3; ++r) {
    auto cols = split(rows[r], ',');
    if (cols.size() != 3)
      throw ParseError("row " + std::to_string(r + 1) + ": expected 3 entries, got " +
                       std::to_string(cols.size()));
    for (int c = 0; c < 3; ++c) {
      std::string_view tok = trim(cols[c]);
      Int v = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw ParseError("row " + std::to_string(r + 1) + ", column " + std::to_string(c + 1) +
                         ": not an integer: '" + std::string(tok) + "'");
      if (v < 0)
        throw ParseError("row " + std::to_string(r + 1) + ", column " + std::to_string(c + 1) +
                         ": negative entry " + std::to_string(v));
      m(r, c) = v;
    }
  }
  return m;
}

std::string ExponentMatrix::str() const {
  std::ostringstream os;
  for (int r = 0; r < 3; ++r) {
    if (r) os << ';';
    for (int c = 0; c < 3; ++c) {
      if (c) os << ',';
      os << a[r][c];
    }
  }
  return os.str();
}

const std::array<Permutation, 6>& all_permutations() {
  static const std::array<Permutation, 6> perms = [] {
    std::array<Permutation, 6> out;
    Permutation p{0, 1, 2};
    int i = 0;
    do out[i++] = p;
    while (std::next_permutation(p.begin(), p.end()));
    return out;
  }();
  return perms;
}

ExponentMatrix reduce(const ExponentMatrix& m) {
  ExponentMatrix out = m;
  for (int c = 0; c < 3; ++c) {
    Int lo = std::min({m(0, c), m(1, c), m(2, c)});
    for (int r = 0; r < 3; ++r) out(r, c) -= lo;
  }
  return out;
}

Int degree(const ExponentMatrix& m) {
  std::array<Int, 3> sums{};
  for (int r = 0; r < 3; ++r)
    sums[r] = checked_add(checked_add(m(r, 0), m(r, 1)), m(r, 2));
  if (sums[0] != sums[1] || sums[0] != sums[2])
    throw DomainError("not equidegree: row sums " + std::to_string(sums[0]) + ", " +
                      std::to_string(sums[1]) + ", " + std::to_string(sums[2]));
  return sums[0];
}

Int determinant(const ExponentMatrix& m) {
  Int t0 = checked_mul(m(0, 0), checked_sub(checked_mul(m(1, 1), m(2, 2)),
                                            checked_mul(m(1, 2), m(2, 1))));
  Int t1 = checked_mul(m(0, 1), checked_sub(checked_mul(m(1, 0), m(2, 2)),
                                            checked_mul(m(1, 2), m(2, 0))));
  Int t2 = checked_mul(m(0, 2), checked_sub(checked_mul(m(1, 0), m(2, 1)),
                                            checked_mul(m(1, 1), m(2, 0))));
  return checked_add(checked_sub(t0, t1), t2);
}

ExponentMatrix compose(const ExponentMatrix& outer, const ExponentMatrix& inner) {
  degree(outer);
  degree(inner);
  ExponentMatrix prod;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Int s = 0;
      for (int k = 0; k < 3; ++k) s = checked_add(s, checked_mul(outer(i, k), inner(k, j)));
      prod(i, j) = s;
    }
  return reduce(prod);
}

ExponentMatrix sigma_star(const Permutation& sigma, const ExponentMatrix& m) {
  ExponentMatrix out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) out(i, j) = m(sigma[i], sigma[j]);
  return out;
}

Permutation compose_perm(const Permutation& sigma, const Permutation& tau) {
  // (sigma tau)[i] = tau[sigma[i]]: apply sigma's relabeling, then tau's.
  return {tau[sigma[0]], tau[sigma[1]], tau[sigma[2]]};
}

ExponentMatrix canonical_form(const ExponentMatrix& m) {
  ExponentMatrix best = m;
  for (const auto& sigma : all_permutations()) {
    ExponentMatrix cand = sigma_star(sigma, m);
    if (cand < best) best = cand;
  }
  return best;
}

MonomialMap MonomialMap::from(const ExponentMatrix& m) {
  degree(m);
  ExponentMatrix red = reduce(m);
  return MonomialMap{red, degree(red)};
}

}  // namespace cremona
