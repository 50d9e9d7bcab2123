#include "skewpbw/lattice.hpp"

#include <algorithm>
#include <utility>

#include "skewpbw/error.hpp"

namespace skewpbw {

namespace {

void normalize_sign(IntegerVector& v) {
  for (const auto& x : v) {
    if (x == 0) continue;
    if (x < 0) {
      for (auto& y : v) y = -y;
    }
    return;
  }
}

}  // namespace

LatticeRank integer_lattice_rank(const IntegerMatrix& vectors) {
  LatticeRank out;
  const std::size_t k = vectors.size();
  if (k == 0) return out;
  const std::size_t d = vectors.front().size();
  for (const auto& v : vectors) {
    if (v.size() != d) throw Error("DimensionMismatch", "lattice vectors have unequal lengths");
  }

  // Augmented rows [v_i | e_i]; only unimodular row operations are applied.
  IntegerMatrix rows(k, IntegerVector(d + k, 0));
  for (std::size_t i = 0; i < k; ++i) {
    std::copy(vectors[i].begin(), vectors[i].end(), rows[i].begin());
    rows[i][d + i] = 1;
  }

  std::size_t pivot = 0;
  for (std::size_t col = 0; col < d && pivot < k; ++col) {
    while (true) {
      // Smallest nonzero |entry| among the active rows moves to the pivot.
      std::size_t best = k;
      for (std::size_t i = pivot; i < k; ++i) {
        if (rows[i][col] == 0) continue;
        if (best == k || abs(rows[i][col]) < abs(rows[best][col])) best = i;
      }
      if (best == k) break;
      std::swap(rows[pivot], rows[best]);
      bool reduced = true;
      for (std::size_t i = pivot + 1; i < k; ++i) {
        if (rows[i][col] == 0) continue;
        Integer quot;
        mpz_fdiv_q(quot.get_mpz_t(), rows[i][col].get_mpz_t(), rows[pivot][col].get_mpz_t());
        for (std::size_t c = col; c < d + k; ++c) rows[i][c] -= quot * rows[pivot][c];
        if (rows[i][col] != 0) reduced = false;
      }
      if (reduced) {
        ++pivot;
        break;
      }
    }
  }

  out.rank = pivot;
  for (std::size_t i = pivot; i < k; ++i) {
    IntegerVector rel(rows[i].begin() + static_cast<std::ptrdiff_t>(d), rows[i].end());
    normalize_sign(rel);
    out.kernel.push_back(std::move(rel));
  }
  return out;
}

Integer determinant(IntegerMatrix m) {
  const std::size_t n = m.size();
  for (const auto& row : m) {
    if (row.size() != n) throw Error("NotSquare", "determinant of a non-square matrix");
  }
  if (n == 0) return 1;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

IntegerMatrix clear_denominators(const std::vector<std::vector<Rational>>& rows) {
  IntegerMatrix out;
  out.reserve(rows.size());
  for (const auto& row : rows) {
    Integer l = 1;
    for (const auto& x : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    IntegerVector scaled;
    scaled.reserve(row.size());
    for (const auto& x : row) scaled.push_back(Integer(x.get_num() * (l / x.get_den())));
    out.push_back(std::move(scaled));
  }
  return out;
}

IntegerMatrix transpose(const IntegerMatrix& m) {
  if (m.empty()) return {};
  IntegerMatrix t(m.front().size(), IntegerVector(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
  }
  return t;
}

}  // namespace skewpbw
