#pragma once

#include "shiftarg/rational.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace shiftarg {

/* Matrix algorithms over an arbitrary (possibly noncommutative) ring R.
 * Products are always taken in the written order, which is what makes the
 * column-determinant and the projected traces well defined.  R needs
 * operator+, operator*, operator*(Rational) and is_zero(); the zero element
 * is derived from an entry, so matrices must be nonempty. */

template <class R>
using RMatrix = std::vector<std::vector<R>>;

namespace detail {

template <class R>
R zero_like(const RMatrix<R>& m) {
  if (m.empty() || m[0].empty()) throw std::invalid_argument("empty matrix");
  return m[0][0] * Rational(0);
}

inline int permutation_sign(const std::vector<int>& p) {
  int inv = 0;
  for (size_t i = 0; i < p.size(); ++i)
    for (size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++inv;
  return inv % 2 == 0 ? 1 : -1;
}

template <class Fn>
void for_each_permutation(int m, Fn&& fn) {
  std::vector<int> p(m);
  std::iota(p.begin(), p.end(), 0);
  do {
    fn(p, permutation_sign(p));
  } while (std::next_permutation(p.begin(), p.end()));
}

}  // namespace detail

/* column determinant: sum over permutations s of
 * sgn(s) * M[s(1)][1] * ... * M[s(n)][n], factors in column order */
template <class R>
R cdet(const RMatrix<R>& m) {
  const int n = int(m.size());
  R out = detail::zero_like(m);
  detail::for_each_permutation(n, [&](const std::vector<int>& p, int sign) {
    R prod = m[p[0]][0];
    for (int c = 1; c < n; ++c) prod = prod * m[p[c]][c];
    out = out + prod * Rational(sign);
  });
  return out;
}

/* column-minor M^B_C on row set B and column set C, both strictly increasing
 * 0-based index lists of equal size */
template <class R>
R cminor(const RMatrix<R>& m, const std::vector<int>& rows, const std::vector<int>& cols) {
  if (rows.size() != cols.size()) throw std::invalid_argument("minor needs |rows| == |cols|");
  RMatrix<R> sub(rows.size(), std::vector<R>());
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < cols.size(); ++j) sub[i].push_back(m[rows[i]][cols[j]]);
  if (sub.empty()) throw std::invalid_argument("empty minor has no matrix form");
  return cdet(sub);
}

template <class R>
RMatrix<R> rmat_mul(const RMatrix<R>& a, const RMatrix<R>& b) {
  const int rows = int(a.size()), inner = int(b.size()), cols = int(b[0].size());
  R zero = detail::zero_like(a);
  RMatrix<R> r(rows, std::vector<R>(cols, zero));
  for (int i = 0; i < rows; ++i)
    for (int k = 0; k < inner; ++k) {
      if (a[i][k].is_zero()) continue;
      for (int j = 0; j < cols; ++j) {
        if (b[k][j].is_zero()) continue;
        r[i][j] = r[i][j] + a[i][k] * b[k][j];
      }
    }
  return r;
}

/* tr M^m with entries multiplied in composition order */
template <class R>
R power_trace(int m, const RMatrix<R>& mat) {
  if (m < 1) throw std::invalid_argument("power trace needs m >= 1");
  RMatrix<R> acc = mat;
  for (int i = 1; i < m; ++i) acc = rmat_mul(acc, mat);
  R out = detail::zero_like(mat);
  for (size_t i = 0; i < acc.size(); ++i) out = out + acc[i][i];
  return out;
}

enum class Projector { Antisymmetrizer, Symmetrizer };

namespace detail {

/* cycle lengths of a permutation in one-line form */
inline std::vector<int> cycle_lengths(const std::vector<int>& p) {
  std::vector<int> out;
  std::vector<bool> seen(p.size(), false);
  for (size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (size_t j = i; !seen[j]; j = size_t(p[j])) {
      seen[j] = true;
      ++len;
    }
    out.push_back(len);
  }
  return out;
}

}  // namespace detail

/* Scalar matrix of the projector on (C^n)^{tensor m}, as a sparse map from
 * (row, col) to entry.  Tuple (i_1..i_m), 1-based, encodes little-endian:
 * index = sum_a (i_a - 1) n^(a-1). */
std::map<std::pair<unsigned, unsigned>, Rational> projector_matrix(Projector kind, int m, int n);

/* tr_{1..m} P^{(m)} M_1 ... M_m.
 *
 * Two realizations, equal by regrouping the same sum: the explicit scalar
 * projector matrix (kept to sizes n^m with m, n <= 4), and the
 * (1/m!)-weighted sum over permutations of traces of permuted products,
 * which never materializes the n^m space:
 *   (1/m!) sum_s sgn(s) sum_{i_1..i_m} M[i_{s(1)}][i_1] * ... * M[i_{s(m)}][i_m]
 */
template <class R>
R projector_trace(Projector kind, int m, const RMatrix<R>& mat) {
  const int n = int(mat.size());
  if (m < 1) throw std::invalid_argument("projected trace needs m >= 1");
  if (kind == Projector::Antisymmetrizer && m > n)
    throw std::invalid_argument("antisymmetrizer vanishes identically for m > n");

  R out = detail::zero_like(mat);

  if (m <= 4 && n <= 4) {
    auto entries = projector_matrix(kind, m, n);
    std::vector<int> iv(m), jv(m);
    for (const auto& [key, weight] : entries) {
      unsigned row = key.first, col = key.second;
      for (int a = 0; a < m; ++a) {
        iv[a] = int(row % n);
        row /= n;
        jv[a] = int(col % n);
        col /= n;
      }
      R prod = mat[jv[0]][iv[0]];
      for (int a = 1; a < m; ++a) prod = prod * mat[jv[a]][iv[a]];
      out = out + prod * weight;
    }
    return out;
  }

  Rational scale = factorial(m).inv();
  detail::for_each_permutation(m, [&](const std::vector<int>& s, int sign) {
    Rational w = kind == Projector::Antisymmetrizer ? Rational(sign) * scale : scale;
    std::vector<int> idx(m, 0);
    for (;;) {
      R prod = mat[idx[s[0]]][idx[0]];
      for (int a = 1; a < m; ++a) prod = prod * mat[idx[s[a]]][idx[a]];
      out = out + prod * w;
      int a = 0;
      while (a < m && ++idx[a] == n) idx[a++] = 0;
      if (a == m) break;
    }
  });
  return out;
}

/* tr_{1..m} P^{(m)} M_1 ... M_m with a different matrix in each slot;
 * mats[a] occupies slot a+1.  Same two realizations as projector_trace. */
template <class R>
R projector_trace_mixed(Projector kind, const std::vector<RMatrix<R>>& mats) {
  const int m = int(mats.size());
  if (m < 1) throw std::invalid_argument("projected trace needs m >= 1");
  const int n = int(mats[0].size());
  if (kind == Projector::Antisymmetrizer && m > n)
    throw std::invalid_argument("antisymmetrizer vanishes identically for m > n");

  R out = detail::zero_like(mats[0]);

  if (m <= 4 && n <= 4) {
    auto entries = projector_matrix(kind, m, n);
    std::vector<int> iv(m), jv(m);
    for (const auto& [key, weight] : entries) {
      unsigned row = key.first, col = key.second;
      for (int a = 0; a < m; ++a) {
        iv[a] = int(row % n);
        row /= n;
        jv[a] = int(col % n);
        col /= n;
      }
      R prod = mats[0][jv[0]][iv[0]];
      for (int a = 1; a < m; ++a) prod = prod * mats[a][jv[a]][iv[a]];
      out = out + prod * weight;
    }
    return out;
  }

  Rational scale = factorial(m).inv();
  detail::for_each_permutation(m, [&](const std::vector<int>& s, int sign) {
    Rational w = kind == Projector::Antisymmetrizer ? Rational(sign) * scale : scale;
    std::vector<int> idx(m, 0);
    for (;;) {
      R prod = mats[0][idx[s[0]]][idx[0]];
      for (int a = 1; a < m; ++a) prod = prod * mats[a][idx[s[a]]][idx[a]];
      out = out + prod * w;
      int a = 0;
      while (a < m && ++idx[a] == n) idx[a++] = 0;
      if (a == m) break;
    }
  });
  return out;
}

}  // namespace shiftarg
