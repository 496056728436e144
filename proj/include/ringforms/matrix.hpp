#ifndef RINGFORMS_MATRIX_HPP_
#define RINGFORMS_MATRIX_HPP_

/* Small dense matrices with exact entries.
 *
 * int_matrix<N> holds bigint entries row-major; rat_matrix<N> holds bigrat
 * entries and adds inverse / linear solving by Gauss elimination (exact,
 * no pivoting subtleties beyond nonzero search).  Sizes are 2, 3, 4 only;
 * determinants use cofactor expansion, which is optimal at these sizes.
 *
 * Group elements (SL3(Z), GL2(Z)) are int_matrix values whose unimodularity
 * callers check with is_unimodular(); nothing enforces it structurally.
 */

#include "ringforms/integers.hpp"

#include <array>
#include <cassert>

namespace ringforms {

template <int N, typename T> struct dense_matrix {
  static_assert(N >= 2 && N <= 4, "only sizes 2..4 are used");
  std::array<T, N * N> e{};

  dense_matrix() = default;

  /* Row-major brace construction: dense_matrix<2,T>{{a,b,c,d}}. */
  explicit dense_matrix(const std::array<T, N * N> &v) : e(v) {}

  T &operator()(int i, int j) { return e[i * N + j]; }
  const T &operator()(int i, int j) const { return e[i * N + j]; }

  static dense_matrix identity() {
    dense_matrix m;
    for (int i = 0; i < N; i++)
      for (int j = 0; j < N; j++)
        m(i, j) = T(i == j ? 1 : 0);
    return m;
  }

  friend dense_matrix operator*(const dense_matrix &a, const dense_matrix &b) {
    dense_matrix c;
    for (int i = 0; i < N; i++)
      for (int j = 0; j < N; j++) {
        T s = T(0);
        for (int k = 0; k < N; k++)
          s += a(i, k) * b(k, j);
        c(i, j) = s;
      }
    return c;
  }

  friend dense_matrix operator+(const dense_matrix &a, const dense_matrix &b) {
    dense_matrix c;
    for (int i = 0; i < N * N; i++)
      c.e[i] = a.e[i] + b.e[i];
    return c;
  }

  friend dense_matrix operator-(const dense_matrix &a, const dense_matrix &b) {
    dense_matrix c;
    for (int i = 0; i < N * N; i++)
      c.e[i] = a.e[i] - b.e[i];
    return c;
  }

  friend dense_matrix operator*(const T &s, const dense_matrix &a) {
    dense_matrix c;
    for (int i = 0; i < N * N; i++)
      c.e[i] = s * a.e[i];
    return c;
  }

  friend dense_matrix operator-(const dense_matrix &a) { return T(-1) * a; }

  bool operator==(const dense_matrix &o) const { return e == o.e; }
  bool operator!=(const dense_matrix &o) const { return !(e == o.e); }
  bool operator<(const dense_matrix &o) const { return e < o.e; }

  dense_matrix transpose() const {
    dense_matrix t;
    for (int i = 0; i < N; i++)
      for (int j = 0; j < N; j++)
        t(j, i) = (*this)(i, j);
    return t;
  }

  T det() const {
    const auto &m = *this;
    if constexpr (N == 2)
      return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    else if constexpr (N == 3)
      return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
             m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
             m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
    else {
      /* expansion along the first row with 3x3 cofactors */
      T s = T(0);
      for (int j = 0; j < 4; j++) {
        dense_matrix<3, T> c;
        for (int i = 1; i < 4; i++) {
          int jj = 0;
          for (int k = 0; k < 4; k++) {
            if (k == j)
              continue;
            c(i - 1, jj++) = m(i, k);
          }
        }
        T term = m(0, j) * c.det();
        s += (j % 2 == 0) ? term : -term;
      }
      return s;
    }
  }

  bool is_zero() const {
    for (const T &x : e)
      if (x != 0)
        return false;
    return true;
  }
};

template <int N> using int_matrix = dense_matrix<N, bigint>;
template <int N> using rat_matrix = dense_matrix<N, bigrat>;

template <int N, typename T> T det(const dense_matrix<N, T> &m) {
  return m.det();
}

template <int N, typename T>
dense_matrix<N, T> transpose(const dense_matrix<N, T> &m) {
  return m.transpose();
}

using mat2 = int_matrix<2>;
using mat3 = int_matrix<3>;
using mat4 = int_matrix<4>;

template <int N> bool is_unimodular(const int_matrix<N> &m) {
  bigint d = m.det();
  return d == 1 || d == -1;
}

template <int N> rat_matrix<N> to_rational(const int_matrix<N> &m) {
  rat_matrix<N> r;
  for (int i = 0; i < N * N; i++)
    r.e[i] = bigrat(m.e[i]);
  return r;
}

/* True (and fills out) iff every entry is an integer. */
template <int N>
bool integral_entries(const rat_matrix<N> &m, int_matrix<N> &out) {
  for (int i = 0; i < N * N; i++) {
    if (m.e[i].get_den() != 1)
      return false;
    out.e[i] = m.e[i].get_num();
  }
  return true;
}

/* Exact inverse by Gauss-Jordan; throws on singular input. */
template <int N> rat_matrix<N> inverse(const rat_matrix<N> &m_in) {
  rat_matrix<N> m = m_in, inv = rat_matrix<N>::identity();
  for (int col = 0; col < N; col++) {
    int piv = -1;
    for (int r = col; r < N; r++)
      if (m(r, col) != 0) {
        piv = r;
        break;
      }
    throw_if(piv < 0, "inverse of singular matrix");
    if (piv != col)
      for (int j = 0; j < N; j++) {
        std::swap(m(piv, j), m(col, j));
        std::swap(inv(piv, j), inv(col, j));
      }
    bigrat d = m(col, col);
    for (int j = 0; j < N; j++) {
      m(col, j) /= d;
      inv(col, j) /= d;
    }
    for (int r = 0; r < N; r++) {
      if (r == col || m(r, col) == 0)
        continue;
      bigrat f = m(r, col);
      for (int j = 0; j < N; j++) {
        m(r, j) -= f * m(col, j);
        inv(r, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

/* Solve m * x = b exactly; throws on singular m.  (The cast keeps N out
 * of deduction for the second argument, whose size parameter is size_t.) */
template <int N>
std::array<bigrat, N> solve(const rat_matrix<N> &m,
                            const std::array<bigrat, std::size_t(N)> &b) {
  rat_matrix<N> inv = inverse(m);
  std::array<bigrat, N> x;
  for (int i = 0; i < N; i++) {
    bigrat s(0);
    for (int j = 0; j < N; j++)
      s += inv(i, j) * b[j];
    x[i] = s;
  }
  return x;
}

} /* namespace ringforms */

#endif /* RINGFORMS_MATRIX_HPP_ */
