#pragma once

#include <stdexcept>
#include <vector>

#include "ratfunc.h"

namespace qrll {

// Basis of each elementary space is (even, odd); composite indices over
// dim-2**f spaces inherit parity from the bit pattern.
inline int parity(int idx) { return __builtin_popcount(static_cast<unsigned>(idx)) & 1; }

inline int sign_pow(int par) { return (par & 1) ? -1 : 1; }

template <typename R>
struct Mat {
  int n = 0;
  std::vector<R> a;

  Mat() = default;
  explicit Mat(int dim) : n(dim), a(static_cast<size_t>(dim) * dim) {}
  static Mat ident(int dim) {
    Mat m(dim);
    for (int i = 0; i < dim; ++i) m.at(i, i) = R(Int(1));
    return m;
  }

  R& at(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
  const R& at(int i, int j) const { return a[static_cast<size_t>(i) * n + j]; }

  friend Mat operator+(const Mat& x, const Mat& y) {
    Mat r(x.n);
    for (size_t k = 0; k < x.a.size(); ++k) r.a[k] = x.a[k] + y.a[k];
    return r;
  }
  friend Mat operator-(const Mat& x, const Mat& y) {
    Mat r(x.n);
    for (size_t k = 0; k < x.a.size(); ++k) r.a[k] = x.a[k] - y.a[k];
    return r;
  }
  friend Mat operator*(const Mat& x, const Mat& y) {
    if (x.n != y.n) throw std::runtime_error("Mat: dimension mismatch");
    Mat r(x.n);
    for (int i = 0; i < x.n; ++i)
      for (int k = 0; k < x.n; ++k) {
        const R& xik = x.at(i, k);
        if (xik.is_zero()) continue;
        for (int j = 0; j < x.n; ++j) {
          if (y.at(k, j).is_zero()) continue;
          r.at(i, j) += xik * y.at(k, j);
        }
      }
    return r;
  }
  Mat scaled(const R& s) const {
    Mat r(n);
    for (size_t k = 0; k < a.size(); ++k) r.a[k] = a[k] * s;
    return r;
  }
  friend bool operator==(const Mat& x, const Mat& y) {
    return x.n == y.n && x.a == y.a;
  }
  bool is_zero() const {
    for (const auto& e : a)
      if (!e.is_zero()) return false;
    return true;
  }
};

using RMat = Mat<RatFunc>;

// plain Kronecker product, second factor runs fast
template <typename R>
Mat<R> plain_tensor(const Mat<R>& A, const Mat<R>& B) {
  Mat<R> r(A.n * B.n);
  for (int i = 0; i < A.n; ++i)
    for (int j = 0; j < A.n; ++j) {
      if (A.at(i, j).is_zero()) continue;
      for (int k = 0; k < B.n; ++k)
        for (int l = 0; l < B.n; ++l) {
          if (B.at(k, l).is_zero()) continue;
          r.at(i * B.n + k, j * B.n + l) = A.at(i, j) * B.at(k, l);
        }
    }
  return r;
}

// graded tensor product: (A (x) B)_{(ik),(jl)} = (-1)^{P(k)(P(i)+P(j))} A_ij B_kl
template <typename R>
Mat<R> graded_tensor(const Mat<R>& A, const Mat<R>& B) {
  Mat<R> r(A.n * B.n);
  for (int i = 0; i < A.n; ++i)
    for (int j = 0; j < A.n; ++j) {
      if (A.at(i, j).is_zero()) continue;
      for (int k = 0; k < B.n; ++k)
        for (int l = 0; l < B.n; ++l) {
          if (B.at(k, l).is_zero()) continue;
          R v = A.at(i, j) * B.at(k, l);
          if (parity(k) && ((parity(i) + parity(j)) & 1))
            v = v * R(Int(-1));
          r.at(i * B.n + k, j * B.n + l) = v;
        }
    }
  return r;
}

// two-slot embeddings of a 4x4 operator into the 8x8 triple space;
// slots 12/23 are the standard (unsigned) embeddings, slot 13 carries the
// Koszul sign across the skipped middle slot
template <typename R>
Mat<R> embed12(const Mat<R>& A) {
  return plain_tensor(A, Mat<R>::ident(2));
}

template <typename R>
Mat<R> embed23(const Mat<R>& A) {
  return plain_tensor(Mat<R>::ident(2), A);
}

template <typename R>
Mat<R> embed13_plain(const Mat<R>& A) {
  Mat<R> r(8);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l)
          for (int m = 0; m < 2; ++m)
            r.at(((i * 2) + m) * 2 + k, ((j * 2) + m) * 2 + l) =
                A.at(i * 2 + k, j * 2 + l);
  return r;
}

template <typename R>
Mat<R> embed13_koszul(const Mat<R>& A) {
  Mat<R> r(8);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) {
          if (A.at(i * 2 + k, j * 2 + l).is_zero()) continue;
          for (int m = 0; m < 2; ++m) {
            R v = A.at(i * 2 + k, j * 2 + l);
            // the slot-1 leg moves past the middle state m
            if (parity(m) && ((parity(i) + parity(j)) & 1)) v = v * R(Int(-1));
            r.at(((i * 2) + m) * 2 + k, ((j * 2) + m) * 2 + l) = v;
          }
        }
  return r;
}

// supertrace over the first dim-2 factor of a 2d x 2d matrix
template <typename R>
Mat<R> supertrace_first(const Mat<R>& M) {
  int d = M.n / 2;
  Mat<R> r(d);
  for (int k = 0; k < d; ++k)
    for (int l = 0; l < d; ++l) {
      R acc = M.at(k, l);  // a = 0 part
      R odd = M.at(d + k, d + l);
      acc = acc - odd;  // a = 1 carries (-1)^{P(a)}
      r.at(k, l) = acc;
    }
  return r;
}

template <typename R>
R supertrace(const Mat<R>& M) {
  R acc;
  for (int i = 0; i < M.n; ++i) {
    if (parity(i))
      acc -= M.at(i, i);
    else
      acc += M.at(i, i);
  }
  return acc;
}

// graded permutation operator on the dim-4 double space
RMat p_super();
// diagonal Koszul sign carrier (-1)^{P(i)P(k)} on the double space
RMat super_sign4();
// eta = diag(1,-1) on a single slot
RMat eta2();

RMat elementary4(int r, int c);  // E_{rc}, 0-based, 4x4

}  // namespace qrll
