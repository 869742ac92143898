#pragma once

#include <gmpxx.h>

#include <cassert>
#include <cstddef>
#include <string>
#include <vector>

#include "birkhoff/errors.hpp"
#include "birkhoff/rational.hpp"

namespace birkhoff {

/// Dense row-major matrix over an exact scalar K (Rational or Fp).  Zero-row
/// and zero-column matrices are legal and multiply to zero matrices of the
/// induced shape, which is the annihilator convention the rest of the library
/// relies on.
template <class K>
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n) {
    Matrix a(n, n);
    for (std::size_t i = 0; i < n; ++i) a(i, i) = K::one();
    return a;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  K& operator()(std::size_t i, std::size_t j) {
    assert(i < rows_ && j < cols_);
    return data_[i * cols_ + j];
  }
  const K& operator()(std::size_t i, std::size_t j) const {
    assert(i < rows_ && j < cols_);
    return data_[i * cols_ + j];
  }

  bool is_zero() const {
    for (const K& x : data_)
      if (!x.is_zero()) return false;
    return true;
  }

  bool is_square() const { return rows_ == cols_; }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  /// Copies `b` into this matrix with top-left corner at (r0, c0).
  void set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
    assert(r0 + b.rows_ <= rows_ && c0 + b.cols_ <= cols_);
    for (std::size_t i = 0; i < b.rows_; ++i)
      for (std::size_t j = 0; j < b.cols_; ++j) (*this)(r0 + i, c0 + j) = b(i, j);
  }

  std::string str() const {
    std::string out;
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) {
        if (j) out += ' ';
        out += (*this)(i, j).str();
      }
      out += '\n';
    }
    return out;
  }

 private:
  std::size_t rows_, cols_;
  std::vector<K> data_;
};

template <class K>
Matrix<K> operator*(const Matrix<K>& a, const Matrix<K>& b) {
  if (a.cols() != b.rows()) throw ShapeMismatchError("matrix product shape mismatch");
  Matrix<K> c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const K& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

template <class K>
Matrix<K> operator+(const Matrix<K>& a, const Matrix<K>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw ShapeMismatchError("matrix sum shape mismatch");
  Matrix<K> c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) + b(i, j);
  return c;
}

template <class K>
Matrix<K> operator-(const Matrix<K>& a, const Matrix<K>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw ShapeMismatchError("matrix difference shape mismatch");
  Matrix<K> c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) - b(i, j);
  return c;
}

template <class K>
Matrix<K> operator*(const K& s, const Matrix<K>& a) {
  Matrix<K> c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = s * a(i, j);
  return c;
}

template <class K>
Matrix<K> operator-(const Matrix<K>& a) {
  Matrix<K> c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = -a(i, j);
  return c;
}

template <class K>
Matrix<K> transpose(const Matrix<K>& a) {
  Matrix<K> c(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(j, i) = a(i, j);
  return c;
}

template <class K>
Matrix<K> matrix_power(const Matrix<K>& a, unsigned e) {
  assert(a.is_square());
  Matrix<K> r = Matrix<K>::identity(a.rows());
  Matrix<K> base = a;
  while (e) {
    if (e & 1u) r = r * base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return r;
}

template <class K>
K trace(const Matrix<K>& a) {
  assert(a.is_square());
  K t{};
  for (std::size_t i = 0; i < a.rows(); ++i) t += a(i, i);
  return t;
}

/// Block-diagonal juxtaposition.
template <class K>
Matrix<K> diag_join(const Matrix<K>& a, const Matrix<K>& b) {
  Matrix<K> c(a.rows() + b.rows(), a.cols() + b.cols());
  c.set_block(0, 0, a);
  c.set_block(a.rows(), a.cols(), b);
  return c;
}

template <class K>
Matrix<K> vstack(const Matrix<K>& a, const Matrix<K>& b) {
  if (a.cols() != b.cols()) throw ShapeMismatchError("vstack column mismatch");
  Matrix<K> c(a.rows() + b.rows(), a.cols());
  c.set_block(0, 0, a);
  c.set_block(a.rows(), 0, b);
  return c;
}

template <class K>
Matrix<K> hstack(const Matrix<K>& a, const Matrix<K>& b) {
  if (a.rows() != b.rows()) throw ShapeMismatchError("hstack row mismatch");
  Matrix<K> c(a.rows(), a.cols() + b.cols());
  c.set_block(0, 0, a);
  c.set_block(0, a.cols(), b);
  return c;
}

/// Rows [r0, r1) of `a`.
template <class K>
Matrix<K> row_slice(const Matrix<K>& a, std::size_t r0, std::size_t r1) {
  assert(r0 <= r1 && r1 <= a.rows());
  Matrix<K> c(r1 - r0, a.cols());
  for (std::size_t i = r0; i < r1; ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i - r0, j) = a(i, j);
  return c;
}

template <class K>
struct Echelon {
  Matrix<K> reduced;               // the (unique) reduced row echelon form
  std::vector<std::size_t> pivots; // pivot column of each pivot row
};

namespace detail {

// Back-substitution pass shared by both elimination routes: normalizes pivot
// rows to 1 and clears entries above pivots.  Expects row echelon input.
template <class K>
void reduce_up(Matrix<K>& a, const std::vector<std::size_t>& pivots) {
  for (std::size_t k = pivots.size(); k-- > 0;) {
    std::size_t r = k, c = pivots[k];
    K inv = a(r, c).inv();
    for (std::size_t j = c; j < a.cols(); ++j) a(r, j) = inv * a(r, j);
    for (std::size_t i = 0; i < r; ++i) {
      K f = a(i, c);
      if (f.is_zero()) continue;
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
  }
}

}  // namespace detail

/// Reduced row echelon form with deterministic pivoting (first nonzero entry
/// in column order), generic field route.
template <class K>
Echelon<K> reduced_echelon(Matrix<K> a) {
  std::vector<std::size_t> pivots;
  std::size_t pr = 0;
  for (std::size_t c = 0; c < a.cols() && pr < a.rows(); ++c) {
    std::size_t sel = pr;
    while (sel < a.rows() && a(sel, c).is_zero()) ++sel;
    if (sel == a.rows()) continue;
    if (sel != pr)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(pr, j), a(sel, j));
    for (std::size_t i = pr + 1; i < a.rows(); ++i) {
      if (a(i, c).is_zero()) continue;
      K f = a(i, c) / a(pr, c);
      a(i, c) = K{};
      for (std::size_t j = c + 1; j < a.cols(); ++j) a(i, j) -= f * a(pr, j);
    }
    pivots.push_back(c);
    ++pr;
  }
  detail::reduce_up(a, pivots);
  return {std::move(a), std::move(pivots)};
}

/// Rational overload: fraction-free (Bareiss) forward elimination over the
/// integers to bound coefficient growth, then the shared back pass.  Rows are
/// pre-scaled to integer content, which changes neither rank nor the reduced
/// form.
inline Echelon<Rational> reduced_echelon(Matrix<Rational> a) {
  const std::size_t rows = a.rows(), cols = a.cols();
  std::vector<std::vector<mpz_class>> g(rows, std::vector<mpz_class>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    mpz_class lcm_den = 1;
    for (std::size_t j = 0; j < cols; ++j) {
      const mpz_class& den = a(i, j).raw().get_den();
      mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), den.get_mpz_t());
    }
    for (std::size_t j = 0; j < cols; ++j) {
      mpq_class scaled = a(i, j).raw() * lcm_den;
      g[i][j] = scaled.get_num();  // denominator is 1 after scaling
    }
  }

  std::vector<std::size_t> pivots;
  std::size_t pr = 0;
  mpz_class prev = 1;
  for (std::size_t c = 0; c < cols && pr < rows; ++c) {
    std::size_t sel = pr;
    while (sel < rows && g[sel][c] == 0) ++sel;
    if (sel == rows) continue;
    if (sel != pr) g[sel].swap(g[pr]);
    for (std::size_t i = pr + 1; i < rows; ++i) {
      if (g[i][c] == 0) {
        // Still scale the row so all entries stay minors over one pivot chain.
        for (std::size_t j = c + 1; j < cols; ++j) {
          mpz_class t = g[pr][c] * g[i][j];
          mpz_divexact(g[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        }
        continue;
      }
      for (std::size_t j = c + 1; j < cols; ++j) {
        mpz_class t = g[pr][c] * g[i][j] - g[i][c] * g[pr][j];
        mpz_divexact(g[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      g[i][c] = 0;
    }
    prev = g[pr][c];
    pivots.push_back(c);
    ++pr;
  }

  Matrix<Rational> r(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (g[i][j] != 0) r(i, j) = Rational(mpq_class(g[i][j]));
  detail::reduce_up(r, pivots);
  return {std::move(r), std::move(pivots)};
}

template <class K>
std::size_t rank(const Matrix<K>& a) {
  return reduced_echelon(a).pivots.size();
}

/// Basis of {v : a v = 0} read off the reduced echelon form, one vector per
/// free column in ascending column order.  Byte-for-byte reproducible.
template <class K>
std::vector<Matrix<K>> nullspace_basis(const Matrix<K>& a) {
  Echelon<K> e = reduced_echelon(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (std::size_t c : e.pivots) is_pivot[c] = true;
  std::vector<Matrix<K>> basis;
  for (std::size_t f = 0; f < a.cols(); ++f) {
    if (is_pivot[f]) continue;
    Matrix<K> v(a.cols(), 1);
    v(f, 0) = K::one();
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v(e.pivots[r], 0) = -e.reduced(r, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

template <class K>
Matrix<K> invert(const Matrix<K>& a) {
  if (!a.is_square()) throw ShapeMismatchError("inverse of a non-square matrix");
  const std::size_t n = a.rows();
  Matrix<K> aug(n, 2 * n);
  aug.set_block(0, 0, a);
  aug.set_block(0, n, Matrix<K>::identity(n));
  Echelon<K> e = reduced_echelon(std::move(aug));
  if (e.pivots.size() != n || (n > 0 && e.pivots.back() >= n))
    throw SingularMatrixError("matrix is singular");
  Matrix<K> inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
  return inv;
}

template <class K>
bool is_nilpotent_of_order(const Matrix<K>& a, unsigned m) {
  assert(a.is_square());
  return matrix_power(a, m).is_zero();
}

}  // namespace birkhoff
