#pragma once

#include <algorithm>
#include <functional>

#include "birkhoff/matrix.hpp"
#include "birkhoff/partition.hpp"

namespace birkhoff {

/// Block-diagonal nilpotent matrix of Jordan type p, 1's below the diagonal
/// inside each block.
template <class K>
Matrix<K> jordan_matrix(const Partition& p) {
  Matrix<K> a(p.weight(), p.weight());
  std::size_t off = 0;
  for (unsigned part : p.parts()) {
    for (unsigned i = 0; i + 1 < part; ++i) a(off + i + 1, off + i) = K::one();
    off += part;
  }
  return a;
}

/// Recovers the Jordan type of an m-nilpotent matrix from its rank sequence:
/// the number of parts >= k equals rank(a^{k-1}) - rank(a^k).
template <class K>
Partition jordan_type(const Matrix<K>& a, unsigned m) {
  if (!a.is_square()) throw ShapeMismatchError("jordan_type of a non-square matrix");
  std::vector<std::size_t> r(m + 1);
  Matrix<K> cur = Matrix<K>::identity(a.rows());
  r[0] = a.rows();
  for (unsigned k = 1; k <= m; ++k) {
    cur = cur * a;
    r[k] = rank(cur);
  }
  if (r[m] != 0) throw NotNilpotentError("matrix is not nilpotent of the required order");
  std::vector<unsigned> count_ge(m + 2, 0);  // count_ge[k] = #parts >= k
  for (unsigned k = 1; k <= m; ++k) count_ge[k] = static_cast<unsigned>(r[k - 1] - r[k]);
  std::vector<unsigned> parts;
  for (unsigned k = m; k >= 1; --k)
    for (unsigned c = count_ge[k] - count_ge[k + 1]; c > 0; --c) parts.push_back(k);
  std::sort(parts.begin(), parts.end(), std::greater<unsigned>());
  return Partition(std::move(parts), m);
}

}  // namespace birkhoff
