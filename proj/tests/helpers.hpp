#pragma once

#include <vector>

#include "birkhoff/matrix.hpp"
#include "birkhoff/pairs.hpp"

namespace birkhoff::testing {

template <class K>
Matrix<K> mat(const std::vector<std::vector<long>>& rows) {
  Matrix<K> a(rows.size(), rows.empty() ? 0 : rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) a(i, j) = K::from_int(rows[i][j]);
  return a;
}

inline Partition part(std::vector<unsigned> parts, unsigned m) { return Partition(std::move(parts), m); }

inline std::vector<PartitionPair> sorted_pairs(std::vector<PartitionPair> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace birkhoff::testing
