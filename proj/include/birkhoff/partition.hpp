#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "birkhoff/errors.hpp"

namespace birkhoff {

/// Partition with parts bounded by m: a weakly decreasing sequence of positive
/// integers, each at most m.  The bound travels with the value because the
/// sentinel conventions part(0) = m and part(j) = 0 for j > length depend on
/// it.
class Partition {
 public:
  /// Validates: m >= 1, parts weakly decreasing, 1 <= part <= m.
  Partition(std::vector<unsigned> parts, unsigned bound);

  static Partition empty(unsigned bound) { return Partition({}, bound); }

  /// Parses "3,2,1"; the empty string is the empty partition.
  static Partition parse(std::string_view text, unsigned bound);

  unsigned bound() const { return bound_; }
  std::size_t length() const { return parts_.size(); }
  unsigned weight() const { return weight_; }
  const std::vector<unsigned>& parts() const { return parts_; }

  /// 1-based part access with sentinels: part(0) = m, part(j) = 0 past the end.
  unsigned part(std::size_t j) const {
    if (j == 0) return bound_;
    return j <= parts_.size() ? parts_[j - 1] : 0;
  }

  std::string str() const;

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.bound_ == b.bound_ && a.parts_ == b.parts_;
  }
  friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }
  /// Lexicographic on parts (bound first); gives deterministic map keys.
  friend bool operator<(const Partition& a, const Partition& b) {
    if (a.bound_ != b.bound_) return a.bound_ < b.bound_;
    return a.parts_ < b.parts_;
  }

 private:
  std::vector<unsigned> parts_;
  unsigned bound_;
  unsigned weight_;
};

/// All partitions of d with parts at most m, in reverse-lexicographic order
/// (the maximal partition comes first).
std::vector<Partition> enumerate_partitions(unsigned d, unsigned m);

/// The dominance-maximal partition of d with parts at most m: (m, ..., m, r).
Partition maximal_partition(unsigned d, unsigned m);

/// Dominance order on partitions of equal weight (prefix-sum comparison).
/// Throws UnequalWeightError when the weights differ.
bool dominance_leq(const Partition& p, const Partition& q);

/// Multiset union of parts, sorted weakly decreasing.  Bounds must agree.
Partition partition_union(const Partition& p, const Partition& q);

/// Dimension of the homomorphism space between the nilpotent modules of
/// Jordan types q (source) and p (target): sum of min(p_i, q_j).
std::size_t nilpotent_hom_dim(const Partition& q, const Partition& p);

}  // namespace birkhoff
