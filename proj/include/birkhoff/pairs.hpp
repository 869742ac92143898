#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "birkhoff/partition.hpp"
#include "birkhoff/random.hpp"

namespace birkhoff {

/// Interlacing classification of a partition pair:
///   MonoOnly: p1 >= q1 >= p2 >= q2 >= ...   (and not the reverse chain)
///   EpiOnly:  q1 >= p1 >= q2 >= p2 >= ...   (and not the mono chain)
///   Both:     p_i = q_i for all i
///   Neither:  no chain holds
enum class PairType { MonoOnly, EpiOnly, Both, Neither };

const char* pair_type_name(PairType t);

struct PartitionPair {
  PartitionPair(Partition p_, Partition q_);

  Partition p, q;

  unsigned bound() const { return p.bound(); }
  std::string str() const { return p.str() + "|" + q.str(); }

  friend bool operator==(const PartitionPair& a, const PartitionPair& b) {
    return a.p == b.p && a.q == b.q;
  }
  friend bool operator!=(const PartitionPair& a, const PartitionPair& b) { return !(a == b); }
  friend bool operator<(const PartitionPair& a, const PartitionPair& b) {
    if (!(a.p == b.p)) return a.p < b.p;
    return a.q < b.q;
  }
};

/// Parses "p1,p2,...|q1,q2,..."; either side may be empty.
PartitionPair parse_pair(std::string_view text, unsigned bound);

PairType classify_pair(const Partition& p, const Partition& q);

inline bool is_weakly_indecomposable(const Partition& p, const Partition& q) {
  return classify_pair(p, q) != PairType::Neither;
}

/// Strict interlacing (one of the four strict chains) or the base case
/// (n) = (n).
bool is_indecomposable_pair(const Partition& p, const Partition& q);

/// Componentwise partition union.
PartitionPair pair_union(const PartitionPair& a, const PartitionPair& b);

/// Index matching underlying a canonical decomposition.  All maps are 1-based
/// into the part lists; 0 means undefined.
struct PairMatching {
  std::vector<std::size_t> equal_match;  // q-index j -> p-index with p_i = q_j
  std::vector<std::size_t> up_left;      // q-index j -> nearest larger free p-part
  std::vector<std::size_t> down_right;   // q-index j -> nearest smaller free p-part
};

struct CanonicalDecomposition {
  std::vector<PartitionPair> summands;  // sorted: descending lex by p, then q
  PairMatching matching;
};

/// Splits (p, q) into indecomposable pairs by the edge-matching construction:
/// equal parts are matched off first, then every unmatched q-part is joined to
/// the smallest free p-part above it (left to right) and to the largest free
/// p-part below it (right to left); the connected components are the summands.
CanonicalDecomposition canonical_decomposition(const Partition& p, const Partition& q);

/// Same construction, with the equal-part matching chosen at random among the
/// admissible options.  The summand multiset is provably independent of that
/// choice; this entry point exists so tests can exercise it.
CanonicalDecomposition canonical_decomposition_randomized(const Partition& p, const Partition& q,
                                                          Rng& rng);

/// Two-row diagram of the matching in DOT format, mirroring the decomposition
/// figures: bold vertical edges for equal matches, blue edges up-left, red
/// edges down-right.
std::string matching_dot(const Partition& p, const Partition& q, const PairMatching& matching);

}  // namespace birkhoff
