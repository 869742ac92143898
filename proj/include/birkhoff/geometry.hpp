#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "birkhoff/amodule.hpp"
#include "birkhoff/pairs.hpp"

namespace birkhoff {

/// Orbit dimension of a triple under the base-change group: group dimension
/// minus stabilizer dimension, the latter equal to dim End.
template <class K>
std::size_t orbit_dim(const AModule<K>& a) {
  return a.d0() * a.d0() + a.d1() * a.d1() - end_dim(a);
}

/// Dimension of the stratum of all triples with actions of Jordan types p and
/// q: the two nilpotent orbit dimensions plus the intertwiner fiber.
std::size_t stratum_dim(const Partition& p, const Partition& q);

struct StratumReport {
  PartitionPair pair;
  std::size_t stratum_dimension;
  std::size_t orbit_dimension;  // of the canonical module
  bool dense_in_stratum;        // orbit dimension == stratum dimension
  bool gorenstein_projective;   // injective intertwiner
};

/// Evaluates both dimension formulas on the canonical module of (p, q); the
/// dense-orbit property holds exactly when they agree.
StratumReport check_dense_orbit_identity(const Partition& p, const Partition& q);

enum class MoveKind { Extension, ExtensionDual, Bundle, BundleDual };

const char* move_kind_name(MoveKind k);

/// A verified short exact sequence 0 -> sub -> mid -> quot -> 0 witnessing
/// that the orbit of sub lies in the closure of the orbit of mid's canonical
/// summand (Riedtmann's criterion).
struct ExactSequenceWitness {
  AModule<Rational> sub, mid, quot;
  Matrix<Rational> f0, f1;  // inclusion, per vertex
  Matrix<Rational> g0, g1;  // projection, per vertex
};

/// Asserts that the stratum of `from` is contained in the closure of the
/// stratum of `to`.  Extension moves carry an exact-sequence witness; bundle
/// moves are justified by a hom-constant fibration and carry none.  For dual
/// moves the witness lives on the transposed pairs.
struct DegenerationEdge {
  PartitionPair from, to;
  MoveKind kind;
  std::size_t j1, j2;  // positions in the modified component (1-based)
  bool witnessed;
  std::shared_ptr<const ExactSequenceWitness> witness;
};

/// Single-box dominance move on q (one box from part j2 up to part j1) for a
/// weakly indecomposable pair, witnessed by an explicit exact sequence whose
/// exactness is verified by rank computations.  Throws HypothesisViolatedError
/// if the move's preconditions fail, ExactnessFailureError if verification
/// fails (never expected on admissible input).
DegenerationEdge extension_degeneration(const Partition& p, const Partition& q, std::size_t j1,
                                        std::size_t j2);

/// Same move applied to p via the duality automorphism of the variety.
DegenerationEdge extension_degeneration_dual(const Partition& p, const Partition& q, std::size_t j1,
                                             std::size_t j2);

/// Single-box dominance move on q for arbitrary pairs, admissible when no part
/// of p lies in the closed window [q_{j2}, q_{j1}]; that hypothesis keeps the
/// intertwiner spaces of constant dimension, so the stratum sits in a vector
/// bundle over the pair of orbit closures.  No exact-sequence witness.
DegenerationEdge bundle_degeneration(const Partition& p, const Partition& q, std::size_t j1,
                                     std::size_t j2);

DegenerationEdge bundle_degeneration_dual(const Partition& p, const Partition& q, std::size_t j1,
                                          std::size_t j2);

/// All admissible single moves out of a pair, in deterministic order.
std::vector<DegenerationEdge> available_moves(const PartitionPair& pr);

/// Classification of the indecomposable pairs whose stratum closure can be an
/// irreducible component: the three surviving shapes, plus one recorded escape
/// move for every excluded pair.  `no_escape` lists excluded pairs admitting
/// no strictly-enlarging move; it is expected to stay empty.
struct ComponentSurvey {
  struct Escape {
    PartitionPair pair;
    DegenerationEdge move;
  };
  std::vector<PartitionPair> candidates;
  std::vector<Escape> escapes;
  std::vector<PartitionPair> no_escape;
};

ComponentSurvey component_candidates(unsigned m, unsigned d0, unsigned d1);

/// Whether an indecomposable pair matches one of the three component shapes:
/// both lengths at most one; ((m, a), (b)) with m > b > a > 0; or its dual.
bool is_component_shape(const PartitionPair& pr);

/// Shape test for "the direct sum of two component strata is again a
/// component": one of the six compatibility conditions on the pair of shapes.
/// Both arguments must pass is_component_shape.
bool component_pair_compatible(const PartitionPair& a, const PartitionPair& b);

/// Necessary condition for `target` to lie in the orbit closure of
/// `candidate`: hom dimensions from every test module weakly increase.
template <class K>
bool hom_order_check(const AModule<K>& candidate, const AModule<K>& target,
                     const std::vector<AModule<K>>& tests) {
  if (candidate.d0() != target.d0() || candidate.d1() != target.d1())
    throw DimensionMismatchError("hom-order check requires equal dimension vectors");
  for (const AModule<K>& t : tests)
    if (hom_dim(t, candidate) > hom_dim(t, target)) return false;
  return true;
}

/// All indecomposable pairs of total weight at most `total_cap` with parts at
/// most m, in deterministic order; the canonical test family for hom-order
/// checks.
std::vector<PartitionPair> indecomposable_pairs_up_to(unsigned m, unsigned total_cap);

struct VerifyConfig {
  std::uint64_t prime = kDefaultPrime;
  std::uint64_t seed = 0;
  unsigned samples = 8;
  unsigned iso_attempts = 32;
};

struct StratumRecord {
  StratumReport report;
  bool is_maximal;
  bool hom_order_ok;
  bool reached_maximal;  // via single degeneration moves
  unsigned samples_total;
  unsigned samples_isomorphic;
};

/// Machine-checkable evidence that the variety at (m, d0, d1) is irreducible
/// with the maximal stratum dense: dimension dominance, hom-order necessary
/// conditions, explicit degeneration moves, and randomized stratum sampling.
struct IrreducibilityCertificate {
  unsigned m;
  unsigned d0, d1;
  std::uint64_t prime, seed;
  unsigned samples;
  PartitionPair maximal;
  std::vector<StratumRecord> strata;
  std::vector<DegenerationEdge> edges;
  bool unique_max_dimension;
  bool all_hom_order;
  bool all_samples_isomorphic;
  bool all_dense;
  bool verdict;
};

IrreducibilityCertificate verify_irreducibility(unsigned m, unsigned d0, unsigned d1,
                                                const VerifyConfig& config = {});

/// Degeneration graph of a certificate in DOT format: strata as nodes labeled
/// "(p|q) dim=...", edges labeled by move mechanism.
std::string degeneration_dot(const IrreducibilityCertificate& cert);

struct SweepConfig {
  std::uint64_t seed = 0;
  unsigned iso_attempts = 32;
};

struct CheckResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
};

struct SweepSummary {
  unsigned m_max, d_max;
  std::vector<CheckResult> checks;
  bool all_passed() const {
    for (const CheckResult& c : checks)
      if (c.failures) return false;
    return true;
  }
};

/// Exhaustive property sweep over all m <= m_max, d0, d1 <= d_max: the
/// dimension identity, append-equal-part isomorphisms, indecomposability
/// agreement, extension-move exactness, component families, and the
/// component-sum/ext agreement.
SweepSummary run_sweep(unsigned m_max, unsigned d_max, const SweepConfig& config = {});

}  // namespace birkhoff
