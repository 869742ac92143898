#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "birkhoff/jordan.hpp"
#include "birkhoff/matrix.hpp"
#include "birkhoff/pairs.hpp"
#include "birkhoff/polyhom.hpp"
#include "birkhoff/random.hpp"

namespace birkhoff {

/// A point of the variety of triples: two m-nilpotent square matrices and an
/// intertwiner h with M0 h = h M1.
template <class K>
struct AModule {
  unsigned m;
  Matrix<K> m0;  // d0 x d0
  Matrix<K> m1;  // d1 x d1
  Matrix<K> h;   // d0 x d1

  std::size_t d0() const { return m0.rows(); }
  std::size_t d1() const { return m1.rows(); }

  bool relations_hold() const {
    return m0.is_square() && m1.is_square() && h.rows() == d0() && h.cols() == d1() &&
           is_nilpotent_of_order(m0, m) && is_nilpotent_of_order(m1, m) && m0 * h == h * m1;
  }
};

/// The interlacing intertwiner of a weakly indecomposable pair, assembled from
/// polynomial-hom blocks.  Mono form: X^{p_i - q_i} on the diagonal, 1 on the
/// subdiagonal.  Epi form: 1 on the diagonal, X^{p_i - q_{i+1}} above it.
template <class K>
Matrix<K> interlacing_intertwiner(const Partition& p, const Partition& q, bool mono_form) {
  const std::size_t lp = p.length(), lq = q.length();
  std::vector<std::size_t> roff(lp + 2, 0), coff(lq + 2, 0);
  for (std::size_t i = 1; i <= lp + 1; ++i) roff[i] = roff[i - 1] + (i >= 2 ? p.part(i - 1) : 0);
  for (std::size_t j = 1; j <= lq + 1; ++j) coff[j] = coff[j - 1] + (j >= 2 ? q.part(j - 1) : 0);
  Matrix<K> h(p.weight(), q.weight());
  if (mono_form) {
    for (std::size_t j = 1; j <= lq; ++j) {
      h.set_block(roff[j], coff[j], to_matrix(PolyHom<K>::monomial(q.part(j), p.part(j), p.part(j) - q.part(j))));
      if (j + 1 <= lp)
        h.set_block(roff[j + 1], coff[j], to_matrix(PolyHom<K>::monomial(q.part(j), p.part(j + 1), 0)));
    }
  } else {
    for (std::size_t i = 1; i <= lp; ++i) {
      h.set_block(roff[i], coff[i], to_matrix(PolyHom<K>::monomial(q.part(i), p.part(i), 0)));
      if (i + 1 <= lq)
        h.set_block(roff[i], coff[i + 1],
                    to_matrix(PolyHom<K>::monomial(q.part(i + 1), p.part(i), p.part(i) - q.part(i + 1))));
    }
  }
  return h;
}

template <class K>
AModule<K> direct_sum(const AModule<K>& a, const AModule<K>& b) {
  if (a.m != b.m) throw ShapeMismatchError("direct sum with different nilpotency bounds");
  return {a.m, diag_join(a.m0, b.m0), diag_join(a.m1, b.m1), diag_join(a.h, b.h)};
}

/// The canonical module of a pair: the interlacing triple when (p, q) is
/// weakly indecomposable, otherwise the direct sum over the canonical
/// decomposition.  When both chain conditions hold the mono form is used.
template <class K>
AModule<K> build_canonical_module(const Partition& p, const Partition& q) {
  const unsigned m = p.bound();
  PairType t = classify_pair(p, q);
  if (t != PairType::Neither) {
    return {m, jordan_matrix<K>(p), jordan_matrix<K>(q),
            interlacing_intertwiner<K>(p, q, t != PairType::EpiOnly)};
  }
  AModule<K> acc{m, Matrix<K>(0, 0), Matrix<K>(0, 0), Matrix<K>(0, 0)};
  for (const PartitionPair& s : canonical_decomposition(p, q).summands)
    acc = direct_sum(acc, build_canonical_module<K>(s.p, s.q));
  return acc;
}

/// Transposes both actions and the intertwiner, swapping the two vertices.
template <class K>
AModule<K> dual(const AModule<K>& a) {
  return {a.m, transpose(a.m1), transpose(a.m0), transpose(a.h)};
}

template <class K>
struct HomSpace {
  std::vector<std::pair<Matrix<K>, Matrix<K>>> basis;  // pairs (f0, f1)
  std::size_t dim() const { return basis.size(); }
};

namespace detail {

// Constraint matrix of the intertwining system for maps a -> b.  Unknowns are
// vec(f0) (d0b x d0a, row-major) followed by vec(f1); equations are
// f0 a0 = b0 f0, f1 a1 = b1 f1, f0 ah = bh f1.
template <class K>
Matrix<K> hom_system(const AModule<K>& a, const AModule<K>& b) {
  const std::size_t r0 = b.d0(), c0 = a.d0(), r1 = b.d1(), c1 = a.d1();
  const std::size_t n0 = r0 * c0, n1 = r1 * c1;
  Matrix<K> sys(r0 * c0 + r1 * c1 + r0 * a.d1(), n0 + n1);
  std::size_t eq = 0;
  // f0 a.m0 - b.m0 f0 = 0
  for (std::size_t i = 0; i < r0; ++i)
    for (std::size_t j = 0; j < c0; ++j, ++eq) {
      for (std::size_t k = 0; k < c0; ++k) sys(eq, i * c0 + k) += a.m0(k, j);
      for (std::size_t k = 0; k < r0; ++k) sys(eq, k * c0 + j) -= b.m0(i, k);
    }
  // f1 a.m1 - b.m1 f1 = 0
  for (std::size_t i = 0; i < r1; ++i)
    for (std::size_t j = 0; j < c1; ++j, ++eq) {
      for (std::size_t k = 0; k < c1; ++k) sys(eq, n0 + i * c1 + k) += a.m1(k, j);
      for (std::size_t k = 0; k < r1; ++k) sys(eq, n0 + k * c1 + j) -= b.m1(i, k);
    }
  // f0 a.h - b.h f1 = 0
  for (std::size_t i = 0; i < r0; ++i)
    for (std::size_t j = 0; j < a.d1(); ++j, ++eq) {
      for (std::size_t k = 0; k < c0; ++k) sys(eq, i * c0 + k) += a.h(k, j);
      for (std::size_t k = 0; k < r1; ++k) sys(eq, n0 + k * c1 + j) -= b.h(i, k);
    }
  return sys;
}

template <class K>
std::pair<Matrix<K>, Matrix<K>> unpack_hom(const Matrix<K>& v, std::size_t r0, std::size_t c0,
                                           std::size_t r1, std::size_t c1) {
  Matrix<K> f0(r0, c0), f1(r1, c1);
  for (std::size_t i = 0; i < r0; ++i)
    for (std::size_t j = 0; j < c0; ++j) f0(i, j) = v(i * c0 + j, 0);
  for (std::size_t i = 0; i < r1; ++i)
    for (std::size_t j = 0; j < c1; ++j) f1(i, j) = v(r0 * c0 + i * c1 + j, 0);
  return {std::move(f0), std::move(f1)};
}

}  // namespace detail

/// Basis of the homomorphism space a -> b, one nullspace computation of the
/// assembled intertwining system.  Deterministic (reduced-echelon) basis.
template <class K>
HomSpace<K> hom_basis(const AModule<K>& a, const AModule<K>& b) {
  if (a.m != b.m) throw ShapeMismatchError("hom between modules with different nilpotency bounds");
  HomSpace<K> out;
  for (const Matrix<K>& v : nullspace_basis(detail::hom_system(a, b)))
    out.basis.push_back(detail::unpack_hom(v, b.d0(), a.d0(), b.d1(), a.d1()));
  return out;
}

template <class K>
std::size_t hom_dim(const AModule<K>& a, const AModule<K>& b) {
  if (a.m != b.m) throw ShapeMismatchError("hom between modules with different nilpotency bounds");
  Matrix<K> sys = detail::hom_system(a, b);
  return sys.cols() - rank(sys);
}

template <class K>
std::size_t end_dim(const AModule<K>& a) {
  return hom_dim(a, a);
}

/// dim Ext^1 counting extensions 0 -> b -> E -> a -> 0.  Cocycles are triples
/// (z0, z1, w) subject to the linearized nilpotency and intertwining relations
/// of the block-triangular middle term; coboundaries are the image of
/// (f0, f1) |-> (f0 a0 - b0 f0, f1 a1 - b1 f1, f0 ah - bh f1), whose dimension
/// is hom-shaped minus dim Hom(a, b).
template <class K>
std::size_t ext1_dim(const AModule<K>& a, const AModule<K>& b) {
  if (a.m != b.m) throw ShapeMismatchError("ext between modules with different nilpotency bounds");
  const unsigned m = a.m;
  const std::size_t r0 = b.d0(), c0 = a.d0(), r1 = b.d1(), c1 = a.d1();
  const std::size_t n0 = r0 * c0, n1 = r1 * c1, nw = r0 * c1;

  std::vector<Matrix<K>> b0p(m), a0p(m), b1p(m), a1p(m);
  for (unsigned i = 0; i < m; ++i) {
    b0p[i] = matrix_power(b.m0, i);
    a0p[i] = matrix_power(a.m0, m - 1 - i);
    b1p[i] = matrix_power(b.m1, i);
    a1p[i] = matrix_power(a.m1, m - 1 - i);
  }

  Matrix<K> sys(n0 + n1 + nw, n0 + n1 + nw);
  std::size_t eq = 0;
  // sum_i b0^i z0 a0^{m-1-i} = 0
  for (std::size_t r = 0; r < r0; ++r)
    for (std::size_t c = 0; c < c0; ++c, ++eq)
      for (std::size_t x = 0; x < r0; ++x)
        for (std::size_t y = 0; y < c0; ++y) {
          K coef{};
          for (unsigned i = 0; i < m; ++i) coef += b0p[i](r, x) * a0p[i](y, c);
          if (!coef.is_zero()) sys(eq, x * c0 + y) = coef;
        }
  // sum_i b1^i z1 a1^{m-1-i} = 0
  for (std::size_t r = 0; r < r1; ++r)
    for (std::size_t c = 0; c < c1; ++c, ++eq)
      for (std::size_t x = 0; x < r1; ++x)
        for (std::size_t y = 0; y < c1; ++y) {
          K coef{};
          for (unsigned i = 0; i < m; ++i) coef += b1p[i](r, x) * a1p[i](y, c);
          if (!coef.is_zero()) sys(eq, n0 + x * c1 + y) = coef;
        }
  // b.m0 w + z0 a.h - w a.m1 - b.h z1 = 0
  for (std::size_t r = 0; r < r0; ++r)
    for (std::size_t c = 0; c < c1; ++c, ++eq) {
      for (std::size_t k = 0; k < c0; ++k) sys(eq, r * c0 + k) += a.h(k, c);
      for (std::size_t k = 0; k < r1; ++k) sys(eq, n0 + k * c1 + c) -= b.h(r, k);
      for (std::size_t k = 0; k < r0; ++k) sys(eq, n0 + n1 + k * c1 + c) += b.m0(r, k);
      for (std::size_t k = 0; k < c1; ++k) sys(eq, n0 + n1 + r * c1 + k) -= a.m1(k, c);
    }

  std::size_t cocycles = (n0 + n1 + nw) - rank(sys);
  std::size_t coboundaries = n0 + n1 - hom_dim(a, b);
  return cocycles - coboundaries;
}

/// Gorenstein-projectivity of the triple: injectivity of the intertwiner.
template <class K>
bool is_gorenstein_projective(const AModule<K>& a) {
  return rank(a.h) == a.d1();
}

/// Jordan types of the two actions.
template <class K>
PartitionPair stratum_of(const AModule<K>& a) {
  return PartitionPair(jordan_type(a.m0, a.m), jordan_type(a.m1, a.m));
}

/// Locality of the endomorphism algebra over the rationals, via the radical of
/// the trace form (valid in characteristic zero): the module is
/// indecomposable iff the Gram matrix of (x, y) -> tr(x y) on End has rank 1.
/// Prime fields are refused at compile time; the trace criterion is unsound in
/// small characteristic.
bool is_indecomposable_module(const AModule<Rational>& a);

struct IsoOptions {
  unsigned random_attempts = 32;
  std::uint64_t seed = 0x697a6f6d6f726630ULL;
};

struct IsoResult {
  bool isomorphic = false;
  /// Set when the search exhausted its attempts without a witness; never set
  /// on a deterministic negative (dimension/hom prechecks) or a positive.
  bool probabilistic_negative = false;
};

/// One-sided randomized isomorphism test: deterministic dimension and
/// hom-dimension prechecks, then a search for an invertible element of
/// Hom(a, b) among basis elements and random linear combinations.  False
/// positives are impossible (a witness is checked by rank).
template <class K>
IsoResult check_isomorphic(const AModule<K>& a, const AModule<K>& b, const IsoOptions& opts = {}) {
  if (a.m != b.m || a.d0() != b.d0() || a.d1() != b.d1()) return {false, false};
  HomSpace<K> hab = hom_basis(a, b);
  std::size_t e = end_dim(a);
  if (hab.dim() != e || end_dim(b) != e || hom_dim(b, a) != e) return {false, false};

  auto invertible_pair = [&](const Matrix<K>& f0, const Matrix<K>& f1) {
    return rank(f0) == a.d0() && rank(f1) == a.d1();
  };

  // Structured candidates: each basis element, then the full sum.
  Matrix<K> s0(b.d0(), a.d0()), s1(b.d1(), a.d1());
  for (const auto& [f0, f1] : hab.basis) {
    if (invertible_pair(f0, f1)) return {true, false};
    s0 = s0 + f0;
    s1 = s1 + f1;
  }
  if (invertible_pair(s0, s1)) return {true, false};

  Rng rng(opts.seed);
  for (unsigned t = 0; t < opts.random_attempts; ++t) {
    Matrix<K> c0(b.d0(), a.d0()), c1(b.d1(), a.d1());
    for (const auto& [f0, f1] : hab.basis) {
      K c = random_scalar<K>(rng);
      c0 = c0 + c * f0;
      c1 = c1 + c * f1;
    }
    if (invertible_pair(c0, c1)) return {true, false};
  }
  return {false, true};
}

template <class K>
bool are_isomorphic(const AModule<K>& a, const AModule<K>& b, const IsoOptions& opts = {}) {
  return check_isomorphic(a, b, opts).isomorphic;
}

/// Random point of the stratum of (p, q) over the active prime field:
/// conjugates of the Jordan matrices by random invertible matrices and a
/// uniformly random solution of the intertwining system.  Reproducible from
/// the seed.
AModule<Fp> sample_stratum(const Partition& p, const Partition& q, std::uint64_t seed);

}  // namespace birkhoff
