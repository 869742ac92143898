#pragma once

#include <cstddef>
#include <vector>

#include "birkhoff/errors.hpp"
#include "birkhoff/matrix.hpp"

namespace birkhoff {

/// Homomorphism between indecomposable nilpotent modules, given as
/// multiplication by a polynomial: a map from the cyclic module of length
/// `source` to the one of length `target` is Phi with X^{max(target-source,0)}
/// dividing Phi, taken modulo X^{target}.
template <class K>
class PolyHom {
 public:
  PolyHom(unsigned source, unsigned target, std::vector<K> coeff)
      : source_(source), target_(target), coeff_(std::move(coeff)) {
    if (coeff_.size() > target_) coeff_.resize(target_);  // truncate mod X^target
    while (!coeff_.empty() && coeff_.back().is_zero()) coeff_.pop_back();
    unsigned need = target_ > source_ ? target_ - source_ : 0;
    for (unsigned i = 0; i < need && i < coeff_.size(); ++i)
      if (!coeff_[i].is_zero())
        throw ShapeMismatchError("polynomial violates the divisibility constraint");
  }

  static PolyHom zero(unsigned source, unsigned target) { return PolyHom(source, target, {}); }

  /// The monomial X^k as a map source -> target (the zero map when k >= target).
  static PolyHom monomial(unsigned source, unsigned target, unsigned k) {
    std::vector<K> c;
    if (k < target) {
      c.assign(k + 1, K{});
      c[k] = K::one();
    }
    return PolyHom(source, target, std::move(c));
  }

  static PolyHom identity(unsigned p) { return monomial(p, p, 0); }

  unsigned source() const { return source_; }
  unsigned target() const { return target_; }
  const std::vector<K>& coefficients() const { return coeff_; }

  K coeff(std::size_t i) const { return i < coeff_.size() ? coeff_[i] : K{}; }

  bool is_zero() const {
    for (const K& c : coeff_)
      if (!c.is_zero()) return false;
    return true;
  }

  /// Injective iff Phi / X^{target-source} has nonzero constant term.
  bool is_monomorphism() const {
    if (source_ > target_) return false;
    return !coeff(target_ - source_).is_zero();
  }

  /// Surjective iff Phi has nonzero constant term.
  bool is_epimorphism() const { return !coeff(0).is_zero(); }

 private:
  unsigned source_, target_;
  std::vector<K> coeff_;
};

/// Composition f after g, represented by the product polynomial truncated
/// modulo X^{target of f}.
template <class K>
PolyHom<K> compose(const PolyHom<K>& f, const PolyHom<K>& g) {
  if (f.source() != g.target())
    throw ShapeMismatchError("polynomial hom composition endpoint mismatch");
  std::vector<K> prod(f.target(), K{});
  const auto& fc = f.coefficients();
  const auto& gc = g.coefficients();
  for (std::size_t i = 0; i < fc.size(); ++i) {
    if (fc[i].is_zero()) continue;
    for (std::size_t j = 0; j < gc.size() && i + j < prod.size(); ++j)
      prod[i + j] += fc[i] * gc[j];
  }
  return PolyHom<K>(g.source(), f.target(), std::move(prod));
}

/// The vector-space dual map: if Phi represents source -> target, then
/// X^{source-target} Phi represents target -> source (a polynomial shift,
/// exact in both directions thanks to the divisibility constraint).
template <class K>
PolyHom<K> dual(const PolyHom<K>& f) {
  long shift = static_cast<long>(f.source()) - static_cast<long>(f.target());
  std::vector<K> c(f.source(), K{});
  for (std::size_t i = 0; i < f.coefficients().size(); ++i) {
    long k = static_cast<long>(i) + shift;
    if (k >= 0 && k < static_cast<long>(f.source())) c[static_cast<std::size_t>(k)] = f.coeff(i);
  }
  return PolyHom<K>(f.target(), f.source(), std::move(c));
}

/// Matrix of multiplication by Phi in the monomial bases: target x source,
/// column j carries the coefficients of Phi * X^j.
template <class K>
Matrix<K> to_matrix(const PolyHom<K>& f) {
  Matrix<K> a(f.target(), f.source());
  for (std::size_t j = 0; j < f.source(); ++j)
    for (std::size_t i = j; i < f.target(); ++i) a(i, j) = f.coeff(i - j);
  return a;
}

}  // namespace birkhoff
