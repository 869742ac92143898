#include "birkhoff/amodule.hpp"

namespace birkhoff {

bool is_indecomposable_module(const AModule<Rational>& a) {
  if (a.d0() + a.d1() == 0) throw ZeroModuleError("indecomposability test on the zero module");
  HomSpace<Rational> endos = hom_basis(a, a);
  const std::size_t k = endos.dim();
  // Gram matrix of the trace form on End, in the block-diagonal faithful
  // representation; its rank is dim(End / rad End).
  Matrix<Rational> gram(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i; j < k; ++j) {
      Rational t = trace(endos.basis[i].first * endos.basis[j].first) +
                   trace(endos.basis[i].second * endos.basis[j].second);
      gram(i, j) = t;
      gram(j, i) = t;
    }
  return rank(gram) == 1;
}

AModule<Fp> sample_stratum(const Partition& p, const Partition& q, std::uint64_t seed) {
  if (p.bound() != q.bound()) throw ShapeMismatchError("stratum sampling with different bounds");
  Rng rng(seed);
  const std::size_t d0 = p.weight(), d1 = q.weight();
  Matrix<Fp> g0 = random_invertible<Fp>(rng, d0);
  Matrix<Fp> g1 = random_invertible<Fp>(rng, d1);
  Matrix<Fp> m0 = g0 * jordan_matrix<Fp>(p) * invert(g0);
  Matrix<Fp> m1 = g1 * jordan_matrix<Fp>(q) * invert(g1);

  // Uniformly random solution of m0 h = h m1.
  Matrix<Fp> sys(d0 * d1, d0 * d1);
  std::size_t eq = 0;
  for (std::size_t r = 0; r < d0; ++r)
    for (std::size_t c = 0; c < d1; ++c, ++eq) {
      for (std::size_t k = 0; k < d0; ++k) sys(eq, k * d1 + c) += m0(r, k);
      for (std::size_t k = 0; k < d1; ++k) sys(eq, r * d1 + k) -= m1(k, c);
    }
  Matrix<Fp> h(d0, d1);
  for (const Matrix<Fp>& v : nullspace_basis(sys)) {
    Fp c = random_scalar<Fp>(rng);
    for (std::size_t r = 0; r < d0; ++r)
      for (std::size_t col = 0; col < d1; ++col) h(r, col) += c * v(r * d1 + col, 0);
  }
  return {p.bound(), std::move(m0), std::move(m1), std::move(h)};
}

}  // namespace birkhoff
