#include "birkhoff/geometry.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace birkhoff {

std::size_t stratum_dim(const Partition& p, const Partition& q) {
  const std::size_t d0 = p.weight(), d1 = q.weight();
  return (d0 * d0 - nilpotent_hom_dim(p, p)) + (d1 * d1 - nilpotent_hom_dim(q, q)) +
         nilpotent_hom_dim(q, p);
}

StratumReport check_dense_orbit_identity(const Partition& p, const Partition& q) {
  AModule<Rational> canon = build_canonical_module<Rational>(p, q);
  StratumReport r{PartitionPair(p, q), stratum_dim(p, q), orbit_dim(canon), false,
                  is_gorenstein_projective(canon)};
  r.dense_in_stratum = r.stratum_dimension == r.orbit_dimension;
  return r;
}

const char* move_kind_name(MoveKind k) {
  switch (k) {
    case MoveKind::Extension: return "extension";
    case MoveKind::ExtensionDual: return "extension-dual";
    case MoveKind::Bundle: return "bundle";
    case MoveKind::BundleDual: return "bundle-dual";
  }
  return "?";
}

namespace {

// Cumulative offsets of the blocks of a Jordan-type decomposition: offset(i)
// is the first coordinate of the i-th block (1-based), offset(len+1) the total.
std::vector<std::size_t> block_offsets(const Partition& p) {
  std::vector<std::size_t> off(p.length() + 2, 0);
  for (std::size_t i = 1; i <= p.length() + 1; ++i)
    off[i] = off[i - 1] + (i >= 2 ? p.part(i - 1) : 0);
  return off;
}

// The box move at (j1, j2): one box from part j2 to part j1.  Returns the
// resulting partition; hypotheses (strict drops around j1 and j2) must already
// be checked by the caller.
Partition box_move(const Partition& q, std::size_t j1, std::size_t j2) {
  std::vector<unsigned> parts = q.parts();
  parts[j1 - 1] += 1;
  parts[j2 - 1] -= 1;
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  return Partition(std::move(parts), q.bound());
}

void check_box_move_hypotheses(const Partition& q, std::size_t j1, std::size_t j2) {
  if (j1 < 1 || j1 > j2) throw HypothesisViolatedError("need 1 <= j1 <= j2");
  if (q.part(j1) >= q.part(j1 - 1))
    throw HypothesisViolatedError("need q[j1] < q[j1 - 1] (with q[0] read as m)");
  if (q.part(j2) <= q.part(j2 + 1))
    throw HypothesisViolatedError("need q[j2] > q[j2 + 1] (with parts past the end read as 0)");
}

}  // namespace

DegenerationEdge extension_degeneration(const Partition& p, const Partition& q, std::size_t j1,
                                        std::size_t j2) {
  if (p.bound() != q.bound()) throw ShapeMismatchError("degeneration move with different bounds");
  const unsigned m = p.bound();
  PairType before = classify_pair(p, q);
  if (before == PairType::Neither)
    throw HypothesisViolatedError("(p, q) is not weakly indecomposable");
  if (j1 >= j2) throw HypothesisViolatedError("need j1 < j2");
  check_box_move_hypotheses(q, j1, j2);
  Partition q2 = box_move(q, j1, j2);
  PairType after = classify_pair(p, q2);
  if (after == PairType::Neither)
    throw HypothesisViolatedError("(p, q') is not weakly indecomposable");

  // Both pairs have the same definite type here: the moved box rules the
  // all-equal case out on each side.
  const bool mono = before != PairType::EpiOnly;
  const std::size_t i1 = mono ? j1 + 1 : j1;
  const std::size_t i2 = mono ? j2 : j2 - 1;
  if (i2 > p.length())
    throw HypothesisViolatedError("window exceeds the first component");  // unreachable given the chains

  std::vector<unsigned> window(p.parts().begin() + static_cast<long>(i1 - 1),
                               p.parts().begin() + static_cast<long>(i2));
  Partition u(std::move(window), m);
  const std::size_t du = u.weight();

  AModule<Rational> sub = build_canonical_module<Rational>(p, q);
  AModule<Rational> big = build_canonical_module<Rational>(p, q2);
  AModule<Rational> quot{m, jordan_matrix<Rational>(u), jordan_matrix<Rational>(u),
                         Matrix<Rational>::identity(du)};
  AModule<Rational> mid = direct_sum(big, quot);

  const std::size_t d0 = p.weight(), d1 = q.weight();
  const auto roff = block_offsets(p);

  // Vertex-0 inclusion: identity outside the window, multiplication by X on it.
  Matrix<Rational> f1_0(d0, d0);
  for (std::size_t i = 1; i <= p.length(); ++i) {
    Matrix<Rational> blk = (i >= i1 && i <= i2)
                               ? to_matrix(PolyHom<Rational>::monomial(p.part(i), p.part(i), 1))
                               : Matrix<Rational>::identity(p.part(i));
    f1_0.set_block(roff[i], roff[i], blk);
  }

  // Vertex-1 inclusion into the moved partition: identity away from j1/j2,
  // multiplication by X between them, the box shifts at the ends.
  Matrix<Rational> f1_1(d1, d1);
  {
    const auto coff_src = block_offsets(q);
    std::vector<std::size_t> coff_dst(q.length() + 2, 0);
    for (std::size_t j = 1; j <= q.length() + 1; ++j) {
      unsigned prev = 0;
      if (j >= 2) {
        prev = q.part(j - 1);
        if (j - 1 == j1) prev += 1;
        if (j - 1 == j2) prev -= 1;
      }
      coff_dst[j] = coff_dst[j - 1] + prev;
    }
    for (std::size_t j = 1; j <= q.length(); ++j) {
      unsigned src = q.part(j);
      unsigned dst = src;
      unsigned exp = 0;
      if (j == j1) {
        dst = src + 1;
        exp = 1;
      } else if (j == j2) {
        dst = src - 1;
      } else if (j > j1 && j < j2) {
        exp = 1;
      }
      f1_1.set_block(coff_dst[j], coff_src[j], to_matrix(PolyHom<Rational>::monomial(src, dst, exp)));
    }
  }

  // Window projections: coordinate selection on vertex 0, the matching rows of
  // the intertwiners on vertex 1.
  Matrix<Rational> sel(du, d0);
  for (std::size_t k = 0; k < du; ++k) sel(k, roff[i1] + k) = Rational::one();
  Matrix<Rational> f2_1 = row_slice(sub.h, roff[i1], roff[i1] + du);
  Matrix<Rational> g1_1 = row_slice(big.h, roff[i1], roff[i1] + du);
  Matrix<Rational> neg_x = -jordan_matrix<Rational>(u);

  Matrix<Rational> F0 = vstack(f1_0, sel);
  Matrix<Rational> F1 = vstack(f1_1, f2_1);
  Matrix<Rational> G0 = hstack(sel, neg_x);
  Matrix<Rational> G1 = hstack(g1_1, neg_x);

  auto fail = [&](const char* what) {
    throw ExactnessFailureError(std::string("extension move verification failed: ") + what +
                                " for (" + p.str() + "|" + q.str() + ") at j1=" +
                                std::to_string(j1) + ", j2=" + std::to_string(j2));
  };
  if (!(F0 * sub.m0 == mid.m0 * F0) || !(F1 * sub.m1 == mid.m1 * F1) || !(F0 * sub.h == mid.h * F1))
    fail("inclusion is not a homomorphism");
  if (!(G0 * mid.m0 == quot.m0 * G0) || !(G1 * mid.m1 == quot.m1 * G1) ||
      !(G0 * mid.h == quot.h * G1))
    fail("projection is not a homomorphism");
  if (!(G0 * F0).is_zero() || !(G1 * F1).is_zero()) fail("composition is nonzero");
  if (rank(F0) != d0 || rank(F1) != d1) fail("inclusion is not injective");
  if (rank(G0) != du || rank(G1) != du) fail("projection is not surjective");
  // With the four rank facts and G F = 0, the middle dimension count
  // dim mid = dim sub + dim quot forces im F = ker G on both vertices.

  auto witness = std::make_shared<ExactSequenceWitness>(
      ExactSequenceWitness{std::move(sub), std::move(mid), std::move(quot), std::move(F0),
                           std::move(F1), std::move(G0), std::move(G1)});
  return DegenerationEdge{PartitionPair(p, q),  PartitionPair(p, q2), MoveKind::Extension, j1, j2,
                          true,                 std::move(witness)};
}

DegenerationEdge extension_degeneration_dual(const Partition& p, const Partition& q, std::size_t j1,
                                             std::size_t j2) {
  DegenerationEdge e = extension_degeneration(q, p, j1, j2);
  return DegenerationEdge{PartitionPair(p, q),      PartitionPair(e.to.q, e.to.p),
                          MoveKind::ExtensionDual,  j1,
                          j2,                       e.witnessed,
                          e.witness};
}

DegenerationEdge bundle_degeneration(const Partition& p, const Partition& q, std::size_t j1,
                                     std::size_t j2) {
  if (p.bound() != q.bound()) throw ShapeMismatchError("degeneration move with different bounds");
  check_box_move_hypotheses(q, j1, j2);
  for (std::size_t i = 1; i <= p.length(); ++i)
    if (p.part(i) <= q.part(j1) && p.part(i) >= q.part(j2))
      throw HypothesisViolatedError("a part of p lies in the window [q[j2], q[j1]]");
  Partition q2 = box_move(q, j1, j2);
  if (nilpotent_hom_dim(q2, p) != nilpotent_hom_dim(q, p))
    throw ExactnessFailureError("bundle move consistency violated: intertwiner fiber dimension changed");
  return DegenerationEdge{PartitionPair(p, q), PartitionPair(p, q2), MoveKind::Bundle, j1, j2,
                          false,               nullptr};
}

DegenerationEdge bundle_degeneration_dual(const Partition& p, const Partition& q, std::size_t j1,
                                          std::size_t j2) {
  DegenerationEdge e = bundle_degeneration(q, p, j1, j2);
  return DegenerationEdge{PartitionPair(p, q),   PartitionPair(e.to.q, e.to.p),
                          MoveKind::BundleDual,  j1,
                          j2,                    e.witnessed,
                          e.witness};
}

std::vector<DegenerationEdge> available_moves(const PartitionPair& pr) {
  std::vector<DegenerationEdge> out;
  auto try_move = [&](auto&& fn, std::size_t j1, std::size_t j2) {
    try {
      out.push_back(fn(pr.p, pr.q, j1, j2));
    } catch (const HypothesisViolatedError&) {
    }
  };
  const std::size_t lq = pr.q.length(), lp = pr.p.length();
  for (std::size_t j1 = 1; j1 < lq; ++j1)
    for (std::size_t j2 = j1 + 1; j2 <= lq; ++j2) try_move(extension_degeneration, j1, j2);
  for (std::size_t j1 = 1; j1 < lp; ++j1)
    for (std::size_t j2 = j1 + 1; j2 <= lp; ++j2) try_move(extension_degeneration_dual, j1, j2);
  for (std::size_t j1 = 1; j1 < lq; ++j1)
    for (std::size_t j2 = j1 + 1; j2 <= lq; ++j2) try_move(bundle_degeneration, j1, j2);
  for (std::size_t j1 = 1; j1 < lp; ++j1)
    for (std::size_t j2 = j1 + 1; j2 <= lp; ++j2) try_move(bundle_degeneration_dual, j1, j2);
  return out;
}

bool is_component_shape(const PartitionPair& pr) {
  const unsigned m = pr.bound();
  const std::size_t lp = pr.p.length(), lq = pr.q.length();
  if (lp <= 1 && lq <= 1) return true;
  if (lp == 2 && lq == 1 && pr.p.part(1) == m && m > pr.q.part(1) && pr.q.part(1) > pr.p.part(2))
    return true;
  if (lq == 2 && lp == 1 && pr.q.part(1) == m && m > pr.p.part(1) && pr.p.part(1) > pr.q.part(2))
    return true;
  return false;
}

ComponentSurvey component_candidates(unsigned m, unsigned d0, unsigned d1) {
  ComponentSurvey survey;
  for (const Partition& p : enumerate_partitions(d0, m))
    for (const Partition& q : enumerate_partitions(d1, m)) {
      if (!is_indecomposable_pair(p, q)) continue;
      PartitionPair pr(p, q);
      if (is_component_shape(pr)) {
        survey.candidates.push_back(pr);
        continue;
      }
      bool found = false;
      for (DegenerationEdge& e : available_moves(pr)) {
        if (e.kind != MoveKind::Extension && e.kind != MoveKind::ExtensionDual) continue;
        if (stratum_dim(e.to.p, e.to.q) <= stratum_dim(p, q)) continue;
        survey.escapes.push_back({pr, std::move(e)});
        found = true;
        break;
      }
      if (!found) survey.no_escape.push_back(pr);
    }
  return survey;
}

bool component_pair_compatible(const PartitionPair& a, const PartitionPair& b) {
  if (!is_component_shape(a) || !is_component_shape(b))
    throw std::invalid_argument("component compatibility requires component-shaped pairs");
  const unsigned m = a.bound();
  auto is_full_identity = [m](const PartitionPair& x) {
    return x.p.length() == 1 && x.q.length() == 1 && x.p.part(1) == m && x.q.part(1) == m;
  };
  auto is_full_left = [m](const PartitionPair& x) {
    return x.p.length() == 1 && x.q.length() == 0 && x.p.part(1) == m;
  };
  auto is_full_right = [m](const PartitionPair& x) {
    return x.q.length() == 1 && x.p.length() == 0 && x.q.part(1) == m;
  };
  auto mono_type = [](const PartitionPair& x) {
    PairType t = classify_pair(x.p, x.q);
    return t == PairType::MonoOnly || t == PairType::Both;
  };
  auto epi_type = [](const PartitionPair& x) {
    PairType t = classify_pair(x.p, x.q);
    return t == PairType::EpiOnly || t == PairType::Both;
  };
  if (is_full_identity(a) || is_full_identity(b)) return true;
  if (is_full_left(a) && mono_type(b)) return true;
  if (is_full_right(a) && epi_type(b)) return true;
  if (is_full_left(b) && mono_type(a)) return true;
  if (is_full_right(b) && epi_type(a)) return true;
  return false;
}

std::vector<PartitionPair> indecomposable_pairs_up_to(unsigned m, unsigned total_cap) {
  std::vector<PartitionPair> out;
  for (unsigned wp = 0; wp <= total_cap; ++wp)
    for (unsigned wq = 0; wp + wq <= total_cap; ++wq)
      for (const Partition& p : enumerate_partitions(wp, m))
        for (const Partition& q : enumerate_partitions(wq, m))
          if (is_indecomposable_pair(p, q)) out.emplace_back(p, q);
  return out;
}

IrreducibilityCertificate verify_irreducibility(unsigned m, unsigned d0, unsigned d1,
                                                const VerifyConfig& config) {
  FpModulusGuard field_guard(config.prime);
  IrreducibilityCertificate cert{
      m,   d0,    d1, config.prime, config.seed, config.samples,
      PartitionPair(maximal_partition(d0, m), maximal_partition(d1, m)),
      {},  {},    false, true, true, true, false};

  const std::vector<Partition> ps = enumerate_partitions(d0, m);
  const std::vector<Partition> qs = enumerate_partitions(d1, m);

  std::vector<AModule<Rational>> tests;
  for (const PartitionPair& t : indecomposable_pairs_up_to(m, d0 + d1))
    tests.push_back(build_canonical_module<Rational>(t.p, t.q));
  AModule<Rational> max_module = build_canonical_module<Rational>(cert.maximal.p, cert.maximal.q);
  std::vector<std::size_t> hom_to_max(tests.size());
  for (std::size_t t = 0; t < tests.size(); ++t) hom_to_max[t] = hom_dim(tests[t], max_module);

  // Reachability through single moves, memoized; the move graph is acyclic
  // because every move strictly raises a component in the dominance order.
  std::map<PartitionPair, bool> reached;
  std::map<PartitionPair, std::vector<DegenerationEdge>> moves_of;
  std::set<PartitionPair> edge_sources;
  std::function<bool(const PartitionPair&)> reach = [&](const PartitionPair& pr) -> bool {
    if (pr == cert.maximal) return true;
    auto it = reached.find(pr);
    if (it != reached.end()) return it->second;
    reached[pr] = false;  // placeholder against accidental cycles
    auto& mv = moves_of[pr];
    mv = available_moves(pr);
    edge_sources.insert(pr);
    bool ok = false;
    for (const DegenerationEdge& e : mv)
      if (reach(e.to)) {
        ok = true;
        break;
      }
    reached[pr] = ok;
    return ok;
  };

  std::size_t stratum_index = 0;
  std::size_t max_dim = 0;
  std::size_t max_dim_count = 0;
  bool max_dim_is_maximal = false;

  for (const Partition& p : ps)
    for (const Partition& q : qs) {
      StratumRecord rec{check_dense_orbit_identity(p, q), false, true, false, 0, 0};
      rec.is_maximal = rec.report.pair == cert.maximal;

      AModule<Rational> canon = build_canonical_module<Rational>(p, q);
      for (std::size_t t = 0; t < tests.size(); ++t)
        if (hom_to_max[t] > hom_dim(tests[t], canon)) {
          rec.hom_order_ok = false;
          break;
        }

      rec.reached_maximal = reach(rec.report.pair);

      AModule<Fp> canon_fp = build_canonical_module<Fp>(p, q);
      rec.samples_total = config.samples;
      for (unsigned k = 0; k < config.samples; ++k) {
        std::uint64_t s = derive_seed(config.seed, stratum_index, k);
        AModule<Fp> sample = sample_stratum(p, q, s);
        IsoOptions opts;
        opts.random_attempts = config.iso_attempts;
        opts.seed = derive_seed(s, 0x5eed, k);
        if (check_isomorphic(sample, canon_fp, opts).isomorphic) ++rec.samples_isomorphic;
      }

      if (max_dim_count == 0 || rec.report.stratum_dimension > max_dim) {
        max_dim = rec.report.stratum_dimension;
        max_dim_count = 1;
        max_dim_is_maximal = rec.is_maximal;
      } else if (rec.report.stratum_dimension == max_dim) {
        ++max_dim_count;
      }

      cert.all_hom_order = cert.all_hom_order && rec.hom_order_ok;
      cert.all_samples_isomorphic =
          cert.all_samples_isomorphic && rec.samples_isomorphic == rec.samples_total;
      cert.all_dense = cert.all_dense && rec.report.dense_in_stratum;
      cert.strata.push_back(std::move(rec));
      ++stratum_index;
    }

  cert.unique_max_dimension = max_dim_count == 1 && max_dim_is_maximal;

  for (const PartitionPair& src : edge_sources)
    for (const DegenerationEdge& e : moves_of[src]) cert.edges.push_back(e);

  cert.verdict = cert.unique_max_dimension && cert.all_hom_order && cert.all_samples_isomorphic &&
                 cert.all_dense;
  return cert;
}

std::string degeneration_dot(const IrreducibilityCertificate& cert) {
  std::string out = "digraph degenerations {\n";
  for (const StratumRecord& r : cert.strata) {
    out += "  \"" + r.report.pair.str() + "\" [label=\"(" + r.report.pair.str() +
           ") dim=" + std::to_string(r.report.stratum_dimension) + "\"";
    if (r.is_maximal) out += " shape=doubleoctagon";
    out += "];\n";
  }
  for (const DegenerationEdge& e : cert.edges)
    out += "  \"" + e.from.str() + "\" -> \"" + e.to.str() + "\" [label=\"" +
           move_kind_name(e.kind) + "\"];\n";
  out += "}\n";
  return out;
}

SweepSummary run_sweep(unsigned m_max, unsigned d_max, const SweepConfig& config) {
  SweepSummary summary{m_max, d_max, {}, };
  CheckResult dim_identity{"dense-orbit-dimension-identity"};
  CheckResult append_iso{"append-equal-part-isomorphism"};
  CheckResult indec_agree{"indecomposability-agreement"};
  CheckResult ext_exact{"extension-move-exactness"};
  CheckResult families{"component-families"};
  CheckResult ext_agree{"component-sum-ext-agreement"};

  for (unsigned m = 1; m <= m_max; ++m) {
    for (unsigned d0 = 0; d0 <= d_max; ++d0)
      for (unsigned d1 = 0; d1 <= d_max; ++d1)
        for (const Partition& p : enumerate_partitions(d0, m))
          for (const Partition& q : enumerate_partitions(d1, m)) {
            // Dimension identity on every stratum.
            ++dim_identity.cases;
            StratumReport rep = check_dense_orbit_identity(p, q);
            std::size_t rhs = nilpotent_hom_dim(p, p) + nilpotent_hom_dim(q, q) -
                              nilpotent_hom_dim(q, p);
            AModule<Rational> canon = build_canonical_module<Rational>(p, q);
            if (!rep.dense_in_stratum || end_dim(canon) != rhs) ++dim_identity.failures;

            if (d0 + d1 > 0) {
              ++indec_agree.cases;
              if (is_indecomposable_module(canon) != is_indecomposable_pair(p, q))
                ++indec_agree.failures;
            }

            if (is_weakly_indecomposable(p, q)) {
              for (unsigned n = 1; n <= m; ++n) {
                ++append_iso.cases;
                Partition nn({n}, m);
                AModule<Rational> lhs = build_canonical_module<Rational>(
                    partition_union(p, nn), partition_union(q, nn));
                AModule<Rational> rhs_mod =
                    direct_sum(canon, build_canonical_module<Rational>(nn, nn));
                IsoOptions opts;
                opts.random_attempts = config.iso_attempts;
                opts.seed = derive_seed(config.seed, d0 * 97 + d1, n);
                IsoResult iso = check_isomorphic(lhs, rhs_mod, opts);
                if (!iso.isomorphic || iso.probabilistic_negative) ++append_iso.failures;
              }
              for (std::size_t j1 = 1; j1 < q.length(); ++j1)
                for (std::size_t j2 = j1 + 1; j2 <= q.length(); ++j2) {
                  try {
                    extension_degeneration(p, q, j1, j2);
                    ++ext_exact.cases;
                  } catch (const HypothesisViolatedError&) {
                  } catch (const ExactnessFailureError&) {
                    ++ext_exact.cases;
                    ++ext_exact.failures;
                  }
                }
            }
          }

    for (unsigned d0 = 0; d0 <= d_max; ++d0)
      for (unsigned d1 = 0; d1 <= d_max; ++d1) {
        ComponentSurvey survey = component_candidates(m, d0, d1);
        families.cases += survey.candidates.size() + survey.escapes.size() + survey.no_escape.size();
        families.failures += survey.no_escape.size();
        for (const PartitionPair& c : survey.candidates)
          if (!is_indecomposable_pair(c.p, c.q)) ++families.failures;
      }

    // Component-shaped pairs of every admissible weight, each against each.
    std::vector<PartitionPair> shapes;
    for (const PartitionPair& pr : indecomposable_pairs_up_to(m, 2 * d_max))
      if (pr.p.weight() <= d_max && pr.q.weight() <= d_max && is_component_shape(pr))
        shapes.push_back(pr);
    std::vector<AModule<Rational>> mods;
    mods.reserve(shapes.size());
    for (const PartitionPair& pr : shapes) mods.push_back(build_canonical_module<Rational>(pr.p, pr.q));
    for (std::size_t i = 0; i < shapes.size(); ++i)
      for (std::size_t j = 0; j < shapes.size(); ++j) {
        ++ext_agree.cases;
        bool compatible = component_pair_compatible(shapes[i], shapes[j]);
        bool ext_vanishes = ext1_dim(mods[i], mods[j]) == 0 && ext1_dim(mods[j], mods[i]) == 0;
        if (compatible != ext_vanishes) ++ext_agree.failures;
      }
  }

  summary.checks = {dim_identity, append_iso, indec_agree, ext_exact, families, ext_agree};
  return summary;
}

}  // namespace birkhoff
