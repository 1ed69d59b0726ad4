#ifndef FROBLAB_KGROUPS_HPP
#define FROBLAB_KGROUPS_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "froblab/cartier.hpp"
#include "froblab/fmodules.hpp"
#include "froblab/ore.hpp"
#include "froblab/rng.hpp"

namespace froblab {

// ---------------------------------------------------------------------------
// K_0 classes: formal Z-combinations of simple crystals, keyed by
// (point, central character). Nilpotent modules have class 0.
// ---------------------------------------------------------------------------

struct CrystalKey {
  i64 point = 0;
  FqPoly f;             // monic irreducible over the canonical F_q
  i64 endo_degree = 0;  // r(Z)

  friend bool operator<(const CrystalKey& a, const CrystalKey& b) {
    if (a.point != b.point) return a.point < b.point;
    return a.f < b.f;
  }
  friend bool operator==(const CrystalKey& a, const CrystalKey& b) {
    return a.point == b.point && a.f == b.f && a.endo_degree == b.endo_degree;
  }
};

class K0Class {
 public:
  K0Class() = default;

  const std::map<CrystalKey, i64>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(CrystalKey key, i64 mult) {
    if (mult == 0) return;
    auto it = terms_.find(key);
    if (it == terms_.end()) {
      terms_.emplace(std::move(key), mult);
    } else {
      it->second += mult;
      if (it->second == 0) terms_.erase(it);
    }
  }

  friend K0Class operator+(const K0Class& a, const K0Class& b) {
    K0Class out = a;
    for (const auto& [k, v] : b.terms_) out.add_term(k, v);
    return out;
  }
  friend K0Class operator-(const K0Class& a, const K0Class& b) {
    K0Class out = a;
    for (const auto& [k, v] : b.terms_) out.add_term(k, -v);
    return out;
  }
  K0Class scaled(i64 c) const {
    K0Class out;
    for (const auto& [k, v] : terms_) out.add_term(k, c * v);
    return out;
  }
  friend bool operator==(const K0Class& a, const K0Class& b) { return a.terms_ == b.terms_; }

 private:
  std::map<CrystalKey, i64> terms_;
};

inline K0Class k0_class(const CartierModule& m) {
  K0Class out;
  for (const auto& fac : simple_factors(m))
    out.add_term({fac.point, fac.min_poly, fac.endo_degree}, fac.multiplicity);
  return out;
}

// ---------------------------------------------------------------------------
// The function-sheaf trace: at each F_q-rational point, the trace of C on
// the stalk, as an F_q-linear operator. Extension points contribute nothing.
// ---------------------------------------------------------------------------

struct TraceFunction {
  FieldSpecPtr fq;                 // the canonical F_q the values live in
  std::map<i64, FqElem> values;    // rational point index -> value

  bool is_zero() const {
    for (const auto& [i, v] : values)
      if (!v.is_zero()) return false;
    return true;
  }
  friend bool operator==(const TraceFunction& a, const TraceFunction& b) {
    if (a.values.size() != b.values.size()) return false;
    for (const auto& [i, v] : a.values) {
      auto it = b.values.find(i);
      if (it == b.values.end() || !(it->second == v)) return false;
    }
    return true;
  }
  friend TraceFunction operator+(const TraceFunction& a, const TraceFunction& b) {
    TraceFunction out = a;
    for (const auto& [i, v] : b.values) {
      auto it = out.values.find(i);
      if (it == out.values.end()) {
        out.values.emplace(i, v);
      } else {
        it->second = it->second + v;
      }
    }
    return out;
  }
  friend TraceFunction operator-(const TraceFunction& a, const TraceFunction& b) {
    TraceFunction out = b;
    for (auto& [i, v] : out.values) v = -v;
    return a + out;
  }
  TraceFunction scaled(i64 c) const {
    TraceFunction out = *this;
    for (auto& [i, v] : out.values) {
      FqElem acc = FqElem::zero(fq);
      FqElem base = v;
      i64 cc = ((c % fq->p) + fq->p) % fq->p;
      for (i64 k = 0; k < cc; ++k) acc = acc + base;
      v = acc;
    }
    return out;
  }
};

inline FieldSpecPtr canonical_fq(const CartierModule& m) {
  return FieldSpec::make(m.p, m.base_exp, 1);
}

inline TraceFunction taelman_trace(const CartierModule& m) {
  TraceFunction out;
  out.fq = canonical_fq(m);
  for (std::size_t i = 0; i < m.blocks.size(); ++i) {
    const Block& b = m.blocks[i];
    if (!block_is_rational(m, b)) continue;
    if (b.dim() == 0) {
      out.values.emplace(static_cast<i64>(i), FqElem::zero(out.fq));
      continue;
    }
    // at a rational stalk C is F_q-linear; take its trace over F_q
    SubfieldView view = make_subfield_view(b, b.scalars->coeff_spec()->r);
    FqMat cq = matrix_over_subfield(view, b.cmat);
    FqElem tr = FqElem::zero(view.sub);
    for (std::size_t d = 0; d < cq.rows(); ++d) tr = tr + cq.at(d, d);
    out.values.emplace(static_cast<i64>(i), tr);
  }
  return out;
}

// trace of a formal class: a simple with central character f at a rational
// point contributes -f_{deg-1} (the trace of the companion matrix)
inline TraceFunction trace_of_class(const CartierModule& shape, const K0Class& cls) {
  TraceFunction out;
  out.fq = canonical_fq(shape);
  for (std::size_t i = 0; i < shape.blocks.size(); ++i)
    if (block_is_rational(shape, shape.blocks[i]))
      out.values.emplace(static_cast<i64>(i), FqElem::zero(out.fq));
  for (const auto& [key, mult] : cls.terms()) {
    auto it = out.values.find(key.point);
    if (it == out.values.end()) continue;  // extension point: no contribution
    FqElem tr = -key.f.coeff(static_cast<std::size_t>(key.f.degree() - 1));
    FqElem acc = FqElem::zero(out.fq);
    i64 c = ((mult % shape.p) + shape.p) % shape.p;
    for (i64 k = 0; k < c; ++k) acc = acc + tr;
    it->second = it->second + acc;
  }
  return out;
}

// ---------------------------------------------------------------------------
// The trace short exact sequence at K_0, verified on samples: the delta
// classes surject onto Map(X(F_q), F_q); relation elements
// [(F,c)] + [(F,c')] - [(F,c+c')] and p-th multiples map to zero.
// ---------------------------------------------------------------------------

struct TaelmanReport {
  bool spanning = false;
  bool deltas_match = false;
  i64 relation_samples = 0;
  i64 relation_failures = 0;
  i64 p_multiple_samples = 0;
  i64 p_multiple_failures = 0;
  bool ok() const {
    return spanning && deltas_match && relation_failures == 0 && p_multiple_failures == 0;
  }
};

namespace kdetail {

// a random semilinear operator on a standard block: random invertible-free
// k-linear matrix composed with the coordinatewise q-th root map
inline FpMat random_semilinear_c(Rng& rng, const Block& b) {
  const auto ops = b.ops();
  const auto spec = b.scalars->coeff_spec();
  const i64 e = spec->r;
  const std::size_t n = b.dim();
  FpMat root(ops, n, n);
  for (std::size_t copy = 0; copy < n / static_cast<std::size_t>(e); ++copy)
    for (i64 a = 0; a < e; ++a) {
      std::vector<i64> cv(static_cast<std::size_t>(e), 0);
      cv[static_cast<std::size_t>(a)] = 1;
      FqElem im = FqElem(spec, cv).qth_root();
      for (i64 i = 0; i < e; ++i)
        root.at(copy * e + static_cast<std::size_t>(i), copy * e + static_cast<std::size_t>(a)) =
            im.coeffs()[static_cast<std::size_t>(i)];
    }
  const std::size_t rank = n / static_cast<std::size_t>(e);
  FpMat s(ops, n, n);
  for (std::size_t bi = 0; bi < rank; ++bi)
    for (std::size_t bj = 0; bj < rank; ++bj) {
      FqElem c = random_fq(rng, spec);
      FpMat cm = scalar_action_matrix(b, RingElem(b.scalars, c));
      for (i64 i = 0; i < e; ++i)
        for (i64 j = 0; j < e; ++j)
          s.at(bi * e + static_cast<std::size_t>(i), bj * e + static_cast<std::size_t>(j)) =
              cm.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
    }
  return s.mul(root);
}

inline CartierModule random_rational_module(Rng& rng, i64 npoints, i64 p, i64 base_exp,
                                            i64 max_rank) {
  CartierModule m{p, base_exp, {}};
  auto scalars = make_finite_field(p, base_exp, base_exp);
  for (i64 i = 0; i < npoints; ++i) {
    Block b = standard_block(scalars, rng.below(max_rank + 1));
    if (b.dim() > 0) b.cmat = random_semilinear_c(rng, b);
    m.blocks.push_back(std::move(b));
  }
  return m;
}

}  // namespace kdetail

inline TaelmanReport verify_taelman_ses(i64 npoints, i64 p, i64 base_exp, i64 samples,
                                        std::uint64_t seed) {
  require(npoints >= 0, errc::invalid_params, "negative point count");
  TaelmanReport rep;
  Rng rng(seed);
  auto fq = FieldSpec::make(p, base_exp, 1);
  const i64 q = fq->order();

  if (npoints == 0) {
    rep.spanning = true;  // Map(empty, F_q) = 0
    rep.deltas_match = true;
    return rep;
  }

  // (a) the traces of the scaled delta classes span Map(X(F_q), F_q)
  std::vector<std::vector<FqElem>> tracevecs;
  for (i64 x = 0; x < npoints; ++x) {
    for (i64 c = 1; c < q; ++c) {
      CartierModule d = delta_crystal(npoints, x, p, base_exp);
      Block& blk = d.blocks[static_cast<std::size_t>(x)];
      // scale C by the scalar c-th element of F_q (enumerated canonically)
      std::vector<i64> cv;
      i64 t = c;
      for (i64 i = 0; i < base_exp; ++i) {
        cv.push_back(t % p);
        t /= p;
      }
      FqElem ce(blk.scalars->coeff_spec(), cv);
      blk.cmat = scalar_action_matrix(blk, RingElem(blk.scalars, ce));
      auto tr = taelman_trace(d);
      std::vector<FqElem> v;
      for (i64 i = 0; i < npoints; ++i) v.push_back(tr.values.at(i));
      tracevecs.push_back(std::move(v));
    }
  }
  FqMat span(FqOps{fq}, tracevecs.size(), static_cast<std::size_t>(npoints));
  for (std::size_t i = 0; i < tracevecs.size(); ++i)
    for (i64 j = 0; j < npoints; ++j) span.at(i, static_cast<std::size_t>(j)) = tracevecs[i][static_cast<std::size_t>(j)];
  rep.spanning = span.rank() == static_cast<std::size_t>(npoints);

  // (b) tr(x_* 1) = delta_x
  rep.deltas_match = true;
  for (i64 x = 0; x < npoints; ++x) {
    auto tr = taelman_trace(delta_crystal(npoints, x, p, base_exp));
    for (i64 y = 0; y < npoints; ++y) {
      FqElem expect = (x == y) ? FqElem::one(fq) : FqElem::zero(fq);
      if (!(tr.values.at(y) == expect)) rep.deltas_match = false;
    }
  }

  // (c) relation elements [(F,c)] + [(F,c')] - [(F,c+c')] trace to zero
  for (i64 s = 0; s < samples; ++s) {
    CartierModule base = kdetail::random_rational_module(rng, npoints, p, base_exp, 2);
    CartierModule m1 = base, m2 = base, m3 = base;
    for (std::size_t i = 0; i < base.blocks.size(); ++i) {
      if (base.blocks[i].dim() == 0) continue;
      FpMat c1 = kdetail::random_semilinear_c(rng, base.blocks[i]);
      FpMat c2 = kdetail::random_semilinear_c(rng, base.blocks[i]);
      m1.blocks[i].cmat = c1;
      m2.blocks[i].cmat = c2;
      m3.blocks[i].cmat = c1.add(c2);
    }
    auto t = taelman_trace(m1) + taelman_trace(m2) - taelman_trace(m3);
    ++rep.relation_samples;
    if (!t.is_zero()) ++rep.relation_failures;
  }

  // (d) p-th multiples trace to zero
  for (i64 s = 0; s < samples; ++s) {
    CartierModule m = kdetail::random_rational_module(rng, npoints, p, base_exp, 2);
    auto t = taelman_trace(m).scaled(p);
    ++rep.p_multiple_samples;
    if (!t.is_zero()) ++rep.p_multiple_failures;
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Rank over the skew fraction field D: presentations of right k[F]-modules
// by generators and relations; qd_rank = generators - rank_D(relations).
// Row reduction over D only left-multiplies rows, which preserves the
// right-column span.
// ---------------------------------------------------------------------------

struct DOps {
  using Elem = SkewFraction;
  RingPtr ring;
  Elem zero() const { return SkewFraction::zero(ring); }
  Elem one() const { return SkewFraction::one(ring); }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem inv(const Elem& a) const { return a.inv(); }
  bool is_zero(const Elem& a) const { return a.is_zero(); }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }
};

struct DPresentation {
  RingPtr ring;  // perfect finite field base
  i64 generators = 0;
  std::vector<std::vector<SkewPoly>> relations;  // each row has `generators` entries
};

inline i64 qd_rank(const DPresentation& pres) {
  require(pres.ring->kind() == RingKind::finite_field, errc::not_perfect,
          "the skew fraction field needs a perfect field base");
  require(pres.generators >= 0, errc::invalid_params, "negative generator count");
  const std::size_t n = static_cast<std::size_t>(pres.generators);
  const std::size_t mrel = pres.relations.size();
  DOps ops{pres.ring};
  // entry (k, j) = k-th coordinate of relation j; the right span of the
  // columns is the relation submodule after base change to D
  Mat<DOps> mat(ops, n, mrel);
  for (std::size_t j = 0; j < mrel; ++j) {
    require(pres.relations[j].size() == n, errc::invalid_params,
            "relation row has the wrong length");
    for (std::size_t k = 0; k < n; ++k)
      mat.at(k, j) = SkewFraction::from_poly(pres.relations[j][k]);
  }
  return pres.generators - static_cast<i64>(mat.rank());
}

// the Koszul presentation of a Cartier module (single block over k): its
// relations are the columns of the psi matrix, and its class dies in QD
inline DPresentation presentation_of_block(const Block& b) {
  auto pres = koszul_presentation(b);
  const std::size_t n = pres.psi_matrix.size();
  DPresentation out{b.scalars, static_cast<i64>(n), {}};
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<SkewPoly> row;
    for (std::size_t k = 0; k < n; ++k) row.push_back(pres.psi_matrix[k][j]);
    out.relations.push_back(std::move(row));
  }
  return out;
}

// ---------------------------------------------------------------------------
// The K_0 shadow of the pushforward map at a point: restriction along
// Frobenius preserves F_p-dimension, so dim U(M) - dim F_* U(M) = 0.
// ---------------------------------------------------------------------------

inline i64 k0_pushforward_defect(const CartierModule& m) {
  require(m.blocks.size() == 1, errc::multiple_points,
          "the defect is computed over a single point");
  const Block& b = m.blocks[0];
  i64 dim_u = static_cast<i64>(b.dim());
  i64 dim_fu = b.dim() == 0 ? 0 : static_cast<i64>(twist_block(b).cmat.rows());
  return dim_u - dim_fu;
}

// ---------------------------------------------------------------------------
// The Chow-group demonstration: on K_0(P^n)_Q = sum CH_i, the Frobenius
// pushforward acts as q^i, so 1 - F_* is diag(1 - q^i) with kernel and
// cokernel concentrated in i = 0.
// ---------------------------------------------------------------------------

struct ChowDemo {
  i64 kernel_dim = 0;
  i64 cokernel_dim = 0;
  std::vector<i64> diagonal;  // entries 1 - q^i, exact integers
};

inline ChowDemo chow_frobenius_demo(i64 n, i64 q) {
  require(n >= 0, errc::invalid_params, "n must be >= 0");
  require(q >= 2, errc::invalid_params, "q must be >= 2");
  ChowDemo out;
  i64 qi = 1;
  for (i64 i = 0; i <= n; ++i) {
    require(qi < (i64{1} << 40), errc::invalid_params, "q^i exceeds the exact range");
    out.diagonal.push_back(1 - qi);
    qi *= q;
  }
  for (i64 d : out.diagonal) {
    if (d == 0) {
      ++out.kernel_dim;
      ++out.cokernel_dim;
    }
  }
  return out;
}

}  // namespace froblab

#endif  // FROBLAB_KGROUPS_HPP
