#ifndef FROBLAB_SEMILINEAR_HPP
#define FROBLAB_SEMILINEAR_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "froblab/linalg.hpp"
#include "froblab/rings.hpp"

namespace froblab {

// ---------------------------------------------------------------------------
// A block: a finite-dimensional F_p-space carrying an action of a finite
// scalar ring (a finite field F_{p^e}, or F_q[x]/(f) for non-reduced points)
// plus an additive operator C subject to the semilinearity law
// C(m r^q) = C(m) r, i.e. C * A_{r^q} = A_r * C on matrices. Vectors are
// column vectors; operators act on the left.
// ---------------------------------------------------------------------------

struct Block {
  RingPtr scalars;             // FiniteFieldRing or QuotientBaseRing
  std::vector<FpMat> actions;  // one matrix per scalar generator (see scalar_generators)
  FpMat cmat;

  i64 p() const { return scalars->p(); }
  std::size_t dim() const { return cmat.rows(); }
  FpOps ops() const { return FpOps{p()}; }
};

// the generators whose actions a block records: the field generator w (when
// the residue field is a proper extension) and the residue x for quotients
inline std::vector<RingElem> scalar_generators(const RingPtr& scalars) {
  std::vector<RingElem> gens;
  if (auto w = scalars->symbol_elem('w')) gens.push_back(*w);
  if (scalars->kind() == RingKind::quotient) {
    const auto& qr = static_cast<const QuotientBaseRing&>(*scalars);
    gens.push_back(qr.wrap(FqPoly::x(scalars->coeff_spec())));
  }
  return gens;
}

// F_p-dimension of the scalar ring
inline i64 scalar_fp_dim(const RingPtr& scalars) {
  if (scalars->kind() == RingKind::finite_field) return scalars->coeff_spec()->r;
  const auto& qr = static_cast<const QuotientBaseRing&>(*scalars);
  return scalars->coeff_spec()->r * qr.modulus().degree();
}

// F_p-coordinates of a scalar w.r.t. the standard monomial basis
// (w^a for fields; w^a x^k for quotients)
inline std::vector<i64> scalar_coords(const RingPtr& scalars, const RingElem& v) {
  if (scalars->kind() == RingKind::finite_field) return v.as_field().coeffs();
  const auto& qr = static_cast<const QuotientBaseRing&>(*scalars);
  const i64 r = scalars->coeff_spec()->r;
  std::vector<i64> out(static_cast<std::size_t>(scalar_fp_dim(scalars)), 0);
  const FqPoly& f = v.as_poly();
  for (i64 k = 0; k <= f.degree(); ++k) {
    FqElem ck = f.coeff(static_cast<std::size_t>(k));
    for (i64 a = 0; a < r; ++a)
      out[static_cast<std::size_t>(k * r + a)] = ck.coeffs()[static_cast<std::size_t>(a)];
  }
  (void)qr;
  return out;
}

// a free rank-n block with the standard monomial basis and C = 0
inline Block standard_block(RingPtr scalars, i64 rank) {
  const i64 sdim = scalar_fp_dim(scalars);
  const i64 n = rank * sdim;
  Block b{scalars, {}, FpMat(FpOps{scalars->p()}, n, n)};
  auto gens = scalar_generators(scalars);
  // monomial basis of one scalar copy
  std::vector<RingElem> basis_elems;
  if (scalars->kind() == RingKind::finite_field) {
    const auto spec = scalars->coeff_spec();
    for (i64 a = 0; a < spec->r; ++a) {
      std::vector<i64> cv(static_cast<std::size_t>(spec->r), 0);
      cv[static_cast<std::size_t>(a)] = 1;
      basis_elems.push_back(RingElem(scalars, FqElem(spec, std::move(cv))));
    }
  } else {
    const auto& qr = static_cast<const QuotientBaseRing&>(*scalars);
    const auto spec = scalars->coeff_spec();
    for (i64 k = 0; k < qr.modulus().degree(); ++k)
      for (i64 a = 0; a < spec->r; ++a) {
        std::vector<i64> cv(static_cast<std::size_t>(spec->r), 0);
        cv[static_cast<std::size_t>(a)] = 1;
        basis_elems.push_back(
            qr.wrap(FqPoly::monomial(spec, FqElem(spec, std::move(cv)), static_cast<std::size_t>(k))));
      }
  }
  for (const auto& g : gens) {
    FpMat m(FpOps{scalars->p()}, n, n);
    for (i64 copy = 0; copy < rank; ++copy) {
      for (i64 j = 0; j < sdim; ++j) {
        RingElem prod = scalars->mul(g, basis_elems[static_cast<std::size_t>(j)]);
        auto col = scalar_coords(scalars, prod);
        for (i64 i = 0; i < sdim; ++i)
          m.at(static_cast<std::size_t>(copy * sdim + i), static_cast<std::size_t>(copy * sdim + j)) =
              col[static_cast<std::size_t>(i)];
      }
    }
    b.actions.push_back(std::move(m));
  }
  return b;
}

// matrix of multiplication by an arbitrary scalar, as a polynomial in the
// generator action matrices
inline FpMat scalar_action_matrix(const Block& b, const RingElem& v) {
  const auto ops = b.ops();
  const std::size_t n = b.dim();
  FpMat acc(ops, n, n);
  if (b.scalars->kind() == RingKind::finite_field) {
    const auto& c = v.as_field().coeffs();
    FpMat pw = FpMat::identity(ops, n);
    for (std::size_t a = 0; a < c.size(); ++a) {
      if (c[a] != 0) {
        FpMat term = pw;
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j) term.at(i, j) = ops.mul(term.at(i, j), c[a]);
        acc = acc.add(term);
      }
      if (a + 1 < c.size()) pw = b.actions.empty() ? pw : pw.mul(b.actions[0]);
    }
    return acc;
  }
  // quotient: coefficients are field elements, variable is the second generator
  const FqPoly& f = v.as_poly();
  require(b.actions.size() >= 1, errc::internal, "quotient block needs generator actions");
  const FpMat& xact = b.actions.back();
  const bool has_w = b.actions.size() == 2;
  FpMat xpow = FpMat::identity(ops, n);
  for (i64 k = 0; k <= f.degree(); ++k) {
    const auto& c = f.coeff(static_cast<std::size_t>(k)).coeffs();
    FpMat wacc(ops, n, n);
    FpMat wpow = FpMat::identity(ops, n);
    for (std::size_t a = 0; a < c.size(); ++a) {
      if (c[a] != 0) {
        FpMat term = wpow;
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j) term.at(i, j) = ops.mul(term.at(i, j), c[a]);
        wacc = wacc.add(term);
      }
      if (a + 1 < c.size() && has_w) wpow = wpow.mul(b.actions[0]);
    }
    acc = acc.add(wacc.mul(xpow));
    if (k < f.degree()) xpow = xpow.mul(xact);
  }
  return acc;
}

// ---------------------------------------------------------------------------
// Validation: the defining law C * A_{g^q} = A_g * C, checked on every
// scalar generator. Report-valued.
// ---------------------------------------------------------------------------

struct BlockValidation {
  bool ok = true;
  std::string violation;  // empty when ok
};

inline BlockValidation validate_block(const Block& b) {
  const std::size_t n = b.dim();
  for (const auto& a : b.actions)
    if (a.rows() != n || a.cols() != n)
      return {false, "action matrix dimension mismatch"};
  auto gens = scalar_generators(b.scalars);
  require(gens.size() == b.actions.size(), errc::invalid_params,
          "generator/action count mismatch");
  for (std::size_t g = 0; g < gens.size(); ++g) {
    FpMat lhs = b.cmat.mul(scalar_action_matrix(b, b.scalars->frobenius(gens[g])));
    FpMat rhs = b.actions[g].mul(b.cmat);
    if (!(lhs == rhs)) {
      // find a violating basis vector for the report
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < n; ++i) {
          if (lhs.at(i, j) != rhs.at(i, j)) {
            return {false, "C(r^q m) != r C(m) for generator #" + std::to_string(g) +
                               " at basis vector " + std::to_string(j)};
          }
        }
      }
    }
  }
  return {};
}

// ---------------------------------------------------------------------------
// The tilde twist: same space, scalar action precomposed with Frobenius
// (the new action of r is the old action of r^q); C is untouched.
// ---------------------------------------------------------------------------

inline Block twist_block(const Block& b) {
  Block out{b.scalars, {}, b.cmat};
  auto gens = scalar_generators(b.scalars);
  for (std::size_t g = 0; g < gens.size(); ++g)
    out.actions.push_back(scalar_action_matrix(b, b.scalars->frobenius(gens[g])));
  return out;
}

// ---------------------------------------------------------------------------
// Subfield view: the block's F_p-space seen as a vector space over a
// subfield F_{p^s} of the scalar field, with deterministic coordinates.
// Used to express k-linear (or k-semilinear image) data in field terms.
// ---------------------------------------------------------------------------

struct SubfieldView {
  FieldSpecPtr sub;                      // canonical F_{p^s}
  FpMat gen_action;                      // action of the subfield generator on the block
  std::vector<std::vector<i64>> basis;   // chosen basis vectors over the subfield
  FpMat full_basis;                      // columns: gen_action^l * basis_j (l fast)
  FpMat full_basis_inv;
  FqElem embed_root;                     // image of the internal generator in `sub`
  FpMat rho_basis_inv;                   // s x s: canonical coords -> embed_root-power coords
};

// minimal polynomial over F_p of a scalar field element, via its action
inline FqPoly fp_min_poly(const Block& b, const FpMat& action) {
  auto pspec = FieldSpec::make(b.p(), 1, 1);
  const std::size_t n = b.dim();
  FqMat m(FqOps{pspec}, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.at(i, j) = FqElem::from_int(pspec, action.at(i, j));
  return matrix_min_poly(m);
}

inline SubfieldView make_subfield_view(const Block& b, i64 s) {
  require(b.scalars->kind() == RingKind::finite_field, errc::unsupported_ring,
          "subfield views need field scalars");
  const auto spec = b.scalars->coeff_spec();
  const i64 e = spec->r;
  require(e % s == 0, errc::invalid_params, "subfield degree must divide the scalar degree");
  require(b.dim() > 0, errc::invalid_params, "empty block");
  SubfieldView view;
  view.sub = FieldSpec::make(b.p(), s, 1);
  if (s == 1) {
    // prime subfield: coordinates are plain F_p coordinates
    view.gen_action = FpMat::identity(b.ops(), b.dim());
    view.embed_root = FqElem::zero(view.sub);
  } else {
    // generator of the subfield inside the scalar field: w^{(p^e-1)/(p^s-1)}
    i64 pe = 1, ps = 1;
    for (i64 i = 0; i < e; ++i) pe *= b.p();
    for (i64 i = 0; i < s; ++i) ps *= b.p();
    FqElem gsub = FqElem::generator(spec).pow((pe - 1) / (ps - 1));
    view.gen_action = scalar_action_matrix(b, RingElem(b.scalars, gsub));

    // embedding of F_p[gsub] into the canonical F_{p^s}: a root of gsub's
    // minimal polynomial, canonical generator preferred, least root otherwise
    FqPoly mu_p = fp_min_poly(b, view.gen_action);
    // lift mu (coefficients in F_p) to the canonical subfield and take a root
    std::vector<FqElem> lifted;
    for (i64 i = 0; i <= mu_p.degree(); ++i) {
      i64 c = mu_p.coeff(static_cast<std::size_t>(i)).coeffs()[0];
      lifted.push_back(FqElem::from_int(view.sub, c));
    }
    FqPoly mu(view.sub, std::move(lifted));
    require(mu.degree() == s, errc::internal, "subfield generator has wrong degree");
    FqElem wsub = FqElem::generator(view.sub);
    if (mu.eval(wsub).is_zero()) {
      view.embed_root = wsub;
    } else {
      std::optional<FqElem> best;
      for (const auto& [g, mult] : fq_factor(mu)) {
        (void)mult;
        if (g.degree() == 1) {
          FqElem root = -g.coeff(0);
          if (!best || root < *best) best = root;
        }
      }
      require(best.has_value(), errc::internal, "minimal polynomial has no root in the subfield");
      view.embed_root = *best;
    }
  }

  // greedy basis over the subfield
  const std::size_t n = b.dim();
  std::vector<std::vector<i64>> span_rows;
  auto ops = b.ops();
  for (std::size_t cand = 0; cand < n; ++cand) {
    std::vector<i64> v(n, 0);
    v[cand] = 1;
    if (in_row_span(ops, span_rows, v)) continue;
    view.basis.push_back(v);
    std::vector<i64> cur = v;
    for (i64 l = 0; l < s; ++l) {
      span_rows.push_back(cur);
      std::vector<i64> next(n, 0);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          next[i] = ops.add(next[i], ops.mul(view.gen_action.at(i, j), cur[j]));
      cur = next;
    }
    span_rows = rref_rows(ops, span_rows, n);
  }
  require(view.basis.size() * static_cast<std::size_t>(s) == n, errc::internal,
          "subfield basis extraction failed");

  // assemble the full F_p-basis matrix (columns: gen^l basis_j)
  FpMat full(ops, n, n);
  std::size_t col = 0;
  for (const auto& v0 : view.basis) {
    std::vector<i64> cur = v0;
    for (i64 l = 0; l < s; ++l) {
      for (std::size_t i = 0; i < n; ++i) full.at(i, col) = cur[i];
      ++col;
      std::vector<i64> next(n, 0);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          next[i] = ops.add(next[i], ops.mul(view.gen_action.at(i, j), cur[j]));
      cur = next;
    }
  }
  view.full_basis = full;
  auto inv = full.inverse();
  require(inv.has_value(), errc::internal, "subfield basis matrix is singular");
  view.full_basis_inv = *inv;

  // change of basis in the canonical subfield: columns are powers of the
  // embedding root
  FpMat rho(ops, static_cast<std::size_t>(s), static_cast<std::size_t>(s));
  FqElem pw = FqElem::one(view.sub);
  for (i64 l = 0; l < s; ++l) {
    const auto& cc = pw.coeffs();
    for (i64 i = 0; i < s; ++i)
      rho.at(static_cast<std::size_t>(i), static_cast<std::size_t>(l)) = cc[static_cast<std::size_t>(i)];
    pw = pw * view.embed_root;
  }
  auto rho_inv = rho.inverse();
  require(rho_inv.has_value(), errc::internal, "embedding root powers are dependent");
  view.rho_basis_inv = *rho_inv;
  return view;
}

// rebuild the F_p-vector with the given subfield coordinates
inline std::vector<i64> vector_from_subfield_coords(const SubfieldView& view,
                                                    const std::vector<FqElem>& coords) {
  const i64 s = view.sub->r;
  std::vector<i64> full_coords(view.basis.size() * static_cast<std::size_t>(s), 0);
  for (std::size_t j = 0; j < coords.size(); ++j) {
    std::vector<i64> d = view.rho_basis_inv.apply(coords[j].coeffs());
    for (i64 l = 0; l < s; ++l)
      full_coords[j * static_cast<std::size_t>(s) + static_cast<std::size_t>(l)] = d[static_cast<std::size_t>(l)];
  }
  return view.full_basis.apply(full_coords);
}

// coordinates of an F_p-vector over the subfield basis
inline std::vector<FqElem> subfield_coords(const SubfieldView& view, const std::vector<i64>& v) {
  const i64 s = view.sub->r;
  std::vector<i64> c = view.full_basis_inv.apply(v);
  std::vector<FqElem> out;
  for (std::size_t j = 0; j < view.basis.size(); ++j) {
    FqElem acc = FqElem::zero(view.sub);
    FqElem pw = FqElem::one(view.sub);
    for (i64 l = 0; l < s; ++l) {
      acc = acc + pw * FqElem::from_int(view.sub, c[j * static_cast<std::size_t>(s) + static_cast<std::size_t>(l)]);
      pw = pw * view.embed_root;
    }
    out.push_back(acc);
  }
  return out;
}

// coordinate matrix of an operator's images of the subfield basis vectors:
// for subfield-linear operators this is the matrix over F_{p^s}; for
// semilinear operators it is the coordinate table of basis images
inline FqMat matrix_over_subfield(const SubfieldView& view, const FpMat& op) {
  const std::size_t m = view.basis.size();
  FqMat out(FqOps{view.sub}, m, m);
  for (std::size_t j = 0; j < m; ++j) {
    auto img = op.apply(view.basis[j]);
    auto coords = subfield_coords(view, img);
    for (std::size_t i = 0; i < m; ++i) out.at(i, j) = coords[i];
  }
  return out;
}

// ---------------------------------------------------------------------------
// Invariant subspaces (as row bases) and restrictions.
// ---------------------------------------------------------------------------

// rows spanning the image of op applied to a row-space
inline std::vector<std::vector<i64>> image_rows(const FpOps& ops, const FpMat& op,
                                                const std::vector<std::vector<i64>>& rows) {
  std::vector<std::vector<i64>> out;
  for (const auto& v : rows) out.push_back(op.apply(v));
  return rref_rows(ops, out, op.rows());
}

inline std::vector<std::vector<i64>> full_space_rows(const FpOps& ops, std::size_t n) {
  std::vector<std::vector<i64>> rows;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<i64> v(n, 0);
    v[i] = 1;
    rows.push_back(std::move(v));
  }
  (void)ops;
  return rows;
}

// matrix of op restricted to the invariant row-space (basis rows)
inline FpMat restrict_to_rows(const FpOps& ops, const FpMat& op,
                              const std::vector<std::vector<i64>>& rows) {
  const std::size_t k = rows.size();
  const std::size_t n = op.rows();
  FpMat basis(ops, n, k);
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t i = 0; i < n; ++i) basis.at(i, j) = rows[j][i];
  FpMat out(ops, k, k);
  for (std::size_t j = 0; j < k; ++j) {
    auto img = op.apply(rows[j]);
    auto sol = basis.solve(img);
    require(sol.has_value(), errc::internal, "subspace is not invariant under the operator");
    for (std::size_t i = 0; i < k; ++i) out.at(i, j) = (*sol)[i];
  }
  return out;
}

inline Block restrict_block(const Block& b, const std::vector<std::vector<i64>>& rows) {
  Block out{b.scalars, {}, restrict_to_rows(b.ops(), b.cmat, rows)};
  for (const auto& a : b.actions) out.actions.push_back(restrict_to_rows(b.ops(), a, rows));
  return out;
}

}  // namespace froblab

#endif  // FROBLAB_SEMILINEAR_HPP
