#ifndef FROBLAB_CARTIER_HPP
#define FROBLAB_CARTIER_HPP

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "froblab/semilinear.hpp"

namespace froblab {

// ---------------------------------------------------------------------------
// Cartier modules over a finite point set: one block per point, each a
// finite-dimensional space with scalars F_{q^{m_x}} (or a quotient ring for
// non-reduced points) and an additive operator C with C(r^q m) = r C(m).
// ---------------------------------------------------------------------------

struct CartierModule {
  i64 p = 2;
  i64 base_exp = 1;  // q = p^base_exp
  std::vector<Block> blocks;

  i64 q() const {
    i64 v = 1;
    for (i64 i = 0; i < base_exp; ++i) v *= p;
    return v;
  }
  std::size_t total_dim() const {
    std::size_t n = 0;
    for (const auto& b : blocks) n += b.dim();
    return n;
  }
};

// rational point: residue field is F_q itself
inline bool block_is_rational(const CartierModule& m, const Block& b) {
  return b.scalars->kind() == RingKind::finite_field &&
         b.scalars->coeff_spec()->r == m.base_exp;
}

struct CartierValidation {
  bool ok = true;
  i64 block = -1;
  std::string violation;
};

inline CartierValidation validate_cartier(const CartierModule& m) {
  for (std::size_t i = 0; i < m.blocks.size(); ++i) {
    const Block& b = m.blocks[i];
    if (b.dim() == 0) continue;
    require(b.scalars->p() == m.p && b.scalars->q() == m.q(), errc::invalid_params,
            "block scalar field disagrees with the module's q");
    auto rep = validate_block(b);
    if (!rep.ok) return {false, static_cast<i64>(i), rep.violation};
  }
  return {};
}

// ---------------------------------------------------------------------------
// Nilpotence via the descending image chain M >= CM >= C^2 M >= ...; the
// chain members are scalar-stable because r C(m) = C(r^q m).
// ---------------------------------------------------------------------------

struct NilpotenceResult {
  bool nilpotent = false;
  i64 v = 0;            // minimal exponent with C^v = 0 (when nilpotent)
  i64 stable_index = 0; // first index where the image chain stabilizes
  i64 stable_dim = 0;   // dimension of the stabilized image
};

inline NilpotenceResult is_nilpotent(const CartierModule& m) {
  NilpotenceResult out;
  i64 max_v = 0;
  i64 stable_dim = 0, stable_index = 0;
  bool nilpotent = true;
  for (const auto& b : m.blocks) {
    if (b.dim() == 0) continue;
    const auto ops = b.ops();
    auto rows = full_space_rows(ops, b.dim());
    i64 idx = 0;
    while (true) {
      auto next = image_rows(ops, b.cmat, rows);
      ++idx;
      if (next.size() == rows.size()) {
        --idx;
        break;
      }
      rows = std::move(next);
      if (rows.empty()) break;
    }
    if (rows.empty()) {
      max_v = std::max(max_v, idx);
    } else {
      nilpotent = false;
      stable_dim += static_cast<i64>(rows.size());
      stable_index = std::max(stable_index, idx);
    }
  }
  out.nilpotent = nilpotent;
  if (nilpotent) {
    out.v = std::max<i64>(max_v, 1);
  } else {
    out.stable_dim = stable_dim;
    out.stable_index = std::max(stable_index, max_v);
  }
  return out;
}

// stabilized image rows of one block
inline std::vector<std::vector<i64>> stable_image_rows(const Block& b) {
  const auto ops = b.ops();
  auto rows = full_space_rows(ops, b.dim());
  while (true) {
    auto next = image_rows(ops, b.cmat, rows);
    if (next.size() == rows.size()) return rows;
    rows = std::move(next);
    if (rows.empty()) return rows;
  }
}

// the crystal representative: C^e M for the least e with C^e M = C^{e+1} M;
// C is bijective on it and M / C^e M is nilpotent
inline CartierModule minimal_cartier_submodule(const CartierModule& m) {
  CartierModule out{m.p, m.base_exp, {}};
  for (const auto& b : m.blocks) {
    if (b.dim() == 0) {
      out.blocks.push_back(b);
      continue;
    }
    auto rows = stable_image_rows(b);
    out.blocks.push_back(restrict_block(b, rows));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Simple factors. On the minimal submodule of a block with residue field
// F_{q^m}, the operator B = C^m is F_{q^m}-linear and generates the center
// of the relevant twisted ring; a simple crystal is determined by the
// irreducible central character f over F_q (f not the variable), occurs with
// F_q-dimension m deg f, and has endomorphism field F_{q^{deg f}}.
// ---------------------------------------------------------------------------

struct SimpleFactor {
  i64 point = 0;
  FqPoly min_poly;      // monic irreducible over the canonical F_q
  i64 multiplicity = 0;
  i64 endo_degree = 0;  // r(Z): endomorphisms form F_{p^{r(Z)}}

  friend bool operator<(const SimpleFactor& a, const SimpleFactor& b) {
    if (a.point != b.point) return a.point < b.point;
    return a.min_poly < b.min_poly;
  }
  friend bool operator==(const SimpleFactor& a, const SimpleFactor& b) {
    return a.point == b.point && a.min_poly == b.min_poly &&
           a.multiplicity == b.multiplicity && a.endo_degree == b.endo_degree;
  }
};

inline std::vector<SimpleFactor> simple_factors(const CartierModule& m) {
  std::vector<SimpleFactor> out;
  for (std::size_t i = 0; i < m.blocks.size(); ++i) {
    const Block& b0 = m.blocks[i];
    if (b0.dim() == 0) continue;
    require(b0.scalars->kind() == RingKind::finite_field, errc::unsupported_ring,
            "simple factors are classified over reduced points only");
    auto rows = stable_image_rows(b0);
    if (rows.empty()) continue;
    Block b = restrict_block(b0, rows);
    const auto spec = b.scalars->coeff_spec();
    const i64 mdeg = spec->r / spec->base_exp;  // [k_x : F_q]
    FpMat big = b.cmat.pow(mdeg);               // B = C^m, k_x-linear
    SubfieldView view = make_subfield_view(b, spec->base_exp);
    FqMat bq = matrix_over_subfield(view, big);
    FqPoly mu = matrix_min_poly(bq);
    for (const auto& [f, e] : fq_factor(mu)) {
      (void)e;
      require(!f.coeff(0).is_zero(), errc::internal,
              "nilpotent part survived into the minimal submodule");
      FqMat ker_of = matrix_poly_eval(f, bq).pow(static_cast<i64>(bq.rows()));
      auto ker = ker_of.kernel();
      const i64 dim_fq = static_cast<i64>(ker.size());
      require(dim_fq % (mdeg * f.degree()) == 0, errc::internal,
              "isotypic dimension is not a multiple of the simple dimension");
      SimpleFactor fac;
      fac.point = static_cast<i64>(i);
      fac.min_poly = f;
      fac.multiplicity = dim_fq / (mdeg * f.degree());
      fac.endo_degree = spec->base_exp * f.degree();
      out.push_back(std::move(fac));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Skyscraper at a rational point: one-dimensional over F_q with C the
// identity; its trace function is the delta at that point.
// ---------------------------------------------------------------------------

inline CartierModule delta_crystal(i64 npoints, i64 x, i64 p, i64 base_exp) {
  require(npoints >= 1 && x >= 0 && x < npoints, errc::invalid_params,
          "point index out of range");
  CartierModule m{p, base_exp, {}};
  auto scalars = make_finite_field(p, base_exp, base_exp);
  for (i64 i = 0; i < npoints; ++i) {
    Block b = standard_block(scalars, i == x ? 1 : 0);
    if (i == x) b.cmat = FpMat::identity(b.ops(), b.dim());
    m.blocks.push_back(std::move(b));
  }
  return m;
}

// the same skyscraper inside an existing point structure
inline CartierModule delta_like(const CartierModule& shape, i64 x) {
  require(x >= 0 && x < static_cast<i64>(shape.blocks.size()), errc::invalid_params,
          "point index out of range");
  require(block_is_rational(shape, shape.blocks[static_cast<std::size_t>(x)]),
          errc::point_not_rational, "delta crystals live at F_q-rational points");
  CartierModule m{shape.p, shape.base_exp, {}};
  for (std::size_t i = 0; i < shape.blocks.size(); ++i) {
    Block b = standard_block(shape.blocks[i].scalars, static_cast<i64>(i) == x ? 1 : 0);
    if (static_cast<i64>(i) == x) b.cmat = FpMat::identity(b.ops(), b.dim());
    m.blocks.push_back(std::move(b));
  }
  return m;
}

// blockwise direct sum (same point structure)
inline Block block_direct_sum(const Block& a, const Block& b) {
  require(a.scalars->same(*b.scalars), errc::ring_mismatch, "blocks over different scalars");
  const auto ops = a.ops();
  const std::size_t n = a.dim() + b.dim();
  Block out{a.scalars, {}, FpMat(ops, n, n)};
  auto paste = [&](const FpMat& x, const FpMat& y) {
    FpMat m(ops, n, n);
    for (std::size_t i = 0; i < x.rows(); ++i)
      for (std::size_t j = 0; j < x.cols(); ++j) m.at(i, j) = x.at(i, j);
    for (std::size_t i = 0; i < y.rows(); ++i)
      for (std::size_t j = 0; j < y.cols(); ++j) m.at(a.dim() + i, a.dim() + j) = y.at(i, j);
    return m;
  };
  for (std::size_t g = 0; g < a.actions.size(); ++g)
    out.actions.push_back(paste(a.actions[g], b.actions[g]));
  out.cmat = paste(a.cmat, b.cmat);
  return out;
}

inline CartierModule module_direct_sum(const CartierModule& a, const CartierModule& b) {
  require(a.p == b.p && a.base_exp == b.base_exp && a.blocks.size() == b.blocks.size(),
          errc::ring_mismatch, "modules over different point structures");
  CartierModule out{a.p, a.base_exp, {}};
  for (std::size_t i = 0; i < a.blocks.size(); ++i)
    out.blocks.push_back(block_direct_sum(a.blocks[i], b.blocks[i]));
  return out;
}

// ---------------------------------------------------------------------------
// Endomorphisms of a block (as a crystal): the k_x-linear operators
// commuting with C. For simple crystals this is a finite field of size
// p^{r(Z)} (Wedderburn).
// ---------------------------------------------------------------------------

inline std::vector<FpMat> crystal_commutant(const Block& b) {
  const auto ops = b.ops();
  const std::size_t n = b.dim();
  // unknowns: entries of E; constraints: E A - A E = 0 for scalar actions
  // and for C
  std::vector<const FpMat*> constraints;
  for (const auto& a : b.actions) constraints.push_back(&a);
  constraints.push_back(&b.cmat);
  FpMat sys(ops, n * n * constraints.size(), n * n);
  std::size_t row = 0;
  for (const FpMat* a : constraints) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        // (E A - A E)_{ij} = sum_k E_{ik} A_{kj} - A_{ik} E_{kj}
        for (std::size_t k = 0; k < n; ++k) {
          sys.at(row, i * n + k) = ops.add(sys.at(row, i * n + k), a->at(k, j));
          sys.at(row, k * n + j) = ops.sub(sys.at(row, k * n + j), a->at(i, k));
        }
        ++row;
      }
  }
  std::vector<FpMat> basis;
  for (const auto& x : sys.kernel()) {
    FpMat e(ops, n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) e.at(i, j) = x[i * n + j];
    basis.push_back(std::move(e));
  }
  return basis;
}

struct WedderburnCheck {
  i64 fp_dim = 0;
  bool commutative = false;
  bool is_field = false;  // every nonzero element invertible
};

// exhaustive check that digests the commutant of a (small) simple crystal
inline WedderburnCheck wedderburn_check(const Block& b) {
  auto basis = crystal_commutant(b);
  WedderburnCheck out;
  out.fp_dim = static_cast<i64>(basis.size());
  const i64 p = b.p();
  i64 count = 1;
  for (i64 i = 0; i < out.fp_dim; ++i) {
    require(count <= 65536 / p, errc::invalid_params, "commutant too large to enumerate");
    count *= p;
  }
  const auto ops = b.ops();
  std::vector<FpMat> elems;
  std::vector<i64> digits(basis.size(), 0);
  for (i64 idx = 0; idx < count; ++idx) {
    FpMat e(ops, b.dim(), b.dim());
    i64 v = idx;
    for (std::size_t l = 0; l < basis.size(); ++l) {
      i64 d = v % p;
      v /= p;
      if (d == 0) continue;
      for (std::size_t i = 0; i < b.dim(); ++i)
        for (std::size_t j = 0; j < b.dim(); ++j)
          e.at(i, j) = ops.add(e.at(i, j), ops.mul(d, basis[l].at(i, j)));
    }
    elems.push_back(std::move(e));
  }
  out.commutative = true;
  out.is_field = true;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t j = i + 1; j < elems.size(); ++j)
      if (!(elems[i].mul(elems[j]) == elems[j].mul(elems[i]))) out.commutative = false;
    if (!elems[i].is_zero() && !elems[i].inverse().has_value()) out.is_field = false;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Extracting a simple sub-crystal supporting a given factor: take the
// f-primary component of B = C^m and the smallest C- and scalar-stable
// subspace generated by one of its vectors.
// ---------------------------------------------------------------------------

inline std::vector<std::vector<i64>> crystal_span(const Block& b,
                                                  const std::vector<i64>& v) {
  const auto ops = b.ops();
  std::vector<std::vector<i64>> rows{v};
  rows = rref_rows(ops, rows, b.dim());
  while (true) {
    std::vector<std::vector<i64>> next = rows;
    for (const auto& r : rows) {
      next.push_back(b.cmat.apply(r));
      for (const auto& a : b.actions) next.push_back(a.apply(r));
    }
    next = rref_rows(ops, next, b.dim());
    if (next.size() == rows.size()) return rows;
    rows = std::move(next);
  }
}

inline Block extract_simple_crystal(const CartierModule& m, const SimpleFactor& fac) {
  const Block& b0 = m.blocks[static_cast<std::size_t>(fac.point)];
  auto rows = stable_image_rows(b0);
  require(!rows.empty(), errc::invalid_params, "factor points at a nilpotent block");
  Block b = restrict_block(b0, rows);
  const auto spec = b.scalars->coeff_spec();
  const i64 mdeg = spec->r / spec->base_exp;
  FpMat big = b.cmat.pow(mdeg);
  SubfieldView view = make_subfield_view(b, spec->base_exp);
  FqMat bq = matrix_over_subfield(view, big);
  FqMat ker_of = matrix_poly_eval(fac.min_poly, bq).pow(static_cast<i64>(bq.rows()));
  auto ker = ker_of.kernel();
  require(!ker.empty(), errc::invalid_params, "factor is not supported on this module");
  std::vector<std::vector<i64>> vrows;
  for (const auto& k : ker) vrows.push_back(vector_from_subfield_coords(view, k));
  vrows = rref_rows(b.ops(), vrows, b.dim());

  // enumerate the primary component for a generator of minimal span
  const i64 p = b.p();
  i64 count = 1;
  for (std::size_t i = 0; i < vrows.size(); ++i) {
    require(count <= (i64{1} << 16) / p, errc::invalid_params,
            "primary component too large for the exhaustive search");
    count *= p;
  }
  const std::size_t target = static_cast<std::size_t>(fac.endo_degree * mdeg);
  std::vector<std::vector<i64>> best;
  for (i64 idx = 1; idx < count; ++idx) {
    std::vector<i64> v(b.dim(), 0);
    i64 t = idx;
    for (std::size_t l = 0; l < vrows.size(); ++l) {
      i64 d = t % p;
      t /= p;
      if (d == 0) continue;
      for (std::size_t c = 0; c < b.dim(); ++c)
        v[c] = b.ops().add(v[c], b.ops().mul(d, vrows[l][c]));
    }
    auto span = crystal_span(b, v);
    if (best.empty() || span.size() < best.size()) best = span;
    if (best.size() == target) break;
  }
  require(!best.empty(), errc::internal, "no generator found");
  require(best.size() == target, errc::internal, "simple sub-crystal has unexpected dimension");
  return restrict_block(b, best);
}

}  // namespace froblab

#endif  // FROBLAB_CARTIER_HPP
