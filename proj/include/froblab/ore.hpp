#ifndef FROBLAB_ORE_HPP
#define FROBLAB_ORE_HPP

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "froblab/linalg.hpp"
#include "froblab/skew.hpp"

namespace froblab {

// ---------------------------------------------------------------------------
// Ore witnesses. For s in R \ {0} and r = sum r_i F^i:
//   left:   r~ = sum r_i s^{q^n - q^i} F^i,  s~ = s^{q^n},   r~ s = s~ r
//   right:  r~ = sum r_i s^{q^i - 1} F^i,    s~ = s,         s r~ = r s~
// Both identities are verified at construction.
// ---------------------------------------------------------------------------

enum class OreSide { left, right };

struct OreWitness {
  OreSide side;
  SkewPoly r_tilde;
  RingElem s_tilde;
};

inline OreWitness left_ore_witness(const RingElem& s, const SkewPoly& r) {
  const RingPtr& ring = r.ring();
  ring->check_elem(s);
  require(ring->is_domain(), errc::not_a_domain,
          "Ore witnesses are computed over domains, got " + ring->describe());
  require(!s.is_zero(), errc::zero_denominator, "witness denominator is zero");
  if (r.is_zero()) return {OreSide::left, r, s};
  const i64 n = r.degree().get();
  i64 qn = 1;
  for (i64 i = 0; i < n; ++i) {
    require(qn < (i64{1} << 40), errc::invalid_params, "witness exponent too large");
    qn *= ring->q();
  }
  std::map<i64, RingElem> m;
  i64 qi = 1;
  i64 last = 0;
  for (const auto& [i, ri] : r.coeffs()) {
    for (; last < i; ++last) qi *= ring->q();
    m.emplace(i, ri * ring->pow(s, qn - qi));
  }
  SkewPoly rt(ring, std::move(m));
  RingElem st = ring->pow(s, qn);
  require(rt * SkewPoly::constant(s) == SkewPoly::constant(st) * r, errc::internal,
          "left Ore witness identity failed");
  return {OreSide::left, std::move(rt), std::move(st)};
}

inline OreWitness right_ore_witness(const RingElem& s, const SkewPoly& r) {
  const RingPtr& ring = r.ring();
  ring->check_elem(s);
  require(ring->is_domain(), errc::not_a_domain,
          "Ore witnesses are computed over domains, got " + ring->describe());
  require(!s.is_zero(), errc::zero_denominator, "witness denominator is zero");
  std::map<i64, RingElem> m;
  i64 qi = 1;
  i64 last = 0;
  for (const auto& [i, ri] : r.coeffs()) {
    for (; last < i; ++last) {
      require(qi < (i64{1} << 40), errc::invalid_params, "witness exponent too large");
      qi *= ring->q();
    }
    m.emplace(i, ri * ring->pow(s, qi - 1));
  }
  SkewPoly rt(ring, std::move(m));
  require(SkewPoly::constant(s) * rt == r * SkewPoly::constant(s), errc::internal,
          "right Ore witness identity failed");
  return {OreSide::right, std::move(rt), s};
}

// ---------------------------------------------------------------------------
// Localization of F_q[x][F] at S = {f^n}: the image of num * den^{-1} in
// (S^{-1}R)[F]. Moving den^{-1} past F^i raises it to the q^i-th power, so
// the normal form is sum (r_i / den^{q^i}) F^i with coefficients in F_q(x)
// whose denominators divide a power of f.
// ---------------------------------------------------------------------------

struct LocalizedSkewPoly {
  RingPtr loc_ring;  // F_q(x)
  FqPoly f;          // S = powers of f
  SkewPoly value;    // over loc_ring
};

inline bool divides_power_of(const FqPoly& den, const FqPoly& f) {
  FqPoly d = den.monic();
  while (d.degree() > 0) {
    FqPoly g = FqPoly::gcd(d, f);
    if (g.degree() == 0) return false;
    d = d / g;
  }
  return true;
}

inline RingPtr localized_ring_for(const RingPtr& poly_ring) {
  require(poly_ring->kind() == RingKind::poly, errc::unsupported_ring,
          "localization is implemented for F_q[x]");
  const auto& pr = static_cast<const PolyBaseRing&>(*poly_ring);
  return std::make_shared<RatFuncRing>(poly_ring->coeff_spec(), pr.symbol());
}

inline LocalizedSkewPoly localization_normal_form(const SkewPoly& num, const FqPoly& den,
                                                  const FqPoly& f) {
  const RingPtr& ring = num.ring();
  require(ring->kind() == RingKind::poly, errc::unsupported_ring,
          "localization is implemented for F_q[x]");
  require(!den.is_zero(), errc::zero_denominator, "denominator is zero");
  require(f.degree() >= 1, errc::invalid_params, "f must be nonconstant");
  require(divides_power_of(den, f), errc::denominator_not_in_s,
          "denominator is not a power of f (up to units)");
  RingPtr loc = localized_ring_for(ring);
  const auto& rr = static_cast<const RatFuncRing&>(*loc);
  std::map<i64, RingElem> m;
  for (const auto& [i, ri] : num.coeffs()) {
    // F^i den^{-1} = (den^{q^i})^{-1} F^i
    FqPoly dqi = den.frobenius_iter(i);
    m.emplace(i, rr.wrap_reduced(ri.as_poly(), dqi));
  }
  return {loc, f, SkewPoly(loc, std::move(m))};
}

// product of two localized pairs (numA/denA) * (numB/denB) as a pair, using
// the right Ore witness to commute denA^{-1} past numB
inline std::pair<SkewPoly, FqPoly> localized_pair_product(const SkewPoly& num_a, const FqPoly& den_a,
                                                          const SkewPoly& num_b, const FqPoly& den_b) {
  const RingPtr& ring = num_a.ring();
  RingElem da(ring, den_a);
  OreWitness w = right_ore_witness(da, num_b);
  return {num_a * w.r_tilde, den_a * den_b};
}

// ---------------------------------------------------------------------------
// The skew fraction field D = Quot(k[F]) for k a perfect (finite) field.
// Elements are right fractions num * den^{-1}, den monic, reduced
// (gcrd(num, den) = 1). Arithmetic aligns denominators on least common
// right multiples.
// ---------------------------------------------------------------------------

class SkewFraction {
 public:
  SkewFraction() = default;
  SkewFraction(SkewPoly num, SkewPoly den) { assign(std::move(num), std::move(den)); }

  static SkewFraction of(SkewPoly num, SkewPoly den) {
    return SkewFraction(std::move(num), std::move(den));
  }
  static SkewFraction from_poly(SkewPoly num) {
    auto ring = num.ring();
    return SkewFraction(std::move(num), SkewPoly::one(ring));
  }
  static SkewFraction zero(const RingPtr& ring) {
    return from_poly(SkewPoly::zero(ring));
  }
  static SkewFraction one(const RingPtr& ring) { return from_poly(SkewPoly::one(ring)); }

  const SkewPoly& num() const { return num_; }
  const SkewPoly& den() const { return den_; }
  const RingPtr& ring() const { return num_.ring(); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }

  friend bool operator==(const SkewFraction& a, const SkewFraction& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() == b.is_zero();
    // align on a common right multiple of the denominators and compare
    auto e = euclid_left(a.den_, b.den_);
    return a.num_ * e.ru == b.num_ * e.rv;
  }
  friend bool operator!=(const SkewFraction& a, const SkewFraction& b) { return !(a == b); }

  friend SkewFraction operator+(const SkewFraction& a, const SkewFraction& b) {
    // m = den_a ru = den_b rv;  a + b = (num_a ru + num_b rv) m^{-1}
    auto e = euclid_left(a.den_, b.den_);
    return SkewFraction(a.num_ * e.ru + b.num_ * e.rv, e.lcrm);
  }
  friend SkewFraction operator-(const SkewFraction& a, const SkewFraction& b) {
    return a + (-b);
  }
  SkewFraction operator-() const {
    SkewFraction r = *this;
    r.num_ = -r.num_;
    return r;
  }

  friend SkewFraction operator*(const SkewFraction& a, const SkewFraction& b) {
    if (a.is_zero() || b.is_zero()) return zero(a.ring() ? a.ring() : b.ring());
    // den_a^{-1} num_b = ru rv^{-1} from lcrm(den_a, num_b) = den_a ru = num_b rv
    auto e = euclid_left(a.den_, b.num_);
    return SkewFraction(a.num_ * e.ru, b.den_ * e.rv);
  }

  SkewFraction inv() const {
    require(!is_zero(), errc::division_by_zero, "inverse of the zero fraction");
    return SkewFraction(den_, num_);
  }

  // display helper: the same element as a left fraction d^{-1} n. From
  // lclm(num, den) = lu*num = lv*den one gets num den^{-1} = lu^{-1} lv,
  // so the pair is (d, n) = (lu, lv).
  std::pair<SkewPoly, SkewPoly> as_left_fraction() const {
    if (is_zero()) return {SkewPoly::one(ring()), SkewPoly::zero(ring())};
    auto e = euclid_right(num_, den_);
    return {e.lu, e.lv};
  }

  std::string to_string() const {
    if (den_.is_one()) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
  }

 private:
  void assign(SkewPoly num, SkewPoly den) {
    const RingPtr& ring = num.ring() ? num.ring() : den.ring();
    require(ring->kind() == RingKind::finite_field, errc::not_perfect,
            "skew fractions need a perfect field base, got " + ring->describe());
    require(!den.is_zero(), errc::zero_denominator, "fraction denominator is zero");
    if (num.is_zero()) {
      num_ = SkewPoly::zero(ring);
      den_ = SkewPoly::one(ring);
      return;
    }
    // reduce: strip the greatest common right divisor
    SkewPoly g = euclid_right(num, den).gcrd;
    if (g.degree().finite() && g.degree().get() > 0) {
      num = div_right(num, g).quotient;
      den = div_right(den, g).quotient;
    }
    // monic denominator by a right unit
    if (!den.leading().is_one()) {
      RingElem c = ring->inv(den.leading());
      i64 d = den.degree().get();
      for (i64 i = 0; i < d; ++i) c = ring->qth_root(c);
      num = num.right_scaled(c);
      den = den.right_scaled(c);
    }
    num_ = std::move(num);
    den_ = std::move(den);
  }

  SkewPoly num_, den_;
};

inline SkewFraction d_add(const SkewFraction& a, const SkewFraction& b) { return a + b; }
inline SkewFraction d_mul(const SkewFraction& a, const SkewFraction& b) { return a * b; }
inline SkewFraction d_inv(const SkewFraction& a) { return a.inv(); }

// ---------------------------------------------------------------------------
// Bounded search for a common right multiple a u = b v != 0. The unknown
// coefficients range over the base field (finite fields) or over polynomials
// in t of degree <= tdeg_bound (rational functions); the resulting system is
// F_p-linear because q-th powering is additive and fixes F_p. A witness is
// verified exactly; NotFound certifies there is no solution inside the
// searched box.
// ---------------------------------------------------------------------------

struct CrmWitness {
  SkewPoly u, v;
};

inline std::optional<CrmWitness> common_right_multiple_search(const SkewPoly& a0,
                                                              const SkewPoly& b0, i64 maxdeg,
                                                              i64 tdeg_bound = 12) {
  RingPtr ring = a0.ring() ? a0.ring() : b0.ring();
  require(ring->is_field(), errc::not_a_field,
          "the bounded search runs over field bases, got " + ring->describe());
  require(maxdeg >= 0, errc::invalid_params, "maxdeg must be >= 0");
  if (a0.is_zero() || b0.is_zero()) return std::nullopt;

  const bool ratfunc = ring->kind() == RingKind::ratfunc;
  SkewPoly a = a0, b = b0;
  if (ratfunc) {
    // clear denominators: left-scaling both inputs by the same nonzero
    // constant keeps the solution set
    RingElem c = ring->one();
    for (const auto* poly : {&a0, &b0})
      for (const auto& [d, coeff] : poly->coeffs()) {
        const auto& rf = coeff.as_ratfunc();
        if (rf.den.degree() > 0 || !rf.den.leading().is_one()) {
          const auto& rr = static_cast<const RatFuncRing&>(*ring);
          c = c * rr.from_poly(rf.den);
        }
      }
    a = a.left_scaled(c);
    b = b.left_scaled(c);
  }

  const auto spec = ring->coeff_spec();
  const i64 r = spec->r;
  const i64 p = spec->p;
  const i64 tspan = ratfunc ? (tdeg_bound + 1) : 1;

  // unknown basis: u and v coefficients, per F-degree i <= maxdeg, per t-power
  // (ratfunc only), per F_p-coordinate of the residue field
  struct Unknown {
    bool for_u;
    i64 fdeg, tdeg, coord;
  };
  std::vector<Unknown> unknowns;
  for (int side = 0; side < 2; ++side)
    for (i64 i = 0; i <= maxdeg; ++i)
      for (i64 t = 0; t < tspan; ++t)
        for (i64 l = 0; l < r; ++l) unknowns.push_back({side == 0, i, t, l});

  auto basis_elem = [&](const Unknown& uk) -> RingElem {
    std::vector<i64> cv(static_cast<std::size_t>(r), 0);
    cv[static_cast<std::size_t>(uk.coord)] = 1;
    FqElem w(spec, std::move(cv));
    if (!ratfunc) return RingElem(ring, std::move(w));
    const auto& rr = static_cast<const RatFuncRing&>(*ring);
    return rr.from_poly(FqPoly::monomial(spec, std::move(w), static_cast<std::size_t>(uk.tdeg)));
  };

  // columns: coefficients of a*(e F^i) - b*(e F^i) stacked over output
  // F-degree, t-degree, coordinate
  std::vector<std::map<std::tuple<i64, i64, i64>, i64>> cols(unknowns.size());
  i64 max_out_t = 0;
  i64 max_out_f = 0;
  for (std::size_t k = 0; k < unknowns.size(); ++k) {
    const Unknown& uk = unknowns[k];
    SkewPoly mono = SkewPoly::term(basis_elem(uk), uk.fdeg);
    SkewPoly prod = uk.for_u ? (a * mono) : -(b * mono);
    for (const auto& [d, coeff] : prod.coeffs()) {
      max_out_f = std::max(max_out_f, d);
      if (ratfunc) {
        const auto& rf = coeff.as_ratfunc();
        require(rf.den.is_one(), errc::internal, "search expected polynomial coefficients");
        for (i64 m = 0; m <= rf.num.degree(); ++m) {
          const auto& fq = rf.num.coeff(static_cast<std::size_t>(m));
          max_out_t = std::max(max_out_t, m);
          for (i64 l = 0; l < r; ++l)
            if (fq.coeffs()[static_cast<std::size_t>(l)] != 0)
              cols[k][{d, m, l}] = fq.coeffs()[static_cast<std::size_t>(l)];
        }
      } else {
        const auto& fq = coeff.as_field();
        for (i64 l = 0; l < r; ++l)
          if (fq.coeffs()[static_cast<std::size_t>(l)] != 0)
            cols[k][{d, 0, l}] = fq.coeffs()[static_cast<std::size_t>(l)];
      }
    }
  }

  const std::size_t nrows = static_cast<std::size_t>((max_out_f + 1) * (max_out_t + 1) * r);
  FpMat m(FpOps{p}, nrows, unknowns.size());
  auto row_of = [&](i64 d, i64 t, i64 l) {
    return static_cast<std::size_t>((d * (max_out_t + 1) + t) * r + l);
  };
  for (std::size_t k = 0; k < cols.size(); ++k)
    for (const auto& [key, val] : cols[k])
      m.at(row_of(std::get<0>(key), std::get<1>(key), std::get<2>(key)), k) = val;

  auto ker = m.kernel();
  if (ker.empty()) return std::nullopt;
  const auto& x = ker.front();

  auto build = [&](bool for_u) {
    SkewPoly out = SkewPoly::zero(ring);
    for (std::size_t k = 0; k < unknowns.size(); ++k) {
      if (unknowns[k].for_u != for_u || x[k] == 0) continue;
      RingElem e = basis_elem(unknowns[k]);
      RingElem scaled = ring->mul(e, ring->from_int(x[k]));
      out = out + SkewPoly::term(std::move(scaled), unknowns[k].fdeg);
    }
    return out;
  };
  CrmWitness w{build(true), build(false)};
  require(a0 * w.u == b0 * w.v, errc::internal, "search produced an invalid witness");
  require(!(a0 * w.u).is_zero(), errc::internal, "search produced a zero common multiple");
  return w;
}

}  // namespace froblab

#endif  // FROBLAB_ORE_HPP
