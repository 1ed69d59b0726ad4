#ifndef FROBLAB_SKEW_HPP
#define FROBLAB_SKEW_HPP

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "froblab/rings.hpp"

namespace froblab {

// ---------------------------------------------------------------------------
// Degree of a skew polynomial: an integer or minus infinity (never a -1
// sentinel).
// ---------------------------------------------------------------------------

struct FDegree {
  bool neg_inf = true;
  i64 value = 0;

  static FDegree minus_infinity() { return {}; }
  static FDegree of(i64 d) { return {false, d}; }

  bool finite() const { return !neg_inf; }
  i64 get() const {
    require(!neg_inf, errc::internal, "degree of the zero polynomial");
    return value;
  }

  friend bool operator==(const FDegree& a, const FDegree& b) {
    return a.neg_inf == b.neg_inf && (a.neg_inf || a.value == b.value);
  }
  friend bool operator<(const FDegree& a, const FDegree& b) {
    if (a.neg_inf) return !b.neg_inf;
    if (b.neg_inf) return false;
    return a.value < b.value;
  }
  friend bool operator<=(const FDegree& a, const FDegree& b) { return a < b || a == b; }
  friend FDegree operator+(const FDegree& a, const FDegree& b) {
    if (a.neg_inf || b.neg_inf) return minus_infinity();
    return of(a.value + b.value);
  }
  std::string to_string() const { return neg_inf ? "-inf" : std::to_string(value); }
};

// ---------------------------------------------------------------------------
// SkewPoly: an element of R[F] in left-polynomial normal form sum r_i F^i,
// stored sparsely as degree -> nonzero coefficient. The normal form is
// unique, so structural equality is ring equality. Multiplication follows
// r F^i * s F^j = r s^{q^i} F^{i+j}.
// ---------------------------------------------------------------------------

class SkewPoly {
 public:
  SkewPoly() = default;
  SkewPoly(RingPtr ring, std::map<i64, RingElem> coeffs)
      : ring_(std::move(ring)), c_(std::move(coeffs)) {
    normalize();
  }

  static SkewPoly zero(RingPtr ring) { return SkewPoly(std::move(ring), {}); }
  static SkewPoly one(RingPtr ring) {
    auto r = ring;
    return term(r->one(), 0);
  }
  static SkewPoly f_power(RingPtr ring, i64 k) {
    auto r = ring;
    return term(r->one(), k);
  }
  static SkewPoly constant(RingElem c) {
    return term(std::move(c), 0);
  }
  static SkewPoly term(RingElem c, i64 deg) {
    require(deg >= 0, errc::invalid_params, "negative F-degree");
    auto ring = c.ring();
    std::map<i64, RingElem> m;
    m.emplace(deg, std::move(c));
    return SkewPoly(std::move(ring), std::move(m));
  }

  const RingPtr& ring() const { return ring_; }
  const std::map<i64, RingElem>& coeffs() const { return c_; }

  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_.begin()->first == 0 && c_.begin()->second.is_one(); }

  FDegree degree() const {
    if (c_.empty()) return FDegree::minus_infinity();
    return FDegree::of(c_.rbegin()->first);
  }
  const RingElem& leading() const {
    require(!c_.empty(), errc::internal, "leading coefficient of 0");
    return c_.rbegin()->second;
  }
  RingElem coeff(i64 i) const {
    auto it = c_.find(i);
    return it == c_.end() ? ring_->zero() : it->second;
  }

  friend bool operator==(const SkewPoly& a, const SkewPoly& b) {
    a.check_ring(b);
    if (a.c_.size() != b.c_.size()) return false;
    auto ia = a.c_.begin();
    auto ib = b.c_.begin();
    for (; ia != a.c_.end(); ++ia, ++ib) {
      if (ia->first != ib->first || !(ia->second == ib->second)) return false;
    }
    return true;
  }
  friend bool operator!=(const SkewPoly& a, const SkewPoly& b) { return !(a == b); }

  friend SkewPoly operator+(const SkewPoly& a, const SkewPoly& b) {
    a.check_ring(b);
    std::map<i64, RingElem> m = a.c_;
    for (const auto& [d, cb] : b.c_) {
      auto it = m.find(d);
      if (it == m.end()) {
        m.emplace(d, cb);
      } else {
        it->second = it->second + cb;
      }
    }
    return SkewPoly(a.ring_ ? a.ring_ : b.ring_, std::move(m));
  }
  friend SkewPoly operator-(const SkewPoly& a, const SkewPoly& b) { return a + (-b); }
  SkewPoly operator-() const {
    std::map<i64, RingElem> m;
    for (const auto& [d, c] : c_) m.emplace(d, -c);
    return SkewPoly(ring_, std::move(m));
  }

  // r F^i * s F^j = r s^{q^i} F^{i+j}
  friend SkewPoly operator*(const SkewPoly& a, const SkewPoly& b) {
    a.check_ring(b);
    auto ring = a.ring_ ? a.ring_ : b.ring_;
    std::map<i64, RingElem> m;
    for (const auto& [i, ra] : a.c_) {
      for (const auto& [j, rb] : b.c_) {
        RingElem v = ra * ring->frobenius_iter(rb, i);
        auto it = m.find(i + j);
        if (it == m.end()) {
          m.emplace(i + j, std::move(v));
        } else {
          it->second = it->second + v;
        }
      }
    }
    return SkewPoly(std::move(ring), std::move(m));
  }

  SkewPoly left_scaled(const RingElem& r) const {
    std::map<i64, RingElem> m;
    for (const auto& [d, c] : c_) m.emplace(d, r * c);
    return SkewPoly(ring_, std::move(m));
  }
  // A * r: coefficients pick up q^i-powers of r
  SkewPoly right_scaled(const RingElem& r) const {
    std::map<i64, RingElem> m;
    for (const auto& [d, c] : c_) m.emplace(d, c * ring_->frobenius_iter(r, d));
    return SkewPoly(ring_, std::move(m));
  }
  // A * F^k
  SkewPoly shifted(i64 k) const {
    require(k >= 0, errc::invalid_params, "negative shift");
    std::map<i64, RingElem> m;
    for (const auto& [d, c] : c_) m.emplace(d + k, c);
    return SkewPoly(ring_, std::move(m));
  }

  SkewPoly pow(i64 e) const {
    require(e >= 0, errc::invalid_params, "negative skew power");
    SkewPoly r = one(ring_), base = *this;
    while (e > 0) {
      if (e & 1) r = r * base;
      base = base * base;
      e >>= 1;
    }
    return r;
  }

  // scale by a unit on the left so the leading coefficient is 1; works over
  // any field
  SkewPoly monic_left() const {
    if (is_zero()) return *this;
    return left_scaled(ring_->inv(leading()));
  }
  // scale by a unit on the right so the leading coefficient is 1; needs
  // q-th roots, i.e. a perfect base
  SkewPoly monic_right() const {
    if (is_zero()) return *this;
    RingElem c = ring_->inv(leading());
    i64 d = degree().get();
    for (i64 i = 0; i < d; ++i) c = ring_->qth_root(c);
    return right_scaled(c);
  }

  std::string to_string() const {
    if (c_.empty()) return "0";
    std::string out;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
      if (!out.empty()) out += " + ";
      const i64 d = it->first;
      const std::string cs = it->second.to_string();
      const bool composite = cs.find_first_of("+/;") != std::string::npos;
      if (d == 0) {
        out += cs;
        continue;
      }
      if (!it->second.is_one()) {
        out += (composite ? "(" + cs + ")" : cs) + "*";
      }
      out += "F";
      if (d > 1) out += "^" + std::to_string(d);
    }
    return out;
  }

 private:
  void normalize() {
    for (auto it = c_.begin(); it != c_.end();) {
      if (it->second.is_zero()) {
        it = c_.erase(it);
      } else {
        ring_->check_elem(it->second);
        ++it;
      }
    }
  }
  void check_ring(const SkewPoly& o) const {
    if (!ring_ || !o.ring_) return;
    require(ring_.get() == o.ring_.get() || ring_->same(*o.ring_), errc::ring_mismatch,
            "skew polynomials over different rings");
  }

  RingPtr ring_;
  std::map<i64, RingElem> c_;
};

// ---------------------------------------------------------------------------
// Euclidean division. div_right computes A = Q*B + R and only needs forward
// Frobenius, so it works over any field (including F_q(t)). div_left
// computes A = B*Q + R and needs q-th roots of coefficients, hence a perfect
// field.
// ---------------------------------------------------------------------------

struct SkewDivision {
  SkewPoly quotient, remainder;
};

inline SkewDivision div_right(const SkewPoly& a, const SkewPoly& b) {
  const auto& ring = b.ring() ? b.ring() : a.ring();
  require(ring->is_field(), errc::not_a_field,
          "Euclidean division needs a field base, got " + ring->describe());
  require(!b.is_zero(), errc::division_by_zero, "division by the zero skew polynomial");
  SkewPoly q = SkewPoly::zero(ring);
  SkewPoly r = a;
  const i64 db = b.degree().get();
  const RingElem lb = b.leading();
  while (!r.is_zero() && db <= r.degree().get()) {
    i64 k = r.degree().get() - db;
    RingElem c = r.leading() * ring->inv(ring->frobenius_iter(lb, k));
    SkewPoly t = SkewPoly::term(std::move(c), k);
    q = q + t;
    r = r - t * b;
  }
  return {q, r};
}

inline SkewDivision div_left(const SkewPoly& a, const SkewPoly& b) {
  const auto& ring = b.ring() ? b.ring() : a.ring();
  require(ring->is_field(), errc::not_a_field,
          "Euclidean division needs a field base, got " + ring->describe());
  require(ring->is_perfect(), errc::not_perfect,
          "left division needs q-th roots; " + ring->describe() + " is not perfect");
  require(!b.is_zero(), errc::division_by_zero, "division by the zero skew polynomial");
  SkewPoly q = SkewPoly::zero(ring);
  SkewPoly r = a;
  const i64 db = b.degree().get();
  const RingElem lb_inv = ring->inv(b.leading());
  while (!r.is_zero() && db <= r.degree().get()) {
    i64 k = r.degree().get() - db;
    RingElem c = r.leading() * lb_inv;
    for (i64 i = 0; i < db; ++i) c = ring->qth_root(c);
    SkewPoly t = SkewPoly::term(std::move(c), k);
    q = q + t;
    r = r - b * t;
  }
  return {q, r};
}

// ---------------------------------------------------------------------------
// Extended Euclidean data. The right-division chain computes the greatest
// common right divisor (gcrd = u*A + v*B) and the least common left multiple
// (lclm = lu*A = lv*B). The left-division chain computes the greatest common
// left divisor (gcld = A*u + B*v) and the least common right multiple
// (lcrm = A*ru = B*rv).
// ---------------------------------------------------------------------------

struct RightEuclid {
  SkewPoly gcrd, u, v;      // gcrd = u*A + v*B, gcrd monic
  SkewPoly lclm, lu, lv;    // lclm = lu*A = lv*B, lclm monic
};

inline RightEuclid euclid_right(const SkewPoly& a, const SkewPoly& b) {
  const auto& ring = a.ring() ? a.ring() : b.ring();
  require(!(a.is_zero() && b.is_zero()), errc::empty_input, "gcrd(0, 0)");
  SkewPoly r0 = a, r1 = b;
  SkewPoly u0 = SkewPoly::one(ring), u1 = SkewPoly::zero(ring);
  SkewPoly v0 = SkewPoly::zero(ring), v1 = SkewPoly::one(ring);
  while (!r1.is_zero()) {
    auto [q, r2] = div_right(r0, r1);
    SkewPoly u2 = u0 - q * u1;
    SkewPoly v2 = v0 - q * v1;
    r0 = std::move(r1);
    r1 = std::move(r2);
    u0 = std::move(u1);
    u1 = std::move(u2);
    v0 = std::move(v1);
    v1 = std::move(v2);
  }
  RightEuclid out;
  // normalize the gcd row by a left unit
  RingElem s = ring->inv(r0.leading());
  out.gcrd = r0.left_scaled(s);
  out.u = u0.left_scaled(s);
  out.v = v0.left_scaled(s);
  // the terminal row gives the least common left multiple: u1*A = -v1*B
  if (a.is_zero() || b.is_zero()) {
    out.lclm = SkewPoly::zero(ring);
    out.lu = a.is_zero() ? SkewPoly::one(ring) : SkewPoly::zero(ring);
    out.lv = b.is_zero() ? SkewPoly::one(ring) : SkewPoly::zero(ring);
    return out;
  }
  SkewPoly m = u1 * a;
  RingElem t = ring->inv(m.leading());
  out.lclm = m.left_scaled(t);
  out.lu = u1.left_scaled(t);
  out.lv = (-v1).left_scaled(t);
  return out;
}

struct LeftEuclid {
  SkewPoly gcld, u, v;      // gcld = A*u + B*v, gcld monic
  SkewPoly lcrm, ru, rv;    // lcrm = A*ru = B*rv, lcrm monic
};

inline LeftEuclid euclid_left(const SkewPoly& a, const SkewPoly& b) {
  const auto& ring = a.ring() ? a.ring() : b.ring();
  require(!(a.is_zero() && b.is_zero()), errc::empty_input, "gcld(0, 0)");
  SkewPoly r0 = a, r1 = b;
  SkewPoly u0 = SkewPoly::one(ring), u1 = SkewPoly::zero(ring);
  SkewPoly v0 = SkewPoly::zero(ring), v1 = SkewPoly::one(ring);
  while (!r1.is_zero()) {
    auto [q, r2] = div_left(r0, r1);
    SkewPoly u2 = u0 - u1 * q;
    SkewPoly v2 = v0 - v1 * q;
    r0 = std::move(r1);
    r1 = std::move(r2);
    u0 = std::move(u1);
    u1 = std::move(u2);
    v0 = std::move(v1);
    v1 = std::move(v2);
  }
  LeftEuclid out;
  auto monic_right_with = [&](const SkewPoly& m, const SkewPoly& x,
                              const SkewPoly& y) -> std::array<SkewPoly, 3> {
    RingElem c = ring->inv(m.leading());
    i64 d = m.degree().get();
    for (i64 i = 0; i < d; ++i) c = ring->qth_root(c);
    return {m.right_scaled(c), x.right_scaled(c), y.right_scaled(c)};
  };
  auto [g, gu, gv] = monic_right_with(r0, u0, v0);
  out.gcld = g;
  out.u = gu;
  out.v = gv;
  if (a.is_zero() || b.is_zero()) {
    out.lcrm = SkewPoly::zero(ring);
    out.ru = a.is_zero() ? SkewPoly::one(ring) : SkewPoly::zero(ring);
    out.rv = b.is_zero() ? SkewPoly::one(ring) : SkewPoly::zero(ring);
    return out;
  }
  SkewPoly m = a * u1;
  auto [lm, lu, lv] = monic_right_with(m, u1, -v1);
  out.lcrm = lm;
  out.ru = lu;
  out.rv = lv;
  return out;
}

// Monic gcrd and lclm with all cofactors, over a perfect field.
inline RightEuclid gcrd_lclm(const SkewPoly& a, const SkewPoly& b) {
  const auto& ring = a.ring() ? a.ring() : b.ring();
  require(ring->is_field(), errc::not_a_field, "gcrd needs a field base");
  require(ring->is_perfect(), errc::not_perfect,
          "gcrd/lclm is provided over perfect fields; " + ring->describe() + " is not perfect");
  return euclid_right(a, b);
}

// Principal generator of sum g_i R[F]: the greatest common left divisor of
// the generators (all one-sided ideals of k[F] are principal for k a perfect
// field).
inline SkewPoly right_ideal_generator(const std::vector<SkewPoly>& gens) {
  require(!gens.empty(), errc::empty_input, "no generators");
  const auto& ring = gens.front().ring();
  require(ring->kind() == RingKind::finite_field, errc::not_perfect,
          "principal generators need a perfect finite field base");
  SkewPoly g = SkewPoly::zero(ring);
  for (const auto& gi : gens) {
    if (gi.is_zero()) continue;
    g = g.is_zero() ? gi : euclid_left(g, gi).gcld;
  }
  if (g.is_zero()) return g;
  return g.monic_right();
}

}  // namespace froblab

#endif  // FROBLAB_SKEW_HPP
