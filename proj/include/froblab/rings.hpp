#ifndef FROBLAB_RINGS_HPP
#define FROBLAB_RINGS_HPP

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "froblab/fqpoly.hpp"

namespace froblab {

// ---------------------------------------------------------------------------
// Base rings: the commutative F_q-algebras the skew ring is built over.
// Supported variants: finite fields F_{p^r}, finite products of finite
// fields, the polynomial ring F_q[x], the rational function field F_q(t),
// and quotients F_q[x]/(f). All values are immutable; cross-ring arithmetic
// is a hard error.
// ---------------------------------------------------------------------------

enum class RingKind { finite_field, product, poly, ratfunc, quotient };

inline const char* ring_kind_name(RingKind k) {
  switch (k) {
    case RingKind::finite_field: return "GF";
    case RingKind::product: return "Product";
    case RingKind::poly: return "PolyRing";
    case RingKind::ratfunc: return "RatFunc";
    case RingKind::quotient: return "Quotient";
  }
  return "?";
}

// reduced fraction of polynomials; denominator monic and nonzero
struct RatFunc {
  FqPoly num, den;
};

class BaseRing;
using RingPtr = std::shared_ptr<const BaseRing>;

class RingElem {
 public:
  using Payload = std::variant<FqElem, std::vector<FqElem>, FqPoly, RatFunc>;

  RingElem() = default;
  RingElem(RingPtr ring, Payload v) : ring_(std::move(ring)), v_(std::move(v)) {}

  const RingPtr& ring() const { return ring_; }
  const Payload& payload() const { return v_; }

  const FqElem& as_field() const { return std::get<FqElem>(v_); }
  const std::vector<FqElem>& as_product() const { return std::get<std::vector<FqElem>>(v_); }
  const FqPoly& as_poly() const { return std::get<FqPoly>(v_); }
  const RatFunc& as_ratfunc() const { return std::get<RatFunc>(v_); }

  bool is_zero() const;
  bool is_one() const;
  std::string to_string() const;

  friend RingElem operator+(const RingElem& a, const RingElem& b);
  friend RingElem operator-(const RingElem& a, const RingElem& b);
  friend RingElem operator*(const RingElem& a, const RingElem& b);
  RingElem operator-() const;
  friend bool operator==(const RingElem& a, const RingElem& b);
  friend bool operator!=(const RingElem& a, const RingElem& b) { return !(a == b); }

 private:
  RingPtr ring_;
  Payload v_;
};

class BaseRing : public std::enable_shared_from_this<BaseRing> {
 public:
  virtual ~BaseRing() = default;

  virtual RingKind kind() const = 0;
  virtual std::string describe() const = 0;
  virtual bool same(const BaseRing& o) const = 0;

  // the coefficient field F_{p^r} (for products: the first factor's spec)
  virtual const FieldSpecPtr& coeff_spec() const = 0;

  i64 p() const { return coeff_spec()->p; }
  i64 q() const { return coeff_spec()->q(); }

  bool is_perfect() const {
    return kind() == RingKind::finite_field || kind() == RingKind::product;
  }
  bool is_field() const {
    return kind() == RingKind::finite_field || kind() == RingKind::ratfunc;
  }
  bool is_domain() const {
    return kind() == RingKind::finite_field || kind() == RingKind::poly ||
           kind() == RingKind::ratfunc;
  }
  bool is_finite_dimensional() const {
    return kind() == RingKind::finite_field || kind() == RingKind::product ||
           kind() == RingKind::quotient;
  }
  // every supported variant is F-finite
  bool is_f_finite() const { return true; }

  virtual RingElem zero() const = 0;
  virtual RingElem one() const = 0;
  virtual RingElem from_int(i64 n) const = 0;
  // parser atoms: 'x', 't', 'w'
  virtual std::optional<RingElem> symbol_elem(char c) const = 0;

  virtual RingElem add(const RingElem& a, const RingElem& b) const = 0;
  virtual RingElem neg(const RingElem& a) const = 0;
  RingElem sub(const RingElem& a, const RingElem& b) const { return add(a, neg(b)); }
  virtual RingElem mul(const RingElem& a, const RingElem& b) const = 0;
  virtual RingElem inv(const RingElem& a) const = 0;
  virtual bool is_zero(const RingElem& a) const = 0;
  virtual bool eq(const RingElem& a, const RingElem& b) const = 0;

  // a |-> a^{q^n}
  virtual RingElem frobenius_iter(const RingElem& a, i64 n) const = 0;
  RingElem frobenius(const RingElem& a) const { return frobenius_iter(a, 1); }

  virtual RingElem qth_root(const RingElem& a) const {
    (void)a;
    fail(errc::not_perfect, "q-th roots exist only over perfect rings (" + describe() + ")");
  }

  // a finite list B with every a = sum_{b in B} b * (c_b)^q
  virtual std::vector<RingElem> frobenius_basis() const = 0;
  // the coefficients c_b, aligned with frobenius_basis()
  virtual std::vector<RingElem> decompose_q(const RingElem& a) const = 0;

  virtual RingElem pow(const RingElem& a, i64 e) const {
    require(e >= 0, errc::invalid_params, "negative ring exponent");
    RingElem r = one(), base = a;
    while (e > 0) {
      if (e & 1) r = mul(r, base);
      base = mul(base, base);
      e >>= 1;
    }
    return r;
  }

  virtual std::string to_string(const RingElem& a) const = 0;

  void check_elem(const RingElem& a) const {
    require(a.ring() != nullptr, errc::internal, "uninitialized ring element");
    require(a.ring().get() == this || a.ring()->same(*this), errc::ring_mismatch,
            "element of " + a.ring()->describe() + " used in " + describe());
  }
  void check_pair(const RingElem& a, const RingElem& b) const {
    check_elem(a);
    check_elem(b);
  }
};

inline bool RingElem::is_zero() const { return ring_->is_zero(*this); }
inline bool RingElem::is_one() const { return ring_->eq(*this, ring_->one()); }
inline std::string RingElem::to_string() const { return ring_->to_string(*this); }
inline RingElem operator+(const RingElem& a, const RingElem& b) { return a.ring_->add(a, b); }
inline RingElem operator-(const RingElem& a, const RingElem& b) { return a.ring_->sub(a, b); }
inline RingElem operator*(const RingElem& a, const RingElem& b) { return a.ring_->mul(a, b); }
inline RingElem RingElem::operator-() const { return ring_->neg(*this); }
inline bool operator==(const RingElem& a, const RingElem& b) { return a.ring_->eq(a, b); }

// ---------------------------------------------------------------------------
// Finite field F_{p^r}
// ---------------------------------------------------------------------------

class FiniteFieldRing final : public BaseRing {
 public:
  explicit FiniteFieldRing(FieldSpecPtr spec) : spec_(std::move(spec)) {}

  RingKind kind() const override { return RingKind::finite_field; }
  std::string describe() const override {
    return "GF(" + std::to_string(spec_->order()) + ")";
  }
  bool same(const BaseRing& o) const override {
    return o.kind() == RingKind::finite_field &&
           spec_->same(*static_cast<const FiniteFieldRing&>(o).spec_);
  }
  const FieldSpecPtr& coeff_spec() const override { return spec_; }

  RingElem wrap(FqElem v) const { return RingElem(shared_from_this(), std::move(v)); }

  RingElem zero() const override { return wrap(FqElem::zero(spec_)); }
  RingElem one() const override { return wrap(FqElem::one(spec_)); }
  RingElem from_int(i64 n) const override { return wrap(FqElem::from_int(spec_, n)); }
  std::optional<RingElem> symbol_elem(char c) const override {
    if (c == 'w' && spec_->r > 1) return wrap(FqElem::generator(spec_));
    return std::nullopt;
  }

  RingElem add(const RingElem& a, const RingElem& b) const override {
    check_pair(a, b);
    return wrap(a.as_field() + b.as_field());
  }
  RingElem neg(const RingElem& a) const override {
    check_elem(a);
    return wrap(-a.as_field());
  }
  RingElem mul(const RingElem& a, const RingElem& b) const override {
    check_pair(a, b);
    return wrap(a.as_field() * b.as_field());
  }
  RingElem inv(const RingElem& a) const override {
    check_elem(a);
    return wrap(a.as_field().inv());
  }
  bool is_zero(const RingElem& a) const override {
    check_elem(a);
    return a.as_field().is_zero();
  }
  bool eq(const RingElem& a, const RingElem& b) const override {
    check_pair(a, b);
    return a.as_field() == b.as_field();
  }
  RingElem frobenius_iter(const RingElem& a, i64 n) const override {
    check_elem(a);
    return wrap(a.as_field().pow_q_power(n));
  }
  RingElem qth_root(const RingElem& a) const override {
    check_elem(a);
    return wrap(a.as_field().qth_root());
  }
  std::vector<RingElem> frobenius_basis() const override { return {one()}; }
  std::vector<RingElem> decompose_q(const RingElem& a) const override {
    return {qth_root(a)};
  }
  RingElem pow(const RingElem& a, i64 e) const override {
    check_elem(a);
    return wrap(a.as_field().pow(e));
  }
  std::string to_string(const RingElem& a) const override { return a.as_field().to_string(); }

 private:
  FieldSpecPtr spec_;
};

// ---------------------------------------------------------------------------
// Finite product of finite fields (Artinian reduced F_q-algebra); all
// factors share the same q. Componentwise arithmetic.
// ---------------------------------------------------------------------------

class ProductRing final : public BaseRing {
 public:
  explicit ProductRing(std::vector<FieldSpecPtr> factors) : factors_(std::move(factors)) {
    require(!factors_.empty(), errc::invalid_params, "empty product ring");
    for (const auto& f : factors_)
      require(f->p == factors_[0]->p && f->base_exp == factors_[0]->base_exp,
              errc::invalid_params, "product factors must share q");
  }

  RingKind kind() const override { return RingKind::product; }
  std::string describe() const override {
    std::string s = "Product(";
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      if (i) s += "x";
      s += "GF(" + std::to_string(factors_[i]->order()) + ")";
    }
    return s + ")";
  }
  bool same(const BaseRing& o) const override {
    if (o.kind() != RingKind::product) return false;
    const auto& po = static_cast<const ProductRing&>(o);
    if (po.factors_.size() != factors_.size()) return false;
    for (std::size_t i = 0; i < factors_.size(); ++i)
      if (!factors_[i]->same(*po.factors_[i])) return false;
    return true;
  }
  const FieldSpecPtr& coeff_spec() const override { return factors_[0]; }
  const std::vector<FieldSpecPtr>& factors() const { return factors_; }

  RingElem wrap(std::vector<FqElem> v) const { return RingElem(shared_from_this(), std::move(v)); }

  RingElem zero() const override { return map_all([](const FieldSpecPtr& s) { return FqElem::zero(s); }); }
  RingElem one() const override { return map_all([](const FieldSpecPtr& s) { return FqElem::one(s); }); }
  RingElem from_int(i64 n) const override {
    return map_all([n](const FieldSpecPtr& s) { return FqElem::from_int(s, n); });
  }
  std::optional<RingElem> symbol_elem(char) const override { return std::nullopt; }

  RingElem add(const RingElem& a, const RingElem& b) const override {
    return zip(a, b, [](const FqElem& x, const FqElem& y) { return x + y; });
  }
  RingElem neg(const RingElem& a) const override {
    return map_elem(a, [](const FqElem& x) { return -x; });
  }
  RingElem mul(const RingElem& a, const RingElem& b) const override {
    return zip(a, b, [](const FqElem& x, const FqElem& y) { return x * y; });
  }
  RingElem inv(const RingElem& a) const override {
    return map_elem(a, [](const FqElem& x) { return x.inv(); });
  }
  bool is_zero(const RingElem& a) const override {
    check_elem(a);
    for (const auto& x : a.as_product())
      if (!x.is_zero()) return false;
    return true;
  }
  bool eq(const RingElem& a, const RingElem& b) const override {
    check_pair(a, b);
    return componentwise_eq(a, b);
  }
  RingElem frobenius_iter(const RingElem& a, i64 n) const override {
    return map_elem(a, [n](const FqElem& x) { return x.pow_q_power(n); });
  }
  RingElem qth_root(const RingElem& a) const override {
    return map_elem(a, [](const FqElem& x) { return x.qth_root(); });
  }
  std::vector<RingElem> frobenius_basis() const override { return {one()}; }
  std::vector<RingElem> decompose_q(const RingElem& a) const override {
    return {qth_root(a)};
  }
  std::string to_string(const RingElem& a) const override {
    std::string s = "(";
    const auto& v = a.as_product();
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) s += ";";
      s += v[i].to_string();
    }
    return s + ")";
  }

 private:
  template <class F>
  RingElem map_all(F&& f) const {
    std::vector<FqElem> v;
    v.reserve(factors_.size());
    for (const auto& s : factors_) v.push_back(f(s));
    return wrap(std::move(v));
  }
  template <class F>
  RingElem map_elem(const RingElem& a, F&& f) const {
    check_elem(a);
    std::vector<FqElem> v;
    v.reserve(factors_.size());
    for (const auto& x : a.as_product()) v.push_back(f(x));
    return wrap(std::move(v));
  }
  template <class F>
  RingElem zip(const RingElem& a, const RingElem& b, F&& f) const {
    check_pair(a, b);
    const auto& va = a.as_product();
    const auto& vb = b.as_product();
    std::vector<FqElem> v;
    v.reserve(va.size());
    for (std::size_t i = 0; i < va.size(); ++i) v.push_back(f(va[i], vb[i]));
    return wrap(std::move(v));
  }
  bool componentwise_eq(const RingElem& a, const RingElem& b) const {
    const auto& va = a.as_product();
    const auto& vb = b.as_product();
    for (std::size_t i = 0; i < va.size(); ++i)
      if (!(va[i] == vb[i])) return false;
    return true;
  }

  std::vector<FieldSpecPtr> factors_;
};

// ---------------------------------------------------------------------------
// Polynomial ring F_q[x]
// ---------------------------------------------------------------------------

class PolyBaseRing final : public BaseRing {
 public:
  explicit PolyBaseRing(FieldSpecPtr spec, char symbol = 'x')
      : spec_(std::move(spec)), symbol_(symbol) {}

  RingKind kind() const override { return RingKind::poly; }
  std::string describe() const override {
    return "GF(" + std::to_string(spec_->order()) + ")[" + symbol_ + "]";
  }
  bool same(const BaseRing& o) const override {
    if (o.kind() != RingKind::poly) return false;
    const auto& po = static_cast<const PolyBaseRing&>(o);
    return spec_->same(*po.spec_) && symbol_ == po.symbol_;
  }
  const FieldSpecPtr& coeff_spec() const override { return spec_; }
  char symbol() const { return symbol_; }

  RingElem wrap(FqPoly v) const { return RingElem(shared_from_this(), std::move(v)); }

  RingElem zero() const override { return wrap(FqPoly::zero(spec_)); }
  RingElem one() const override { return wrap(FqPoly::one(spec_)); }
  RingElem from_int(i64 n) const override {
    return wrap(FqPoly::constant(FqElem::from_int(spec_, n)));
  }
  std::optional<RingElem> symbol_elem(char c) const override {
    if (c == symbol_) return wrap(FqPoly::x(spec_));
    if (c == 'w' && spec_->r > 1) return wrap(FqPoly::constant(FqElem::generator(spec_)));
    return std::nullopt;
  }

  RingElem add(const RingElem& a, const RingElem& b) const override {
    check_pair(a, b);
    return wrap(a.as_poly() + b.as_poly());
  }
  RingElem neg(const RingElem& a) const override {
    check_elem(a);
    return wrap(-a.as_poly());
  }
  RingElem mul(const RingElem& a, const RingElem& b) const override {
    check_pair(a, b);
    return wrap(a.as_poly() * b.as_poly());
  }
  RingElem inv(const RingElem& a) const override {
    check_elem(a);
    const FqPoly& f = a.as_poly();
    require(!f.is_zero(), errc::division_by_zero, "inverse of 0");
    require(f.degree() == 0, errc::division_by_zero,
            "only constants are units in " + describe());
    return wrap(FqPoly::constant(f.coeff(0).inv()));
  }
  bool is_zero(const RingElem& a) const override {
    check_elem(a);
    return a.as_poly().is_zero();
  }
  bool eq(const RingElem& a, const RingElem& b) const override {
    check_pair(a, b);
    return a.as_poly() == b.as_poly();
  }
  RingElem frobenius_iter(const RingElem& a, i64 n) const override {
    check_elem(a);
    return wrap(a.as_poly().frobenius_iter(n));
  }
  std::vector<RingElem> frobenius_basis() const override {
    std::vector<RingElem> b;
    for (i64 j = 0; j < q(); ++j)
      b.push_back(wrap(FqPoly::monomial(spec_, FqElem::one(spec_), static_cast<std::size_t>(j))));
    return b;
  }
  std::vector<RingElem> decompose_q(const RingElem& a) const override {
    check_elem(a);
    const FqPoly& f = a.as_poly();
    const i64 Q = q();
    std::vector<std::vector<FqElem>> parts(static_cast<std::size_t>(Q));
    for (i64 i = 0; i <= f.degree(); ++i) {
      i64 j = i % Q, k = i / Q;
      auto& part = parts[static_cast<std::size_t>(j)];
      part.resize(std::max<std::size_t>(part.size(), static_cast<std::size_t>(k) + 1),
                  FqElem::zero(spec_));
      part[static_cast<std::size_t>(k)] = f.coeff(static_cast<std::size_t>(i)).qth_root();
    }
    std::vector<RingElem> out;
    for (auto& part : parts) out.push_back(wrap(FqPoly(spec_, std::move(part))));
    return out;
  }
  std::string to_string(const RingElem& a) const override {
    return a.as_poly().to_string(symbol_);
  }

 private:
  FieldSpecPtr spec_;
  char symbol_;
};

// ---------------------------------------------------------------------------
// Rational function field F_q(t); elements are reduced fractions with monic
// denominator.
// ---------------------------------------------------------------------------

class RatFuncRing final : public BaseRing {
 public:
  explicit RatFuncRing(FieldSpecPtr spec, char symbol = 't')
      : spec_(std::move(spec)), symbol_(symbol) {}

  RingKind kind() const override { return RingKind::ratfunc; }
  std::string describe() const override {
    return "GF(" + std::to_string(spec_->order()) + ")(" + symbol_ + ")";
  }
  bool same(const BaseRing& o) const override {
    if (o.kind() != RingKind::ratfunc) return false;
    const auto& ro = static_cast<const RatFuncRing&>(o);
    return spec_->same(*ro.spec_) && symbol_ == ro.symbol_;
  }
  const FieldSpecPtr& coeff_spec() const override { return spec_; }
  char symbol() const { return symbol_; }

  RingElem wrap_reduced(FqPoly num, FqPoly den) const {
    require(!den.is_zero(), errc::division_by_zero, "zero denominator");
    if (num.is_zero()) return RingElem(shared_from_this(), RatFunc{num, FqPoly::one(spec_)});
    FqPoly g = FqPoly::gcd(num, den);
    if (g.degree() > 0) {
      num = num / g;
      den = den / g;
    }
    FqElem s = den.leading().inv();
    num = num.scaled(s);
    den = den.scaled(s);
    return RingElem(shared_from_this(), RatFunc{std::move(num), std::move(den)});
  }
  RingElem from_poly(FqPoly f) const { return wrap_reduced(std::move(f), FqPoly::one(spec_)); }

  RingElem zero() const override { return from_poly(FqPoly::zero(spec_)); }
  RingElem one() const override { return from_poly(FqPoly::one(spec_)); }
  RingElem from_int(i64 n) const override {
    return from_poly(FqPoly::constant(FqElem::from_int(spec_, n)));
  }
  std::optional<RingElem> symbol_elem(char c) const override {
    if (c == symbol_) return from_poly(FqPoly::x(spec_));
    if (c == 'w' && spec_->r > 1) return from_poly(FqPoly::constant(FqElem::generator(spec_)));
    return std::nullopt;
  }

  RingElem add(const RingElem& a, const RingElem& b) const override {
    check_pair(a, b);
    const auto& x = a.as_ratfunc();
    const auto& y = b.as_ratfunc();
    return wrap_reduced(x.num * y.den + y.num * x.den, x.den * y.den);
  }
  RingElem neg(const RingElem& a) const override {
    check_elem(a);
    const auto& x = a.as_ratfunc();
    return RingElem(shared_from_this(), RatFunc{-x.num, x.den});
  }
  RingElem mul(const RingElem& a, const RingElem& b) const override {
    check_pair(a, b);
    const auto& x = a.as_ratfunc();
    const auto& y = b.as_ratfunc();
    return wrap_reduced(x.num * y.num, x.den * y.den);
  }
  RingElem inv(const RingElem& a) const override {
    check_elem(a);
    const auto& x = a.as_ratfunc();
    require(!x.num.is_zero(), errc::division_by_zero, "inverse of 0");
    return wrap_reduced(x.den, x.num);
  }
  bool is_zero(const RingElem& a) const override {
    check_elem(a);
    return a.as_ratfunc().num.is_zero();
  }
  bool eq(const RingElem& a, const RingElem& b) const override {
    check_pair(a, b);
    // canonical form makes structural equality ring equality
    return a.as_ratfunc().num == b.as_ratfunc().num && a.as_ratfunc().den == b.as_ratfunc().den;
  }
  RingElem frobenius_iter(const RingElem& a, i64 n) const override {
    check_elem(a);
    const auto& x = a.as_ratfunc();
    return RingElem(shared_from_this(),
                    RatFunc{x.num.frobenius_iter(n), x.den.frobenius_iter(n)});
  }
  std::vector<RingElem> frobenius_basis() const override {
    std::vector<RingElem> b;
    for (i64 j = 0; j < q(); ++j)
      b.push_back(from_poly(FqPoly::monomial(spec_, FqElem::one(spec_), static_cast<std::size_t>(j))));
    return b;
  }
  std::vector<RingElem> decompose_q(const RingElem& a) const override {
    check_elem(a);
    const auto& x = a.as_ratfunc();
    // a = n/d = (n d^{q-1}) / d^q; decompose the numerator polynomial
    FqPoly u = x.num * x.den.pow(q() - 1);
    const i64 Q = q();
    std::vector<std::vector<FqElem>> parts(static_cast<std::size_t>(Q));
    for (i64 i = 0; i <= u.degree(); ++i) {
      i64 j = i % Q, k = i / Q;
      auto& part = parts[static_cast<std::size_t>(j)];
      part.resize(std::max<std::size_t>(part.size(), static_cast<std::size_t>(k) + 1),
                  FqElem::zero(spec_));
      part[static_cast<std::size_t>(k)] = u.coeff(static_cast<std::size_t>(i)).qth_root();
    }
    std::vector<RingElem> out;
    for (auto& part : parts)
      out.push_back(wrap_reduced(FqPoly(spec_, std::move(part)), x.den));
    return out;
  }
  std::string to_string(const RingElem& a) const override {
    const auto& x = a.as_ratfunc();
    if (x.den.is_one()) return x.num.to_string(symbol_);
    return "(" + x.num.to_string(symbol_) + ")/(" + x.den.to_string(symbol_) + ")";
  }

 private:
  FieldSpecPtr spec_;
  char symbol_;
};

// ---------------------------------------------------------------------------
// Quotient ring F_q[x]/(f); elements are residues of degree < deg f. Not
// required to be reduced (f may have repeated factors).
// ---------------------------------------------------------------------------

class QuotientBaseRing final : public BaseRing {
 public:
  QuotientBaseRing(FieldSpecPtr spec, FqPoly f, char symbol = 'x')
      : spec_(std::move(spec)), f_(f.monic()), symbol_(symbol) {
    require(f_.degree() >= 1, errc::invalid_params, "quotient modulus must be nonconstant");
  }

  RingKind kind() const override { return RingKind::quotient; }
  std::string describe() const override {
    return "GF(" + std::to_string(spec_->order()) + ")[" + symbol_ + "]/(" +
           f_.to_string(symbol_) + ")";
  }
  bool same(const BaseRing& o) const override {
    if (o.kind() != RingKind::quotient) return false;
    const auto& qo = static_cast<const QuotientBaseRing&>(o);
    return spec_->same(*qo.spec_) && f_ == qo.f_ && symbol_ == qo.symbol_;
  }
  const FieldSpecPtr& coeff_spec() const override { return spec_; }
  const FqPoly& modulus() const { return f_; }

  RingElem wrap(FqPoly v) const { return RingElem(shared_from_this(), v % f_); }

  RingElem zero() const override { return wrap(FqPoly::zero(spec_)); }
  RingElem one() const override { return wrap(FqPoly::one(spec_)); }
  RingElem from_int(i64 n) const override {
    return wrap(FqPoly::constant(FqElem::from_int(spec_, n)));
  }
  std::optional<RingElem> symbol_elem(char c) const override {
    if (c == symbol_) return wrap(FqPoly::x(spec_));
    if (c == 'w' && spec_->r > 1) return wrap(FqPoly::constant(FqElem::generator(spec_)));
    return std::nullopt;
  }

  RingElem add(const RingElem& a, const RingElem& b) const override {
    check_pair(a, b);
    return wrap(a.as_poly() + b.as_poly());
  }
  RingElem neg(const RingElem& a) const override {
    check_elem(a);
    return wrap(-a.as_poly());
  }
  RingElem mul(const RingElem& a, const RingElem& b) const override {
    check_pair(a, b);
    return wrap(a.as_poly() * b.as_poly());
  }
  RingElem inv(const RingElem& a) const override {
    check_elem(a);
    auto eg = fq_ext_gcd(a.as_poly(), f_);
    require(eg.g.is_one(), errc::division_by_zero, "not a unit in " + describe());
    return wrap(eg.u);
  }
  bool is_zero(const RingElem& a) const override {
    check_elem(a);
    return a.as_poly().is_zero();
  }
  bool eq(const RingElem& a, const RingElem& b) const override {
    check_pair(a, b);
    return a.as_poly() == b.as_poly();
  }
  RingElem frobenius_iter(const RingElem& a, i64 n) const override {
    check_elem(a);
    FqPoly v = a.as_poly();
    for (i64 i = 0; i < n; ++i) v = v.powmod(q(), f_);
    return wrap(v);
  }
  std::vector<RingElem> frobenius_basis() const override {
    std::vector<RingElem> b;
    for (i64 j = 0; j < q(); ++j)
      b.push_back(wrap(FqPoly::monomial(spec_, FqElem::one(spec_), static_cast<std::size_t>(j))));
    return b;
  }
  std::vector<RingElem> decompose_q(const RingElem& a) const override {
    check_elem(a);
    const FqPoly& u = a.as_poly();
    const i64 Q = q();
    std::vector<std::vector<FqElem>> parts(static_cast<std::size_t>(Q));
    for (i64 i = 0; i <= u.degree(); ++i) {
      i64 j = i % Q, k = i / Q;
      auto& part = parts[static_cast<std::size_t>(j)];
      part.resize(std::max<std::size_t>(part.size(), static_cast<std::size_t>(k) + 1),
                  FqElem::zero(spec_));
      part[static_cast<std::size_t>(k)] = u.coeff(static_cast<std::size_t>(i)).qth_root();
    }
    std::vector<RingElem> out;
    for (auto& part : parts) out.push_back(wrap(FqPoly(spec_, std::move(part))));
    return out;
  }
  std::string to_string(const RingElem& a) const override {
    return a.as_poly().to_string(symbol_);
  }

 private:
  FieldSpecPtr spec_;
  FqPoly f_;
  char symbol_;
};

// ---------------------------------------------------------------------------
// Factories
// ---------------------------------------------------------------------------

inline RingPtr make_finite_field(i64 p, i64 r, i64 base_exp) {
  return std::make_shared<FiniteFieldRing>(FieldSpec::make(p, r, base_exp));
}
// F_{p^r} as an F_q-algebra with the default q = p, matching the convention
// that F acts as the p-power Frobenius unless baseExp says otherwise
inline RingPtr make_gf(i64 p, i64 r, i64 base_exp = 1) {
  return make_finite_field(p, r, base_exp);
}

inline RingPtr make_product(std::vector<FieldSpecPtr> factors) {
  return std::make_shared<ProductRing>(std::move(factors));
}

inline RingPtr make_poly_ring(i64 p, i64 r = 1, char symbol = 'x') {
  return std::make_shared<PolyBaseRing>(FieldSpec::make(p, r, r), symbol);
}

inline RingPtr make_ratfunc(i64 p, i64 r = 1, char symbol = 't') {
  return std::make_shared<RatFuncRing>(FieldSpec::make(p, r, r), symbol);
}

inline RingPtr make_quotient(i64 p, i64 r, FqPoly f, char symbol = 'x') {
  return std::make_shared<QuotientBaseRing>(FieldSpec::make(p, r, r), std::move(f), symbol);
}

}  // namespace froblab

#endif  // FROBLAB_RINGS_HPP
