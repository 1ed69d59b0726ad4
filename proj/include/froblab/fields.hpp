#ifndef FROBLAB_FIELDS_HPP
#define FROBLAB_FIELDS_HPP

#include <algorithm>
#include <cstdint>
#include <memory>
#include <numeric>
#include <string>
#include <vector>

#include "froblab/error.hpp"

namespace froblab {

using i64 = std::int64_t;

// ---------------------------------------------------------------------------
// Prime field helpers. Values are kept reduced into [0, p).
// ---------------------------------------------------------------------------

inline i64 fp_norm(i64 a, i64 p) {
  a %= p;
  return a < 0 ? a + p : a;
}

inline i64 fp_add(i64 a, i64 b, i64 p) { return (a + b) % p; }
inline i64 fp_sub(i64 a, i64 b, i64 p) { return fp_norm(a - b, p); }
inline i64 fp_mul(i64 a, i64 b, i64 p) { return (a * b) % p; }

inline i64 fp_inv(i64 a, i64 p) {
  a = fp_norm(a, p);
  require(a != 0, errc::division_by_zero, "inverse of 0 in F_p");
  i64 t = 0, new_t = 1, r = p, new_r = a;
  while (new_r != 0) {
    i64 q = r / new_r;
    std::swap(t -= q * new_t, new_t);
    std::swap(r -= q * new_r, new_r);
  }
  return fp_norm(t, p);
}

inline i64 fp_pow(i64 a, i64 e, i64 p) {
  a = fp_norm(a, p);
  i64 r = 1 % p;
  while (e > 0) {
    if (e & 1) r = fp_mul(r, a, p);
    a = fp_mul(a, a, p);
    e >>= 1;
  }
  return r;
}

inline bool is_prime(i64 n) {
  if (n < 2) return false;
  for (i64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Dense polynomials over F_p, coefficients low-to-high. Only what the modulus
// search needs; everything richer lives in fqpoly.hpp on top of FqElem.
namespace fppoly {

inline void trim(std::vector<i64>& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

inline std::vector<i64> mul(const std::vector<i64>& a, const std::vector<i64>& b, i64 p) {
  if (a.empty() || b.empty()) return {};
  std::vector<i64> c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  trim(c);
  return c;
}

// Remainder of a modulo monic f.
inline std::vector<i64> rem(std::vector<i64> a, const std::vector<i64>& f, i64 p) {
  trim(a);
  const std::size_t df = f.size() - 1;
  while (a.size() > df) {
    i64 c = a.back();
    std::size_t shift = a.size() - 1 - df;
    if (c != 0)
      for (std::size_t i = 0; i <= df; ++i)
        a[shift + i] = fp_norm(a[shift + i] - c * f[i], p);
    a.pop_back();
    trim(a);
    if (a.size() <= df) break;
  }
  trim(a);
  return a;
}

inline std::vector<i64> mulmod(const std::vector<i64>& a, const std::vector<i64>& b,
                               const std::vector<i64>& f, i64 p) {
  return rem(mul(a, b, p), f, p);
}

inline std::vector<i64> powmod(std::vector<i64> base, i64 e, const std::vector<i64>& f, i64 p) {
  std::vector<i64> r{1};
  base = rem(std::move(base), f, p);
  while (e > 0) {
    if (e & 1) r = mulmod(r, base, f, p);
    base = mulmod(base, base, f, p);
    e >>= 1;
  }
  return r;
}

inline std::vector<i64> gcd(std::vector<i64> a, std::vector<i64> b, i64 p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    // reduce a mod b (b need not be monic; scale)
    i64 lc_inv = fp_inv(b.back(), p);
    std::vector<i64> bm(b);
    for (auto& c : bm) c = fp_mul(c, lc_inv, p);
    a = rem(std::move(a), bm, p);
    std::swap(a, b);
  }
  if (!a.empty()) {
    i64 lc_inv = fp_inv(a.back(), p);
    for (auto& c : a) c = fp_mul(c, lc_inv, p);
  }
  return a;
}

// Deterministic irreducibility over F_p: x^{p^r} == x mod f and
// gcd(x^{p^{r/l}} - x, f) = 1 for every prime l dividing r.
inline bool irreducible(const std::vector<i64>& f, i64 p) {
  if (f.size() < 2) return false;
  const i64 r = static_cast<i64>(f.size()) - 1;
  if (r == 1) return true;
  std::vector<i64> x{0, 1};
  // x^{p^k} mod f by repeated p-th powering
  auto frob_steps = [&](i64 k) {
    std::vector<i64> y = x;
    for (i64 i = 0; i < k; ++i) y = powmod(y, p, f, p);
    return y;
  };
  std::vector<i64> xr = frob_steps(r);
  std::vector<i64> diff = xr;
  diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
  diff[1] = fp_norm(diff[1] - 1, p);
  trim(diff);
  if (!diff.empty()) return false;
  i64 m = r;
  for (i64 l = 2; l <= m; ++l) {
    if (m % l != 0) continue;
    while (m % l == 0) m /= l;
    std::vector<i64> xs = frob_steps(r / l);
    std::vector<i64> d = xs;
    d.resize(std::max<std::size_t>(d.size(), 2), 0);
    d[1] = fp_norm(d[1] - 1, p);
    trim(d);
    std::vector<i64> g = gcd(d, f, p);
    if (!(g.size() == 1)) return false;
  }
  return true;
}

}  // namespace fppoly

// ---------------------------------------------------------------------------
// FieldSpec: the finite field F_{p^r} presented as F_p[w]/(modulus), carrying
// the distinguished prime power q = p^baseExp with baseExp | r. Prime fields
// are the r = 1 case. The modulus is the lexicographically least monic
// irreducible of degree r (non-leading coefficients enumerated as a base-p
// integer, least significant first), so specs are reproducible.
// ---------------------------------------------------------------------------

class FieldSpec;
using FieldSpecPtr = std::shared_ptr<const FieldSpec>;

class FieldSpec {
 public:
  i64 p;
  i64 r;         // degree over the prime field
  i64 base_exp;  // q = p^base_exp, base_exp | r
  std::vector<i64> modulus;  // monic, degree r, low-to-high

  static FieldSpecPtr make(i64 p, i64 r, i64 base_exp = 1) {
    require(is_prime(p), errc::invalid_params, "p must be prime");
    require(r >= 1, errc::invalid_params, "r must be >= 1");
    require(base_exp >= 1 && r % base_exp == 0, errc::invalid_params,
            "baseExp must divide r");
    auto s = std::make_shared<FieldSpec>();
    s->p = p;
    s->r = r;
    s->base_exp = base_exp;
    s->modulus = least_irreducible(p, r);
    return s;
  }

  static FieldSpecPtr make_with_modulus(i64 p, i64 r, i64 base_exp, std::vector<i64> modulus) {
    require(is_prime(p), errc::invalid_params, "p must be prime");
    require(static_cast<i64>(modulus.size()) == r + 1 && modulus.back() == 1,
            errc::invalid_params, "modulus must be monic of degree r");
    for (auto& c : modulus) c = fp_norm(c, p);
    require(fppoly::irreducible(modulus, p), errc::invalid_params, "modulus must be irreducible");
    require(base_exp >= 1 && r % base_exp == 0, errc::invalid_params,
            "baseExp must divide r");
    auto s = std::make_shared<FieldSpec>();
    s->p = p;
    s->r = r;
    s->base_exp = base_exp;
    s->modulus = std::move(modulus);
    return s;
  }

  i64 q() const {
    i64 v = 1;
    for (i64 i = 0; i < base_exp; ++i) v *= p;
    return v;
  }

  i64 order() const {  // p^r; desk scale keeps this within i64
    i64 v = 1;
    for (i64 i = 0; i < r; ++i) {
      require(v <= (i64{1} << 56) / p, errc::invalid_params, "field too large");
      v *= p;
    }
    return v;
  }

  // [F_{p^r} : F_q]
  i64 ext_degree_over_q() const { return r / base_exp; }

  bool same(const FieldSpec& o) const {
    return p == o.p && r == o.r && base_exp == o.base_exp && modulus == o.modulus;
  }

 private:
  static std::vector<i64> least_irreducible(i64 p, i64 r) {
    if (r == 1) return {0, 1};  // w - 0: prime field as trivial extension of itself
    std::vector<i64> f(r + 1, 0);
    f[r] = 1;
    // enumerate the r low coefficients as a base-p counter
    while (true) {
      if (fppoly::irreducible(f, p)) return f;
      i64 i = 0;
      while (i < r) {
        if (++f[i] < p) break;
        f[i] = 0;
        ++i;
      }
      require(i < r, errc::internal, "no irreducible polynomial found");
    }
  }
};

// ---------------------------------------------------------------------------
// FqElem: an element of F_{p^r}, canonical coefficient vector of length r.
// Cross-field arithmetic is a hard error (no coercion).
// ---------------------------------------------------------------------------

class FqElem {
 public:
  FqElem() = default;
  FqElem(FieldSpecPtr spec, std::vector<i64> coeffs) : spec_(std::move(spec)) {
    coeffs.resize(spec_->r, 0);
    for (auto& c : coeffs) c = fp_norm(c, spec_->p);
    c_ = std::move(coeffs);
  }

  static FqElem zero(FieldSpecPtr spec) { return FqElem(std::move(spec), {}); }
  static FqElem one(FieldSpecPtr spec) { return FqElem(std::move(spec), {1}); }
  static FqElem from_int(FieldSpecPtr spec, i64 n) { return FqElem(std::move(spec), {n}); }
  // w, the residue class of the generator; for r = 1 this is the scalar 0
  // (whose minimal polynomial is the degree-1 modulus w - 0).
  static FqElem generator(FieldSpecPtr spec) {
    if (spec->r == 1) return FqElem(std::move(spec), {0});
    return FqElem(std::move(spec), {0, 1});
  }

  const FieldSpecPtr& spec() const { return spec_; }
  const std::vector<i64>& coeffs() const { return c_; }

  bool is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](i64 v) { return v == 0; });
  }
  bool is_one() const {
    if (c_.empty() || c_[0] != 1) return false;
    return std::all_of(c_.begin() + 1, c_.end(), [](i64 v) { return v == 0; });
  }

  friend bool operator==(const FqElem& a, const FqElem& b) {
    a.check_same(b);
    return a.c_ == b.c_;
  }
  friend bool operator!=(const FqElem& a, const FqElem& b) { return !(a == b); }

  // total order for canonical sorting: degree-ignorant lexicographic from the
  // high coefficient down
  friend bool operator<(const FqElem& a, const FqElem& b) {
    a.check_same(b);
    for (i64 i = a.spec_->r - 1; i >= 0; --i)
      if (a.c_[i] != b.c_[i]) return a.c_[i] < b.c_[i];
    return false;
  }

  friend FqElem operator+(const FqElem& a, const FqElem& b) {
    a.check_same(b);
    std::vector<i64> c(a.c_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = fp_add(a.c_[i], b.c_[i], a.spec_->p);
    return FqElem(a.spec_, std::move(c));
  }
  friend FqElem operator-(const FqElem& a, const FqElem& b) {
    a.check_same(b);
    std::vector<i64> c(a.c_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = fp_sub(a.c_[i], b.c_[i], a.spec_->p);
    return FqElem(a.spec_, std::move(c));
  }
  FqElem operator-() const {
    std::vector<i64> c(c_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = fp_norm(-c_[i], spec_->p);
    return FqElem(spec_, std::move(c));
  }
  friend FqElem operator*(const FqElem& a, const FqElem& b) {
    a.check_same(b);
    auto c = fppoly::mulmod(a.c_, b.c_, a.spec_->modulus, a.spec_->p);
    return FqElem(a.spec_, std::move(c));
  }

  FqElem inv() const {
    require(!is_zero(), errc::division_by_zero, "inverse of 0");
    // extended Euclid in F_p[w] against the modulus
    std::vector<i64> r0 = spec_->modulus, r1 = c_;
    fppoly::trim(r1);
    std::vector<i64> t0{}, t1{1};
    const i64 p = spec_->p;
    while (!r1.empty()) {
      // divide r0 by r1
      std::vector<i64> q;
      std::vector<i64> rem = r0;
      fppoly::trim(rem);
      i64 lc_inv = fp_inv(r1.back(), p);
      while (rem.size() >= r1.size() && !rem.empty()) {
        i64 c = fp_mul(rem.back(), lc_inv, p);
        std::size_t shift = rem.size() - r1.size();
        if (q.size() < shift + 1) q.resize(shift + 1, 0);
        q[shift] = c;
        for (std::size_t i = 0; i < r1.size(); ++i)
          rem[shift + i] = fp_norm(rem[shift + i] - c * r1[i], p);
        fppoly::trim(rem);
      }
      std::vector<i64> t2 = t0;
      std::vector<i64> qt = fppoly::mul(q, t1, p);
      t2.resize(std::max(t2.size(), qt.size()), 0);
      for (std::size_t i = 0; i < qt.size(); ++i) t2[i] = fp_norm(t2[i] - qt[i], p);
      fppoly::trim(t2);
      r0 = r1;
      r1 = rem;
      t0 = t1;
      t1 = t2;
    }
    // r0 = gcd (a unit); scale t0 by its inverse
    i64 s = fp_inv(r0.empty() ? 1 : r0[0], p);
    for (auto& c : t0) c = fp_mul(c, s, p);
    return FqElem(spec_, std::move(t0));
  }

  FqElem pow(i64 e) const {
    if (e < 0) {
      return inv().pow(-e);
    }
    if (is_zero()) return e == 0 ? one(spec_) : *this;
    // reduce the exponent modulo the multiplicative group order
    i64 g = spec_->order() - 1;
    if (g > 0) e %= g;
    FqElem base = *this, acc = one(spec_);
    while (e > 0) {
      if (e & 1) acc = acc * base;
      base = base * base;
      e >>= 1;
    }
    return acc;
  }

  // a |-> a^q, the distinguished Frobenius
  FqElem frobenius() const { return pow_q_power(1); }

  // a |-> a^{q^n}, exact for any n >= 0
  FqElem pow_q_power(i64 n) const {
    if (is_zero()) return *this;
    i64 m = spec_->ext_degree_over_q();
    n %= m;  // sigma has order m
    i64 g = spec_->order() - 1;
    i64 e = 1;
    for (i64 i = 0; i < n * spec_->base_exp; ++i) e = (e * spec_->p) % g;
    return pow(e);
  }

  // the unique b with b^q = a (finite fields are perfect)
  FqElem qth_root() const { return pow_q_power(spec_->ext_degree_over_q() - 1); }

  // trace to the prime field: sum of a^{p^i}, i < r; returns a value in [0, p)
  i64 trace_to_prime() const {
    FqElem acc = zero(spec_);
    FqElem t = *this;
    for (i64 i = 0; i < spec_->r; ++i) {
      acc = acc + t;
      t = t.pow(spec_->p);
    }
    for (std::size_t i = 1; i < acc.c_.size(); ++i)
      require(acc.c_[i] == 0, errc::internal, "trace landed outside the prime field");
    return acc.c_.empty() ? 0 : acc.c_[0];
  }

  std::string to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (i64 i = spec_->r - 1; i >= 0; --i) {
      if (c_[i] == 0) continue;
      if (!out.empty()) out += "+";
      if (i == 0) {
        out += std::to_string(c_[i]);
      } else {
        if (c_[i] != 1) out += std::to_string(c_[i]) + "*";
        out += "w";
        if (i > 1) out += "^" + std::to_string(i);
      }
    }
    return out;
  }

 private:
  void check_same(const FqElem& o) const {
    require(spec_ && o.spec_, errc::internal, "uninitialized field element");
    require(spec_ == o.spec_ || spec_->same(*o.spec_), errc::ring_mismatch,
            "elements of different fields");
  }

  FieldSpecPtr spec_;
  std::vector<i64> c_;
};

}  // namespace froblab

#endif  // FROBLAB_FIELDS_HPP
