#ifndef FROBLAB_FQPOLY_HPP
#define FROBLAB_FQPOLY_HPP

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "froblab/fields.hpp"

namespace froblab {

// ---------------------------------------------------------------------------
// Dense univariate polynomials over F_{p^r}, low-to-high coefficients,
// normalized (no trailing zeros). The zero polynomial has an empty vector.
// ---------------------------------------------------------------------------

class FqPoly {
 public:
  FqPoly() = default;
  FqPoly(FieldSpecPtr spec, std::vector<FqElem> coeffs)
      : spec_(std::move(spec)), c_(std::move(coeffs)) {
    trim();
  }

  static FqPoly zero(FieldSpecPtr spec) { return FqPoly(std::move(spec), {}); }
  static FqPoly one(FieldSpecPtr spec) {
    auto s = spec;
    return FqPoly(std::move(spec), {FqElem::one(s)});
  }
  static FqPoly x(FieldSpecPtr spec) {
    auto s = spec;
    return FqPoly(std::move(spec), {FqElem::zero(s), FqElem::one(s)});
  }
  static FqPoly constant(FqElem c) {
    auto s = c.spec();
    return FqPoly(s, {std::move(c)});
  }
  static FqPoly monomial(FieldSpecPtr spec, FqElem c, std::size_t deg) {
    std::vector<FqElem> v(deg + 1, FqElem::zero(spec));
    v[deg] = std::move(c);
    return FqPoly(std::move(spec), std::move(v));
  }

  const FieldSpecPtr& spec() const { return spec_; }
  const std::vector<FqElem>& coeffs() const { return c_; }

  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
  i64 degree() const { return static_cast<i64>(c_.size()) - 1; }  // -1 for 0
  const FqElem& leading() const {
    require(!c_.empty(), errc::internal, "leading coefficient of 0");
    return c_.back();
  }
  FqElem coeff(std::size_t i) const { return i < c_.size() ? c_[i] : FqElem::zero(spec_); }
  bool is_monic() const { return !c_.empty() && c_.back().is_one(); }

  friend bool operator==(const FqPoly& a, const FqPoly& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      if (!(a.c_[i] == b.c_[i])) return false;
    return true;
  }
  friend bool operator!=(const FqPoly& a, const FqPoly& b) { return !(a == b); }

  // canonical total order: by degree, then coefficients from the top
  friend bool operator<(const FqPoly& a, const FqPoly& b) {
    if (a.c_.size() != b.c_.size()) return a.c_.size() < b.c_.size();
    for (std::size_t i = a.c_.size(); i-- > 0;)
      if (a.c_[i] != b.c_[i]) return a.c_[i] < b.c_[i];
    return false;
  }

  friend FqPoly operator+(const FqPoly& a, const FqPoly& b) {
    auto s = a.spec_ ? a.spec_ : b.spec_;
    std::vector<FqElem> c(std::max(a.c_.size(), b.c_.size()), FqElem::zero(s));
    for (std::size_t i = 0; i < c.size(); ++i) {
      FqElem v = FqElem::zero(s);
      if (i < a.c_.size()) v = v + a.c_[i];
      if (i < b.c_.size()) v = v + b.c_[i];
      c[i] = v;
    }
    return FqPoly(s, std::move(c));
  }
  friend FqPoly operator-(const FqPoly& a, const FqPoly& b) { return a + (-b); }
  FqPoly operator-() const {
    std::vector<FqElem> c(c_);
    for (auto& v : c) v = -v;
    return FqPoly(spec_, std::move(c));
  }
  friend FqPoly operator*(const FqPoly& a, const FqPoly& b) {
    auto s = a.spec_ ? a.spec_ : b.spec_;
    if (a.is_zero() || b.is_zero()) return zero(s);
    std::vector<FqElem> c(a.c_.size() + b.c_.size() - 1, FqElem::zero(s));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j)
        c[i + j] = c[i + j] + a.c_[i] * b.c_[j];
    return FqPoly(s, std::move(c));
  }
  FqPoly scaled(const FqElem& k) const {
    std::vector<FqElem> c(c_);
    for (auto& v : c) v = v * k;
    return FqPoly(spec_, std::move(c));
  }

  // Euclidean division: *this = q*b + r with deg r < deg b
  std::pair<FqPoly, FqPoly> divmod(const FqPoly& b) const {
    require(!b.is_zero(), errc::division_by_zero, "polynomial division by zero");
    FqPoly r = *this;
    FqPoly q = zero(spec_);
    FqElem lc_inv = b.leading().inv();
    while (!r.is_zero() && r.degree() >= b.degree()) {
      FqElem c = r.leading() * lc_inv;
      std::size_t shift = static_cast<std::size_t>(r.degree() - b.degree());
      FqPoly t = monomial(spec_, c, shift);
      q = q + t;
      r = r - t * b;
    }
    return {q, r};
  }
  FqPoly operator/(const FqPoly& b) const { return divmod(b).first; }
  FqPoly operator%(const FqPoly& b) const { return divmod(b).second; }

  FqPoly monic() const {
    if (is_zero() || is_monic()) return *this;
    return scaled(leading().inv());
  }

  static FqPoly gcd(FqPoly a, FqPoly b) {
    while (!b.is_zero()) {
      FqPoly r = a % b;
      a = std::move(b);
      b = std::move(r);
    }
    return a.monic();
  }

  FqPoly pow(i64 e) const {
    require(e >= 0, errc::invalid_params, "negative polynomial power");
    FqPoly r = one(spec_), base = *this;
    while (e > 0) {
      if (e & 1) r = r * base;
      base = base * base;
      e >>= 1;
    }
    return r;
  }

  FqPoly powmod(i64 e, const FqPoly& m) const {
    require(e >= 0, errc::invalid_params, "negative exponent");
    FqPoly r = one(spec_) % m, base = *this % m;
    while (e > 0) {
      if (e & 1) r = (r * base) % m;
      base = (base * base) % m;
      e >>= 1;
    }
    return r;
  }

  FqElem eval(const FqElem& a) const {
    FqElem acc = FqElem::zero(spec_);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * a + c_[i];
    return acc;
  }

  FqPoly derivative() const {
    if (c_.size() <= 1) return zero(spec_);
    std::vector<FqElem> d(c_.size() - 1, FqElem::zero(spec_));
    for (std::size_t i = 1; i < c_.size(); ++i)
      d[i - 1] = c_[i] * FqElem::from_int(spec_, static_cast<i64>(i));
    return FqPoly(spec_, std::move(d));
  }

  // (sum a_i x^i)^{q^n} = sum a_i^{q^n} x^{i q^n}  (freshman's dream in char p)
  FqPoly frobenius_iter(i64 n) const {
    if (is_zero() || n == 0) return *this;
    i64 e = 1;
    for (i64 i = 0; i < n * spec_->base_exp; ++i) {
      require(e < (i64{1} << 40), errc::invalid_params, "Frobenius power too large");
      e *= spec_->p;
    }
    std::vector<FqElem> c(static_cast<std::size_t>(degree() * e) + 1, FqElem::zero(spec_));
    for (std::size_t i = 0; i < c_.size(); ++i)
      c[i * static_cast<std::size_t>(e)] = c_[i].pow_q_power(n);
    return FqPoly(spec_, std::move(c));
  }

  // p-th root of a polynomial whose exponents are all multiples of p
  FqPoly pth_root() const {
    const i64 p = spec_->p;
    std::vector<FqElem> c;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (i % static_cast<std::size_t>(p) == 0) {
        c.push_back(c_[i].pow(ipow(p, spec_->r - 1)));
      } else {
        require(c_[i].is_zero(), errc::internal, "not a p-th power");
      }
    }
    return FqPoly(spec_, std::move(c));
  }

  std::string to_string(char symbol = 'x') const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = c_.size(); i-- > 0;) {
      if (c_[i].is_zero()) continue;
      if (!out.empty()) out += "+";
      std::string cs = c_[i].to_string();
      bool composite = cs.find('+') != std::string::npos;
      if (i == 0) {
        out += composite ? "(" + cs + ")" : cs;
      } else {
        if (!c_[i].is_one()) out += (composite ? "(" + cs + ")" : cs) + "*";
        out += symbol;
        if (i > 1) out += "^" + std::to_string(i);
      }
    }
    return out;
  }

 private:
  static i64 ipow(i64 b, i64 e) {
    i64 r = 1;
    for (i64 i = 0; i < e; ++i) r *= b;
    return r;
  }
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  FieldSpecPtr spec_;
  std::vector<FqElem> c_;
};

// ---------------------------------------------------------------------------
// Factorization into monic irreducibles: squarefree part in characteristic p
// (including the p-th power descent), distinct-degree splitting, then
// Cantor-Zassenhaus equal-degree splitting. The random stream for the
// equal-degree step is seeded from the input, so runs are reproducible.
// ---------------------------------------------------------------------------

namespace fq_detail {

inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline std::uint64_t seed_from(const FqPoly& f) {
  std::uint64_t s = 0x6b7950b5e3f1a902ULL ^ static_cast<std::uint64_t>(f.spec()->p);
  for (const auto& c : f.coeffs())
    for (i64 v : c.coeffs()) {
      s = s * 1099511628211ULL + static_cast<std::uint64_t>(v + 3);
    }
  return s;
}

inline i64 checked_pow(i64 b, i64 e) {
  i64 r = 1;
  for (i64 i = 0; i < e; ++i) {
    require(r <= (i64{1} << 60) / b, errc::invalid_params, "field power exceeds 2^60");
    r *= b;
  }
  return r;
}

}  // namespace fq_detail

// x^{Q^k} mod f, computed by k successive Q-th powerings
inline FqPoly frobenius_power_mod(const FqPoly& f, i64 k) {
  const i64 Q = f.spec()->order();
  FqPoly h = FqPoly::x(f.spec()) % f;
  for (i64 i = 0; i < k; ++i) h = h.powmod(Q, f);
  return h;
}

inline bool fq_is_irreducible(const FqPoly& f) {
  if (f.degree() < 1) return false;
  if (f.degree() == 1) return true;
  const i64 n = f.degree();
  const FqPoly x = FqPoly::x(f.spec());
  if (!(frobenius_power_mod(f, n) == x % f)) return false;
  i64 m = n;
  for (i64 l = 2; l <= m; ++l) {
    if (m % l != 0) continue;
    while (m % l == 0) m /= l;
    FqPoly g = FqPoly::gcd(frobenius_power_mod(f, n / l) - x, f);
    if (!g.is_one()) return false;
  }
  return true;
}

// squarefree decomposition: list of (g_i, e_i) with f = prod g_i^{e_i},
// g_i squarefree and pairwise coprime
inline std::vector<std::pair<FqPoly, i64>> fq_squarefree(const FqPoly& f0) {
  std::vector<std::pair<FqPoly, i64>> out;
  FqPoly f = f0.monic();
  if (f.degree() < 1) return out;
  const i64 p = f.spec()->p;
  FqPoly c = FqPoly::gcd(f, f.derivative());
  FqPoly w = f / c;
  i64 i = 1;
  while (!w.is_one()) {
    FqPoly y = FqPoly::gcd(w, c);
    FqPoly fac = w / y;
    if (fac.degree() >= 1) out.emplace_back(fac.monic(), i);
    w = y;
    c = c / y;
    ++i;
  }
  if (!c.is_one()) {
    // c is a p-th power
    for (auto& [g, e] : fq_squarefree(c.pth_root())) out.emplace_back(g, e * p);
  }
  return out;
}

// distinct-degree decomposition of a squarefree monic polynomial:
// list of (d, product of all irreducible factors of degree d)
inline std::vector<std::pair<i64, FqPoly>> fq_distinct_degree(const FqPoly& g0) {
  std::vector<std::pair<i64, FqPoly>> out;
  FqPoly g = g0.monic();
  const i64 Q = g.spec()->order();
  FqPoly x = FqPoly::x(g.spec());
  FqPoly h = x % g;
  i64 d = 0;
  while (g.degree() >= 1) {
    ++d;
    if (g.degree() < 2 * d) {
      out.emplace_back(g.degree(), g);
      break;
    }
    h = h.powmod(Q, g);
    FqPoly f = FqPoly::gcd(h - x, g);
    if (f.degree() >= 1) {
      out.emplace_back(d, f);
      g = g / f;
      h = h % g;
    }
  }
  return out;
}

// equal-degree splitting: h is squarefree monic, all factors of degree d
inline void fq_equal_degree(const FqPoly& h, i64 d, std::uint64_t& rng,
                            std::vector<FqPoly>& out) {
  if (h.degree() == d) {
    out.push_back(h.monic());
    return;
  }
  const auto spec = h.spec();
  const i64 p = spec->p;
  const i64 Qd = fq_detail::checked_pow(spec->order(), d);
  while (true) {
    // random polynomial of degree < deg h
    std::vector<FqElem> uc;
    for (i64 i = 0; i < h.degree(); ++i) {
      std::vector<i64> cv;
      for (i64 j = 0; j < spec->r; ++j)
        cv.push_back(static_cast<i64>(fq_detail::splitmix64(rng) % static_cast<std::uint64_t>(p)));
      uc.emplace_back(spec, std::move(cv));
    }
    FqPoly u(spec, std::move(uc));
    if (u.degree() < 1) continue;
    FqPoly g = FqPoly::gcd(u, h);
    if (g.degree() >= 1 && g.degree() < h.degree()) {
      fq_equal_degree(g, d, rng, out);
      fq_equal_degree(h / g, d, rng, out);
      return;
    }
    FqPoly v = FqPoly::zero(spec);
    if (p == 2) {
      // trace map over F_2: sum of u^{2^i}, i < log2(Q^d)
      i64 steps = 0;
      i64 t = Qd;
      while (t > 1) {
        t /= 2;
        ++steps;
      }
      FqPoly acc = u % h;
      FqPoly term = u % h;
      for (i64 i = 1; i < steps; ++i) {
        term = (term * term) % h;
        acc = (acc + term) % h;
      }
      v = acc;
    } else {
      v = u.powmod((Qd - 1) / 2, h) - FqPoly::one(spec);
    }
    g = FqPoly::gcd(v, h);
    if (g.degree() >= 1 && g.degree() < h.degree()) {
      fq_equal_degree(g, d, rng, out);
      fq_equal_degree(h / g, d, rng, out);
      return;
    }
  }
}

// full factorization of a nonzero polynomial into monic irreducibles
inline std::map<FqPoly, i64> fq_factor(const FqPoly& f0) {
  require(!f0.is_zero(), errc::invalid_params, "factor(0)");
  std::map<FqPoly, i64> out;
  FqPoly f = f0.monic();
  if (f.degree() < 1) return out;
  std::uint64_t rng = fq_detail::seed_from(f);
  for (auto& [g, e] : fq_squarefree(f)) {
    for (auto& [d, h] : fq_distinct_degree(g)) {
      std::vector<FqPoly> irr;
      fq_equal_degree(h, d, rng, irr);
      for (auto& u : irr) out[u] += e;
    }
  }
  return out;
}

// extended Euclid: returns (g, u, v) with g = gcd(a, b) monic and g = u*a + v*b
struct FqExtGcd {
  FqPoly g, u, v;
};

inline FqExtGcd fq_ext_gcd(const FqPoly& a, const FqPoly& b) {
  auto spec = a.spec() ? a.spec() : b.spec();
  FqPoly r0 = a, r1 = b;
  FqPoly u0 = FqPoly::one(spec), u1 = FqPoly::zero(spec);
  FqPoly v0 = FqPoly::zero(spec), v1 = FqPoly::one(spec);
  while (!r1.is_zero()) {
    auto [q, r2] = r0.divmod(r1);
    FqPoly u2 = u0 - q * u1;
    FqPoly v2 = v0 - q * v1;
    r0 = std::move(r1);
    r1 = std::move(r2);
    u0 = std::move(u1);
    u1 = std::move(u2);
    v0 = std::move(v1);
    v1 = std::move(v2);
  }
  if (!r0.is_zero() && !r0.is_monic()) {
    FqElem s = r0.leading().inv();
    r0 = r0.scaled(s);
    u0 = u0.scaled(s);
    v0 = v0.scaled(s);
  }
  return {r0, u0, v0};
}

// monic irreducibles of fixed degree in canonical enumeration order
// (non-leading coefficient vectors counted base |F|, constant coefficient
// least significant); index selects the k-th one
inline FqPoly nth_irreducible(FieldSpecPtr spec, i64 degree, i64 index) {
  require(degree >= 1, errc::invalid_params, "degree must be >= 1");
  std::vector<i64> counter(static_cast<std::size_t>(degree) * spec->r, 0);
  const i64 p = spec->p;
  i64 seen = 0;
  while (true) {
    std::vector<FqElem> c;
    for (i64 i = 0; i < degree; ++i) {
      std::vector<i64> cv(counter.begin() + i * spec->r, counter.begin() + (i + 1) * spec->r);
      c.emplace_back(spec, std::move(cv));
    }
    c.emplace_back(FqElem::one(spec));
    FqPoly f(spec, std::move(c));
    if (fq_is_irreducible(f)) {
      if (seen == index) return f;
      ++seen;
    }
    std::size_t i = 0;
    while (i < counter.size()) {
      if (++counter[i] < p) break;
      counter[i] = 0;
      ++i;
    }
    require(i < counter.size(), errc::invalid_params, "irreducible index out of range");
  }
}

}  // namespace froblab

#endif  // FROBLAB_FQPOLY_HPP
