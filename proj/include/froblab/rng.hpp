#ifndef FROBLAB_RNG_HPP
#define FROBLAB_RNG_HPP

#include <cstdint>
#include <random>

#include "froblab/skew.hpp"

namespace froblab {

// Seeded deterministic randomness. mt19937_64 has a pinned bit stream, and
// reduction is plain modulo, so sequences are identical across platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }
  i64 below(i64 n) { return n <= 0 ? 0 : static_cast<i64>(next() % static_cast<std::uint64_t>(n)); }
  bool coin() { return next() & 1; }

 private:
  std::mt19937_64 eng_;
};

inline FqElem random_fq(Rng& rng, const FieldSpecPtr& spec) {
  std::vector<i64> c(static_cast<std::size_t>(spec->r));
  for (auto& v : c) v = rng.below(spec->p);
  return FqElem(spec, std::move(c));
}

inline FqElem random_fq_nonzero(Rng& rng, const FieldSpecPtr& spec) {
  while (true) {
    FqElem e = random_fq(rng, spec);
    if (!e.is_zero()) return e;
  }
}

inline FqPoly random_fqpoly(Rng& rng, const FieldSpecPtr& spec, i64 max_deg) {
  i64 d = rng.below(max_deg + 1);
  std::vector<FqElem> c;
  for (i64 i = 0; i <= d; ++i) c.push_back(random_fq(rng, spec));
  return FqPoly(spec, std::move(c));
}

// a random element; deg_hint bounds polynomial degrees in the poly-flavored
// variants
inline RingElem random_elem(Rng& rng, const RingPtr& ring, i64 deg_hint = 2) {
  switch (ring->kind()) {
    case RingKind::finite_field:
      return RingElem(ring, random_fq(rng, ring->coeff_spec()));
    case RingKind::product: {
      const auto& pr = static_cast<const ProductRing&>(*ring);
      std::vector<FqElem> v;
      for (const auto& s : pr.factors()) v.push_back(random_fq(rng, s));
      return RingElem(ring, std::move(v));
    }
    case RingKind::poly:
      return RingElem(ring, random_fqpoly(rng, ring->coeff_spec(), deg_hint));
    case RingKind::ratfunc: {
      const auto& rr = static_cast<const RatFuncRing&>(*ring);
      FqPoly num = random_fqpoly(rng, ring->coeff_spec(), deg_hint);
      FqPoly den;
      do {
        den = random_fqpoly(rng, ring->coeff_spec(), deg_hint);
      } while (den.is_zero());
      return rr.wrap_reduced(std::move(num), std::move(den));
    }
    case RingKind::quotient: {
      const auto& qr = static_cast<const QuotientBaseRing&>(*ring);
      return qr.wrap(random_fqpoly(rng, ring->coeff_spec(), qr.modulus().degree() - 1));
    }
  }
  fail(errc::internal, "unknown ring kind");
}

inline RingElem random_nonzero(Rng& rng, const RingPtr& ring, i64 deg_hint = 2) {
  while (true) {
    RingElem e = random_elem(rng, ring, deg_hint);
    if (!e.is_zero()) return e;
  }
}

inline SkewPoly random_skew(Rng& rng, const RingPtr& ring, i64 max_deg, i64 coeff_deg_hint = 2) {
  i64 d = rng.below(max_deg + 1);
  std::map<i64, RingElem> m;
  for (i64 i = 0; i <= d; ++i) {
    if (i < d && rng.below(4) == 0) continue;  // keep it sparse now and then
    RingElem c = (i == d) ? random_nonzero(rng, ring, coeff_deg_hint)
                          : random_elem(rng, ring, coeff_deg_hint);
    if (!c.is_zero()) m.emplace(i, std::move(c));
  }
  return SkewPoly(ring, std::move(m));
}

inline SkewPoly random_skew_nonzero(Rng& rng, const RingPtr& ring, i64 max_deg,
                                    i64 coeff_deg_hint = 2) {
  while (true) {
    SkewPoly a = random_skew(rng, ring, max_deg, coeff_deg_hint);
    if (!a.is_zero()) return a;
  }
}

}  // namespace froblab

#endif  // FROBLAB_RNG_HPP
