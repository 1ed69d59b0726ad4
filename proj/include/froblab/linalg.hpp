#ifndef FROBLAB_LINALG_HPP
#define FROBLAB_LINALG_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "froblab/fqpoly.hpp"

namespace froblab {

// ---------------------------------------------------------------------------
// Dense exact linear algebra, generic over a scalar "ops" bundle. Row
// operations only ever multiply entries on the left, so elimination stays
// valid over the skew fraction field as well as over F_p / F_q.
// ---------------------------------------------------------------------------

struct FpOps {
  using Elem = i64;
  i64 p;
  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem add(Elem a, Elem b) const { return (a + b) % p; }
  Elem sub(Elem a, Elem b) const { return fp_norm(a - b, p); }
  Elem mul(Elem a, Elem b) const { return (a * b) % p; }
  Elem neg(Elem a) const { return fp_norm(-a, p); }
  Elem inv(Elem a) const { return fp_inv(a, p); }
  bool is_zero(Elem a) const { return a % p == 0; }
  bool eq(Elem a, Elem b) const { return fp_norm(a - b, p) == 0; }
};

struct FqOps {
  using Elem = FqElem;
  FieldSpecPtr spec;
  Elem zero() const { return FqElem::zero(spec); }
  Elem one() const { return FqElem::one(spec); }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem inv(const Elem& a) const { return a.inv(); }
  bool is_zero(const Elem& a) const { return a.is_zero(); }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }
};

template <class Ops>
class Mat {
 public:
  using E = typename Ops::Elem;

  Mat() = default;
  Mat(Ops ops, std::size_t rows, std::size_t cols)
      : ops_(ops), r_(rows), c_(cols), a_(rows * cols, ops.zero()) {}

  static Mat identity(Ops ops, std::size_t n) {
    Mat m(ops, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = ops.one();
    return m;
  }

  const Ops& ops() const { return ops_; }
  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }
  E& at(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
  const E& at(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }

  bool is_zero() const {
    for (const auto& v : a_)
      if (!ops_.is_zero(v)) return false;
    return true;
  }

  friend bool operator==(const Mat& x, const Mat& y) {
    if (x.r_ != y.r_ || x.c_ != y.c_) return false;
    for (std::size_t i = 0; i < x.a_.size(); ++i)
      if (!x.ops_.eq(x.a_[i], y.a_[i])) return false;
    return true;
  }

  Mat add(const Mat& o) const {
    Mat m(ops_, r_, c_);
    for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = ops_.add(a_[i], o.a_[i]);
    return m;
  }
  Mat sub(const Mat& o) const {
    Mat m(ops_, r_, c_);
    for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = ops_.sub(a_[i], o.a_[i]);
    return m;
  }
  Mat mul(const Mat& o) const {
    require(c_ == o.r_, errc::internal, "matrix dimension mismatch");
    Mat m(ops_, r_, o.c_);
    for (std::size_t i = 0; i < r_; ++i)
      for (std::size_t k = 0; k < c_; ++k) {
        const E& aik = at(i, k);
        if (ops_.is_zero(aik)) continue;
        for (std::size_t j = 0; j < o.c_; ++j)
          m.at(i, j) = ops_.add(m.at(i, j), ops_.mul(aik, o.at(k, j)));
      }
    return m;
  }
  Mat pow(i64 e) const {
    require(r_ == c_ && e >= 0, errc::internal, "matrix power");
    Mat acc = identity(ops_, r_);
    Mat base = *this;
    while (e > 0) {
      if (e & 1) acc = acc.mul(base);
      base = base.mul(base);
      e >>= 1;
    }
    return acc;
  }
  Mat transpose() const {
    Mat m(ops_, c_, r_);
    for (std::size_t i = 0; i < r_; ++i)
      for (std::size_t j = 0; j < c_; ++j) m.at(j, i) = at(i, j);
    return m;
  }

  std::vector<E> apply(const std::vector<E>& v) const {
    require(v.size() == c_, errc::internal, "vector dimension mismatch");
    std::vector<E> out(r_, ops_.zero());
    for (std::size_t i = 0; i < r_; ++i)
      for (std::size_t j = 0; j < c_; ++j)
        out[i] = ops_.add(out[i], ops_.mul(at(i, j), v[j]));
    return out;
  }

  // reduced row echelon form; records pivot columns
  Mat rref(std::vector<std::size_t>* pivots = nullptr) const {
    Mat m = *this;
    std::size_t row = 0;
    for (std::size_t col = 0; col < c_ && row < r_; ++col) {
      std::size_t sel = row;
      while (sel < r_ && m.ops_.is_zero(m.at(sel, col))) ++sel;
      if (sel == r_) continue;
      if (sel != row)
        for (std::size_t j = 0; j < c_; ++j) std::swap(m.at(sel, j), m.at(row, j));
      E s = m.ops_.inv(m.at(row, col));
      for (std::size_t j = 0; j < c_; ++j) m.at(row, j) = m.ops_.mul(s, m.at(row, j));
      for (std::size_t i = 0; i < r_; ++i) {
        if (i == row || m.ops_.is_zero(m.at(i, col))) continue;
        E f = m.at(i, col);
        for (std::size_t j = 0; j < c_; ++j)
          m.at(i, j) = m.ops_.sub(m.at(i, j), m.ops_.mul(f, m.at(row, j)));
      }
      if (pivots) pivots->push_back(col);
      ++row;
    }
    return m;
  }

  std::size_t rank() const {
    std::vector<std::size_t> piv;
    rref(&piv);
    return piv.size();
  }

  // basis of the right kernel {x : M x = 0}
  std::vector<std::vector<E>> kernel() const {
    std::vector<std::size_t> piv;
    Mat m = rref(&piv);
    std::vector<bool> is_piv(c_, false);
    for (auto c : piv) is_piv[c] = true;
    std::vector<std::vector<E>> out;
    for (std::size_t j = 0; j < c_; ++j) {
      if (is_piv[j]) continue;
      std::vector<E> x(c_, ops_.zero());
      x[j] = ops_.one();
      for (std::size_t i = 0; i < piv.size(); ++i) x[piv[i]] = ops_.neg(m.at(i, j));
      out.push_back(std::move(x));
    }
    return out;
  }

  // one solution of M x = b, if any
  std::optional<std::vector<E>> solve(const std::vector<E>& b) const {
    require(b.size() == r_, errc::internal, "rhs dimension mismatch");
    Mat aug(ops_, r_, c_ + 1);
    for (std::size_t i = 0; i < r_; ++i) {
      for (std::size_t j = 0; j < c_; ++j) aug.at(i, j) = at(i, j);
      aug.at(i, c_) = b[i];
    }
    std::vector<std::size_t> piv;
    Mat m = aug.rref(&piv);
    std::vector<E> x(c_, ops_.zero());
    for (std::size_t i = 0; i < piv.size(); ++i) {
      if (piv[i] == c_) return std::nullopt;  // inconsistent
      x[piv[i]] = m.at(i, c_);
    }
    return x;
  }

  std::optional<Mat> inverse() const {
    require(r_ == c_, errc::internal, "inverse of non-square matrix");
    Mat aug(ops_, r_, 2 * c_);
    for (std::size_t i = 0; i < r_; ++i) {
      for (std::size_t j = 0; j < c_; ++j) aug.at(i, j) = at(i, j);
      aug.at(i, c_ + i) = ops_.one();
    }
    std::vector<std::size_t> piv;
    Mat m = aug.rref(&piv);
    // invertible iff the pivots are exactly the left block's columns
    if (piv.size() != r_) return std::nullopt;
    for (std::size_t i = 0; i < r_; ++i)
      if (piv[i] != i) return std::nullopt;
    Mat inv(ops_, r_, c_);
    for (std::size_t i = 0; i < r_; ++i)
      for (std::size_t j = 0; j < c_; ++j) inv.at(i, j) = m.at(i, c_ + j);
    return inv;
  }

 private:
  Ops ops_;
  std::size_t r_ = 0, c_ = 0;
  std::vector<E> a_;
};

using FpMat = Mat<FpOps>;
using FqMat = Mat<FqOps>;

// ---------------------------------------------------------------------------
// Subspaces as row spans.
// ---------------------------------------------------------------------------

template <class Ops>
std::vector<std::vector<typename Ops::Elem>> rref_rows(
    const Ops& ops, const std::vector<std::vector<typename Ops::Elem>>& rows, std::size_t ncols) {
  Mat<Ops> m(ops, rows.size(), ncols);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < ncols; ++j) m.at(i, j) = rows[i][j];
  std::vector<std::size_t> piv;
  Mat<Ops> r = m.rref(&piv);
  std::vector<std::vector<typename Ops::Elem>> out;
  for (std::size_t i = 0; i < piv.size(); ++i) {
    std::vector<typename Ops::Elem> v(ncols, ops.zero());
    for (std::size_t j = 0; j < ncols; ++j) v[j] = r.at(i, j);
    out.push_back(std::move(v));
  }
  return out;
}

template <class Ops>
bool in_row_span(const Ops& ops, const std::vector<std::vector<typename Ops::Elem>>& basis,
                 const std::vector<typename Ops::Elem>& v) {
  auto rows = basis;
  std::size_t n = v.size();
  std::size_t r0 = rref_rows(ops, rows, n).size();
  rows.push_back(v);
  return rref_rows(ops, rows, n).size() == r0;
}

// basis of the intersection of two row spans, via the left kernel of the
// stacked matrix
template <class Ops>
std::vector<std::vector<typename Ops::Elem>> intersect_row_spaces(
    const Ops& ops, const std::vector<std::vector<typename Ops::Elem>>& a,
    const std::vector<std::vector<typename Ops::Elem>>& b, std::size_t ncols) {
  if (a.empty() || b.empty()) return {};
  // rows x with (x_a, x_b) . [A; B] = 0 give intersection vectors x_a . A
  Mat<Ops> stacked(ops, a.size() + b.size(), ncols);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < ncols; ++j) stacked.at(i, j) = a[i][j];
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = 0; j < ncols; ++j) stacked.at(a.size() + i, j) = b[i][j];
  auto lk = stacked.transpose().kernel();
  std::vector<std::vector<typename Ops::Elem>> rows;
  for (const auto& x : lk) {
    std::vector<typename Ops::Elem> v(ncols, ops.zero());
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < ncols; ++j)
        v[j] = ops.add(v[j], ops.mul(x[i], a[i][j]));
    rows.push_back(std::move(v));
  }
  return rref_rows(ops, rows, ncols);
}

// ---------------------------------------------------------------------------
// Minimal polynomial of a square matrix over F_q (Krylov + lcm over basis
// vectors).
// ---------------------------------------------------------------------------

inline FqPoly matrix_min_poly(const FqMat& m) {
  const auto& ops = m.ops();
  const auto spec = ops.spec;
  const std::size_t n = m.rows();
  FqPoly acc = FqPoly::one(spec);
  for (std::size_t s = 0; s < n; ++s) {
    std::vector<FqElem> v(n, FqElem::zero(spec));
    v[s] = FqElem::one(spec);
    // Krylov chain v, Mv, M^2 v, ... until linearly dependent
    std::vector<std::vector<FqElem>> chain{v};
    while (true) {
      std::vector<FqElem> next = m.apply(chain.back());
      // solve: next = sum c_i chain_i ?
      FqMat sys(ops, n, chain.size());
      for (std::size_t j = 0; j < chain.size(); ++j)
        for (std::size_t i = 0; i < n; ++i) sys.at(i, j) = chain[j][i];
      auto sol = sys.solve(next);
      if (sol) {
        // minimal relation: x^k - sum c_i x^i
        std::vector<FqElem> coeffs(chain.size() + 1, FqElem::zero(spec));
        for (std::size_t i = 0; i < sol->size(); ++i) coeffs[i] = -(*sol)[i];
        coeffs[chain.size()] = FqElem::one(spec);
        FqPoly local(spec, std::move(coeffs));
        FqPoly g = FqPoly::gcd(acc, local);
        acc = (acc * local) / g;  // lcm
        break;
      }
      chain.push_back(std::move(next));
    }
  }
  return acc.monic();
}

// evaluate a polynomial at a square matrix
inline FqMat matrix_poly_eval(const FqPoly& f, const FqMat& m) {
  const auto& ops = m.ops();
  FqMat acc(ops, m.rows(), m.cols());
  FqMat pw = FqMat::identity(ops, m.rows());
  for (i64 i = 0; i <= f.degree(); ++i) {
    FqElem c = f.coeff(static_cast<std::size_t>(i));
    if (!c.is_zero()) {
      FqMat term = pw;
      for (std::size_t r = 0; r < term.rows(); ++r)
        for (std::size_t s = 0; s < term.cols(); ++s)
          term.at(r, s) = term.at(r, s) * c;
      acc = acc.add(term);
    }
    if (i < f.degree()) pw = pw.mul(m);
  }
  return acc;
}

}  // namespace froblab

#endif  // FROBLAB_LINALG_HPP
