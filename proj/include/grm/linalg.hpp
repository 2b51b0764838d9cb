#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "grm/errors.hpp"
#include "grm/zring.hpp"

namespace grm {

/// Dense row-major rectangular matrix over an arbitrary scalar.
template <class T>
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols, const T& fill)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Mat from_rows(std::vector<std::vector<T>> rows) {
    Mat m;
    if (rows.empty()) return m;
    m.rows_ = rows.size();
    m.cols_ = rows.front().size();
    m.data_.reserve(m.rows_ * m.cols_);
    for (auto& r : rows) {
      if (r.size() != m.cols_) throw LengthMismatchError("ragged matrix rows");
      for (auto& x : r) m.data_.push_back(std::move(x));
    }
    return m;
  }

  std::size_t nrows() const { return rows_; }
  std::size_t ncols() const { return cols_; }

  T& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<T> row(std::size_t i) const {
    return {data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_};
  }

  void append_row(const std::vector<T>& r) {
    if (rows_ == 0 && cols_ == 0) cols_ = r.size();
    if (r.size() != cols_) throw LengthMismatchError("row length mismatch");
    data_.insert(data_.end(), r.begin(), r.end());
    ++rows_;
  }

  bool operator==(const Mat& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

template <class R>
using RingMat = Mat<typename R::Elem>;

template <class R>
using RingVec = std::vector<typename R::Elem>;

/// Coordinatewise product (u_0 v_0, ..., u_{N-1} v_{N-1}).
template <class R>
RingVec<R> compwise_product(const R& ring, const RingVec<R>& u,
                            const RingVec<R>& v) {
  if (u.size() != v.size()) {
    throw LengthMismatchError("component-wise product of unequal lengths");
  }
  RingVec<R> w(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) w[i] = ring.mul(u[i], v[i]);
  return w;
}

template <class R>
typename R::Elem inner_product(const R& ring, const RingVec<R>& u,
                               const RingVec<R>& v) {
  if (u.size() != v.size()) {
    throw LengthMismatchError("inner product of unequal lengths");
  }
  auto acc = ring.zero();
  for (std::size_t i = 0; i < u.size(); ++i) {
    acc = ring.add(acc, ring.mul(u[i], v[i]));
  }
  return acc;
}

template <class R>
RingMat<R> mat_mul(const R& ring, const RingMat<R>& a, const RingMat<R>& b) {
  if (a.ncols() != b.nrows()) throw LengthMismatchError("matrix product shapes");
  RingMat<R> c(a.nrows(), b.ncols(), ring.zero());
  for (std::size_t i = 0; i < a.nrows(); ++i) {
    for (std::size_t k = 0; k < a.ncols(); ++k) {
      if (ring.is_zero(a.at(i, k))) continue;
      for (std::size_t j = 0; j < b.ncols(); ++j) {
        c.at(i, j) = ring.add(c.at(i, j), ring.mul(a.at(i, k), b.at(k, j)));
      }
    }
  }
  return c;
}

template <class R>
RingMat<R> mat_identity(const R& ring, std::size_t n) {
  RingMat<R> m(n, n, ring.zero());
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = ring.one();
  return m;
}

/// Canonical row-module form over a chain ring. Two matrices generate the
/// same row module iff their Howell forms are entry-identical; pivots are
/// exactly p^t for the recorded valuations t.
template <class R>
struct HowellForm {
  RingMat<R> matrix;
  std::vector<std::size_t> pivot_cols;
  std::vector<unsigned> pivot_vals;
};

namespace detail {

// Echelon pass: min-valuation pivots left to right, pivots normalized to
// p^t, entries below eliminated, entries above reduced mod p^t.
template <class R>
HowellForm<R> echelon(const R& ring, std::vector<RingVec<R>> rows,
                      std::size_t ncols) {
  HowellForm<R> out;
  std::size_t next = 0;
  for (std::size_t col = 0; col < ncols; ++col) {
    std::size_t best = rows.size();
    unsigned best_val = kValInf;
    for (std::size_t i = next; i < rows.size(); ++i) {
      unsigned v = ring.val(rows[i][col]);
      if (v < best_val) {
        best_val = v;
        best = i;
      }
    }
    if (best_val == kValInf) continue;
    std::swap(rows[next], rows[best]);
    auto unit = ring.div_pow_p(rows[next][col], best_val);
    auto unit_inv = ring.inv(unit);
    for (auto& x : rows[next]) x = ring.mul(unit_inv, x);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == next) continue;
      const auto& a = rows[i][col];
      if (ring.is_zero(a)) continue;
      typename R::Elem factor;
      if (i > next) {
        factor = ring.div_pow_p(a, best_val);
      } else {
        factor = ring.div_pow_p(ring.sub(a, ring.mod_pow_p(a, best_val)),
                                best_val);
      }
      if (ring.is_zero(factor)) continue;
      for (std::size_t j = col; j < ncols; ++j) {
        rows[i][j] = ring.sub(rows[i][j], ring.mul(factor, rows[next][j]));
      }
    }
    out.pivot_cols.push_back(col);
    out.pivot_vals.push_back(best_val);
    ++next;
    if (next == rows.size()) break;
  }
  rows.resize(next);
  out.matrix = RingMat<R>::from_rows(std::move(rows));
  if (out.matrix.ncols() == 0 && next == 0) {
    out.matrix = RingMat<R>(0, ncols, ring.zero());
  }
  return out;
}

}  // namespace detail

/// Howell canonical form: echelon plus, for every pivot p^t with t > 0, the
/// annihilator multiples p^{s-t} * row folded back in until stable. The
/// extra rows are multiples of existing rows, so the row module never
/// changes; the fixpoint is the canonical form.
template <class R>
HowellForm<R> howell(const R& ring, const RingMat<R>& m) {
  std::vector<RingVec<R>> rows;
  rows.reserve(m.nrows());
  for (std::size_t i = 0; i < m.nrows(); ++i) rows.push_back(m.row(i));
  HowellForm<R> cur = detail::echelon(ring, std::move(rows), m.ncols());
  const unsigned s = ring.s();
  // Each round can only lower pivot valuations or add pivot columns, so the
  // fixpoint arrives within s * ncols rounds.
  for (std::size_t round = 0; round <= s * m.ncols() + 1; ++round) {
    bool added = false;
    std::vector<RingVec<R>> work;
    for (std::size_t i = 0; i < cur.matrix.nrows(); ++i) {
      work.push_back(cur.matrix.row(i));
    }
    for (std::size_t i = 0; i < cur.matrix.nrows(); ++i) {
      unsigned t = cur.pivot_vals[i];
      if (t == 0) continue;
      auto r = cur.matrix.row(i);
      bool nonzero = false;
      for (auto& x : r) {
        x = ring.mul_pow_p(x, s - t);
        nonzero = nonzero || !ring.is_zero(x);
      }
      if (nonzero) {
        work.push_back(std::move(r));
        added = true;
      }
    }
    if (!added) return cur;
    HowellForm<R> next = detail::echelon(ring, std::move(work), m.ncols());
    if (next.matrix == cur.matrix) return cur;
    cur = std::move(next);
  }
  throw Error("howell form did not stabilize (internal bug)");
}

/// Rank of a free row module; throws NotFreeError when a Howell pivot has
/// positive valuation.
template <class R>
std::size_t rank_free(const R& ring, const RingMat<R>& m) {
  HowellForm<R> h = howell(ring, m);
  for (unsigned t : h.pivot_vals) {
    if (t != 0) throw NotFreeError("row module is not free");
  }
  return h.matrix.nrows();
}

template <class R>
bool span_contains(const R& ring, const HowellForm<R>& h, RingVec<R> v) {
  if (v.size() != h.matrix.ncols()) {
    throw LengthMismatchError("vector length does not match matrix columns");
  }
  for (std::size_t i = 0; i < h.matrix.nrows(); ++i) {
    std::size_t col = h.pivot_cols[i];
    unsigned t = h.pivot_vals[i];
    if (ring.is_zero(v[col])) continue;
    if (ring.val(v[col]) < t) return false;
    auto factor = ring.div_pow_p(v[col], t);
    for (std::size_t j = col; j < v.size(); ++j) {
      v[j] = ring.sub(v[j], ring.mul(factor, h.matrix.at(i, j)));
    }
  }
  for (const auto& x : v) {
    if (!ring.is_zero(x)) return false;
  }
  return true;
}

template <class R>
bool span_contains(const R& ring, const RingMat<R>& m, const RingVec<R>& v) {
  return span_contains(ring, howell(ring, m), v);
}

/// Generators of {v : M v^T = 0} as a row module, via the Howell form of
/// [M^T | I]: rows whose head block vanished carry kernel vectors, and the
/// Howell property makes them generate all of the kernel.
template <class R>
RingMat<R> kernel(const R& ring, const RingMat<R>& m) {
  const std::size_t k = m.nrows();
  const std::size_t n = m.ncols();
  std::vector<RingVec<R>> rows;
  rows.reserve(n);
  for (std::size_t j = 0; j < n; ++j) {
    RingVec<R> row(k + n, ring.zero());
    for (std::size_t i = 0; i < k; ++i) row[i] = m.at(i, j);
    row[k + j] = ring.one();
    rows.push_back(std::move(row));
  }
  HowellForm<R> full = howell(ring, RingMat<R>::from_rows(std::move(rows)));
  RingMat<R> out(0, n, ring.zero());
  for (std::size_t i = 0; i < full.matrix.nrows(); ++i) {
    if (full.pivot_cols[i] < k) continue;
    RingVec<R> tail(n);
    for (std::size_t j = 0; j < n; ++j) tail[j] = full.matrix.at(i, k + j);
    out.append_row(tail);
  }
  return out;
}

/// Inverse of a square matrix whose determinant is a unit.
template <class R>
RingMat<R> invert(const R& ring, const RingMat<R>& m) {
  if (m.nrows() != m.ncols()) {
    throw NotInvertibleError("only square matrices can be inverted");
  }
  const std::size_t n = m.nrows();
  std::vector<RingVec<R>> rows;
  rows.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    RingVec<R> row(2 * n, ring.zero());
    for (std::size_t j = 0; j < n; ++j) row[j] = m.at(i, j);
    row[n + i] = ring.one();
    rows.push_back(std::move(row));
  }
  HowellForm<R> h = howell(ring, RingMat<R>::from_rows(std::move(rows)));
  if (h.matrix.nrows() != n) throw NotInvertibleError("matrix is singular");
  for (std::size_t i = 0; i < n; ++i) {
    if (h.pivot_cols[i] != i || h.pivot_vals[i] != 0) {
      throw NotInvertibleError("matrix is singular");
    }
  }
  RingMat<R> inv(n, n, ring.zero());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = h.matrix.at(i, n + j);
  }
  return inv;
}

template <class R>
bool mat_eq(const R&, const RingMat<R>& a, const RingMat<R>& b) {
  return a == b;
}

/// Row-module equality through Howell canonicity.
template <class R>
bool same_row_module(const R& ring, const RingMat<R>& a, const RingMat<R>& b) {
  if (a.ncols() != b.ncols()) return false;
  return howell(ring, a).matrix == howell(ring, b).matrix;
}

}  // namespace grm
