#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "grm/errors.hpp"
#include "grm/poly.hpp"
#include "grm/zring.hpp"

namespace grm {

/// Base[x]/(modulus) for a monic modulus over a chain ring Base. With Base =
/// Z_{p^s} and a basic irreducible modulus of degree r this is GR(p^s, r);
/// stacking once more gives GR(p^s, rm) as a free module over GR(p^s, r).
///
/// Elements are fixed-length coefficient vectors (ascending powers, padded
/// with zeros), canonical at every level, so vector equality decides ring
/// equality and elements hash/compare structurally.
template <class Base>
class QuotientRing {
 public:
  using BaseRing = Base;
  using BaseElem = typename Base::Elem;
  using Elem = std::vector<BaseElem>;

  QuotientRing(Base base, Poly<Base> modulus)
      : base_(std::move(base)), modulus_(std::move(modulus)) {
    if (modulus_.c.size() < 2) {
      throw InvalidParamsError("quotient modulus must have degree >= 1");
    }
    if (!base_.eq(modulus_.c.back(), base_.one())) {
      throw InvalidParamsError("quotient modulus must be monic");
    }
    deg_ = modulus_.c.size() - 1;
    size_ = 1;
    res_size_ = 1;
    for (unsigned i = 0; i < deg_; ++i) {
      size_ = mul_guarded(size_, base_.size());
      res_size_ = mul_guarded(res_size_, base_.residue_field_size());
    }
    build_reduction_rows();
  }

  const Base& base() const { return base_; }
  const Poly<Base>& modulus() const { return modulus_; }
  unsigned degree() const { return deg_; }

  std::uint64_t p() const { return base_.p(); }
  unsigned s() const { return base_.s(); }
  std::uint64_t size() const { return size_; }
  std::uint64_t residue_field_size() const { return res_size_; }

  Elem zero() const { return Elem(deg_, base_.zero()); }
  Elem one() const { return from_base(base_.one()); }
  Elem from_int(long long v) const { return from_base(base_.from_int(v)); }

  /// Constant embedding of the coefficient ring.
  Elem from_base(BaseElem a) const {
    Elem e(deg_, base_.zero());
    e[0] = std::move(a);
    return e;
  }

  /// Pad or reject a raw coefficient list.
  Elem from_coeffs(std::vector<BaseElem> coeffs) const {
    if (coeffs.size() > deg_) {
      throw InvalidParamsError("coefficient list longer than extension degree");
    }
    coeffs.resize(deg_, base_.zero());
    return coeffs;
  }

  bool is_zero(const Elem& a) const {
    for (const auto& c : a) {
      if (!base_.is_zero(c)) return false;
    }
    return true;
  }

  bool eq(const Elem& a, const Elem& b) const { return a == b; }

  Elem add(const Elem& a, const Elem& b) const {
    Elem c(deg_);
    for (unsigned i = 0; i < deg_; ++i) c[i] = base_.add(a[i], b[i]);
    return c;
  }

  Elem sub(const Elem& a, const Elem& b) const {
    Elem c(deg_);
    for (unsigned i = 0; i < deg_; ++i) c[i] = base_.sub(a[i], b[i]);
    return c;
  }

  Elem neg(const Elem& a) const {
    Elem c(deg_);
    for (unsigned i = 0; i < deg_; ++i) c[i] = base_.neg(a[i]);
    return c;
  }

  Elem mul(const Elem& a, const Elem& b) const {
    // Schoolbook product, then fold x^{deg+k} through the precomputed rows.
    std::vector<BaseElem> conv(2 * deg_ - 1, base_.zero());
    for (unsigned i = 0; i < deg_; ++i) {
      if (base_.is_zero(a[i])) continue;
      for (unsigned j = 0; j < deg_; ++j) {
        conv[i + j] = base_.add(conv[i + j], base_.mul(a[i], b[j]));
      }
    }
    Elem c(conv.begin(), conv.begin() + deg_);
    for (unsigned k = 0; k + deg_ < conv.size() + 0; ++k) {
      const auto& lift = conv[deg_ + k];
      if (base_.is_zero(lift)) continue;
      const auto& row = red_rows_[k];
      for (unsigned i = 0; i < deg_; ++i) {
        c[i] = base_.add(c[i], base_.mul(lift, row[i]));
      }
    }
    return c;
  }

  Elem pow(const Elem& a, std::uint64_t e) const {
    Elem acc = one();
    Elem base = a;
    while (e > 0) {
      if (e & 1) acc = mul(acc, base);
      base = mul(base, base);
      e >>= 1;
    }
    return acc;
  }

  /// p-adic valuation: minimum over coefficients (the extension is
  /// unramified, so p stays the uniformizer).
  unsigned val(const Elem& a) const {
    unsigned v = kValInf;
    for (const auto& c : a) {
      unsigned w = base_.val(c);
      if (w < v) v = w;
    }
    return v;
  }

  bool is_unit(const Elem& a) const { return val(a) == 0; }

  Elem inv(const Elem& a) const {
    if (!is_unit(a)) throw NonUnitError("inverse of a non-unit ring element");
    std::uint64_t units = size_ - size_ / res_size_;
    Elem r = pow(a, units - 1);
    return r;
  }

  Elem div_pow_p(const Elem& a, unsigned t) const {
    Elem c(deg_);
    for (unsigned i = 0; i < deg_; ++i) c[i] = base_.div_pow_p(a[i], t);
    return c;
  }

  Elem mul_pow_p(const Elem& a, unsigned t) const {
    Elem c(deg_);
    for (unsigned i = 0; i < deg_; ++i) c[i] = base_.mul_pow_p(a[i], t);
    return c;
  }

  Elem mod_pow_p(const Elem& a, unsigned t) const {
    Elem c(deg_);
    for (unsigned i = 0; i < deg_; ++i) c[i] = base_.mod_pow_p(a[i], t);
    return c;
  }

  /// Residue-field key in [0, residue_field_size()), mixed radix over the
  /// coefficients' own residue keys.
  std::uint64_t res_key(const Elem& a) const {
    std::uint64_t key = 0;
    for (unsigned i = deg_; i-- > 0;) {
      key = key * base_.residue_field_size() + base_.res_key(a[i]);
    }
    return key;
  }

  std::uint64_t index_of(const Elem& a) const {
    std::uint64_t idx = 0;
    for (unsigned i = deg_; i-- > 0;) {
      idx = idx * base_.size() + base_.index_of(a[i]);
    }
    return idx;
  }

  Elem elem_at(std::uint64_t idx) const {
    Elem e(deg_);
    for (unsigned i = 0; i < deg_; ++i) {
      e[i] = base_.elem_at(idx % base_.size());
      idx /= base_.size();
    }
    return e;
  }

 private:
  static std::uint64_t mul_guarded(std::uint64_t a, std::uint64_t b) {
    constexpr std::uint64_t kLimit = std::uint64_t{1} << 62;
    if (b != 0 && a > kLimit / b) {
      throw ParamsTooLargeError("ring cardinality exceeds the 2^62 size guard");
    }
    return a * b;
  }

  void build_reduction_rows() {
    // red_rows_[k] = coefficients of x^{deg+k} modulo the modulus.
    red_rows_.clear();
    if (deg_ == 1) return;  // products never overflow a single coefficient
    Elem cur(deg_, base_.zero());
    for (unsigned i = 0; i < deg_; ++i) cur[i] = base_.neg(modulus_.c[i]);
    red_rows_.push_back(cur);
    for (unsigned k = 1; k + 1 < deg_; ++k) {
      Elem next(deg_, base_.zero());
      for (unsigned i = 0; i + 1 < deg_; ++i) next[i + 1] = cur[i];
      const auto& lift = cur[deg_ - 1];
      for (unsigned i = 0; i < deg_; ++i) {
        next[i] = base_.add(next[i], base_.mul(lift, red_rows_[0][i]));
      }
      red_rows_.push_back(next);
      cur = std::move(next);
    }
  }

  Base base_;
  Poly<Base> modulus_;
  unsigned deg_ = 0;
  std::uint64_t size_ = 0;
  std::uint64_t res_size_ = 0;
  std::vector<Elem> red_rows_;
};

using LRing = QuotientRing<ZpsRing>;
using LElem = LRing::Elem;
using RRing = QuotientRing<LRing>;
using RElem = RRing::Elem;

}  // namespace grm
