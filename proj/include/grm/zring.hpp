#pragma once

#include <cstdint>
#include <limits>

#include "grm/errors.hpp"
#include "grm/params.hpp"

namespace grm {

/// p-adic valuation assigned to zero.
inline constexpr unsigned kValInf = std::numeric_limits<unsigned>::max();

/// The chain ring Z_{p^s}. Elements are canonical residues in [0, p^s),
/// reduced eagerly, so equality is plain integer equality.
class ZpsRing {
 public:
  using Elem = std::uint64_t;

  ZpsRing(std::uint64_t p, unsigned s);

  std::uint64_t p() const { return p_; }
  unsigned s() const { return s_; }
  std::uint64_t modulus() const { return mod_; }

  std::uint64_t size() const { return mod_; }
  std::uint64_t residue_field_size() const { return p_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from_int(long long v) const;

  bool is_zero(Elem a) const { return a == 0; }
  bool eq(Elem a, Elem b) const { return a == b; }

  Elem add(Elem a, Elem b) const {
    Elem c = a + b;  // mod_ < 2^62 keeps this exact
    return c >= mod_ ? c - mod_ : c;
  }
  Elem sub(Elem a, Elem b) const { return b == 0 ? a : add(a, mod_ - b); }
  Elem neg(Elem a) const { return a == 0 ? 0 : mod_ - a; }
  Elem mul(Elem a, Elem b) const {
    return static_cast<Elem>(static_cast<unsigned __int128>(a) * b % mod_);
  }
  Elem pow(Elem a, std::uint64_t e) const;

  /// Largest t with p^t | a; kValInf for a = 0.
  unsigned val(Elem a) const;
  bool is_unit(Elem a) const { return a % p_ != 0; }

  /// Multiplicative inverse of a unit; throws NonUnitError if p | a.
  Elem inv(Elem a) const;

  /// a / p^t, valid only when p^t | a (asserted via exactness check).
  Elem div_pow_p(Elem a, unsigned t) const;
  Elem mul_pow_p(Elem a, unsigned t) const;
  /// Canonical representative of a modulo p^t.
  Elem mod_pow_p(Elem a, unsigned t) const;

  std::uint64_t res_key(Elem a) const { return a % p_; }
  std::uint64_t index_of(Elem a) const { return a; }
  Elem elem_at(std::uint64_t i) const { return i % mod_; }

 private:
  std::uint64_t p_;
  unsigned s_;
  std::uint64_t mod_;
};

}  // namespace grm
