#pragma once

#include <cstdint>
#include <vector>

#include "grm/errors.hpp"
#include "grm/linalg.hpp"

namespace grm {

/// The residue field F_q = F_p[y]/(hbar) with elements packed as base-p
/// integer keys (digit i = coefficient of y^i). Deliberately self-contained:
/// multiplication is schoolbook polynomial arithmetic mod p reduced by long
/// division, and inverses are found by scanning, so results obtained here do
/// not depend on the chain-ring arithmetic they are used to check.
class FqField {
 public:
  /// hbar: monic modulus as coefficient list mod p, ascending, length r+1.
  FqField(std::uint64_t p, std::vector<std::uint64_t> hbar);

  std::uint64_t p() const { return p_; }
  unsigned r() const { return r_; }
  std::uint64_t q() const { return q_; }

  std::uint64_t zero() const { return 0; }
  std::uint64_t one() const { return 1; }

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t neg(std::uint64_t a) const;
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;
  std::uint64_t inv(std::uint64_t a) const;

  bool is_zero(std::uint64_t a) const { return a == 0; }

 private:
  std::vector<std::uint64_t> decode(std::uint64_t key) const;
  std::uint64_t encode(const std::vector<std::uint64_t>& digits) const;

  std::uint64_t p_;
  unsigned r_;
  std::uint64_t q_;
  std::vector<std::uint64_t> hbar_;
};

using FqMat = Mat<std::uint64_t>;

/// Reduced row echelon form over F_q; canonical for row-space comparison.
FqMat fq_rref(const FqField& f, const FqMat& m);

std::size_t fq_rank(const FqField& f, const FqMat& m);

bool fq_same_row_space(const FqField& f, const FqMat& a, const FqMat& b);

}  // namespace grm
