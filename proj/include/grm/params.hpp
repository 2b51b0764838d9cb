#pragma once

#include <cstdint>

#include "grm/errors.hpp"

namespace grm {

/// Deterministic primality test by trial division (fine at the sizes the
/// size guards admit).
bool is_prime(std::uint64_t n);

/// a^b with overflow detection; throws ParamsTooLargeError past 2^62.
std::uint64_t checked_pow(std::uint64_t a, std::uint64_t b);

/// Parameters of the base chain ring GR(p^s, r): characteristic p^s,
/// residue field F_q with q = p^r.
struct RingParams {
  std::uint64_t p = 2;
  unsigned s = 1;
  unsigned r = 1;

  RingParams() = default;
  RingParams(std::uint64_t p_, unsigned s_, unsigned r_) : p(p_), s(s_), r(r_) {
    validate();
  }

  std::uint64_t q() const { return checked_pow(p, r); }
  std::uint64_t characteristic() const { return checked_pow(p, s); }

  /// Throws InvalidParamsError / ParamsTooLargeError on bad inputs.
  void validate() const;
};

}  // namespace grm
