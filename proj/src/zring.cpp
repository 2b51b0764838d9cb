#include "grm/zring.hpp"

#include <string>

namespace grm {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::uint64_t checked_pow(std::uint64_t a, std::uint64_t b) {
  constexpr std::uint64_t kLimit = std::uint64_t{1} << 62;
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < b; ++i) {
    if (a != 0 && r > kLimit / a) {
      throw ParamsTooLargeError("power exceeds the 2^62 size guard");
    }
    r *= a;
  }
  return r;
}

void RingParams::validate() const {
  if (!is_prime(p)) {
    throw InvalidParamsError("p = " + std::to_string(p) + " is not prime");
  }
  if (s < 1) throw InvalidParamsError("s must be >= 1");
  if (r < 1) throw InvalidParamsError("r must be >= 1");
  checked_pow(p, s);  // characteristic must fit a machine word
  checked_pow(p, static_cast<std::uint64_t>(s) * r);
}

ZpsRing::ZpsRing(std::uint64_t p, unsigned s) : p_(p), s_(s) {
  if (!is_prime(p)) {
    throw InvalidParamsError("p = " + std::to_string(p) + " is not prime");
  }
  if (s < 1) throw InvalidParamsError("s must be >= 1");
  mod_ = checked_pow(p, s);
}

ZpsRing::Elem ZpsRing::from_int(long long v) const {
  long long m = static_cast<long long>(mod_);
  long long r = v % m;
  if (r < 0) r += m;
  return static_cast<Elem>(r);
}

ZpsRing::Elem ZpsRing::pow(Elem a, std::uint64_t e) const {
  Elem r = 1;
  Elem base = a;
  while (e > 0) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

unsigned ZpsRing::val(Elem a) const {
  if (a == 0) return kValInf;
  unsigned t = 0;
  while (a % p_ == 0) {
    a /= p_;
    ++t;
  }
  return t;
}

ZpsRing::Elem ZpsRing::inv(Elem a) const {
  if (!is_unit(a)) {
    throw NonUnitError("inverse of a non-unit in Z_" + std::to_string(mod_));
  }
  // |units| = p^s - p^{s-1}; a^(|units| - 1) = a^{-1}.
  std::uint64_t units = mod_ - mod_ / p_;
  return pow(a, units - 1);
}

ZpsRing::Elem ZpsRing::div_pow_p(Elem a, unsigned t) const {
  std::uint64_t pt = checked_pow(p_, t);
  if (a % pt != 0) {
    throw Error("inexact division by p^" + std::to_string(t));
  }
  return a / pt;
}

ZpsRing::Elem ZpsRing::mul_pow_p(Elem a, unsigned t) const {
  if (t >= s_) return 0;
  std::uint64_t pt = checked_pow(p_, t);
  return mul(a, pt);
}

ZpsRing::Elem ZpsRing::mod_pow_p(Elem a, unsigned t) const {
  if (t >= s_) return a;
  std::uint64_t pt = checked_pow(p_, t);
  return a % pt;
}

}  // namespace grm
