#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "grm/errors.hpp"

namespace grm {

/// Univariate polynomial over a coefficient ring R, ascending coefficients,
/// canonical form (no trailing zeros). The zero polynomial is the empty
/// list; its degree is absent rather than a sentinel value.
template <class R>
struct Poly {
  std::vector<typename R::Elem> c;
};

template <class R>
bool poly_is_zero(const Poly<R>& f) {
  return f.c.empty();
}

template <class R>
std::optional<std::size_t> degree(const Poly<R>& f) {
  if (f.c.empty()) return std::nullopt;
  return f.c.size() - 1;
}

template <class R>
Poly<R> poly_trim(const R& ring, Poly<R> f) {
  while (!f.c.empty() && ring.is_zero(f.c.back())) f.c.pop_back();
  return f;
}

template <class R>
Poly<R> poly_zero(const R&) {
  return {};
}

template <class R>
Poly<R> poly_const(const R& ring, typename R::Elem a) {
  Poly<R> f;
  f.c.push_back(std::move(a));
  return poly_trim(ring, std::move(f));
}

template <class R>
Poly<R> poly_one(const R& ring) {
  return poly_const(ring, ring.one());
}

template <class R>
Poly<R> poly_from_coeffs(const R& ring, std::vector<typename R::Elem> coeffs) {
  Poly<R> f;
  f.c = std::move(coeffs);
  return poly_trim(ring, std::move(f));
}

/// x^k with unit coefficient.
template <class R>
Poly<R> poly_x_pow(const R& ring, std::size_t k) {
  Poly<R> f;
  f.c.assign(k + 1, ring.zero());
  f.c[k] = ring.one();
  return f;
}

/// x^n - 1.
template <class R>
Poly<R> poly_x_pow_minus_one(const R& ring, std::size_t n) {
  Poly<R> f = poly_x_pow(ring, n);
  f.c[0] = ring.neg(ring.one());
  return poly_trim(ring, std::move(f));
}

template <class R>
bool poly_eq(const R& ring, const Poly<R>& f, const Poly<R>& g) {
  if (f.c.size() != g.c.size()) return false;
  for (std::size_t i = 0; i < f.c.size(); ++i) {
    if (!ring.eq(f.c[i], g.c[i])) return false;
  }
  return true;
}

template <class R>
typename R::Elem poly_coeff(const R& ring, const Poly<R>& f, std::size_t i) {
  return i < f.c.size() ? f.c[i] : ring.zero();
}

template <class R>
Poly<R> poly_add(const R& ring, const Poly<R>& f, const Poly<R>& g) {
  Poly<R> h;
  std::size_t len = std::max(f.c.size(), g.c.size());
  h.c.reserve(len);
  for (std::size_t i = 0; i < len; ++i) {
    h.c.push_back(ring.add(poly_coeff(ring, f, i), poly_coeff(ring, g, i)));
  }
  return poly_trim(ring, std::move(h));
}

template <class R>
Poly<R> poly_neg(const R& ring, const Poly<R>& f) {
  Poly<R> h = f;
  for (auto& a : h.c) a = ring.neg(a);
  return h;
}

template <class R>
Poly<R> poly_sub(const R& ring, const Poly<R>& f, const Poly<R>& g) {
  return poly_add(ring, f, poly_neg(ring, g));
}

template <class R>
Poly<R> poly_scale(const R& ring, const typename R::Elem& a, const Poly<R>& f) {
  Poly<R> h = f;
  for (auto& coef : h.c) coef = ring.mul(a, coef);
  return poly_trim(ring, std::move(h));
}

template <class R>
Poly<R> poly_mul(const R& ring, const Poly<R>& f, const Poly<R>& g) {
  if (f.c.empty() || g.c.empty()) return {};
  Poly<R> h;
  h.c.assign(f.c.size() + g.c.size() - 1, ring.zero());
  for (std::size_t i = 0; i < f.c.size(); ++i) {
    if (ring.is_zero(f.c[i])) continue;
    for (std::size_t j = 0; j < g.c.size(); ++j) {
      h.c[i + j] = ring.add(h.c[i + j], ring.mul(f.c[i], g.c[j]));
    }
  }
  return poly_trim(ring, std::move(h));
}

/// Euclidean division f = q*g + rem with deg(rem) < deg(g). The divisor's
/// leading coefficient must be a unit.
template <class R>
std::pair<Poly<R>, Poly<R>> poly_divmod(const R& ring, const Poly<R>& f,
                                        const Poly<R>& g) {
  if (g.c.empty()) throw NonMonicDivisorError("division by zero polynomial");
  if (!ring.is_unit(g.c.back())) {
    throw NonMonicDivisorError("divisor leading coefficient is not a unit");
  }
  const auto lead_inv = ring.inv(g.c.back());
  Poly<R> rem = f;
  Poly<R> quot;
  if (f.c.size() >= g.c.size()) {
    quot.c.assign(f.c.size() - g.c.size() + 1, ring.zero());
  }
  while (!rem.c.empty() && rem.c.size() >= g.c.size()) {
    std::size_t shift = rem.c.size() - g.c.size();
    auto coef = ring.mul(rem.c.back(), lead_inv);
    quot.c[shift] = coef;
    for (std::size_t i = 0; i < g.c.size(); ++i) {
      rem.c[shift + i] =
          ring.sub(rem.c[shift + i], ring.mul(coef, g.c[i]));
    }
    rem = poly_trim(ring, std::move(rem));
  }
  return {poly_trim(ring, std::move(quot)), std::move(rem)};
}

template <class R>
Poly<R> poly_mod(const R& ring, const Poly<R>& f, const Poly<R>& g) {
  return poly_divmod(ring, f, g).second;
}

/// Reversed coefficient list: x^deg(f) * f(1/x).
template <class R>
Poly<R> poly_reciprocal(const R& ring, const Poly<R>& f) {
  if (f.c.empty()) throw ZeroPolynomialError("reciprocal of zero polynomial");
  Poly<R> h = f;
  std::reverse(h.c.begin(), h.c.end());
  return poly_trim(ring, std::move(h));
}

/// Unit-normalize so the leading coefficient becomes 1.
template <class R>
Poly<R> monicize(const R& ring, const Poly<R>& f) {
  if (f.c.empty()) throw NonUnitLeadingError("cannot monicize zero polynomial");
  if (!ring.is_unit(f.c.back())) {
    throw NonUnitLeadingError("leading coefficient is not a unit");
  }
  return poly_scale(ring, ring.inv(f.c.back()), f);
}

template <class R>
typename R::Elem poly_eval(const R& ring, const Poly<R>& f,
                           const typename R::Elem& x) {
  auto acc = ring.zero();
  for (std::size_t i = f.c.size(); i-- > 0;) {
    acc = ring.add(ring.mul(acc, x), f.c[i]);
  }
  return acc;
}

template <class R>
Poly<R> poly_mulmod(const R& ring, const Poly<R>& f, const Poly<R>& g,
                    const Poly<R>& mod) {
  return poly_mod(ring, poly_mul(ring, f, g), mod);
}

template <class R>
Poly<R> poly_powmod(const R& ring, const Poly<R>& f, std::uint64_t e,
                    const Poly<R>& mod) {
  Poly<R> acc = poly_mod(ring, poly_one(ring), mod);
  Poly<R> base = poly_mod(ring, f, mod);
  while (e > 0) {
    if (e & 1) acc = poly_mulmod(ring, acc, base, mod);
    base = poly_mulmod(ring, base, base, mod);
    e >>= 1;
  }
  return acc;
}

/// Monic gcd by the Euclidean algorithm; valid over fields (every nonzero
/// remainder gets monicized, so each division step has a unit divisor).
template <class R>
Poly<R> poly_gcd_field(const R& ring, Poly<R> f, Poly<R> g) {
  f = poly_trim(ring, std::move(f));
  g = poly_trim(ring, std::move(g));
  while (!g.c.empty()) {
    Poly<R> r = poly_mod(ring, f, monicize(ring, g));
    f = std::move(g);
    g = std::move(r);
  }
  if (!f.c.empty()) f = monicize(ring, f);
  return f;
}

/// Map coefficients into another ring (e.g. reduction Z_{p^s} -> F_p).
template <class ROut, class RIn, class Fn>
Poly<ROut> poly_map(const ROut& out, const Poly<RIn>& f, Fn&& fn) {
  Poly<ROut> h;
  h.c.reserve(f.c.size());
  for (const auto& a : f.c) h.c.push_back(fn(a));
  return poly_trim(out, std::move(h));
}

}  // namespace grm
