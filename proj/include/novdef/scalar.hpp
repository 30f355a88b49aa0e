#pragma once

#include <concepts>
#include <string>

#include "novdef/errors.hpp"
#include "novdef/poly.hpp"
#include "novdef/rational.hpp"

namespace novdef {

/// Exact commutative ring element: closed under + - *, with a decidable zero test.
template <class R>
concept Ring = std::regular<R> && requires(const R a, const R b) {
  { R(0) };
  { R(1) };
  { a + b } -> std::convertible_to<R>;
  { a - b } -> std::convertible_to<R>;
  { a * b } -> std::convertible_to<R>;
  { -a } -> std::convertible_to<R>;
  { is_zero(a) } -> std::convertible_to<bool>;
  { to_string(a) } -> std::convertible_to<std::string>;
};

template <class F>
concept Field = Ring<F> && requires(const F a, const F b) {
  { a / b } -> std::convertible_to<F>;
};

inline Rational inverse_of(const Rational& r) { return r.inverse(); }
inline Complex inverse_of(const Complex& c) { return c.inverse(); }
/// Only nonzero constants are units in a polynomial ring.
inline Poly inverse_of(const Poly& p) {
  auto c = p.constant_value();
  if (!c || c->is_zero()) throw NotInvertible("not a unit: " + p.to_string());
  return Poly(c->inverse());
}

// Embeddings Q -> Q(i) -> Q(i)[params] and their partial inverses.

template <class To>
To from_poly(const Poly& p);

template <>
inline Poly from_poly<Poly>(const Poly& p) { return p; }

template <>
inline Complex from_poly<Complex>(const Poly& p) {
  auto c = p.constant_value();
  if (!c) throw BadScalar("expected a number, got " + p.to_string());
  return *c;
}

template <>
inline Rational from_poly<Rational>(const Poly& p) {
  Complex c = from_poly<Complex>(p);
  if (!c.is_real()) throw BadScalar("expected a rational, got " + c.to_string());
  return c.re();
}

inline Poly to_poly(const Poly& p) { return p; }
inline Poly to_poly(const Complex& c) { return Poly(c); }
inline Poly to_poly(const Rational& r) { return Poly(r); }

/// Ring embedding between any two of Rational, Complex, Poly (partial when narrowing).
template <class To, class From>
To scalar_cast(const From& x) {
  if constexpr (std::is_same_v<To, From>) return x;
  else return from_poly<To>(to_poly(x));
}

}  // namespace novdef
