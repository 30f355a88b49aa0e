#pragma once

#include <random>
#include <vector>

#include "novdef/dim2.hpp"
#include "novdef/scalar_io.hpp"

namespace novdef::test {

inline std::mt19937& rng() {
  static std::mt19937 gen(20240611u);
  return gen;
}

/// p/q with |p/q| <= bound, q in 1..4.
inline Rational random_rational(long bound = 3, std::mt19937& g = rng()) {
  std::uniform_int_distribution<long> den(1, 4);
  long q = den(g);
  std::uniform_int_distribution<long> num(-bound * q, bound * q);
  return Rational(num(g), q);
}

inline Complex random_complex(std::mt19937& g = rng()) {
  std::bernoulli_distribution imag(0.3);
  return Complex(random_rational(3, g), imag(g) ? random_rational(3, g) : Rational(0));
}

inline CSeries series(std::vector<long> c, std::size_t order) {
  std::vector<Complex> v(c.begin(), c.end());
  return CSeries(std::move(v), order);
}

inline CSeries random_series(std::size_t order, std::mt19937& g = rng()) {
  std::vector<Complex> c;
  for (std::size_t k = 0; k < order; ++k) c.emplace_back(random_rational(3, g));
  return CSeries(std::move(c), order);
}

inline CSeries S(const char* text) { return parse_series<Complex>(text); }

template <Ring R>
Vec<R> vec(std::initializer_list<long> c) {
  Vec<R> v;
  for (long x : c) v.push_back(R(x));
  return v;
}

}  // namespace novdef::test
