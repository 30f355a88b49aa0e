#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>

namespace novdef {

/// Exact rational number, always in lowest terms with positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long n) : v_(n) {}  // NOLINT: integers embed implicitly
  Rational(long num, long den);
  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  /// Accepts "p", "-p" or "p/q".
  static Rational parse(std::string_view text);

  const mpq_class& value() const noexcept { return v_; }
  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }

  bool is_zero() const noexcept { return sgn(v_) == 0; }
  bool is_one() const noexcept { return v_ == 1; }
  int sign() const noexcept { return sgn(v_); }
  Rational inverse() const;

  std::string to_string() const;

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class v_;
};

/// Element re + im*i of Q(i).
class Complex {
 public:
  Complex() = default;
  Complex(long n) : re_(n) {}  // NOLINT
  explicit Complex(Rational re, Rational im = Rational()) : re_(std::move(re)), im_(std::move(im)) {}

  static Complex i() { return Complex(Rational(0), Rational(1)); }
  /// Accepts "p/q", "p/q+r/si", "i", "-2i", ...
  static Complex parse(std::string_view text);

  const Rational& re() const noexcept { return re_; }
  const Rational& im() const noexcept { return im_; }
  bool is_real() const noexcept { return im_.is_zero(); }
  bool is_zero() const noexcept { return re_.is_zero() && im_.is_zero(); }
  bool is_one() const noexcept { return re_.is_one() && im_.is_zero(); }

  Rational norm() const { return re_ * re_ + im_ * im_; }
  Complex conj() const { return Complex(re_, -im_); }
  Complex inverse() const;

  std::string to_string() const;

  Complex& operator+=(const Complex& o) { re_ += o.re_; im_ += o.im_; return *this; }
  Complex& operator-=(const Complex& o) { re_ -= o.re_; im_ -= o.im_; return *this; }
  Complex& operator*=(const Complex& o);
  Complex& operator/=(const Complex& o) { return *this *= o.inverse(); }

  friend Complex operator+(Complex a, const Complex& b) { return a += b; }
  friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
  friend Complex operator*(Complex a, const Complex& b) { return a *= b; }
  friend Complex operator/(Complex a, const Complex& b) { return a /= b; }
  friend Complex operator-(const Complex& a) { return Complex(-a.re_, -a.im_); }
  friend bool operator==(const Complex& a, const Complex& b) = default;

  /// Lexicographic on (re, im); used only for canonical ordering.
  friend std::strong_ordering operator<=>(const Complex& a, const Complex& b) {
    if (auto c = a.re_ <=> b.re_; c != 0) return c;
    return a.im_ <=> b.im_;
  }

 private:
  Rational re_;
  Rational im_;
};

inline bool is_zero(const Rational& r) { return r.is_zero(); }
inline bool is_zero(const Complex& c) { return c.is_zero(); }
inline std::string to_string(const Rational& r) { return r.to_string(); }
inline std::string to_string(const Complex& c) { return c.to_string(); }

}  // namespace novdef
