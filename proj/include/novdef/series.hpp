#pragma once

#include <algorithm>
#include <cctype>
#include <optional>
#include <string>
#include <vector>

#include "novdef/scalar.hpp"

namespace novdef {

/// Truncated power series in h over R, i.e. an element of R[h]/(h^N).
///
/// Order 0 is reserved for exact constants of R (elements of R ⊂ R[[h]]);
/// they adopt the order of whatever truncated series they meet.
template <Ring R>
class Series {
 public:
  Series() : c_{R(0)} {}
  Series(long n) : c_{R(n)} {}  // NOLINT
  explicit Series(R constant) : c_{std::move(constant)} {}
  Series(std::vector<R> coeffs, std::size_t order) : c_(std::move(coeffs)), order_(order) {
    if (order == 0) throw OrderMismatch("truncated series needs order >= 1");
    c_.resize(order, R(0));
  }

  static Series constant(R c, std::size_t order) { return Series(std::vector<R>{std::move(c)}, order); }
  /// The element h (zero when order is 1).
  static Series h(std::size_t order) {
    std::vector<R> c(order, R(0));
    if (order > 1) c[1] = R(1);
    return Series(std::move(c), order);
  }

  std::size_t order() const noexcept { return order_; }
  bool is_exact_constant() const noexcept { return order_ == 0; }

  R coeff(std::size_t k) const { return k < c_.size() ? c_[k] : R(0); }
  /// Coefficients of h^0 .. h^{N-1}; a single entry for exact constants.
  const std::vector<R>& coeffs() const noexcept { return c_; }

  bool is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const R& x) { return novdef::is_zero(x); });
  }

  /// Least k with a nonzero coefficient of h^k; nullopt means the series vanishes (valuation infinity).
  std::optional<std::size_t> valuation() const {
    for (std::size_t k = 0; k < c_.size(); ++k)
      if (!novdef::is_zero(c_[k])) return k;
    return std::nullopt;
  }

  /// Projection to (or lift of an exact constant into) R[h]/(h^N).
  Series with_order(std::size_t order) const {
    if (order == 0) {
      for (std::size_t k = 1; k < c_.size(); ++k)
        if (!novdef::is_zero(c_[k])) throw OrderMismatch("cannot demote a non-constant series to an exact constant");
      return Series(c_[0]);
    }
    std::vector<R> c(c_.begin(), c_.begin() + std::min(c_.size(), order));
    return Series(std::move(c), order);
  }

  /// Multiplicative inverse; the constant term must be a unit of R.
  Series inverse() const {
    R inv0;
    try {
      inv0 = inverse_of(c_[0]);
    } catch (const NotInvertible&) {
      throw NotInvertible("series with non-invertible constant term " + novdef::to_string(c_[0]));
    }
    if (order_ == 0) return Series(inv0);
    std::vector<R> t(order_, R(0));
    t[0] = inv0;
    for (std::size_t k = 1; k < order_; ++k) {
      R acc(0);
      for (std::size_t j = 1; j <= k; ++j) acc = acc + c_[j] * t[k - j];
      t[k] = -(inv0 * acc);
    }
    return Series(std::move(t), order_);
  }

  /// Division by h^m. The first m coefficients must vanish; the result is
  /// known modulo h^{N-m} only.
  Series shift_down(std::size_t m) const {
    if (m == 0) return *this;
    if (order_ == 0) {
      if (is_zero()) return *this;
      throw NotInvertible("nonzero constant is not divisible by h");
    }
    if (order_ <= m) throw OrderMismatch("shift exceeds truncation order");
    for (std::size_t k = 0; k < m; ++k)
      if (!novdef::is_zero(c_[k])) throw NotInvertible("series not divisible by h^" + std::to_string(m));
    return Series(std::vector<R>(c_.begin() + m, c_.end()), order_ - m);
  }

  /// Multiplication by h^m, keeping order N.
  Series shift_up(std::size_t m, std::size_t order) const {
    Series s = with_order(order);
    std::vector<R> c(order, R(0));
    for (std::size_t k = 0; k + m < order; ++k) c[k + m] = s.c_[k];
    return Series(std::move(c), order);
  }

  std::string to_string() const {
    if (order_ == 0) return novdef::to_string(c_[0]);
    std::string s;
    for (std::size_t k = 0; k < c_.size(); ++k) {
      if (novdef::is_zero(c_[k])) continue;
      std::string cs = novdef::to_string(c_[k]);
      bool compound = cs.find_first_of("+-", 1) != std::string::npos;
      bool negative = !compound && cs.front() == '-';
      if (negative) cs.erase(0, 1);
      if (compound) cs = "(" + cs + ")";
      s += negative ? "-" : (s.empty() ? "" : "+");
      if (k == 0) {
        s += cs;
        continue;
      }
      bool integer = std::all_of(cs.begin(), cs.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); });
      if (cs != "1") s += cs + (integer || compound ? "" : "*");
      s += "h";
      if (k > 1) s += "^" + std::to_string(k);
    }
    if (s.empty()) s = "0";
    return s + "@order=" + std::to_string(order_);
  }

  friend Series operator+(const Series& a, const Series& b) {
    std::size_t n = common_order(a, b);
    if (n == 0) return Series(a.c_[0] + b.c_[0]);
    std::vector<R> c(n, R(0));
    for (std::size_t k = 0; k < n; ++k) c[k] = a.coeff(k) + b.coeff(k);
    return Series(std::move(c), n);
  }
  friend Series operator-(const Series& a, const Series& b) { return a + (-b); }
  friend Series operator-(const Series& a) {
    Series out = a;
    for (auto& x : out.c_) x = -x;
    return out;
  }
  friend Series operator*(const Series& a, const Series& b) {
    std::size_t n = common_order(a, b);
    if (n == 0) return Series(a.c_[0] * b.c_[0]);
    std::vector<R> c(n, R(0));
    for (std::size_t i = 0; i < a.c_.size() && i < n; ++i) {
      if (novdef::is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size() && i + j < n; ++j)
        if (!novdef::is_zero(b.c_[j])) c[i + j] = c[i + j] + a.c_[i] * b.c_[j];
    }
    return Series(std::move(c), n);
  }
  friend Series operator/(const Series& a, const Series& b) { return a * b.inverse(); }
  Series& operator+=(const Series& o) { return *this = *this + o; }
  Series& operator-=(const Series& o) { return *this = *this - o; }
  Series& operator*=(const Series& o) { return *this = *this * o; }

  /// Equality in R[h]/(h^N); exact constants compare after lifting.
  friend bool operator==(const Series& a, const Series& b) {
    std::size_t n = std::max(a.order_, b.order_);
    if (a.order_ != 0 && b.order_ != 0 && a.order_ != b.order_) return false;
    std::size_t len = std::max<std::size_t>(n, 1);
    for (std::size_t k = 0; k < len; ++k)
      if (!(a.coeff(k) == b.coeff(k))) return false;
    return true;
  }

 private:
  static std::size_t common_order(const Series& a, const Series& b) {
    if (a.order_ == 0) return b.order_;
    if (b.order_ == 0 || a.order_ == b.order_) return a.order_;
    throw OrderMismatch("series orders differ: " + std::to_string(a.order_) + " vs " + std::to_string(b.order_));
  }

  std::vector<R> c_;
  std::size_t order_ = 0;
};

template <Ring R>
bool is_zero(const Series<R>& s) {
  return s.is_zero();
}
template <Ring R>
std::string to_string(const Series<R>& s) {
  return s.to_string();
}
template <Ring R>
Series<R> inverse_of(const Series<R>& s) {
  return s.inverse();
}

/// Coefficient-wise ring embedding of a series.
template <Ring To, Ring From>
Series<To> series_cast(const Series<From>& s) {
  std::vector<To> c;
  for (const auto& x : s.coeffs()) c.push_back(scalar_cast<To>(x));
  if (s.is_exact_constant()) return Series<To>(c[0]);
  return Series<To>(std::move(c), s.order());
}

}  // namespace novdef
