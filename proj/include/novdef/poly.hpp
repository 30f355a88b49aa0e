#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "novdef/rational.hpp"

namespace novdef {

/// Power product of named symbols, sorted by name, exponents strictly positive.
class Monomial {
 public:
  using Factor = std::pair<std::string, unsigned>;

  Monomial() = default;
  explicit Monomial(std::vector<Factor> factors);
  static Monomial var(const std::string& name, unsigned exp = 1);

  const std::vector<Factor>& factors() const noexcept { return f_; }
  unsigned degree() const noexcept;
  unsigned degree_in(const std::string& name) const noexcept;
  bool is_one() const noexcept { return f_.empty(); }
  /// This monomial with the given symbol removed.
  Monomial without(const std::string& name) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial&, const Monomial&) = default;

  std::string to_string() const;

 private:
  std::vector<Factor> f_;
};

/// Canonical term order: higher total degree first, then lexicographic by symbol name.
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Multivariate polynomial with Q(i) coefficients over named parameters.
/// No zero coefficient is ever stored, so equality is structural.
class Poly {
 public:
  using Terms = std::map<Monomial, Complex, MonomialOrder>;

  Poly() = default;
  Poly(long n) : Poly(Complex(n)) {}  // NOLINT
  explicit Poly(const Rational& c) : Poly(Complex(c)) {}
  explicit Poly(const Complex& c);
  static Poly var(const std::string& name);
  static Poly term(const Complex& c, Monomial m);

  const Terms& terms() const noexcept { return t_; }
  bool is_zero() const noexcept { return t_.empty(); }
  bool is_constant() const noexcept;
  /// Value of a constant polynomial, nullopt otherwise.
  std::optional<Complex> constant_value() const;
  /// Coefficient of the empty monomial.
  Complex constant_term() const;
  unsigned degree() const noexcept;
  unsigned degree_in(const std::string& name) const noexcept;
  std::set<std::string> variables() const;

  /// Coefficient of name^k, as a polynomial in the remaining symbols.
  Poly coefficient_of(const std::string& name, unsigned k) const;

  /// Replace the listed symbols; unlisted symbols stay symbolic.
  Poly substitute(const std::map<std::string, Complex>& values) const;
  Poly substitute(const std::string& name, const Poly& value) const;
  /// Full evaluation; throws MissingSymbol naming every unassigned symbol.
  Complex evaluate(const std::map<std::string, Complex>& values) const;

  std::string to_string() const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Complex& c);
  /// Division by a nonzero constant polynomial.
  Poly& operator/=(const Poly& o);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Complex& c) { return a *= c; }
  friend Poly operator/(Poly a, const Poly& b) { return a /= b; }
  friend Poly operator-(const Poly& a);
  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  void add_term(const Monomial& m, const Complex& c);
  Terms t_;
};

inline bool is_zero(const Poly& p) { return p.is_zero(); }
inline std::string to_string(const Poly& p) { return p.to_string(); }

}  // namespace novdef
