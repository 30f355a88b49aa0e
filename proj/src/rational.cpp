#include "novdef/rational.hpp"

#include <cctype>

#include "novdef/errors.hpp"

namespace novdef {

namespace {

bool valid_integer(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational::Rational(long num, long den) {
  if (den == 0) throw NotInvertible("zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!valid_integer(num) || !valid_integer(den) || den.front() == '-' || den.front() == '+')
    throw BadScalar("not a rational: '" + std::string(text) + "'");
  std::string n(num);
  if (n.front() == '+') n.erase(0, 1);
  mpz_class zn(n, 10), zd(std::string(den), 10);
  if (zd == 0) throw BadScalar("zero denominator in '" + std::string(text) + "'");
  mpq_class q(zn, zd);
  q.canonicalize();
  return Rational(std::move(q));
}

Rational Rational::inverse() const {
  if (is_zero()) throw NotInvertible("division by zero rational");
  return Rational(mpq_class(1 / v_));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw NotInvertible("division by zero rational");
  v_ /= o.v_;
  return *this;
}

std::string Rational::to_string() const { return v_.get_str(); }

Complex Complex::parse(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw BadScalar("empty scalar");
  if (s.back() != 'i') return Complex(Rational::parse(s));
  s.pop_back();
  // split "re+im" at the last sign that is not the leading one
  std::size_t split = std::string::npos;
  for (std::size_t k = s.size(); k-- > 1;)
    if (s[k] == '+' || s[k] == '-') { split = k; break; }
  std::string re = split == std::string::npos ? "0" : s.substr(0, split);
  std::string im = split == std::string::npos ? s : s.substr(split);
  if (im.empty() || im == "+") im = "1";
  if (im == "-") im = "-1";
  return Complex(Rational::parse(re), Rational::parse(im));
}

Complex Complex::inverse() const {
  Rational n = norm();
  if (n.is_zero()) throw NotInvertible("division by zero complex");
  return Complex(re_ / n, -im_ / n);
}

Complex& Complex::operator*=(const Complex& o) {
  Rational r = re_ * o.re_ - im_ * o.im_;
  Rational m = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(r);
  im_ = std::move(m);
  return *this;
}

std::string Complex::to_string() const {
  if (im_.is_zero()) return re_.to_string();
  std::string im;
  if (im_ == Rational(1)) im = "i";
  else if (im_ == Rational(-1)) im = "-i";
  else im = im_.to_string() + "i";
  if (re_.is_zero()) return im;
  return re_.to_string() + (im.front() == '-' ? "" : "+") + im;
}

}  // namespace novdef
