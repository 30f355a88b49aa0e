#include "novdef/poly.hpp"

#include <algorithm>

#include "novdef/errors.hpp"

namespace novdef {

Monomial::Monomial(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end());
  for (auto& [name, e] : factors) {
    if (e == 0) continue;
    if (!f_.empty() && f_.back().first == name) f_.back().second += e;
    else f_.emplace_back(std::move(name), e);
  }
}

Monomial Monomial::var(const std::string& name, unsigned exp) { return Monomial({{name, exp}}); }

unsigned Monomial::degree() const noexcept {
  unsigned d = 0;
  for (const auto& f : f_) d += f.second;
  return d;
}

unsigned Monomial::degree_in(const std::string& name) const noexcept {
  for (const auto& f : f_)
    if (f.first == name) return f.second;
  return 0;
}

Monomial Monomial::without(const std::string& name) const {
  Monomial out;
  for (const auto& f : f_)
    if (f.first != name) out.f_.push_back(f);
  return out;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial out;
  std::size_t i = 0, j = 0;
  while (i < a.f_.size() || j < b.f_.size()) {
    if (j == b.f_.size() || (i < a.f_.size() && a.f_[i].first < b.f_[j].first)) {
      out.f_.push_back(a.f_[i++]);
    } else if (i == a.f_.size() || b.f_[j].first < a.f_[i].first) {
      out.f_.push_back(b.f_[j++]);
    } else {
      out.f_.emplace_back(a.f_[i].first, a.f_[i].second + b.f_[j].second);
      ++i;
      ++j;
    }
  }
  return out;
}

std::string Monomial::to_string() const {
  std::string s;
  for (const auto& [name, e] : f_) {
    if (!s.empty()) s += '*';
    s += name;
    if (e != 1) s += '^' + std::to_string(e);
  }
  return s;
}

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
  unsigned da = a.degree(), db = b.degree();
  if (da != db) return da > db;
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  for (std::size_t k = 0; k < fa.size() && k < fb.size(); ++k) {
    if (fa[k].first != fb[k].first) return fa[k].first < fb[k].first;
    if (fa[k].second != fb[k].second) return fa[k].second > fb[k].second;
  }
  return fa.size() < fb.size();
}

Poly::Poly(const Complex& c) {
  if (!c.is_zero()) t_.emplace(Monomial(), c);
}

Poly Poly::var(const std::string& name) { return term(Complex(1), Monomial::var(name)); }

Poly Poly::term(const Complex& c, Monomial m) {
  Poly p;
  if (!c.is_zero()) p.t_.emplace(std::move(m), c);
  return p;
}

bool Poly::is_constant() const noexcept { return t_.empty() || (t_.size() == 1 && t_.begin()->first.is_one()); }

std::optional<Complex> Poly::constant_value() const {
  if (!is_constant()) return std::nullopt;
  return constant_term();
}

Complex Poly::constant_term() const {
  auto it = t_.find(Monomial());
  return it == t_.end() ? Complex() : it->second;
}

unsigned Poly::degree() const noexcept { return t_.empty() ? 0 : t_.begin()->first.degree(); }

unsigned Poly::degree_in(const std::string& name) const noexcept {
  unsigned d = 0;
  for (const auto& [m, c] : t_) d = std::max(d, m.degree_in(name));
  return d;
}

std::set<std::string> Poly::variables() const {
  std::set<std::string> out;
  for (const auto& [m, c] : t_)
    for (const auto& f : m.factors()) out.insert(f.first);
  return out;
}

Poly Poly::coefficient_of(const std::string& name, unsigned k) const {
  Poly out;
  for (const auto& [m, c] : t_)
    if (m.degree_in(name) == k) out.add_term(m.without(name), c);
  return out;
}

Poly Poly::substitute(const std::map<std::string, Complex>& values) const {
  Poly out;
  for (const auto& [m, c] : t_) {
    Complex coef = c;
    std::vector<Monomial::Factor> rest;
    for (const auto& [name, e] : m.factors()) {
      auto it = values.find(name);
      if (it == values.end()) {
        rest.emplace_back(name, e);
        continue;
      }
      for (unsigned k = 0; k < e; ++k) coef *= it->second;
    }
    out.add_term(Monomial(std::move(rest)), coef);
  }
  return out;
}

Poly Poly::substitute(const std::string& name, const Poly& value) const {
  Poly out;
  for (const auto& [m, c] : t_) {
    unsigned e = m.degree_in(name);
    Poly piece = term(c, m.without(name));
    for (unsigned k = 0; k < e; ++k) piece *= value;
    out += piece;
  }
  return out;
}

Complex Poly::evaluate(const std::map<std::string, Complex>& values) const {
  std::string missing;
  for (const auto& v : variables())
    if (!values.count(v)) missing += (missing.empty() ? "" : ", ") + v;
  if (!missing.empty()) throw MissingSymbol("unassigned symbols: " + missing);
  return substitute(values).constant_term();
}

void Poly::add_term(const Monomial& m, const Complex& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = t_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) t_.erase(it);
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [m, c] : o.t_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (const auto& [m, c] : o.t_) add_term(m, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ma, ca] : a.t_)
    for (const auto& [mb, cb] : b.t_) out.add_term(ma * mb, ca * cb);
  return out;
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly& Poly::operator*=(const Complex& c) {
  if (c.is_zero()) {
    t_.clear();
    return *this;
  }
  for (auto& [m, v] : t_) v *= c;
  return *this;
}

Poly& Poly::operator/=(const Poly& o) {
  auto c = o.constant_value();
  if (!c || c->is_zero()) throw NotInvertible("division by non-constant or zero polynomial " + o.to_string());
  return *this *= c->inverse();
}

Poly operator-(const Poly& a) {
  Poly out = a;
  for (auto& [m, c] : out.t_) c = -c;
  return out;
}

std::string Poly::to_string() const {
  if (t_.empty()) return "0";
  std::string s;
  for (const auto& [m, c] : t_) {
    std::string cs = c.to_string();
    bool compound = !c.is_real() && !c.re().is_zero();
    bool negative = !compound && cs.front() == '-';
    if (negative) cs.erase(0, 1);
    if (compound) cs = "(" + cs + ")";
    if (s.empty()) s += negative ? "-" : "";
    else s += negative ? "-" : "+";
    if (m.is_one()) {
      s += cs;
    } else {
      if (cs != "1") s += cs + "*";
      s += m.to_string();
    }
  }
  return s;
}

}  // namespace novdef
