#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "novdef/errors.hpp"
#include "novdef/linsolve.hpp"
#include "novdef/scalar.hpp"
#include "novdef/series.hpp"

namespace novdef {

template <Ring R>
using Vec = std::vector<R>;

template <Ring R>
Vec<R> basis_vector(std::size_t n, std::size_t i) {
  Vec<R> v(n, R(0));
  v[i] = R(1);
  return v;
}

template <Ring R>
bool is_zero_vec(const Vec<R>& v) {
  for (const auto& x : v)
    if (!is_zero(x)) return false;
  return true;
}

template <Ring R>
Vec<R>& add_scaled(Vec<R>& acc, const Vec<R>& v, const R& s) {
  if (is_zero(s)) return acc;
  for (std::size_t k = 0; k < v.size(); ++k)
    if (!is_zero(v[k])) acc[k] = acc[k] + s * v[k];
  return acc;
}

template <Ring R>
Vec<R> operator+(Vec<R> a, const Vec<R>& b) {
  for (std::size_t k = 0; k < a.size(); ++k) a[k] = a[k] + b[k];
  return a;
}
template <Ring R>
Vec<R> operator-(Vec<R> a, const Vec<R>& b) {
  for (std::size_t k = 0; k < a.size(); ++k) a[k] = a[k] - b[k];
  return a;
}
template <Ring R>
Vec<R> scaled(Vec<R> a, const R& s) {
  for (auto& x : a) x = s * x;
  return a;
}

/// Renders a coordinate vector as a combination of basis labels, e.g. "2*e1-(a+1)*e2".
template <Ring R>
std::string format_vector(const Vec<R>& v, const std::vector<std::string>& labels) {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (is_zero(v[k])) continue;
    std::string cs = to_string(v[k]);
    bool compound = cs.find_first_of("+-", 1) != std::string::npos || cs.find('@') != std::string::npos;
    bool negative = !compound && cs.front() == '-';
    if (negative) cs.erase(0, 1);
    if (compound) cs = "(" + cs + ")";
    s += negative ? "-" : (s.empty() ? "" : "+");
    if (cs != "1") s += cs + "*";
    s += labels.at(k);
  }
  return s.empty() ? "0" : s;
}

std::vector<std::string> default_labels(std::size_t n);

/// Structure constants of e_i ⋄ e_j = Σ_k c(i,j,k) e_k (indices 0-based).
template <Ring R>
class BilinearOp {
 public:
  BilinearOp() = default;
  explicit BilinearOp(std::size_t n) : n_(n), c_(n * n * n, R(0)) {}

  std::size_t dim() const noexcept { return n_; }
  R& at(std::size_t i, std::size_t j, std::size_t k) { return c_.at((i * n_ + j) * n_ + k); }
  const R& operator()(std::size_t i, std::size_t j, std::size_t k) const { return c_.at((i * n_ + j) * n_ + k); }

  /// e_i ⋄ e_j as a coordinate vector.
  Vec<R> product(std::size_t i, std::size_t j) const {
    auto first = c_.begin() + static_cast<std::ptrdiff_t>((i * n_ + j) * n_);
    return Vec<R>(first, first + static_cast<std::ptrdiff_t>(n_));
  }

  Vec<R> operator()(const Vec<R>& x, const Vec<R>& y) const {
    Vec<R> out(n_, R(0));
    for (std::size_t i = 0; i < n_; ++i) {
      if (novdef::is_zero(x[i])) continue;
      for (std::size_t j = 0; j < n_; ++j) {
        if (novdef::is_zero(y[j])) continue;
        R xy = x[i] * y[j];
        const R* row = &c_[(i * n_ + j) * n_];
        for (std::size_t k = 0; k < n_; ++k)
          if (!novdef::is_zero(row[k])) out[k] = out[k] + xy * row[k];
      }
    }
    return out;
  }

  bool is_zero() const {
    for (const auto& x : c_)
      if (!novdef::is_zero(x)) return false;
    return true;
  }

  template <class Fn>
  auto map(Fn fn) const -> BilinearOp<std::decay_t<decltype(fn(std::declval<const R&>()))>> {
    BilinearOp<std::decay_t<decltype(fn(std::declval<const R&>()))>> out(n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        for (std::size_t k = 0; k < n_; ++k) out.at(i, j, k) = fn((*this)(i, j, k));
    return out;
  }

  friend BilinearOp operator+(BilinearOp a, const BilinearOp& b) {
    for (std::size_t t = 0; t < a.c_.size(); ++t) a.c_[t] = a.c_[t] + b.c_.at(t);
    return a;
  }
  friend BilinearOp operator-(BilinearOp a, const BilinearOp& b) {
    for (std::size_t t = 0; t < a.c_.size(); ++t) a.c_[t] = a.c_[t] - b.c_.at(t);
    return a;
  }
  friend BilinearOp operator*(const R& s, BilinearOp a) {
    for (auto& x : a.c_) x = s * x;
    return a;
  }
  friend bool operator==(const BilinearOp&, const BilinearOp&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<R> c_;
};

template <Ring To, Ring From>
BilinearOp<To> op_cast(const BilinearOp<From>& op) {
  return op.map([](const From& x) { return scalar_cast<To>(x); });
}

/// Linear endomorphism with D(e_j) = Σ_i m(i,j) e_i.
template <Ring R>
class LinearMap {
 public:
  LinearMap() = default;
  explicit LinearMap(std::size_t n) : n_(n), m_(n * n, R(0)) {}
  static LinearMap identity(std::size_t n) {
    LinearMap m(n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = R(1);
    return m;
  }

  std::size_t dim() const noexcept { return n_; }
  R& at(std::size_t i, std::size_t j) { return m_.at(i * n_ + j); }
  const R& operator()(std::size_t i, std::size_t j) const { return m_.at(i * n_ + j); }

  Vec<R> operator()(const Vec<R>& x) const {
    Vec<R> out(n_, R(0));
    for (std::size_t j = 0; j < n_; ++j) {
      if (novdef::is_zero(x[j])) continue;
      for (std::size_t i = 0; i < n_; ++i)
        if (!novdef::is_zero(m_[i * n_ + j])) out[i] = out[i] + m_[i * n_ + j] * x[j];
    }
    return out;
  }
  /// Image of the j-th basis vector (the j-th column).
  Vec<R> column(std::size_t j) const {
    Vec<R> out(n_);
    for (std::size_t i = 0; i < n_; ++i) out[i] = m_[i * n_ + j];
    return out;
  }

  bool is_zero() const {
    for (const auto& x : m_)
      if (!novdef::is_zero(x)) return false;
    return true;
  }

  template <class Fn>
  auto map(Fn fn) const -> LinearMap<std::decay_t<decltype(fn(std::declval<const R&>()))>> {
    LinearMap<std::decay_t<decltype(fn(std::declval<const R&>()))>> out(n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) out.at(i, j) = fn((*this)(i, j));
    return out;
  }

  friend LinearMap operator*(const LinearMap& a, const LinearMap& b) {
    LinearMap out(a.n_);
    for (std::size_t i = 0; i < a.n_; ++i)
      for (std::size_t k = 0; k < a.n_; ++k) {
        if (novdef::is_zero(a(i, k))) continue;
        for (std::size_t j = 0; j < a.n_; ++j) out.at(i, j) = out(i, j) + a(i, k) * b(k, j);
      }
    return out;
  }
  friend LinearMap operator+(LinearMap a, const LinearMap& b) {
    for (std::size_t t = 0; t < a.m_.size(); ++t) a.m_[t] = a.m_[t] + b.m_.at(t);
    return a;
  }
  friend bool operator==(const LinearMap&, const LinearMap&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<R> m_;
};

/// A vector space with named bilinear operations ("dot", "circ", "bracket")
/// and optionally named linear maps, all over one scalar ring.
template <Ring R>
class Algebra {
 public:
  Algebra() = default;
  explicit Algebra(std::size_t n, std::vector<std::string> labels = {}, std::string field = "Q")
      : n_(n), labels_(labels.empty() ? default_labels(n) : std::move(labels)), field_(std::move(field)) {
    if (labels_.size() != n_) throw DimMismatch("basis label count differs from dimension");
  }

  std::size_t dim() const noexcept { return n_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& field() const noexcept { return field_; }
  void set_field(std::string f) { field_ = std::move(f); }

  bool has_op(const std::string& name) const { return ops_.count(name) > 0; }
  const BilinearOp<R>& op(const std::string& name) const {
    auto it = ops_.find(name);
    if (it == ops_.end()) throw MissingOp("algebra has no operation '" + name + "'");
    return it->second;
  }
  Algebra& set_op(const std::string& name, BilinearOp<R> op) {
    if (op.dim() != n_) throw DimMismatch("operation '" + name + "' has wrong dimension");
    ops_[name] = std::move(op);
    return *this;
  }
  const std::map<std::string, BilinearOp<R>>& ops() const noexcept { return ops_; }

  bool has_map(const std::string& name) const { return maps_.count(name) > 0; }
  const LinearMap<R>& map(const std::string& name) const {
    auto it = maps_.find(name);
    if (it == maps_.end()) throw MissingOp("algebra has no linear map '" + name + "'");
    return it->second;
  }
  Algebra& set_map(const std::string& name, LinearMap<R> m) {
    if (m.dim() != n_) throw DimMismatch("map '" + name + "' has wrong dimension");
    maps_[name] = std::move(m);
    return *this;
  }
  const std::map<std::string, LinearMap<R>>& maps() const noexcept { return maps_; }

  friend bool operator==(const Algebra&, const Algebra&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::string> labels_;
  std::string field_ = "Q";
  std::map<std::string, BilinearOp<R>> ops_;
  std::map<std::string, LinearMap<R>> maps_;
};

template <Ring To, Ring From>
Algebra<To> algebra_cast(const Algebra<From>& a) {
  Algebra<To> out(a.dim(), a.labels(), a.field());
  for (const auto& [name, op] : a.ops()) out.set_op(name, op_cast<To>(op));
  for (const auto& [name, m] : a.maps()) out.set_map(name, m.map([](const From& x) { return scalar_cast<To>(x); }));
  return out;
}

// ---------------------------------------------------------------------------
// Identity engine

enum class Identity { NovLeftSym, NovRightComm, Nctpa, Tpa, Np1, Np2, Lie, CommAssoc, S5 };

std::string identity_name(Identity id);
/// Case-insensitive; accepts "nov_leftsym", "nov-leftsym", "tpa", "s5", ...
std::optional<Identity> parse_identity(std::string_view name);
/// Operation labels an identity reads.
std::vector<std::string> required_ops(Identity id);
/// Number of arguments of the identity's (main) multilinear part.
std::size_t arity(Identity id);
const std::array<Identity, 9>& all_identities();

/// Outcome of checking a multilinear identity on basis tuples.
template <Ring R>
struct IdentityReport {
  std::string identity;
  bool passed = true;
  /// First violating basis tuple (0-based), lexicographic order.
  std::vector<std::size_t> tuple;
  Vec<R> residual;
  std::size_t tuples_checked = 0;

  std::string to_string(const std::vector<std::string>& labels) const {
    if (passed) return identity + ": pass (" + std::to_string(tuples_checked) + " tuples)";
    std::string t;
    for (auto i : tuple) t += (t.empty() ? "" : ",") + labels.at(i);
    return identity + ": FAIL at (" + t + "): residual = " + format_vector(residual, labels);
  }
};

/// Worker threads for tuple enumeration: TPA_THREADS if set, else hardware concurrency.
std::size_t check_threads();

namespace detail {

/// Runs `scan(outer)` for outer in [0, n) across threads; returns the failure
/// with the smallest outer index.
template <class Result, class Scan>
std::optional<Result> first_failure(std::size_t n, Scan scan) {
  std::size_t threads = std::min(check_threads(), n);
  if (threads <= 1) {
    for (std::size_t o = 0; o < n; ++o)
      if (auto r = scan(o)) return r;
    return std::nullopt;
  }
  std::vector<std::optional<Result>> found(n);
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < threads; ++t)
    pool.emplace_back([&, t] {
      for (std::size_t o = t; o < n; o += threads) {
        found[o] = scan(o);
        if (found[o]) return;
      }
    });
  for (auto& th : pool) th.join();
  for (auto& f : found)
    if (f) return f;
  return std::nullopt;
}

/// Enumerates all basis tuples of the given arity lexicographically.
template <Ring R, class Residual>
IdentityReport<R> enumerate(const std::string& name, std::size_t n, std::size_t arity, Residual residual) {
  IdentityReport<R> rep;
  rep.identity = name;
  std::size_t inner = 1;
  for (std::size_t k = 1; k < arity; ++k) inner *= n;
  using Hit = std::pair<std::vector<std::size_t>, Vec<R>>;
  auto hit = first_failure<Hit>(n, [&](std::size_t first) -> std::optional<Hit> {
    std::vector<std::size_t> idx(arity, 0);
    idx[0] = first;
    for (std::size_t t = 0; t < inner; ++t) {
      std::size_t rest = t;
      for (std::size_t k = arity; k-- > 1;) {
        idx[k] = rest % n;
        rest /= n;
      }
      Vec<R> r = residual(idx);
      if (!is_zero_vec(r)) return Hit{idx, std::move(r)};
    }
    return std::nullopt;
  });
  std::size_t total = n * inner;
  if (hit) {
    rep.passed = false;
    rep.tuple = hit->first;
    rep.residual = std::move(hit->second);
    std::size_t pos = 0;
    for (auto i : rep.tuple) pos = pos * n + i;
    rep.tuples_checked = pos + 1;
  } else {
    rep.tuples_checked = total;
  }
  return rep;
}

template <Ring R>
Vec<R> commutator_of(const BilinearOp<R>& op, const Vec<R>& x, const Vec<R>& y) {
  return op(x, y) - op(y, x);
}

}  // namespace detail

/// Residual (lhs - rhs) of an identity's main multilinear part on arbitrary vectors.
/// For LIE this is the Jacobi sum, for COMM_ASSOC the associator.
template <Ring R>
Vec<R> identity_residual(const Algebra<R>& alg, Identity id, const std::vector<Vec<R>>& a) {
  switch (id) {
    case Identity::NovLeftSym: {
      const auto& o = alg.op("circ");
      return o(o(a[0], a[1]), a[2]) - o(o(a[1], a[0]), a[2]) - o(a[0], o(a[1], a[2])) + o(a[1], o(a[0], a[2]));
    }
    case Identity::NovRightComm: {
      const auto& o = alg.op("circ");
      return o(o(a[0], a[1]), a[2]) - o(o(a[0], a[2]), a[1]);
    }
    case Identity::Nctpa: {
      const auto& o = alg.op("circ");
      auto br = [&](const Vec<R>& x, const Vec<R>& y) { return detail::commutator_of(o, x, y); };
      return scaled(o(br(a[0], a[1]), a[2]), R(2)) - br(o(a[0], a[2]), a[1]) - br(a[0], o(a[1], a[2]));
    }
    case Identity::Tpa: {
      const auto& d = alg.op("dot");
      const auto& b = alg.op("bracket");
      return scaled(d(b(a[0], a[1]), a[2]), R(2)) - b(a[0], d(a[1], a[2])) - b(d(a[0], a[2]), a[1]);
    }
    case Identity::Np1: {
      const auto& d = alg.op("dot");
      const auto& o = alg.op("circ");
      return o(d(a[0], a[1]), a[2]) - d(a[0], o(a[1], a[2]));
    }
    case Identity::Np2: {
      const auto& d = alg.op("dot");
      const auto& o = alg.op("circ");
      return d(o(a[0], a[1]), a[2]) - d(o(a[1], a[0]), a[2]) - o(a[0], d(a[1], a[2])) + o(a[1], d(a[0], a[2]));
    }
    case Identity::Lie: {
      const auto& b = alg.op("bracket");
      return b(b(a[0], a[1]), a[2]) + b(b(a[1], a[2]), a[0]) + b(b(a[2], a[0]), a[1]);
    }
    case Identity::CommAssoc: {
      const auto& d = alg.op("dot");
      return d(d(a[0], a[1]), a[2]) - d(a[0], d(a[1], a[2]));
    }
    case Identity::S5: {
      const auto& b = alg.op("bracket");
      // Alternating sum over S4, expanded along the outermost bracket.
      std::array<Vec<R>, 16> f;
      f[0] = a[4];
      for (unsigned s = 1; s < 16; ++s) {
        f[s] = Vec<R>(alg.dim(), R(0));
        int sign = 1;
        for (unsigned j = 0; j < 4; ++j) {
          if (!(s & (1u << j))) continue;
          Vec<R> term = b(a[j], f[s & ~(1u << j)]);
          f[s] = sign > 0 ? f[s] + term : f[s] - term;
          sign = -sign;
        }
      }
      return f[15];
    }
  }
  return {};
}

/// Checks a multilinear identity by exhaustive enumeration of basis tuples.
/// LIE checks antisymmetry on pairs, then Jacobi on triples; COMM_ASSOC checks
/// commutativity on pairs, then associativity on triples.
template <Ring R>
IdentityReport<R> check_identity(const Algebra<R>& alg, Identity id) {
  for (const auto& name : required_ops(id)) alg.op(name);
  const std::size_t n = alg.dim();
  const std::string name = identity_name(id);
  auto e = [n](std::size_t i) { return basis_vector<R>(n, i); };

  if (id == Identity::Lie || id == Identity::CommAssoc) {
    const auto& o = alg.op(id == Identity::Lie ? "bracket" : "dot");
    auto pairs = detail::enumerate<R>(name, n, 2, [&](const std::vector<std::size_t>& t) {
      Vec<R> xy = o.product(t[0], t[1]);
      Vec<R> yx = o.product(t[1], t[0]);
      return id == Identity::Lie ? xy + yx : xy - yx;
    });
    if (!pairs.passed) return pairs;
    auto triples = detail::enumerate<R>(name, n, 3, [&](const std::vector<std::size_t>& t) {
      return identity_residual(alg, id, {e(t[0]), e(t[1]), e(t[2])});
    });
    triples.tuples_checked += pairs.tuples_checked;
    return triples;
  }

  std::size_t k = arity(id);
  return detail::enumerate<R>(name, n, k, [&](const std::vector<std::size_t>& t) {
    std::vector<Vec<R>> args;
    for (auto i : t) args.push_back(e(i));
    return identity_residual(alg, id, args);
  });
}

/// Convenience: check an identity on a single operation placed under the role it needs.
template <Ring R>
IdentityReport<R> check_identity(const BilinearOp<R>& op, Identity id) {
  auto roles = required_ops(id);
  if (roles.size() != 1) throw MissingOp(identity_name(id) + " needs more than one operation");
  Algebra<R> alg(op.dim());
  alg.set_op(roles.front(), op);
  return check_identity(alg, id);
}

template <Ring R>
bool is_novikov(const BilinearOp<R>& op) {
  return check_identity(op, Identity::NovLeftSym).passed && check_identity(op, Identity::NovRightComm).passed;
}

// ---------------------------------------------------------------------------
// Constructions

/// Bracket [x,y] = x⋄y - y⋄x.
template <Ring R>
BilinearOp<R> commutator(const BilinearOp<R>& op) {
  const std::size_t n = op.dim();
  BilinearOp<R> out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) out.at(i, j, k) = op(i, j, k) - op(j, i, k);
  return out;
}

/// Checks D(e_i·e_j) = D(e_i)·e_j + e_i·D(e_j) on all basis pairs.
template <Ring R>
IdentityReport<R> is_derivation(const BilinearOp<R>& dot, const LinearMap<R>& d) {
  if (dot.dim() != d.dim()) throw DimMismatch("derivation and product dimensions differ");
  const std::size_t n = dot.dim();
  return detail::enumerate<R>("DERIVATION", n, 2, [&](const std::vector<std::size_t>& t) {
    Vec<R> x = basis_vector<R>(n, t[0]), y = basis_vector<R>(n, t[1]);
    return d(dot(x, y)) - dot(d(x), y) - dot(x, d(y));
  });
}

/// x∘y = x·D(y) with no precondition checks.
template <Ring R>
BilinearOp<R> formal_gelfand_product(const BilinearOp<R>& dot, const LinearMap<R>& d) {
  if (dot.dim() != d.dim()) throw DimMismatch("derivation and product dimensions differ");
  const std::size_t n = dot.dim();
  BilinearOp<R> out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t m = 0; m < n; ++m) {
        if (is_zero(d(m, j))) continue;
        for (std::size_t k = 0; k < n; ++k)
          if (!is_zero(dot(i, m, k))) out.at(i, j, k) = out(i, j, k) + d(m, j) * dot(i, m, k);
      }
  return out;
}

/// [x,y] = x·D(y) - y·D(x) with no precondition checks; used for formal
/// derivations such as d/dt on bounded-degree spans.
template <Ring R>
BilinearOp<R> formal_derivation_bracket(const BilinearOp<R>& dot, const LinearMap<R>& d) {
  return commutator(formal_gelfand_product(dot, d));
}

namespace detail {
template <Ring R>
void require_gelfand_inputs(const BilinearOp<R>& dot, const LinearMap<R>& d) {
  Algebra<R> alg(dot.dim());
  alg.set_op("dot", dot);
  auto ca = check_identity(alg, Identity::CommAssoc);
  if (!ca.passed) throw NotCommAssoc(ca.to_string(alg.labels()));
  auto der = is_derivation(dot, d);
  if (!der.passed) throw NotDerivation(der.to_string(alg.labels()));
}
}  // namespace detail

/// Gel'fand's Novikov product x∘y = x·D(y) for a commutative associative
/// product and a derivation D.
template <Ring R>
BilinearOp<R> gelfand_construct(const BilinearOp<R>& dot, const LinearMap<R>& d) {
  detail::require_gelfand_inputs(dot, d);
  return formal_gelfand_product(dot, d);
}

/// Lie bracket [x,y] = x·D(y) - y·D(x), the commutator of the Gel'fand product.
template <Ring R>
BilinearOp<R> derivation_bracket(const BilinearOp<R>& dot, const LinearMap<R>& d) {
  detail::require_gelfand_inputs(dot, d);
  return formal_derivation_bracket(dot, d);
}

template <Field F>
struct SubalgebraResult {
  bool closed = false;
  /// Induced structure in the span basis; present iff closed.
  std::optional<Algebra<F>> induced;
  /// First product found outside the span (op name, span indices).
  std::string failure;
};

/// Decides whether span(vectors) is closed under every operation of `alg`;
/// if so, returns the induced structure constants in the given span basis.
template <Field F>
SubalgebraResult<F> subalgebra_check(const Algebra<F>& alg, const std::vector<Vec<F>>& span,
                                     std::vector<std::string> labels = {}) {
  const std::size_t n = alg.dim(), m = span.size();
  Matrix<F> cols(n, std::vector<F>(m, F(0)));  // span vectors as columns
  for (std::size_t s = 0; s < m; ++s) {
    if (span[s].size() != n) throw DimMismatch("span vector has wrong length");
    for (std::size_t i = 0; i < n; ++i) cols[i][s] = span[s][i];
  }
  if (rank(cols, m) != m) throw DependentSpan("span vectors are linearly dependent");

  SubalgebraResult<F> out;
  Algebra<F> induced(m, std::move(labels), alg.field());
  for (const auto& [name, op] : alg.ops()) {
    BilinearOp<F> c(m);
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b) {
        auto sol = solve_affine<F, F>(cols, op(span[a], span[b]), m);
        if (!sol.consistent) {
          out.failure = name + "(" + std::to_string(a + 1) + "," + std::to_string(b + 1) + ")";
          return out;
        }
        for (std::size_t k = 0; k < m; ++k) c.at(a, b, k) = sol.particular[k];
      }
    induced.set_op(name, std::move(c));
  }
  out.closed = true;
  out.induced = std::move(induced);
  return out;
}

// Reference algebras used throughout the examples and tests.

/// Q[t]/(t^n) with basis 1, t, ..., t^{n-1}.
template <Ring R>
BilinearOp<R> truncated_polynomial_product(std::size_t n) {
  BilinearOp<R> dot(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; i + j < n; ++j) dot.at(i, j, i + j) = R(1);
  return dot;
}

/// Euler derivation t·d/dt: t^k -> k t^k.
template <Ring R>
LinearMap<R> euler_derivation(std::size_t n) {
  LinearMap<R> d(n);
  for (std::size_t k = 0; k < n; ++k) d.at(k, k) = R(static_cast<long>(k));
  return d;
}

/// Formal d/dt: t^k -> k t^{k-1}. Not a derivation of the truncated quotient.
template <Ring R>
LinearMap<R> formal_d_dt(std::size_t n) {
  LinearMap<R> d(n);
  for (std::size_t k = 1; k < n; ++k) d.at(k - 1, k) = R(static_cast<long>(k));
  return d;
}

/// t^2·d/dt: t^k -> k t^{k+1} (zero past the truncation).
template <Ring R>
LinearMap<R> t2_derivation(std::size_t n) {
  LinearMap<R> d(n);
  for (std::size_t k = 1; k + 1 < n; ++k) d.at(k + 1, k) = R(static_cast<long>(k));
  return d;
}

std::vector<std::string> power_labels(std::size_t n);

}  // namespace novdef
