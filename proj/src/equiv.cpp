#include "novdef/equiv.hpp"

#include "novdef/linsolve.hpp"

namespace novdef {

EquivalenceWitness::EquivalenceWitness(std::vector<LinearMap<Complex>> f) : f_(std::move(f)) {
  if (f_.empty()) throw OrderMismatch("witness needs at least f[0]");
  if (!(f_[0] == LinearMap<Complex>::identity(f_[0].dim())))
    throw PreconditionViolated("witness must reduce to the identity modulo h");
  for (const auto& m : f_)
    if (m.dim() != f_[0].dim()) throw DimMismatch("witness matrices differ in dimension");
}

EquivalenceWitness EquivalenceWitness::identity(std::size_t dim, std::size_t order) {
  std::vector<LinearMap<Complex>> f(order, LinearMap<Complex>(dim));
  f[0] = LinearMap<Complex>::identity(dim);
  return EquivalenceWitness(std::move(f));
}

LinearMap<CSeries> EquivalenceWitness::series_map() const {
  const std::size_t n = dim(), N = order();
  LinearMap<CSeries> out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<Complex> c(N);
      for (std::size_t k = 0; k < N; ++k) c[k] = f_[k](i, j);
      out.at(i, j) = CSeries(std::move(c), N);
    }
  return out;
}

EquivalenceWitness invert_witness(const EquivalenceWitness& w) {
  const std::size_t n = w.dim(), N = w.order();
  std::vector<LinearMap<Complex>> g(N, LinearMap<Complex>(n));
  g[0] = LinearMap<Complex>::identity(n);
  for (std::size_t k = 1; k < N; ++k) {
    LinearMap<Complex> acc(n);
    for (std::size_t j = 1; j <= k; ++j) acc = acc + w.f(j) * g[k - j];
    g[k] = acc.map([](const Complex& x) { return -x; });
  }
  return EquivalenceWitness(std::move(g));
}

namespace {

void require_compatible(const Deformation& d1, const Deformation& d2) {
  if (d1.dim() != d2.dim()) throw DimMismatch("deformations differ in dimension");
  if (d1.order() != d2.order()) throw OrderMismatch("deformations differ in truncation order");
}

}  // namespace

IdentityReport<CSeries> verify_witness(const Deformation& d1, const Deformation& d2, const EquivalenceWitness& w) {
  require_compatible(d1, d2);
  if (w.dim() != d1.dim()) throw DimMismatch("witness dimension differs from the deformations");
  if (w.order() != d1.order()) throw OrderMismatch("witness order differs from the deformations");
  const std::size_t n = d1.dim();
  auto p1 = d1.series_op();
  auto p2 = d2.series_op();
  auto f = w.series_map();
  return detail::enumerate<CSeries>("EQUIVALENCE", n, 2, [&](const std::vector<std::size_t>& t) {
    auto x = basis_vector<CSeries>(n, t[0]);
    auto y = basis_vector<CSeries>(n, t[1]);
    return f(p1(x, y)) - p2(f(x), f(y));
  });
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Equivalent: return "Equivalent";
    case Verdict::NotEquivalent: return "NotEquivalent";
    case Verdict::Unknown: return "Unknown";
  }
  return "?";
}

namespace {

using PolyMap = LinearMap<Poly>;

/// Degree-k part of f_h(x ·1 y) - f_h(x) ·2 f_h(y) without the f_k terms,
/// moved to the right-hand side of L(f_k) = R_k. Indexed ((i*n+j)*n+c).
std::vector<Poly> order_rhs(std::size_t k, const std::vector<BilinearOp<Poly>>& mu1,
                            const std::vector<BilinearOp<Poly>>& mu2, const std::vector<PolyMap>& f, std::size_t n) {
  std::vector<Poly> rhs(n * n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vec<Poly> ei = basis_vector<Poly>(n, i), ej = basis_vector<Poly>(n, j);
      Vec<Poly> lhs = mu1[k](ei, ej);
      for (std::size_t p = 1; p < k; ++p) lhs = lhs + f[p](mu1[k - p](ei, ej));
      Vec<Poly> right(n, Poly(0));
      for (std::size_t p = 0; p < k; ++p) {
        Vec<Poly> fx = f[p](ei);
        for (std::size_t q = 0; p + q <= k && q < k; ++q) {
          Vec<Poly> fy = f[q](ej);
          right = right + mu2[k - p - q](fx, fy);
        }
      }
      Vec<Poly> r = right - lhs;
      for (std::size_t c = 0; c < n; ++c) rhs[(i * n + j) * n + c] = std::move(r[c]);
    }
  return rhs;
}

/// Matrix of f -> f(x·y) - f(x)·y - x·f(y) on n^2 unknowns m(a,b) = unknown a*n+b.
Matrix<Complex> order_operator(const BilinearOp<Complex>& mu0) {
  const std::size_t n = mu0.dim();
  Matrix<Complex> l(n * n * n, std::vector<Complex>(n * n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t c = 0; c < n; ++c) {
        auto& row = l[(i * n + j) * n + c];
        for (std::size_t b = 0; b < n; ++b) row[c * n + b] += mu0(i, j, b);
        for (std::size_t a = 0; a < n; ++a) {
          row[a * n + i] -= mu0(a, j, c);
          row[a * n + j] -= mu0(i, a, c);
        }
      }
  return l;
}

void substitute_all(std::vector<PolyMap>& f, const std::string& var, const Poly& value) {
  for (auto& m : f) m = m.map([&](const Poly& p) { return p.substitute(var, value); });
}

}  // namespace

EquivVerdict solve_equivalence(const Deformation& d1, const Deformation& d2) {
  require_compatible(d1, d2);
  const std::size_t n = d1.dim(), N = d1.order();
  EquivVerdict out;
  if (!(d1.mu(0) == d2.mu(0))) {
    out.verdict = Verdict::NotEquivalent;
    out.reason = "base products differ";
    return out;
  }

  std::vector<BilinearOp<Poly>> mu1, mu2;
  for (std::size_t k = 0; k < N; ++k) {
    mu1.push_back(op_cast<Poly>(d1.mu(k)));
    mu2.push_back(op_cast<Poly>(d2.mu(k)));
  }
  const Matrix<Complex> l = order_operator(d1.mu(0));
  std::vector<PolyMap> f(N, PolyMap(n));
  f[0] = PolyMap::identity(n);
  bool committed = false;
  std::size_t next_param = 1;

  for (std::size_t k = 1; k < N; ++k) {
    AffineSolution<Complex, Poly> sol;
    for (;;) {
      sol = solve_affine<Complex, Poly>(l, order_rhs(k, mu1, mu2, f, n), n * n);
      std::vector<Poly> conds;
      for (auto& [row, c] : sol.obstructions)
        if (!c.is_zero()) conds.push_back(c);
      if (conds.empty()) break;

      for (const auto& c : conds)
        if (c.is_constant()) {
          out.failure_order = k;
          if (committed) {
            out.verdict = Verdict::Unknown;
            out.reason = "obstruction at order " + std::to_string(k) + " after committing free parameters";
          } else {
            out.verdict = Verdict::NotEquivalent;
            out.reason = "parameter-free obstruction at order " + std::to_string(k);
          }
          return out;
        }

      const Poly* linear = nullptr;
      for (const auto& c : conds)
        if (c.degree() == 1) {
          linear = &c;
          break;
        }
      if (linear) {
        const std::string var = *linear->variables().begin();
        Poly coef = linear->coefficient_of(var, 1);
        Poly rest = *linear - coef * Poly::var(var);
        substitute_all(f, var, -rest / coef);
        continue;
      }
      // Only nonlinear conditions remain: commit to zero for their parameters.
      committed = true;
      std::map<std::string, Complex> zero;
      for (const auto& c : conds)
        for (const auto& v : c.variables()) zero[v] = Complex(0);
      for (auto& m : f) m = m.map([&](const Poly& p) { return p.substitute(zero); });
    }

    PolyMap fk(n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) fk.at(a, b) = sol.particular[a * n + b];
    for (const auto& v : sol.nullspace) {
      Poly p = Poly::var("q" + std::to_string(next_param++));
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
          if (!v[a * n + b].is_zero()) fk.at(a, b) = fk(a, b) + p * Poly(v[a * n + b]);
    }
    f[k] = std::move(fk);
  }

  std::map<std::string, Complex> zero;
  for (const auto& m : f)
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (const auto& v : m(a, b).variables()) zero[v] = Complex(0);
  std::vector<LinearMap<Complex>> fc;
  for (const auto& m : f) fc.push_back(m.map([&](const Poly& p) { return p.substitute(zero).constant_term(); }));
  EquivalenceWitness w(std::move(fc));
  auto rep = verify_witness(d1, d2, w);
  if (!rep.passed) {
    out.verdict = Verdict::Unknown;
    out.reason = "candidate witness failed verification";
    return out;
  }
  out.verdict = Verdict::Equivalent;
  out.reason = committed ? "witness found after committing free parameters" : "witness found";
  out.witness = std::move(w);
  return out;
}

EquivalenceWitness family2d_witness(const CSeries& epsilon, const CSeries& mu) {
  const std::size_t N = epsilon.order();
  std::vector<LinearMap<Complex>> f(N, LinearMap<Complex>(2));
  f[0] = LinearMap<Complex>::identity(2);
  for (std::size_t k = 1; k < N; ++k) {
    f[k].at(1, 0) = mu.coeff(k - 1);
    f[k].at(1, 1) = epsilon.coeff(k);
  }
  return EquivalenceWitness(std::move(f));
}

EquivVerdict family2d_equiv(const CSeries& a, const CSeries& b, const CSeries& a2, const CSeries& b2) {
  const std::size_t N = a.order();
  if (b.order() != N || a2.order() != N || b2.order() != N || N < 2)
    throw OrderMismatch("family2d_equiv needs four series of one common order >= 2");
  const std::size_t T = N - 1;
  EquivVerdict out;
  for (std::size_t d = 0; d < N; ++d)
    if (!(a.coeff(d) == a2.coeff(d)) && (d < T || a.coeff(0).is_zero())) {
      out.verdict = Verdict::NotEquivalent;
      out.failure_order = d;
      out.reason = "a_h differs (at h^" + std::to_string(d) + ")";
      return out;
    }
  if (!(a.coeff(T) == a2.coeff(T))) {
    // e1 -> (1 + γh^T) e1 maps A_h^{a,b} onto A_h^{a - γ a_0 h^T, b - 2γ b_0 h^T}.
    Complex g = (a.coeff(T) - a2.coeff(T)) * inverse_of(a.coeff(0));
    CSeries top = CSeries::h(N).shift_up(T - 1, N);
    CSeries b1 = b - CSeries::constant(Complex(2) * g * b.coeff(0), N) * top;
    auto rest = family2d_equiv(a2, b1, a2, b2);
    if (rest.verdict != Verdict::Equivalent) return rest;
    std::vector<LinearMap<Complex>> s(N, LinearMap<Complex>(2));
    s[0] = LinearMap<Complex>::identity(2);
    s[T].at(0, 0) = g;
    std::vector<LinearMap<Complex>> f(N, LinearMap<Complex>(2));
    for (std::size_t k = 0; k < N; ++k)
      for (std::size_t j = 0; j <= k; ++j) f[k] = f[k] + rest.witness->f(j) * s[k - j];
    EquivalenceWitness w(std::move(f));
    if (!verify_witness(family2d_construct(a, b), family2d_construct(a2, b2), w).passed) {
      out.verdict = Verdict::Unknown;
      out.reason = "criterion solution failed witness verification";
      return out;
    }
    rest.witness = std::move(w);
    rest.reason += " after rescaling e1 by 1+(" + to_string(g) + ")h^" + std::to_string(T);
    return rest;
  }

  // Unknowns: eps_1..eps_{N-1} at 0..N-2, mu_0..mu_{N-1} at N-1..2N-2.
  const std::size_t cols = 2 * N - 1;
  auto c = [&](std::size_t s) {  // coefficient of h^s in h(a_h + h)
    Complex v = s >= 1 ? a.coeff(s - 1) : Complex(0);
    return s == 2 ? v + Complex(1) : v;
  };
  Matrix<Complex> rows;
  std::vector<Complex> rhs;
  AffineSolution<Complex> sol;
  for (std::size_t d = 0; d < N; ++d) {
    std::vector<Complex> row(cols);
    for (std::size_t j = 1; j <= d; ++j) row[j - 1] = b.coeff(d - j);
    for (std::size_t p = 0; p <= d; ++p) row[N - 1 + p] = -c(d - p);
    rows.push_back(std::move(row));
    rhs.push_back(b2.coeff(d) - b.coeff(d));
    sol = solve_affine<Complex>(rows, rhs, cols);
    if (!sol.consistent) {
      out.verdict = Verdict::NotEquivalent;
      out.failure_order = d;
      out.reason = "no admissible ε_h (obstruction at h^" + std::to_string(d) + ")";
      return out;
    }
  }

  std::vector<Complex> eps(N), mu(N);
  eps[0] = Complex(1);
  for (std::size_t j = 1; j < N; ++j) eps[j] = sol.particular[j - 1];
  for (std::size_t p = 0; p < N; ++p) mu[p] = sol.particular[N - 1 + p];
  out.epsilon = CSeries(eps, N);
  out.mu = CSeries(mu, N);
  EquivalenceWitness w = family2d_witness(*out.epsilon, *out.mu);
  auto rep = verify_witness(family2d_construct(a, b), family2d_construct(a2, b2), w);
  if (!rep.passed) {
    out.verdict = Verdict::Unknown;
    out.reason = "criterion solution failed witness verification";
    return out;
  }
  out.verdict = Verdict::Equivalent;
  out.reason = "ε_h, μ_h solve b' = b ε - μ h (a + h)";
  out.witness = std::move(w);
  return out;
}

}  // namespace novdef

namespace novdef {

Deformation deformation_from_series(const BilinearOp<CSeries>& op, std::size_t order, std::vector<std::string> labels) {
  const std::size_t n = op.dim();
  std::vector<BilinearOp<Complex>> mu(order, BilinearOp<Complex>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const CSeries& s = op(i, j, k);
        if (!s.is_exact_constant() && s.order() != order) throw OrderMismatch("structure constant has wrong order");
        for (std::size_t p = 0; p < order; ++p) mu[p].at(i, j, k) = s.coeff(p);
      }
  Algebra<Complex> base(n, std::move(labels));
  base.set_op("dot", mu[0]);
  return Deformation(std::move(base), std::move(mu));
}

Deformation transport(const Deformation& d, const EquivalenceWitness& g) {
  if (g.dim() != d.dim()) throw DimMismatch("basis change has wrong dimension");
  if (g.order() != d.order()) throw OrderMismatch("basis change has wrong order");
  const std::size_t n = d.dim();
  auto p = d.series_op();
  auto gm = g.series_map();
  auto ginv = invert_witness(g).series_map();
  BilinearOp<CSeries> out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      auto v = ginv(p(gm.column(i), gm.column(j)));
      for (std::size_t k = 0; k < n; ++k) out.at(i, j, k) = v[k];
    }
  return deformation_from_series(out, d.order(), d.base().labels());
}

}  // namespace novdef
