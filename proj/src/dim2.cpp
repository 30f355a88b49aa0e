#include "novdef/dim2.hpp"

#include <algorithm>

#include "novdef/linsolve.hpp"

namespace novdef {

std::vector<CatalogEntry> catalog(const Poly& lambda) {
  return {catalog_entry("A00", lambda), catalog_entry("A01", lambda), catalog_entry("Alam", lambda)};
}

CatalogEntry catalog_entry(const std::string& name, const Poly& lambda) {
  Algebra<Poly> alg(2);
  BilinearOp<Poly> dot(2);
  std::optional<Poly> lam;
  if (name == "A01") {
    dot.at(0, 0, 1) = Poly(1);
  } else if (name == "Alam") {
    if (lambda.is_zero()) throw PreconditionViolated("Alam needs a nonzero lambda");
    dot.at(0, 0, 0) = lambda;
    dot.at(0, 1, 1) = lambda;
    dot.at(1, 0, 1) = lambda;
    lam = lambda;
  } else if (name != "A00") {
    throw PreconditionViolated("unknown catalog entry " + name + " (expected A00, A01 or Alam)");
  }
  alg.set_op("dot", dot);
  alg.set_op("bracket", standard_bracket<Poly>());
  return {name, lam, std::move(alg)};
}

CompatibleFamily solve_novikov_compatible(const BilinearOp<Complex>& bracket) {
  const std::size_t n = bracket.dim();
  {
    Algebra<Complex> lie(n);
    lie.set_op("bracket", bracket);
    auto rep = check_identity(lie, Identity::Lie);
    if (!rep.passed) throw NotLie(rep.to_string(lie.labels()));
  }
  const std::size_t cols = n * n * n;
  auto u = [n](std::size_t i, std::size_t j, std::size_t k) { return (i * n + j) * n + k; };
  Matrix<Complex> a;
  std::vector<Complex> rhs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        std::vector<Complex> row(cols);
        row[u(i, j, k)] += Complex(1);
        row[u(j, i, k)] -= Complex(1);
        a.push_back(std::move(row));
        rhs.push_back(bracket(i, j, k));
      }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l)
        for (std::size_t c = 0; c < n; ++c) {
          std::vector<Complex> row(cols);
          for (std::size_t m = 0; m < n; ++m) {
            row[u(m, l, c)] += Complex(2) * bracket(i, j, m);
            row[u(i, l, m)] -= bracket(m, j, c);
            row[u(j, l, m)] -= bracket(i, m, c);
          }
          a.push_back(std::move(row));
          rhs.push_back(Complex(0));
        }

  auto sol = solve_affine<Complex, Complex>(std::move(a), std::move(rhs), cols);
  CompatibleFamily out;
  out.particular = BilinearOp<Complex>(n);
  out.family = BilinearOp<Poly>(n);
  if (!sol.consistent) return out;
  out.feasible = true;
  for (std::size_t t = 0; t < cols; ++t) out.particular.at(t / (n * n), (t / n) % n, t % n) = sol.particular[t];
  out.family = op_cast<Poly>(out.particular);
  for (const auto& v : sol.nullspace) {
    BilinearOp<Complex> dir(n);
    for (std::size_t t = 0; t < cols; ++t) dir.at(t / (n * n), (t / n) % n, t % n) = v[t];
    std::string p = "p" + std::to_string(out.params.size() + 1);
    out.family = out.family + Poly::var(p) * op_cast<Poly>(dir);
    out.directions.push_back(std::move(dir));
    out.params.push_back(std::move(p));
  }

  Algebra<Poly> fam(n);
  fam.set_op("circ", out.family);
  out.right_commutativity = check_identity(fam, Identity::NovRightComm);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        auto r = identity_residual(fam, Identity::NovRightComm,
                                   {basis_vector<Poly>(n, i), basis_vector<Poly>(n, j), basis_vector<Poly>(n, k)});
        for (auto& p : r) {
          if (p.is_zero()) continue;
          if (std::find(out.obstructions.begin(), out.obstructions.end(), p) == out.obstructions.end() &&
              std::find(out.obstructions.begin(), out.obstructions.end(), -p) == out.obstructions.end())
            out.obstructions.push_back(std::move(p));
        }
      }
  return out;
}

IdentityReport<Poly> np_compatibility(const BilinearOp<Poly>& dot, const BilinearOp<Poly>& circ) {
  if (dot.dim() != circ.dim()) throw DimMismatch("dot and circ differ in dimension");
  Algebra<Poly> np(dot.dim());
  np.set_op("dot", dot);
  np.set_op("circ", circ);
  auto first = check_identity(np, Identity::Np1);
  if (!first.passed) return first;
  auto second = check_identity(np, Identity::Np2);
  if (!second.passed) return second;
  IdentityReport<Poly> out = second;
  out.identity = "NP1+NP2";
  out.tuples_checked += first.tuples_checked;
  return out;
}

namespace {

LinearMap<CSeries> inverse2(const LinearMap<CSeries>& p) {
  CSeries det = p(0, 0) * p(1, 1) - p(0, 1) * p(1, 0);
  CSeries inv = det.inverse();
  LinearMap<CSeries> q(2);
  q.at(0, 0) = p(1, 1) * inv;
  q.at(0, 1) = -p(0, 1) * inv;
  q.at(1, 0) = -p(1, 0) * inv;
  q.at(1, 1) = p(0, 0) * inv;
  return q;
}


/// P^{-1} p(P x, P y) in the basis given by the columns of P.
BilinearOp<CSeries> change_basis(const BilinearOp<CSeries>& p, const LinearMap<CSeries>& pm) {
  auto pinv = inverse2(pm);
  BilinearOp<CSeries> moved(2);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      auto v = pinv(p(pm.column(i), pm.column(j)));
      for (std::size_t k = 0; k < 2; ++k) moved.at(i, j, k) = v[k];
    }
  return moved;
}

/// δ (row-major 2x2) such that P + h^{N-1} δ puts the h^{N-1} part of the
/// product into family shape; nullopt if no change is needed or none exists.
std::optional<std::vector<Complex>> top_correction(const BilinearOp<CSeries>& moved, const BilinearOp<Complex>& mu0,
                                                   std::size_t N) {
  const std::size_t T = N - 1;
  // Entries that vanish in A_h^{a,b}, then e1e2 - e2e1 = h and (e1e1)_1 = (e2e1)_2.
  const std::size_t zero[4][3] = {{0, 1, 0}, {1, 0, 0}, {1, 1, 0}, {1, 1, 1}};
  auto coef = [&](std::size_t i, std::size_t j, std::size_t k, std::size_t r, std::size_t c) {
    Complex x;
    if (c == i) x = x + mu0(r, j, k);
    if (c == j) x = x + mu0(i, r, k);
    if (r == k) x = x - mu0(i, j, c);
    return x;
  };
  Matrix<Complex> a;
  std::vector<Complex> rhs;
  bool needed = false;
  for (const auto& z : zero) {
    std::vector<Complex> row(4);
    for (std::size_t r = 0; r < 2; ++r)
      for (std::size_t c = 0; c < 2; ++c) row[r * 2 + c] = coef(z[0], z[1], z[2], r, c);
    Complex have = moved(z[0], z[1], z[2]).coeff(T);
    needed = needed || !have.is_zero();
    a.push_back(std::move(row));
    rhs.push_back(-have);
  }
  {
    std::vector<Complex> row(4);
    for (std::size_t r = 0; r < 2; ++r)
      for (std::size_t c = 0; c < 2; ++c) row[r * 2 + c] = coef(0, 1, 1, r, c) - coef(1, 0, 1, r, c);
    Complex have = moved(0, 1, 1).coeff(T) - moved(1, 0, 1).coeff(T);
    Complex want = T == 1 ? Complex(1) : Complex(0);
    needed = needed || !(have == want);
    a.push_back(std::move(row));
    rhs.push_back(want - have);
  }
  {
    std::vector<Complex> row(4);
    for (std::size_t r = 0; r < 2; ++r)
      for (std::size_t c = 0; c < 2; ++c) row[r * 2 + c] = coef(0, 0, 0, r, c) - coef(1, 0, 1, r, c);
    Complex have = moved(0, 0, 0).coeff(T) - moved(1, 0, 1).coeff(T);
    needed = needed || !have.is_zero();
    a.push_back(std::move(row));
    rhs.push_back(-have);
  }
  if (!needed) return std::nullopt;
  auto sol = solve_affine<Complex>(std::move(a), std::move(rhs), 4);
  if (!sol.consistent) return std::nullopt;
  return sol.particular;
}
}  // namespace

NormalizedBasis normalize_basis(const Deformation& d) {
  if (d.dim() != 2) throw DimMismatch("normalize_basis needs a 2-dimensional deformation");
  const std::size_t N = d.order();
  if (!commutator(d.mu(0)).is_zero()) throw PreconditionViolated("mu[0] is not commutative");
  auto rep = check_novikov_deformation(d);
  if (!rep.passed) throw PreconditionViolated("not a Novikov deformation: " + rep.to_string(d.base().labels()));

  auto p = d.series_op();
  auto e1 = basis_vector<CSeries>(2, 0), e2 = basis_vector<CSeries>(2, 1);
  auto c = p(e1, e2) - p(e2, e1);
  CSeries mu = c[0].shift_down(1).with_order(N);
  CSeries nu = c[1].shift_down(1).with_order(N);
  if (!mu.coeff(0).is_zero())
    throw PreconditionViolated("limit bracket has [e1,e2] coefficient " + to_string(mu.coeff(0)) + " on e1, expected 0");
  if (!nu.coeff(0).is_one())
    throw PreconditionViolated("limit bracket has [e1,e2] coefficient " + to_string(nu.coeff(0)) + " on e2, expected 1");

  CSeries nuinv = nu.inverse();
  LinearMap<CSeries> pm(2);
  pm.at(0, 0) = nuinv;
  pm.at(1, 0) = CSeries::constant(Complex(0), N);
  pm.at(0, 1) = nuinv * mu;
  pm.at(1, 1) = CSeries::constant(Complex(1), N);
  auto moved = change_basis(p, pm);

  // mu and nu are only known mod h^{N-1}; fix the top coefficients of the basis
  // so that the normalized product has the shape of A_h^{a,b}.
  if (auto delta = top_correction(moved, d.mu(0), N)) {
    const CSeries top = CSeries::h(N).shift_up(N - 2, N);
    for (std::size_t r = 0; r < 2; ++r)
      for (std::size_t col = 0; col < 2; ++col) pm.at(r, col) = pm(r, col) + top * CSeries::constant((*delta)[r * 2 + col], N);
    moved = change_basis(p, pm);
    nu = pm(0, 0).inverse();
    mu = pm(0, 1) * nu;
  }
  auto pinv = inverse2(pm);

  CSeries a = moved(1, 0, 1).with_order(N), b = moved(0, 0, 1).with_order(N);
  auto target = family2d_construct(a, b);
  if (!(moved == target.series_op())) {
    for (std::size_t t = 0; t < 8; ++t) {
      std::size_t i = t / 4, j = (t / 2) % 2, k = t % 2;
      auto expect = target.series_op()(i, j, k);
      if (!(moved(i, j, k) == expect))
        throw PreconditionViolated("normalized product (e" + std::to_string(i + 1) + ",e" + std::to_string(j + 1) +
                                   ") has e" + std::to_string(k + 1) + " coefficient " + moved(i, j, k).to_string() +
                                   ", expected " + expect.to_string());
    }
  }

  std::vector<LinearMap<Complex>> f(N, LinearMap<Complex>(2));
  for (std::size_t k = 0; k < N; ++k)
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) f[k].at(i, j) = pinv(i, j).coeff(k);
  EquivalenceWitness w(std::move(f));
  return {pm.column(0), pm.column(1), mu, nu, a, b, std::move(w)};
}

std::string normal_case_name(NormalCase c) {
  switch (c) {
    case NormalCase::Case1: return "Case1";
    case NormalCase::Case2: return "Case2";
    case NormalCase::Case3: return "Case3";
    case NormalCase::Resonant: return "Resonant";
    case NormalCase::Unital: return "UnitalCase";
    case NormalCase::Lambda: return "LambdaCase";
  }
  return "?";
}

std::string NormalForm::describe() const {
  std::string s = normal_case_name(kind) + "(";
  switch (kind) {
    case NormalCase::Case1:
    case NormalCase::Resonant:
      if (kind == NormalCase::Resonant) s += "a_h=" + a.to_string() + ", ";
      s += "m=" + std::to_string(m) + ", b_m=" + coefficient.to_string();
      break;
    case NormalCase::Case2: s += "a_h=" + a.to_string(); break;
    case NormalCase::Case3: s += "a_h=" + a.to_string() + ", b_1=" + coefficient.to_string(); break;
    case NormalCase::Unital: s += "a_h=" + a.to_string() + ", b_0=" + coefficient.to_string(); break;
    case NormalCase::Lambda: s += "lambda_h=" + a.to_string(); break;
  }
  return s + ")";
}

namespace {

/// c h^m / b for b of valuation m, padded to order N.
CSeries monomial_ratio(const Complex& c, std::size_t m, const CSeries& b) {
  const std::size_t N = b.order();
  CSeries beta = b.shift_down(m);
  return (CSeries::constant(c, N - m) / beta).with_order(N);
}

}  // namespace

NormalForm normalize_family(const CSeries& a, const CSeries& b) {
  if (a.order() != b.order() || a.order() < 2)
    throw OrderMismatch("a_h and b_h need a common order >= 2 (got " + std::to_string(a.order()) + ", " +
                        std::to_string(b.order()) + ")");
  const std::size_t N = a.order();
  const CSeries h = CSeries::h(N);
  const CSeries one = CSeries::constant(Complex(1), N);
  const CSeries zero = CSeries::constant(Complex(0), N);
  const CSeries apl = a + h;
  const Complex a0 = a.coeff(0), b0 = b.coeff(0);

  NormalForm nf;
  nf.a = a;
  nf.epsilon = one;
  nf.mu = zero;
  if (a0.is_zero() && b0.is_zero()) {
    auto k = apl.valuation();
    auto m = b.valuation();
    if (!m) {
      nf.kind = NormalCase::Case2;
      nf.b = zero;
    } else if (!k) {
      nf.kind = NormalCase::Case1;
      nf.m = *m;
      nf.coefficient = b.coeff(*m);
      nf.b = CSeries::constant(nf.coefficient, N).shift_up(*m, N);
      nf.epsilon = monomial_ratio(nf.coefficient, *m, b);
    } else if (*m > *k) {
      nf.kind = NormalCase::Case2;
      nf.b = zero;
      nf.mu = (b.shift_down(*k + 1) / apl.shift_down(*k).with_order(N - *k - 1)).with_order(N);
    } else {
      nf.kind = *m == 1 ? NormalCase::Case3 : NormalCase::Resonant;
      nf.m = *m;
      nf.coefficient = b.coeff(*m);
      nf.b = CSeries::constant(nf.coefficient, N).shift_up(*m, N);
      nf.epsilon = monomial_ratio(nf.coefficient, *m, b);
    }
  } else if (a0.is_zero()) {
    nf.kind = NormalCase::Unital;
    nf.coefficient = b0;
    nf.b = CSeries::constant(b0, N);
    nf.epsilon = nf.b / b;
  } else if (b0.is_zero()) {
    nf.kind = NormalCase::Lambda;
    nf.coefficient = a0;
    nf.b = zero;
    // With a_0 != 0 the coefficient of h^{N-1} in a_h is absorbed by rescaling e1.
    nf.a = a - CSeries::constant(a.coeff(N - 1), N).shift_up(N - 1, N);
    nf.mu = (b.shift_down(1) / apl.with_order(N - 1)).with_order(N);
  } else {
    throw NotAQuantization("constant terms a_0=" + to_string(a0) + ", b_0=" + to_string(b0) +
                           " match no catalog entry (need a_0 = 0 or b_0 = 0)");
  }

  if (!(b * nf.epsilon - nf.mu * h * apl == nf.b))
    throw std::logic_error("normal form witness does not reproduce the canonical b_h");
  nf.confirmation = family2d_equiv(a, b, nf.a, nf.b);
  if (nf.confirmation.verdict != Verdict::Equivalent)
    throw std::logic_error("family2d_equiv rejected the normal form: " + nf.confirmation.reason);
  return nf;
}

std::optional<std::pair<CSeries, CSeries>> family2d_parameters(const Deformation& d) {
  if (d.dim() != 2) return std::nullopt;
  const std::size_t N = d.order();
  std::vector<Complex> a(N), b(N);
  for (std::size_t k = 0; k < N; ++k) {
    a[k] = d.mu(k)(1, 0, 1);
    b[k] = d.mu(k)(0, 0, 1);
  }
  CSeries as(std::move(a), N), bs(std::move(b), N);
  if (!(family2d_construct(as, bs).mu() == d.mu())) return std::nullopt;
  return std::pair{as, bs};
}

std::uint64_t nov_operad_dim(long n) {
  if (n < 1) throw OutOfRange("arity must be positive");
  if (n > 33) throw OutOfRange("arity too large for 64-bit binomials");
  std::uint64_t c = 1;
  const std::uint64_t top = 2 * static_cast<std::uint64_t>(n) - 2, k = static_cast<std::uint64_t>(n) - 1;
  for (std::uint64_t i = 1; i <= k; ++i) c = c * (top - k + i) / i;
  return c;
}

std::pair<std::uint64_t, std::uint64_t> operad_dims(long n) {
  static const std::uint64_t tpois[] = {1, 2, 6, 20, 74};
  if (n < 1 || n > 5) throw OutOfRange("TPois dimensions are tabulated for arity 1..5 only (got " + std::to_string(n) + ")");
  return {nov_operad_dim(n), tpois[n - 1]};
}

}  // namespace novdef
