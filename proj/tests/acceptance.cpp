#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "novdef/dim2.hpp"
#include "novdef/scalar_io.hpp"

using namespace novdef;

namespace {

std::mt19937& gen() {
  static std::mt19937 g(7321);
  return g;
}

/// Rational in [-3, 3] with denominator at most 4.
Rational small_rational() {
  std::uniform_int_distribution<long> den(1, 4);
  long q = den(gen());
  std::uniform_int_distribution<long> num(-3 * q, 3 * q);
  return Rational(num(gen()), q);
}

Rational nonzero_rational() {
  Rational r;
  do r = small_rational();
  while (r.is_zero());
  return r;
}

/// Random series with constant term c0; each higher coefficient is zero with probability 1/3.
CSeries random_tail(const Complex& c0, std::size_t N) {
  std::bernoulli_distribution sparse(1.0 / 3);
  std::vector<Complex> c(N);
  c[0] = c0;
  for (std::size_t k = 1; k < N; ++k) c[k] = sparse(gen()) ? Complex(0) : Complex(small_rational());
  return CSeries(std::move(c), N);
}

CSeries parse(const std::string& text) { return parse_series<Complex>(text); }

Algebra<Complex> np_algebra(const BilinearOp<Complex>& dot, const BilinearOp<Complex>& circ) {
  Algebra<Complex> np(dot.dim());
  np.set_op("dot", dot);
  np.set_op("circ", circ);
  return np;
}

Algebra<Complex> euler_gelfand(std::size_t n) {
  auto dot = truncated_polynomial_product<Complex>(n);
  Algebra<Complex> np(n, power_labels(n));
  np.set_op("dot", dot);
  np.set_op("circ", gelfand_construct(dot, euler_derivation<Complex>(n)));
  return np;
}

BilinearOp<Complex> catalog_dot(const std::string& name, const Complex& lambda) {
  return op_cast<Complex>(catalog_entry(name, Poly(lambda)).algebra.op("dot"));
}

EquivalenceWitness random_witness(std::size_t N) {
  std::vector<LinearMap<Complex>> f(N, LinearMap<Complex>(2));
  f[0] = LinearMap<Complex>::identity(2);
  for (std::size_t k = 1; k < N; ++k)
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) f[k].at(i, j) = Complex(small_rational());
  return EquivalenceWitness(std::move(f));
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct Outcome {
  bool pass = true;
  std::ostringstream note;
  void require(bool ok, const std::string& what) {
    if (!ok && pass) note << "first failure: " << what << "; ";
    pass = pass && ok;
  }
};

Outcome compatible_products() {
  Outcome o;
  auto t0 = std::chrono::steady_clock::now();
  auto fam = solve_novikov_compatible(standard_bracket<Complex>());
  double dt = seconds_since(t0);
  o.require(fam.feasible && fam.params.size() == 2, "two-parameter family");
  o.require(fam.family == affine_novikov_family<Poly>(Poly::var("p2"), Poly::var("p1")), "matches a=p2, b=p1");
  o.require(fam.right_commutativity.passed && fam.obstructions.empty(), "zero right-commutativity residuals");
  o.require(dt < 1.0, "runtime under 1 s");
  o.note << "params " << fam.params.size() << ", " << dt << " s";
  return o;
}

Outcome classical_limits() {
  Outcome o;
  std::vector<Algebra<Complex>> corpus;
  for (const char* name : {"A00", "A01", "Alam"})
    for (int t = 0; t < 5; ++t) {
      auto circ = affine_novikov_family<Complex>(Complex(small_rational()), Complex(small_rational()));
      corpus.push_back(np_algebra(catalog_dot(name, Complex(nonzero_rational())), circ));
    }
  for (std::size_t n = 2; n <= 7; ++n) corpus.push_back(euler_gelfand(n));
  for (const auto& np : corpus) {
    auto d = deform_from_np(np, 3);
    o.require(check_novikov_deformation(d).passed, "Novikov deformation");
    auto lim = classical_limit(d);
    o.require(lim.tpa.passed && lim.lie.passed, "classical limit is TPA and Lie");
  }
  o.note << corpus.size() << " Novikov-Poisson algebras";
  return o;
}

std::vector<std::pair<CSeries, CSeries>> canonical_grid() {
  std::vector<std::pair<CSeries, CSeries>> forms;
  for (const char* a : {"-h", "0", "h", "h^2", "-h+h^3", "2"})
    for (const char* b : {"0", "h", "2h", "h^2", "3h^2", "h^3", "1", "2"}) {
      auto as = parse(std::string(a) + "@order=5"), bs = parse(std::string(b) + "@order=5");
      if (!as.coeff(0).is_zero() && !bs.coeff(0).is_zero()) continue;
      auto nf = normalize_family(as, bs);
      bool dup = false;
      for (const auto& f : forms) dup = dup || (f.first == nf.a && f.second == nf.b);
      if (!dup) forms.emplace_back(nf.a, nf.b);
    }
  return forms;
}

Outcome normal_forms() {
  Outcome o;
  const std::size_t N = 6;
  std::uniform_int_distribution<int> entry(0, 2);
  std::bernoulli_distribution resonant(0.3);
  int cases[6] = {};
  for (int t = 0; t < 50; ++t) {
    Complex a0, b0;
    switch (entry(gen())) {
      case 0: break;
      case 1: b0 = Complex(1); break;
      default: a0 = Complex(nonzero_rational()); break;
    }
    auto a = random_tail(a0, N), b = random_tail(b0, N);
    if (a0.is_zero() && b0.is_zero() && resonant(gen())) a = -CSeries::h(N);
    auto nf = normalize_family(a, b);
    ++cases[static_cast<int>(nf.kind)];
    auto nb = normalize_basis(transport(family2d_construct(a, b), random_witness(N)));
    auto moved = normalize_family(nb.a, nb.b);
    o.require(moved.kind == nf.kind && moved.a == nf.a && moved.b == nf.b, "normal form survives a change of basis");
    o.require(nf.confirmation.verdict == Verdict::Equivalent, "normal form confirmed");
    auto check = family2d_equiv(a, b, nf.a, nf.b);
    o.require(check.verdict == Verdict::Equivalent, "family2d_equiv(input, canonical)");
    o.require(verify_witness(family2d_construct(a, b), family2d_construct(nf.a, nf.b), *check.witness).passed,
              "witness verifies");
  }
  auto grid = canonical_grid();
  o.require(grid.size() >= 16, "grid has 16+ representatives");
  for (std::size_t i = 0; i < grid.size(); ++i)
    for (std::size_t j = 0; j < grid.size(); ++j) {
      auto v = family2d_equiv(grid[i].first, grid[i].second, grid[j].first, grid[j].second);
      o.require(v.verdict == (i == j ? Verdict::Equivalent : Verdict::NotEquivalent), "grid pairwise");
    }
  o.note << "50 random inputs (";
  for (int k = 0; k < 6; ++k) o.note << (k ? " " : "") << normal_case_name(static_cast<NormalCase>(k)) << "=" << cases[k];
  o.note << "), grid of " << grid.size();
  return o;
}

Outcome criterion_vs_solver() {
  Outcome o;
  std::uniform_int_distribution<std::size_t> ord(2, 6);
  std::bernoulli_distribution equivalent(0.5);
  int eq = 0, neq = 0, unknown = 0;
  for (int t = 0; t < 30; ++t) {
    const std::size_t N = ord(gen());
    // Zero constant terms, so both verdicts occur; every third pair has a_0 != 0
    // and a'_h differing from a_h in the top coefficient.
    const bool lambda = t % 3 == 2;
    auto a = random_tail(lambda ? Complex(nonzero_rational()) : Complex(0), N), b = random_tail(Complex(0), N);
    auto a2 = lambda ? a + CSeries::constant(Complex(small_rational()), N).shift_up(N - 1, N) : a;
    CSeries b2;
    if (lambda) {
      b2 = random_tail(Complex(0), N);
    } else if (equivalent(gen())) {
      auto eps = random_tail(Complex(1), N), mu = random_tail(Complex(small_rational()), N);
      b2 = b * eps - mu * CSeries::h(N) * (a + CSeries::h(N));
    } else {
      b2 = random_tail(b.coeff(0), N);
    }
    auto d1 = family2d_construct(a, b), d2 = family2d_construct(a2, b2);
    auto fam = family2d_equiv(a, b, a2, b2);
    auto sol = solve_equivalence(d1, d2);
    bool agree = !(fam.verdict == Verdict::Equivalent && sol.verdict == Verdict::NotEquivalent) &&
                 !(fam.verdict == Verdict::NotEquivalent && sol.verdict == Verdict::Equivalent);
    o.require(agree, "verdicts agree");
    for (const auto* v : {&fam, &sol})
      if (v->verdict == Verdict::Equivalent) o.require(verify_witness(d1, d2, *v->witness).passed, "witness verifies");
    fam.verdict == Verdict::Equivalent ? ++eq : ++neq;
    if (sol.verdict == Verdict::Unknown) ++unknown;
  }
  o.note << "30 pairs, " << eq << " equivalent, " << neq << " not, solver unknown " << unknown;
  return o;
}

Outcome np_deformations() {
  Outcome o;
  const std::size_t N = 3;
  const CSeries h = CSeries::h(N);
  auto c = [N](const Complex& x) { return CSeries::constant(x, N); };
  for (int t = 0; t < 5; ++t) {
    Complex a1(small_rational()), b1(small_rational()), lam(nonzero_rational()), lam1(small_rational());
    auto circ = affine_novikov_family<Complex>(a1, b1);

    auto p00 = family2d_parameters(deform_from_np(np_algebra(catalog_dot("A00", lam), circ), N));
    o.require(p00 && p00->first == c(a1) * h && p00->second == c(b1) * h, "A00 gives A_h^{a1 h, b1 h}");

    auto p01 = family2d_parameters(deform_from_np(np_algebra(catalog_dot("A01", lam), circ), N));
    o.require(p01 && p01->first == c(a1) * h && p01->second == c(Complex(1)) + c(b1) * h,
              "A01 gives A_h^{a1 h, 1 + b1 h}");
    if (p01) {
      auto nf = normalize_family(p01->first, p01->second);
      o.require(nf.a == c(a1) * h && nf.b == c(Complex(1)), "normalizes to A_h^{a1 h, 1}");
    }

    auto plam = family2d_parameters(
        deform_from_np(np_algebra(catalog_dot("Alam", lam), affine_novikov_family<Complex>(lam1, b1)), N));
    o.require(plam && plam->first == c(lam) + c(lam1) * h && plam->second == c(b1) * h,
              "Alam gives A_h^{lambda + lambda1 h, b1 h}");
    if (plam) {
      auto nf = normalize_family(plam->first, plam->second);
      o.require(nf.a == plam->first && nf.b.is_zero(), "normalizes to A_h^{lambda + lambda1 h, 0}");
    }
  }
  o.note << "3 structures x 5 points";
  return o;
}

Outcome s5_identity() {
  Outcome o;
  auto t0 = std::chrono::steady_clock::now();
  std::size_t tuples = 0;
  for (std::size_t n = 1; n <= 7; ++n) {
    auto np = euler_gelfand(n);
    Algebra<Complex> lie(n, power_labels(n));
    lie.set_op("bracket", commutator(np.op("circ")));
    auto rep = check_identity(lie, Identity::S5);
    o.require(rep.passed, "S5 on dim " + std::to_string(n));
    tuples += rep.tuples_checked;
  }
  double dt = seconds_since(t0);
  o.require(dt < 30.0, "runtime under 30 s");
  o.note << "dims 1..7, " << tuples << " quintuples, " << dt << " s";
  return o;
}

Outcome d_dt_span() {
  Outcome o;
  const std::size_t n = 5;
  auto br = formal_derivation_bracket(truncated_polynomial_product<Rational>(n), formal_d_dt<Rational>(n));
  auto poly = [n](std::initializer_list<long> c) {
    Vec<Rational> v(n, Rational(0));
    std::size_t k = 0;
    for (long x : c) v[k++] = Rational(x);
    return v;
  };
  auto one = poly({1}), two_t = poly({0, 2}), minus_t2 = poly({0, 0, -1});
  o.require(br(two_t, minus_t2) == poly({0, 0, -2}), "[2t,-t^2] = -2t^2");
  o.require(br(two_t, one) == poly({-2}), "[2t,1] = -2");
  o.require(br(minus_t2, one) == poly({0, 2}), "[-t^2,1] = 2t");
  Algebra<Rational> alg(n, power_labels(n));
  alg.set_op("bracket", br);
  auto sub = subalgebra_check(alg, {one, two_t, minus_t2});
  o.require(sub.closed, "span closed under the bracket");
  o.note << "span {1, 2t, -t^2} in Q[t]/(t^5)";
  return o;
}

Outcome operad_dimensions() {
  Outcome o;
  const std::pair<std::uint64_t, std::uint64_t> expected[] = {{1, 1}, {2, 2}, {6, 6}, {20, 20}, {70, 74}};
  for (long n = 1; n <= 5; ++n) o.require(operad_dims(n) == expected[n - 1], "arity " + std::to_string(n));
  o.require(operad_dims(5).first < operad_dims(5).second, "Nov(5) < TPois(5)");
  o.note << "Nov(5)=" << operad_dims(5).first << " TPois(5)=" << operad_dims(5).second;
  return o;
}

Outcome leftsym_vs_nctpa() {
  Outcome o;
  std::size_t checked = 0, left_symmetric = 0;
  auto compare = [&](const BilinearOp<Rational>& circ) {
    if (!check_identity(circ, Identity::NovRightComm).passed) return;
    Algebra<Rational> alg(circ.dim());
    alg.set_op("circ", circ);
    alg.set_op("bracket", commutator(circ));
    bool left = check_identity(alg, Identity::NovLeftSym).passed;
    bool nctpa = check_identity(alg, Identity::Nctpa).passed;
    o.require(left == nctpa, "NOV_LEFTSYM and NCTPA agree");
    ++checked;
    if (left) ++left_symmetric;
  };
  for (int code = 0; code < 6561; ++code) {
    BilinearOp<Rational> op(2);
    int c = code;
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j)
        for (std::size_t k = 0; k < 2; ++k, c /= 3) op.at(i, j, k) = Rational(c % 3 - 1);
    compare(op);
  }
  for (int t = 0; t < 20; ++t)
    compare(affine_novikov_family<Rational>(small_rational(), small_rational()));
  for (std::size_t n = 1; n <= 5; ++n) {
    auto dot = truncated_polynomial_product<Rational>(n);
    compare(gelfand_construct(dot, euler_derivation<Rational>(n)));
  }
  std::uniform_int_distribution<int> coeff(-1, 1);
  for (int t = 0; t < 300; ++t) {
    BilinearOp<Rational> op(3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j)
        for (std::size_t k = 0; k < 3; ++k)
          if (coeff(gen()) == 0) op.at(i, j, k) = Rational(coeff(gen()));
    compare(op);
  }
  o.note << checked << " right-commutative operations, " << left_symmetric << " Novikov";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"1 compatible Novikov products for [e1,e2]=e2", compatible_products},
      {"2 classical limits of Novikov-Poisson deformations", classical_limits},
      {"3 normal forms of 2-dimensional quantizations", normal_forms},
      {"4 family criterion vs general solver", criterion_vs_solver},
      {"5 deformations of 2-dimensional Novikov-Poisson algebras", np_deformations},
      {"6 quintuple identity on Gel'fand Lie algebras", s5_identity},
      {"7 d/dt bracket on {1, 2t, -t^2}", d_dt_span},
      {"8 operad dimensions", operad_dimensions},
      {"9 left-symmetry vs NCTPA under right-commutativity", leftsym_vs_nctpa},
  };
  int failures = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.note << "exception: " << e.what();
    }
    if (!o.pass) ++failures;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << name << ": " << o.note.str() << "\n";
  }
  return failures == 0 ? 0 : 1;
}
