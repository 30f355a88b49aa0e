#include <doctest.h>

#include "novdef/io.hpp"
#include "support.hpp"

using namespace novdef;
using novdef::test::random_series;
using novdef::test::rng;
using novdef::test::S;

namespace {

std::map<std::string, Complex> at(std::initializer_list<std::pair<const std::string, Complex>> v) { return v; }

EquivalenceWitness random_witness(std::size_t N) {
  std::vector<LinearMap<Complex>> f(N, LinearMap<Complex>(2));
  f[0] = LinearMap<Complex>::identity(2);
  for (std::size_t k = 1; k < N; ++k)
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) f[k].at(i, j) = Complex(novdef::test::random_rational());
  return EquivalenceWitness(std::move(f));
}

CSeries random_quantization_series(std::size_t N) {
  auto s = random_series(N);
  return s - CSeries::constant(s.coeff(0), N);
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k == 0) return 1;
  return binomial(n - 1, k - 1) * n / k;
}

}  // namespace

TEST_CASE("catalog entries are transposed Poisson") {
  auto entries = catalog();
  REQUIRE(entries.size() == 3);
  CHECK(entries[0].name == "A00");
  CHECK(entries[1].name == "A01");
  CHECK(entries[2].name == "Alam");
  CHECK(entries[2].lambda == Poly::var("lambda"));
  for (const auto& e : entries) {
    INFO(e.name);
    CHECK(check_identity(e.algebra, Identity::Tpa).passed);
    CHECK(check_identity(e.algebra, Identity::CommAssoc).passed);
    CHECK(check_identity(e.algebra, Identity::Lie).passed);
    CHECK(e.algebra.op("bracket")(0, 1, 1) == Poly(1));
  }
  auto a01 = catalog_entry("A01").algebra.op("dot");
  CHECK(a01(0, 0, 1) == Poly(1));
  CHECK(a01(0, 0, 0).is_zero());
  auto alam = catalog_entry("Alam", Poly(3)).algebra.op("dot");
  CHECK(alam(0, 1, 1) == Poly(3));
  CHECK(catalog_entry("A00").algebra.op("dot").is_zero());
  CHECK_THROWS_AS(catalog_entry("Alam", Poly(0)), PreconditionViolated);
  CHECK_THROWS_AS(catalog_entry("B7"), PreconditionViolated);
}

TEST_CASE("solve_novikov_compatible on [e1,e2] = e2") {
  auto fam = solve_novikov_compatible(standard_bracket<Complex>());
  REQUIRE(fam.feasible);
  REQUIRE(fam.params.size() == 2);
  CHECK(fam.directions.size() == 2);
  CHECK(fam.right_commutativity.passed);
  CHECK(fam.obstructions.empty());
  // The family is the affine Novikov family with p1 = b, p2 = a.
  auto expected = affine_novikov_family<Poly>(Poly::var("p2"), Poly::var("p1"));
  CHECK(fam.family == expected);
  for (int t = 0; t < 10; ++t) {
    Complex a = novdef::test::random_complex(), b = novdef::test::random_complex();
    Algebra<Poly> sym(2);
    sym.set_op("circ", fam.family);
    auto circ = op_cast<Complex>(substitute_params(sym, at({{"p1", b}, {"p2", a}})).op("circ"));
    CHECK(commutator(circ) == standard_bracket<Complex>());
    Algebra<Complex> alg(2);
    alg.set_op("circ", circ);
    alg.set_op("bracket", standard_bracket<Complex>());
    CHECK(check_identity(alg, Identity::Nctpa).passed);
    CHECK(is_novikov(circ));
  }
}

TEST_CASE("solve_novikov_compatible on other brackets") {
  auto abelian = solve_novikov_compatible(BilinearOp<Complex>(1));
  REQUIRE(abelian.feasible);
  CHECK(abelian.params.size() == 1);
  CHECK(abelian.family(0, 0, 0) == Poly::var("p1"));

  BilinearOp<Complex> sl2(3);
  auto set = [&](std::size_t i, std::size_t j, std::size_t k, int c) {
    sl2.at(i, j, k) = Complex(c);
    sl2.at(j, i, k) = Complex(-c);
  };
  set(0, 1, 1, 2);
  set(0, 2, 2, -2);
  set(1, 2, 0, 1);
  CHECK_FALSE(solve_novikov_compatible(sl2).feasible);

  BilinearOp<Complex> bad(2);
  bad.at(0, 1, 1) = Complex(1);
  CHECK_THROWS_AS(solve_novikov_compatible(bad), NotLie);
}

TEST_CASE("np_compatibility for the catalog dots") {
  auto circ = affine_novikov_family<Poly>(Poly::var("a"), Poly::var("b"));
  for (const auto& e : catalog()) {
    INFO(e.name);
    auto rep = np_compatibility(e.algebra.op("dot"), circ);
    CHECK(rep.passed);
    CHECK(rep.identity == "NP1+NP2");
  }
  BilinearOp<Poly> skew(2);
  skew.at(1, 1, 0) = Poly(1);
  auto rep = np_compatibility(catalog_entry("A01").algebra.op("dot"), skew);
  CHECK_FALSE(rep.passed);
  CHECK_THROWS_AS(np_compatibility(BilinearOp<Poly>(2), BilinearOp<Poly>(3)), DimMismatch);
}

TEST_CASE("normalize_basis") {
  const std::size_t N = 5;
  auto a = S("h^2@order=5"), b = S("h+2h^3@order=5");
  auto d = family2d_construct(a, b);
  auto same = normalize_basis(d);
  CHECK(same.mu.is_zero());
  CHECK(same.nu == CSeries::constant(Complex(1), N));
  CHECK(same.a == a);
  CHECK(same.b == b);
  CHECK(verify_witness(d, d, same.witness).passed);

  // E1 = (1+h) e1, so [E1,E2] = h(1+h) E2.
  std::vector<LinearMap<Complex>> f(N, LinearMap<Complex>(2));
  f[0] = LinearMap<Complex>::identity(2);
  f[1].at(0, 0) = Complex(1);
  auto moved = transport(d, EquivalenceWitness(f));
  auto nb = normalize_basis(moved);
  CHECK(nb.nu == S("1+h@order=5"));
  CHECK(nb.mu.is_zero());
  auto target = family2d_construct(nb.a, nb.b);
  CHECK(verify_witness(moved, target, nb.witness).passed);
  CHECK(family2d_equiv(a, b, nb.a, nb.b).verdict == Verdict::Equivalent);

  for (int t = 0; t < 15; ++t) {
    auto g = random_witness(N);
    auto dd = transport(d, g);
    auto r = normalize_basis(dd);
    auto p = dd.series_op();
    auto e1 = basis_vector<CSeries>(2, 0), e2 = basis_vector<CSeries>(2, 1);
    auto c = p(e1, e2) - p(e2, e1);
    CHECK(c[0] == CSeries::h(N) * r.mu);
    CHECK(c[1] == CSeries::h(N) * r.nu);
    CHECK(r.e1[0] * r.nu == CSeries::constant(Complex(1), N));
    CHECK(r.e2[0] * r.nu == r.mu);
    CHECK(r.e2[1] == CSeries::constant(Complex(1), N));
    CHECK(verify_witness(dd, family2d_construct(r.a, r.b), r.witness).passed);
  }

  BilinearOp<CSeries> twice(2);
  auto fam = family2d_construct(a, b).series_op();
  twice = fam;
  twice.at(0, 1, 1) = fam(0, 1, 1) + CSeries::h(N);
  try {
    normalize_basis(deformation_from_series(twice, N));
    FAIL("expected PreconditionViolated");
  } catch (const PreconditionViolated& e) {
    CHECK(std::string(e.what()).find("expected 1") != std::string::npos);
  }
  CHECK_THROWS_AS(normalize_basis(deformation_from_series(BilinearOp<CSeries>(3), N)), DimMismatch);
}

TEST_CASE("normalize_family examples") {
  auto c1 = normalize_family(S("-h@order=6"), S("3h^2+5h^3@order=6"));
  CHECK(c1.kind == NormalCase::Case1);
  CHECK(c1.m == 2);
  CHECK(c1.coefficient == Complex(3));
  CHECK(c1.b == S("3h^2@order=6"));
  CHECK(c1.describe() == "Case1(m=2, b_m=3)");

  auto c2 = normalize_family(S("h^2@order=6"), S("h^3@order=6"));
  CHECK(c2.kind == NormalCase::Case2);
  CHECK(c2.b.is_zero());
  // μ solves h^3 = μ h (h + h^2): μ = h/(1+h).
  CHECK(c2.mu.coeff(0).is_zero());
  CHECK(c2.mu.coeff(1) == Complex(1));
  CHECK(c2.mu.coeff(2) == Complex(-1));
  CHECK(c2.mu.coeff(3) == Complex(1));

  auto c3 = normalize_family(S("0@order=6"), S("2h+h^2@order=6"));
  CHECK(c3.kind == NormalCase::Case3);
  CHECK(c3.coefficient == Complex(2));
  CHECK(c3.b == S("2h@order=6"));

  auto res = normalize_family(S("-h+h^3@order=6"), S("h^2@order=6"));
  CHECK(res.kind == NormalCase::Resonant);
  CHECK(res.m == 2);
  CHECK(res.b == S("h^2@order=6"));

  auto un = normalize_family(S("h@order=4"), S("2+h@order=4"));
  CHECK(un.kind == NormalCase::Unital);
  CHECK(un.b == S("2@order=4"));
  CHECK(un.describe() == "UnitalCase(a_h=h@order=4, b_0=2)");

  auto lam = normalize_family(S("3+h@order=4"), S("h@order=4"));
  CHECK(lam.kind == NormalCase::Lambda);
  CHECK(lam.b.is_zero());
  CHECK(lam.coefficient == Complex(3));

  CHECK_THROWS_AS(normalize_family(S("1@order=4"), S("1@order=4")), NotAQuantization);
  CHECK_THROWS_AS(normalize_family(S("0@order=4"), S("1@order=5")), OrderMismatch);

  for (const auto* nf : {&c1, &c2, &c3, &res, &un, &lam}) {
    CHECK(nf->confirmation.verdict == Verdict::Equivalent);
    auto again = normalize_family(nf->a, nf->b);
    CHECK(again.kind == nf->kind);
    CHECK(again.b == nf->b);
    CHECK(again.epsilon == CSeries::constant(Complex(1), nf->a.order()));
  }
}

TEST_CASE("normal forms on a grid are pairwise inequivalent") {
  const std::size_t N = 5;
  std::vector<std::pair<CSeries, CSeries>> forms;
  for (const char* a : {"-h", "0", "h", "h^2", "-h+h^3", "2"}) {
    auto as = S((std::string(a) + "@order=5").c_str());
    std::vector<std::string> bs = {"0", "h", "2h", "h^2", "3h^2", "h^3", "1", "2"};
    for (const auto& b : bs) {
      auto bsr = S((b + "@order=5").c_str());
      if (!as.coeff(0).is_zero() && !bsr.coeff(0).is_zero()) continue;
      auto nf = normalize_family(as, bsr);
      bool dup = false;
      for (const auto& [fa, fb] : forms) dup = dup || (fa == nf.a && fb == nf.b);
      if (!dup) forms.emplace_back(nf.a, nf.b);
    }
  }
  CHECK(forms.size() >= 16);
  for (std::size_t i = 0; i < forms.size(); ++i)
    for (std::size_t j = 0; j < forms.size(); ++j) {
      auto v = family2d_equiv(forms[i].first, forms[i].second, forms[j].first, forms[j].second);
      CHECK(v.verdict == (i == j ? Verdict::Equivalent : Verdict::NotEquivalent));
    }
  (void)N;
}

TEST_CASE("normal form is an invariant of the equivalence class") {
  std::uniform_int_distribution<std::size_t> ord(2, 6);
  for (int t = 0; t < 30; ++t) {
    const std::size_t N = ord(rng());
    auto a = random_quantization_series(N), b = random_quantization_series(N);
    if (t % 3 == 1) b = b + CSeries::constant(Complex(1), N);
    if (t % 3 == 2) a = a + CSeries::constant(Complex(Rational(-1, 2)), N);
    auto d = family2d_construct(a, b);
    auto moved = transport(d, random_witness(N));
    auto nb = normalize_basis(moved);
    auto x = normalize_family(a, b), y = normalize_family(nb.a, nb.b);
    CHECK(x.kind == y.kind);
    CHECK(x.b == y.b);
    CHECK(family2d_equiv(x.a, x.b, y.a, y.b).verdict == Verdict::Equivalent);
    CHECK(family2d_parameters(d) == std::optional(std::pair{a, b}));
  }
  CHECK_FALSE(family2d_parameters(transport(family2d_construct(S("h@order=3"), S("h@order=3")),
                                            EquivalenceWitness::identity(2, 3)))
                  ->first.is_zero());
}

TEST_CASE("operad dimensions") {
  const std::uint64_t tpois[] = {1, 2, 6, 20, 74};
  for (long n = 1; n <= 5; ++n) {
    auto [nov, tp] = operad_dims(n);
    CHECK(nov == binomial(2 * n - 2, n - 1));
    CHECK(tp == tpois[n - 1]);
  }
  CHECK(operad_dims(5) == std::pair<std::uint64_t, std::uint64_t>{70, 74});
  CHECK(nov_operad_dim(10) == 48620);
  CHECK_THROWS_AS(operad_dims(0), OutOfRange);
  CHECK_THROWS_AS(operad_dims(6), OutOfRange);
}
