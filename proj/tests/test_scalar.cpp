#include <doctest.h>

#include "support.hpp"

using namespace novdef;
using novdef::test::random_rational;
using novdef::test::rng;
using novdef::test::series;

TEST_CASE("rationals are kept in lowest terms") {
  CHECK(Rational(6, 4) == Rational(3, 2));
  CHECK(Rational(3, -6).to_string() == "-1/2");
  CHECK(Rational(0, 5).to_string() == "0");
  CHECK(Rational::parse("-12/8") == Rational(-3, 2));
  CHECK(Rational(2, 3).inverse() == Rational(3, 2));
  CHECK_THROWS_AS(Rational(0).inverse(), NotInvertible);
  CHECK_THROWS_AS(Rational(1, 0), NotInvertible);
  CHECK(Rational(1, 3) < Rational(1, 2));
}

TEST_CASE("gaussian rationals") {
  Complex z(Rational(1, 2), Rational(-1, 3));
  CHECK(z.to_string() == "1/2-1/3i");
  CHECK(Complex::parse("1/2-1/3i") == z);
  CHECK(Complex::parse("i") == Complex::i());
  CHECK(Complex::parse("-2i") == Complex(Rational(0), Rational(-2)));
  CHECK(Complex::i() * Complex::i() == Complex(-1));
  // (1+i)^{-1} = (1-i)/2
  CHECK(Complex(1, 1).inverse() == Complex(Rational(1, 2), Rational(-1, 2)));
  CHECK(z * z.inverse() == Complex(1));
  CHECK_THROWS_AS(Complex(0).inverse(), NotInvertible);
}

TEST_CASE("polynomial parsing and printing") {
  Poly p = parse_poly("3*a*b^2 - 1/2");
  CHECK(p.to_string() == "3*a*b^2-1/2");
  CHECK(parse_poly("2h") == Poly(2) * Poly::var("h"));
  CHECK(parse_poly("(a+1)^2") == parse_poly("a^2+2a+1"));
  CHECK(parse_poly("3a(b+1)") == parse_poly("3*a*b+3*a"));
  CHECK(parse_poly("a - a").is_zero());
  CHECK(parse_poly("(1+i)*x").to_string() == "(1+i)*x");
  CHECK_THROWS_AS(parse_poly("a/b"), BadScalar);
  CHECK_THROWS_AS(parse_poly("a+"), BadScalar);
  CHECK_THROWS_AS(parse_poly("1/0"), BadScalar);
  CHECK(has_real_coefficients(parse_poly("a/2+3")));
  CHECK_FALSE(has_real_coefficients(parse_poly("i*a")));
}

TEST_CASE("substitute_params") {
  auto v = [](std::initializer_list<std::pair<const std::string, Complex>> m) {
    return std::map<std::string, Complex>(m);
  };
  CHECK(parse_poly("a+2b").evaluate(v({{"a", 1}, {"b", 3}})) == Complex(7));
  CHECK(parse_poly("a*b").evaluate(v({{"a", 0}, {"b", 5}})) == Complex(0));
  CHECK(parse_poly("λ^2").evaluate(v({{"λ", Complex(Rational(1, 2))}})) == Complex(Rational(1, 4)));
  try {
    parse_poly("a+b*c").evaluate(v({{"a", 1}}));
    FAIL("expected MissingSymbol");
  } catch (const MissingSymbol& e) {
    std::string what = e.what();
    CHECK(what.find('b') != std::string::npos);
    CHECK(what.find('c') != std::string::npos);
  }
  CHECK(parse_poly("a+b").substitute(v({{"a", 2}})) == parse_poly("b+2"));
}

TEST_CASE("series_invert examples") {
  CHECK(series({1}, 4).inverse() == series({1}, 4));
  auto t = series({1, 1}, 4).inverse();
  CHECK(t == series({1, -1, 1, -1}, 4));
  CHECK(t * series({1, 1}, 4) == series({1}, 4));
  auto u = series({2, 1}, 3).inverse();
  CHECK(u.coeff(0) == Complex(Rational(1, 2)));
  CHECK(u.coeff(1) == Complex(Rational(-1, 4)));
  CHECK(u.coeff(2) == Complex(Rational(1, 8)));
  CHECK(u * series({2, 1}, 3) == series({1}, 3));
  CHECK_THROWS_AS(series({0, 1}, 3).inverse(), NotInvertible);
  Series<Poly> ps(std::vector<Poly>{Poly::var("a"), Poly(1)}, 3);
  CHECK_THROWS_AS(ps.inverse(), NotInvertible);
}

TEST_CASE("h_valuation examples") {
  CHECK(novdef::test::S("3h^2+5h^3@order=6").valuation() == std::optional<std::size_t>(2));
  CHECK_FALSE(series({0}, 4).valuation().has_value());
  CHECK(novdef::test::S("h@order=2").valuation() == std::optional<std::size_t>(1));
}

TEST_CASE("series strings") {
  auto s = novdef::test::S("1+2h-h^3@order=5");
  CHECK(s == series({1, 2, 0, -1, 0}, 5));
  CHECK(s.to_string() == "1+2h-h^3@order=5");
  CHECK(novdef::test::S("h^7@order=3").is_zero());
  CHECK(novdef::test::S("-(1+h)/2@order=4").to_string() == "-1/2-1/2*h@order=4");
  CHECK(parse_series<Complex>("1/2").is_exact_constant());
  CHECK_THROWS_AS(parse_series<Complex>("1+h"), BadScalar);
  CHECK_THROWS_AS(parse_series<Complex>("1+h@order=x"), BadScalar);
  CHECK_THROWS_AS(series({1}, 3) + series({1}, 4), OrderMismatch);
}

TEST_CASE("casts between rings") {
  CHECK(scalar_cast<Rational>(Poly(3)) == Rational(3));
  CHECK_THROWS_AS(scalar_cast<Rational>(Poly::var("a")), BadScalar);
  CHECK_THROWS_AS(scalar_cast<Rational>(Poly(Complex::i())), BadScalar);
  CHECK(scalar_cast<Complex>(Poly(Complex::i())) == Complex::i());
}

template <class R, class Gen>
void ring_axioms(Gen gen, int trials) {
  for (int t = 0; t < trials; ++t) {
    R x = gen(), y = gen(), z = gen();
    CHECK((x + y) + z == x + (y + z));
    CHECK(x + y == y + x);
    CHECK(x * (y + z) == x * y + x * z);
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * y == y * x);
    CHECK(x - x == R(0));
    CHECK(x * R(1) == x);
  }
}

TEST_CASE("ring axioms on random inputs") {
  ring_axioms<Rational>([] { return random_rational(); }, 50);
  ring_axioms<Complex>([] { return novdef::test::random_complex(); }, 50);
  ring_axioms<Poly>(
      [] {
        std::uniform_int_distribution<int> e(0, 2);
        Poly p;
        for (int k = 0; k < 3; ++k) {
          Poly m{Complex(random_rational())};
          for (const char* v : {"a", "b"})
            for (int d = e(rng()); d > 0; --d) m *= Poly::var(v);
          p += m;
        }
        return p;
      },
      30);
  ring_axioms<CSeries>([] { return novdef::test::random_series(5); }, 30);
}

TEST_CASE("series_invert(s) * s = 1 on random series") {
  std::uniform_int_distribution<std::size_t> ord(1, 8);
  for (int t = 0; t < 100; ++t) {
    auto s = novdef::test::random_series(ord(rng()));
    if (s.coeff(0).is_zero()) s += CSeries::constant(Complex(1), s.order());
    CHECK(s.inverse() * s == CSeries::constant(Complex(1), s.order()));
  }
}

TEST_CASE("valuation is additive below the order") {
  for (int t = 0; t < 100; ++t) {
    const std::size_t N = 8;
    std::uniform_int_distribution<std::size_t> sh(0, 4);
    auto s = novdef::test::random_series(N).shift_up(sh(rng()), N);
    auto u = novdef::test::random_series(N).shift_up(sh(rng()), N);
    auto vs = s.valuation(), vu = u.valuation();
    if (!vs || !vu || *vs + *vu >= N) continue;
    CHECK((s * u).valuation() == std::optional<std::size_t>(*vs + *vu));
  }
}
