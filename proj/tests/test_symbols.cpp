#include <catch_amalgamated.hpp>

#include "oracles.hpp"

using namespace hypolab;

namespace {
ExactComplex c(long re, long im = 0) { return {Rational(re), Rational(im)}; }
}  // namespace

TEST_CASE("four-term symbols map to harmonic polynomials", "[symbols]") {
  const FourTermSymbol boundary{c(0), c(2), c(0), c(1), 2, 1, 1, 2};
  const HarmonicPolySymbol h = to_harmonic(boundary);
  CHECK(h.analytic() == HarmonicPolySymbol::Coefficients{{1, c(2)}});
  CHECK(h.coanalytic() == HarmonicPolySymbol::Coefficients{{2, c(1)}});

  CHECK(to_harmonic(FourTermSymbol{c(0), c(0), c(0), c(0), 2, 1, 1, 2}).empty());

  const FourTermSymbol full{c(1), c(1), c(1), c(1), 3, 1, 2, 4};
  const HarmonicPolySymbol hf = to_harmonic(full);
  CHECK(hf.analytic().size() == 2);
  CHECK(hf.coanalytic().size() == 2);
  CHECK(validate_balanced(full) == 2);
}

TEST_CASE("constants fold into the analytic part", "[symbols]") {
  const FourTermSymbol s{c(1), c(5), c(0), c(2), 1, 0, 0, 1};
  const HarmonicPolySymbol h = to_harmonic(s);
  CHECK(h.analytic().at(0) == c(5));
  CHECK(h.coanalytic().size() == 1);

  HarmonicPolySymbol g;
  g.add_analytic(0, c(1));
  g.add_coanalytic(0, c(2));
  CHECK(g.analytic().at(0) == c(3));
  CHECK(g.coanalytic().empty());
  g.add_analytic(0, c(-3));
  CHECK(g.empty());
}

TEST_CASE("balance and validity checks", "[symbols]") {
  CHECK(validate_balanced(FourTermSymbol{c(1), c(1), c(1), c(1), 2, 1, 1, 2}) == 1);
  CHECK(validate_balanced(FourTermSymbol{c(1), c(1), c(1), c(1), 5, 2, 1, 4}) == 3);
  try {
    validate_balanced(FourTermSymbol{c(1), c(1), c(1), c(1), 3, 1, 1, 2});
    FAIL("unbalanced symbol accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Unbalanced);
  }
  try {
    FourTermSymbol{c(1), c(1), c(1), c(1), 1, 1, 1, 2}.validate();
    FAIL("m >= n accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidSymbol);
  }
  CHECK_THROWS_AS((FourTermSymbol{c(1), c(1), c(1), c(1), 2, 1, 2, 2}.validate()), Error);
}

TEST_CASE("conjugate symbol swaps parts", "[symbols]") {
  HarmonicPolySymbol s;
  s.add_analytic(0, c(1, 1));
  s.add_analytic(2, c(3, -1));
  s.add_coanalytic(1, c(0, 2));
  const HarmonicPolySymbol t = s.conjugate();
  CHECK(t.analytic().at(0) == c(1, -1));
  CHECK(t.analytic().at(1) == c(0, -2));
  CHECK(t.coanalytic().at(2) == c(3, 1));
  CHECK(t.conjugate() == s);
  CHECK(s.max_degree() == 2);
}

TEST_CASE("Toeplitz action matches the integral oracle", "[symbols][oracle]") {
  oracle::Gen gen(31);
  for (int i = 0; i < 300; ++i) {
    const HarmonicPolySymbol s = gen.symbol(5, 4);
    Polynomial f;
    oracle::Poly of;
    for (int t = 0; t < 3; ++t) {
      const auto d = static_cast<Degree>(gen.integer(0, 9));
      const ExactComplex v = gen.complex();
      f.add(d, v);
      oracle::add(of, d, v);
    }
    const Polynomial got = apply_toeplitz(s, f);
    const oracle::Poly expect = oracle::toeplitz(oracle::from_library(s), of);
    REQUIRE(got.terms().size() == expect.size());
    for (const auto& [d, v] : expect) REQUIRE(got.coeff(d) == v);
  }
}
