#include <catch_amalgamated.hpp>

#include <Eigen/Dense>

#include "oracles.hpp"

using namespace hypolab;

namespace {

ExactComplex c(long re, long im = 0) { return {Rational(re), Rational(im)}; }

HermitianExactMatrix m2(ExactComplex a, ExactComplex b, ExactComplex d) {
  return HermitianExactMatrix::from_rows({{a, b}, {b.conj(), d}});
}

double eigen_min(const HermitianExactMatrix& m) {
  Eigen::MatrixXcd x(m.dim(), m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j) x(i, j) = m(i, j).to_complex();
  return Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd>(x, Eigen::EigenvaluesOnly).eigenvalues().minCoeff();
}

}  // namespace

TEST_CASE("rational parsing and canonical form", "[rational]") {
  CHECK(parse_rational("3/6") == ratio(1, 2));
  CHECK(parse_rational("-0.25") == ratio(-1, 4));
  CHECK(parse_rational(" 7 ") == 7);
  CHECK(parse_rational("4/-8") == ratio(-1, 2));
  CHECK(ratio(6, -4).get_den() == 2);
  CHECK(ratio(6, -4).get_num() == -3);
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("abc"), Error);
  CHECK_THROWS_AS(parse_rational(""), Error);
  CHECK_THROWS_AS(ratio(1, 0), std::domain_error);
  CHECK(exact_sqrt(ratio(9, 4)) == ratio(3, 2));
  CHECK_FALSE(exact_sqrt(2).has_value());
  CHECK_FALSE(exact_sqrt(-1).has_value());
}

TEST_CASE("rational strings survive a round trip", "[rational][property]") {
  oracle::Gen gen(11);
  for (int i = 0; i < 1000; ++i) {
    const Rational x = gen.rational(1000, 97);
    REQUIRE(parse_rational(to_string(x)) == x);
    REQUIRE(gcd(x.get_num(), x.get_den()) == 1);
    REQUIRE(x.get_den() > 0);
  }
}

TEST_CASE("complex rational arithmetic", "[complex]") {
  const ExactComplex z(ratio(1, 2), ratio(-3, 4));
  CHECK(z.conj().conj() == z);
  CHECK((z * z.conj()).is_real());
  CHECK((z * z.conj()).re() == z.norm_sq());
  CHECK(z.norm_sq() == ratio(13, 16));
  CHECK(ExactComplex::i() * ExactComplex::i() == c(-1));
  CHECK(to_string(c(1, 2)) == "1+2i");
  CHECK(to_string(c(0, -1)) == "0-1i");
  CHECK_THROWS(c(1) / ExactComplex());

  oracle::Gen gen(12);
  for (int i = 0; i < 500; ++i) {
    const ExactComplex a = gen.complex(), b = gen.complex();
    REQUIRE((a * b).conj() == a.conj() * b.conj());
    REQUIRE((a * b).norm_sq() == a.norm_sq() * b.norm_sq());
    if (!b.is_zero()) REQUIRE((a / b) * b == a);
  }
}

TEST_CASE("Hermitian matrix construction", "[hermitian]") {
  CHECK_THROWS_AS(HermitianExactMatrix(0), Error);
  try {
    HermitianExactMatrix::from_rows({{c(1), c(2)}, {c(3), c(1)}});
    FAIL("non-Hermitian input accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotHermitian);
  }
  CHECK_THROWS_AS(HermitianExactMatrix::from_rows({{c(1, 1)}}), Error);
  CHECK_THROWS_AS(HermitianExactMatrix::from_rows({{c(1), c(2)}}), Error);

  HermitianExactMatrix m(2);
  m.set(0, 1, c(2, 3));
  CHECK(m(1, 0) == c(2, -3));
  CHECK_THROWS_AS(m.set(0, 0, c(0, 1)), Error);

  const std::vector<ExactComplex> v{c(1), c(0, 1)};
  // v* M v = 2 Re(conj(v0) M01 v1) = 2 Re((2+3i) i) = -6
  CHECK(m.quadratic_form(v) == c(-6));
}

TEST_CASE("psd_exact on small examples", "[psd]") {
  const auto id = HermitianExactMatrix::from_rows({{c(1), c(0)}, {c(0), c(1)}});
  CHECK(psd_exact(id).is_psd());
  CHECK_FALSE(psd_exact(id).witness.has_value());

  const auto bad = m2(c(1), c(2), c(1));
  const PsdCertificate cert = psd_exact(bad);
  REQUIRE(cert.verdict == PsdVerdict::NotPsd);
  REQUIRE(cert.witness.has_value());
  CHECK(bad.quadratic_form(*cert.witness) == *cert.witness_value);
  CHECK(cert.witness_value->is_real());
  CHECK(sgn(cert.witness_value->re()) < 0);
  // Pivot on entry (0,0), then the Schur complement -3 yields x = (-2, 1).
  CHECK(*cert.witness == std::vector<ExactComplex>{c(-2), c(1)});
  CHECK(*cert.witness_value == c(-3));
  // The eigenvector direction (1, -1) is another valid certificate.
  CHECK(bad.quadratic_form(std::vector<ExactComplex>{c(1), c(-1)}) == c(-2));

  CHECK(psd_exact(m2(c(1), c(1), c(1))).is_psd());
  CHECK(psd_exact(m2(c(1), c(0, 1), c(1))).is_psd());
  CHECK_FALSE(psd_exact(m2(c(1), c(0, 2), c(1))).is_psd());
  CHECK(psd_exact(HermitianExactMatrix(3)).is_psd());

  const auto neg_diag = m2(c(1), c(0), c(-1));
  CHECK(*psd_exact(neg_diag).witness_value == c(-1));

  // Zero diagonal, nonzero coupling.
  const auto off = m2(c(0), c(1, 1), c(0));
  const PsdCertificate oc = psd_exact(off);
  REQUIRE_FALSE(oc.is_psd());
  CHECK(*oc.witness_value == c(-4));
  CHECK(off.quadratic_form(*oc.witness) == c(-4));
}

TEST_CASE("psd_float on small examples", "[psd]") {
  const auto id = m2(c(1), c(0), c(1));
  auto r = psd_float(id, 0.0);
  CHECK(r.verdict == PsdVerdict::Psd);
  CHECK(r.min_eigenvalue == Catch::Approx(1.0));

  r = psd_float(m2(c(1), c(2), c(1)), 1e-12);
  CHECK(r.verdict == PsdVerdict::NotPsd);
  CHECK(r.min_eigenvalue == Catch::Approx(-1.0));

  r = psd_float(HermitianExactMatrix(2), 0.0);
  CHECK(r.verdict == PsdVerdict::Psd);
  CHECK(r.min_eigenvalue == 0.0);

  CHECK_THROWS_AS(psd_float(id, -1.0), Error);
}

TEST_CASE("psd_exact agrees with a floating eigensolver away from zero", "[psd][property]") {
  oracle::Gen gen(13);
  int compared = 0;
  for (int i = 0; i < 400; ++i) {
    const HermitianExactMatrix m = gen.any_hermitian(8);
    const double lmin = eigen_min(m);
    const PsdCertificate cert = psd_exact(m);
    if (!cert.is_psd()) REQUIRE(m.quadratic_form(*cert.witness) == *cert.witness_value);
    if (std::abs(lmin) < 1e-6) continue;
    ++compared;
    REQUIRE(cert.is_psd() == (lmin > 0));
  }
  CHECK(compared > 200);
}

TEST_CASE("PSD verdict is invariant under positive diagonal congruence", "[psd][property]") {
  oracle::Gen gen(14);
  for (int i = 0; i < 300; ++i) {
    const HermitianExactMatrix m = gen.any_hermitian(7);
    std::vector<Rational> d(m.dim());
    for (auto& x : d) x = ratio(gen.integer(1, 30), gen.integer(1, 30));
    REQUIRE(psd_exact(m).verdict == psd_exact(m.congruence(d)).verdict);
  }
}

TEST_CASE("PSD certificates have positive pivots and no witness", "[psd][property]") {
  oracle::Gen gen(15);
  for (int i = 0; i < 300; ++i) {
    const auto dim = static_cast<std::size_t>(gen.integer(1, 7));
    const PsdCertificate cert = psd_exact(gen.gram(dim, static_cast<std::size_t>(gen.integer(1, static_cast<long>(dim)))));
    REQUIRE(cert.is_psd());
    REQUIRE_FALSE(cert.witness.has_value());
    for (const auto& p : cert.pivot_values) REQUIRE(sgn(p) > 0);
  }
}
