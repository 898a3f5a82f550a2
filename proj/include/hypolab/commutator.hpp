#pragma once

// Matrix elements of the self-commutator C = T*_phi T_phi - T_phi T*_phi on
// monomials of A^2(D).
//
// Orientation: <C x, y> = <T x, T y> - <T* x, T* y>, and the compression to
// span{z^d_0, ..., z^d_{N-1}} has entry (i, j) = <C z^d_j, z^d_i>, so that
// v* M v = <C f, f> for f = sum_j v_j z^d_j. The binomial closed form below is
// stated for the commutator T_{conj(z)^a} T_{z^b} - T_{z^b} T_{conj(z)^a},
// which for a = b is exactly C of the symbol z^a; the oracle tests fix this
// orientation against commutator_element.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "hypolab/bergman.hpp"
#include "hypolab/hermitian.hpp"
#include "hypolab/parallel.hpp"
#include "hypolab/psd.hpp"
#include "hypolab/symbols.hpp"

namespace hypolab {

/// C f as an analytic polynomial, computed term by term without truncation.
inline Polynomial apply_self_commutator(const HarmonicPolySymbol& s, const Polynomial& f) {
  const HarmonicPolySymbol adj = s.conjugate();
  return apply_toeplitz(adj, apply_toeplitz(s, f)) - apply_toeplitz(s, apply_toeplitz(adj, f));
}

/// <C z^src, z^dst> = <T z^src, T z^dst> - <T* z^src, T* z^dst>.
inline ExactComplex commutator_element(const HarmonicPolySymbol& s, Degree src, Degree dst) {
  const HarmonicPolySymbol adj = s.conjugate();
  const Polynomial x = Polynomial::monomial(src), y = Polynomial::monomial(dst);
  return inner(apply_toeplitz(s, x), apply_toeplitz(s, y)) - inner(apply_toeplitz(adj, x), apply_toeplitz(adj, y));
}

/// <[T_{conj(z)^a}, T_{z^b}] (z^k + c z^l), z^k + c z^l> for real c,
/// valid when k, l >= max(a, b) and k != l.
inline ExactComplex commutator_binomial_closed_form(Degree a, Degree b, Degree k, Degree l, const Rational& c) {
  const Degree top = std::max(a, b);
  if (k < top || l < top)
    throw Error(ErrorCode::Precondition, "binomial closed form requires k, l >= max(a, b)");
  if (k == l) throw Error(ErrorCode::Precondition, "binomial closed form requires k != l");

  const Integer A(a), K1(Integer(k) + 1), L1(Integer(l) + 1);
  Rational total;
  if (a == b) {
    total += Rational(A * A) * (ratio(Integer(1), K1 * K1 * (K1 + A)) + Rational(c * c) * ratio(Integer(1), L1 * L1 * (L1 + A)));
  }
  if (std::uint64_t{a} + k == std::uint64_t{b} + l) {
    const Integer num = Integer(k) - Integer(l) + A;
    total += Rational(A * c) * ratio(num, (A + K1) * K1 * L1);
  }
  if (std::uint64_t{a} + l == std::uint64_t{b} + k) {
    const Integer num = Integer(l) - Integer(k) + A;
    total += Rational(A * c) * ratio(num, (A + L1) * K1 * L1);
  }
  return ExactComplex(total);
}

/// The 3x3 matrix of <C f, f> for f = z^k + c z^l + d z^r, l = n+k-m, r = l+q-p.
struct QuadraticFormMatrix3 {
  ExactComplex a00, a10, a01, a20, a11, a02;
  Degree k = 0, l = 0, r = 0;

  HermitianExactMatrix to_matrix() const {
    return HermitianExactMatrix::from_rows({{a00, a10, a01}, {a10.conj(), a20, a11}, {a01.conj(), a11.conj(), a02}});
  }
};

namespace detail {

// <C z^x, z^x> for a four-term symbol, x >= max(n, q).
inline Rational four_term_diagonal(const FourTermSymbol& s, Degree x) {
  const Integer X1 = Integer(x) + 1;
  auto term = [&](const ExactComplex& c, Degree e) -> Rational {
    return Rational(c.norm_sq() * Integer(e) * Integer(e)) / Rational(X1 + e);
  };
  Rational inner = term(s.alpha, s.n) + term(s.beta, s.m) - term(s.gamma, s.p) - term(s.delta, s.q);
  return Rational(inner / Rational(X1 * X1));
}

// <C z^hi, z^lo> for a four-term symbol, hi > lo >= max(n, q).
inline ExactComplex four_term_off_diagonal(const FourTermSymbol& s, Degree lo, Degree hi) {
  const Integer Lo1 = Integer(lo) + 1;
  const Integer Hi1 = Integer(hi) + 1;
  // 1/(hi+e+1) - (lo-e+1)/((lo+1)(hi+1)), active when the shift condition holds.
  auto bracket = [&](Degree e) { return Rational(ratio(Integer(1), Hi1 + e) - ratio(Lo1 - e, Lo1 * Hi1)); };
  auto aligned = [](Degree x1, Degree y1, Degree x2, Degree y2) {
    return std::uint64_t{x1} + y1 == std::uint64_t{x2} + y2;
  };
  ExactComplex out;
  if (aligned(s.n, lo, s.m, hi)) out += s.alpha.conj() * s.beta * bracket(s.m);
  if (aligned(s.m, lo, s.n, hi)) out += s.alpha * s.beta.conj() * bracket(s.n);
  if (aligned(s.q, lo, s.p, hi)) out -= s.gamma.conj() * s.delta * bracket(s.p);
  if (aligned(s.p, lo, s.q, hi)) out -= s.gamma * s.delta.conj() * bracket(s.q);
  return out;
}

}  // namespace detail

/// Closed-form entries of the 3x3 quadratic-form matrix along the ladder
/// k < l = k + g < r = k + 2g. Requires a balanced symbol and k >= max(n, q),
/// which keeps every projection in the v >= u branch.
inline QuadraticFormMatrix3 quadratic_form_matrix(const FourTermSymbol& s, Degree k) {
  validate_balanced(s);
  if (k < std::max(s.n, s.q))
    throw Error(ErrorCode::Precondition,
                "quadratic_form_matrix requires k >= max(n, q) = " + std::to_string(std::max(s.n, s.q)));
  QuadraticFormMatrix3 out;
  out.k = k;
  out.l = s.n + k - s.m;
  out.r = out.l + s.q - s.p;
  out.a00 = ExactComplex(detail::four_term_diagonal(s, out.k));
  out.a20 = ExactComplex(detail::four_term_diagonal(s, out.l));
  out.a02 = ExactComplex(detail::four_term_diagonal(s, out.r));
  out.a10 = detail::four_term_off_diagonal(s, out.k, out.l);
  out.a01 = detail::four_term_off_diagonal(s, out.k, out.r);
  out.a11 = detail::four_term_off_diagonal(s, out.l, out.r);
  return out;
}

/// Compression of C to span{z^d : d in degrees}; entry (i, j) = <C z^d_j, z^d_i>.
inline HermitianExactMatrix compression_matrix(const HarmonicPolySymbol& s, const std::vector<Degree>& degrees,
                                               unsigned threads = 1) {
  if (degrees.empty()) throw Error(ErrorCode::Precondition, "degree list must be nonempty");
  for (std::size_t i = 1; i < degrees.size(); ++i)
    if (degrees[i] <= degrees[i - 1]) throw Error(ErrorCode::Precondition, "degree list must be strictly increasing");

  const std::size_t n = degrees.size();
  std::vector<std::vector<ExactComplex>> rows(n, std::vector<ExactComplex>(n));
  parallel_for(n, threads, [&](std::size_t j) {
    const Polynomial column = apply_self_commutator(s, Polynomial::monomial(degrees[j]));
    for (std::size_t i = 0; i < n; ++i) {
      const ExactComplex c = column.coeff(degrees[i]);
      if (!c.is_zero()) rows[i][j] = c * monomial_norm_sq(degrees[i]);
    }
  });
  return HermitianExactMatrix::from_rows(rows);
}

/// Outcome of an exact refutation search on the compression to {1, z, ..., z^D}.
struct ScanResult {
  bool refuted = false;
  Degree max_degree = 0;
  /// Nonzero witness coordinates (degree, coefficient) when refuted.
  std::vector<std::pair<Degree, ExactComplex>> witness;
  /// <C f, f> < 0 for the witness polynomial f.
  std::optional<Rational> value;

  std::vector<Degree> support() const {
    std::vector<Degree> out;
    for (const auto& [d, c] : witness) out.push_back(d);
    return out;
  }
};

/// REFUTED is a certificate that T_phi is not hyponormal; otherwise the scan
/// is inconclusive ("passes up to max_degree").
inline ScanResult hypo_scan(const HarmonicPolySymbol& s, Degree max_degree, unsigned threads = 1) {
  std::vector<Degree> degrees(max_degree + 1);
  for (Degree d = 0; d <= max_degree; ++d) degrees[d] = d;
  const PsdCertificate cert = psd_exact(compression_matrix(s, degrees, threads));
  ScanResult out;
  out.max_degree = max_degree;
  if (cert.is_psd()) return out;
  out.refuted = true;
  for (std::size_t i = 0; i < cert.witness->size(); ++i)
    if (!(*cert.witness)[i].is_zero()) out.witness.emplace_back(degrees[i], (*cert.witness)[i]);
  out.value = cert.witness_value->re();
  return out;
}

}  // namespace hypolab
