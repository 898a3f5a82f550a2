#pragma once

// Positive-semidefiniteness of Hermitian matrices.
//
// psd_exact runs an LDL* factorisation with symmetric pivoting over exact
// rationals. At every step the current Schur complement S (indexed by the
// not-yet-pivoted set R) is inspected in index order:
//
//   1. a diagonal entry S_jj < 0 stops with witness direction e_j;
//   2. otherwise the first S_pp > 0 becomes the pivot and S is updated;
//   3. if every remaining diagonal entry is zero but some S_ij != 0, the
//      direction e_i - conj(S_ij) e_j gives -2|S_ij|^2 < 0;
//   4. if S vanishes identically the matrix is PSD.
//
// A direction y on R is lifted to a full witness x by back-substituting
// through the accumulated unit-lower factor L, so that L* x = (0, y) and
// x* M x = y* S y.
//
// Bit growth: entries of the k-th Schur complement are ratios of
// (k+1)x(k+1) minors of M, so for integer entries bounded by B their size is
// O(k (log B + log k)) bits. A dense n x n factorisation therefore costs
// O(n^3) rational operations on O(n log(nB))-bit numbers. Banded inputs (all
// commutator compressions of polynomial symbols) keep their band and the
// update loop skips zero multipliers.

#include <Eigen/Eigenvalues>

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "hypolab/hermitian.hpp"

namespace hypolab {

enum class PsdVerdict { Psd, NotPsd };

constexpr const char* verdict_name(PsdVerdict v) { return v == PsdVerdict::Psd ? "PSD" : "NOT_PSD"; }

struct PsdCertificate {
  PsdVerdict verdict = PsdVerdict::Psd;
  /// Present iff verdict == NotPsd; witness_value = witness* M witness < 0.
  std::optional<std::vector<ExactComplex>> witness;
  std::optional<ExactComplex> witness_value;
  /// LDL* data: pivot indices in elimination order and the matching D entries.
  /// For NotPsd this is the partial factorisation up to the failing step.
  std::vector<std::size_t> pivot_order;
  std::vector<Rational> pivot_values;

  bool is_psd() const { return verdict == PsdVerdict::Psd; }
};

inline PsdCertificate psd_exact(const HermitianExactMatrix& m) {
  const std::size_t n = m.dim();
  std::vector<ExactComplex> work(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) work[i * n + j] = m(i, j);
  auto at = [&](std::size_t i, std::size_t j) -> ExactComplex& { return work[i * n + j]; };

  std::vector<std::size_t> remaining(n);
  for (std::size_t i = 0; i < n; ++i) remaining[i] = i;

  // Column t of L: multipliers for rows still remaining after pivot t.
  struct Column {
    std::size_t pivot;
    std::vector<std::pair<std::size_t, ExactComplex>> entries;
  };
  std::vector<Column> factor;

  PsdCertificate cert;
  std::optional<std::vector<ExactComplex>> direction;  // witness restricted to R, full length
  ExactComplex expected;

  while (!remaining.empty()) {
    std::optional<std::size_t> negative;
    std::optional<std::size_t> positive;
    for (std::size_t idx : remaining) {
      const int s = sgn(at(idx, idx).re());
      if (s < 0) {
        negative = idx;
        break;
      }
      if (s > 0 && !positive) positive = idx;
    }

    if (negative) {
      direction = std::vector<ExactComplex>(n);
      (*direction)[*negative] = Rational(1);
      expected = at(*negative, *negative);
      break;
    }

    if (!positive) {
      // Zero diagonal on R: any nonzero off-diagonal entry refutes.
      for (std::size_t a = 0; a < remaining.size() && !direction; ++a) {
        for (std::size_t b = a + 1; b < remaining.size(); ++b) {
          const ExactComplex& s = at(remaining[a], remaining[b]);
          if (s.is_zero()) continue;
          direction = std::vector<ExactComplex>(n);
          (*direction)[remaining[a]] = Rational(1);
          (*direction)[remaining[b]] = -s.conj();
          expected = ExactComplex(Rational(-2 * s.norm_sq()));
          break;
        }
      }
      break;
    }

    const std::size_t p = *positive;
    const Rational d = at(p, p).re();
    cert.pivot_order.push_back(p);
    cert.pivot_values.push_back(d);
    std::erase(remaining, p);

    Column col{p, {}};
    for (std::size_t i : remaining) {
      const ExactComplex& sip = at(i, p);
      if (sip.is_zero()) continue;
      col.entries.emplace_back(i, sip / d);
    }
    // S_ij -= S_ip S_pj / S_pp over the remaining block.
    for (const auto& [i, li] : col.entries) {
      for (std::size_t j : remaining) {
        const ExactComplex& spj = at(p, j);
        if (spj.is_zero()) continue;
        at(i, j) -= li * spj;
      }
    }
    factor.push_back(std::move(col));
  }

  if (!direction) {
    cert.verdict = PsdVerdict::Psd;
    return cert;
  }

  // Back-substitution: x_{p_t} = -sum_i conj(L_{i,t}) x_i, last pivot first.
  std::vector<ExactComplex> x = std::move(*direction);
  for (auto it = factor.rbegin(); it != factor.rend(); ++it) {
    ExactComplex acc;
    for (const auto& [i, li] : it->entries) {
      if (x[i].is_zero()) continue;
      acc += li.conj() * x[i];
    }
    x[it->pivot] = -acc;
  }

  ExactComplex value = m.quadratic_form(x);
  if (!(value == expected) || !value.is_real() || sgn(value.re()) >= 0)
    throw std::logic_error("psd_exact: witness replay disagrees with Schur complement value");

  cert.verdict = PsdVerdict::NotPsd;
  cert.witness = std::move(x);
  cert.witness_value = std::move(value);
  return cert;
}

struct FloatPsdResult {
  PsdVerdict verdict = PsdVerdict::Psd;
  double min_eigenvalue = 0.0;
};

/// Floating-point cross-check; advisory only.
inline FloatPsdResult psd_float(const HermitianExactMatrix& m, double tol) {
  if (tol < 0) throw Error(ErrorCode::Precondition, "tolerance must be nonnegative");
  const auto n = static_cast<Eigen::Index>(m.dim());
  Eigen::MatrixXcd a(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      a(i, j) = m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)).to_complex();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(a, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw Error(ErrorCode::EigenFailure, "self-adjoint eigensolver did not converge");
  const double lmin = solver.eigenvalues().minCoeff();
  return {lmin >= -tol ? PsdVerdict::Psd : PsdVerdict::NotPsd, lmin};
}

}  // namespace hypolab
