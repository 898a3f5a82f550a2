#pragma once

// Large-k behaviour of the self-commutator along the degree ladder
// k, k+g, k+2g, ... for a balanced four-term symbol. Scaled by k^3, the
// compressions converge to the tridiagonal Toeplitz matrix with constant
// diagonal a and super-diagonal rho; its spectrum on l^2(Z_+) is
// [a - 2|rho|, a + 2|rho|], and the N x N section has eigenvalues
// a + 2|rho| cos(j pi / (N+1)), j = 1..N.

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "hypolab/commutator.hpp"
#include "hypolab/hermitian.hpp"
#include "hypolab/symbols.hpp"

namespace hypolab {

struct TridiagonalModel {
  Rational a;
  ExactComplex rho;
};

/// |alpha|^2 n^2 + |beta|^2 m^2 - |gamma|^2 p^2 - |delta|^2 q^2.
inline Rational limit_a(const FourTermSymbol& s) {
  s.validate();
  auto sq = [](Degree e) { return Rational(Integer(e) * Integer(e)); };
  return Rational(s.alpha.norm_sq() * sq(s.n) + s.beta.norm_sq() * sq(s.m) - s.gamma.norm_sq() * sq(s.p) -
                  s.delta.norm_sq() * sq(s.q));
}

/// conj(alpha) beta m n - conj(gamma) delta p q.
inline ExactComplex limit_rho(const FourTermSymbol& s) {
  validate_balanced(s);
  const Rational mn(Integer(s.m) * Integer(s.n));
  const Rational pq(Integer(s.p) * Integer(s.q));
  return s.alpha.conj() * s.beta * mn - s.gamma.conj() * s.delta * pq;
}

inline TridiagonalModel tridiagonal_model(const FourTermSymbol& s) { return {limit_a(s), limit_rho(s)}; }

/// [a - 2|rho|, a + 2|rho|] with |rho| kept as the square root of |rho|^2.
struct SpectrumInterval {
  Rational a;
  Rational abs_rho_sq;
  std::optional<Rational> abs_rho_exact;  ///< set when |rho|^2 is a rational square
  double abs_rho = 0.0;
  double lower = 0.0;
  double upper = 0.0;
  /// a - 2|rho| >= 0, decided exactly via a >= 0 and a^2 >= 4|rho|^2.
  bool lower_nonnegative = false;

  std::string abs_rho_text() const {
    return abs_rho_exact ? abs_rho_exact->get_str() : "sqrt(" + abs_rho_sq.get_str() + ")";
  }
  std::string lower_text() const { return endpoint_text(-1); }
  std::string upper_text() const { return endpoint_text(+1); }

 private:
  std::string endpoint_text(int sign) const {
    if (abs_rho_exact) return Rational(a + sign * 2 * *abs_rho_exact).get_str();
    return a.get_str() + (sign < 0 ? "-2*" : "+2*") + abs_rho_text();
  }
};

inline SpectrumInterval spectrum_interval(const TridiagonalModel& t) {
  SpectrumInterval out;
  out.a = t.a;
  out.abs_rho_sq = t.rho.norm_sq();
  out.abs_rho_exact = exact_sqrt(out.abs_rho_sq);
  out.abs_rho = out.abs_rho_exact ? out.abs_rho_exact->get_d() : std::sqrt(out.abs_rho_sq.get_d());
  out.lower = t.a.get_d() - 2 * out.abs_rho;
  out.upper = t.a.get_d() + 2 * out.abs_rho;
  out.lower_nonnegative = sgn(t.a) >= 0 && Rational(t.a * t.a) >= Rational(4 * out.abs_rho_sq);
  return out;
}

/// Eigenvalues of the N x N section, ascending.
inline std::vector<double> finite_section_eigenvalues(const TridiagonalModel& t, unsigned N) {
  if (N == 0) throw Error(ErrorCode::Precondition, "section size N must be positive");
  const double a = t.a.get_d();
  const double r = std::sqrt(t.rho.norm_sq().get_d());
  std::vector<double> out(N);
  for (unsigned j = 1; j <= N; ++j) out[N - j] = a + 2 * r * std::cos(j * std::numbers::pi / (N + 1));
  return out;
}

inline double finite_section_min_eig(const TridiagonalModel& t, unsigned N) {
  return finite_section_eigenvalues(t, N).front();
}

/// The exact N x N section: a on the diagonal, rho above, conj(rho) below.
inline HermitianExactMatrix finite_section_matrix(const TridiagonalModel& t, unsigned N) {
  if (N == 0) throw Error(ErrorCode::Precondition, "section size N must be positive");
  HermitianExactMatrix m(N);
  for (unsigned i = 0; i < N; ++i) {
    m.set(i, i, ExactComplex(t.a));
    if (i + 1 < N) m.set(i, i + 1, t.rho);
  }
  return m;
}

/// Smallest N whose section has a negative eigenvalue, or nullopt when
/// a >= 2|rho| (every section is PSD). Bounded by ceil(pi / arccos(a / 2|rho|)).
inline std::optional<unsigned> negative_section_size(const TridiagonalModel& t) {
  const SpectrumInterval iv = spectrum_interval(t);
  if (iv.lower_nonnegative) return std::nullopt;
  if (sgn(t.a) < 0) return 1u;
  // 0 <= a < 2|rho|: need cos(pi/(N+1)) > a/(2|rho|), i.e. N+1 > pi/theta.
  // The floating ratio is clamped below 1; the exact test above already excludes a >= 2|rho|.
  const double ratio_ = std::min(t.a.get_d() / (2 * iv.abs_rho), std::nextafter(1.0, 0.0));
  const double bound = std::min(std::numbers::pi / std::acos(ratio_), 4.0e9);
  auto n = static_cast<unsigned>(std::max(1.0, std::floor(bound)));
  // Rounding can put the floating minimum on the wrong side of zero by one step.
  if (n > 1 && finite_section_min_eig(t, n - 1) < 0) --n;
  else if (finite_section_min_eig(t, n) >= 0 && n < 4000000000u) ++n;
  return n;
}

/// k^3-scaled entries of the quadratic-form matrix at one ladder position.
struct ConvergenceRow {
  Degree k = 0;
  Rational s00, s20, s02;
  ExactComplex s10, s01, s11;
  double dev00 = 0, dev10 = 0, dev11 = 0, dev20 = 0, dev02 = 0;
};

inline std::vector<ConvergenceRow> convergence_report(const FourTermSymbol& s, const std::vector<Degree>& k_list) {
  const TridiagonalModel t = tridiagonal_model(s);
  std::vector<ConvergenceRow> rows;
  rows.reserve(k_list.size());
  for (Degree k : k_list) {
    const QuadraticFormMatrix3 qf = quadratic_form_matrix(s, k);
    const Rational k3(Integer(k) * Integer(k) * Integer(k));
    ConvergenceRow row;
    row.k = k;
    row.s00 = Rational(qf.a00.re() * k3);
    row.s20 = Rational(qf.a20.re() * k3);
    row.s02 = Rational(qf.a02.re() * k3);
    row.s10 = qf.a10 * k3;
    row.s01 = qf.a01 * k3;
    row.s11 = qf.a11 * k3;
    // Differences are formed exactly and only then rounded.
    auto real_dev = [&](const Rational& v) { return Rational(abs(v - t.a)).get_d(); };
    auto complex_dev = [&](const ExactComplex& v) { return std::sqrt((v - t.rho).norm_sq().get_d()); };
    row.dev00 = real_dev(row.s00);
    row.dev20 = real_dev(row.s20);
    row.dev02 = real_dev(row.s02);
    row.dev10 = complex_dev(row.s10);
    row.dev11 = complex_dev(row.s11);
    rows.push_back(std::move(row));
  }
  return rows;
}

inline std::string convergence_csv(const std::vector<ConvergenceRow>& rows) {
  std::ostringstream os;
  os << "k,k3A00,k3A10_re,k3A10_im,k3A01_re,k3A01_im,k3A11_re,k3A11_im,k3A20,k3A02,"
        "dev00,dev10,dev11,dev20,dev02\n";
  os.precision(17);
  for (const auto& r : rows) {
    os << r.k << ',' << r.s00.get_str() << ',' << r.s10.re().get_str() << ',' << r.s10.im().get_str() << ','
       << r.s01.re().get_str() << ',' << r.s01.im().get_str() << ',' << r.s11.re().get_str() << ','
       << r.s11.im().get_str() << ',' << r.s20.get_str() << ',' << r.s02.get_str() << ',' << r.dev00 << ','
       << r.dev10 << ',' << r.dev11 << ',' << r.dev20 << ',' << r.dev02 << '\n';
  }
  return os.str();
}

}  // namespace hypolab
