#pragma once

#include <algorithm>
#include <map>
#include <string>

#include "hypolab/bergman.hpp"
#include "hypolab/complex.hpp"
#include "hypolab/error.hpp"

namespace hypolab {

/// Harmonic polynomial symbol f + conj(g): analytic coefficients of z^j
/// (j >= 0) and co-analytic coefficients of conj(z)^j (j >= 1). Constants
/// always live in the analytic part; zero coefficients are never stored.
class HarmonicPolySymbol {
 public:
  using Coefficients = std::map<Degree, ExactComplex>;

  HarmonicPolySymbol() = default;

  HarmonicPolySymbol& add_analytic(Degree j, const ExactComplex& c) {
    accumulate(analytic_, j, c);
    return *this;
  }

  /// Adds c conj(z)^j. A degree-0 term is a constant and goes to the analytic part.
  HarmonicPolySymbol& add_coanalytic(Degree j, const ExactComplex& c) {
    if (j == 0) return add_analytic(0, c);
    accumulate(coanalytic_, j, c);
    return *this;
  }

  const Coefficients& analytic() const { return analytic_; }
  const Coefficients& coanalytic() const { return coanalytic_; }

  bool empty() const { return analytic_.empty() && coanalytic_.empty(); }

  /// Symbol of conj(phi); T_{conj(phi)} is the adjoint of T_phi.
  HarmonicPolySymbol conjugate() const {
    HarmonicPolySymbol out;
    for (const auto& [j, c] : analytic_) out.add_coanalytic(j, c.conj());
    for (const auto& [j, c] : coanalytic_) out.add_analytic(j, c.conj());
    return out;
  }

  /// Largest exponent appearing in either part (0 for an empty symbol).
  Degree max_degree() const {
    Degree d = 0;
    if (!analytic_.empty()) d = std::max(d, analytic_.rbegin()->first);
    if (!coanalytic_.empty()) d = std::max(d, coanalytic_.rbegin()->first);
    return d;
  }

  friend bool operator==(const HarmonicPolySymbol&, const HarmonicPolySymbol&) = default;

 private:
  static void accumulate(Coefficients& part, Degree j, const ExactComplex& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = part.try_emplace(j, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) part.erase(it);
    }
  }

  Coefficients analytic_;
  Coefficients coanalytic_;
};

/// T_phi applied to an analytic polynomial: analytic terms shift degrees,
/// co-analytic terms go through the Bergman projection.
inline Polynomial apply_toeplitz(const HarmonicPolySymbol& s, const Polynomial& f) {
  Polynomial out;
  for (const auto& [j, fj] : f.terms()) {
    for (const auto& [e, c] : s.analytic()) out.add(j + e, c * fj);
    for (const auto& [e, c] : s.coanalytic()) {
      const MonomialTerm t = project(e, j);
      if (!t.is_zero()) out.add(t.degree, c * fj * t.coeff);
    }
  }
  return out;
}

/// phi = alpha z^n + beta z^m + gamma conj(z)^p + delta conj(z)^q with m < n, p < q.
struct FourTermSymbol {
  ExactComplex alpha, beta, gamma, delta;
  Degree n = 1, m = 0, p = 0, q = 1;

  void validate() const {
    if (!(m < n)) throw Error(ErrorCode::InvalidSymbol, "four-term symbol requires m < n");
    if (!(p < q)) throw Error(ErrorCode::InvalidSymbol, "four-term symbol requires p < q");
  }

  bool is_balanced() const { return n - m == q - p; }

  bool all_zero() const { return alpha.is_zero() && beta.is_zero() && gamma.is_zero() && delta.is_zero(); }

  friend bool operator==(const FourTermSymbol&, const FourTermSymbol&) = default;
};

inline HarmonicPolySymbol to_harmonic(const FourTermSymbol& s) {
  s.validate();
  HarmonicPolySymbol h;
  h.add_analytic(s.n, s.alpha);
  h.add_analytic(s.m, s.beta);
  h.add_coanalytic(s.p, s.gamma);
  h.add_coanalytic(s.q, s.delta);
  return h;
}

/// g = n - m, provided n - m = q - p.
inline Degree validate_balanced(const FourTermSymbol& s) {
  s.validate();
  if (!s.is_balanced())
    throw Error(ErrorCode::Unbalanced, "n - m = " + std::to_string(s.n - s.m) + " differs from q - p = " +
                                           std::to_string(s.q - s.p));
  return s.n - s.m;
}

}  // namespace hypolab
