#pragma once

// Verdict-producing tests for four-term Bergman symbols and trigonometric
// Hardy symbols. Every decision compares rationals exactly (squared moduli
// instead of moduli); floating fields are for display only.

#include <cmath>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hypolab/asymptotics.hpp"
#include "hypolab/symbols.hpp"

namespace hypolab {

/// lhs >= sqrt(rhs_squared), decided as lhs >= 0 and lhs^2 >= rhs_squared.
struct InequalityReport {
  Rational lhs;
  Rational rhs_squared;
  bool holds = false;
  double margin = 0.0;  ///< lhs - sqrt(rhs_squared), display only
  std::string explanation;
};

namespace detail {

inline InequalityReport decide(Rational lhs, Rational rhs_squared, std::string rule) {
  InequalityReport r;
  r.holds = sgn(lhs) >= 0 && Rational(lhs * lhs) >= rhs_squared;
  r.margin = lhs.get_d() - std::sqrt(rhs_squared.get_d());
  r.lhs = std::move(lhs);
  r.rhs_squared = std::move(rhs_squared);
  r.explanation = std::move(rule) + (r.holds ? ": holds" : ": violated");
  return r;
}

inline Rational square(Degree e) { return Rational(Integer(e) * Integer(e)); }

}  // namespace detail

/// |alpha|^2 n^2 + |beta|^2 m^2 - |gamma|^2 p^2 - |delta|^2 q^2
///   >= 2 |conj(alpha) beta m n - conj(gamma) delta p q|.
/// Necessary for hyponormality; a violation certifies T_phi is not hyponormal.
inline InequalityReport main_inequality(const FourTermSymbol& s) {
  const TridiagonalModel t = tridiagonal_model(s);
  return detail::decide(t.a, Rational(4 * t.rho.norm_sq()),
                        "a >= 2|rho| with a = " + t.a.get_str() + ", |rho|^2 = " + t.rho.norm_sq().get_str());
}

inline void require_specific_shape(const FourTermSymbol& s) {
  s.validate();
  if (s.p != s.m || s.q != s.n)
    throw Error(ErrorCode::ShapeMismatch, "specific case requires p = m and q = n");
}

/// n^2 (|alpha|^2 - |delta|^2) + m^2 (|beta|^2 - |gamma|^2) >= 2 m n |conj(alpha) beta - conj(gamma) delta|,
/// the p = m, q = n form of the main inequality.
inline InequalityReport specific_case_inequality(const FourTermSymbol& s) {
  require_specific_shape(s);
  const Rational n2 = detail::square(s.n), m2 = detail::square(s.m);
  Rational lhs = n2 * (s.alpha.norm_sq() - s.delta.norm_sq()) + m2 * (s.beta.norm_sq() - s.gamma.norm_sq());
  const ExactComplex cross = s.alpha.conj() * s.beta - s.gamma.conj() * s.delta;
  Rational rhs_sq = 4 * n2 * m2 * cross.norm_sq();
  return detail::decide(std::move(lhs), std::move(rhs_sq), "specific case (p = m, q = n) with factor 2");
}

struct LuShiComparison {
  InequalityReport sharpened;  ///< with the factor 2
  InequalityReport lu_shi;     ///< n^2(|a|^2-|d|^2) + m^2(|b|^2-|g|^2) >= mn|conj(a)b - conj(g)d|
  /// The Lu-Shi bound holds but the sharpened one fails.
  bool strictly_sharper = false;
};

inline LuShiComparison lu_shi_comparison(const FourTermSymbol& s) {
  require_specific_shape(s);
  LuShiComparison out;
  out.sharpened = specific_case_inequality(s);
  const Rational n2 = detail::square(s.n), m2 = detail::square(s.m);
  const ExactComplex cross = s.alpha.conj() * s.beta - s.gamma.conj() * s.delta;
  out.lu_shi = detail::decide(out.sharpened.lhs, Rational(n2 * m2 * cross.norm_sq()), "Lu-Shi bound without factor 2");
  out.strictly_sharper = out.lu_shi.holds && !out.sharpened.holds;
  return out;
}

/// The family conj(z)^2 + alpha z: diagonal of C at z^k gives |alpha|^2 >= bound(k).
struct ThresholdReport {
  std::vector<std::pair<Degree, Rational>> bounds;
  Rational supremum;       ///< sup_k bound(k) = 4
  Rational threshold_abs;  ///< hyponormal iff |alpha| >= 2
  std::optional<Rational> alpha_abs_sq;
  std::optional<bool> hyponormal;  ///< iff |alpha|^2 >= supremum, when alpha given
};

/// bound(0) = 2/3, bound(1) = 3, bound(k) = 4(k+2)/(k+3) for k >= 2.
inline Rational revealing_bound(Degree k) {
  if (k == 0) return ratio(2, 3);
  if (k == 1) return Rational(3);
  return ratio(4 * (Integer(k) + 2), Integer(k) + 3);
}

inline ThresholdReport revealing_threshold(Degree k_max, std::optional<ExactComplex> alpha = std::nullopt,
                                           int q_exp = 2) {
  if (q_exp != 2) throw Error(ErrorCode::Unsupported, "only the conj(z)^2 + alpha z family is supported");
  ThresholdReport out;
  for (Degree k = 0; k <= k_max; ++k) out.bounds.emplace_back(k, revealing_bound(k));
  // bound(k) increases to 4 for k >= 2 and the first two values are below 4.
  out.supremum = 4;
  out.threshold_abs = 2;
  if (alpha) {
    out.alpha_abs_sq = alpha->norm_sq();
    out.hyponormal = *out.alpha_abs_sq >= out.supremum;
  }
  return out;
}

enum class NormalType { TypeI, TypeII, TypeIII };

constexpr const char* normal_type_name(NormalType t) {
  switch (t) {
    case NormalType::TypeI: return "TYPE_I";
    case NormalType::TypeII: return "TYPE_II";
    case NormalType::TypeIII: return "TYPE_III";
  }
  return "?";
}

struct NormalityVerdict {
  bool normal = false;
  std::optional<NormalType> type;
  std::optional<ExactComplex> lambda;  ///< |lambda| = 1 and phi + lambda conj(phi) = 0 off the constant term
  std::string explanation;
};

/// T_phi is normal iff phi + lambda conj(phi) is constant for some unimodular
/// lambda; for the four-term shape this leaves three exponent layouts
/// (n = p, m = p, m = q). lambda is solved from the first nonconstant
/// analytic coefficient and then checked on every coefficient.
inline NormalityVerdict classify_normal(const FourTermSymbol& s) {
  validate_balanced(s);
  if (s.all_zero()) throw Error(ErrorCode::ZeroSymbol, "classify_normal needs a nonzero symbol");
  const HarmonicPolySymbol h = to_harmonic(s);

  auto nonconstant = [](const HarmonicPolySymbol::Coefficients& part) {
    HarmonicPolySymbol::Coefficients out;
    for (const auto& [j, c] : part)
      if (j > 0) out.emplace(j, c);
    return out;
  };
  const auto analytic = nonconstant(h.analytic());
  const auto coanalytic = h.coanalytic();
  if (analytic.empty() && coanalytic.empty())
    throw Error(ErrorCode::Precondition, "symbol is constant; the classification assumes a nonconstant symbol");

  NormalityVerdict out;
  if (analytic.empty() || coanalytic.empty()) {
    out.explanation = "phi + lambda conj(phi) cannot be constant: only one of f, g is nonconstant";
    return out;
  }

  // Coefficient of z^j in phi + lambda conj(phi) is a_j + lambda conj(b_j); of conj(z)^j it is b_j + lambda conj(a_j).
  const auto& [j0, a0] = *analytic.begin();
  const auto b0_it = coanalytic.find(j0);
  if (b0_it == coanalytic.end()) {
    out.explanation = "z^" + std::to_string(j0) + " has no conj(z)^" + std::to_string(j0) + " partner";
    return out;
  }
  const ExactComplex lambda = -(b0_it->second / a0.conj());
  if (lambda.norm_sq() != 1) {
    out.explanation = "solved lambda = " + to_string(lambda) + " is not unimodular";
    return out;
  }
  auto coeff = [](const HarmonicPolySymbol::Coefficients& part, Degree j) {
    const auto it = part.find(j);
    return it == part.end() ? ExactComplex() : it->second;
  };
  for (const auto* part : {&analytic, &coanalytic}) {
    for (const auto& [j, c] : *part) {
      const ExactComplex a = coeff(analytic, j), b = coeff(coanalytic, j);
      if (!(a + lambda * b.conj()).is_zero() || !(b + lambda * a.conj()).is_zero()) {
        out.explanation = "phi + lambda conj(phi) has a nonzero coefficient at degree " + std::to_string(j) +
                          " for lambda = " + to_string(lambda);
        return out;
      }
    }
  }

  out.normal = true;
  out.lambda = lambda;
  if (s.n == s.p)
    out.type = NormalType::TypeI;
  else if (s.m == s.p)
    out.type = NormalType::TypeII;
  else if (s.m == s.q)
    out.type = NormalType::TypeIII;
  else
    throw std::logic_error("classify_normal: normal symbol outside the three exponent layouts");
  out.explanation = std::string(normal_type_name(*out.type)) + ": phi + lambda conj(phi) = const with lambda = " +
                    to_string(lambda);
  return out;
}

/// Trigonometric polynomial sum_{j=-m}^{N} a_j z^j on the unit circle.
class HardyTrigSymbol {
 public:
  using Coefficients = std::map<long, ExactComplex>;

  HardyTrigSymbol() = default;
  explicit HardyTrigSymbol(const Coefficients& coeffs) {
    for (const auto& [j, c] : coeffs) add(j, c);
  }

  /// Same coefficients read on the circle, where conj(z)^j = z^(-j).
  static HardyTrigSymbol from_harmonic(const HarmonicPolySymbol& h) {
    HardyTrigSymbol out;
    for (const auto& [j, c] : h.analytic()) out.add(static_cast<long>(j), c);
    for (const auto& [j, c] : h.coanalytic()) out.add(-static_cast<long>(j), c);
    return out;
  }

  void add(long j, const ExactComplex& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = coeffs_.try_emplace(j, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) coeffs_.erase(it);
    }
  }

  ExactComplex coeff(long j) const {
    const auto it = coeffs_.find(j);
    return it == coeffs_.end() ? ExactComplex() : it->second;
  }

  /// Co-analytic degree (0 when there are no negative frequencies).
  Degree m() const { return coeffs_.empty() || coeffs_.begin()->first >= 0 ? 0 : static_cast<Degree>(-coeffs_.begin()->first); }
  /// Analytic degree (0 when there are no positive frequencies).
  Degree N() const { return coeffs_.empty() || coeffs_.rbegin()->first <= 0 ? 0 : static_cast<Degree>(coeffs_.rbegin()->first); }

  const Coefficients& coefficients() const { return coeffs_; }

 private:
  Coefficients coeffs_;
};

struct HardyNecessaryVerdict {
  bool fails = false;  ///< certified not hyponormal on H^2
  std::string explanation;
};

/// Hyponormal on H^2 implies m <= N and |a_{-m}| <= |a_N|.
inline HardyNecessaryVerdict hardy_necessary(const HardyTrigSymbol& h) {
  const Degree m = h.m(), N = h.N();
  if (m == 0) return {false, "analytic symbol"};
  if (m > N) return {true, "m = " + std::to_string(m) + " > N = " + std::to_string(N)};
  const Rational lo = h.coeff(-static_cast<long>(m)).norm_sq();
  const Rational hi = h.coeff(static_cast<long>(N)).norm_sq();
  if (lo > hi) return {true, "|a_-m|^2 = " + lo.get_str() + " > |a_N|^2 = " + hi.get_str()};
  return {false, "m <= N and |a_-m| <= |a_N| (necessary condition only)"};
}

enum class HardyEqualModulus { Hyponormal, NotHyponormal, NotApplicable };

constexpr const char* hardy_equal_modulus_name(HardyEqualModulus v) {
  switch (v) {
    case HardyEqualModulus::Hyponormal: return "HYPONORMAL";
    case HardyEqualModulus::NotHyponormal: return "NOT_HYPONORMAL";
    case HardyEqualModulus::NotApplicable: return "NOT_APPLICABLE";
  }
  return "?";
}

struct HardyEqualModulusVerdict {
  HardyEqualModulus verdict = HardyEqualModulus::NotApplicable;
  bool normal = false;
  std::string explanation;
};

/// For m <= N and |a_{-m}| = |a_N| != 0: hyponormal iff
/// conj(a_N) (a_{-1}, ..., a_{-m}) = a_{-m} (conj(a_{N-m+1}), ..., conj(a_N)),
/// and normal iff additionally m = N.
inline HardyEqualModulusVerdict hardy_equal_modulus(const HardyTrigSymbol& h) {
  const Degree m = h.m(), N = h.N();
  HardyEqualModulusVerdict out;
  if (m == 0 || m > N) {
    out.explanation = "requires 1 <= m <= N";
    return out;
  }
  const ExactComplex a_neg_m = h.coeff(-static_cast<long>(m));
  const ExactComplex a_top = h.coeff(static_cast<long>(N));
  if (a_neg_m.norm_sq() != a_top.norm_sq()) {
    out.explanation = "requires |a_-m| = |a_N|";
    return out;
  }
  for (Degree j = 1; j <= m; ++j) {
    const ExactComplex lhs = a_top.conj() * h.coeff(-static_cast<long>(j));
    const ExactComplex rhs = a_neg_m * h.coeff(static_cast<long>(N - m + j)).conj();
    if (!(lhs == rhs)) {
      out.verdict = HardyEqualModulus::NotHyponormal;
      out.explanation = "coefficient equation fails at row " + std::to_string(j);
      return out;
    }
  }
  out.verdict = HardyEqualModulus::Hyponormal;
  out.normal = m == N;
  out.explanation = out.normal ? "coefficient equation holds with m = N: normal" : "coefficient equation holds";
  return out;
}

}  // namespace hypolab
