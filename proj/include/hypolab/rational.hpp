#pragma once

#include <gmpxx.h>

#include <cctype>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "hypolab/error.hpp"

namespace hypolab {

/// Arbitrary-precision rational. gmpxx keeps results canonical (lowest
/// terms, positive denominator) as long as inputs are canonical.
using Rational = mpq_class;
using Integer = mpz_class;

inline std::string to_string(const Rational& x) { return x.get_str(); }

/// num/den in lowest terms. mpq_class(num, den) alone does not canonicalise.
inline Rational ratio(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("ratio: zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline Rational ratio(long num, long den) { return ratio(Integer(num), Integer(den)); }

inline double to_double(const Rational& x) { return x.get_d(); }

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

inline bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

inline Integer parse_integer(std::string_view s) {
  if (!is_integer_literal(s)) throw Error(ErrorCode::Parse, "not an integer: '" + std::string(s) + "'");
  if (s.front() == '+') s.remove_prefix(1);
  return Integer(std::string(s), 10);
}

}  // namespace detail

/// Parses "p/q", "p", or a finite decimal such as "-1.25" into an exact rational.
inline Rational parse_rational(std::string_view text) {
  const auto s = detail::trim(text);
  if (const auto slash = s.find('/'); slash != std::string_view::npos) {
    const Integer num = detail::parse_integer(detail::trim(s.substr(0, slash)));
    const Integer den = detail::parse_integer(detail::trim(s.substr(slash + 1)));
    if (den == 0) throw Error(ErrorCode::Parse, "zero denominator in '" + std::string(s) + "'");
    Rational r(num, den);
    r.canonicalize();
    return r;
  }
  if (const auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view whole = s.substr(0, dot);
    const std::string_view frac = s.substr(dot + 1);
    bool negative = false;
    if (!whole.empty() && (whole.front() == '-' || whole.front() == '+')) {
      negative = whole.front() == '-';
      whole.remove_prefix(1);
    }
    if ((whole.empty() && frac.empty()) || (!whole.empty() && !detail::is_integer_literal(whole)) ||
        (!frac.empty() && (!detail::is_integer_literal(frac) || frac.front() == '-' || frac.front() == '+')))
      throw Error(ErrorCode::Parse, "not a decimal: '" + std::string(s) + "'");
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    Integer num = whole.empty() ? Integer(0) : Integer(std::string(whole), 10);
    num = num * scale + (frac.empty() ? Integer(0) : Integer(std::string(frac), 10));
    Rational r(negative ? Integer(-num) : num, scale);
    r.canonicalize();
    return r;
  }
  return Rational(detail::parse_integer(s));
}

/// Exact square root when x is the square of a rational, otherwise nullopt.
/// A canonical fraction is a square iff numerator and denominator both are.
inline std::optional<Rational> exact_sqrt(const Rational& x) {
  if (sgn(x) < 0) return std::nullopt;
  const Integer& num = x.get_num();
  const Integer& den = x.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) return std::nullopt;
  Integer rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  return Rational(rn, rd);
}

}  // namespace hypolab
