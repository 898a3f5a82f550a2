#pragma once

// Closed forms on the Bergman space A^2(D) with area measure normalised so
// that ||1|| = 1. Monomials are orthogonal and ||z^j||^2 = 1/(j+1).

#include <cstdint>
#include <map>

#include "hypolab/complex.hpp"
#include "hypolab/error.hpp"

namespace hypolab {

using Degree = std::uint32_t;

struct MonomialTerm {
  ExactComplex coeff;
  Degree degree = 0;

  bool is_zero() const { return coeff.is_zero(); }
  friend bool operator==(const MonomialTerm&, const MonomialTerm&) = default;
};

/// ||z^j||^2.
inline Rational monomial_norm_sq(Degree j) { return ratio(1, long{j} + 1); }

/// P(conj(z)^u z^v): zero when v < u, else (v-u+1)/(v+1) z^(v-u).
inline MonomialTerm project(Degree u, Degree v) {
  if (v < u) return {};
  return {ExactComplex(ratio(v - u + 1, v + 1)), v - u};
}

/// <P(conj(z)^u z^v), P(conj(z)^w z^t)> for v >= u and t >= w.
inline ExactComplex inner_product_projections(Degree u, Degree v, Degree w, Degree t) {
  if (v < u || t < w)
    throw Error(ErrorCode::Precondition, "inner_product_projections requires v >= u and t >= w");
  if (std::uint64_t{u} + t != std::uint64_t{v} + w) return {};
  return ExactComplex(ratio(Integer(t - w + 1), Integer(v + 1) * Integer(t + 1)));
}

/// Finite analytic polynomial sum_j c_j z^j with no stored zero coefficients.
class Polynomial {
 public:
  using Terms = std::map<Degree, ExactComplex>;

  Polynomial() = default;
  static Polynomial monomial(Degree j, ExactComplex c = ExactComplex(1)) {
    Polynomial p;
    p.add(j, std::move(c));
    return p;
  }

  void add(Degree j, const ExactComplex& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(j, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  void add(const MonomialTerm& t) { add(t.degree, t.coeff); }

  Polynomial& operator+=(const Polynomial& o) {
    for (const auto& [j, c] : o.terms_) add(j, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    for (const auto& [j, c] : o.terms_) add(j, -c);
    return *this;
  }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }

  /// Coefficient of z^j (zero when absent).
  ExactComplex coeff(Degree j) const {
    const auto it = terms_.find(j);
    return it == terms_.end() ? ExactComplex() : it->second;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  Terms terms_;
};

/// <f, g> = sum_j f_j conj(g_j) / (j+1), linear in the first argument.
inline ExactComplex inner(const Polynomial& f, const Polynomial& g) {
  ExactComplex total;
  const auto& a = f.terms();
  const auto& b = g.terms();
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (ia->first < ib->first) {
      ++ia;
    } else if (ib->first < ia->first) {
      ++ib;
    } else {
      total += ia->second * ib->second.conj() * monomial_norm_sq(ia->first);
      ++ia;
      ++ib;
    }
  }
  return total;
}

}  // namespace hypolab
