#pragma once

// Reference computations used only by the tests. Everything here goes back to
// the area integral over the disk in polar coordinates and never calls the
// library's projection or commutator code, so agreement is a real cross-check.

#include <map>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

#include "hypolab/hypolab.hpp"

namespace oracle {

using hypolab::Degree;
using hypolab::ExactComplex;
using hypolab::Integer;
using hypolab::Rational;

/// (1/pi) * integral over the disk of conj(z)^u z^v dA.
/// Angular factor: (1/2pi) int e^{i(v-u)t} dt = [u == v].
/// Radial factor: 2 int_0^1 r^{u+v+1} dr = 2 / (u+v+2).
inline Rational disk_moment(Degree u, Degree v) {
  if (u != v) return 0;
  return hypolab::ratio(Integer(2), Integer(u) + Integer(v) + 2);
}

/// Finite sums c * conj(z)^u z^v, keyed by (u, v).
using Mixed = std::map<std::pair<Degree, Degree>, ExactComplex>;

/// z^j as a polynomial map.
using Poly = std::map<Degree, ExactComplex>;

inline void add(Poly& p, Degree j, const ExactComplex& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = p.try_emplace(j, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) p.erase(it);
  }
}

/// Bergman projection of a mixed sum: coefficient of z^j is
/// <g, z^j>_{L^2} / ||z^j||^2 with both integrals from disk_moment.
inline Poly project(const Mixed& g) {
  Poly out;
  for (const auto& [uv, c] : g) {
    const auto [u, v] = uv;
    for (Degree j = 0; j <= v; ++j) {
      const Rational num = disk_moment(u + j, v);
      if (num == 0) continue;
      add(out, j, c * Rational(num / disk_moment(j, j)));
    }
  }
  return out;
}

/// <f, g> in A^2 by integrating each product z^j conj(z)^k.
inline ExactComplex inner(const Poly& f, const Poly& g) {
  ExactComplex s;
  for (const auto& [j, a] : f)
    for (const auto& [k, b] : g) s += a * b.conj() * disk_moment(k, j);
  return s;
}

/// Symbol as a list of (coefficient, analytic exponent, co-analytic exponent).
struct SymTerm {
  ExactComplex c;
  Degree zpow = 0;
  Degree zbarpow = 0;
};
using Sym = std::vector<SymTerm>;

inline Sym from_library(const hypolab::HarmonicPolySymbol& s) {
  Sym out;
  for (const auto& [d, c] : s.analytic()) out.push_back({c, d, 0});
  for (const auto& [d, c] : s.coanalytic()) out.push_back({c, 0, d});
  return out;
}

inline Sym adjoint(const Sym& s) {
  Sym out;
  for (const auto& t : s) out.push_back({t.c.conj(), t.zbarpow, t.zpow});
  return out;
}

/// P(phi f), forming phi f as a mixed sum first.
inline Poly toeplitz(const Sym& s, const Poly& f) {
  Mixed prod;
  for (const auto& t : s)
    for (const auto& [j, a] : f) {
      auto& slot = prod[{t.zbarpow, t.zpow + j}];
      slot += t.c * a;
    }
  return project(prod);
}

inline Poly monomial(Degree j, ExactComplex c = ExactComplex(1)) { return {{j, c}}; }

/// <C z^src, z^dst> = <T z^src, T z^dst> - <T* z^src, T* z^dst>.
inline ExactComplex commutator_element(const Sym& s, Degree src, Degree dst) {
  const Sym adj = adjoint(s);
  return inner(toeplitz(s, monomial(src)), toeplitz(s, monomial(dst))) -
         inner(toeplitz(adj, monomial(src)), toeplitz(adj, monomial(dst)));
}

/// <(T_{conj(z)^a} T_{z^b} - T_{z^b} T_{conj(z)^a}) x, x> for x = z^k + c z^l.
inline ExactComplex binomial_expansion(Degree a, Degree b, Degree k, Degree l, const Rational& c) {
  const Sym zb{{ExactComplex(1), b, 0}};
  const Sym za_bar{{ExactComplex(1), 0, a}};
  Poly x = monomial(k);
  add(x, l, ExactComplex(c));
  Poly cx = toeplitz(za_bar, toeplitz(zb, x));
  for (const auto& [j, v] : toeplitz(zb, toeplitz(za_bar, x))) add(cx, j, -v);
  return inner(cx, x);
}

// ---- random generators ------------------------------------------------------

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }

  /// Rational in [-lim, lim] with denominator up to max_den.
  Rational rational(long lim = 10, long max_den = 4) {
    const long den = integer(1, max_den);
    return hypolab::ratio(integer(-lim * den, lim * den), den);
  }

  ExactComplex complex(long lim = 10, long max_den = 4, double p_real = 0.3) {
    if (coin(p_real)) return ExactComplex(rational(lim, max_den));
    return {rational(lim, max_den), rational(lim, max_den)};
  }

  /// Small nonzero harmonic polynomial with degrees 1..max_deg.
  hypolab::HarmonicPolySymbol symbol(Degree max_deg, int max_terms = 3) {
    hypolab::HarmonicPolySymbol s;
    while (s.empty()) {
      const int terms = static_cast<int>(integer(1, max_terms));
      for (int i = 0; i < terms; ++i) {
        const auto d = static_cast<Degree>(integer(1, max_deg));
        if (coin()) s.add_analytic(d, complex(3, 3));
        else s.add_coanalytic(d, complex(3, 3));
      }
    }
    return s;
  }

  /// Balanced four-term symbol with exponents up to max_exp.
  hypolab::FourTermSymbol balanced(Degree max_exp, long lim = 3) {
    const auto g = static_cast<Degree>(integer(1, max_exp));
    const auto m = static_cast<Degree>(integer(0, max_exp - g));
    const auto p = static_cast<Degree>(integer(0, max_exp - g));
    hypolab::FourTermSymbol s{complex(lim, 4), complex(lim, 4), complex(lim, 4), complex(lim, 4), m + g, m, p, p + g};
    if (s.all_zero()) s.alpha = ExactComplex(1);
    return s;
  }

  hypolab::HermitianExactMatrix hermitian(std::size_t dim, long lim = 10) {
    hypolab::HermitianExactMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) {
      m.set(i, i, ExactComplex(rational(lim)));
      for (std::size_t j = i + 1; j < dim; ++j) m.set(i, j, coin(0.2) ? ExactComplex() : complex(lim));
    }
    return m;
  }

  /// B* B for a random rank-deficient B, so PSD with zero eigenvalues likely.
  hypolab::HermitianExactMatrix gram(std::size_t dim, std::size_t rank, long lim = 3) {
    std::vector<std::vector<ExactComplex>> b(rank, std::vector<ExactComplex>(dim));
    for (auto& row : b)
      for (auto& e : row) e = complex(lim, 2);
    hypolab::HermitianExactMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = i; j < dim; ++j) {
        ExactComplex s;
        for (std::size_t r = 0; r < rank; ++r) s += b[r][i].conj() * b[r][j];
        m.set(i, j, s);
      }
    return m;
  }

  /// Mix of indefinite, PSD and barely-indefinite matrices.
  hypolab::HermitianExactMatrix any_hermitian(std::size_t max_dim) {
    const auto dim = static_cast<std::size_t>(integer(1, static_cast<long>(max_dim)));
    switch (integer(0, 2)) {
      case 0: return hermitian(dim);
      case 1: return gram(dim, static_cast<std::size_t>(integer(1, static_cast<long>(dim))));
      default: {
        auto m = gram(dim, static_cast<std::size_t>(integer(1, static_cast<long>(dim))));
        const auto i = static_cast<std::size_t>(integer(0, static_cast<long>(dim) - 1));
        m.set(i, i, m(i, i) - ExactComplex(hypolab::ratio(1, integer(1, 50))));
        return m;
      }
    }
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace oracle
