#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "hypolab/complex.hpp"
#include "hypolab/error.hpp"

namespace hypolab {

/// Square conjugate-symmetric matrix over ExactComplex, stored row-major.
/// Every public constructor checks the Hermitian invariant exactly.
class HermitianExactMatrix {
 public:
  /// Zero matrix of the given dimension.
  explicit HermitianExactMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {
    if (dim == 0) throw Error(ErrorCode::Precondition, "matrix dimension must be positive");
  }

  static HermitianExactMatrix from_rows(const std::vector<std::vector<ExactComplex>>& rows) {
    const std::size_t n = rows.size();
    HermitianExactMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (rows[i].size() != n) throw Error(ErrorCode::NotHermitian, "matrix is not square");
      for (std::size_t j = 0; j < n; ++j) m.entries_[i * n + j] = rows[i][j];
    }
    m.check();
    return m;
  }

  static HermitianExactMatrix from_rows(std::initializer_list<std::initializer_list<ExactComplex>> rows) {
    std::vector<std::vector<ExactComplex>> v;
    for (const auto& r : rows) v.emplace_back(r);
    return from_rows(v);
  }

  /// Real diagonal matrix.
  static HermitianExactMatrix diagonal(std::span<const Rational> diag) {
    HermitianExactMatrix m(diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) m.entries_[i * m.dim_ + i] = ExactComplex(diag[i]);
    return m;
  }

  std::size_t dim() const { return dim_; }

  const ExactComplex& operator()(std::size_t i, std::size_t j) const { return entries_[i * dim_ + j]; }

  /// Sets (i, j) to v and (j, i) to conj(v). Diagonal values must be real.
  void set(std::size_t i, std::size_t j, const ExactComplex& v) {
    if (i == j && !v.is_real())
      throw Error(ErrorCode::NotHermitian, "diagonal entry with nonzero imaginary part");
    entries_[i * dim_ + j] = v;
    entries_[j * dim_ + i] = v.conj();
  }

  /// v* M v, which is real for Hermitian M; returned as ExactComplex so callers
  /// can confirm the zero imaginary part.
  ExactComplex quadratic_form(std::span<const ExactComplex> v) const {
    if (v.size() != dim_) throw Error(ErrorCode::Precondition, "vector length does not match matrix dimension");
    ExactComplex total;
    for (std::size_t i = 0; i < dim_; ++i) {
      if (v[i].is_zero()) continue;
      ExactComplex row;
      for (std::size_t j = 0; j < dim_; ++j) {
        const ExactComplex& e = entries_[i * dim_ + j];
        if (e.is_zero() || v[j].is_zero()) continue;
        row += e * v[j];
      }
      total += v[i].conj() * row;
    }
    return total;
  }

  /// D M D for a real diagonal D.
  HermitianExactMatrix congruence(std::span<const Rational> diag) const {
    if (diag.size() != dim_) throw Error(ErrorCode::Precondition, "scaling length does not match matrix dimension");
    HermitianExactMatrix out(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j)
        out.entries_[i * dim_ + j] = entries_[i * dim_ + j] * Rational(diag[i] * diag[j]);
    return out;
  }

  friend bool operator==(const HermitianExactMatrix&, const HermitianExactMatrix&) = default;

 private:
  void check() const {
    for (std::size_t i = 0; i < dim_; ++i) {
      if (!entries_[i * dim_ + i].is_real())
        throw Error(ErrorCode::NotHermitian, "diagonal entry " + std::to_string(i) + " is not real");
      for (std::size_t j = i + 1; j < dim_; ++j)
        if (!(entries_[j * dim_ + i] == entries_[i * dim_ + j].conj()))
          throw Error(ErrorCode::NotHermitian,
                      "entry (" + std::to_string(j) + "," + std::to_string(i) + ") is not the conjugate of (" +
                          std::to_string(i) + "," + std::to_string(j) + ")");
    }
  }

  std::size_t dim_;
  std::vector<ExactComplex> entries_;
};

}  // namespace hypolab
