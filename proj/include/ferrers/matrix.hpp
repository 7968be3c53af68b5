#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <ostream>
#include <type_traits>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace ferrers {

/// Dense square matrix, row-major. Desk-scale only (dim of a few dozen).
template <typename Scalar>
class Matrix {
 public:
  using value_type = Scalar;

  Matrix() = default;
  explicit Matrix(std::size_t dim) : dim_(dim), data_(dim * dim, Scalar(0)) {}

  Matrix(std::initializer_list<std::initializer_list<Scalar>> rows)
      : dim_(rows.size()) {
    data_.reserve(dim_ * dim_);
    for (const auto& row : rows) {
      if (row.size() != dim_) throw dimension_error("matrix literal is not square");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static Matrix identity(std::size_t dim) {
    Matrix out(dim);
    for (std::size_t i = 0; i < dim; ++i) out(i, i) = Scalar(1);
    return out;
  }

  static Matrix all_ones(std::size_t dim) {
    Matrix out(dim);
    std::fill(out.data_.begin(), out.data_.end(), Scalar(1));
    return out;
  }

  [[nodiscard]] std::size_t dim() const noexcept { return dim_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * dim_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const {
    return data_[i * dim_ + j];
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.dim_ == b.dim_ && a.data_ == b.data_;
  }

  Matrix& operator+=(const Matrix& rhs) {
    require_same_dim(rhs);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += rhs.data_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& rhs) {
    require_same_dim(rhs);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= rhs.data_[k];
    return *this;
  }
  Matrix& operator*=(const Scalar& c) {
    for (auto& v : data_) v *= c;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const Scalar& c) { return a *= c; }
  friend Matrix operator*(const Scalar& c, Matrix a) { return a *= c; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    a.require_same_dim(b);
    const std::size_t n = a.dim_;
    Matrix out(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) {
        const Scalar& aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < n; ++j) out(i, j) += aik * b(k, j);
      }
    return out;
  }

  [[nodiscard]] std::vector<Scalar> apply(const std::vector<Scalar>& v) const {
    if (v.size() != dim_) throw dimension_error("vector length does not match matrix");
    std::vector<Scalar> out(dim_, Scalar(0));
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j) out[i] += (*this)(i, j) * v[j];
    return out;
  }

  [[nodiscard]] Scalar trace() const {
    Scalar t(0);
    for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
    return t;
  }

  [[nodiscard]] Matrix transpose() const {
    Matrix out(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j) out(j, i) = (*this)(i, j);
    return out;
  }

  [[nodiscard]] bool is_symmetric() const {
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = i + 1; j < dim_; ++j)
        if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
  }

  /// Submatrix with row `row` and column `col` removed.
  [[nodiscard]] Matrix minor(std::size_t row, std::size_t col) const {
    if (row >= dim_ || col >= dim_)
      throw dimension_error("minor index " + std::to_string(std::max(row, col)) +
                            " out of range for dim " + std::to_string(dim_));
    Matrix out(dim_ - 1);
    for (std::size_t i = 0, oi = 0; i < dim_; ++i) {
      if (i == row) continue;
      for (std::size_t j = 0, oj = 0; j < dim_; ++j) {
        if (j == col) continue;
        out(oi, oj++) = (*this)(i, j);
      }
      ++oi;
    }
    return out;
  }

  template <typename Fn>
  [[nodiscard]] auto map(Fn&& fn) const {
    using Out = std::decay_t<decltype(fn(std::declval<const Scalar&>()))>;
    Matrix<Out> out(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j) out(i, j) = fn((*this)(i, j));
    return out;
  }

 private:
  void require_same_dim(const Matrix& other) const {
    if (other.dim_ != dim_)
      throw dimension_error("matrix dimensions differ: " + std::to_string(dim_) +
                            " vs " + std::to_string(other.dim_));
  }

  std::size_t dim_ = 0;
  std::vector<Scalar> data_;
};

using RationalMatrix = Matrix<Rational>;
using IntegerMatrix = Matrix<Integer>;
using RealMatrix = Matrix<double>;

inline RealMatrix to_real(const RationalMatrix& m) {
  return m.map([](const Rational& r) { return r.get_d(); });
}

/// Principal minor matrix: row i and column i removed.
template <typename Scalar>
Matrix<Scalar> delete_row_col(const Matrix<Scalar>& m, std::size_t i) {
  if (m.dim() < 2) throw dimension_error("delete_row_col needs dim >= 2");
  if (i >= m.dim())
    throw dimension_error("index " + std::to_string(i) + " out of range for dim " +
                          std::to_string(m.dim()));
  return m.minor(i, i);
}

/// Fraction-free Gaussian elimination (Bareiss). Every intermediate is a
/// minor of the input, so integer inputs stay integral and exact division
/// is valid at each step.
inline Integer bareiss_determinant(IntegerMatrix a) {
  const std::size_t n = a.dim();
  if (n == 0) return 1;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = k; j < n; ++j) std::swap(a(k, j), a(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = std::move(t);
      }
    }
    prev = a(k, k);
  }
  Integer det = a(n - 1, n - 1);
  return sign < 0 ? Integer(-det) : det;
}

/// Exact determinant. Each row is scaled by the lcm of its denominators,
/// the integer matrix goes through Bareiss, and the scaling is divided out.
inline Rational det_exact(const RationalMatrix& m) {
  const std::size_t n = m.dim();
  IntegerMatrix scaled(n);
  Integer scale = 1;
  for (std::size_t i = 0; i < n; ++i) {
    Integer row_lcm = 1;
    for (std::size_t j = 0; j < n; ++j) mpz_lcm(row_lcm.get_mpz_t(), row_lcm.get_mpz_t(),
                                                 m(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < n; ++j)
      scaled(i, j) = m(i, j).get_num() * (row_lcm / m(i, j).get_den());
    scale *= row_lcm;
  }
  Rational det(bareiss_determinant(std::move(scaled)), scale);
  det.canonicalize();
  return det;
}

/// Classical adjugate, adj(M)(i,j) = (-1)^(i+j) det(M without row j, col i).
inline RationalMatrix adjugate(const RationalMatrix& m) {
  const std::size_t n = m.dim();
  if (n < 2) throw dimension_error("adjugate needs dim >= 2");
  RationalMatrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Rational c = det_exact(m.minor(j, i));
      out(i, j) = ((i + j) % 2 == 0) ? c : Rational(-c);
    }
  return out;
}

/// Debug dump: one row per line, entries "p/q" separated by tabs.
inline void dump(std::ostream& os, const RationalMatrix& m) {
  for (std::size_t i = 0; i < m.dim(); ++i) {
    for (std::size_t j = 0; j < m.dim(); ++j) {
      if (j) os << '\t';
      os << to_string(m(i, j));
    }
    os << '\n';
  }
}

}  // namespace ferrers
