#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace toric {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

/// Raised when an input violates a documented precondition (bad fan data,
/// a collection that is not primitive, a blow-down of the wrong shape...).
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an internal invariant fails; indicates a bug or a malformed
/// fan that slipped past validation.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Dense row-major matrix over an exact ring.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<long>> rows);

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  /// Rows given as vectors; all must have the same length.
  static Matrix from_rows(const std::vector<std::vector<T>>& rows, std::size_t cols = 0);
  /// Columns given as vectors; all must have the same length.
  static Matrix from_columns(const std::vector<std::vector<T>>& cols, std::size_t rows = 0);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<T> row(std::size_t i) const {
    return std::vector<T>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
  }
  std::vector<T> column(std::size_t j) const {
    std::vector<T> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);

  Matrix transpose() const;

  bool operator==(const Matrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;

template <class T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b);
template <class T>
std::vector<T> operator*(const Matrix<T>& a, const std::vector<T>& v);

RatMatrix to_rational(const IntMatrix& m);
RatVector to_rational(const IntVector& v);

/// Exact determinant (fraction-free Bareiss elimination).
Integer determinant(const IntMatrix& m);
Rational determinant(const RatMatrix& m);

/// Inverse of a square rational matrix; nullopt when singular.
std::optional<RatMatrix> inverse(const RatMatrix& m);

/// Inverse of an integer matrix when it is unimodular, nullopt otherwise.
std::optional<IntMatrix> unimodular_inverse(const IntMatrix& m);

/// Adjugate (classical adjoint): adj(m) * m = det(m) * I.
IntMatrix adjugate(const IntMatrix& m);

/// Unique solution of a square nonsingular system; nullopt when singular.
std::optional<RatVector> solve(const RatMatrix& a, const RatVector& b);

/// Rank over Q.
std::size_t rank(const RatMatrix& m);

Integer gcd_of(const IntVector& v);
bool is_zero(const IntVector& v);

IntVector operator+(const IntVector& a, const IntVector& b);
IntVector operator-(const IntVector& a, const IntVector& b);
IntVector operator*(const Integer& s, const IntVector& v);
Integer dot(const IntVector& a, const IntVector& b);

std::string to_string(const IntVector& v);
std::string to_string(const IntMatrix& m);

IntVector int_vector(std::initializer_list<long> values);

}  // namespace toric
