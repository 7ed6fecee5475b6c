#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <vector>

#include "lck/scalar.hpp"

namespace lck {

using Vector = std::vector<Scalar>;

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator-(const Vector& a);
Vector operator*(const Scalar& s, const Vector& a);
bool is_zero(const Vector& v);
/// Index of the first entry that is not zero, or v.size().
std::size_t first_nonzero(const Vector& v);
Vector to_backend(const Vector& v, Backend b);

/// Dense row-major matrix of scalars.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<Scalar>> rows);

  static Matrix identity(std::size_t n);
  static Matrix from_columns(const std::vector<Vector>& cols, std::size_t rows);
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);
  static Matrix column(const Vector& v);
  /// Block diagonal sum.
  static Matrix direct_sum(const Matrix& a, const Matrix& b);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vector row(std::size_t i) const;
  Vector col(std::size_t j) const;
  Matrix transpose() const;
  Scalar trace() const;
  bool is_zero() const;
  /// Largest absolute entry; zero for an empty matrix.
  Scalar max_abs() const;
  Matrix to_backend(Backend b) const;
  bool is_exact() const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator-(const Matrix& a);
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Vector operator*(const Matrix& a, const Vector& x);
  friend Matrix operator*(const Scalar& s, Matrix a);
  /// Entrywise comparison (tolerant on floating entries).
  friend bool operator==(const Matrix& a, const Matrix& b);
  bool identical(const Matrix& o) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// Commutator ab - ba.
Matrix commutator(const Matrix& a, const Matrix& b);
/// Bilinear form x^T m y.
Scalar bilinear(const Matrix& m, const Vector& x, const Vector& y);

std::ostream& operator<<(std::ostream& os, const Matrix& m);

}  // namespace lck
