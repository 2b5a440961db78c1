#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "axial/rational.hpp"

namespace axial {

// Dense matrix of exact rationals, row-major. Vectors are coordinate columns;
// matrices act on the left, so apply(v) computes M*v.
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vec>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Rational& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  Vec row(std::size_t i) const;
  Vec col(std::size_t j) const;
  void swap_rows(std::size_t i, std::size_t j);

  Matrix operator*(const Matrix& rhs) const;
  Matrix operator+(const Matrix& rhs) const;
  Matrix operator-(const Matrix& rhs) const;
  Matrix scaled(const Rational& factor) const;
  Vec apply(const Vec& v) const;
  Matrix transpose() const;

  bool operator==(const Matrix& rhs) const = default;
  bool operator<(const Matrix& rhs) const;

  bool is_square() const { return rows_ == cols_; }
  bool is_zero() const;
  bool is_identity() const;
  bool is_symmetric() const;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

/// Unique reduced row-echelon form; the row space is preserved.
Matrix rref(Matrix m);

std::size_t rank(const Matrix& m);

/// Exact determinant by fraction-free Bareiss elimination after clearing
/// row denominators. Throws Errc::non_square.
Rational det(const Matrix& m);

/// Throws Errc::singular / Errc::non_square.
Matrix inverse(const Matrix& m);

Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scaled(const Vec& v, const Rational& factor);
bool vec_is_zero(const Vec& v);

}  // namespace axial
