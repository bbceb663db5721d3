// Dense exact matrices and the handful of elimination routines the rest of
// the library needs (rank, kernel, column space, solving).
#ifndef EXTLINE_MATRIX_HPP_
#define EXTLINE_MATRIX_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "extline/scalar.hpp"

namespace extline {

class Matrix {
 public:
  Matrix(FieldSpec field, std::size_t rows, std::size_t cols);

  static Matrix identity(FieldSpec field, std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const FieldSpec& field() const noexcept { return field_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_zero() const;
  Matrix transpose() const;
  Matrix column(std::size_t c) const;
  Matrix select_columns(std::span<const std::size_t> cols) const;
  Matrix hstack(const Matrix& right) const;
  Matrix vstack(const Matrix& below) const;

  /// Copies `block` into this matrix with its top-left corner at (r0, c0).
  void set_block(std::size_t r0, std::size_t c0, const Matrix& block);
  Matrix block(std::size_t r0, std::size_t c0, std::size_t rows, std::size_t cols) const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Scalar& s, const Matrix& m);
  friend bool operator==(const Matrix& a, const Matrix& b);

  std::string to_string() const;

 private:
  FieldSpec field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> data_;
};

/// Reduced row echelon form together with the pivot column of each nonzero row.
struct Echelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};

Echelon row_reduce(Matrix m);
std::size_t rank(const Matrix& m);

/// Columns form a basis of {x : m x = 0}.
Matrix kernel(const Matrix& m);

/// Columns form a basis of the column space, taken from the pivot columns of m.
Matrix column_space(const Matrix& m);

/// Some x with a x = b, if one exists.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);

std::optional<Matrix> inverse(const Matrix& m);

/// Coordinates of each column of `vectors` in the basis given by the columns
/// of `basis` (which must be linearly independent). Throws std::domain_error
/// if some column is outside the span.
Matrix coordinates(const Matrix& basis, const Matrix& vectors);

/// True when every column of `sub` lies in the span of the columns of `space`.
bool spans_contain(const Matrix& space, const Matrix& sub);

}  // namespace extline

#endif  // EXTLINE_MATRIX_HPP_
