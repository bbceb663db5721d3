#include "extline/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace extline {

Matrix::Matrix(FieldSpec field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, field.zero()) {}

Matrix Matrix::identity(FieldSpec field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
  return m;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_)
    if (!x.is_zero()) return false;
  return true;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix Matrix::column(std::size_t c) const {
  Matrix out(field_, rows_, 1);
  for (std::size_t r = 0; r < rows_; ++r) out(r, 0) = (*this)(r, c);
  return out;
}

Matrix Matrix::select_columns(std::span<const std::size_t> cols) const {
  Matrix out(field_, rows_, cols.size());
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t j = 0; j < cols.size(); ++j) out(r, j) = (*this)(r, cols[j]);
  return out;
}

Matrix Matrix::hstack(const Matrix& right) const {
  if (right.rows_ != rows_) throw std::invalid_argument("hstack: row mismatch");
  Matrix out(field_, rows_, cols_ + right.cols_);
  out.set_block(0, 0, *this);
  out.set_block(0, cols_, right);
  return out;
}

Matrix Matrix::vstack(const Matrix& below) const {
  if (below.cols_ != cols_) throw std::invalid_argument("vstack: column mismatch");
  Matrix out(field_, rows_ + below.rows_, cols_);
  out.set_block(0, 0, *this);
  out.set_block(rows_, 0, below);
  return out;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& block) {
  if (r0 + block.rows_ > rows_ || c0 + block.cols_ > cols_) throw std::out_of_range("set_block");
  for (std::size_t r = 0; r < block.rows_; ++r)
    for (std::size_t c = 0; c < block.cols_; ++c) (*this)(r0 + r, c0 + c) = block(r, c);
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t rows, std::size_t cols) const {
  if (r0 + rows > rows_ || c0 + cols > cols_) throw std::out_of_range("block");
  Matrix out(field_, rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) out(r, c) = (*this)(r0 + r, c0 + c);
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: shape mismatch");
  Matrix out(a.field_, a.rows_, b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& x = a(r, k);
      if (x.is_zero()) continue;
      for (std::size_t c = 0; c < b.cols_; ++c) {
        const Scalar& y = b(k, c);
        if (!y.is_zero()) out(r, c) += x * y;
      }
    }
  return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix sum: shape mismatch");
  Matrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
  return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix difference: shape mismatch");
  Matrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= b.data_[i];
  return out;
}

Matrix operator*(const Scalar& s, const Matrix& m) {
  Matrix out = m;
  for (auto& x : out.data_) x *= s;
  return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  for (std::size_t r = 0; r < rows_; ++r) {
    os << '[';
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? " " : "") << (*this)(r, c).to_string();
    os << "]\n";
  }
  return os.str();
}

Echelon row_reduce(Matrix m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  const std::size_t rows = m.rows(), cols = m.cols();
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t sel = row;
    while (sel < rows && m(sel, col).is_zero()) ++sel;
    if (sel == rows) continue;
    if (sel != row)
      for (std::size_t c = col; c < cols; ++c) std::swap(m(sel, c), m(row, c));
    const Scalar inv = m(row, col).inverse();
    if (!inv.is_one())
      for (std::size_t c = col; c < cols; ++c)
        if (!m(row, c).is_zero()) m(row, c) *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      const Scalar factor = m(r, col);
      for (std::size_t c = col; c < cols; ++c)
        if (!m(row, c).is_zero()) m(r, c) -= factor * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return row_reduce(m).pivots.size(); }

Matrix kernel(const Matrix& m) {
  const Echelon e = row_reduce(m);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < cols; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  Matrix basis(m.field(), cols, free_cols.size());
  for (std::size_t j = 0; j < free_cols.size(); ++j) {
    const std::size_t f = free_cols[j];
    basis(f, j) = m.field().one();
    for (std::size_t r = 0; r < e.pivots.size(); ++r) basis(e.pivots[r], j) = -e.reduced(r, f);
  }
  return basis;
}

Matrix column_space(const Matrix& m) {
  const Echelon e = row_reduce(m);
  return m.select_columns(e.pivots);
}

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("solve: row mismatch");
  const Echelon e = row_reduce(a.hstack(b));
  const std::size_t n = a.cols();
  Matrix x(a.field(), n, b.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    const std::size_t p = e.pivots[r];
    if (p >= n) return std::nullopt;
    for (std::size_t c = 0; c < b.cols(); ++c) x(p, c) = e.reduced(r, n + c);
  }
  return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  if (rank(m) != m.rows()) return std::nullopt;
  return solve(m, Matrix::identity(m.field(), m.rows()));
}

Matrix coordinates(const Matrix& basis, const Matrix& vectors) {
  auto x = solve(basis, vectors);
  if (!x) throw std::domain_error("coordinates: vector outside span");
  return *x;
}

bool spans_contain(const Matrix& space, const Matrix& sub) {
  if (sub.cols() == 0) return true;
  return rank(space.hstack(sub)) == rank(space);
}

}  // namespace extline
