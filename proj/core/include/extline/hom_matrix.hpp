// Matrices of maps between direct sums of indecomposable projectives.
#ifndef EXTLINE_HOM_MATRIX_HPP_
#define EXTLINE_HOM_MATRIX_HPP_

#include <string>
#include <vector>

#include "extline/line_algebra.hpp"
#include "extline/quiver_rep.hpp"

namespace extline {

/// Entry (r, c) is a map P_{cols[c]} -> P_{rows[r]}.
class HomMatrix {
 public:
  HomMatrix(FieldSpec field, std::vector<int> rows, std::vector<int> cols);

  /// Identity on the summands shared by source and target, zero elsewhere.
  static HomMatrix identity_on_common(FieldSpec field, std::vector<int> rows, std::vector<int> cols);

  const FieldSpec& field() const noexcept { return field_; }
  const std::vector<int>& row_labels() const noexcept { return rows_; }
  const std::vector<int>& col_labels() const noexcept { return cols_; }
  std::size_t rows() const noexcept { return rows_.size(); }
  std::size_t cols() const noexcept { return cols_.size(); }

  HomElement& at(std::size_t r, std::size_t c) { return entries_.at(r * cols_.size() + c); }
  const HomElement& at(std::size_t r, std::size_t c) const { return entries_.at(r * cols_.size() + c); }

  /// Total number of scalar coefficients (sum of hom dimensions over entries).
  std::size_t slot_count() const;

  bool is_zero() const;
  /// True when no entry has a nonzero Identity coefficient, i.e. the map lands in the radical.
  bool is_radical() const;

  friend HomMatrix operator+(const HomMatrix& a, const HomMatrix& b);
  friend HomMatrix operator-(const HomMatrix& a, const HomMatrix& b);
  friend HomMatrix operator*(const Scalar& s, const HomMatrix& m);
  friend bool operator==(const HomMatrix& a, const HomMatrix& b);

  std::string to_string() const;

 private:
  FieldSpec field_;
  std::vector<int> rows_;
  std::vector<int> cols_;
  std::vector<HomElement> entries_;
};

/// g o h as matrices over the composition table.
HomMatrix compose(const LineAlgebra& alg, const HomMatrix& g, const HomMatrix& h);

QuiverRep projective_sum(const LineAlgebra& alg, const std::vector<int>& summands);

/// The concrete intertwiner between the realized direct sums.
RepMorphism realize(const LineAlgebra& alg, const HomMatrix& m);

}  // namespace extline

#endif  // EXTLINE_HOM_MATRIX_HPP_
