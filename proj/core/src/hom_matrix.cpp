#include "extline/hom_matrix.hpp"

#include <sstream>

namespace extline {

HomMatrix::HomMatrix(FieldSpec field, std::vector<int> rows, std::vector<int> cols)
    : field_(field), rows_(std::move(rows)), cols_(std::move(cols)) {
  entries_.reserve(rows_.size() * cols_.size());
  for (int r : rows_)
    for (int c : cols_) entries_.emplace_back(field_, c, r);
}

HomMatrix HomMatrix::identity_on_common(FieldSpec field, std::vector<int> rows, std::vector<int> cols) {
  HomMatrix m(field, std::move(rows), std::move(cols));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (m.rows_[r] == m.cols_[c]) m.at(r, c).coefficient(0) = field.one();
  return m;
}

std::size_t HomMatrix::slot_count() const {
  std::size_t total = 0;
  for (const auto& e : entries_) total += e.slots();
  return total;
}

bool HomMatrix::is_zero() const {
  for (const auto& e : entries_)
    if (!e.is_zero()) return false;
  return true;
}

bool HomMatrix::is_radical() const {
  for (const auto& e : entries_)
    if (e.source() == e.target() && !e.coefficient(0).is_zero()) return false;
  return true;
}

namespace {
void require_same_shape(const HomMatrix& a, const HomMatrix& b) {
  if (a.row_labels() != b.row_labels() || a.col_labels() != b.col_labels())
    throw CompositionError("HomMatrix: shapes differ");
}
}  // namespace

HomMatrix operator+(const HomMatrix& a, const HomMatrix& b) {
  require_same_shape(a, b);
  HomMatrix out = a;
  for (std::size_t k = 0; k < out.entries_.size(); ++k) out.entries_[k] = a.entries_[k] + b.entries_[k];
  return out;
}

HomMatrix operator-(const HomMatrix& a, const HomMatrix& b) {
  require_same_shape(a, b);
  HomMatrix out = a;
  for (std::size_t k = 0; k < out.entries_.size(); ++k) out.entries_[k] = a.entries_[k] - b.entries_[k];
  return out;
}

HomMatrix operator*(const Scalar& s, const HomMatrix& m) {
  HomMatrix out = m;
  for (auto& e : out.entries_) e = s * e;
  return out;
}

bool operator==(const HomMatrix& a, const HomMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

std::string HomMatrix::to_string() const {
  std::ostringstream os;
  for (std::size_t r = 0; r < rows(); ++r) {
    os << "[";
    for (std::size_t c = 0; c < cols(); ++c) os << (c ? ", " : "") << at(r, c).to_string();
    os << "]";
  }
  return os.str();
}

HomMatrix compose(const LineAlgebra& alg, const HomMatrix& g, const HomMatrix& h) {
  if (g.col_labels() != h.row_labels()) throw CompositionError("compose: inner projective sums differ");
  HomMatrix out(g.field(), g.row_labels(), h.col_labels());
  for (std::size_t r = 0; r < g.rows(); ++r)
    for (std::size_t c = 0; c < h.cols(); ++c) {
      HomElement& acc = out.at(r, c);
      for (std::size_t m = 0; m < g.cols(); ++m) {
        const HomElement& x = g.at(r, m);
        const HomElement& y = h.at(m, c);
        if (x.is_zero() || y.is_zero()) continue;
        acc = acc + alg.compose(x, y);
      }
    }
  return out;
}

QuiverRep projective_sum(const LineAlgebra& alg, const std::vector<int>& summands) {
  if (summands.empty()) return QuiverRep::zero(alg.quiver());
  std::vector<QuiverRep> parts;
  for (int v : summands) parts.push_back(alg.projective(v));
  return direct_sum(parts);
}

RepMorphism realize(const LineAlgebra& alg, const HomMatrix& m) {
  const QuiverRep source = projective_sum(alg, m.col_labels());
  const QuiverRep target = projective_sum(alg, m.row_labels());
  RepMorphism out(source, target);
  for (int v = 1; v <= alg.n(); ++v) {
    Matrix& block = out.at(v);
    std::size_t r0 = 0;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      const std::size_t rdim = alg.projective(m.row_labels()[r]).dim(v);
      std::size_t c0 = 0;
      for (std::size_t c = 0; c < m.cols(); ++c) {
        const std::size_t cdim = alg.projective(m.col_labels()[c]).dim(v);
        if (!m.at(r, c).is_zero() && rdim > 0 && cdim > 0) block.set_block(r0, c0, alg.realize(m.at(r, c)).at(v));
        c0 += cdim;
      }
      r0 += rdim;
    }
  }
  return out;
}

}  // namespace extline
