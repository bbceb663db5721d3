#include "extline/quiver_rep.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace extline {

QuiverRep::QuiverRep(std::shared_ptr<const BoundQuiver> quiver, std::vector<std::size_t> dims)
    : quiver_(std::move(quiver)), dims_(std::move(dims)) {
  if (static_cast<int>(dims_.size()) != quiver_->vertices) throw std::invalid_argument("QuiverRep: wrong number of vertices");
  maps_.reserve(quiver_->arrows.size());
  for (const auto& a : quiver_->arrows) maps_.emplace_back(quiver_->field, dim(a.target), dim(a.source));
}

QuiverRep QuiverRep::zero(std::shared_ptr<const BoundQuiver> quiver) {
  const auto n = static_cast<std::size_t>(quiver->vertices);
  return QuiverRep(std::move(quiver), std::vector<std::size_t>(n, 0));
}

QuiverRep QuiverRep::simple(std::shared_ptr<const BoundQuiver> quiver, int vertex) {
  std::vector<std::size_t> dims(static_cast<std::size_t>(quiver->vertices), 0);
  dims.at(vertex - 1) = 1;
  return QuiverRep(std::move(quiver), std::move(dims));
}

std::size_t QuiverRep::total_dim() const { return std::accumulate(dims_.begin(), dims_.end(), std::size_t{0}); }

void QuiverRep::set_arrow(std::size_t id, Matrix m) {
  const auto& a = quiver_->arrows.at(id);
  if (m.rows() != dim(a.target) || m.cols() != dim(a.source))
    throw std::invalid_argument("QuiverRep::set_arrow: shape mismatch for arrow " + a.name);
  maps_.at(id) = std::move(m);
}

Matrix QuiverRep::path_map(const std::vector<std::size_t>& arrows) const {
  if (arrows.empty()) throw std::invalid_argument("path_map: empty path");
  Matrix m = arrow(arrows.front());
  for (std::size_t k = 1; k < arrows.size(); ++k) m = arrow(arrows[k]) * m;
  return m;
}

std::string QuiverRep::relation_violation() const {
  for (std::size_t r = 0; r < quiver_->relations.size(); ++r) {
    const auto& rel = quiver_->relations[r];
    if (rel.empty()) continue;
    const auto& first = rel.front().arrows;
    const int src = quiver_->arrows.at(first.front()).source;
    const int tgt = quiver_->arrows.at(first.back()).target;
    Matrix sum(field(), dim(tgt), dim(src));
    for (const auto& term : rel) sum = sum + term.coefficient * path_map(term.arrows);
    if (!sum.is_zero()) {
      std::ostringstream os;
      os << "relation " << r << " (";
      for (std::size_t t = 0; t < rel.size(); ++t) {
        os << (t ? " + " : "") << rel[t].coefficient.to_string() << "*";
        for (auto id : rel[t].arrows) os << quiver_->arrows[id].name;
      }
      os << ") does not vanish";
      return os.str();
    }
  }
  return {};
}

RepMorphism::RepMorphism(const QuiverRep& source, const QuiverRep& target)
    : source_dims_(source.dims()), target_dims_(target.dims()) {
  for (int v = 1; v <= source.vertices(); ++v) maps_.emplace_back(source.field(), target.dim(v), source.dim(v));
}

RepMorphism::RepMorphism(const QuiverRep& source, const QuiverRep& target, std::vector<Matrix> maps)
    : source_dims_(source.dims()), target_dims_(target.dims()), maps_(std::move(maps)) {
  if (maps_.size() != source_dims_.size()) throw std::invalid_argument("RepMorphism: wrong number of vertex maps");
  for (std::size_t v = 0; v < maps_.size(); ++v)
    if (maps_[v].rows() != target_dims_[v] || maps_[v].cols() != source_dims_[v])
      throw std::invalid_argument("RepMorphism: vertex map shape mismatch");
}

RepMorphism RepMorphism::identity(const QuiverRep& m) {
  std::vector<Matrix> maps;
  for (int v = 1; v <= m.vertices(); ++v) maps.push_back(Matrix::identity(m.field(), m.dim(v)));
  return RepMorphism(m, m, std::move(maps));
}

bool RepMorphism::is_intertwiner(const QuiverRep& source, const QuiverRep& target) const {
  if (source.dims() != source_dims_ || target.dims() != target_dims_) return false;
  const auto& arrows = source.quiver().arrows;
  for (std::size_t a = 0; a < arrows.size(); ++a) {
    const auto& arr = arrows[a];
    if (!(target.arrow(a) * at(arr.source) == at(arr.target) * source.arrow(a))) return false;
  }
  return true;
}

bool RepMorphism::is_invertible() const {
  for (const auto& m : maps_) {
    if (m.rows() != m.cols()) return false;
    if (rank(m) != m.rows()) return false;
  }
  return true;
}

bool RepMorphism::is_zero() const {
  for (const auto& m : maps_)
    if (!m.is_zero()) return false;
  return true;
}

RepMorphism RepMorphism::after(const RepMorphism& other) const {
  if (other.target_dims_ != source_dims_) throw std::invalid_argument("RepMorphism::after: not composable");
  RepMorphism out = other;
  out.target_dims_ = target_dims_;
  for (std::size_t v = 0; v < maps_.size(); ++v) out.maps_[v] = maps_[v] * other.maps_[v];
  return out;
}

RepMorphism operator+(const RepMorphism& a, const RepMorphism& b) {
  if (a.source_dims_ != b.source_dims_ || a.target_dims_ != b.target_dims_)
    throw std::invalid_argument("RepMorphism sum: shape mismatch");
  RepMorphism out = a;
  for (std::size_t v = 0; v < out.maps_.size(); ++v) out.maps_[v] = a.maps_[v] + b.maps_[v];
  return out;
}

RepMorphism operator*(const Scalar& s, const RepMorphism& f) {
  RepMorphism out = f;
  for (auto& m : out.maps_) m = s * m;
  return out;
}

bool operator==(const RepMorphism& a, const RepMorphism& b) {
  return a.source_dims_ == b.source_dims_ && a.target_dims_ == b.target_dims_ && a.maps_ == b.maps_;
}

Submodule restrict_to(const QuiverRep& m, const VertexSubspaces& sub) {
  std::vector<std::size_t> dims;
  for (const auto& b : sub.bases) dims.push_back(b.cols());
  QuiverRep s(m.quiver_ptr(), dims);
  const auto& arrows = m.quiver().arrows;
  for (std::size_t a = 0; a < arrows.size(); ++a) {
    const Matrix& src = sub.bases.at(arrows[a].source - 1);
    const Matrix& tgt = sub.bases.at(arrows[a].target - 1);
    s.set_arrow(a, coordinates(tgt, m.arrow(a) * src));
  }
  RepMorphism inc(s, m, sub.bases);
  return {std::move(s), std::move(inc)};
}

namespace {

// Columns of the identity completing `basis` to a basis of the ambient space.
std::vector<std::size_t> complement_columns(const Matrix& basis) {
  const std::size_t n = basis.rows();
  const Echelon e = row_reduce(basis.hstack(Matrix::identity(basis.field(), n)));
  std::vector<std::size_t> out;
  for (auto p : e.pivots)
    if (p >= basis.cols()) out.push_back(p - basis.cols());
  return out;
}

}  // namespace

Quotient quotient_by(const QuiverRep& m, const VertexSubspaces& sub) {
  const FieldSpec& f = m.field();
  std::vector<std::size_t> dims;
  std::vector<Matrix> complements, projections;
  for (int v = 1; v <= m.vertices(); ++v) {
    const Matrix& b = sub.bases.at(v - 1);
    const auto cols = complement_columns(b);
    const Matrix ident = Matrix::identity(f, m.dim(v));
    Matrix comp = ident.select_columns(cols);
    const Matrix full = b.hstack(comp);
    const auto inv = inverse(full);
    if (!inv) throw std::logic_error("quotient_by: subspace basis is not independent");
    projections.push_back(inv->block(b.cols(), 0, comp.cols(), m.dim(v)));
    dims.push_back(comp.cols());
    complements.push_back(std::move(comp));
  }
  QuiverRep q(m.quiver_ptr(), dims);
  const auto& arrows = m.quiver().arrows;
  for (std::size_t a = 0; a < arrows.size(); ++a) {
    q.set_arrow(a, projections[arrows[a].target - 1] * m.arrow(a) * complements[arrows[a].source - 1]);
  }
  RepMorphism proj(m, q, projections);
  return {std::move(q), std::move(proj)};
}

QuiverRep direct_sum(const std::vector<QuiverRep>& parts) {
  if (parts.empty()) throw std::invalid_argument("direct_sum: no summands");
  const auto& quiver = parts.front().quiver_ptr();
  std::vector<std::size_t> dims(static_cast<std::size_t>(quiver->vertices), 0);
  for (const auto& p : parts)
    for (int v = 1; v <= quiver->vertices; ++v) dims[v - 1] += p.dim(v);
  QuiverRep out(quiver, dims);
  for (std::size_t a = 0; a < quiver->arrows.size(); ++a) {
    Matrix m = out.arrow(a);
    std::size_t r0 = 0, c0 = 0;
    for (const auto& p : parts) {
      m.set_block(r0, c0, p.arrow(a));
      r0 += p.arrow(a).rows();
      c0 += p.arrow(a).cols();
    }
    out.set_arrow(a, std::move(m));
  }
  return out;
}

VertexSubspaces kernel_spaces(const RepMorphism& f) {
  VertexSubspaces out;
  for (const auto& m : f.maps()) out.bases.push_back(kernel(m));
  return out;
}

VertexSubspaces image_spaces(const RepMorphism& f) {
  VertexSubspaces out;
  for (const auto& m : f.maps()) out.bases.push_back(column_space(m));
  return out;
}

std::vector<RepMorphism> hom_space(const QuiverRep& m, const QuiverRep& n) {
  const FieldSpec& f = m.field();
  const int verts = m.vertices();
  std::vector<std::size_t> offset(verts + 1, 0);
  for (int v = 1; v <= verts; ++v) offset[v] = offset[v - 1] + n.dim(v) * m.dim(v);
  const std::size_t unknowns = offset[verts];
  auto var = [&](int v, std::size_t r, std::size_t c) { return offset[v - 1] + r * m.dim(v) + c; };

  const auto& arrows = m.quiver().arrows;
  std::size_t equations = 0;
  for (const auto& a : arrows) equations += n.dim(a.target) * m.dim(a.source);
  Matrix sys(f, equations, unknowns);
  std::size_t row = 0;
  for (std::size_t id = 0; id < arrows.size(); ++id) {
    const int s = arrows[id].source, t = arrows[id].target;
    const Matrix& na = n.arrow(id);
    const Matrix& ma = m.arrow(id);
    // (N_a phi_s - phi_t M_a)[r][c] = 0
    for (std::size_t r = 0; r < n.dim(t); ++r)
      for (std::size_t c = 0; c < m.dim(s); ++c, ++row) {
        for (std::size_t p = 0; p < n.dim(s); ++p)
          if (!na(r, p).is_zero()) sys(row, var(s, p, c)) += na(r, p);
        for (std::size_t q = 0; q < m.dim(t); ++q)
          if (!ma(q, c).is_zero()) sys(row, var(t, r, q)) -= ma(q, c);
      }
  }
  const Matrix basis = kernel(sys);
  std::vector<RepMorphism> out;
  for (std::size_t j = 0; j < basis.cols(); ++j) {
    RepMorphism phi(m, n);
    for (int v = 1; v <= verts; ++v)
      for (std::size_t r = 0; r < n.dim(v); ++r)
        for (std::size_t c = 0; c < m.dim(v); ++c) phi.at(v)(r, c) = basis(var(v, r, c), j);
    out.push_back(std::move(phi));
  }
  return out;
}

}  // namespace extline
