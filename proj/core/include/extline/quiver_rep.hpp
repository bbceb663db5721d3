// Finite-dimensional representations of a quiver with relations, and the
// linear algebra on them that does not need to know which algebra we are in.
#ifndef EXTLINE_QUIVER_REP_HPP_
#define EXTLINE_QUIVER_REP_HPP_

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "extline/matrix.hpp"

namespace extline {

struct QuiverArrow {
  int source;  // 1-based vertex
  int target;
  std::string name;
};

/// A linear combination of paths; each path lists arrow ids in the order they are applied.
struct PathTerm {
  Scalar coefficient;
  std::vector<std::size_t> arrows;
};
using QuiverRelation = std::vector<PathTerm>;

struct BoundQuiver {
  FieldSpec field;
  int vertices = 0;
  std::vector<QuiverArrow> arrows;
  std::vector<QuiverRelation> relations;
};

class RepMorphism;

/// A representation: a vector space per vertex and a matrix per arrow.
/// Arrow matrices are (dim target) x (dim source).
class QuiverRep {
 public:
  QuiverRep(std::shared_ptr<const BoundQuiver> quiver, std::vector<std::size_t> dims);

  static QuiverRep zero(std::shared_ptr<const BoundQuiver> quiver);
  static QuiverRep simple(std::shared_ptr<const BoundQuiver> quiver, int vertex);

  const BoundQuiver& quiver() const noexcept { return *quiver_; }
  const std::shared_ptr<const BoundQuiver>& quiver_ptr() const noexcept { return quiver_; }
  const FieldSpec& field() const noexcept { return quiver_->field; }
  int vertices() const noexcept { return quiver_->vertices; }

  std::size_t dim(int vertex) const { return dims_.at(vertex - 1); }
  const std::vector<std::size_t>& dims() const noexcept { return dims_; }
  std::size_t total_dim() const;
  bool is_zero() const { return total_dim() == 0; }

  const Matrix& arrow(std::size_t id) const { return maps_.at(id); }
  void set_arrow(std::size_t id, Matrix m);

  /// Matrix of a path (arrow ids in application order) from its source space to its target space.
  Matrix path_map(const std::vector<std::size_t>& arrows) const;

  /// Empty string when every relation of the quiver acts as zero, otherwise a description.
  std::string relation_violation() const;
  bool satisfies_relations() const { return relation_violation().empty(); }

 private:
  std::shared_ptr<const BoundQuiver> quiver_;
  std::vector<std::size_t> dims_;
  std::vector<Matrix> maps_;
};

/// Per-vertex linear maps commuting with the arrows.
class RepMorphism {
 public:
  RepMorphism(const QuiverRep& source, const QuiverRep& target);
  RepMorphism(const QuiverRep& source, const QuiverRep& target, std::vector<Matrix> maps);

  static RepMorphism identity(const QuiverRep& m);

  const std::vector<std::size_t>& source_dims() const noexcept { return source_dims_; }
  const std::vector<std::size_t>& target_dims() const noexcept { return target_dims_; }
  const Matrix& at(int vertex) const { return maps_.at(vertex - 1); }
  Matrix& at(int vertex) { return maps_.at(vertex - 1); }
  const std::vector<Matrix>& maps() const noexcept { return maps_; }

  bool is_intertwiner(const QuiverRep& source, const QuiverRep& target) const;
  bool is_invertible() const;
  bool is_zero() const;

  /// this after other.
  RepMorphism after(const RepMorphism& other) const;

  friend RepMorphism operator+(const RepMorphism& a, const RepMorphism& b);
  friend RepMorphism operator*(const Scalar& s, const RepMorphism& f);
  friend bool operator==(const RepMorphism& a, const RepMorphism& b);

 private:
  std::vector<std::size_t> source_dims_;
  std::vector<std::size_t> target_dims_;
  std::vector<Matrix> maps_;
};

/// A subspace per vertex (columns of each matrix are a basis), assumed closed under the arrows.
struct VertexSubspaces {
  std::vector<Matrix> bases;
};

/// The representation on a submodule given by per-vertex bases, together with the inclusion.
struct Submodule {
  QuiverRep module;
  RepMorphism inclusion;
};
Submodule restrict_to(const QuiverRep& m, const VertexSubspaces& sub);

/// The quotient representation M / sub together with the projection.
struct Quotient {
  QuiverRep module;
  RepMorphism projection;
};
Quotient quotient_by(const QuiverRep& m, const VertexSubspaces& sub);

QuiverRep direct_sum(const std::vector<QuiverRep>& parts);

/// Per-vertex bases of the kernel and image of a morphism.
VertexSubspaces kernel_spaces(const RepMorphism& f);
VertexSubspaces image_spaces(const RepMorphism& f);

/// Basis of Hom(M, N): every solution of the intertwiner equations.
std::vector<RepMorphism> hom_space(const QuiverRep& m, const QuiverRep& n);

}  // namespace extline

#endif  // EXTLINE_QUIVER_REP_HPP_
