// The Brauer tree algebra A_N of a line with N edges and no exceptional
// vertex, and the composition calculus of maps between its indecomposable
// projectives P_1, ..., P_N.
//
// A is presented by the quiver with arrows alpha_v : v -> v+1 and
// beta_v : v+1 -> v (for N = 1, a single loop x at vertex 1) subject to
//
//   alpha_{v+1} alpha_v = 0,  beta_v beta_{v+1} = 0,
//   beta_v alpha_v + alpha_{v-1} beta_{v-1} = 0   at interior vertices v,
//   every path of length three is zero            (x^2 = 0 when N = 1).
//
// This presentation is inferred from the Loewy structure of the projectives
// (head and socle S_i, heart S_{i-1} + S_{i+1}); dim A = 4N - 2.
//
// Maps between projectives are combinations of four kinds of basis maps:
//   Identity(i), Loop(i)  : P_i -> P_i
//   F(i)                  : P_i -> P_{i+1}
//   FStar(i)              : P_{i+1} -> P_i
// normalised so that FStar(i) o F(i) = Loop(i) for i < N and
// F(N-1) o FStar(N-1) = Loop(N). Then F(i) o FStar(i) = -Loop(i+1) for
// i + 1 < N, and the relation FStar(i) o F(i) + F(i-1) o FStar(i-1) = 0
// holds at every interior vertex.
#ifndef EXTLINE_LINE_ALGEBRA_HPP_
#define EXTLINE_LINE_ALGEBRA_HPP_

#include <array>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "extline/quiver_rep.hpp"

namespace extline {

class CompositionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

enum class GeneratorKind { Identity, Loop, F, FStar };

struct HomGenerator {
  GeneratorKind kind;
  int index;

  int source() const { return kind == GeneratorKind::FStar ? index + 1 : index; }
  int target() const { return kind == GeneratorKind::F ? index + 1 : index; }
  std::string name() const;
  friend bool operator==(const HomGenerator&, const HomGenerator&) = default;
};

/// dim Hom(P_i, P_j): 2 on the diagonal, 1 for neighbours, 0 otherwise.
int hom_dimension(int n, int i, int j);

/// An element of Hom(P_source, P_target), stored as coefficients on the
/// basis generators of that space (Identity then Loop on the diagonal, F or
/// FStar off it).
class HomElement {
 public:
  HomElement(FieldSpec field, int source, int target);

  static HomElement generator(FieldSpec field, HomGenerator g, Scalar coefficient);
  static HomElement generator(FieldSpec field, HomGenerator g) { return generator(field, g, field.one()); }

  int source() const noexcept { return source_; }
  int target() const noexcept { return target_; }
  const FieldSpec& field() const noexcept { return field_; }

  /// Number of basis generators of Hom(P_source, P_target) that can carry a coefficient.
  std::size_t slots() const noexcept { return slots_; }
  HomGenerator basis(std::size_t slot) const;
  const Scalar& coefficient(std::size_t slot) const { return coeffs_.at(slot); }
  Scalar& coefficient(std::size_t slot) { return coeffs_.at(slot); }
  /// Coefficient of a generator; zero when the generator is not in this hom space.
  Scalar coefficient_of(HomGenerator g) const;

  bool is_zero() const;
  std::string to_string() const;

  friend HomElement operator+(const HomElement& a, const HomElement& b);
  friend HomElement operator-(const HomElement& a, const HomElement& b);
  friend HomElement operator*(const Scalar& s, const HomElement& h);
  HomElement operator-() const;
  friend bool operator==(const HomElement& a, const HomElement& b);

 private:
  FieldSpec field_;
  int source_;
  int target_;
  std::size_t slots_;
  std::array<Scalar, 2> coeffs_;
};

/// A_N over a chosen field, with its bound quiver and projective modules.
class LineAlgebra {
 public:
  LineAlgebra(int n, FieldSpec field);

  int n() const noexcept { return n_; }
  const FieldSpec& field() const noexcept { return field_; }
  const std::shared_ptr<const BoundQuiver>& quiver() const noexcept { return quiver_; }

  /// Arrow ids in the bound quiver (N >= 2).
  std::size_t alpha(int v) const;
  std::size_t beta(int v) const;
  /// The loop arrow when N = 1.
  std::size_t loop() const;

  void check_vertex(int i) const;
  void check_generator(HomGenerator g) const;

  /// g o h (h acts first). Throws CompositionError when target(h) != source(g).
  HomElement compose(const HomElement& g, const HomElement& h) const;

  /// The sum of dim Hom(P_i, P_j) over all pairs, which is dim A.
  int basis_count() const;

  /// P_i as a representation. At vertex i the basis is (top, socle); the
  /// neighbouring vertices carry one vector each.
  const QuiverRep& projective(int i) const { check_vertex(i); return projectives_[i - 1]; }

  /// The unique intertwiner P_i -> M sending the top of P_i to the column vector w in M_i.
  RepMorphism hom_from_projective(int i, const QuiverRep& m, const Matrix& w) const;

  /// The concrete intertwiner P_source -> P_target represented by h.
  RepMorphism realize(const HomElement& h) const;

  HomElement identity(int i) const { return checked({GeneratorKind::Identity, i}); }
  HomElement loop(int i) const { return checked({GeneratorKind::Loop, i}); }
  HomElement f(int i) const { return checked({GeneratorKind::F, i}); }
  HomElement fstar(int i) const { return checked({GeneratorKind::FStar, i}); }
  HomElement zero(int source, int target) const { return HomElement(field_, source, target); }

 private:
  QuiverRep build_projective(int i) const;
  HomElement checked(HomGenerator g) const {
    check_generator(g);
    return HomElement::generator(field_, g);
  }

  int n_;
  FieldSpec field_;
  std::shared_ptr<const BoundQuiver> quiver_;
  std::vector<QuiverRep> projectives_;
};

}  // namespace extline

#endif  // EXTLINE_LINE_ALGEBRA_HPP_
