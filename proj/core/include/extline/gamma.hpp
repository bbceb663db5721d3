// The graded path algebra Gamma = kQ / <I> on the quiver with arrows
//   x_i  : i -> i+1      (degree 1, 1 <= i <= N-1)
//   x_i* : i+1 -> i      (degree 1)
//   y_i  : i -> N+1-i    (degree N, 1 <= i <= N)
// and the relators
//   (a) x_1 x_1*, x_{N-1}* x_{N-1}
//   (b) x_i* x_i - x_{i+1} x_{i+1}*
//   (c) x_i y_{i+1} - y_i x_{N-i}*
//   (d) x_i* y_i - y_{i+1} x_{N-i}
// Words are written in concatenation order: the leftmost arrow is traversed
// first. evaluate_word turns a word into a Yoneda composite, which is the
// only place where the order flips.
#ifndef EXTLINE_GAMMA_HPP_
#define EXTLINE_GAMMA_HPP_

#include <optional>
#include <string>
#include <vector>

#include "extline/matrix.hpp"
#include "extline/yoneda.hpp"

namespace extline {

enum class ArrowKind { X, XStar, Y };

struct Arrow {
  ArrowKind kind;
  int index;

  friend bool operator==(const Arrow&, const Arrow&) = default;
};

class QuiverQ {
 public:
  explicit QuiverQ(int n);

  int n() const noexcept { return n_; }
  /// x_1 .. x_{N-1}, x_1* .. x_{N-1}*, y_1 .. y_N.
  const std::vector<Arrow>& arrows() const noexcept { return arrows_; }

  int source(const Arrow& a) const;
  int target(const Arrow& a) const;
  int degree(const Arrow& a) const;
  /// Throws std::out_of_range for an index outside the quiver.
  void check(const Arrow& a) const;
  std::string name(const Arrow& a) const;

 private:
  int n_;
  std::vector<Arrow> arrows_;
};

class PathWord {
 public:
  /// The trivial path e_v.
  PathWord(const QuiverQ& q, int vertex);
  /// Throws std::invalid_argument if consecutive arrows do not meet.
  PathWord(const QuiverQ& q, std::vector<Arrow> arrows);

  /// "x1 x2* y3"; "e2" for the trivial path at vertex 2.
  static PathWord parse(const QuiverQ& q, const std::string& text);

  int source() const noexcept { return source_; }
  int target() const noexcept { return target_; }
  int degree() const noexcept { return degree_; }
  const std::vector<Arrow>& arrows() const noexcept { return arrows_; }
  bool empty() const noexcept { return arrows_.empty(); }

  /// Concatenation: this path, then `next`.
  PathWord then(const PathWord& next) const;

  std::string to_string() const;
  friend bool operator==(const PathWord&, const PathWord&) = default;

 private:
  int n_;
  int source_;
  int target_;
  int degree_ = 0;
  std::vector<Arrow> arrows_;
};

struct Relator {
  std::string family;  // "a" .. "d"
  std::string name;
  std::vector<std::pair<int, PathWord>> terms;

  int source() const { return terms.front().second.source(); }
  int target() const { return terms.front().second.target(); }
  int degree() const { return terms.front().second.degree(); }
  std::string to_string() const;
};

class RelatorSet {
 public:
  explicit RelatorSet(const QuiverQ& q);
  RelatorSet(const QuiverQ& q, std::vector<Relator> relators) : q_(q), rels_(std::move(relators)) {}

  const QuiverQ& quiver() const noexcept { return q_; }
  const std::vector<Relator>& relators() const noexcept { return rels_; }
  RelatorSet without_family(const std::string& family) const;

 private:
  QuiverQ q_;
  std::vector<Relator> rels_;
};

/// dim Gamma_k(i -> j) for 0 <= k <= K.
class GradedDims {
 public:
  GradedDims(int n, int max_degree);

  int n() const noexcept { return n_; }
  int max_degree() const noexcept { return max_degree_; }
  int at(int i, int j, int k) const;
  int& at(int i, int j, int k);
  std::vector<int> row(int i, int j) const;

  friend bool operator==(const GradedDims&, const GradedDims&) = default;

 private:
  int n_;
  int max_degree_;
  std::vector<int> dims_;
};

/// The graded components of Gamma up to degree K, built one degree at a time.
/// Degree k of (i -> j) is the span of (degree k - deg a component) x a over
/// arrows a ending at j, modulo the images of (degree k - deg r component) x r
/// over relators r ending at j.
class GammaQuotient {
 public:
  GammaQuotient(const RelatorSet& rels, int max_degree, FieldSpec field);

  const QuiverQ& quiver() const noexcept { return rels_.quiver(); }
  int max_degree() const noexcept { return max_degree_; }
  const FieldSpec& field() const noexcept { return field_; }
  GradedDims dims() const;

  /// Coordinates (a column) of the class of w in Gamma_k(source -> target).
  Matrix reduce(const PathWord& w) const;
  bool is_zero(const PathWord& w) const { return reduce(w).is_zero(); }

 private:
  struct Block {
    Arrow arrow;
    int from;  // source vertex of the arrow
    std::size_t offset;
    std::size_t size;
  };
  struct Component {
    std::size_t dim = 0;
    std::size_t free_dim = 0;
    std::vector<Block> blocks;
    Matrix projection{FieldSpec(2), 0, 0};  // dim x free_dim
  };

  Component& comp(int i, int j, int k);
  const Component& comp(int i, int j, int k) const;
  void build_component(int i, int j, int k);
  /// Class of (element of degree k, i -> src a) x a in degree k + deg a.
  Matrix times_arrow(int i, int k, const Matrix& v, int from, const Arrow& a) const;
  /// Places (element of degree k, i -> src a) x a into the free module of degree k + deg a.
  Matrix embed(int i, int k, const Matrix& v, int from, const Arrow& a) const;

  RelatorSet rels_;
  int max_degree_;
  FieldSpec field_;
  std::vector<Component> comps_;
};

GradedDims graded_dimension(const RelatorSet& rels, int max_degree, FieldSpec field = FieldSpec(2));

/// The canonical word of Ext^k(S_i, S_j) when it is nonzero: y_i if k mod 2N >= N,
/// then the hook x_a .. x_{r-1} x_{r-1}* .. x_b*, then (k div 2N) pairs y_b y_{N+1-b}.
std::optional<PathWord> normal_form_monomial(int n, int i, int j, int k);

struct WordEvaluation {
  PathWord word;
  ExtClass value;
  NullHomotopyResult verdict;
};

/// The Yoneda composite A_m o ... o A_1 of a word a_1 ... a_m, with its verdict.
WordEvaluation evaluate_word(const ResolutionSet& rs, const PathWord& w);

/// sum c_t evaluate(w_t) as a single chain map.
ChainMap evaluate_relator(const ResolutionSet& rs, const Relator& r);

struct GammaCheck {
  std::string kind;  // "dimension", "relator", "normal_form"
  std::string name;
  int i;
  int j;
  int k;
  bool passed;
  std::string detail;
};

struct MainTheoremReport {
  std::vector<GammaCheck> checks;
  bool ok() const;
  std::size_t failures() const;
};

/// Compares graded_dimension with the Ext table, evaluates every relator and
/// every normal-form monomial of degree <= K.
MainTheoremReport verify_main_theorem(const ResolutionSet& rs, int max_degree);

}  // namespace extline

#endif  // EXTLINE_GAMMA_HPP_
