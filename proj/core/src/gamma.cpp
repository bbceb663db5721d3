#include "extline/gamma.hpp"

#include <algorithm>
#include <climits>
#include <cstdint>
#include <sstream>
#include <stdexcept>

#include "extline/ext_poincare.hpp"
#include "extline/parallel.hpp"

namespace extline {

QuiverQ::QuiverQ(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("QuiverQ: N must be positive");
  for (int i = 1; i < n; ++i) arrows_.push_back({ArrowKind::X, i});
  for (int i = 1; i < n; ++i) arrows_.push_back({ArrowKind::XStar, i});
  for (int i = 1; i <= n; ++i) arrows_.push_back({ArrowKind::Y, i});
}

void QuiverQ::check(const Arrow& a) const {
  const int hi = a.kind == ArrowKind::Y ? n_ : n_ - 1;
  if (a.index < 1 || a.index > hi) throw std::out_of_range("QuiverQ: no arrow " + name(a));
}

int QuiverQ::source(const Arrow& a) const {
  check(a);
  return a.kind == ArrowKind::XStar ? a.index + 1 : a.index;
}

int QuiverQ::target(const Arrow& a) const {
  check(a);
  switch (a.kind) {
    case ArrowKind::X: return a.index + 1;
    case ArrowKind::XStar: return a.index;
    case ArrowKind::Y: break;
  }
  return n_ + 1 - a.index;
}

int QuiverQ::degree(const Arrow& a) const {
  check(a);
  return a.kind == ArrowKind::Y ? n_ : 1;
}

std::string QuiverQ::name(const Arrow& a) const {
  switch (a.kind) {
    case ArrowKind::X: return "x" + std::to_string(a.index);
    case ArrowKind::XStar: return "x" + std::to_string(a.index) + "*";
    case ArrowKind::Y: break;
  }
  return "y" + std::to_string(a.index);
}

PathWord::PathWord(const QuiverQ& q, int vertex) : n_(q.n()), source_(vertex), target_(vertex) {
  if (vertex < 1 || vertex > q.n()) throw std::out_of_range("PathWord: vertex out of range");
}

PathWord::PathWord(const QuiverQ& q, std::vector<Arrow> arrows) : n_(q.n()), arrows_(std::move(arrows)) {
  if (arrows_.empty()) throw std::invalid_argument("PathWord: use the vertex constructor for a trivial path");
  source_ = q.source(arrows_.front());
  int at = source_;
  for (const Arrow& a : arrows_) {
    if (q.source(a) != at)
      throw std::invalid_argument("PathWord: " + q.name(a) + " does not start at vertex " + std::to_string(at));
    at = q.target(a);
    degree_ += q.degree(a);
  }
  target_ = at;
}

PathWord PathWord::parse(const QuiverQ& q, const std::string& text) {
  std::istringstream in(text);
  std::string tok;
  std::vector<Arrow> arrows;
  std::optional<int> trivial;
  auto number = [&](const std::string& s) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("PathWord: cannot parse '" + tok + "'");
    return std::stoi(s);
  };
  while (in >> tok) {
    if (tok[0] == 'e') {
      trivial = number(tok.substr(1));
      continue;
    }
    Arrow a{};
    std::string body = tok.substr(1);
    if (tok[0] == 'y') {
      a.kind = ArrowKind::Y;
    } else if (tok[0] == 'x' && !body.empty() && body.back() == '*') {
      a.kind = ArrowKind::XStar;
      body.pop_back();
    } else if (tok[0] == 'x') {
      a.kind = ArrowKind::X;
    } else {
      throw std::invalid_argument("PathWord: cannot parse '" + tok + "'");
    }
    a.index = number(body);
    arrows.push_back(a);
  }
  if (trivial) {
    if (!arrows.empty()) throw std::invalid_argument("PathWord: trivial path mixed with arrows");
    return PathWord(q, *trivial);
  }
  if (arrows.empty()) throw std::invalid_argument("PathWord: empty input");
  return PathWord(q, std::move(arrows));
}

PathWord PathWord::then(const PathWord& next) const {
  if (target_ != next.source_) throw std::invalid_argument("PathWord: paths do not meet");
  if (arrows_.empty()) return next;
  if (next.arrows_.empty()) return *this;
  std::vector<Arrow> all = arrows_;
  all.insert(all.end(), next.arrows_.begin(), next.arrows_.end());
  return PathWord(QuiverQ(n_), std::move(all));
}

std::string PathWord::to_string() const {
  if (arrows_.empty()) return "e" + std::to_string(source_);
  const QuiverQ q(n_);
  std::string out;
  for (const Arrow& a : arrows_) out += (out.empty() ? "" : " ") + q.name(a);
  return out;
}

std::string Relator::to_string() const {
  std::string out;
  for (const auto& [c, w] : terms) {
    if (out.empty())
      out = (c < 0 ? "-" : "");
    else
      out += c < 0 ? " - " : " + ";
    out += w.to_string();
  }
  return out;
}

RelatorSet::RelatorSet(const QuiverQ& q) : q_(q) {
  const int n = q.n();
  auto word = [&](std::vector<Arrow> a) { return PathWord(q, std::move(a)); };
  auto add = [&](std::string family, std::vector<std::pair<int, PathWord>> terms) {
    Relator r{std::move(family), "", std::move(terms)};
    r.name = r.to_string();
    rels_.push_back(std::move(r));
  };
  using K = ArrowKind;
  if (n >= 2) {
    add("a", {{1, word({{K::X, 1}, {K::XStar, 1}})}});
    add("a", {{1, word({{K::XStar, n - 1}, {K::X, n - 1}})}});
  }
  for (int i = 1; i <= n - 2; ++i)
    add("b", {{1, word({{K::XStar, i}, {K::X, i}})}, {-1, word({{K::X, i + 1}, {K::XStar, i + 1}})}});
  for (int i = 1; i <= n - 1; ++i)
    add("c", {{1, word({{K::X, i}, {K::Y, i + 1}})}, {-1, word({{K::Y, i}, {K::XStar, n - i}})}});
  for (int i = 1; i <= n - 1; ++i)
    add("d", {{1, word({{K::XStar, i}, {K::Y, i}})}, {-1, word({{K::Y, i + 1}, {K::X, n - i}})}});
}

RelatorSet RelatorSet::without_family(const std::string& family) const {
  RelatorSet out = *this;
  std::erase_if(out.rels_, [&](const Relator& r) { return r.family == family; });
  return out;
}

GradedDims::GradedDims(int n, int max_degree)
    : n_(n), max_degree_(max_degree), dims_(static_cast<std::size_t>(n * n * (max_degree + 1)), 0) {}

int GradedDims::at(int i, int j, int k) const {
  if (i < 1 || i > n_ || j < 1 || j > n_ || k < 0 || k > max_degree_) throw std::out_of_range("GradedDims: index");
  return dims_[static_cast<std::size_t>((k * n_ + i - 1) * n_ + j - 1)];
}

int& GradedDims::at(int i, int j, int k) {
  if (i < 1 || i > n_ || j < 1 || j > n_ || k < 0 || k > max_degree_) throw std::out_of_range("GradedDims: index");
  return dims_[static_cast<std::size_t>((k * n_ + i - 1) * n_ + j - 1)];
}

std::vector<int> GradedDims::row(int i, int j) const {
  std::vector<int> out;
  for (int k = 0; k <= max_degree_; ++k) out.push_back(at(i, j, k));
  return out;
}

GammaQuotient::GammaQuotient(const RelatorSet& rels, int max_degree, FieldSpec field)
    : rels_(rels), max_degree_(max_degree), field_(field) {
  if (max_degree < 0) throw std::invalid_argument("GammaQuotient: negative degree bound");
  const int n = quiver().n();
  comps_.resize(static_cast<std::size_t>(n * n * (max_degree + 1)));
  for (int i = 1; i <= n; ++i) {
    Component& c = comp(i, i, 0);
    c.dim = c.free_dim = 1;
    c.projection = Matrix::identity(field_, 1);
  }
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (i != j) comp(i, j, 0).projection = Matrix(field_, 0, 0);
  for (int k = 1; k <= max_degree; ++k)
    parallel_for(static_cast<std::size_t>(n * n), [&](std::size_t t) {
      build_component(static_cast<int>(t) / n + 1, static_cast<int>(t) % n + 1, k);
    });
}

GammaQuotient::Component& GammaQuotient::comp(int i, int j, int k) {
  const int n = quiver().n();
  return comps_[static_cast<std::size_t>((k * n + i - 1) * n + j - 1)];
}

const GammaQuotient::Component& GammaQuotient::comp(int i, int j, int k) const {
  const int n = quiver().n();
  return comps_[static_cast<std::size_t>((k * n + i - 1) * n + j - 1)];
}

Matrix GammaQuotient::embed(int i, int k, const Matrix& v, int from, const Arrow& a) const {
  const QuiverQ& q = quiver();
  const Component& c = comp(i, q.target(a), k + q.degree(a));
  for (const Block& b : c.blocks)
    if (b.arrow == a && b.from == from) {
      Matrix out(field_, c.free_dim, 1);
      out.set_block(b.offset, 0, v);
      return out;
    }
  throw std::logic_error("GammaQuotient: arrow block missing");
}

Matrix GammaQuotient::times_arrow(int i, int k, const Matrix& v, int from, const Arrow& a) const {
  const QuiverQ& q = quiver();
  return comp(i, q.target(a), k + q.degree(a)).projection * embed(i, k, v, from, a);
}

void GammaQuotient::build_component(int i, int j, int k) {
  const QuiverQ& q = quiver();
  Component& c = comp(i, j, k);
  for (const Arrow& a : q.arrows()) {
    if (q.target(a) != j || q.degree(a) > k) continue;
    const int from = q.source(a);
    const std::size_t size = comp(i, from, k - q.degree(a)).dim;
    c.blocks.push_back({a, from, c.free_dim, size});
    c.free_dim += size;
  }

  std::vector<Matrix> images;
  for (const Relator& r : rels_.relators()) {
    if (r.target() != j || r.degree() > k) continue;
    const int base = k - r.degree();
    const std::size_t count = comp(i, r.source(), base).dim;
    for (std::size_t e = 0; e < count; ++e) {
      Matrix total(field_, c.free_dim, 1);
      for (const auto& [coef, w] : r.terms) {
        Matrix v(field_, count, 1);
        v(e, 0) = field_.one();
        int deg = base;
        int at = r.source();
        const auto& arrows = w.arrows();
        for (std::size_t t = 0; t + 1 < arrows.size(); ++t) {
          v = times_arrow(i, deg, v, at, arrows[t]);
          deg += q.degree(arrows[t]);
          at = q.target(arrows[t]);
        }
        total = total + field_.from_int(coef) * embed(i, deg, v, at, arrows.back());
      }
      images.push_back(std::move(total));
    }
  }

  std::vector<std::size_t> pivot_row(c.free_dim, SIZE_MAX);
  Matrix reduced(field_, 0, c.free_dim);
  if (!images.empty()) {
    Matrix rows(field_, images.size(), c.free_dim);
    for (std::size_t r = 0; r < images.size(); ++r)
      for (std::size_t col = 0; col < c.free_dim; ++col) rows(r, col) = images[r](col, 0);
    Echelon ech = row_reduce(std::move(rows));
    for (std::size_t r = 0; r < ech.pivots.size(); ++r) pivot_row[ech.pivots[r]] = r;
    reduced = std::move(ech.reduced);
  }
  std::vector<std::size_t> basis;
  for (std::size_t col = 0; col < c.free_dim; ++col)
    if (pivot_row[col] == SIZE_MAX) basis.push_back(col);
  c.dim = basis.size();
  c.projection = Matrix(field_, c.dim, c.free_dim);
  for (std::size_t b = 0; b < basis.size(); ++b) c.projection(b, basis[b]) = field_.one();
  for (std::size_t col = 0; col < c.free_dim; ++col) {
    if (pivot_row[col] == SIZE_MAX) continue;
    for (std::size_t b = 0; b < basis.size(); ++b) c.projection(b, col) = -reduced(pivot_row[col], basis[b]);
  }
}

GradedDims GammaQuotient::dims() const {
  const int n = quiver().n();
  GradedDims out(n, max_degree_);
  for (int k = 0; k <= max_degree_; ++k)
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) out.at(i, j, k) = static_cast<int>(comp(i, j, k).dim);
  return out;
}

Matrix GammaQuotient::reduce(const PathWord& w) const {
  if (w.degree() > max_degree_) throw std::out_of_range("GammaQuotient::reduce: word above the degree bound");
  const QuiverQ& q = quiver();
  Matrix v = Matrix::identity(field_, 1);
  int deg = 0;
  int at = w.source();
  for (const Arrow& a : w.arrows()) {
    v = times_arrow(w.source(), deg, v, at, a);
    deg += q.degree(a);
    at = q.target(a);
  }
  return v;
}

GradedDims graded_dimension(const RelatorSet& rels, int max_degree, FieldSpec field) {
  return GammaQuotient(rels, max_degree, field).dims();
}

std::optional<PathWord> normal_form_monomial(int n, int i, int j, int k) {
  const QuiverQ q(n);
  if (i < 1 || i > n || j < 1 || j > n || k < 0) throw std::out_of_range("normal_form_monomial: index");
  if (ext_dim_via_x(n, i, j, k) == 0) return std::nullopt;
  const int residue = k % (2 * n);
  const int pairs = k / (2 * n);
  std::vector<Arrow> arrows;
  int start = i;
  int hook = residue;
  if (residue >= n) {
    arrows.push_back({ArrowKind::Y, i});
    start = n + 1 - i;
    hook = residue - n;
  }
  const int twice_top = hook + start + j;
  const int top = twice_top / 2;
  if (twice_top % 2 != 0 || top < std::max(start, j) || top > n)
    throw std::logic_error("normal_form_monomial: no hook word for (" + std::to_string(i) + "," + std::to_string(j) +
                           "," + std::to_string(k) + ")");
  for (int v = start; v < top; ++v) arrows.push_back({ArrowKind::X, v});
  for (int v = top - 1; v >= j; --v) arrows.push_back({ArrowKind::XStar, v});
  for (int p = 0; p < pairs; ++p) {
    arrows.push_back({ArrowKind::Y, j});
    arrows.push_back({ArrowKind::Y, n + 1 - j});
  }
  if (arrows.empty()) return PathWord(q, i);
  return PathWord(q, std::move(arrows));
}

namespace {

ChainMap arrow_map(const ResolutionSet& rs, const Arrow& a) {
  switch (a.kind) {
    case ArrowKind::X: return generator_x(rs, a.index);
    case ArrowKind::XStar: return generator_xstar(rs, a.index);
    case ArrowKind::Y: break;
  }
  return generator_y(rs, a.index);
}

ChainMap word_map(const ResolutionSet& rs, const PathWord& w) {
  const LineAlgebra& alg = rs.algebra();
  if (w.empty()) return identity_map(alg, rs.at(w.source()));
  ChainMap out = arrow_map(rs, w.arrows().front());
  for (std::size_t t = 1; t < w.arrows().size(); ++t) out = compose(alg, arrow_map(rs, w.arrows()[t]), out);
  return out;
}

}  // namespace

WordEvaluation evaluate_word(const ResolutionSet& rs, const PathWord& w) {
  if (w.source() > rs.algebra().n() || w.target() > rs.algebra().n())
    throw std::invalid_argument("evaluate_word: word and resolutions disagree on N");
  ChainMap f = word_map(rs, w);
  NullHomotopyResult verdict = null_homotopy(rs.algebra(), f);
  return {w, ExtClass{w.source(), w.target(), w.degree(), std::move(f)}, std::move(verdict)};
}

ChainMap evaluate_relator(const ResolutionSet& rs, const Relator& r) {
  const FieldSpec& f = rs.algebra().field();
  std::optional<ChainMap> total;
  for (const auto& [c, w] : r.terms) {
    ChainMap term = f.from_int(c) * word_map(rs, w);
    total = total ? *total + term : term;
  }
  return *total;
}

bool MainTheoremReport::ok() const { return failures() == 0; }

std::size_t MainTheoremReport::failures() const {
  std::size_t bad = 0;
  for (const auto& c : checks) bad += c.passed ? 0 : 1;
  return bad;
}

MainTheoremReport verify_main_theorem(const ResolutionSet& rs, int max_degree) {
  const LineAlgebra& alg = rs.algebra();
  const int n = alg.n();
  const QuiverQ q(n);
  const RelatorSet rels(q);
  MainTheoremReport report;

  const ExtTable table = ext_table(n, max_degree);
  const GradedDims dims = graded_dimension(rels, max_degree, alg.field());
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 0; k <= max_degree; ++k) {
        const int g = dims.at(i, j, k);
        const int e = table.at(i, j, k);
        report.checks.push_back({"dimension", "dim Gamma_k(i,j) = dim Ext^k(S_i,S_j)", i, j, k, g == e,
                                 "gamma " + std::to_string(g) + ", ext " + std::to_string(e)});
      }

  std::vector<GammaCheck> rel_checks(rels.relators().size());
  parallel_for(rel_checks.size(), [&](std::size_t t) {
    const Relator& r = rels.relators()[t];
    const NullHomotopyResult res = null_homotopy(alg, evaluate_relator(rs, r));
    rel_checks[t] = {"relator", "(" + r.family + ") " + r.name, r.source(), r.target(), r.degree(),
                     res.null_homotopic(), res.detail};
  });
  report.checks.insert(report.checks.end(), rel_checks.begin(), rel_checks.end());

  std::vector<PathWord> words;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 0; k <= max_degree; ++k)
        if (auto w = normal_form_monomial(n, i, j, k)) words.push_back(*w);
  std::vector<GammaCheck> nf_checks(words.size());
  parallel_for(words.size(), [&](std::size_t t) {
    const WordEvaluation ev = evaluate_word(rs, words[t]);
    const bool nonzero = ev.verdict.verdict == HomotopyVerdict::NotNullHomotopic;
    nf_checks[t] = {"normal_form", words[t].to_string(), words[t].source(), words[t].target(), words[t].degree(), nonzero,
                    ev.verdict.detail};
  });
  report.checks.insert(report.checks.end(), nf_checks.begin(), nf_checks.end());
  return report;
}

}  // namespace extline
