#include "extline/line_algebra.hpp"

#include <cstdlib>
#include <sstream>

namespace extline {

std::string HomGenerator::name() const {
  switch (kind) {
    case GeneratorKind::Identity: return "id" + std::to_string(index);
    case GeneratorKind::Loop: return "L" + std::to_string(index);
    case GeneratorKind::F: return "f" + std::to_string(index);
    case GeneratorKind::FStar: return "f" + std::to_string(index) + "*";
  }
  return "?";
}

int hom_dimension(int n, int i, int j) {
  if (i < 1 || i > n || j < 1 || j > n)
    throw std::out_of_range("hom_dimension: vertex out of range 1.." + std::to_string(n));
  const int d = std::abs(i - j);
  return d == 0 ? 2 : (d == 1 ? 1 : 0);
}

namespace {
std::size_t slots_for(int source, int target) {
  const int d = std::abs(source - target);
  return d == 0 ? 2 : (d == 1 ? 1 : 0);
}
}  // namespace

HomElement::HomElement(FieldSpec field, int source, int target)
    : field_(field), source_(source), target_(target), slots_(slots_for(source, target)),
      coeffs_{field.zero(), field.zero()} {}

HomElement HomElement::generator(FieldSpec field, HomGenerator g, Scalar coefficient) {
  HomElement h(field, g.source(), g.target());
  h.coeffs_[g.kind == GeneratorKind::Loop ? 1 : 0] = coefficient;
  return h;
}

HomGenerator HomElement::basis(std::size_t slot) const {
  if (slot >= slots_) throw std::out_of_range("HomElement::basis: slot out of range");
  if (source_ == target_) return {slot == 0 ? GeneratorKind::Identity : GeneratorKind::Loop, source_};
  if (target_ == source_ + 1) return {GeneratorKind::F, source_};
  return {GeneratorKind::FStar, target_};
}

Scalar HomElement::coefficient_of(HomGenerator g) const {
  for (std::size_t s = 0; s < slots_; ++s)
    if (basis(s) == g) return coeffs_[s];
  return field_.zero();
}

bool HomElement::is_zero() const { return coeffs_[0].is_zero() && coeffs_[1].is_zero(); }

std::string HomElement::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t s = 0; s < slots_; ++s) {
    const Scalar& c = coeffs_[s];
    if (c.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    if (!c.is_one()) os << (c == -field_.one() ? std::string("-") : c.to_string() + "*");
    os << basis(s).name();
  }
  return first ? "0" : os.str();
}

HomElement operator+(const HomElement& a, const HomElement& b) {
  if (a.source_ != b.source_ || a.target_ != b.target_) throw CompositionError("HomElement sum: endpoints differ");
  HomElement out = a;
  out.coeffs_[0] += b.coeffs_[0];
  out.coeffs_[1] += b.coeffs_[1];
  return out;
}

HomElement operator-(const HomElement& a, const HomElement& b) { return a + (-b); }

HomElement operator*(const Scalar& s, const HomElement& h) {
  HomElement out = h;
  out.coeffs_[0] *= s;
  out.coeffs_[1] *= s;
  return out;
}

HomElement HomElement::operator-() const {
  HomElement out = *this;
  out.coeffs_[0] = -out.coeffs_[0];
  out.coeffs_[1] = -out.coeffs_[1];
  return out;
}

bool operator==(const HomElement& a, const HomElement& b) {
  return a.source_ == b.source_ && a.target_ == b.target_ && a.coeffs_ == b.coeffs_;
}

LineAlgebra::LineAlgebra(int n, FieldSpec field) : n_(n), field_(field) {
  if (n < 1) throw std::invalid_argument("LineAlgebra: N must be at least 1");
  auto q = std::make_shared<BoundQuiver>();
  q->field = field;
  q->vertices = n;
  const Scalar one = field.one();
  if (n == 1) {
    q->arrows.push_back({1, 1, "x"});
    q->relations.push_back({{one, {0, 0}}});
  } else {
    for (int v = 1; v < n; ++v) {
      q->arrows.push_back({v, v + 1, "a" + std::to_string(v)});
      q->arrows.push_back({v + 1, v, "b" + std::to_string(v)});
    }
    auto a = [](int v) { return static_cast<std::size_t>(2 * (v - 1)); };
    auto b = [](int v) { return static_cast<std::size_t>(2 * (v - 1) + 1); };
    for (int v = 1; v + 1 < n; ++v) {
      q->relations.push_back({{one, {a(v), a(v + 1)}}});
      q->relations.push_back({{one, {b(v + 1), b(v)}}});
    }
    for (int v = 2; v < n; ++v) q->relations.push_back({{one, {a(v), b(v)}}, {one, {b(v - 1), a(v - 1)}}});
    // every composable path of length three
    const auto& arrows = q->arrows;
    for (std::size_t x = 0; x < arrows.size(); ++x)
      for (std::size_t y = 0; y < arrows.size(); ++y) {
        if (arrows[y].source != arrows[x].target) continue;
        for (std::size_t z = 0; z < arrows.size(); ++z)
          if (arrows[z].source == arrows[y].target) q->relations.push_back({{one, {x, y, z}}});
      }
  }
  quiver_ = std::move(q);
  for (int i = 1; i <= n; ++i) projectives_.push_back(build_projective(i));
}

std::size_t LineAlgebra::alpha(int v) const {
  if (n_ < 2 || v < 1 || v >= n_) throw std::out_of_range("alpha: index out of range");
  return static_cast<std::size_t>(2 * (v - 1));
}

std::size_t LineAlgebra::beta(int v) const {
  if (n_ < 2 || v < 1 || v >= n_) throw std::out_of_range("beta: index out of range");
  return static_cast<std::size_t>(2 * (v - 1) + 1);
}

std::size_t LineAlgebra::loop() const {
  if (n_ != 1) throw std::out_of_range("loop arrow exists only for N = 1");
  return 0;
}

void LineAlgebra::check_vertex(int i) const {
  if (i < 1 || i > n_) throw std::out_of_range("vertex " + std::to_string(i) + " out of range 1.." + std::to_string(n_));
}

void LineAlgebra::check_generator(HomGenerator g) const {
  const bool edge = g.kind == GeneratorKind::F || g.kind == GeneratorKind::FStar;
  const int hi = edge ? n_ - 1 : n_;
  if (g.index < 1 || g.index > hi) throw std::out_of_range("generator " + g.name() + " out of range");
}

HomElement LineAlgebra::compose(const HomElement& g, const HomElement& h) const {
  if (h.target() != g.source())
    throw CompositionError("compose: target of P" + std::to_string(h.target()) + " map does not match source P" +
                           std::to_string(g.source()));
  const int a = h.source(), b = h.target(), c = g.target();
  HomElement out(field_, a, c);
  if (a == b && b == c) {
    out.coefficient(0) = g.coefficient(0) * h.coefficient(0);
    out.coefficient(1) = g.coefficient(0) * h.coefficient(1) + g.coefficient(1) * h.coefficient(0);
  } else if (a == b) {
    if (out.slots() > 0) out.coefficient(0) = g.coefficient(0) * h.coefficient(0);
  } else if (b == c) {
    if (out.slots() > 0) out.coefficient(0) = h.coefficient(0) * g.coefficient(0);
  } else if (a == c) {
    // a -> b -> a through a neighbour lands on the loop at a
    Scalar sign = field_.one();
    if (a > b && a < n_) sign = -sign;  // F(b) o FStar(b) = -Loop(b+1) unless b+1 = N
    out.coefficient(1) = sign * g.coefficient(0) * h.coefficient(0);
  }
  return out;
}

int LineAlgebra::basis_count() const {
  int total = 0;
  for (int i = 1; i <= n_; ++i)
    for (int j = 1; j <= n_; ++j) total += hom_dimension(n_, i, j);
  return total;
}

QuiverRep LineAlgebra::build_projective(int i) const {
  std::vector<std::size_t> dims(static_cast<std::size_t>(n_), 0);
  dims[i - 1] = 2;
  if (i > 1) dims[i - 2] = 1;
  if (i < n_) dims[i] = 1;
  QuiverRep p(quiver_, dims);
  const Scalar one = field_.one();
  if (n_ == 1) {
    Matrix x(field_, 2, 2);
    x(1, 0) = one;
    p.set_arrow(loop(), x);
    return p;
  }
  if (i < n_) {
    Matrix up(field_, 1, 2);  // top -> neighbour above
    up(0, 0) = one;
    p.set_arrow(alpha(i), up);
    Matrix back(field_, 2, 1);  // neighbour above -> socle
    back(1, 0) = one;
    p.set_arrow(beta(i), back);
  }
  if (i > 1) {
    Matrix down(field_, 1, 2);
    down(0, 0) = one;
    p.set_arrow(beta(i - 1), down);
    Matrix back(field_, 2, 1);
    back(1, 0) = -one;
    p.set_arrow(alpha(i - 1), back);
  }
  return p;
}

RepMorphism LineAlgebra::hom_from_projective(int i, const QuiverRep& m, const Matrix& w) const {
  check_vertex(i);
  if (w.rows() != m.dim(i) || w.cols() != 1) throw std::invalid_argument("hom_from_projective: w must be a vector in M_i");
  const QuiverRep& p = projective(i);
  RepMorphism phi(p, m);
  Matrix socle_image(field_, m.dim(i), 1);
  if (n_ == 1) {
    socle_image = m.arrow(loop()) * w;
  } else if (i < n_) {
    socle_image = m.arrow(beta(i)) * (m.arrow(alpha(i)) * w);
  } else {
    socle_image = -field_.one() * (m.arrow(alpha(i - 1)) * (m.arrow(beta(i - 1)) * w));
  }
  phi.at(i) = w.hstack(socle_image);
  if (n_ >= 2 && i < n_) phi.at(i + 1) = m.arrow(alpha(i)) * w;
  if (n_ >= 2 && i > 1) phi.at(i - 1) = m.arrow(beta(i - 1)) * w;
  return phi;
}

RepMorphism LineAlgebra::realize(const HomElement& h) const {
  check_vertex(h.source());
  check_vertex(h.target());
  const QuiverRep& target = projective(h.target());
  const int i = h.source();
  Matrix w(field_, target.dim(i), 1);
  for (std::size_t s = 0; s < h.slots(); ++s) {
    const Scalar& c = h.coefficient(s);
    if (c.is_zero()) continue;
    const HomGenerator g = h.basis(s);
    switch (g.kind) {
      case GeneratorKind::Identity: w(0, 0) += c; break;
      // Loop(N) is F(N-1) o FStar(N-1), which sends the top to minus the socle vector
      case GeneratorKind::Loop: w(1, 0) += (n_ >= 2 && i == n_) ? -c : c; break;
      case GeneratorKind::F:
      case GeneratorKind::FStar: w(0, 0) += c; break;
    }
  }
  return hom_from_projective(i, target, w);
}

}  // namespace extline
