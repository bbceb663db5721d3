#include "extline/yoneda.hpp"

#include <algorithm>
#include <stdexcept>

#include "extline/ext_poincare.hpp"

namespace extline {

namespace {

bool same_complex(const PeriodicComplex& a, const PeriodicComplex& b) {
  return a.n() == b.n() && a.vertex() == b.vertex();
}

HomMatrix zero_map(const FieldSpec& f, const PSum& source, const PSum& target) {
  return HomMatrix(f, target.indices(), source.indices());
}

/// Coordinates of a HomMatrix: entries row-major, slots within each entry.
std::vector<Scalar> flatten(const HomMatrix& m) {
  std::vector<Scalar> out;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      for (std::size_t s = 0; s < m.at(r, c).slots(); ++s) out.push_back(m.at(r, c).coefficient(s));
  return out;
}

void unflatten(HomMatrix& m, const Matrix& x, std::size_t offset) {
  std::size_t pos = offset;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      for (std::size_t s = 0; s < m.at(r, c).slots(); ++s) m.at(r, c).coefficient(s) = x(pos++, 0);
}

/// The HomMatrix of a given shape with a single coefficient 1 at position `pos`.
HomMatrix unit_map(const FieldSpec& f, const PSum& source, const PSum& target, std::size_t pos) {
  HomMatrix m = zero_map(f, source, target);
  std::size_t seen = 0;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      for (std::size_t s = 0; s < m.at(r, c).slots(); ++s)
        if (seen++ == pos) {
          m.at(r, c).coefficient(s) = f.one();
          return m;
        }
  throw std::out_of_range("unit_map: position beyond the coefficient count");
}

/// Linear system over blocks of unknowns indexed by degree. Each unknown
/// block is a HomMatrix of fixed shape; equations are grouped by degree.
class BlockSystem {
 public:
  explicit BlockSystem(FieldSpec f) : field_(f) {}

  std::size_t add_unknown_block(int degree, PSum source, PSum target) {
    const std::size_t offset = unknowns_;
    blocks_.push_back({degree, source, target, offset});
    unknowns_ += zero_map(field_, source, target).slot_count();
    return blocks_.size() - 1;
  }

  std::size_t add_equation_block(PSum source, PSum target) {
    const std::size_t offset = equations_;
    eq_blocks_.push_back({0, source, target, offset});
    equations_ += zero_map(field_, source, target).slot_count();
    return eq_blocks_.size() - 1;
  }

  struct Block {
    int degree;
    PSum source;
    PSum target;
    std::size_t offset;
  };
  const Block& unknown(std::size_t b) const { return blocks_[b]; }
  std::size_t unknown_count() const { return unknowns_; }
  std::size_t equation_count() const { return equations_; }

  /// Adds, for every unit in unknown block `u`, the image `op(unit)` into equation block `e`.
  template <class Op>
  void couple(std::size_t u, std::size_t e, Op op) {
    const Block& ub = blocks_[u];
    const Block& eb = eq_blocks_[e];
    const std::size_t count = zero_map(field_, ub.source, ub.target).slot_count();
    for (std::size_t pos = 0; pos < count; ++pos) {
      const HomMatrix img = op(unit_map(field_, ub.source, ub.target, pos));
      const auto coords = flatten(img);
      for (std::size_t q = 0; q < coords.size(); ++q)
        if (!coords[q].is_zero()) entries_.push_back({eb.offset + q, ub.offset + pos, coords[q]});
    }
  }

  /// The right-hand side of equation block `e`.
  void set_rhs(std::size_t e, const HomMatrix& value) { rhs_.push_back({e, value}); }

  Matrix matrix(std::size_t extra_cols = 0) const {
    Matrix a(field_, equations_, unknowns_ + extra_cols);
    for (const auto& t : entries_) a(t.row, t.col) = a(t.row, t.col) + t.value;
    return a;
  }

  Matrix rhs() const {
    Matrix b(field_, equations_, 1);
    for (const auto& [e, value] : rhs_) {
      const auto coords = flatten(value);
      for (std::size_t q = 0; q < coords.size(); ++q) b(eq_blocks_[e].offset + q, 0) = b(eq_blocks_[e].offset + q, 0) + coords[q];
    }
    return b;
  }

 private:
  struct Triplet {
    std::size_t row;
    std::size_t col;
    Scalar value;
  };
  FieldSpec field_;
  std::vector<Block> blocks_;
  std::vector<Block> eq_blocks_;
  std::vector<Triplet> entries_;
  std::vector<std::pair<std::size_t, HomMatrix>> rhs_;
  std::size_t unknowns_ = 0;
  std::size_t equations_ = 0;
};

struct HomotopyLayout {
  int s_first;
  int last;  // highest equation degree
  std::vector<std::size_t> block_of_degree;  // indexed by degree - s_first
};

/// Sets up F_k = d' s_k + s_{k-1} d for shift <= k <= last. With `period` > 0,
/// s_k for k >= wrap_from + period is identified with s_{k - period}.
BlockSystem homotopy_system(const LineAlgebra& alg, const ChainMap& f, int last, int wrap_from, int period,
                            HomotopyLayout& layout) {
  const PeriodicComplex& src = f.source();
  const PeriodicComplex& tgt = f.target();
  const int r = f.shift();
  BlockSystem sys(alg.field());
  layout.s_first = std::max(r - 1, 0);
  layout.last = last;
  const int top = period > 0 ? wrap_from + period - 1 : last;
  layout.block_of_degree.clear();
  for (int k = layout.s_first; k <= top; ++k)
    layout.block_of_degree.push_back(sys.add_unknown_block(k, src.term(k), tgt.term(k - r + 1)));
  auto block_for = [&](int k) {
    if (period > 0 && k > top) k -= period * ((k - wrap_from) / period);
    return layout.block_of_degree[static_cast<std::size_t>(k - layout.s_first)];
  };

  for (int k = r; k <= last; ++k) {
    const std::size_t e = sys.add_equation_block(src.term(k), tgt.term(k - r));
    const HomMatrix& d_tgt = tgt.differential(k - r + 1);
    sys.couple(block_for(k), e, [&](const HomMatrix& s) { return compose(alg, d_tgt, s); });
    if (k >= 1 && k - 1 >= layout.s_first) {
      const HomMatrix& d_src = src.differential(k);
      sys.couple(block_for(k - 1), e, [&](const HomMatrix& s) { return compose(alg, s, d_src); });
    }
    sys.set_rhs(e, f.component(k));
  }
  return sys;
}

Homotopy assemble(const LineAlgebra& alg, const ChainMap& f, const BlockSystem& sys, const HomotopyLayout& layout,
                  const Matrix& x, int wrap_from, int period) {
  std::vector<HomMatrix> stored;
  for (std::size_t b = 0; b < layout.block_of_degree.size(); ++b) {
    const auto& blk = sys.unknown(layout.block_of_degree[b]);
    HomMatrix m = zero_map(alg.field(), blk.source, blk.target);
    unflatten(m, x, blk.offset);
    stored.push_back(std::move(m));
  }
  const int ps = std::max(wrap_from, layout.s_first);
  return Homotopy{f.source_ptr(), f.target_ptr(), f.shift(), PeriodicMaps(layout.s_first, ps, period, std::move(stored))};
}

int periodic_window_start(const ChainMap& f) { return std::max({f.periodic_start(), f.shift(), 1}); }

}  // namespace

ResolutionSet::ResolutionSet(const LineAlgebra& alg) : alg_(&alg) {
  for (int i = 1; i <= alg.n(); ++i) res_.push_back(std::make_shared<const PeriodicComplex>(build_resolution(alg, i)));
}

const ComplexPtr& ResolutionSet::at(int i) const {
  alg_->check_vertex(i);
  return res_[static_cast<std::size_t>(i - 1)];
}

PeriodicMaps::PeriodicMaps(int first, int periodic_start, int period, std::vector<HomMatrix> stored)
    : first_(first), periodic_start_(periodic_start), period_(period), stored_(std::move(stored)) {
  if (period < 1 || periodic_start < first ||
      stored_.size() != static_cast<std::size_t>(periodic_start + period - first))
    throw std::invalid_argument("PeriodicMaps: stored degrees must run from first to periodic_start + period - 1");
}

const HomMatrix& PeriodicMaps::at(int k) const {
  if (k < first_) throw std::out_of_range("PeriodicMaps: degree " + std::to_string(k) + " below " + std::to_string(first_));
  if (k >= periodic_start_ + period_) k = periodic_start_ + (k - periodic_start_) % period_;
  return stored_[static_cast<std::size_t>(k - first_)];
}

ChainMap::ChainMap(ComplexPtr source, ComplexPtr target, int shift, PeriodicMaps components)
    : source_(std::move(source)), target_(std::move(target)), shift_(shift), comps_(std::move(components)) {
  if (shift < 0) throw std::invalid_argument("ChainMap: negative shift");
  if (comps_.first() != shift) throw std::invalid_argument("ChainMap: components must start at the shift");
  if (comps_.period() != source_->period() || source_->n() != target_->n())
    throw std::invalid_argument("ChainMap: period mismatch");
  for (int k = shift; k < comps_.periodic_start() + comps_.period(); ++k) {
    const HomMatrix& m = comps_.at(k);
    if (m.col_labels() != source_->term(k).indices() || m.row_labels() != target_->term(k - shift).indices())
      throw std::invalid_argument("ChainMap: component " + std::to_string(k) + " has the wrong shape");
  }
}

std::optional<int> ChainMap::equation_failure(const LineAlgebra& alg, int up_to) const {
  for (int k = shift_ + 1; k <= up_to; ++k) {
    const HomMatrix lhs = extline::compose(alg, target_->differential(k - shift_), component(k));
    const HomMatrix rhs = extline::compose(alg, component(k - 1), source_->differential(k));
    if (!(lhs == rhs)) return k;
  }
  return std::nullopt;
}

bool ChainMap::is_chain_map(const LineAlgebra& alg) const { return !equation_failure(alg, check_horizon()); }

bool ChainMap::is_zero() const {
  for (const auto& m : comps_.stored())
    if (!m.is_zero()) return false;
  return true;
}

namespace {

template <class Op>
ChainMap combine(const ChainMap& a, const ChainMap& b, Op op) {
  if (!same_complex(a.source(), b.source()) || !same_complex(a.target(), b.target()) || a.shift() != b.shift())
    throw CompositionError("chain maps have different endpoints or shifts");
  const int ps = std::max(a.periodic_start(), b.periodic_start());
  const int period = a.components().period();
  std::vector<HomMatrix> stored;
  for (int k = a.shift(); k < ps + period; ++k) stored.push_back(op(a.component(k), b.component(k)));
  return ChainMap(a.source_ptr(), a.target_ptr(), a.shift(), PeriodicMaps(a.shift(), ps, period, std::move(stored)));
}

}  // namespace

ChainMap operator+(const ChainMap& a, const ChainMap& b) {
  return combine(a, b, [](const HomMatrix& x, const HomMatrix& y) { return x + y; });
}

ChainMap operator-(const ChainMap& a, const ChainMap& b) {
  return combine(a, b, [](const HomMatrix& x, const HomMatrix& y) { return x - y; });
}

ChainMap operator*(const Scalar& s, const ChainMap& f) {
  std::vector<HomMatrix> stored;
  for (const auto& m : f.components().stored()) stored.push_back(s * m);
  return ChainMap(f.source_ptr(), f.target_ptr(), f.shift(),
                  PeriodicMaps(f.shift(), f.periodic_start(), f.components().period(), std::move(stored)));
}

bool strictly_equal(const ChainMap& a, const ChainMap& b) {
  if (!same_complex(a.source(), b.source()) || !same_complex(a.target(), b.target()) || a.shift() != b.shift())
    return false;
  const int top = std::max(a.periodic_start(), b.periodic_start()) + a.components().period();
  for (int k = a.shift(); k < top; ++k)
    if (!(a.component(k) == b.component(k))) return false;
  return true;
}

ChainMap compose(const LineAlgebra& alg, const ChainMap& f, const ChainMap& g) {
  if (!same_complex(g.target(), f.source())) throw CompositionError("compose: target of g is not the source of f");
  const int shift = f.shift() + g.shift();
  const int ps = std::max({g.periodic_start(), f.periodic_start() + g.shift(), shift});
  const int period = f.components().period();
  std::vector<HomMatrix> stored;
  for (int k = shift; k < ps + period; ++k) stored.push_back(compose(alg, f.component(k - g.shift()), g.component(k)));
  return ChainMap(g.source_ptr(), f.target_ptr(), shift, PeriodicMaps(shift, ps, period, std::move(stored)));
}

ChainMap identity_map(const LineAlgebra& alg, const ComplexPtr& r) {
  std::vector<HomMatrix> stored;
  for (int k = 0; k < r->period(); ++k)
    stored.push_back(HomMatrix::identity_on_common(alg.field(), r->term(k).indices(), r->term(k).indices()));
  return ChainMap(r, r, 0, PeriodicMaps(0, 0, r->period(), std::move(stored)));
}

namespace {

/// One-by-one component for the degrees where the shifted terms are single projectives.
HomMatrix single(const LineAlgebra& alg, const PSum& src, const PSum& tgt, const HomElement& e) {
  HomMatrix m = zero_map(alg.field(), src, tgt);
  if (m.rows() != 1 || m.cols() != 1 || m.col_labels()[0] != e.source() || m.row_labels()[0] != e.target())
    throw std::logic_error("generator component " + e.to_string() + " does not fit " + src.to_string() + " -> " +
                           tgt.to_string());
  m.at(0, 0) = e;
  return m;
}

ChainMap degree_one_generator(const ResolutionSet& rs, int i, bool star) {
  const LineAlgebra& alg = rs.algebra();
  const int n = alg.n();
  if (i < 1 || i > n - 1) throw std::out_of_range("degree-one generator index out of range 1..N-1");
  const ComplexPtr& src = rs.at(star ? i + 1 : i);
  const ComplexPtr& tgt = rs.at(star ? i : i + 1);
  const FieldSpec& f = alg.field();
  std::vector<HomMatrix> stored;
  for (int k = 1; k <= 2 * n; ++k) {
    const PSum& a = src->term(k);
    const PSum& b = tgt->term(k - 1);
    if (k % n != 0) {
      stored.push_back(HomMatrix::identity_on_common(f, b.indices(), a.indices()));
    } else if (k % (2 * n) == n) {
      const HomElement e = star ? alg.f(n - i) : alg.fstar(n - i);
      stored.push_back(single(alg, a, b, f.sign(n - i) * e));
    } else {
      const HomElement e = star ? alg.fstar(i) : alg.f(i);
      stored.push_back(single(alg, a, b, f.sign(i) * e));
    }
  }
  return ChainMap(src, tgt, 1, PeriodicMaps(1, 1, 2 * n, std::move(stored)));
}

}  // namespace

ChainMap generator_x(const ResolutionSet& rs, int i) { return degree_one_generator(rs, i, false); }
ChainMap generator_xstar(const ResolutionSet& rs, int i) { return degree_one_generator(rs, i, true); }

ChainMap generator_y(const ResolutionSet& rs, int i) {
  const LineAlgebra& alg = rs.algebra();
  const int n = alg.n();
  const ComplexPtr& src = rs.at(i);
  const ComplexPtr& tgt = rs.at(n + 1 - i);
  std::vector<HomMatrix> stored;
  for (int k = n; k < 3 * n; ++k) {
    if (!(src->term(k) == tgt->term(k - n))) throw std::logic_error("generator_y: terms do not coincide");
    stored.push_back(HomMatrix::identity_on_common(alg.field(), tgt->term(k - n).indices(), src->term(k).indices()));
  }
  return ChainMap(src, tgt, n, PeriodicMaps(n, n, 2 * n, std::move(stored)));
}

HomMatrix Homotopy::boundary(const LineAlgebra& alg, int k) const {
  HomMatrix out = compose(alg, target->differential(k - shift + 1), at(k));
  if (k >= 1 && k - 1 >= components.first()) out = out + compose(alg, at(k - 1), source->differential(k));
  return out;
}

bool Homotopy::witnesses(const LineAlgebra& alg, const ChainMap& f, int up_to) const {
  for (int k = f.shift(); k <= up_to; ++k)
    if (!(boundary(alg, k) == f.component(k))) return false;
  return true;
}

NullHomotopyResult null_homotopy(const LineAlgebra& alg, const ChainMap& f) {
  NullHomotopyResult res;
  const int period = f.components().period();
  const int p0 = periodic_window_start(f);
  {
    HomotopyLayout layout;
    const BlockSystem sys = homotopy_system(alg, f, p0 + period, p0, period, layout);
    if (auto x = solve(sys.matrix(), sys.rhs())) {
      Homotopy h = assemble(alg, f, sys, layout, *x, p0, period);
      if (!h.witnesses(alg, f, p0 + 2 * period))
        throw std::logic_error("null_homotopy: periodic solution failed re-verification");
      res.verdict = HomotopyVerdict::NullHomotopic;
      res.homotopy = std::move(h);
      res.detail = "periodic homotopy from degree " + std::to_string(p0);
      return res;
    }
  }
  HomotopyLayout layout;
  const BlockSystem sys = homotopy_system(alg, f, p0 + 2 * period, 0, 0, layout);
  if (!solve(sys.matrix(), sys.rhs())) {
    res.verdict = HomotopyVerdict::NotNullHomotopic;
    res.detail = "no homotopy on degrees " + std::to_string(f.shift()) + ".." + std::to_string(p0 + 2 * period);
  } else {
    res.verdict = HomotopyVerdict::Undetermined;
    res.detail = "no periodic homotopy, but the truncated system is solvable";
  }
  return res;
}

std::optional<Scalar> proportionality(const LineAlgebra& alg, const ChainMap& f, const ChainMap& g) {
  if (!same_complex(f.source(), g.source()) || !same_complex(f.target(), g.target()) || f.shift() != g.shift())
    throw CompositionError("proportionality: maps have different endpoints");
  const int period = f.components().period();
  const int p0 = std::max(periodic_window_start(f), periodic_window_start(g));
  HomotopyLayout layout;
  const BlockSystem sys = homotopy_system(alg, f, p0 + period, p0, period, layout);
  Matrix a = sys.matrix(1);
  // last column: the coordinates of g, so a solution gives f = c g + d s + s d
  std::size_t row = 0;
  for (int k = f.shift(); k <= p0 + period; ++k) {
    for (const Scalar& v : flatten(g.component(k))) a(row++, sys.unknown_count()) = v;
  }
  auto x = solve(a, sys.rhs());
  if (!x) return std::nullopt;
  return (*x)(sys.unknown_count(), 0);
}

ChainMap normalized(const ChainMap& f) {
  const GeneratorKind order[] = {GeneratorKind::Identity, GeneratorKind::Loop, GeneratorKind::F, GeneratorKind::FStar};
  for (int k = f.shift(); k < f.periodic_start() + f.components().period(); ++k) {
    const HomMatrix& m = f.component(k);
    for (GeneratorKind kind : order)
      for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) {
          const HomElement& e = m.at(r, c);
          for (std::size_t s = 0; s < e.slots(); ++s)
            if (e.basis(s).kind == kind && !e.coefficient(s).is_zero()) return e.coefficient(s).inverse() * f;
        }
  }
  return f;
}

ExtClass lift_cocycle(const ResolutionSet& rs, int i, int j, int k) {
  const LineAlgebra& alg = rs.algebra();
  const int n = alg.n();
  if (k < 0) throw std::invalid_argument("lift_cocycle: negative degree");
  if (ext_dim_via_x(n, i, j, k) == 0)
    throw std::invalid_argument("lift_cocycle: Ext^" + std::to_string(k) + "(S_" + std::to_string(i) + ", S_" +
                                std::to_string(j) + ") is zero");
  const ComplexPtr& src = rs.at(i);
  const ComplexPtr& tgt = rs.at(j);
  const int period = 2 * n;
  const FieldSpec& field = alg.field();

  for (int attempt = 0; attempt < 3; ++attempt) {
    const int p0 = std::max(k + 1, 1) + attempt * period;
    const int top = p0 + period - 1;
    BlockSystem sys(field);
    std::vector<std::size_t> blocks;
    for (int m = k; m <= top; ++m) blocks.push_back(sys.add_unknown_block(m, src->term(m), tgt->term(m - k)));
    auto block_for = [&](int m) {
      if (m > top) m -= period;
      return blocks[static_cast<std::size_t>(m - k)];
    };
    for (int m = k + 1; m <= top + 1; ++m) {
      const std::size_t e = sys.add_equation_block(src->term(m), tgt->term(m - k - 1));
      const HomMatrix& d_tgt = tgt->differential(m - k);
      const HomMatrix& d_src = src->differential(m);
      sys.couple(block_for(m), e, [&](const HomMatrix& s) { return compose(alg, d_tgt, s); });
      sys.couple(block_for(m - 1), e, [&](const HomMatrix& s) { return field.from_int(-1) * compose(alg, s, d_src); });
    }
    // normalisation row: the Identity coefficient on P_j -> P_j in degree k is 1
    Matrix a = sys.matrix();
    Matrix b = sys.rhs();
    Matrix extra(field, 1, a.cols());
    {
      const PSum& s0 = src->term(k);
      const auto cols = s0.indices();
      std::size_t pos = 0;
      HomMatrix shape = zero_map(field, s0, tgt->term(0));
      for (std::size_t c = 0; c < shape.cols(); ++c) {
        if (cols[c] == j) break;
        pos += shape.at(0, c).slots();
      }
      extra(0, sys.unknown(blocks[0]).offset + pos) = field.one();
    }
    Matrix rhs1(field, 1, 1);
    rhs1(0, 0) = field.one();
    auto x = solve(a.vstack(extra), b.vstack(rhs1));
    if (!x) continue;
    std::vector<HomMatrix> stored;
    for (std::size_t blk : blocks) {
      const auto& info = sys.unknown(blk);
      HomMatrix m = zero_map(field, info.source, info.target);
      unflatten(m, *x, info.offset);
      stored.push_back(std::move(m));
    }
    ChainMap f = normalized(ChainMap(src, tgt, k, PeriodicMaps(k, p0, period, std::move(stored))));
    if (!f.is_chain_map(alg)) throw std::logic_error("lift_cocycle: lifted map is not a chain map");
    const NullHomotopyResult nh = null_homotopy(alg, f);
    if (nh.verdict != HomotopyVerdict::NotNullHomotopic)
      throw std::logic_error("lift_cocycle: lift is not certified nonzero (" + nh.detail + ")");
    return ExtClass{i, j, k, std::move(f)};
  }
  throw std::logic_error("lift_cocycle: no periodic lift found");
}

int ext_dim_via_homotopy(const ResolutionSet& rs, int i, int j, int k) {
  const LineAlgebra& alg = rs.algebra();
  if (k < 0) throw std::invalid_argument("ext_dim_via_homotopy: negative degree");
  const ComplexPtr& src = rs.at(i);
  const ComplexPtr& tgt = rs.at(j);
  const FieldSpec& field = alg.field();
  const int top = k + 2;

  // cycles: components F_m, k <= m <= top, with d' F_m = F_{m-1} d
  BlockSystem cyc(field);
  std::vector<std::size_t> fb;
  for (int m = k; m <= top; ++m) fb.push_back(cyc.add_unknown_block(m, src->term(m), tgt->term(m - k)));
  for (int m = k + 1; m <= top; ++m) {
    const std::size_t e = cyc.add_equation_block(src->term(m), tgt->term(m - k - 1));
    const HomMatrix& d_tgt = tgt->differential(m - k);
    const HomMatrix& d_src = src->differential(m);
    cyc.couple(fb[static_cast<std::size_t>(m - k)], e, [&](const HomMatrix& s) { return compose(alg, d_tgt, s); });
    cyc.couple(fb[static_cast<std::size_t>(m - k - 1)], e,
               [&](const HomMatrix& s) { return field.from_int(-1) * compose(alg, s, d_src); });
  }
  const std::size_t dim_cycles = cyc.unknown_count() - rank(cyc.matrix());

  // boundaries: d' s_m + s_{m-1} d for homotopies s_m, max(k-1, 0) <= m <= top
  BlockSystem bnd(field);
  const int s_first = std::max(k - 1, 0);
  std::vector<std::size_t> sb;
  for (int m = s_first; m <= top; ++m) sb.push_back(bnd.add_unknown_block(m, src->term(m), tgt->term(m - k + 1)));
  for (int m = k; m <= top; ++m) {
    const std::size_t e = bnd.add_equation_block(src->term(m), tgt->term(m - k));
    const HomMatrix& d_tgt = tgt->differential(m - k + 1);
    bnd.couple(sb[static_cast<std::size_t>(m - s_first)], e, [&](const HomMatrix& s) { return compose(alg, d_tgt, s); });
    if (m >= 1 && m - 1 >= s_first) {
      const HomMatrix& d_src = src->differential(m);
      bnd.couple(sb[static_cast<std::size_t>(m - 1 - s_first)], e, [&](const HomMatrix& s) { return compose(alg, s, d_src); });
    }
  }
  return static_cast<int>(dim_cycles - rank(bnd.matrix()));
}

std::vector<RelationCheck> verify_lemma_relations(const ResolutionSet& rs) {
  const LineAlgebra& alg = rs.algebra();
  const int n = alg.n();
  std::vector<RelationCheck> out;
  if (n < 2) return out;
  std::vector<ChainMap> x, xs, y;
  for (int i = 1; i < n; ++i) {
    x.push_back(generator_x(rs, i));
    xs.push_back(generator_xstar(rs, i));
  }
  for (int i = 1; i <= n; ++i) y.push_back(generator_y(rs, i));
  auto X = [&](int i) -> const ChainMap& { return x[static_cast<std::size_t>(i - 1)]; };
  auto XS = [&](int i) -> const ChainMap& { return xs[static_cast<std::size_t>(i - 1)]; };
  auto Y = [&](int i) -> const ChainMap& { return y[static_cast<std::size_t>(i - 1)]; };
  auto s = [](int v) { return std::to_string(v); };

  auto homotopy_check = [&](std::string family, std::string name, const ChainMap& d) {
    const NullHomotopyResult r = null_homotopy(alg, d);
    out.push_back({std::move(family), std::move(name), false, r.null_homotopic(), r.detail});
  };
  auto strict_check = [&](std::string family, std::string name, const ChainMap& a, const ChainMap& b) {
    const bool eq = strictly_equal(a, b);
    out.push_back({std::move(family), std::move(name), true, eq, eq ? "equal in every degree" : "components differ"});
  };

  homotopy_check("a", "x1* o x1 ~ 0", compose(alg, XS(1), X(1)));
  homotopy_check("a", "x" + s(n - 1) + " o x" + s(n - 1) + "* ~ 0", compose(alg, X(n - 1), XS(n - 1)));
  for (int i = 1; i <= n - 2; ++i)
    homotopy_check("b", "x" + s(i) + " o x" + s(i) + "* ~ x" + s(i + 1) + "* o x" + s(i + 1),
                   compose(alg, X(i), XS(i)) - compose(alg, XS(i + 1), X(i + 1)));
  for (int i = 1; i <= n - 1; ++i) {
    strict_check("c", "y" + s(i + 1) + " o x" + s(i) + " = x" + s(n - i) + "* o y" + s(i), compose(alg, Y(i + 1), X(i)),
                 compose(alg, XS(n - i), Y(i)));
    strict_check("d", "y" + s(i) + " o x" + s(i) + "* = x" + s(n - i) + " o y" + s(i + 1), compose(alg, Y(i), XS(i)),
                 compose(alg, X(n - i), Y(i + 1)));
  }
  return out;
}

}  // namespace extline
