#include "extline/quiver_modules.hpp"

#include <random>
#include <stdexcept>

namespace extline {

namespace {

void require_valid(const QuiverRep& m) {
  const std::string why = m.relation_violation();
  if (!why.empty()) throw std::invalid_argument("module violates the relations of A: " + why);
}

std::size_t ipow(std::size_t base, std::size_t exp, std::size_t cap) {
  std::size_t r = 1;
  for (std::size_t k = 0; k < exp; ++k) {
    r *= base;
    if (r > cap) return cap + 1;
  }
  return r;
}

}  // namespace

VertexSubspaces radical_spaces(const QuiverRep& m) {
  const FieldSpec& f = m.field();
  std::vector<Matrix> spans;
  for (int v = 1; v <= m.vertices(); ++v) spans.emplace_back(f, m.dim(v), 0);
  const auto& arrows = m.quiver().arrows;
  for (std::size_t a = 0; a < arrows.size(); ++a) {
    Matrix& s = spans[arrows[a].target - 1];
    s = s.hstack(m.arrow(a));
  }
  VertexSubspaces out;
  for (auto& s : spans) out.bases.push_back(column_space(s));
  return out;
}

VertexSubspaces socle_spaces(const QuiverRep& m) {
  const FieldSpec& f = m.field();
  std::vector<Matrix> stacks;
  for (int v = 1; v <= m.vertices(); ++v) stacks.emplace_back(f, 0, m.dim(v));
  const auto& arrows = m.quiver().arrows;
  for (std::size_t a = 0; a < arrows.size(); ++a) {
    Matrix& s = stacks[arrows[a].source - 1];
    s = s.vstack(m.arrow(a));
  }
  VertexSubspaces out;
  for (auto& s : stacks) out.bases.push_back(kernel(s));
  return out;
}

QuiverRep radical(const QuiverRep& m) {
  require_valid(m);
  return restrict_to(m, radical_spaces(m)).module;
}

QuiverRep socle(const QuiverRep& m) {
  require_valid(m);
  return restrict_to(m, socle_spaces(m)).module;
}

SimpleMultiset head(const QuiverRep& m) {
  const VertexSubspaces rad = radical_spaces(m);
  SimpleMultiset out;
  for (int v = 1; v <= m.vertices(); ++v) out.push_back(m.dim(v) - rad.bases[v - 1].cols());
  return out;
}

SimpleMultiset socle_multiset(const QuiverRep& m) {
  const VertexSubspaces soc = socle_spaces(m);
  SimpleMultiset out;
  for (const auto& b : soc.bases) out.push_back(b.cols());
  return out;
}

std::vector<SimpleMultiset> radical_layers(const QuiverRep& m) {
  std::vector<SimpleMultiset> layers;
  QuiverRep cur = m;
  while (!cur.is_zero()) {
    layers.push_back(head(cur));
    cur = restrict_to(cur, radical_spaces(cur)).module;
  }
  return layers;
}

QuiverRep simple_module(const LineAlgebra& alg, int i) {
  alg.check_vertex(i);
  return QuiverRep::simple(alg.quiver(), i);
}

CoverData projective_cover(const LineAlgebra& alg, const QuiverRep& m) {
  require_valid(m);
  const FieldSpec& f = m.field();
  const VertexSubspaces rad = radical_spaces(m);

  std::vector<int> summands;
  std::vector<RepMorphism> pieces;
  std::vector<QuiverRep> parts;
  for (int v = 1; v <= m.vertices(); ++v) {
    const Matrix& r = rad.bases[v - 1];
    const Echelon e = row_reduce(r.hstack(Matrix::identity(f, m.dim(v))));
    for (auto p : e.pivots) {
      if (p < r.cols()) continue;
      Matrix w(f, m.dim(v), 1);
      w(p - r.cols(), 0) = f.one();
      summands.push_back(v);
      pieces.push_back(alg.hom_from_projective(v, m, w));
      parts.push_back(alg.projective(v));
    }
  }

  if (summands.empty()) {
    QuiverRep zero = QuiverRep::zero(alg.quiver());
    RepMorphism surj(zero, m);
    RepMorphism inc(zero, zero);
    return {{}, zero, surj, zero, inc};
  }

  QuiverRep cover = direct_sum(parts);
  std::vector<Matrix> maps;
  for (int v = 1; v <= m.vertices(); ++v) {
    Matrix block(f, m.dim(v), 0);
    for (const auto& piece : pieces) block = block.hstack(piece.at(v));
    maps.push_back(std::move(block));
  }
  RepMorphism surj(cover, m, std::move(maps));
  Submodule ker = restrict_to(cover, kernel_spaces(surj));
  return {std::move(summands), std::move(cover), std::move(surj), std::move(ker.module), std::move(ker.inclusion)};
}

QuiverRep syzygy(const LineAlgebra& alg, const QuiverRep& m) { return projective_cover(alg, m).kernel; }

QuiverRep syzygy_power(const LineAlgebra& alg, const QuiverRep& m, int times) {
  QuiverRep cur = m;
  for (int k = 0; k < times; ++k) cur = syzygy(alg, cur);
  return cur;
}

IsoResult find_isomorphism(const QuiverRep& m, const QuiverRep& n, std::uint64_t seed) {
  IsoResult res;
  if (m.dims() != n.dims()) {
    res.verdict = IsoVerdict::NotIsomorphic;
    res.reason = "dimension vectors differ";
    return res;
  }
  if (m.is_zero()) {
    res.verdict = IsoVerdict::Isomorphic;
    res.witness = RepMorphism(m, n);
    return res;
  }
  const auto mn = hom_space(m, n);
  const auto nm = hom_space(n, m);
  if (mn.size() != nm.size()) {
    res.verdict = IsoVerdict::NotIsomorphic;
    res.reason = "dim Hom(M,N) != dim Hom(N,M)";
    return res;
  }

  const FieldSpec& f = m.field();
  const std::size_t d = mn.size();
  auto combine = [&](const std::vector<Scalar>& coeffs) {
    RepMorphism phi(m, n);
    for (std::size_t k = 0; k < d; ++k)
      if (!coeffs[k].is_zero()) phi = phi + coeffs[k] * mn[k];
    return phi;
  };

  const std::uint32_t p = f.characteristic();
  if (d > 0 && p != 0 && ipow(p, d, 16) <= 16) {
    std::vector<std::int64_t> digits(d, 0);
    const std::size_t total = ipow(p, d, 16);
    for (std::size_t idx = 0; idx < total; ++idx) {
      std::size_t x = idx;
      std::vector<Scalar> coeffs;
      for (std::size_t k = 0; k < d; ++k) {
        coeffs.push_back(f.from_int(static_cast<std::int64_t>(x % p)));
        x /= p;
      }
      RepMorphism phi = combine(coeffs);
      if (phi.is_invertible()) {
        res.verdict = IsoVerdict::Isomorphic;
        res.witness = std::move(phi);
        return res;
      }
    }
  } else if (d > 0) {
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < 64; ++attempt) {
      std::vector<Scalar> coeffs;
      for (std::size_t k = 0; k < d; ++k) {
        if (p == 0) {
          coeffs.push_back(f.from_int(static_cast<std::int64_t>(rng() % 11) - 5));
        } else {
          coeffs.push_back(f.from_int(static_cast<std::int64_t>(rng() % p)));
        }
      }
      RepMorphism phi = combine(coeffs);
      if (phi.is_invertible()) {
        res.verdict = IsoVerdict::Isomorphic;
        res.witness = std::move(phi);
        return res;
      }
    }
  }

  if (head(m) != head(n)) {
    res.verdict = IsoVerdict::NotIsomorphic;
    res.reason = "heads differ";
  } else if (socle_multiset(m) != socle_multiset(n)) {
    res.verdict = IsoVerdict::NotIsomorphic;
    res.reason = "socles differ";
  } else if (radical_layers(m) != radical_layers(n)) {
    res.verdict = IsoVerdict::NotIsomorphic;
    res.reason = "radical layers differ";
  } else if (d == 0) {
    res.verdict = IsoVerdict::NotIsomorphic;
    res.reason = "no nonzero homomorphisms";
  } else {
    res.verdict = IsoVerdict::Undetermined;
    res.reason = "no invertible element found and invariants agree";
  }
  return res;
}

bool is_isomorphic(const QuiverRep& m, const QuiverRep& n, std::uint64_t seed) {
  return find_isomorphism(m, n, seed).verdict == IsoVerdict::Isomorphic;
}

}  // namespace extline
