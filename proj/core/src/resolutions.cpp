#include "extline/resolutions.hpp"

#include <stdexcept>

#include "extline/quiver_modules.hpp"

namespace extline {

namespace {

int mod(int a, int m) {
  int r = a % m;
  return r < 0 ? r + m : r;
}

Scalar loop_sign(const LineAlgebra& alg, int m) {
  const int n = alg.n();
  return alg.field().sign(m < n ? m : n - 1);
}

std::size_t dim_sum(const VertexSubspaces& s) {
  std::size_t d = 0;
  for (const auto& b : s.bases) d += b.cols();
  return d;
}

}  // namespace

HomMatrix differential_between(const LineAlgebra& alg, const PSum& source, const PSum& target) {
  const FieldSpec& f = alg.field();
  HomMatrix d(f, target.indices(), source.indices());
  if (source.size() == 1 && target.size() == 1 && source.lo == target.lo) {
    const int m = source.lo;
    d.at(0, 0) = loop_sign(alg, m) * alg.loop(m);
    return d;
  }
  for (std::size_t c = 0; c < d.cols(); ++c) {
    const int m = d.col_labels()[c];
    for (std::size_t r = 0; r < d.rows(); ++r) {
      const int t = d.row_labels()[r];
      if (t == m + 1) d.at(r, c) = alg.f(m);
      if (t == m - 1) d.at(r, c) = alg.fstar(m - 1);
    }
  }
  return d;
}

HomMatrix closed_form_differential(const LineAlgebra& alg, int left, int right) {
  const int n = alg.n();
  return differential_between(alg, normalize_p(n, left, right), normalize_p(n, left + 1, right - 1));
}

PeriodicComplex::PeriodicComplex(int n, int vertex, int depth, std::vector<PSum> terms,
                                 std::vector<HomMatrix> differentials)
    : n_(n), vertex_(vertex), depth_(depth), terms_(std::move(terms)), differentials_(std::move(differentials)) {
  if (terms_.size() != static_cast<std::size_t>(2 * n) || differentials_.size() != static_cast<std::size_t>(2 * n))
    throw std::invalid_argument("PeriodicComplex: one period of terms and differentials is required");
}

const PSum& PeriodicComplex::term(int k) const {
  if (k < 0) throw std::out_of_range("PeriodicComplex::term: negative degree");
  return terms_[static_cast<std::size_t>(k % period())];
}

const HomMatrix& PeriodicComplex::differential(int k) const {
  if (k < 1) throw std::out_of_range("PeriodicComplex::differential: degree must be positive");
  return differentials_[static_cast<std::size_t>(mod(k - 1, period()))];
}

PeriodicComplex build_resolution(const LineAlgebra& alg, int i, int depth, const ResolutionCorruption& corrupt) {
  alg.check_vertex(i);
  const int n = alg.n();
  if (depth <= 0) depth = 4 * n;
  std::vector<PSum> terms;
  std::vector<HomMatrix> diffs;
  for (int k = 0; k < 2 * n; ++k) terms.push_back(normalize_p(n, i - k, i + k));
  for (int k = 1; k <= 2 * n; ++k) diffs.push_back(closed_form_differential(alg, i - k, i + k));

  const Scalar minus_one = alg.field().from_int(-1);
  if (corrupt.loop_sign_degree) {
    HomMatrix& d = diffs[static_cast<std::size_t>(mod(*corrupt.loop_sign_degree - 1, 2 * n))];
    if (d.rows() != 1 || d.cols() != 1 || d.row_labels() != d.col_labels())
      throw std::invalid_argument("corruption: degree " + std::to_string(*corrupt.loop_sign_degree) +
                                  " does not carry a single loop entry");
    d = minus_one * d;
  }
  if (corrupt.fstar_sign_degree) {
    HomMatrix& d = diffs[static_cast<std::size_t>(mod(*corrupt.fstar_sign_degree - 1, 2 * n))];
    for (std::size_t r = 0; r < d.rows(); ++r)
      for (std::size_t c = 0; c < d.cols(); ++c)
        if (d.row_labels()[r] + 1 == d.col_labels()[c]) d.at(r, c) = minus_one * d.at(r, c);
  }
  return PeriodicComplex(n, i, depth, std::move(terms), std::move(diffs));
}

bool ResolutionReport::ok() const { return first_failure() == nullptr; }

const ResolutionCheck* ResolutionReport::first_failure() const {
  for (const auto& c : checks)
    if (!c.passed) return &c;
  return nullptr;
}

ResolutionReport verify_resolution(const LineAlgebra& alg, const PeriodicComplex& r, int depth, std::uint64_t seed) {
  const int n = alg.n();
  const int i = r.vertex();
  ResolutionReport report;
  auto add = [&](std::string name, int k, bool ok, std::string detail) {
    report.checks.push_back({std::move(name), k, ok, std::move(detail)});
  };

  for (int k = 1; k < depth; ++k) {
    const HomMatrix dd = compose(alg, r.differential(k), r.differential(k + 1));
    add("d_squared_zero", k, dd.is_zero(), dd.is_zero() ? "" : "d_" + std::to_string(k) + " d_" + std::to_string(k + 1) + " = " + dd.to_string());
  }
  for (int k = 1; k <= depth; ++k) {
    const bool rad = r.differential(k).is_radical();
    add("minimal", k, rad, rad ? "" : "identity component in d_" + std::to_string(k));
  }

  std::vector<QuiverRep> terms;
  std::vector<RepMorphism> maps;
  for (int k = 0; k <= depth; ++k) terms.push_back(projective_sum(alg, r.term(k).indices()));
  maps.emplace_back(terms[0], terms[0]);  // placeholder for degree 0
  for (int k = 1; k <= depth; ++k) maps.push_back(realize(alg, r.differential(k)));

  {
    const Quotient coker = quotient_by(terms[0], image_spaces(maps[1]));
    const bool ok = is_isomorphic(coker.module, simple_module(alg, i), seed);
    add("cokernel", 0, ok, ok ? "" : "cokernel of d_1 is not S_" + std::to_string(i));
  }
  for (int k = 1; k < depth; ++k) {
    const std::size_t ker = dim_sum(kernel_spaces(maps[k]));
    const std::size_t im = dim_sum(image_spaces(maps[k + 1]));
    const bool composite_zero = maps[k].after(maps[k + 1]).is_zero();
    const bool ok = ker == im && composite_zero;
    std::string detail;
    if (!composite_zero) detail = "image of d_" + std::to_string(k + 1) + " is not inside ker d_" + std::to_string(k);
    else if (!ok) detail = "dim ker d_" + std::to_string(k) + " = " + std::to_string(ker) + ", dim im d_" + std::to_string(k + 1) + " = " + std::to_string(im);
    add("exact", k, ok, detail);
  }
  for (int k = 1; k <= depth; ++k) {
    const QuiverRep image = restrict_to(terms[k - 1], image_spaces(maps[k])).module;
    const XLabel x = syzygy_power_label(n, i, k);
    const bool ok = is_isomorphic(image, realize_x(alg, x), seed);
    add("image_is_x_module", k, ok, ok ? "" : "image of d_" + std::to_string(k) + " is not " + x.to_string());
  }
  return report;
}

}  // namespace extline
