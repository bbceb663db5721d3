// The closed-form minimal projective resolution R_i of a simple module.
//
// Degrees are k >= 0 with term_k = normalize_p(i - k, i + k) and
// d_k : term_k -> term_{k-1}. The differential between two canonical sums is
// determined by the sums alone:
//   * P_m -> P_m (a single summand on both sides) is sign(m) Loop(m), where
//     sign(m) = (-1)^m for m < N and (-1)^(N-1) for m = N;
//   * otherwise every summand P_m of the source maps with coefficient 1 to
//     each of P_{m+1} (by F(m)) and P_{m-1} (by FStar(m-1)) present in the
//     target.
// For 1 <= i < j <= N this is the bidiagonal matrix [f_i f*_{i+1} ...].
#ifndef EXTLINE_RESOLUTIONS_HPP_
#define EXTLINE_RESOLUTIONS_HPP_

#include <optional>
#include <string>
#include <vector>

#include "extline/hom_matrix.hpp"
#include "extline/x_calculus.hpp"

namespace extline {

/// The differential _{left}P_{right} -> _{left+1}P_{right-1}.
HomMatrix closed_form_differential(const LineAlgebra& alg, int left, int right);

/// The differential between two canonical projective sums.
HomMatrix differential_between(const LineAlgebra& alg, const PSum& source, const PSum& target);

/// Deliberate damage to a resolution, used by negative controls.
struct ResolutionCorruption {
  /// Negate the differential in this degree if it is a single Loop entry.
  std::optional<int> loop_sign_degree;
  /// Negate the FStar entries of the differential in this degree.
  std::optional<int> fstar_sign_degree;
};

class PeriodicComplex {
 public:
  PeriodicComplex(int n, int vertex, int depth, std::vector<PSum> terms, std::vector<HomMatrix> differentials);

  int n() const noexcept { return n_; }
  int vertex() const noexcept { return vertex_; }
  int period() const noexcept { return 2 * n_; }
  /// Terms repeat from degree 0, differentials from degree 1.
  int periodic_start() const noexcept { return 1; }
  int depth() const noexcept { return depth_; }

  /// Any k >= 0 (reduced by periodicity).
  const PSum& term(int k) const;
  /// Any k >= 1.
  const HomMatrix& differential(int k) const;

 private:
  int n_;
  int vertex_;
  int depth_;
  std::vector<PSum> terms_;             // k = 0 .. 2N-1
  std::vector<HomMatrix> differentials_;  // k = 1 .. 2N
};

PeriodicComplex build_resolution(const LineAlgebra& alg, int i, int depth = 0, const ResolutionCorruption& corrupt = {});

struct ResolutionCheck {
  std::string name;
  int degree;
  bool passed;
  std::string detail;
};

struct ResolutionReport {
  std::vector<ResolutionCheck> checks;
  bool ok() const;
  /// First failing check, if any.
  const ResolutionCheck* first_failure() const;
};

/// d o d = 0, minimality, exactness against realized modules, cokernel at degree 0
/// and image(d_k) isomorphic to the X-module of the k-th syzygy, for 1 <= k <= depth.
ResolutionReport verify_resolution(const LineAlgebra& alg, const PeriodicComplex& r, int depth, std::uint64_t seed = 1);

}  // namespace extline

#endif  // EXTLINE_RESOLUTIONS_HPP_
