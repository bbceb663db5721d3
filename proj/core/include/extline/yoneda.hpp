// Chain maps between the resolutions R_i, Yoneda composition, and an exact
// decision procedure for null-homotopy.
//
// A ChainMap of shift r from R to R' has components F_k : R_k -> R'_{k-r}
// for k >= r and satisfies d' F_k = F_{k-1} d for k > r. Components below
// the shift would land in negative degrees of R' and are zero. From
// periodic_start on, components repeat with period 2N.
//
// A homotopy s has components s_k : R_k -> R'_{k-r+1} for k >= r - 1 and
// witnesses F_k = d' s_k + s_{k-1} d for every k >= r.
#ifndef EXTLINE_YONEDA_HPP_
#define EXTLINE_YONEDA_HPP_

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "extline/resolutions.hpp"

namespace extline {

using ComplexPtr = std::shared_ptr<const PeriodicComplex>;

/// Resolutions R_1 .. R_N of one algebra, built once and shared.
class ResolutionSet {
 public:
  explicit ResolutionSet(const LineAlgebra& alg);
  const LineAlgebra& algebra() const noexcept { return *alg_; }
  const ComplexPtr& at(int i) const;

 private:
  const LineAlgebra* alg_;
  std::vector<ComplexPtr> res_;
};

/// Degreewise data that repeats with period 2N from `periodic_start` on.
class PeriodicMaps {
 public:
  PeriodicMaps() = default;
  PeriodicMaps(int first, int periodic_start, int period, std::vector<HomMatrix> stored);

  int first() const noexcept { return first_; }
  int periodic_start() const noexcept { return periodic_start_; }
  int period() const noexcept { return period_; }
  /// Degrees first .. periodic_start + period - 1.
  const std::vector<HomMatrix>& stored() const noexcept { return stored_; }
  const HomMatrix& at(int k) const;

 private:
  int first_ = 0;
  int periodic_start_ = 0;
  int period_ = 1;
  std::vector<HomMatrix> stored_;
};

class ChainMap {
 public:
  ChainMap(ComplexPtr source, ComplexPtr target, int shift, PeriodicMaps components);

  const PeriodicComplex& source() const noexcept { return *source_; }
  const PeriodicComplex& target() const noexcept { return *target_; }
  const ComplexPtr& source_ptr() const noexcept { return source_; }
  const ComplexPtr& target_ptr() const noexcept { return target_; }
  int shift() const noexcept { return shift_; }
  int periodic_start() const noexcept { return comps_.periodic_start(); }
  const PeriodicMaps& components() const noexcept { return comps_; }

  /// F_k for k >= shift.
  const HomMatrix& component(int k) const { return comps_.at(k); }

  /// Degree of the first failing chain-map equation up to `up_to`, if any.
  std::optional<int> equation_failure(const LineAlgebra& alg, int up_to) const;
  /// Checks the chain-map equation over two periods past the periodic start.
  bool is_chain_map(const LineAlgebra& alg) const;

  bool is_zero() const;
  /// Last degree needed to see two full periods.
  int check_horizon() const { return periodic_start() + 2 * comps_.period(); }

 private:
  ComplexPtr source_;
  ComplexPtr target_;
  int shift_;
  PeriodicMaps comps_;
};

ChainMap operator+(const ChainMap& a, const ChainMap& b);
ChainMap operator-(const ChainMap& a, const ChainMap& b);
ChainMap operator*(const Scalar& s, const ChainMap& f);
/// Componentwise equality at every degree (not up to homotopy).
bool strictly_equal(const ChainMap& a, const ChainMap& b);

/// f o g: requires target(g) == source(f); shifts add.
ChainMap compose(const LineAlgebra& alg, const ChainMap& f, const ChainMap& g);

ChainMap identity_map(const LineAlgebra& alg, const ComplexPtr& r);

/// x_i : R_i -> R_{i+1}[1], 1 <= i <= N-1.
ChainMap generator_x(const ResolutionSet& rs, int i);
/// x_i^* : R_{i+1} -> R_i[1].
ChainMap generator_xstar(const ResolutionSet& rs, int i);
/// y_i : R_i -> R_{N+1-i}[N], the identity from degree N on.
ChainMap generator_y(const ResolutionSet& rs, int i);

struct Homotopy {
  ComplexPtr source;
  ComplexPtr target;
  int shift;  // of the map it witnesses
  PeriodicMaps components;  // s_k for k >= shift - 1

  const HomMatrix& at(int k) const { return components.at(k); }
  /// d' s_k + s_{k-1} d (with s_{shift-2} = 0).
  HomMatrix boundary(const LineAlgebra& alg, int k) const;
  /// Checks F_k = boundary(k) for shift <= k <= up_to.
  bool witnesses(const LineAlgebra& alg, const ChainMap& f, int up_to) const;
};

enum class HomotopyVerdict { NullHomotopic, NotNullHomotopic, Undetermined };

struct NullHomotopyResult {
  HomotopyVerdict verdict = HomotopyVerdict::Undetermined;
  std::optional<Homotopy> homotopy;
  std::string detail;
  bool null_homotopic() const { return verdict == HomotopyVerdict::NullHomotopic; }
};

/// Searches for an eventually periodic homotopy. If none exists, a truncated
/// system without periodicity is solved: infeasibility there certifies that
/// no homotopy of any kind exists.
NullHomotopyResult null_homotopy(const LineAlgebra& alg, const ChainMap& f);

/// Some c with f - c g null-homotopic, found by the same periodic ansatz.
std::optional<Scalar> proportionality(const LineAlgebra& alg, const ChainMap& f, const ChainMap& g);

struct ExtClass {
  int i;
  int j;
  int degree;
  ChainMap representative;
};

/// A periodic chain map R_i -> R_j[k] whose degree-k component projects onto
/// the summand P_j, scaled so its first nonzero coefficient is 1. Throws
/// std::invalid_argument if Ext^k(S_i, S_j) = 0 and std::logic_error if the
/// lift turns out null-homotopic.
ExtClass lift_cocycle(const ResolutionSet& rs, int i, int j, int k);

/// Scales f so the first nonzero coefficient, scanning degrees upward and
/// generator kinds in the order Identity, Loop, F, FStar, is 1.
ChainMap normalized(const ChainMap& f);

/// dim of Hom(R_i, R_j[k]) modulo homotopy, computed on the truncation of
/// R_i at degree k + 2.
int ext_dim_via_homotopy(const ResolutionSet& rs, int i, int j, int k);

struct RelationCheck {
  std::string family;  // "a", "b", "c", "d"
  std::string name;
  bool strict;         // checked by equality rather than by homotopy
  bool passed;
  std::string detail;
};

/// The four relation families among the generators; empty for N = 1.
std::vector<RelationCheck> verify_lemma_relations(const ResolutionSet& rs);

}  // namespace extline

#endif  // EXTLINE_YONEDA_HPP_
