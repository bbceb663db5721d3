// Labels for the string modules iX^j, iX_j, _iX^j, _iX_j and for the
// projective sums _iP_j = P_i + P_{i+2} + ... + P_j, with arbitrary integer
// indices reduced to a canonical representative.
//
// End identifications (the dihedral action on one end of a label):
//   (up, j) ~ (down, 1 - j),   (pos, j) ~ (pos, j + 2N)
// and the two ends swap as  ^iX^j = _jX_i, i.e. (L, R) ~ (flip R, flip L)
// where flip exchanges up and down without touching the index.
#ifndef EXTLINE_X_CALCULUS_HPP_
#define EXTLINE_X_CALCULUS_HPP_

#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "extline/line_algebra.hpp"
#include "extline/quiver_rep.hpp"

namespace extline {

class ParityError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class EndPosition { Up, Down };

struct EndLabel {
  EndPosition position;
  int index;
  friend bool operator==(const EndLabel&, const EndLabel&) = default;
};

/// Up ends carry head constituents, down ends socle constituents.
struct XLabel {
  EndLabel left;
  EndLabel right;

  static XLabel up_up(int i, int j) { return {{EndPosition::Up, i}, {EndPosition::Up, j}}; }
  static XLabel simple(int i) { return up_up(i, i); }

  bool is_simple() const { return left.index == right.index; }
  std::string to_string() const;
  friend bool operator==(const XLabel&, const XLabel&) = default;
};

EndLabel normalize_end(int n, EndLabel e);

/// The canonical label: both indices in 1..N, left <= right, and equal
/// indices written as the simple (up, i), (up, i). Throws ParityError when
/// the index difference and positions are incompatible.
XLabel normalize_x(int n, const XLabel& raw);

/// The label ^{i-k}X^{i+k} of the k-th syzygy of S_i, normalised.
XLabel syzygy_power_label(int n, int i, int k);

/// Omega(^aX^b) = ^{a-1}X^{b+1}, computed after rewriting both ends as up ends.
XLabel syzygy_label(int n, const XLabel& x);

/// Every canonical label for the given N.
std::vector<XLabel> canonical_labels(int n);

struct XStructure {
  std::set<int> head;
  std::set<int> socle;
  int dim = 0;
};

XStructure structure_of(int n, const XLabel& canonical);

/// The string module with the shape of a canonical label.
QuiverRep realize_x(const LineAlgebra& alg, const XLabel& canonical);

/// Canonical projective sum P_lo + P_{lo+2} + ... + P_hi.
struct PSum {
  int lo;
  int hi;

  std::vector<int> indices() const;
  std::size_t size() const { return static_cast<std::size_t>((hi - lo) / 2 + 1); }
  bool contains(int v) const { return v >= lo && v <= hi && (v - lo) % 2 == 0; }
  std::string to_string() const;
  friend bool operator==(const PSum&, const PSum&) = default;
};

/// Reduces _{left}P_{right} under
///   _iP_j = _{j+1}P_{i-1},  _iP_{-j} = _iP_j,  _iP_{j+2N} = _iP_j.
/// Writing u = left - 1, these generate swapping u and right, negating
/// either, and shifting either by 2N, so each coordinate folds into 0..N.
PSum normalize_p(int n, int left, int right);

/// Folds an integer into 0..N by the reflections x -> -x and x -> 2N - x.
int fold(int n, int x);

}  // namespace extline

#endif  // EXTLINE_X_CALCULUS_HPP_
