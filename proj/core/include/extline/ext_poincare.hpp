// Dimensions of Ext^k(S_i, S_j) from three independent descriptions: the
// head of the k-th syzygy label, the coefficients of the Poincare series,
// and the projective summands of the closed-form resolution.
#ifndef EXTLINE_EXT_POINCARE_HPP_
#define EXTLINE_EXT_POINCARE_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "extline/resolutions.hpp"

namespace extline {

class RouteMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Polynomial in t with integer coefficients; coeffs[k] is the coefficient of t^k.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<std::int64_t> coeffs);
  static IntPolynomial monomial(int degree, std::int64_t c = 1);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  std::int64_t coefficient(int k) const;
  const std::vector<std::int64_t>& coefficients() const noexcept { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  /// t^d p(1/t); requires d >= degree().
  IntPolynomial reflected(int d) const;

  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  /// "1 + t^2 + t^3", "0" for zero.
  std::string to_string() const;
  std::string to_latex() const;

 private:
  void trim();
  std::vector<std::int64_t> coeffs_;
};

/// Q_{i,j}(t) = t^{|j-i|} + t^{|j-i|+2} + ... + t^{N-1-|N+1-j-i|}.
IntPolynomial q_polynomial(int n, int i, int j);

/// Q_{i,j}(t) + t^{2N-1} Q_{i,j}(1/t).
IntPolynomial poincare_numerator(int n, int i, int j);
/// 1 - t^{2N}.
IntPolynomial poincare_denominator(int n);

/// Coefficients 0..K of num / den as a power series. The constant term of
/// den must be 1 or -1 so the division stays integral.
std::vector<std::int64_t> series_expand(const IntPolynomial& num, const IntPolynomial& den, int max_degree);

std::vector<std::int64_t> poincare_series(int n, int i, int j, int max_degree);

int ext_dim_via_x(int n, int i, int j, int k);

/// Multiplicity of P_j in term k of a resolution built to depth >= k.
int ext_dim_via_resolution(const PeriodicComplex& r, int j, int k);

class ExtTable {
 public:
  ExtTable(int n, int max_degree);

  int n() const noexcept { return n_; }
  int max_degree() const noexcept { return max_degree_; }
  int& at(int i, int j, int k);
  int at(int i, int j, int k) const;
  /// Entries for k = 0..max_degree.
  std::vector<int> row(int i, int j) const;

  /// Names of the routes that agreed on every entry.
  std::vector<std::string> routes;

 private:
  std::size_t index(int i, int j, int k) const;
  int n_;
  int max_degree_;
  std::vector<int> entries_;
};

/// Fills every entry from the syzygy labels and checks it against the series
/// coefficients and the resolution terms. Throws RouteMismatch on disagreement.
ExtTable ext_table(int n, int max_degree);

}  // namespace extline

#endif  // EXTLINE_EXT_POINCARE_HPP_
