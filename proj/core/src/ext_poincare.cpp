#include "extline/ext_poincare.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "extline/parallel.hpp"

namespace extline {

namespace {

void check_pair(int n, int i, int j) {
  if (n < 1) throw std::invalid_argument("N must be at least 1");
  if (i < 1 || i > n || j < 1 || j > n)
    throw std::out_of_range("simple index out of range 1.." + std::to_string(n));
}

std::string power(int k, bool latex) {
  if (k == 0) return "1";
  if (k == 1) return "t";
  return latex ? "t^{" + std::to_string(k) + "}" : "t^" + std::to_string(k);
}

std::string render(const std::vector<std::int64_t>& c, bool latex) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k] == 0) continue;
    const std::int64_t a = std::llabs(c[k]);
    os << (first ? (c[k] < 0 ? "-" : "") : (c[k] < 0 ? " - " : " + "));
    if (a != 1 || k == 0) {
      os << a;
      if (k > 0) os << (latex ? " " : "*");
    }
    if (k > 0) os << power(static_cast<int>(k), latex);
    first = false;
  }
  return first ? "0" : os.str();
}

}  // namespace

IntPolynomial::IntPolynomial(std::vector<std::int64_t> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPolynomial IntPolynomial::monomial(int degree, std::int64_t c) {
  if (degree < 0) throw std::invalid_argument("monomial: negative degree");
  std::vector<std::int64_t> v(static_cast<std::size_t>(degree) + 1, 0);
  v.back() = c;
  return IntPolynomial(std::move(v));
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::int64_t IntPolynomial::coefficient(int k) const {
  if (k < 0 || k > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(k)];
}

IntPolynomial IntPolynomial::reflected(int d) const {
  if (d < degree()) throw std::invalid_argument("reflected: degree bound below the degree");
  std::vector<std::int64_t> v(static_cast<std::size_t>(d) + 1, 0);
  for (int k = 0; k <= degree(); ++k) v[static_cast<std::size_t>(d - k)] = coefficient(k);
  return IntPolynomial(std::move(v));
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<std::int64_t> v(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = a.coefficient(static_cast<int>(k)) + b.coefficient(static_cast<int>(k));
  return IntPolynomial(std::move(v));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<std::int64_t> v(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = a.coefficient(static_cast<int>(k)) - b.coefficient(static_cast<int>(k));
  return IntPolynomial(std::move(v));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<std::int64_t> v(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t x = 0; x < a.coeffs_.size(); ++x)
    for (std::size_t y = 0; y < b.coeffs_.size(); ++y) v[x + y] += a.coeffs_[x] * b.coeffs_[y];
  return IntPolynomial(std::move(v));
}

std::string IntPolynomial::to_string() const { return render(coeffs_, false); }
std::string IntPolynomial::to_latex() const { return render(coeffs_, true); }

IntPolynomial q_polynomial(int n, int i, int j) {
  check_pair(n, i, j);
  const int lo = std::abs(j - i);
  const int hi = n - 1 - std::abs(n + 1 - j - i);
  IntPolynomial q;
  for (int e = lo; e <= hi; e += 2) q = q + IntPolynomial::monomial(e);
  return q;
}

IntPolynomial poincare_numerator(int n, int i, int j) {
  const IntPolynomial q = q_polynomial(n, i, j);
  return q + q.reflected(2 * n - 1);
}

IntPolynomial poincare_denominator(int n) {
  return IntPolynomial::monomial(0) - IntPolynomial::monomial(2 * n);
}

std::vector<std::int64_t> series_expand(const IntPolynomial& num, const IntPolynomial& den, int max_degree) {
  const std::int64_t c0 = den.coefficient(0);
  if (c0 != 1 && c0 != -1) throw std::invalid_argument("series_expand: constant term of the denominator must be a unit");
  std::vector<std::int64_t> out(static_cast<std::size_t>(std::max(max_degree + 1, 0)), 0);
  for (int k = 0; k <= max_degree; ++k) {
    std::int64_t acc = num.coefficient(k);
    for (int m = 1; m <= std::min(k, den.degree()); ++m) acc -= den.coefficient(m) * out[static_cast<std::size_t>(k - m)];
    out[static_cast<std::size_t>(k)] = acc * c0;
  }
  return out;
}

std::vector<std::int64_t> poincare_series(int n, int i, int j, int max_degree) {
  return series_expand(poincare_numerator(n, i, j), poincare_denominator(n), max_degree);
}

int ext_dim_via_x(int n, int i, int j, int k) {
  check_pair(n, i, j);
  if (k < 0) throw std::invalid_argument("ext_dim_via_x: negative degree");
  return static_cast<int>(structure_of(n, syzygy_power_label(n, i, k)).head.count(j));
}

int ext_dim_via_resolution(const PeriodicComplex& r, int j, int k) {
  if (k < 0 || k > r.depth())
    throw std::out_of_range("degree " + std::to_string(k) + " beyond resolution depth " + std::to_string(r.depth()));
  return r.term(k).contains(j) ? 1 : 0;
}

ExtTable::ExtTable(int n, int max_degree) : n_(n), max_degree_(max_degree) {
  if (n < 1) throw std::invalid_argument("N must be at least 1");
  if (max_degree < 0) throw std::invalid_argument("max degree must be nonnegative");
  entries_.assign(static_cast<std::size_t>(n) * n * (max_degree + 1), 0);
}

std::size_t ExtTable::index(int i, int j, int k) const {
  if (i < 1 || i > n_ || j < 1 || j > n_ || k < 0 || k > max_degree_) throw std::out_of_range("ExtTable index");
  return (static_cast<std::size_t>(i - 1) * n_ + (j - 1)) * (max_degree_ + 1) + k;
}

int& ExtTable::at(int i, int j, int k) { return entries_[index(i, j, k)]; }
int ExtTable::at(int i, int j, int k) const { return entries_[index(i, j, k)]; }

std::vector<int> ExtTable::row(int i, int j) const {
  std::vector<int> out;
  for (int k = 0; k <= max_degree_; ++k) out.push_back(at(i, j, k));
  return out;
}

ExtTable ext_table(int n, int max_degree) {
  ExtTable table(n, max_degree);
  const LineAlgebra alg(n, FieldSpec(2));
  std::vector<PeriodicComplex> res;
  for (int i = 1; i <= n; ++i) res.push_back(build_resolution(alg, i, std::max(max_degree, 1)));

  const std::size_t cells = static_cast<std::size_t>(n) * n;
  parallel_for(cells, [&](std::size_t cell) {
    const int i = static_cast<int>(cell) / n + 1;
    const int j = static_cast<int>(cell) % n + 1;
    const auto series = poincare_series(n, i, j, max_degree);
    for (int k = 0; k <= max_degree; ++k) {
      const int via_x = ext_dim_via_x(n, i, j, k);
      const int via_res = ext_dim_via_resolution(res[i - 1], j, k);
      if (via_x != series[k] || via_x != via_res) {
        std::ostringstream os;
        os << "Ext^" << k << "(S_" << i << ", S_" << j << "): x-module head " << via_x << ", series " << series[k]
           << ", resolution " << via_res;
        throw RouteMismatch(os.str());
      }
      table.at(i, j, k) = via_x;
    }
  });
  table.routes = {"x_module_head", "poincare_series", "resolution_terms"};
  return table;
}

}  // namespace extline
