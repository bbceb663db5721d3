#include "extline/x_calculus.hpp"

#include <algorithm>
#include <sstream>

namespace extline {

namespace {

int mod(int a, int m) {
  int r = a % m;
  return r < 0 ? r + m : r;
}

EndPosition flip(EndPosition p) { return p == EndPosition::Up ? EndPosition::Down : EndPosition::Up; }

void check_n(int n) {
  if (n < 1) throw std::invalid_argument("N must be at least 1");
}

void check_parity(const XLabel& x) {
  const int diff = x.left.index - x.right.index + (x.left.position != x.right.position ? 1 : 0);
  if (mod(diff, 2) != 0) throw ParityError("label " + x.to_string() + " violates the parity condition");
}

}  // namespace

std::string XLabel::to_string() const {
  auto end = [](const EndLabel& e) {
    return std::string(e.position == EndPosition::Up ? "^" : "_") + std::to_string(e.index);
  };
  return end(left) + "X" + end(right);
}

EndLabel normalize_end(int n, EndLabel e) {
  check_n(n);
  // rewrite as an up end, then reduce the index into 1..2N
  int j = e.position == EndPosition::Up ? e.index : 1 - e.index;
  const int r = mod(j - 1, 2 * n) + 1;
  if (r <= n) return {EndPosition::Up, r};
  return {EndPosition::Down, 2 * n + 1 - r};
}

XLabel normalize_x(int n, const XLabel& raw) {
  check_parity(raw);
  const EndLabel l = normalize_end(n, raw.left);
  const EndLabel r = normalize_end(n, raw.right);
  if (l.index == r.index) return XLabel::simple(l.index);
  if (l.index < r.index) return {l, r};
  return {{flip(r.position), r.index}, {flip(l.position), l.index}};
}

XLabel syzygy_power_label(int n, int i, int k) { return normalize_x(n, XLabel::up_up(i - k, i + k)); }

XLabel syzygy_label(int n, const XLabel& x) {
  check_parity(x);
  const int a = x.left.position == EndPosition::Up ? x.left.index : 1 - x.left.index;
  const int b = x.right.position == EndPosition::Up ? x.right.index : 1 - x.right.index;
  return normalize_x(n, XLabel::up_up(a - 1, b + 1));
}

std::vector<XLabel> canonical_labels(int n) {
  check_n(n);
  std::vector<XLabel> out;
  for (int lo = 1; lo <= n; ++lo) {
    out.push_back(XLabel::simple(lo));
    for (int hi = lo + 1; hi <= n; ++hi)
      for (auto pl : {EndPosition::Up, EndPosition::Down})
        for (auto pr : {EndPosition::Up, EndPosition::Down}) {
          const XLabel x{{pl, lo}, {pr, hi}};
          const int diff = hi - lo + (pl != pr ? 1 : 0);
          if (diff % 2 == 0) out.push_back(x);
        }
  }
  return out;
}

XStructure structure_of(int n, const XLabel& x) {
  if (!(normalize_x(n, x) == x)) throw std::invalid_argument("structure_of: label " + x.to_string() + " is not canonical");
  XStructure s;
  s.dim = x.right.index - x.left.index + 1;
  if (x.is_simple()) {
    s.head.insert(x.left.index);
    s.socle.insert(x.left.index);
    return s;
  }
  EndPosition pos = x.left.position;
  for (int v = x.left.index; v <= x.right.index; ++v, pos = flip(pos))
    (pos == EndPosition::Up ? s.head : s.socle).insert(v);
  return s;
}

QuiverRep realize_x(const LineAlgebra& alg, const XLabel& x) {
  const int n = alg.n();
  if (!(normalize_x(n, x) == x)) throw std::invalid_argument("realize_x: label " + x.to_string() + " is not canonical");
  std::vector<std::size_t> dims(static_cast<std::size_t>(n), 0);
  for (int v = x.left.index; v <= x.right.index; ++v) dims[v - 1] = 1;
  QuiverRep m(alg.quiver(), dims);
  if (x.is_simple()) return m;
  const FieldSpec& f = alg.field();
  EndPosition pos = x.left.position;
  for (int v = x.left.index; v < x.right.index; ++v, pos = flip(pos)) {
    Matrix one(f, 1, 1);
    one(0, 0) = f.one();
    // the arrow runs from the top of each adjacent pair to its bottom
    if (pos == EndPosition::Up) {
      m.set_arrow(alg.alpha(v), one);
    } else {
      m.set_arrow(alg.beta(v), one);
    }
  }
  return m;
}

std::vector<int> PSum::indices() const {
  std::vector<int> out;
  for (int v = lo; v <= hi; v += 2) out.push_back(v);
  return out;
}

std::string PSum::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int v : indices()) {
    os << (first ? "" : "+") << "P" << v;
    first = false;
  }
  return os.str();
}

int fold(int n, int x) {
  check_n(n);
  const int r = mod(x, 2 * n);
  return r > n ? 2 * n - r : r;
}

PSum normalize_p(int n, int left, int right) {
  const int u = fold(n, left - 1);
  const int j = fold(n, right);
  if (mod(u - j, 2) == 0)
    throw ParityError("projective sum _" + std::to_string(left) + "P_" + std::to_string(right) +
                      " violates the parity condition");
  return {std::min(u, j) + 1, std::max(u, j)};
}

}  // namespace extline
