#ifndef BOUQUET_MATRIX_HPP
#define BOUQUET_MATRIX_HPP

#include <bouquet/rational.hpp>

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace bouquet {

using Vector = std::vector<Rational>;
using Matrix = std::vector<Vector>;  // row major
using IntVector = std::vector<Integer>;
using IntMatrix = std::vector<IntVector>;

inline Rational dot(const Vector& a, const Vector& b) {
  Rational s = 0;
  for (size_t i = 0; i < a.size() && i < b.size(); ++i) s += a[i] * b[i];
  return s;
}

inline Vector mat_vec(const Matrix& m, const Vector& x) {
  Vector y(m.size(), Rational(0));
  for (size_t i = 0; i < m.size(); ++i) y[i] = dot(m[i], x);
  return y;
}

inline Matrix transpose(const Matrix& m) {
  if (m.empty()) return {};
  Matrix t(m[0].size(), Vector(m.size(), Rational(0)));
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
  return t;
}

// In-place row reduction; returns the pivot column of every nonzero row.
inline std::vector<size_t> rref(Matrix& m) {
  std::vector<size_t> pivots;
  if (m.empty()) return pivots;
  const size_t rows = m.size();
  const size_t cols = m[0].size();
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t sel = rows;
    for (size_t i = r; i < rows; ++i)
      if (m[i][c] != 0) {
        sel = i;
        break;
      }
    if (sel == rows) continue;
    std::swap(m[r], m[sel]);
    const Rational inv = Rational(1) / m[r][c];
    for (size_t j = c; j < cols; ++j) m[r][j] *= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      const Rational f = m[i][c];
      for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

inline size_t rank(Matrix m) { return rref(m).size(); }

// Basis of {x : m x = 0}; cols fixes the ambient dimension even when m is empty.
inline std::vector<Vector> kernel_basis(Matrix m, size_t cols) {
  for (auto& row : m) row.resize(cols, Rational(0));
  const auto pivots = rref(m);
  std::vector<char> is_pivot(cols, 0);
  for (const auto c : pivots) is_pivot[c] = 1;
  std::vector<Vector> basis;
  for (size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vector v(cols, Rational(0));
    v[f] = 1;
    for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m[i][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

// One solution of a x = b, if the system is consistent.
inline std::optional<Vector> solve(const Matrix& a, const Vector& b) {
  const size_t cols = a.empty() ? 0 : a[0].size();
  Matrix aug = a;
  for (size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
  const auto pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
  Vector x(cols, Rational(0));
  for (size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug[i][cols];
  return x;
}

// Column-style integer echelon form for lattice membership tests.
// Pivot choice: smallest nonzero magnitude in the row, lowest index on ties.
// Each pivot column ends with zeros strictly above its pivot row.
struct ColumnEchelon {
  IntMatrix h;                                    // n x k after column operations
  std::vector<std::pair<size_t, size_t>> pivots;  // (row, column), rows increasing
};

inline ColumnEchelon column_echelon(IntMatrix h) {
  ColumnEchelon ce;
  const size_t n = h.size();
  const size_t k = n == 0 ? 0 : h[0].size();
  size_t col = 0;
  for (size_t row = 0; row < n && col < k; ++row) {
    while (true) {
      size_t best = k;
      for (size_t j = col; j < k; ++j) {
        if (h[row][j] == 0) continue;
        if (best == k || abs(h[row][j]) < abs(h[row][best])) best = j;
      }
      if (best == k) break;  // no pivot in this row
      if (best != col)
        for (size_t i = 0; i < n; ++i) std::swap(h[i][best], h[i][col]);
      bool clean = true;
      for (size_t j = col + 1; j < k; ++j) {
        if (h[row][j] == 0) continue;
        const Integer q = h[row][j] / h[row][col];  // truncated division
        if (q != 0)
          for (size_t i = 0; i < n; ++i) h[i][j] -= q * h[i][col];
        if (h[row][j] != 0) clean = false;
      }
      if (clean) {
        ce.pivots.emplace_back(row, col);
        ++col;
        break;
      }
    }
  }
  ce.h = std::move(h);
  return ce;
}

// Does v lie in the integer span of the generators?
inline bool lattice_member(const std::vector<Vector>& generators, const Vector& v) {
  const size_t n = v.size();
  Integer d = 1;
  for (const auto& g : generators)
    for (const auto& x : g) d = lcm(d, x.get_den());
  for (const auto& x : v) d = lcm(d, x.get_den());

  IntMatrix h(n, IntVector(generators.size(), Integer(0)));
  for (size_t j = 0; j < generators.size(); ++j)
    for (size_t i = 0; i < n && i < generators[j].size(); ++i) {
      const Rational s = generators[j][i] * d;
      h[i][j] = s.get_num();
    }
  IntVector w(n);
  for (size_t i = 0; i < n; ++i) {
    const Rational s = v[i] * d;
    if (s.get_den() != 1) return false;
    w[i] = s.get_num();
  }

  const auto ce = column_echelon(std::move(h));
  size_t p = 0;
  for (size_t row = 0; row < n; ++row) {
    if (p < ce.pivots.size() && ce.pivots[p].first == row) {
      const size_t c = ce.pivots[p].second;
      const Integer& piv = ce.h[row][c];
      if (w[row] % piv != 0) return false;
      const Integer q = w[row] / piv;
      if (q != 0)
        for (size_t i = 0; i < n; ++i) w[i] -= q * ce.h[i][c];
      ++p;
    } else if (w[row] != 0) {
      return false;
    }
  }
  return true;
}

}  // namespace bouquet

#endif
