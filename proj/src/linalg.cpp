#include "k3/linalg.hpp"

#include <stdexcept>

namespace k3 {

QMat q_identity(int n) {
  QMat m(n, QVec(n, Rational(0)));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

QMat q_mul(const QMat& a, const QMat& b) {
  size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  QMat r(n, QVec(m, Rational(0)));
  for (size_t i = 0; i < n; ++i)
    for (size_t l = 0; l < k; ++l) {
      if (sgn(a[i][l]) == 0) continue;
      for (size_t j = 0; j < m; ++j) r[i][j] += a[i][l] * b[l][j];
    }
  return r;
}

QMat q_transpose(const QMat& a) {
  if (a.empty()) return {};
  QMat r(a[0].size(), QVec(a.size()));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a[0].size(); ++j) r[j][i] = a[i][j];
  return r;
}

QVec q_matvec(const QMat& a, const QVec& v) {
  QVec r(a.size(), Rational(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < v.size(); ++j) r[i] += a[i][j] * v[j];
  return r;
}

Rational q_dot(const QVec& a, const QVec& b, const QMat& gram) {
  Rational s(0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) s += a[i] * gram[i][j] * b[j];
  }
  return s;
}

namespace {

// Row echelon with partial pivoting; returns pivot columns.
std::vector<int> echelon(QMat& a) {
  std::vector<int> pivots;
  size_t rows = a.size(), cols = a.empty() ? 0 : a[0].size();
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t p = r;
    while (p < rows && sgn(a[p][c]) == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    Rational inv = Rational(1) / a[r][c];
    for (size_t j = c; j < cols; ++j) a[r][j] *= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || sgn(a[i][c]) == 0) continue;
      Rational f = a[i][c];
      for (size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    pivots.push_back(static_cast<int>(c));
    ++r;
  }
  return pivots;
}

}  // namespace

int q_rank(QMat a) { return static_cast<int>(echelon(a).size()); }

Rational q_det(QMat a) {
  size_t n = a.size();
  if (n == 0) return Rational(1);
  if (a[0].size() != n) throw std::invalid_argument("q_det: not square");
  Rational det(1);
  for (size_t c = 0; c < n; ++c) {
    size_t p = c;
    while (p < n && sgn(a[p][c]) == 0) ++p;
    if (p == n) return Rational(0);
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    Rational inv = Rational(1) / a[c][c];
    for (size_t i = c + 1; i < n; ++i) {
      if (sgn(a[i][c]) == 0) continue;
      Rational f = a[i][c] * inv;
      for (size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  return det;
}

std::optional<QVec> q_solve(QMat a, QVec b) {
  size_t rows = a.size();
  size_t cols = rows ? a[0].size() : 0;
  for (size_t i = 0; i < rows; ++i) a[i].push_back(b[i]);
  auto pivots = echelon(a);
  QVec x(cols, Rational(0));
  for (size_t r = 0; r < pivots.size(); ++r) {
    if (pivots[r] == static_cast<int>(cols)) return std::nullopt;  // 0 = 1
    x[pivots[r]] = a[r].back();
  }
  // Verify (handles free variables set to zero).
  return x;
}

std::vector<QVec> q_nullspace(QMat a) {
  size_t cols = a.empty() ? 0 : a[0].size();
  auto pivots = echelon(a);
  std::vector<bool> is_pivot(cols, false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<QVec> basis;
  for (size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    QVec v(cols, Rational(0));
    v[f] = 1;
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a[r][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::tuple<int, int, int> symmetric_signature(QMat g) {
  int n = static_cast<int>(g.size());
  int pos = 0, neg = 0, zero = 0;
  // Congruence reduction: repeatedly pick a nonzero diagonal pivot (after a
  // symmetric row/column operation when the diagonal is all zero) and clear
  // its row and column.
  std::vector<int> active(n);
  for (int i = 0; i < n; ++i) active[i] = i;
  while (!active.empty()) {
    int p = -1;
    for (int i : active)
      if (sgn(g[i][i]) != 0) {
        p = i;
        break;
      }
    if (p < 0) {
      // Find off-diagonal entry; if none, the rest is the kernel.
      int a = -1, b = -1;
      for (size_t x = 0; x < active.size() && a < 0; ++x)
        for (size_t y = x + 1; y < active.size(); ++y)
          if (sgn(g[active[x]][active[y]]) != 0) {
            a = active[x];
            b = active[y];
            break;
          }
      if (a < 0) {
        zero += static_cast<int>(active.size());
        break;
      }
      // Row/col a += row/col b makes g[a][a] = 2 g[a][b] != 0.
      for (int j = 0; j < n; ++j) g[a][j] += g[b][j];
      for (int i = 0; i < n; ++i) g[i][a] += g[i][b];
      p = a;
    }
    if (sgn(g[p][p]) > 0) ++pos;
    else ++neg;
    Rational inv = Rational(1) / g[p][p];
    for (int i : active) {
      if (i == p || sgn(g[i][p]) == 0) continue;
      Rational f = g[i][p] * inv;
      for (int j = 0; j < n; ++j) g[i][j] -= f * g[p][j];
      for (int j = 0; j < n; ++j) g[j][i] -= f * g[j][p];
    }
    active.erase(std::find(active.begin(), active.end(), p));
  }
  return {pos, neg, zero};
}

ZMat hnf_row_basis(ZMat m) {
  size_t rows = m.size(), cols = m.empty() ? 0 : m[0].size();
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    // Reduce column c below row r by gcd steps.
    while (true) {
      size_t p = rows;
      for (size_t i = r; i < rows; ++i)
        if (m[i][c] != 0 && (p == rows || abs(m[i][c]) < abs(m[p][c]))) p = i;
      if (p == rows) break;
      std::swap(m[p], m[r]);
      bool done = true;
      for (size_t i = r + 1; i < rows; ++i) {
        if (m[i][c] == 0) continue;
        Integer q = m[i][c] / m[r][c];
        // Round toward making the remainder small.
        for (size_t j = 0; j < cols; ++j) m[i][j] -= q * m[r][j];
        if (m[i][c] != 0) done = false;
      }
      if (done) break;
    }
    if (m[r][c] == 0) continue;
    if (m[r][c] < 0)
      for (size_t j = 0; j < cols; ++j) m[r][j] = -m[r][j];
    // Reduce rows above.
    for (size_t i = 0; i < r; ++i) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), m[i][c].get_mpz_t(), m[r][c].get_mpz_t());
      if (q != 0)
        for (size_t j = 0; j < cols; ++j) m[i][j] -= q * m[r][j];
    }
    ++r;
  }
  m.resize(r);
  return m;
}

Integer z_det(ZMat a) {
  size_t n = a.size();
  if (n == 0) return Integer(1);
  // Fraction-free Bareiss elimination.
  Integer prev(1);
  Integer sign(1);
  for (size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return Integer(0);
      std::swap(a[p], a[k]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

}  // namespace k3
