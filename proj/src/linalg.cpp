#include "ptgeom/linalg.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace ptgeom {

int bareiss_rank(ZMat m) {
  if (m.empty() || m[0].empty()) return 0;
  const std::size_t rows = m.size(), cols = m[0].size();
  Int prev(1);
  std::size_t rr = 0;
  for (std::size_t c = 0; c < cols && rr < rows; ++c) {
    std::size_t pivot = rr;
    while (pivot < rows && m[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[rr], m[pivot]);
    for (std::size_t i = rr + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        m[i][j] = (m[rr][c] * m[i][j] - m[i][c] * m[rr][j]) / prev;
      }
      m[i][c] = 0;
    }
    prev = m[rr][c];
    ++rr;
  }
  return static_cast<int>(rr);
}

int rank(const QMat& m) {
  ZMat z;
  z.reserve(m.size());
  for (const auto& row : m) {
    Int l(1);
    for (const auto& x : row) l = lcm(l, denominator(x));
    ZVec zr;
    zr.reserve(row.size());
    for (const auto& x : row) zr.push_back(numerator(x) * (l / denominator(x)));
    z.push_back(std::move(zr));
  }
  return bareiss_rank(std::move(z));
}

std::optional<QVec> solve(const QMat& A, const QVec& b) {
  if (A.size() != b.size()) throw std::invalid_argument("dimension mismatch");
  if (A.empty()) return QVec{};
  const std::size_t rows = A.size(), cols = A[0].size();
  QMat m(rows, QVec(cols + 1));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m[i][j] = A[i][j];
    m[i][cols] = b[i];
  }
  std::vector<std::size_t> pivotCol;
  std::size_t rr = 0;
  for (std::size_t c = 0; c < cols && rr < rows; ++c) {
    std::size_t pivot = rr;
    while (pivot < rows && m[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[rr], m[pivot]);
    Rational inv = m[rr][c];
    for (std::size_t j = c; j <= cols; ++j) m[rr][j] /= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == rr || m[i][c] == 0) continue;
      Rational f = m[i][c];
      for (std::size_t j = c; j <= cols; ++j) m[i][j] -= f * m[rr][j];
    }
    pivotCol.push_back(c);
    ++rr;
  }
  for (std::size_t i = rr; i < rows; ++i) {
    if (m[i][cols] != 0) return std::nullopt;
  }
  QVec x(cols, Rational(0));
  for (std::size_t i = 0; i < pivotCol.size(); ++i) x[pivotCol[i]] = m[i][cols];
  return x;
}

ZVec content_reduce(ZVec v) {
  Int g(0);
  for (const auto& x : v) g = gcd(g, x);
  if (g == 0 || g == 1) return v;
  for (auto& x : v) x /= g;
  return v;
}

ZMat kernel_basis(const ZMat& m, int cols) {
  const std::size_t n = static_cast<std::size_t>(cols);
  QMat a;
  for (const auto& row : m) {
    if (row.size() != n) throw std::invalid_argument("dimension mismatch");
    QVec qr(row.begin(), row.end());
    a.push_back(std::move(qr));
  }
  std::vector<std::size_t> pivotCol;
  std::size_t rr = 0;
  for (std::size_t c = 0; c < n && rr < a.size(); ++c) {
    std::size_t pivot = rr;
    while (pivot < a.size() && a[pivot][c] == 0) ++pivot;
    if (pivot == a.size()) continue;
    std::swap(a[rr], a[pivot]);
    Rational inv = a[rr][c];
    for (std::size_t j = c; j < n; ++j) a[rr][j] /= inv;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == rr || a[i][c] == 0) continue;
      Rational f = a[i][c];
      for (std::size_t j = c; j < n; ++j) a[i][j] -= f * a[rr][j];
    }
    pivotCol.push_back(c);
    ++rr;
  }
  std::vector<bool> isPivot(n, false);
  for (std::size_t c : pivotCol) isPivot[c] = true;
  ZMat basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (isPivot[free]) continue;
    QVec x(n, Rational(0));
    x[free] = 1;
    for (std::size_t i = 0; i < pivotCol.size(); ++i) x[pivotCol[i]] = -a[i][free];
    Int l(1);
    for (const auto& q : x) l = lcm(l, denominator(q));
    ZVec row;
    row.reserve(n);
    for (const auto& q : x) row.push_back(numerator(q) * (l / denominator(q)));
    basis.push_back(content_reduce(std::move(row)));
  }
  return basis;
}

}  // namespace ptgeom
