#include "serreq/linalg.hpp"

#include <algorithm>

namespace serreq {

Mat identity_matrix(const PrimeField& k, int n) {
  (void)k;
  Mat m(n, Vec(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

Mat mat_mul(const PrimeField& k, const Mat& a, const Mat& b) {
  std::size_t rows = a.size();
  std::size_t inner = b.size();
  std::size_t cols = inner ? b[0].size() : 0;
  Mat out(rows, Vec(cols, 0));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < inner; ++j) {
      if (a[i][j] == 0) continue;
      for (std::size_t l = 0; l < cols; ++l)
        out[i][l] = k.add(out[i][l], k.mul(a[i][j], b[j][l]));
    }
  return out;
}

bool mat_is_identity(const Mat& m) {
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i].size() != m.size()) return false;
    for (std::size_t j = 0; j < m[i].size(); ++j)
      if (m[i][j] != (i == j ? 1u : 0u)) return false;
  }
  return true;
}

std::vector<int> rref(const PrimeField& k, Mat& m) {
  std::vector<int> pivots;
  std::size_t rows = m.size();
  std::size_t cols = rows ? m[0].size() : 0;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t sel = r;
    while (sel < rows && m[sel][c] == 0) ++sel;
    if (sel == rows) continue;
    std::swap(m[sel], m[r]);
    Fp inv = k.inv(m[r][c]);
    for (std::size_t j = c; j < cols; ++j) m[r][j] = k.mul(m[r][j], inv);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Fp f = m[i][c];
      for (std::size_t j = c; j < cols; ++j)
        m[i][j] = k.sub(m[i][j], k.mul(f, m[r][j]));
    }
    pivots.push_back(static_cast<int>(c));
    ++r;
  }
  return pivots;
}

std::vector<Vec> nullspace(const PrimeField& k, const Mat& m, int ncols) {
  Mat a = m;
  std::vector<int> pivots = rref(k, a);
  std::vector<bool> is_pivot(ncols, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (int free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    Vec v(ncols, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r)
      v[pivots[r]] = k.neg(a[r][free]);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vec> solve(const PrimeField& k, Mat m, Vec rhs) {
  std::size_t rows = m.size();
  std::size_t cols = rows ? m[0].size() : 0;
  for (std::size_t i = 0; i < rows; ++i) m[i].push_back(rhs[i]);
  std::vector<int> pivots = rref(k, m);
  Vec x(cols, 0);
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    if (pivots[r] == static_cast<int>(cols)) return std::nullopt;  // 0 = nonzero
    x[pivots[r]] = m[r][cols];
  }
  return x;
}

std::optional<Mat> mat_inverse(const PrimeField& k, const Mat& m) {
  std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) return std::nullopt;
  Mat a = m;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i].push_back(i == j ? 1 : 0);
  }
  std::vector<int> pivots = rref(k, a);
  if (pivots.size() != n) return std::nullopt;
  for (std::size_t i = 0; i < n; ++i)
    if (pivots[i] != static_cast<int>(i)) return std::nullopt;
  Mat inv(n, Vec(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = a[i][n + j];
  return inv;
}

long rank(const PrimeField& k, Mat m) {
  return static_cast<long>(rref(k, m).size());
}

}  // namespace serreq
