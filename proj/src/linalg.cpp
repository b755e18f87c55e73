#include "conecalc/linalg.hpp"

#include <utility>

#include "conecalc/error.hpp"

namespace conecalc {

namespace {

// Row-reduce in place; returns pivot columns. cols limits elimination to the
// leading block (the remaining columns ride along, for augmented systems).
std::vector<std::size_t> row_echelon(QMat& a, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < a.size(); ++col) {
    std::size_t sel = row;
    while (sel < a.size() && a[sel][col].is_zero()) ++sel;
    if (sel == a.size()) continue;
    std::swap(a[sel], a[row]);
    Rational inv = Rational(1) / a[row][col];
    for (auto& x : a[row]) x *= inv;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == row || a[i][col].is_zero()) continue;
      Rational f = a[i][col];
      for (std::size_t j = 0; j < a[i].size(); ++j)
        a[i][j] -= f * a[row][j];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

QMat transpose(const QMat& a) {
  if (a.empty()) return {};
  QMat out(a[0].size(), QVec(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) out[j][i] = a[i][j];
  return out;
}

int rank(QMat a) {
  if (a.empty()) return 0;
  return int(row_echelon(a, a[0].size()).size());
}

std::vector<QVec> left_kernel(const QMat& a) {
  // x A = 0  <=>  A^T x^T = 0; compute the right kernel of A^T.
  QMat at = transpose(a);
  std::size_t n = a.size();
  if (at.empty()) {
    // zero-column matrix: everything is in the kernel
    std::vector<QVec> basis;
    for (std::size_t i = 0; i < n; ++i) {
      QVec e(n, Rational(0));
      e[i] = Rational(1);
      basis.push_back(std::move(e));
    }
    return basis;
  }
  std::vector<std::size_t> pivots = row_echelon(at, n);
  std::vector<bool> is_pivot(n, false);
  for (std::size_t p : pivots) is_pivot[p] = true;
  std::vector<QVec> basis;
  for (std::size_t free_col = 0; free_col < n; ++free_col) {
    if (is_pivot[free_col]) continue;
    QVec v(n, Rational(0));
    v[free_col] = Rational(1);
    for (std::size_t i = 0; i < pivots.size(); ++i)
      v[pivots[i]] = -at[i][free_col];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<QVec> solve(QMat a, QVec b) {
  std::size_t rows = a.size();
  std::size_t cols = rows == 0 ? 0 : a[0].size();
  if (b.size() != rows) throw DomainError("solve: dimension mismatch");
  for (std::size_t i = 0; i < rows; ++i) a[i].push_back(b[i]);
  std::vector<std::size_t> pivots = row_echelon(a, cols);
  for (std::size_t i = pivots.size(); i < rows; ++i)
    if (!a[i][cols].is_zero()) return std::nullopt;
  QVec x(cols, Rational(0));
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = a[i][cols];
  return x;
}

Rational determinant(QMat a) {
  std::size_t n = a.size();
  for (const auto& row : a)
    if (row.size() != n) throw DomainError("determinant of non-square matrix");
  Rational det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t sel = col;
    while (sel < n && a[sel][col].is_zero()) ++sel;
    if (sel == n) return Rational(0);
    if (sel != col) {
      std::swap(a[sel], a[col]);
      det = -det;
    }
    det *= a[col][col];
    Rational inv = Rational(1) / a[col][col];
    for (std::size_t i = col + 1; i < n; ++i) {
      if (a[i][col].is_zero()) continue;
      Rational f = a[i][col] * inv;
      for (std::size_t j = col; j < n; ++j) a[i][j] -= f * a[col][j];
    }
  }
  return det;
}

IVec primitive_integer(const QVec& v) {
  BigInt den(1);
  for (const auto& x : v) den = den.divide_exact(BigInt::gcd(den, x.den())) * x.den();
  IVec out;
  out.reserve(v.size());
  BigInt content(0);
  for (const auto& x : v) {
    BigInt entry = x.num() * den.divide_exact(x.den());
    content = BigInt::gcd(content, entry);
    out.push_back(std::move(entry));
  }
  if (!content.is_zero() && !content.is_one())
    for (auto& e : out) e = e.divide_exact(content);
  return out;
}

IVec primitive_integer_signed(const QVec& v) {
  IVec out = primitive_integer(v);
  for (const auto& e : out) {
    if (e.is_zero()) continue;
    if (e.is_negative())
      for (auto& x : out) x = -x;
    break;
  }
  return out;
}

QVec to_rational(const IVec& v) {
  QVec out;
  out.reserve(v.size());
  for (const auto& x : v) out.emplace_back(x);
  return out;
}

}  // namespace conecalc
