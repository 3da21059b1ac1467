#include "sliplab/matrix.hpp"

namespace sliplab {

Matrix Matrix::identity(PrimeField f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Matrix Matrix::transposed() const {
  Matrix t(field, cols, rows);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) t.at(c, r) = at(r, c);
  return t;
}

Matrix Matrix::multiplied_by(const Matrix& rhs) const {
  if (field != rhs.field) throw AlgebraMismatch("matrix product: field mismatch");
  if (cols != rhs.rows) throw DimensionMismatch("matrix product: inner dimension mismatch");
  Matrix out(field, rows, rhs.cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t k = 0; k < cols; ++k) {
      Residue a = at(r, k);
      if (a) add_scaled(field, out.row(r), a, rhs.row(k));
    }
  }
  return out;
}

Vec Matrix::apply(std::span<const Residue> v) const {
  if (v.size() != cols) throw DimensionMismatch("matrix apply: length mismatch");
  Vec out(rows, 0);
  for (std::size_t r = 0; r < rows; ++r) out[r] = dot(field, row(r), v);
  return out;
}

Vec Matrix::apply_left(std::span<const Residue> v) const {
  if (v.size() != rows) throw DimensionMismatch("matrix apply_left: length mismatch");
  Vec out(cols, 0);
  for (std::size_t r = 0; r < rows; ++r)
    if (v[r]) add_scaled(field, out, v[r], row(r));
  return out;
}

RrefResult rref(const Matrix& m) {
  RrefResult res;
  res.reduced = m;
  Matrix& a = res.reduced;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols && r < a.rows; ++c) {
    std::size_t pivot = a.rows;
    for (std::size_t i = r; i < a.rows; ++i) {
      if (a.at(i, c) != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot == a.rows) continue;
    if (pivot != r)
      for (std::size_t c2 = 0; c2 < a.cols; ++c2) std::swap(a.at(pivot, c2), a.at(r, c2));
    scale(a.field, a.row(r), a.field.inv(a.at(r, c)));
    for (std::size_t i = 0; i < a.rows; ++i) {
      if (i == r) continue;
      Residue f = a.at(i, c);
      if (f) sub_scaled(a.field, a.row(i), f, a.row(r));
    }
    res.pivot_cols.push_back(c);
    ++r;
  }
  res.rank = r;
  return res;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows != m.cols) throw DimensionMismatch("inverse: matrix not square");
  const std::size_t n = m.rows;
  Matrix aug(m.field, n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug.at(r, c) = m.at(r, c);
    aug.at(r, n + r) = 1;
  }
  RrefResult rr = rref(aug);
  if (rr.rank < n || rr.pivot_cols[n - 1] != n - 1) return std::nullopt;
  Matrix inv(m.field, n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv.at(r, c) = rr.reduced.at(r, n + c);
  return inv;
}

bool in_column_space(const Matrix& m, std::span<const Residue> b) {
  if (b.size() != m.rows) throw DimensionMismatch("in_column_space: length mismatch");
  Matrix aug(m.field, m.rows, m.cols + 1);
  for (std::size_t r = 0; r < m.rows; ++r) {
    for (std::size_t c = 0; c < m.cols; ++c) aug.at(r, c) = m.at(r, c);
    aug.at(r, m.cols) = b[r];
  }
  RrefResult rr = rref(aug);
  return rr.pivot_cols.empty() || rr.pivot_cols.back() != m.cols;
}

}  // namespace sliplab
