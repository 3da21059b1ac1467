#include "sliplab/subspace.hpp"

#include <algorithm>

namespace sliplab {

namespace {

std::size_t first_nonzero(std::span<const Residue> v) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i]) return i;
  return v.size();
}

}  // namespace

Subspace Subspace::zero(PrimeField f, std::size_t ambient) {
  Subspace s;
  s.ambient = ambient;
  s.basis = Matrix(f, 0, ambient);
  return s;
}

Subspace Subspace::full(PrimeField f, std::size_t ambient) {
  Subspace s;
  s.ambient = ambient;
  s.basis = Matrix::identity(f, ambient);
  return s;
}

bool Subspace::contains(std::span<const Residue> v) const {
  if (v.size() != ambient) throw DimensionMismatch("subspace contains: length mismatch");
  Vec w(v.begin(), v.end());
  for (std::size_t r = 0; r < basis.rows; ++r) {
    std::size_t p = first_nonzero(basis.row(r));
    Residue c = w[p];
    if (c) sub_scaled(basis.field, w, c, basis.row(r));
  }
  return is_zero_vec(w);
}

bool subspace_leq(const Subspace& s, const Subspace& t) {
  if (s.ambient != t.ambient || s.field() != t.field())
    throw DimensionMismatch("subspace_leq: ambient mismatch");
  for (std::size_t r = 0; r < s.basis.rows; ++r)
    if (!t.contains(s.basis.row(r))) return false;
  return true;
}

Subspace subspace_sum(const Subspace& s, const Subspace& t) {
  if (s.ambient != t.ambient || s.field() != t.field())
    throw DimensionMismatch("subspace_sum: ambient mismatch");
  SpanBuilder sb(s.field(), s.ambient);
  sb.seed(s);
  sb.seed(t);
  return sb.to_subspace();
}

Vec rref_coordinates(const Subspace& s, std::span<const Residue> v) {
  if (v.size() != s.ambient) throw DimensionMismatch("rref_coordinates: length mismatch");
  const std::size_t r = s.dim();
  Vec coords(r, 0);
  Vec recon(s.ambient, 0);
  for (std::size_t i = 0; i < r; ++i) {
    std::size_t p = first_nonzero(s.basis.row(i));
    coords[i] = v[p];
    if (coords[i]) add_scaled(s.field(), recon, coords[i], s.basis.row(i));
  }
  for (std::size_t i = 0; i < s.ambient; ++i)
    if (recon[i] != v[i]) throw Error("rref_coordinates: vector not in subspace");
  return coords;
}

SpanBuilder::SpanBuilder(PrimeField f, std::size_t ambient)
    : field_(f), ambient_(ambient), scratch_(ambient, 0) {}

bool SpanBuilder::add(std::span<const Residue> v) {
  if (v.size() != ambient_) throw DimensionMismatch("span add: length mismatch");
  scratch_.assign(v.begin(), v.end());
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    Residue c = scratch_[pivots_[r]];
    if (c) sub_scaled(field_, scratch_, c, rows_[r]);
  }
  std::size_t pc = first_nonzero(scratch_);
  if (pc == ambient_) return false;
  scale(field_, scratch_, field_.inv(scratch_[pc]));
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    Residue c = rows_[r][pc];
    if (c) sub_scaled(field_, rows_[r], c, scratch_);
  }
  auto it = std::lower_bound(pivots_.begin(), pivots_.end(), pc);
  std::size_t idx = static_cast<std::size_t>(it - pivots_.begin());
  pivots_.insert(it, pc);
  rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(idx), scratch_);
  return true;
}

void SpanBuilder::merge(const SpanBuilder& other) {
  if (other.ambient_ != ambient_ || other.field_ != field_)
    throw DimensionMismatch("span merge: ambient mismatch");
  for (const auto& r : other.rows_) add(r);
}

void SpanBuilder::seed(const Subspace& s) {
  if (s.ambient != ambient_ || s.field() != field_)
    throw DimensionMismatch("span seed: ambient mismatch");
  for (std::size_t r = 0; r < s.basis.rows; ++r) add(s.basis.row(r));
}

Subspace SpanBuilder::to_subspace() const {
  Subspace s;
  s.ambient = ambient_;
  s.basis = Matrix(field_, rows_.size(), ambient_);
  for (std::size_t r = 0; r < rows_.size(); ++r)
    std::copy(rows_[r].begin(), rows_[r].end(), s.basis.row(r).begin());
  return s;
}

Subspace row_space(const Matrix& m) {
  SpanBuilder sb(m.field, m.cols);
  for (std::size_t r = 0; r < m.rows; ++r) sb.add(m.row(r));
  return sb.to_subspace();
}

Subspace column_space(const Matrix& m) { return row_space(m.transposed()); }

Subspace nullspace(const Matrix& m) {
  RrefResult rr = rref(m);
  SpanBuilder sb(m.field, m.cols);
  std::vector<bool> is_pivot(m.cols, false);
  for (std::size_t p : rr.pivot_cols) is_pivot[p] = true;
  Vec v(m.cols, 0);
  for (std::size_t c = 0; c < m.cols; ++c) {
    if (is_pivot[c]) continue;
    std::fill(v.begin(), v.end(), 0);
    v[c] = 1;
    for (std::size_t i = 0; i < rr.rank; ++i) v[rr.pivot_cols[i]] = m.field.neg(rr.reduced.at(i, c));
    sb.add(v);
  }
  return sb.to_subspace();
}

Subspace left_nullspace(const Matrix& m) { return nullspace(m.transposed()); }

}  // namespace sliplab
