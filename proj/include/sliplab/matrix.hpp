#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "sliplab/gf.hpp"

namespace sliplab {

// Dense row-major matrix over GF(p).  Equality is entrywise (same field,
// same shape, same entries) — nothing is ever compared up to basis change.
struct Matrix {
  PrimeField field;
  std::size_t rows = 0;
  std::size_t cols = 0;
  Vec data;

  Matrix() = default;
  Matrix(PrimeField f, std::size_t r, std::size_t c)
      : field(f), rows(r), cols(c), data(r * c, 0) {}

  Residue& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  Residue at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }

  std::span<Residue> row(std::size_t r) { return {data.data() + r * cols, cols}; }
  std::span<const Residue> row(std::size_t r) const { return {data.data() + r * cols, cols}; }

  static Matrix identity(PrimeField f, std::size_t n);

  Matrix transposed() const;
  Matrix multiplied_by(const Matrix& rhs) const;

  // m * v  (v as column vector).
  Vec apply(std::span<const Residue> v) const;
  // v * m  (v as row vector).
  Vec apply_left(std::span<const Residue> v) const;

  bool is_zero() const { return is_zero_vec(data); }

  bool operator==(const Matrix&) const = default;
};

struct RrefResult {
  std::size_t rank = 0;
  Matrix reduced;
  std::vector<std::size_t> pivot_cols;
};

// Reduced row echelon form with deterministic pivoting: scan columns left to
// right, take the first nonzero row at or below the cursor.
RrefResult rref(const Matrix& m);

std::optional<Matrix> inverse(const Matrix& m);

// Rank of [m | b] equals rank of m, i.e. b lies in the column space.
bool in_column_space(const Matrix& m, std::span<const Residue> b);

}  // namespace sliplab
