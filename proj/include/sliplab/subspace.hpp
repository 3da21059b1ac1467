#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "sliplab/matrix.hpp"

namespace sliplab {

// Subspace of GF(p)^ambient in canonical form: the basis matrix is in RREF
// with no zero rows, so two subspaces are equal iff the structs are equal.
struct Subspace {
  std::size_t ambient = 0;
  Matrix basis;  // dim() x ambient, RREF

  static Subspace zero(PrimeField f, std::size_t ambient);
  static Subspace full(PrimeField f, std::size_t ambient);

  std::size_t dim() const { return basis.rows; }
  const PrimeField& field() const { return basis.field; }

  bool contains(std::span<const Residue> v) const;

  bool operator==(const Subspace&) const = default;
};

bool subspace_leq(const Subspace& s, const Subspace& t);
Subspace subspace_sum(const Subspace& s, const Subspace& t);

// Coordinates of v in the RREF basis of s (read off at the pivot columns,
// then verified by reconstruction).  Throws Error if v is not in s.
Vec rref_coordinates(const Subspace& s, std::span<const Residue> v);

// Incremental RREF span.  add() returns whether the vector enlarged the
// span; rank() is O(1); merging two builders is adding one's rows to the other.
class SpanBuilder {
 public:
  SpanBuilder(PrimeField f, std::size_t ambient);

  bool add(std::span<const Residue> v);
  void merge(const SpanBuilder& other);
  void seed(const Subspace& s);

  std::size_t rank() const { return rows_.size(); }
  std::size_t ambient() const { return ambient_; }
  const PrimeField& field() const { return field_; }

  Subspace to_subspace() const;

 private:
  PrimeField field_;
  std::size_t ambient_;
  std::vector<Vec> rows_;            // RREF rows, pivot columns strictly increasing
  std::vector<std::size_t> pivots_;  // pivots_[i] = pivot column of rows_[i]
  Vec scratch_;
};

// Canonical spans derived from a matrix.
Subspace row_space(const Matrix& m);
Subspace column_space(const Matrix& m);
Subspace nullspace(const Matrix& m);
// Row vectors c with c * m = 0; the certificates that a vector misses im(m).
Subspace left_nullspace(const Matrix& m);

}  // namespace sliplab
