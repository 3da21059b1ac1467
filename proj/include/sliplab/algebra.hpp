#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "sliplab/config.hpp"
#include "sliplab/subspace.hpp"

namespace sliplab {

// Finite-dimensional unital associative algebra over GF(p), presented by a
// dense structure-constant tensor: e_i * e_j = sum_k structure[(i*dim+j)*dim+k] e_k.
// Elements are coordinate vectors of length dim.
struct Algebra {
  PrimeField field;
  std::size_t dim = 0;
  Vec structure;
  Vec unit;

  std::span<const Residue> product_row(std::size_t i, std::size_t j) const {
    return {structure.data() + (i * dim + j) * dim, dim};
  }

  Vec basis_vector(std::size_t i) const {
    Vec v(dim, 0);
    v[i] = 1;
    return v;
  }

  Vec mul(std::span<const Residue> x, std::span<const Residue> y) const;

  // left_mul_matrix(a) * v = coords(a * v); right_mul_matrix(a) * v = coords(v * a).
  // The column space of right_mul_matrix(a) is the principal left ideal A*a.
  Matrix left_mul_matrix(std::span<const Residue> x) const;
  Matrix right_mul_matrix(std::span<const Residue> x) const;

  bool is_unit_elem(std::span<const Residue> x) const {
    return x.size() == dim && std::equal(x.begin(), x.end(), unit.begin());
  }

  bool operator==(const Algebra&) const = default;
};

// Checks associativity on all basis triples and both unit axioms on all basis
// vectors; trilinearity makes the basis checks sufficient.
Validation validate(const Algebra& a);
void require_valid(const Algebra& a);

// --- element enumeration ---------------------------------------------------

// p^d, throwing EnumerationCapExceeded when it would pass `cap`.
std::uint64_t checked_pow(std::uint32_t p, std::size_t d, std::uint64_t cap,
                          const char* what);

// All vectors of GF(p)^d in lexicographic order (index 0 most significant),
// starting from the zero vector.
class VectorScan {
 public:
  VectorScan(PrimeField f, std::size_t dim);
  // Writes the next vector into `out`; false once the supply is exhausted.
  bool next(Vec& out);

 private:
  PrimeField field_;
  std::size_t dim_;
  Vec state_;
  bool fresh_;
  bool done_;
};

// One normalized representative per scalar line (first nonzero coordinate 1),
// in lexicographic order; (p^d - 1)/(p - 1) vectors in total.
class ProjectiveScan {
 public:
  ProjectiveScan(PrimeField f, std::size_t dim);
  bool next(Vec& out);

 private:
  VectorScan raw_;
  Vec buf_;
};

std::vector<Vec> projective_representatives(const PrimeField& f, std::size_t dim,
                                            std::uint64_t cap);

// --- idempotent machinery ---------------------------------------------------

struct IdempotentReport {
  std::vector<Vec> idempotents;
  std::vector<Vec> left_semicentral;
  bool truncated = false;
};

// Scans elements in lexicographic order for e*e = e; flags each as left
// semicentral iff span{e_i*e} = span{e*e_i*e}.  Past the cap the scan stops
// and the report is marked truncated instead of throwing.
IdempotentReport idempotents(const Algebra& a, std::uint64_t cap);

bool is_idempotent(const Algebra& a, std::span<const Residue> e);
bool is_left_semicentral(const Algebra& a, std::span<const Residue> e);

// --- corners and closures ---------------------------------------------------

struct CornerAlgebra {
  Algebra corner;
  // dim(a) x dim(corner); maps corner coordinates back into the big algebra.
  Matrix embed;
  Subspace span;  // e*A*e as a subspace of A (the corner's basis rows)
};

// Peirce corner e*A*e with unit e; basis = canonical RREF basis of span{e*e_i*e}.
CornerAlgebra corner_algebra(const Algebra& a, std::span<const Residue> e);

// Closure of span({1} ∪ gens) under multiplication, iterated to a fixed point.
Subspace subalgebra_generated_by(const Algebra& a, const std::vector<Vec>& gens);

// True iff the subalgebra generated by all idempotents is the whole algebra.
bool is_idempotent_generated(const Algebra& a, std::uint64_t cap);

// span{e_i * v * e_j}; the two-sided ideal generated by v (A unital).
Subspace two_sided_ideal(const Algebra& a, std::span<const Residue> v);

// Number of subspaces of GF(p)^d (sum of Gaussian binomials), saturating at
// 2^64-1 on overflow.
std::uint64_t subspace_count(std::uint32_t p, std::size_t d);

// Every left ideal of `a`, found by brute-force enumeration of all subspaces
// of GF(p)^dim; throws once the subspace count passes the cap.
std::vector<Subspace> enumerate_left_ideals(const Algebra& a, std::uint64_t cap);

// Checks that `map` (dim x dim, x -> map*x) is a unital isomorphism src -> dst.
bool is_algebra_isomorphism(const Algebra& src, const Algebra& dst, const Matrix& map);

}  // namespace sliplab
