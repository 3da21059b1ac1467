#pragma once

#include <cstdint>
#include <vector>

#include "sliplab/modules.hpp"

namespace sliplab {

// GF(p) as a 1-dimensional algebra.
Algebra scalar_field(std::uint32_t p);

// GF(p)[x]/(x^2) with basis (1, x).
Algebra u_dual_numbers(std::uint32_t p);

// Block pattern (k_1, ..., k_m), all parts >= 1, n = sum.
struct BlockShape {
  std::vector<std::size_t> parts;
  std::size_t total() const;
};

struct BlockConstruction {
  Algebra algebra;
  // F_j = sum of E_ii over block j (tensored with the base unit); a set of
  // left triangulating idempotents of the block algebra.
  std::vector<Vec> triangulating;
};

// Block upper triangular matrices over `base`: basis = in-pattern matrix
// units tensored with the base basis, positions row-major, base innermost.
BlockConstruction block_upper(const Algebra& base, const BlockShape& shape);

// Full matrix algebra = one block; upper triangular = all blocks of size 1.
Algebra matn(const Algebra& base, std::size_t n);
Algebra tn(const Algebra& base, std::size_t n);

struct TriangularConstruction {
  Algebra algebra;
  Vec corner_idempotent;  // (1_A, 0, 0); verified left semicentral
  std::size_t left_dim = 0;
  std::size_t middle_dim = 0;
  std::size_t right_dim = 0;
};

// 2x2 triangular algebra over the bimodule's corner algebras:
// (a, m, b)(a', m', b') = (aa', a*m' + m*b', bb'); basis order A, M, B.
TriangularConstruction triangular(const Bimodule& m);

Algebra direct_product(const Algebra& a, const Algebra& b);

// --- module builders ---------------------------------------------------------

// A over itself by right multiplication.
RightModule regular_module(const Algebra& a);
// A as an (A, A)-bimodule by multiplication on both sides.
Bimodule regular_bimodule(const Algebra& a);
// A as an (A, GF(p))-bimodule: right action is scalar multiplication.
Bimodule scalar_right_bimodule(const Algebra& a);
// The zero bimodule over (a, b).
Bimodule zero_bimodule(const Algebra& a, const Algebra& b);
// Columns M_{n x 1}(base) as a (matn(base, n), base)-bimodule.
Bimodule column_bimodule(const Algebra& base, std::size_t n);
// Rows M_{1 x n}(base) as a right matn(base, n)-module.
RightModule row_module(const Algebra& base, std::size_t n);
// M_{r x s}(A) as a right A-module by entrywise right multiplication.
RightModule matrix_module(const Algebra& a, std::size_t r, std::size_t s);
// A as an ((A x A), A)-bimodule, left action through the first factor.
Bimodule e3_bimodule(const Algebra& a);
// A as an ((A x B), A)-bimodule, left action through the first factor.
Bimodule mixed_bimodule(const Algebra& a, const Algebra& b);

// Checks the left-triangulating clauses for an ordered idempotent list:
// (i) nonzero idempotents summing to 1; (ii) the first is left semicentral;
// (iii) each later one lies in the corner cut out by the preceding ones and
// is left semicentral there.
Validation verify_triangulating(const Algebra& a, const std::vector<Vec>& idems);

}  // namespace sliplab
