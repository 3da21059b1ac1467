#pragma once

#include <cstdint>
#include <optional>

#include "sliplab/config.hpp"
#include "sliplab/modules.hpp"

namespace sliplab {

// Linear maps are plain matrices: psi(v) = matrix * v, rows = codomain dim,
// cols = domain dim.  Vectorization is row-major, i.e. entry (r, s) of the
// map sits at index r*cols + s — fixed so constraint matrices reproduce.

// A linear subspace of Hom(domain, codomain) in vectorized form.
struct MapSpace {
  std::size_t domain_dim = 0;
  std::size_t codomain_dim = 0;
  Subspace space;

  std::size_t dim() const { return space.dim(); }
  bool contains(const Matrix& map) const;
  Matrix basis_map(std::size_t i) const;

  bool operator==(const MapSpace&) const = default;
};

struct SlipReport {
  std::size_t multiplier_dim = 0;
  std::size_t lip_dim = 0;
  bool is_slip = false;
  std::optional<Matrix> witness;  // LIP map that is not a left multiplier
  std::uint64_t points_processed = 0;
  bool early_stop = false;
};

// A solution-space computation together with its enumeration statistics.
struct SpaceRun {
  MapSpace space;
  std::uint64_t points_processed = 0;
  bool early_stop = false;
};

// span{ L_x : x basis of A }; dimension is exactly dim(A) since L_x(1) = x.
MapSpace left_multiplier_space(const Algebra& a);

// The space of linear psi with psi(v) in A*v for every v: for each projective
// representative v the rows c of left_nullspace(right_mul_matrix(v)) give the
// constraints (c ⊗ v) · vec(Psi) = 0, and the result is the nullspace of the
// stacked constraints.  Early stop once the constraint rank reaches
// dim^2 - dim, the ceiling left by the always-present multipliers.
SpaceRun lip_space_run(const Algebra& a, const RunConfig& cfg = {});
MapSpace lip_space(const Algebra& a, const RunConfig& cfg = {});

SlipReport is_slip(const Algebra& a, const RunConfig& cfg = {});

// Same constraint scheme with the module action in place of right
// multiplication: {psi : B -> X with psi(v) in X*v for all v}.
SpaceRun local_left_multiplier_space_run(const Algebra& b, const RightModule& x,
                                         const RunConfig& cfg = {});
MapSpace local_left_multiplier_space(const Algebra& b, const RightModule& x,
                                     const RunConfig& cfg = {});

// span{ b |-> x0 * b : x0 basis of X }; dimension exactly mdim.
MapSpace module_multiplier_space(const Algebra& b, const RightModule& x);

bool local_equals_multiplier(const Algebra& b, const RightModule& x, const RunConfig& cfg = {});

// psi == L_{psi(1)}.
bool is_left_multiplier_map(const Algebra& a, const Matrix& psi);

// Direct point-by-point checks (no constraint solving): psi(v) in A*v,
// respectively psi(v) in X*v, for every projective v.
bool is_lip_pointwise(const Algebra& a, const Matrix& psi, const RunConfig& cfg = {});
bool is_local_pointwise(const Algebra& b, const RightModule& x, const Matrix& psi,
                        const RunConfig& cfg = {});

// Oracle over the literal definition: psi(J) ⊆ J for every left ideal J,
// with the full ideal lattice enumerated by brute force.
bool lip_check_full(const Algebra& a, const Matrix& psi, std::uint64_t cap);

// Block decomposition of a LIP map on a triangular algebra along a nontrivial
// left semicentral idempotent e, in Peirce coordinates
// (A' = eTe, M' = eT(1-e), B' = (1-e)T(1-e)).
struct TriangularDecomposition {
  PeirceSplit split;
  Matrix alpha;  // A' -> A'
  Matrix tau;    // M' -> M'
  Matrix beta1;  // B' -> M'
  Matrix beta2;  // B' -> B'
  bool tau_compatible = false;  // tau(a*m) = alpha(a)*m on all basis pairs
  bool alpha_lip = false;
  bool beta2_lip = false;
  bool beta1_local = false;  // beta1 is a local left multiplier B' -> M'

  bool all_checks() const { return tau_compatible && alpha_lip && beta2_lip && beta1_local; }
};

// Verifies psi is LIP (via `lip` when supplied, else pointwise), splits t at e,
// conjugates psi into Peirce coordinates, rejects any entry outside the
// guaranteed block pattern (BlockStructureViolated — a falsification event),
// and extracts + checks the four component maps.
TriangularDecomposition decompose_lip_triangular(const Algebra& t, std::span<const Residue> e,
                                                 const Matrix& psi, const RunConfig& cfg = {},
                                                 const MapSpace* lip = nullptr);

}  // namespace sliplab
