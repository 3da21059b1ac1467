#pragma once

#include <cstddef>
#include <vector>

#include "sliplab/algebra.hpp"

namespace sliplab {

// Right module over `base`: f_i * e_j = sum_k raction[(i*base.dim+j)*mdim+k] f_k.
struct RightModule {
  Algebra base;
  std::size_t mdim = 0;
  Vec raction;

  std::span<const Residue> ract_row(std::size_t i, std::size_t j) const {
    return {raction.data() + (i * base.dim + j) * mdim, mdim};
  }

  Vec act(std::span<const Residue> m, std::span<const Residue> b) const;

  // sigma_b: column i = coords(f_i * b); its column space is X*b.
  Matrix action_matrix(std::span<const Residue> b) const;

  bool operator==(const RightModule&) const = default;
};

// (A,B)-bimodule: a_i * f_j = sum_k laction[(i*mdim+j)*mdim+k] f_k and the
// right action as in RightModule.
struct Bimodule {
  Algebra left_algebra;
  Algebra right_algebra;
  std::size_t mdim = 0;
  Vec laction;
  Vec raction;

  std::span<const Residue> lact_row(std::size_t i, std::size_t j) const {
    return {laction.data() + (i * mdim + j) * mdim, mdim};
  }
  std::span<const Residue> ract_row(std::size_t i, std::size_t j) const {
    return {raction.data() + (i * right_algebra.dim + j) * mdim, mdim};
  }

  Vec lact(std::span<const Residue> a, std::span<const Residue> m) const;
  Vec ract(std::span<const Residue> m, std::span<const Residue> b) const;

  // Forgets the left structure.
  RightModule right_module() const { return RightModule{right_algebra, mdim, raction}; }

  bool operator==(const Bimodule&) const = default;
};

Validation validate_module(const RightModule& x);
Validation validate_module(const Bimodule& m);

// Validating factories; throw ValidationFailed instead of returning bad values.
RightModule make_right_module(Algebra base, std::size_t mdim, Vec raction);
Bimodule make_bimodule(Algebra left, Algebra right, std::size_t mdim, Vec laction, Vec raction);

// X*b as a subspace of X (column space of the action matrix of b).
Subspace module_principal_image(const RightModule& x, std::span<const Residue> b);

// {a in A : a*M = 0}; right structure ignored.
Subspace left_annihilator(const Bimodule& m);

struct EndomorphismAlgebra {
  Algebra end_alg;
  Bimodule as_bimodule;          // M as an (End, B)-bimodule via phi*m = phi(m)
  std::vector<Matrix> basis;     // the commutant matrices realizing end_alg's basis
};

// Commutant of all right-action matrices, i.e. the B-module endomorphisms of
// M, as a structure-constant algebra; contains the identity, so dim >= 1.
EndomorphismAlgebra endomorphism_algebra(const RightModule& x);

struct PeirceSplit {
  Algebra corner_left;    // eAe
  Bimodule off_diagonal;  // eA(1-e) as an (eAe, (1-e)A(1-e))-bimodule
  Algebra corner_right;   // (1-e)A(1-e)
  Matrix embed_left;      // dim(a) x dim(eAe)
  Matrix embed_mid;       // dim(a) x mdim
  Matrix embed_right;     // dim(a) x dim((1-e)A(1-e))
};

// Splits A along a nontrivial left semicentral idempotent; verifies
// (1-e)Ae = {0} and that the three pieces span A.
PeirceSplit peirce_split(const Algebra& a, std::span<const Residue> e);

}  // namespace sliplab
