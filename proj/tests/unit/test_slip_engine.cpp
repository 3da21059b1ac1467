#include <doctest.h>

#include "sliplab/constructions.hpp"
#include "sliplab/errors.hpp"
#include "sliplab/slip.hpp"

using namespace sliplab;

namespace {

Matrix u2_witness() {
    // psi(1) = 0, psi(x) = x: preserves every left ideal of u(2) but is not a
    // left multiplier.
    Matrix psi(PrimeField(2), 2, 2);
    psi.at(1, 1) = 1;
    return psi;
}

}  // namespace

TEST_CASE("left multiplier space has full dimension") {
    for (const Algebra& a : {u_dual_numbers(3), tn(scalar_field(2), 2),
                             matn(scalar_field(2), 2)}) {
        MapSpace mult = left_multiplier_space(a);
        CHECK(mult.dim() == a.dim);
        // each basis map is a left multiplication
        for (std::size_t i = 0; i < mult.dim(); ++i)
            CHECK(is_left_multiplier_map(a, mult.basis_map(i)));
    }
}

TEST_CASE("lip space of the dual numbers") {
    Algebra u = u_dual_numbers(2);
    SpaceRun run = lip_space_run(u);
    CHECK(run.space.dim() == 3);
    CHECK(run.space.contains(u2_witness()));
    CHECK(run.space.contains(Matrix::identity(u.field, 2)));

    SlipReport rep = is_slip(u);
    CHECK(!rep.is_slip);
    CHECK(rep.multiplier_dim == 2);
    CHECK(rep.lip_dim == 3);
    REQUIRE(rep.witness.has_value());
    CHECK(is_lip_pointwise(u, *rep.witness));
    CHECK(!is_left_multiplier_map(u, *rep.witness));

    // same over GF(3) and GF(5)
    CHECK(is_slip(u_dual_numbers(3)).lip_dim == 3);
    CHECK(is_slip(u_dual_numbers(5)).lip_dim == 3);
}

TEST_CASE("slip holds on full matrix and upper triangular algebras") {
    CHECK(is_slip(matn(scalar_field(2), 2)).is_slip);
    CHECK(is_slip(tn(scalar_field(2), 2)).is_slip);
    CHECK(is_slip(tn(scalar_field(2), 3)).is_slip);
    CHECK(is_slip(matn(u_dual_numbers(2), 2)).is_slip);  // dim 8, lip_dim 8
    CHECK(is_slip(matn(u_dual_numbers(2), 2)).lip_dim == 8);
    CHECK(is_slip(block_upper(scalar_field(2), {{1, 2}}).algebra).lip_dim == 7);
    CHECK(is_slip(block_upper(scalar_field(2), {{2, 1}}).algebra).is_slip);
    CHECK(is_slip(scalar_field(2)).is_slip);  // dim 1 shortcut
}

TEST_CASE("projective reduction and early stop do not change the space") {
    for (const Algebra& a : {u_dual_numbers(3), tn(scalar_field(2), 2),
                             matn(scalar_field(2), 2), direct_product(u_dual_numbers(2),
                                                                      scalar_field(2))}) {
        RunConfig base;
        MapSpace reference = lip_space(a, base);

        RunConfig full = base;
        full.projective_reduction = false;
        CHECK(lip_space(a, full) == reference);

        RunConfig no_stop = base;
        no_stop.early_stop = false;
        CHECK(lip_space(a, no_stop) == reference);

        RunConfig neither = base;
        neither.projective_reduction = false;
        neither.early_stop = false;
        CHECK(lip_space(a, neither) == reference);
    }
}

TEST_CASE("early stop only fires when the floor is reached") {
    RunConfig no_stop;
    no_stop.early_stop = false;
    SpaceRun slow = lip_space_run(tn(scalar_field(2), 2), no_stop);
    CHECK(!slow.early_stop);
    SpaceRun fast = lip_space_run(tn(scalar_field(2), 2));
    CHECK(fast.space == slow.space);
    CHECK(fast.points_processed <= slow.points_processed);
}

TEST_CASE("enumeration cap exceeds cleanly") {
    RunConfig tiny;
    tiny.enumeration_cap = 4;
    CHECK_THROWS_AS(lip_space(tn(scalar_field(2), 2), tiny), EnumerationCapExceeded);
    CHECK_THROWS_AS(is_slip(matn(scalar_field(2), 2), tiny), EnumerationCapExceeded);
}

TEST_CASE("full ideal-lattice oracle") {
    Algebra u = u_dual_numbers(2);
    CHECK(lip_check_full(u, u2_witness(), 1 << 20));
    CHECK(lip_check_full(u, Matrix::identity(u.field, 2), 1 << 20));

    // the coordinate swap on gf(2) x gf(2) moves the ideal gf(2) x 0
    Algebra prod = direct_product(scalar_field(2), scalar_field(2));
    Matrix swap(prod.field, 2, 2);
    swap.at(0, 1) = 1;
    swap.at(1, 0) = 1;
    CHECK(!lip_check_full(prod, swap, 1 << 20));
    CHECK(is_left_multiplier_map(prod, Matrix::identity(prod.field, 2)));

    // oracle agrees with the constraint solver on u(2): all 16 matrices
    MapSpace lip = lip_space(u);
    Vec entries(4, 0);
    for (unsigned mask = 0; mask < 16; ++mask) {
        Matrix psi(u.field, 2, 2);
        for (std::size_t k = 0; k < 4; ++k) psi.data[k] = (mask >> k) & 1u;
        CHECK(lip.contains(psi) == lip_check_full(u, psi, 1 << 20));
    }
}

TEST_CASE("local multiplier spaces over modules") {
    // maps from the base field into a module are always multipliers
    CHECK(local_equals_multiplier(scalar_field(2), matrix_module(scalar_field(2), 2, 1)));

    // the regular module over u(2) reproduces the lip gap: locals have dim 3
    Algebra u = u_dual_numbers(2);
    RightModule reg = regular_module(u);
    MapSpace mult = module_multiplier_space(u, reg);
    MapSpace local = local_left_multiplier_space(u, reg);
    CHECK(mult.dim() == 2);
    CHECK(local.dim() == 3);
    CHECK(subspace_leq(mult.space, local.space));
    CHECK(!local_equals_multiplier(u, reg));

    // pointwise certification matches the solved space on every basis map
    for (std::size_t i = 0; i < local.dim(); ++i)
        CHECK(is_local_pointwise(u, reg, local.basis_map(i)));

    // mismatched base algebra is rejected
    CHECK_THROWS_AS(local_left_multiplier_space(scalar_field(2), reg), AlgebraMismatch);
}

TEST_CASE("lip decomposition on the 2x2 triangular algebra") {
    Algebra t2 = tn(scalar_field(2), 2);
    IdempotentReport rep = idempotents(t2, 1 << 20);
    // semicentral list: 0, E11, 1, E11+E12 — index 1 is E11
    const Vec& e = rep.left_semicentral[1];
    CHECK(e == Vec{1, 0, 0});

    MapSpace lip = lip_space(t2);
    CHECK(lip.dim() == 3);
    for (std::size_t i = 0; i < lip.dim(); ++i) {
        TriangularDecomposition dec =
            decompose_lip_triangular(t2, e, lip.basis_map(i), {}, &lip);
        CHECK(dec.all_checks());
        CHECK(dec.alpha.rows == 1);
        CHECK(dec.tau.rows == 1);
        CHECK(dec.beta2.rows == 1);
    }

    // a non-lip map is rejected: psi(E11) = E22 breaks the ideal A*E11
    Matrix bad(t2.field, 3, 3);
    bad.at(2, 0) = 1;
    CHECK_THROWS_AS(decompose_lip_triangular(t2, e, bad), NotLip);
}

TEST_CASE("lip decomposition across block constructions") {
    // every left multiplier on t3 decomposes at the first triangulating
    // idempotent
    BlockConstruction t3 = block_upper(scalar_field(2), {{1, 1, 1}});
    MapSpace mult = left_multiplier_space(t3.algebra);
    const Vec& e = t3.triangulating[0];
    for (std::size_t i = 0; i < mult.dim(); ++i) {
        TriangularDecomposition dec =
            decompose_lip_triangular(t3.algebra, e, mult.basis_map(i));
        CHECK(dec.all_checks());
    }

    // triangular construction over a bimodule: same picture
    TriangularConstruction tri = triangular(scalar_right_bimodule(u_dual_numbers(2)));
    MapSpace lip = lip_space(tri.algebra);
    for (std::size_t i = 0; i < lip.dim(); ++i) {
        TriangularDecomposition dec = decompose_lip_triangular(
            tri.algebra, tri.corner_idempotent, lip.basis_map(i), {}, &lip);
        CHECK(dec.all_checks());
        CHECK(dec.tau_compatible);
    }
}

TEST_CASE("witness maps survive the strongest checks") {
    Algebra u = u_dual_numbers(2);
    SlipReport rep = is_slip(u);
    REQUIRE(rep.witness.has_value());
    CHECK(lip_check_full(u, *rep.witness, 1 << 20));

    TriangularConstruction tri = triangular(scalar_right_bimodule(u));
    SlipReport tri_rep = is_slip(tri.algebra);
    CHECK(tri_rep.is_slip);
    CHECK(!tri_rep.witness.has_value());
}
