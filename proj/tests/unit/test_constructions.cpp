#include <doctest.h>

#include "sliplab/constructions.hpp"
#include "sliplab/errors.hpp"
#include "sliplab/slip.hpp"

using namespace sliplab;

TEST_CASE("construction dimensions") {
    CHECK(scalar_field(2).dim == 1);
    CHECK(u_dual_numbers(3).dim == 2);
    CHECK(tn(scalar_field(2), 2).dim == 3);
    CHECK(tn(scalar_field(2), 3).dim == 6);
    CHECK(matn(scalar_field(2), 2).dim == 4);
    CHECK(matn(u_dual_numbers(2), 2).dim == 8);
    CHECK(block_upper(scalar_field(2), {{1, 2}}).algebra.dim == 7);
    CHECK(block_upper(scalar_field(2), {{2, 1}}).algebra.dim == 7);
    CHECK(block_upper(scalar_field(2), {{1, 1, 2}}).algebra.dim == 11);
    CHECK(direct_product(scalar_field(2), matn(scalar_field(2), 2)).dim == 5);
    CHECK(triangular(scalar_right_bimodule(u_dual_numbers(2))).algebra.dim == 5);
    CHECK(triangular(zero_bimodule(scalar_field(2), scalar_field(2))).algebra.dim == 2);
    CHECK(triangular(e3_bimodule(matn(scalar_field(2), 2))).algebra.dim == 16);
    CHECK(triangular(mixed_bimodule(matn(scalar_field(2), 2), u_dual_numbers(2))).algebra.dim ==
          14);
}

TEST_CASE("single-block pattern equals the full matrix algebra") {
    BlockConstruction one_block = block_upper(u_dual_numbers(2), {{2}});
    Algebra direct = matn(u_dual_numbers(2), 2);
    CHECK(one_block.algebra == direct);  // entry-identical, not just isomorphic
    CHECK(one_block.triangulating.size() == 1);
    CHECK(one_block.triangulating[0] == one_block.algebra.unit);

    BlockConstruction all_ones = block_upper(scalar_field(3), {{1, 1, 1}});
    CHECK(all_ones.algebra == tn(scalar_field(3), 3));
}

TEST_CASE("block algebras validate and their idempotents triangulate") {
    BlockConstruction b = block_upper(scalar_field(2), {{1, 2}});
    CHECK(validate(b.algebra).passed());
    REQUIRE(b.triangulating.size() == 2);
    CHECK(verify_triangulating(b.algebra, b.triangulating).passed());

    // reversing the list breaks the first-element semicentrality clause
    std::vector<Vec> reversed = {b.triangulating[1], b.triangulating[0]};
    Validation v = verify_triangulating(b.algebra, reversed);
    CHECK(!v.passed());
    CHECK(v.code == Validation::Code::not_left_semicentral);
    CHECK(v.where[0] == 0);

    // a list that does not sum to the unit
    std::vector<Vec> short_list = {b.triangulating[0]};
    CHECK(verify_triangulating(b.algebra, short_list).code == Validation::Code::sum_not_unit);

    // the zero element is flagged
    std::vector<Vec> with_zero = {b.triangulating[0], Vec(b.algebra.dim, 0),
                                  b.triangulating[1]};
    CHECK(verify_triangulating(b.algebra, with_zero).code == Validation::Code::zero_idempotent);

    BlockConstruction four = block_upper(u_dual_numbers(2), {{1, 2}});
    CHECK(verify_triangulating(four.algebra, four.triangulating).passed());
}

TEST_CASE("the final corner of a block pattern controls slip") {
    // shape (2,1) over u(2): trailing corner is u(2) itself, so slip fails
    BlockConstruction bad = block_upper(u_dual_numbers(2), {{2, 1}});
    std::size_t k = bad.triangulating.size();
    // the last triangulating idempotent cuts out the trailing corner
    CornerAlgebra last = corner_algebra(bad.algebra, bad.triangulating[k - 1]);
    CHECK(last.corner.dim == 2);
    CHECK(!is_slip(last.corner).is_slip);

    // shape (1,2) over u(2): trailing corner is m2(u(2)), which is slip
    BlockConstruction good = block_upper(u_dual_numbers(2), {{1, 2}});
    CornerAlgebra last2 = corner_algebra(good.algebra, good.triangulating[1]);
    CHECK(last2.corner.dim == 8);
    CHECK(is_slip(last2.corner).is_slip);
}

TEST_CASE("triangular constructions round-trip through the peirce split") {
    for (const Bimodule& m :
         {scalar_right_bimodule(u_dual_numbers(2)), regular_bimodule(scalar_field(3)),
          column_bimodule(scalar_field(2), 2)}) {
        TriangularConstruction tri = triangular(m);
        CHECK(validate(tri.algebra).passed());
        CHECK(tri.left_dim == m.left_algebra.dim);
        CHECK(tri.middle_dim == m.mdim);
        CHECK(tri.right_dim == m.right_algebra.dim);
        CHECK(is_left_semicentral(tri.algebra, tri.corner_idempotent));

        PeirceSplit ps = peirce_split(tri.algebra, tri.corner_idempotent);
        // the split reproduces the input data entry for entry
        CHECK(ps.corner_left == m.left_algebra);
        CHECK(ps.corner_right == m.right_algebra);
        CHECK(ps.off_diagonal == m);
    }
}

TEST_CASE("triangular over the zero bimodule is the direct product") {
    Algebra prod = direct_product(scalar_field(2), scalar_field(2));
    Algebra tri = triangular(zero_bimodule(scalar_field(2), scalar_field(2))).algebra;
    CHECK(is_algebra_isomorphism(prod, tri, Matrix::identity(PrimeField(2), 2)));
}

TEST_CASE("stock algebra files stay in canonical residue range") {
    for (const Algebra& a : {u_dual_numbers(65521), matn(scalar_field(3), 2)}) {
        for (Residue c : a.structure) CHECK(c < a.field.modulus());
        for (Residue c : a.unit) CHECK(c < a.field.modulus());
    }
}

TEST_CASE("row and column modules multiply on the correct sides") {
    // columns: (E_ij (x) u) * (f_j (x) v) = f_i (x) uv
    Bimodule col = column_bimodule(scalar_field(2), 2);
    Algebra m2 = matn(scalar_field(2), 2);
    CHECK(col.left_algebra == m2);
    Vec e12 = m2.basis_vector(1);  // E12
    Vec f1(2, 0);
    f1[1] = 1;  // f_1
    CHECK(col.lact(e12, f1) == Vec{1, 0});  // E12 * f_1 = f_0
    Vec f0(2, 0);
    f0[0] = 1;
    CHECK(is_zero_vec(col.lact(e12, f0)));  // E12 * f_0 = 0

    // rows: (f_j (x) v) * (E_jl (x) u) = f_l (x) vu
    RightModule rows = row_module(scalar_field(2), 2);
    CHECK(rows.base == m2);
    CHECK(rows.act(f0, e12) == Vec{0, 1});     // f_0 * E12 = f_1
    CHECK(is_zero_vec(rows.act(f1, e12)));     // f_1 * E12 = 0
}

TEST_CASE("mixed bimodule acts through the first factor only") {
    Algebra m2 = matn(scalar_field(2), 2);
    Algebra u2 = u_dual_numbers(2);
    Bimodule mix = mixed_bimodule(m2, u2);
    CHECK(mix.left_algebra.dim == 6);
    CHECK(mix.right_algebra == m2);
    CHECK(mix.mdim == 4);
    // (x, 0) acts as x, (0, y) acts as zero
    Vec m = {1, 0, 1, 0};  // E11 + E21
    Vec first(6, 0);
    first[0] = 1;  // (E11, 0)
    CHECK(mix.lact(first, m) == m2.mul(m2.basis_vector(0), m));
    Vec second(6, 0);
    second[4] = 1;  // (0, 1)
    CHECK(is_zero_vec(mix.lact(second, m)));
}
