#include <doctest.h>

#include "sliplab/constructions.hpp"
#include "sliplab/errors.hpp"

using namespace sliplab;

TEST_CASE("module validation accepts the stock builders") {
    Algebra u2 = u_dual_numbers(2);
    Algebra m2 = matn(scalar_field(2), 2);
    CHECK(validate_module(regular_module(u2)).passed());
    CHECK(validate_module(regular_bimodule(m2)).passed());
    CHECK(validate_module(scalar_right_bimodule(u2)).passed());
    CHECK(validate_module(zero_bimodule(u2, m2)).passed());
    CHECK(validate_module(column_bimodule(scalar_field(2), 2)).passed());
    CHECK(validate_module(row_module(scalar_field(3), 2)).passed());
    CHECK(validate_module(matrix_module(m2, 2, 2)).passed());
    CHECK(validate_module(e3_bimodule(m2)).passed());
    CHECK(validate_module(mixed_bimodule(m2, u2)).passed());
}

TEST_CASE("module validation pinpoints broken axioms") {
    // break the unit action of the regular module over u(2): f_0 * 1 = 0
    RightModule x = regular_module(u_dual_numbers(2));
    Vec saved = x.raction;
    x.raction[(0 * 2 + 0) * 2 + 0] = 0;
    Validation v = validate_module(x);
    CHECK(!v.passed());
    CHECK((v.code == Validation::Code::unit_action_violated ||
           v.code == Validation::Code::module_axiom_violated));
    x.raction = saved;
    CHECK(validate_module(x).passed());

    CHECK_THROWS_AS(make_right_module(u_dual_numbers(2), 2, Vec(8, 1)), ValidationFailed);

    // break compatibility in a bimodule: (a f) b must equal a (f b)
    Bimodule m = regular_bimodule(u_dual_numbers(2));
    m.laction[(1 * 2 + 0) * 2 + 0] = 1;  // x * 1 gains a spurious unit component
    CHECK(!validate_module(m).passed());
}

TEST_CASE("principal module images") {
    Algebra u2 = u_dual_numbers(2);
    RightModule reg = regular_module(u2);
    // U(2) * x = span{x}
    Subspace img = module_principal_image(reg, Vec{0, 1});
    CHECK(img.dim() == 1);
    CHECK(img.contains(Vec{0, 1}));
    // U(2) * 1 = everything
    CHECK(module_principal_image(reg, Vec{1, 0}).dim() == 2);
    // scaling invariance over GF(5)
    RightModule reg5 = regular_module(u_dual_numbers(5));
    Vec b = {2, 3};
    Vec c = b;
    scale(reg5.base.field, c, 4);
    CHECK(module_principal_image(reg5, b) == module_principal_image(reg5, c));
}

TEST_CASE("left annihilators") {
    Algebra m2 = matn(scalar_field(2), 2);
    Algebra u2 = u_dual_numbers(2);

    // regular bimodule acts faithfully
    CHECK(left_annihilator(regular_bimodule(m2)).dim() == 0);

    // product-square: the second factor acts as zero
    Subspace ann = left_annihilator(e3_bimodule(m2));
    CHECK(ann.dim() == 4);
    for (std::size_t i = 4; i < 8; ++i) {
        Vec e(8, 0);
        e[i] = 1;
        CHECK(ann.contains(e));
    }

    // mixed product: annihilator is {0} x u(2), dimension 2
    Subspace mixed = left_annihilator(mixed_bimodule(m2, u2));
    CHECK(mixed.dim() == 2);
    Vec e4(6, 0);
    e4[4] = 1;
    CHECK(mixed.contains(e4));

    // the zero module is annihilated by everything
    CHECK(left_annihilator(zero_bimodule(u2, m2)).dim() == 2);
}

TEST_CASE("endomorphism algebras") {
    // two copies of the scalar line: full 2x2 endomorphism algebra
    EndomorphismAlgebra pair = endomorphism_algebra(matrix_module(scalar_field(2), 2, 1));
    CHECK(pair.end_alg.dim == 4);
    CHECK(validate(pair.end_alg).passed());
    CHECK(validate_module(pair.as_bimodule).passed());
    CHECK(left_annihilator(pair.as_bimodule).dim() == 0);

    // the regular module over u(2): commutant of right multiplications is
    // the left multiplications, again 2-dimensional
    EndomorphismAlgebra reg = endomorphism_algebra(regular_module(u_dual_numbers(2)));
    CHECK(reg.end_alg.dim == 2);
    CHECK(validate(reg.end_alg).passed());

    // rows over m2(gf(2)) form a simple module: only scalars commute
    EndomorphismAlgebra rows = endomorphism_algebra(row_module(scalar_field(2), 2));
    CHECK(rows.end_alg.dim == 1);

    // each basis matrix really commutes with every right action matrix
    RightModule x = regular_module(u_dual_numbers(2));
    EndomorphismAlgebra ea = endomorphism_algebra(x);
    for (const Matrix& phi : ea.basis) {
        for (std::size_t j = 0; j < x.base.dim; ++j) {
            Matrix rb = x.action_matrix(x.base.basis_vector(j));
            CHECK(phi.multiplied_by(rb) == rb.multiplied_by(phi));
        }
    }
}

TEST_CASE("peirce splits") {
    Algebra t2 = tn(scalar_field(2), 2);
    Vec e11 = t2.basis_vector(0);
    PeirceSplit ps = peirce_split(t2, e11);
    CHECK(ps.corner_left.dim == 1);
    CHECK(ps.off_diagonal.mdim == 1);
    CHECK(ps.corner_right.dim == 1);
    CHECK(validate(ps.corner_left).passed());
    CHECK(validate(ps.corner_right).passed());
    CHECK(validate_module(ps.off_diagonal).passed());

    // e22 is not left semicentral in t2 (E12 * e22 = E12 survives)
    CHECK_THROWS_AS(peirce_split(t2, t2.basis_vector(2)), NotLeftSemicentral);
    CHECK_THROWS_AS(peirce_split(t2, Vec{0, 0, 0}), NontrivialIdempotentRequired);
    CHECK_THROWS_AS(peirce_split(t2, t2.unit), NontrivialIdempotentRequired);
    CHECK_THROWS_AS(peirce_split(t2, t2.basis_vector(1)), NotIdempotent);

    // block shape (1,2) over gf(2): corners of dimension 1 and 4, middle 2
    BlockConstruction b12 = block_upper(scalar_field(2), {{1, 2}});
    PeirceSplit big = peirce_split(b12.algebra, b12.triangulating[0]);
    CHECK(big.corner_left.dim == 1);
    CHECK(big.off_diagonal.mdim == 2);
    CHECK(big.corner_right.dim == 4);
}

TEST_CASE("module action matrices act correctly") {
    Bimodule col = column_bimodule(scalar_field(3), 2);
    RightModule x = col.right_module();
    for (std::size_t j = 0; j < x.base.dim; ++j) {
        Vec b = x.base.basis_vector(j);
        Matrix sigma = x.action_matrix(b);
        for (std::size_t i = 0; i < x.mdim; ++i) {
            Vec f(x.mdim, 0);
            f[i] = 1;
            CHECK(sigma.apply(f) == x.act(f, b));
        }
    }
}
