#include <doctest.h>

#include "sliplab/constructions.hpp"
#include "sliplab/errors.hpp"
#include "sliplab/zpd.hpp"

using namespace sliplab;

TEST_CASE("scalar fields are trivially zero-product determined") {
    ZpdReport r = is_zpd(scalar_field(2));
    CHECK(r.is_zpd);
    CHECK(r.kernel_dim == 0);
    CHECK(r.span_dim == 0);
    CHECK(is_zpd(scalar_field(7)).is_zpd);
}

TEST_CASE("dual numbers are not zero-product determined") {
    ZpdReport r = is_zpd(u_dual_numbers(2));
    CHECK(!r.is_zpd);
    CHECK(r.span_dim == 1);
    CHECK(r.kernel_dim == 2);

    auto obstruction = zpd_obstruction(u_dual_numbers(2));
    REQUIRE(obstruction.has_value());
    // the obstruction is a kernel tensor outside the zero-product span
    CHECK(!obstruction->is_zero());
}

TEST_CASE("full matrix algebras are zero-product determined") {
    ZpdReport r = is_zpd(matn(scalar_field(2), 2));
    CHECK(r.is_zpd);
    CHECK(r.span_dim == 12);
    CHECK(r.kernel_dim == 12);
    CHECK(!zpd_obstruction(matn(scalar_field(2), 2)).has_value());

    CHECK(is_zpd(matn(scalar_field(3), 2)).is_zpd);
    CHECK(is_zpd(tn(scalar_field(2), 2)).is_zpd);
    CHECK(is_zpd(tn(scalar_field(2), 3)).is_zpd);
}

TEST_CASE("zero-product span generators really multiply to zero") {
    // reconstruct the span by hand for u(3) and compare dimensions
    Algebra u = u_dual_numbers(3);
    ZpdReport r = is_zpd(u);
    std::size_t d = u.dim;
    SpanBuilder sb(u.field, d * d);
    Vec tensor(d * d, 0);
    VectorScan scan_a(u.field, d);
    Vec a;
    while (scan_a.next(a)) {
        VectorScan scan_b(u.field, d);
        Vec b;
        while (scan_b.next(b)) {
            if (!is_zero_vec(u.mul(a, b))) continue;
            for (std::size_t i = 0; i < d; ++i)
                for (std::size_t j = 0; j < d; ++j)
                    tensor[i * d + j] = u.field.mul(a[i], b[j]);
            sb.add(tensor);
        }
    }
    CHECK(sb.rank() == r.span_dim);
}

TEST_CASE("kernel dimension matches the multiplication matrix") {
    for (const Algebra& a : {u_dual_numbers(2), tn(scalar_field(2), 2),
                             matn(scalar_field(3), 2)}) {
        Matrix mu = multiplication_matrix(a);
        CHECK(mu.rows == a.dim);
        CHECK(mu.cols == a.dim * a.dim);
        CHECK(nullspace(mu).dim() == a.dim * a.dim - a.dim);
        CHECK(is_zpd(a).kernel_dim == a.dim * a.dim - a.dim);
        // the multiplication matrix applied to a basis tensor gives products
        Vec tensor(a.dim * a.dim, 0);
        tensor[0 * a.dim + 0] = 1;  // e0 (x) e0
        CHECK(mu.apply(tensor) == a.mul(a.basis_vector(0), a.basis_vector(0)));
    }
}

TEST_CASE("triangular algebras inherit zpd from their corners") {
    // corners gf(2), gf(2): triangle is t2(gf(2)), zpd
    CHECK(is_zpd(triangular(regular_bimodule(scalar_field(2))).algebra).is_zpd);
    // corner u(2) spoils it
    CHECK(!is_zpd(triangular(scalar_right_bimodule(u_dual_numbers(2))).algebra).is_zpd);
    // corners m2(gf(2)), gf(2): zpd again
    CHECK(is_zpd(triangular(column_bimodule(scalar_field(2), 2)).algebra).is_zpd);
}

TEST_CASE("products multiply the zpd property") {
    Algebra f2 = scalar_field(2);
    Algebra u2 = u_dual_numbers(2);
    CHECK(is_zpd(direct_product(f2, f2)).is_zpd);
    CHECK(!is_zpd(direct_product(f2, u2)).is_zpd);
    CHECK(!is_zpd(direct_product(u2, u2)).is_zpd);
    CHECK(is_zpd(direct_product(matn(f2, 2), f2)).is_zpd);
}

TEST_CASE("zpd respects the enumeration cap") {
    RunConfig tiny;
    tiny.enumeration_cap = 2;
    CHECK_THROWS_AS(is_zpd(tn(scalar_field(2), 2), tiny), EnumerationCapExceeded);
}
