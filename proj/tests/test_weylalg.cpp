#include <doctest.h>

#include "branchcheck/so_pair.hpp"
#include "helpers.hpp"

using namespace bc_test;

TEST_SUITE("weylalg") {
    const VarSet V = VarSet::xi(3);

    TEST_CASE("apply") {
        CHECK(apply_poly(DiffOp::partial(V, 2), parse_poly("x3^2", V)) == parse_poly("2*x3", V));
        auto ctx = SoPairContext::make_formal(3);
        CHECK(apply_poly(op_P(ctx), ctx.xn()) == ctx.constant(ctx.lambda));
    }

    TEST_CASE("ladder f(2) on F_2") {
        auto ctx = SoPairContext::make_formal(3);
        const GeoPoly F2 = singular_vector_F(ctx, 2).poly;
        const GeoPoly F1 = singular_vector_F(ctx, 1).poly;
        auto c = proportionality(apply(ladder_ops(ctx, 2).f, F2).to_poly(), F1);
        REQUIRE(c);
        CHECK(*c == q(2) * (q(2) * ctx.alpha + q(1)));
    }

    TEST_CASE("composition") {
        const DiffOp d = DiffOp::partial(V, 2);
        const DiffOp x = DiffOp::mult(parse_poly("x3", V));
        CHECK(op_equals(compose(d, x), x * d + DiffOp::identity(V)));
        CHECK(op_equals(d * d, DiffOp::derivative(V, {0, 0, 2})));
    }

    TEST_CASE("apply and compose agree on the ladder") {
        auto ctx = SoPairContext::make_formal(3);
        const GeoPoly F1 = singular_vector_F(ctx, 1).poly;
        const DiffOp e0 = ladder_ops(ctx, 0).e, f1 = ladder_ops(ctx, 1).f;
        CHECK((apply(e0 * f1, F1) - apply(e0, apply(f1, F1).to_poly())).is_zero());
    }

    TEST_CASE("commutators") {
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                DiffOp c = commutator(DiffOp::partial(V, i), DiffOp::mult(GeoPoly::variable(V, j)));
                CHECK(op_equals(c, DiffOp::scalar(V, q(i == j ? 1 : 0))));
            }
        CHECK(op_equals(commutator(DiffOp::euler(V), DiffOp::partial(V, 2)), -DiffOp::partial(V, 2)));
    }

    TEST_CASE("operator equality") {
        DiffOp e(V);
        for (int i = 0; i < 3; ++i) e += DiffOp::mult(GeoPoly::variable(V, i)) * DiffOp::partial(V, i);
        CHECK(op_equals(DiffOp::euler(V), e));
        auto ctx = SoPairContext::make_formal(3);
        CHECK_FALSE(op_equals(op_P(ctx), op_Q(ctx)));
        CHECK(op_P(ctx).order() == 2);
    }

    TEST_CASE("normal ordering strategies agree") {
        std::vector<OpSymbol> w{OpSymbol::laplacian(), OpSymbol::mult(parse_poly("x1*x3", V)), OpSymbol::euler(), OpSymbol::partial(2),
                                OpSymbol::mult(parse_poly("x2^2 + l", V))};
        DiffOp a = normal_order(w, V, RewriteStrategy::leftmost);
        DiffOp b = normal_order(w, V, RewriteStrategy::rightmost);
        CHECK(op_equals(a, b));
        DiffOp p = DiffOp::identity(V);
        for (const auto& s : w) p = p * s.expand(V);
        CHECK(op_equals(a, p));
    }

    TEST_CASE("rational coefficients differentiate by the quotient rule") {
        auto ctx = SoPairContext::make_formal(3);
        // S'/xn applied and composed consistently
        const DiffOp f = ladder_ops(ctx, 3).f;
        const GeoPoly F3 = singular_vector_F(ctx, 3).poly;
        RatCoeff r = apply(f, F3);
        CHECK(r.is_polynomial());
    }
}
