#include <doctest.h>

#include "branchcheck/so_pair.hpp"
#include "helpers.hpp"

using namespace bc_test;

namespace {

std::optional<ParamScalar> ratio(const RatCoeff& image, const GeoPoly& target) {
    if (!image.is_polynomial()) return std::nullopt;
    if (image.num().is_zero()) return ParamScalar(0);
    return proportionality(image.to_poly(), target);
}

}  // namespace

TEST_SUITE("so_pair") {
    TEST_CASE("displayed singular vectors") {
        for (int n : {3, 4, 5}) {
            auto ctx = SoPairContext::make_formal(n);
            CHECK(singular_vector_F(ctx, 0).poly == xi_poly(n, "1"));
            CHECK(singular_vector_F(ctx, 1).poly == xi_poly(n, "xn"));
            CHECK(singular_vector_F(ctx, 2).poly == xi_poly(n, "-(2*l+n-3)*xn^2 + Sp"));
            CHECK(singular_vector_F(ctx, 3).poly == xi_poly(n, "-(2*l+n-5)*xn^3 + 3*xn*Sp"));
            CHECK(singular_vector_F(ctx, 4).poly == xi_poly(n, "3*Sp^2 - 6*(n+2*l-5)*xn^2*Sp + (n+2*l-7)*(n+2*l-5)*xn^4"));
        }
    }

    TEST_CASE("singular vectors solve the primed system") {
        auto ctx = SoPairContext::make_formal(3);
        CHECK(verify_singular(ctx, singular_vector_F(ctx, 2).poly));
        CHECK(verify_singular(ctx, ctx.constant(q(1))));
        CHECK_FALSE(verify_singular(ctx, ctx.s_full()));
    }

    TEST_CASE("P lowers and Q raises") {
        auto ctx = SoPairContext::make_formal(5);
        auto F = [&](int l) { return singular_vector_F(ctx, l).poly; };
        CHECK(apply_poly(op_P(ctx), F(1)) == F(0) * ctx.lambda);
        CHECK(apply_poly(op_P(ctx), F(0)).is_zero());
        CHECK(ratio(apply(op_P(ctx), F(2)), F(1)).has_value());
        CHECK(apply_poly(op_Q(ctx), F(0)) == xi_poly(5, "-(l+1)*(n+2*l-1)*xn"));
        CHECK(apply_poly(op_Q(ctx), F(3)) == F(4) * (ctx.lambda - q(2)));
    }

    TEST_CASE("low ladder constants") {
        auto ctx = SoPairContext::make_formal(4);
        auto F = [&](int l) { return singular_vector_F(ctx, l).poly; };
        auto e0 = ratio(apply(ladder_ops(ctx, 0).e, F(0)), F(1));
        REQUIRE(e0);
        CHECK(*e0 == -q(2) * ctx.alpha);
        auto e1 = ratio(apply(ladder_ops(ctx, 1).e, F(1)), F(2));
        REQUIRE(e1);
        CHECK(*e1 == q(-1));
        auto f2 = ratio(apply(ladder_ops(ctx, 2).f, F(2)), F(1));
        REQUIRE(f2);
        CHECK(*f2 == q(2) * (q(2) * ctx.alpha + q(1)));
    }

    TEST_CASE("Casimir acts by 2 alpha (alpha - 1)") {
        auto ctx = SoPairContext::make_formal(3);
        const ParamScalar c = q(2) * ctx.alpha * (ctx.alpha - q(1));
        for (int l : {0, 3}) {
            GeoPoly F = singular_vector_F(ctx, l).poly;
            CHECK((apply(casimir_op(ctx, l), F) - RatCoeff(F * c)).is_zero());
        }
    }

    TEST_CASE("t model") {
        auto ctx = SoPairContext::make_formal(3);
        Records r = t_model_check(ctx, 5);
        CHECK_FALSE(any_failed(r));
        GeoPoly C2 = gegenbauer_tilde({2, ctx.alpha});
        CHECK(apply_poly(tilde_lowering(2), C2) == gegenbauer_tilde({1, ctx.alpha}) * (q(2) * ctx.alpha + q(1)));
    }

    TEST_CASE("lift and drop are inverse") {
        auto ctx = SoPairContext::make_formal(4);
        GeoPoly g = t_poly("3*t^2 + l*t - 1");
        GeoPoly p = lift_from_t(ctx, g, 5);
        auto back = drop_to_t(ctx, p, 5);
        REQUIRE(back);
        CHECK(*back == g);
        CHECK_FALSE(drop_to_t(ctx, ctx.xi(0), 1));
    }

    TEST_CASE("normalization poles") {
        auto poles = normalization_poles(3, 4);
        CHECK(std::find(poles.begin(), poles.end(), Rational(0)) != poles.end());
        // the normalized route still succeeds there
        auto ctx = SoPairContext::make_specialized(3, Rational(0));
        for (int l = 0; l <= 6; ++l) CHECK(verify_singular(ctx, singular_vector_F(ctx, l).poly));
    }

    TEST_CASE("commutator findings") {
        auto ctx = SoPairContext::make_formal(3);
        CHECK(commutator_eP(ctx).order() == 2);
        CHECK_FALSE(op_equals(commutator_PQ(ctx), DiffOp::scalar(ctx.vars, q(0))));
        Records r = verify_nonclosure(ctx, 2);
        CHECK_FALSE(any_failed(r));
    }

    TEST_CASE("suite runs clean for small n") {
        for (int n : {2, 3}) {
            Records r = verify_so_suite(SoPairContext::make_formal(n), 4);
            for (const auto& x : r) CHECK_MESSAGE(x.status != Status::fail, x.check_id);
        }
    }
}
