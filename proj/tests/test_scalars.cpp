#include <doctest.h>

#include "helpers.hpp"

using namespace bc_test;

TEST_SUITE("scalars") {
    TEST_CASE("field operations cancel exactly") {
        CHECK(param_arith(L() + q(1), L() - q(1), ArithKind::mul) == L() * L() - q(1));
        CHECK(param_arith(q(2) * A(), q(2) * A(), ArithKind::div) == q(1));
        ParamScalar r = param_arith(A() * (A() + q(1)), A(), ArithKind::div);
        CHECK(r == A() + q(1));
        CHECK(r.is_polynomial());
    }

    TEST_CASE("division by zero is an error") {
        CHECK_THROWS_AS(param_arith(A(), q(0), ArithKind::div), algebra_error);
        CHECK_THROWS_AS(q(0).inverse(), algebra_error);
    }

    TEST_CASE("substitution") {
        // alpha = -lambda - (n-1)/2 with n = 5
        ParamScalar s = substitute_params(q(2) * (q(1) + A()), bind(Param::alpha, (-L() - q(2)).num()));
        CHECK(s == -(q(2) * L() + q(2)));
        CHECK(is_zero(substitute_params(L() * L() - q(1), bind(Param::lambda, ParamPoly(1)))));
        CHECK(substitute_params(M(), bind(Param::mu, ParamPoly(make_rational(3, 2)))) == q(3, 2));
    }

    TEST_CASE("substitution into a vanishing denominator names the binding") {
        ParamScalar s = q(1) / (L() - q(2));
        try {
            (void)substitute_params(s, bind(Param::lambda, ParamPoly(2)));
            FAIL("expected algebra_error");
        } catch (const algebra_error& e) {
            CHECK(std::string(e.what()).find("l") != std::string::npos);
        }
    }

    TEST_CASE("zero test") {
        CHECK(is_zero(L() - L()));
        CHECK(is_zero((L() + q(1)) * (L() - q(1)) - (L() * L() - q(1))));
        CHECK_FALSE(is_zero(q(2) * A() + q(1)));
    }

    TEST_CASE("rendering round-trips through the parser") {
        ParamScalar s = (q(3, 2) * L() * M() - A()) / (L() + q(1));
        CHECK(parse_scalar(s.to_string()) == s);
    }
}
