#include <doctest.h>

#include "helpers.hpp"

using namespace bc_test;

TEST_SUITE("polyring") {
    TEST_CASE("ring operations") {
        const int n = 3;
        GeoPoly xn = xi_poly(n, "xn");
        CHECK(poly_arith(xn, xn, RingOp::mul) == xi_poly(n, "xn^2"));
        CHECK(poly_arith(xn, xi_poly(n, "Sp"), RingOp::add) == xi_poly(n, "x1^2 + x2^2 + x3"));
        GeoPoly p = t_poly("m*t - l");
        CHECK(poly_arith(p, p, RingOp::sub).is_zero());
        CHECK_THROWS(poly_arith(xn, t_poly("t"), RingOp::add));
    }

    TEST_CASE("partial derivatives") {
        const int n = 4;
        CHECK(partial_derive(xi_poly(n, "xn^3"), n - 1) == xi_poly(n, "3*xn^2"));
        GeoPoly F2 = xi_poly(n, "-(2*l+n-3)*xn^2 + Sp");
        CHECK(partial_derive(F2, n - 1) == xi_poly(n, "-2*(2*l+n-3)*xn"));
        CHECK(partial_derive(xi_poly(n, "1"), 0).is_zero());
    }

    TEST_CASE("exact division") {
        const VarSet v = VarSet::xi(3);
        auto r = exact_divide(parse_poly("x1^2 - x2^2", v), parse_poly("x1 - x2", v));
        REQUIRE(r);
        CHECK(*r == parse_poly("x1 + x2", v));
        auto s = exact_divide(parse_poly("(2+4*a)*x3^3", v), parse_poly("x3", v));
        REQUIRE(s);
        CHECK(*s == parse_poly("(2+4*a)*x3^2", v));
        CHECK_FALSE(exact_divide(parse_poly("x1 + x2", v), parse_poly("x1*x2", v)));
        CHECK_THROWS(exact_divide(parse_poly("x1", v), GeoPoly(v)));
    }

    TEST_CASE("affine substitution") {
        CHECK(substitute_linear(x_poly("x^2"), q(2), q(1)) == t_poly("4*t^2 + 4*t + 1"));
        CHECK(substitute_linear(x_poly("x"), q(1), q(0)) == t_poly("t"));
    }

    TEST_CASE("homogenization") {
        CHECK(homogenize(t_poly("m*t - l"), 1) == xe_poly("m*xi - l*eta"));
        CHECK(homogenize(t_poly("1"), 0) == xe_poly("1"));
        CHECK(homogenize(t_poly("t^2"), 3) == xe_poly("xi^2*eta"));
        CHECK_THROWS(homogenize(t_poly("t^2"), 1));
        GeoPoly h = xe_poly("3*xi^2*eta + l*eta^3");
        CHECK(homogenize(dehomogenize(h, 3), 3) == h);
    }

    TEST_CASE("Gegenbauer tilde conversion") {
        CHECK(gegen_tilde_convert(x_poly("2*a*x"), 1) == t_poly("2*a"));
        CHECK(gegen_tilde_convert(x_poly("-a + 2*a*(1+a)*x^2"), 2) == t_poly("a*t + 2*a*(1+a)"));
        CHECK(gegen_tilde_convert(x_poly("-2*a*(1+a)*x + 4/3*a*(1+a)*(2+a)*x^3"), 3) == t_poly("2/3*a*(a+1)*(3*t + 2*(2+a))"));
        CHECK_THROWS(gegen_tilde_convert(x_poly("x^2 + x"), 2));
    }

    TEST_CASE("homogeneous components") {
        const VarSet v = VarSet::xi(3);
        CHECK(homogeneous_component(parse_poly("x3 + x3^2", v), 2) == parse_poly("x3^2", v));
        GeoPoly F2 = xi_poly(3, "-(2*l)*xn^2 + Sp");
        CHECK(homogeneous_component(F2, 2) == F2);
        CHECK(homogeneous_component(parse_poly("1", v), 3).is_zero());
    }

    TEST_CASE("canonical rendering round-trips") {
        GeoPoly p = xi_poly(5, "3*Sp^2 - 6*(n+2*l-5)*xn^2*Sp + (n+2*l-7)*(n+2*l-5)*xn^4");
        CHECK(parse_poly(p.to_string(), VarSet::xi(5)) == p);
        CHECK(parse_poly(p.to_string(), VarSet::xi(5)).to_string() == p.to_string());
    }

    TEST_CASE("proportionality") {
        const VarSet v = VarSet::xi(3);
        auto c = proportionality(parse_poly("(l+1)*x1^2 + (l+1)*x3", v), parse_poly("x1^2 + x3", v));
        REQUIRE(c);
        CHECK(*c == L() + q(1));
        CHECK_FALSE(proportionality(parse_poly("x1^2 + 2*x3", v), parse_poly("x1^2 + x3", v)));
    }
}
