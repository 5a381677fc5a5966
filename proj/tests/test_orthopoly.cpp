#include <doctest.h>

#include "branchcheck/orthopoly.hpp"
#include "helpers.hpp"

using namespace bc_test;

TEST_SUITE("orthopoly") {
    TEST_CASE("Pochhammer and binomials") {
        CHECK(pochhammer(A(), 3) == (A() + q(1)) * (A() + q(2)) * (A() + q(3)));
        CHECK(pochhammer(q(1), 4) == q(120));
        CHECK(pochhammer(L(), 0) == q(1));
        CHECK(gen_binomial(A() + q(2), 2) == (A() + q(2)) * (A() + q(1)) / q(2));
        CHECK(gen_binomial(L(), 0) == q(1));
        CHECK(gen_binomial(q(3), 5).is_zero());
    }

    TEST_CASE("Gegenbauer polynomials") {
        CHECK(gegenbauer({0, A()}) == x_poly("1"));
        CHECK(gegenbauer({2, A()}) == x_poly("-a + 2*a*(1+a)*x^2"));
        CHECK(gegenbauer({3, A()}) == x_poly("-2*a*(1+a)*x + 4/3*a*(1+a)*(2+a)*x^3"));
        CHECK(gegenbauer({-1, A()}).is_zero());
        for (int l = 0; l <= 8; ++l) CHECK(gegenbauer({l, A()}) == gegenbauer({l, A()}, GegenbauerMethod::explicit_sum));
    }

    TEST_CASE("Jacobi polynomials") {
        GeoPoly P2 = substitute_linear(jacobi({2, -L() - q(1), M() + L() - q(3)}), q(2), q(1));
        CHECK(P2 == t_poly("-1/2*(m*(1-m)*t^2 + 2*(1-m)*(1-l)*t + l*(1-l))"));
        CHECK(jacobi({0, A(), M()}) == x_poly("1"));
        ParamScalar at1(0);
        const GeoPoly P1 = jacobi({1, A(), M()});
        for (const auto& [e, c] : P1.terms()) at1 += c;
        CHECK(at1 == A() + q(1));
    }

    TEST_CASE("t-line recursion") {
        auto c1 = jacobi_recursion_coeffs(1, L(), M());
        REQUIRE(c1.size() == 2);
        CHECK(c1[0] == -L());
        CHECK(c1[1] == M());
        CHECK(jacobi_recursion_coeffs(0, L(), M()) == std::vector<ParamScalar>{q(1)});
        GeoPoly P2 = t_poly("-1/2*(m*(1-m)*t^2 + 2*(1-m)*(1-l)*t + l*(1-l))");
        auto c2 = jacobi_recursion_coeffs(2, L(), M());
        for (int i = 0; i <= 2; ++i) CHECK(c2[i] == P2.coefficient({i}));
        CHECK_THROWS_AS(jacobi_recursion_coeffs(3, q(1), M()), algebra_error);
    }

    TEST_CASE("derivative formula") {
        JacobiSpec s{2, A(), M()};
        CHECK(jacobi_derivative(s, 1) == jacobi({1, A() + q(1), M() + q(1)}) * ((A() + M() + q(3)) / q(2)));
        CHECK(partial_derive(jacobi(s), 0) == jacobi_derivative(s, 1));
        CHECK(jacobi_derivative(s, 0) == jacobi(s));
        CHECK(jacobi_derivative({1, A(), M()}, 2).is_zero());
    }

    TEST_CASE("orthogonality") {
        CHECK(orthogonality_integral(2, 3, 1, 2) == 0);
        CHECK(orthogonality_integral(3, 3, 0, 0) == orthogonality_norm(3, 0, 0));
        CHECK(orthogonality_norm(0, 0, 0) == 2);
        CHECK(orthogonality_norm(1, 0, 0) == make_rational(2, 3));
        CHECK_THROWS(orthogonality_integral(1, 1, -1, 0));
    }

    TEST_CASE("terminating 2F1") {
        // 2F1(-1, b; c; z) = 1 - b z / c
        GeoPoly z = t_poly("t");
        CHECK(hypergeom_2f1_terminating(q(-1), L(), M(), z, 3) == t_poly("1 - l/m*t"));
        CHECK_THROWS(hypergeom_2f1_terminating(q(-2), L(), q(-1), z, 2));
    }

    TEST_CASE("differential equations and ladders") {
        for (int l = 0; l <= 6; ++l) {
            CHECK(apply_poly(gegenbauer_ode(A(), l), gegenbauer({l, A()})).is_zero());
            CHECK(apply_poly(jacobi_ode(A(), M(), l), jacobi({l, A(), M()})).is_zero());
            CHECK(apply_poly(gegenbauer_lowering(l), gegenbauer({l, A()})) == gegenbauer({l - 1, A()}) * (q(l) + q(2) * A() - q(1)));
            CHECK(apply_poly(tilde_raising(A(), l), gegenbauer_tilde({l, A()})) == gegenbauer_tilde({l + 1, A()}) * q(-(l + 1)));
        }
    }

    TEST_CASE("identity suite is clean") {
        Records r = verify_ortho_suite(6, 5);
        CHECK_FALSE(any_failed(r));
        for (const auto& x : r) CHECK_MESSAGE(x.status == Status::pass, x.check_id);
    }
}
