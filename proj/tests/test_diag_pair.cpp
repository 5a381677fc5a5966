#include <doctest.h>

#include "branchcheck/diag_pair.hpp"
#include "helpers.hpp"

using namespace bc_test;

TEST_SUITE("diag_pair") {
    const DiagContext F = DiagContext::make_formal();

    TEST_CASE("Fourier operators commute") {
        CHECK(commutator(op_X_fourier(F), op_F_fourier(F)).is_zero());
        CHECK(commutator(op_X_function(F), op_F_function(F)).is_zero());
    }

    TEST_CASE("displayed Jacobi solutions") {
        CHECK(jacobi_t(F, 0) == t_poly("1"));
        CHECK(jacobi_t(F, 1) == t_poly("m*t - l"));
        CHECK(singular_vector_Ptilde(F, 1) == xe_poly("m*xi - l*eta"));
        CHECK(singular_vector_Ptilde(F, 0) == xe_poly("1"));
        CHECK(homogenize(jacobi_t(F, 2), 2) == homogenize(t_poly("-1/2*(m*(1-m)*t^2 + 2*(1-m)*(1-l)*t + l*(1-l))"), 2));
    }

    TEST_CASE("annihilation") {
        for (int l = 0; l <= 5; ++l) {
            CHECK(apply_poly(op_X_fourier(F), singular_vector_Ptilde(F, l)).is_zero());
            CHECK(apply_poly(op_X_t(F, l), jacobi_t(F, l)).is_zero());
        }
    }

    TEST_CASE("lowering") {
        CHECK(apply_poly(op_F_t(F, 1), jacobi_t(F, 1)) == t_poly("-2*l*m"));
        CHECK(apply_poly(op_F_t(F, 2), jacobi_t(F, 2)) == jacobi_t(F, 1) * (q(-2) * (L() - q(1)) * (M() - q(1))));
        for (int l = 1; l <= 5; ++l)
            CHECK(apply_poly(op_F_fourier(F), singular_vector_Ptilde(F, l)) == singular_vector_Ptilde(F, l - 1) * lowering_constant(F, l));
        CHECK(lowering_constant(F, 3) == q(2) * (q(2) - L()) * (M() - q(2)));
    }

    TEST_CASE("branching sets") {
        BranchingSets s = branching_sets(3, 8);
        CHECK(s.Lambda_s == std::vector<int>{3, 1});
        CHECK(s.iota_Lambda_s == std::vector<int>{-5, -3});
        CHECK(s.Lambda_r.front() == -1);
        CHECK(s.only_definitional == std::vector<int>{-1});
        CHECK(s.only_displayed == std::vector<int>{-3, -5});
        CHECK(iota(iota(7)) == 7);
    }

    TEST_CASE("decomposition preconditions") {
        CHECK_THROWS_AS(decomposition_report(F, 4), algebra_error);
        CHECK_THROWS_AS(decomposition_report(DiagContext::make_specialized(Rational(0), Rational(3)), 4), algebra_error);
        CHECK_THROWS_AS(decomposition_report(DiagContext::make_specialized(make_rational(1, 3), make_rational(1, 3)), 4), algebra_error);
        auto rep = decomposition_report(DiagContext::make_specialized(make_rational(1, 2), make_rational(5, 2)), 8);
        CHECK(rep.grothendieck_matches);
        CHECK(natural_parameter(DiagContext::make_specialized(Rational(1), make_rational(1, 2))).has_value());
    }

    TEST_CASE("Grothendieck equality across N") {
        for (int N = 0; N <= 6; ++N) {
            Records r = verify_branching(N, 10);
            CHECK_FALSE(any_failed(r));
        }
    }

    TEST_CASE("suite runs clean") {
        Records r = verify_diag_suite(F, 4);
        for (const auto& x : r) CHECK_MESSAGE(x.status != Status::fail, x.check_id);
    }
}
