#include <doctest.h>

#include "branchcheck/properties.hpp"

using namespace branchcheck;

namespace {
constexpr std::uint64_t kSeed = 20261014;
constexpr int kCases = 200;
}  // namespace

TEST_SUITE("properties") {
    TEST_CASE("Weyl algebra associativity") {
        RandomAlgebra g(kSeed);
        CHECK(check_associativity(g, kCases).failures == 0);
    }
    TEST_CASE("apply and compose agree") {
        RandomAlgebra g(kSeed + 1);
        CHECK(check_apply_compose(g, kCases).failures == 0);
    }
    TEST_CASE("Jacobi identity for commutators") {
        RandomAlgebra g(kSeed + 2);
        CHECK(check_jacobi_identity(g, kCases).failures == 0);
    }
    TEST_CASE("normal ordering is confluent") {
        RandomAlgebra g(kSeed + 3);
        CHECK(check_confluence(g, kCases).failures == 0);
    }
    TEST_CASE("parameter field axioms") {
        RandomAlgebra g(kSeed + 4);
        CHECK(check_field_axioms(g, kCases).failures == 0);
    }
    TEST_CASE("same seed, same cases") {
        RandomAlgebra a(7), b(7);
        for (int i = 0; i < 20; ++i) CHECK(op_equals(a.op(VarSet::xi(3)), b.op(VarSet::xi(3))));
        auto r1 = property_suite(5, 10);
        auto r2 = property_suite(5, 10);
        REQUIRE(r1.size() == r2.size());
        for (std::size_t i = 0; i < r1.size(); ++i) CHECK(r1[i].check_id == r2[i].check_id);
    }
}
