#include <doctest.h>

#include <json.hpp>

#include "branchcheck/cli_report.hpp"

using namespace branchcheck;

TEST_SUITE("cli_report") {
    TEST_CASE("Hilbert series of the branching") {
        CHECK(hilbert_check(3, 10).status == Status::pass);
        CHECK(hilbert_check(2, 5).status == Status::pass);
        CHECK(hilbert_check(2, 0).status == Status::pass);
        auto c = inverse_power_series(2, 10);
        for (int k = 0; k <= 10; ++k) CHECK(c[k] == k + 1);
        for (int n = 2; n <= 6; ++n)
            for (int J = 1; J <= 20; ++J) CHECK(hilbert_check(n, J).status == Status::pass);
        CHECK_THROWS_AS(hilbert_check(1, 3), usage_error);
    }

    TEST_CASE("Dirac weights for formal lambda") {
        DiracReport d = dirac_weights(SoPairContext::make_formal(3), 3);
        CHECK(d.lhs == "(lambda, rho(n_-))");
        CHECK(d.rhs == std::vector<std::string>{"(lambda, rho(n_-'))", "(lambda - 1, rho(n_-'))", "(lambda - 2, rho(n_-'))", "(lambda - 3, rho(n_-'))"});
        CHECK_FALSE(any_failed(d.records));
    }

    TEST_CASE("non-generic lambda is rejected with the vanishing constant") {
        // n = 3, lambda = 0: alpha = -1 and e_2 = -(2 alpha + 2) = 0
        try {
            (void)dirac_weights(SoPairContext::make_specialized(3, Rational(0)), 3);
            FAIL("expected usage_error");
        } catch (const usage_error& e) {
            CHECK(std::string(e.what()).find("e_2") != std::string::npos);
        }
    }

    TEST_CASE("parameter parsing") {
        CHECK_FALSE(parse_parameter("formal").has_value());
        CHECK(*parse_parameter("-3/2") == make_rational(-3, 2));
        CHECK(*parse_parameter("4/2") == Rational(2));
        CHECK_THROWS_AS(parse_parameter("x"), usage_error);
        CHECK_THROWS_AS(parse_parameter("1/0"), usage_error);
    }

    TEST_CASE("config validation") {
        RunConfig c;
        c.scenario = Scenario::so_pair;
        c.max_degree = 0;
        CHECK_THROWS_AS(run_suite(c), usage_error);
        c.max_degree = 2;
        c.cutoff = 0;
        CHECK_THROWS_AS(run_suite(c), usage_error);
        RunConfig d;
        d.scenario = Scenario::diag_pair;
        d.max_degree = 1;
        d.lambda = Rational(0);
        d.mu = Rational(0);
        CHECK_THROWS_AS(run_suite(d), usage_error);
        RunConfig b;
        b.scenario = Scenario::branching;
        b.N = 3;
        b.lambda = make_rational(1, 2);
        b.mu = make_rational(3, 2);
        CHECK_THROWS_AS(run_suite(b), usage_error);
    }

    TEST_CASE("records are sorted, unique and anchored") {
        RunConfig c;
        c.scenario = Scenario::so_pair;
        c.n = 3;
        c.max_degree = 4;
        c.property_cases = 5;
        RunResult r = run_suite(c);
        CHECK(r.exit_code == 0);
        for (std::size_t i = 1; i < r.records.size(); ++i) CHECK(r.records[i - 1].check_id < r.records[i].check_id);
        for (const auto& x : r.records) CHECK(anchor_known(x.anchor));
    }

    TEST_CASE("JSON schema and determinism") {
        RunConfig c;
        c.scenario = Scenario::branching;
        c.N = 3;
        c.cutoff = 8;
        c.seed = 99;
        RunResult r = run_suite(c);
        const std::string a = report_json(c, r);
        CHECK(a == report_json(c, run_suite(c)));
        auto j = nlohmann::json::parse(a);
        CHECK(j["meta"]["schema"] == kSchemaVersion);
        CHECK(j["meta"]["seed"] == 99);
        CHECK(j["records"].size() == r.records.size());
        bool saw_discrepancy = false;
        for (const auto& rec : j["records"]) saw_discrepancy = saw_discrepancy || rec["status"] == "discrepancy-reported";
        CHECK(saw_discrepancy);
        CHECK(r.exit_code == 0);
    }
}
