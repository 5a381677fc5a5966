#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "branchcheck/cli_report.hpp"
#include "branchcheck/diag_pair.hpp"
#include "branchcheck/orthopoly.hpp"

#ifndef BRANCHCHECK_GOLDEN_DIR
#define BRANCHCHECK_GOLDEN_DIR "goldens"
#endif

using namespace branchcheck;

namespace {

struct Flags {
    int n = 3;
    int max_degree = 8;
    std::string lambda = "formal";
    std::string mu = "formal";
    int N = 3;
    int cutoff = 8;
    std::uint64_t seed = 0;
    int cases = 200;
    std::string json;
    std::string goldens = BRANCHCHECK_GOLDEN_DIR;
};

void print_tables(int L) {
    const ParamScalar a = ParamScalar::alpha();
    for (int l = 0; l <= L; ++l) std::cout << "C" << l << " = " << gegenbauer({l, a}).to_string() << "\n";
    const DiagContext ctx = DiagContext::make_formal();
    for (int l = 0; l <= L; ++l) std::cout << "P" << l << "(2t+1) = " << jacobi_t(ctx, l).to_string() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification of branching identities for generalized Verma modules"};
    app.require_subcommand(1);
    Flags f;

    auto* so = app.add_subcommand("verify-so", "singular vectors, ladder and Casimir checks for (so(n+1,1), so(n,1))");
    so->add_option("--n", f.n, "dimension n")->check(CLI::Range(2, 64));
    so->add_option("--max-degree", f.max_degree, "highest singular-vector degree");
    so->add_option("--lambda", f.lambda, "rational value or 'formal'");
    so->add_option("--seed", f.seed, "seed for the randomized property checks");
    so->add_option("--cases", f.cases, "cases per property");
    so->add_option("--json", f.json, "write the JSON report here ('-' for stdout)");

    auto* diag = app.add_subcommand("verify-diag", "operator and lowering checks for the diagonal sl(2) pair");
    diag->add_option("--max-degree", f.max_degree, "highest degree");
    diag->add_option("--lambda", f.lambda, "rational value or 'formal'");
    diag->add_option("--mu", f.mu, "rational value or 'formal'");
    diag->add_option("--seed", f.seed, "seed for the randomized property checks");
    diag->add_option("--cases", f.cases, "cases per property");
    diag->add_option("--json", f.json, "write the JSON report here ('-' for stdout)");

    auto* branch = app.add_subcommand("branch-report", "special-case branching at lambda + mu = N");
    branch->add_option("--N", f.N, "lambda + mu");
    branch->add_option("--cutoff", f.cutoff, "number of Lambda entries beyond N");
    branch->add_option("--lambda", f.lambda, "rational value (default 1/2)");
    branch->add_option("--mu", f.mu, "rational value (default N - 1/2)");
    branch->add_option("--json", f.json, "write the JSON report here ('-' for stdout)");

    auto* tables = app.add_subcommand("ortho-tables", "print C_l and P_l(2t+1) in canonical form");
    tables->add_option("--max-degree", f.max_degree, "highest degree");
    tables->add_flag("--verify", "run the orthogonal polynomial suite instead of printing");
    tables->add_option("--json", f.json, "write the JSON report of --verify here");

    auto* all = app.add_subcommand("all", "every suite at the acceptance ranges");
    all->add_option("--seed", f.seed, "seed for the randomized property checks");
    all->add_option("--cases", f.cases, "cases per property");
    all->add_option("--goldens", f.goldens, "directory holding displays.txt and canonical.txt");
    all->add_option("--json", f.json, "write the JSON report here ('-' for stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        RunConfig c;
        c.n = f.n;
        c.max_degree = f.max_degree;
        c.lambda = parse_parameter(f.lambda);
        c.mu = parse_parameter(f.mu);
        c.N = f.N;
        c.cutoff = f.cutoff;
        c.seed = f.seed;
        c.property_cases = f.cases;
        if (so->parsed()) {
            c.scenario = Scenario::so_pair;
        } else if (diag->parsed()) {
            c.scenario = Scenario::diag_pair;
        } else if (branch->parsed()) {
            c.scenario = Scenario::branching;
        } else if (tables->parsed()) {
            if (tables->count("--verify") == 0) {
                print_tables(f.max_degree);
                return 0;
            }
            c.scenario = Scenario::ortho;
        } else {
            c.scenario = Scenario::all;
            c.golden_dir = f.goldens;
        }

        const RunResult r = run_suite(c);
        if (f.json == "-") {
            std::cout << report_json(c, r);
        } else {
            std::cout << report_text(c, r);
            if (!f.json.empty()) {
                std::ofstream out(f.json, std::ios::binary);
                if (!out) throw usage_error("cannot write " + f.json);
                out << report_json(c, r);
            }
        }
        return r.exit_code;
    } catch (const usage_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
