#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "branchcheck/cli_report.hpp"
#include "branchcheck/diag_pair.hpp"
#include "branchcheck/goldens.hpp"
#include "branchcheck/orthopoly.hpp"
#include "branchcheck/so_pair.hpp"

namespace py = pybind11;
using namespace branchcheck;

namespace {

Scenario scenario_from(const std::string& s) {
    if (s == "so_pair") return Scenario::so_pair;
    if (s == "diag_pair") return Scenario::diag_pair;
    if (s == "branching") return Scenario::branching;
    if (s == "ortho") return Scenario::ortho;
    if (s == "all") return Scenario::all;
    throw usage_error("unknown scenario " + s);
}

SoPairContext so_context(int n, const std::string& lambda) {
    auto v = parse_parameter(lambda);
    return v ? SoPairContext::make_specialized(n, *v) : SoPairContext::make_formal(n);
}

std::vector<std::string> render_all(const std::vector<ParamScalar>& v) {
    std::vector<std::string> out;
    for (const auto& s : v) out.push_back(s.to_string());
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact checks of branching identities for generalized Verma modules";
    m.attr("version") = kToolVersion;
    m.attr("schema_version") = kSchemaVersion;

    py::register_exception<usage_error>(m, "UsageError", PyExc_ValueError);
    py::register_exception<algebra_error>(m, "AlgebraError", PyExc_ArithmeticError);

    m.def(
        "run_json",
        [](const std::string& scenario, int n, int max_degree, const std::string& lambda, const std::string& mu, int N, int cutoff,
           std::uint64_t seed, int cases, const std::string& goldens) {
            RunConfig c;
            c.scenario = scenario_from(scenario);
            c.n = n;
            c.max_degree = max_degree;
            c.lambda = parse_parameter(lambda);
            c.mu = parse_parameter(mu);
            c.N = N;
            c.cutoff = cutoff;
            c.seed = seed;
            c.property_cases = cases;
            c.golden_dir = goldens;
            RunResult r;
            {
                py::gil_scoped_release release;
                r = run_suite(c);
            }
            return py::make_tuple(r.exit_code, report_json(c, r));
        },
        py::arg("scenario"), py::arg("n") = 3, py::arg("max_degree") = 8, py::arg("lambda_") = "formal", py::arg("mu") = "formal",
        py::arg("N") = 3, py::arg("cutoff") = 8, py::arg("seed") = 0, py::arg("cases") = 200, py::arg("goldens") = "");

    m.def(
        "singular_vector",
        [](int n, int l, const std::string& lambda) { return singular_vector_F(so_context(n, lambda), l).poly.to_string(); },
        py::arg("n"), py::arg("l"), py::arg("lambda_") = "formal", "Normalized F_l in canonical text form");

    m.def(
        "ladder_constants",
        [](int n, int max_l, const std::string& lambda) {
            LadderReport r = verify_sl2(so_context(n, lambda), max_l);
            return py::make_tuple(render_all(r.e_constants), render_all(r.f_constants));
        },
        py::arg("n"), py::arg("max_l"), py::arg("lambda_") = "formal", "(e_l, f_l) with e(l)F_l = e_l F_{l+1}, f(l)F_l = f_l F_{l-1}");

    m.def(
        "gegenbauer", [](int l) { return gegenbauer({l, ParamScalar::alpha()}).to_string(); }, py::arg("l"));
    m.def(
        "gegenbauer_tilde", [](int l) { return gegenbauer_tilde({l, ParamScalar::alpha()}).to_string(); }, py::arg("l"));
    m.def(
        "jacobi_t", [](int l) { return jacobi_t(DiagContext::make_formal(), l).to_string(); }, py::arg("l"),
        "P_l^{(-lambda-1, mu+lambda-2l+1)}(2t+1)");
    m.def(
        "lowering_constant", [](int l) { return lowering_constant(DiagContext::make_formal(), l).to_string(); }, py::arg("l"));

    m.def(
        "orthogonality_integral",
        [](int k, int l, int a, int b) { return to_string(orthogonality_integral(k, l, a, b)); }, py::arg("k"), py::arg("l"),
        py::arg("a"), py::arg("b"));

    m.def(
        "hilbert_check", [](int n, int J) { return hilbert_check(n, J).status == Status::pass; }, py::arg("n"), py::arg("J"));

    m.def(
        "branching_sets",
        [](int N, int cutoff) {
            BranchingSets s = branching_sets(N, cutoff);
            py::dict d;
            d["Lambda"] = s.Lambda;
            d["Lambda_s"] = s.Lambda_s;
            d["iota_Lambda_s"] = s.iota_Lambda_s;
            d["Lambda_r"] = s.Lambda_r;
            d["Lambda_r_displayed"] = s.Lambda_r_displayed;
            d["only_definitional"] = s.only_definitional;
            d["only_displayed"] = s.only_displayed;
            return d;
        },
        py::arg("N"), py::arg("cutoff"));

    m.def(
        "canonical",
        [](const std::string& text, const std::string& vars, int n) {
            VarSet v = vars == "xi" ? VarSet::xi(n) : vars == "t" ? VarSet::t_line() : vars == "x" ? VarSet::x_line() : VarSet::xi_eta();
            ParseEnv env;
            env.constants["n"] = Rational(n);
            return parse_poly(text, v, env).to_string();
        },
        py::arg("text"), py::arg("vars"), py::arg("n") = 3, "Parse an expression and return its canonical rendering");
}
