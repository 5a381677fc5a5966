#include "branchcheck/cli_report.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "branchcheck/diag_pair.hpp"
#include "branchcheck/goldens.hpp"
#include "branchcheck/orthopoly.hpp"
#include "branchcheck/properties.hpp"

namespace branchcheck {

namespace {

std::string join(const std::vector<std::string>& v, const char* sep = ", ") {
    std::string r;
    for (std::size_t i = 0; i < v.size(); ++i) r += (i ? sep : "") + v[i];
    return r;
}

std::string param_text(const std::optional<Rational>& p) { return p ? to_string(*p) : "formal"; }

std::string shifted_label(const SoPairContext& ctx, int j) {
    if (ctx.formal) return j == 0 ? "lambda" : "lambda - " + std::to_string(j);
    return to_string(ctx.lambda.rational_value() - Rational(j));
}

SoPairContext make_so(int n, const std::optional<Rational>& lambda) {
    return lambda ? SoPairContext::make_specialized(n, *lambda) : SoPairContext::make_formal(n);
}

void so_records(Records& out, std::vector<std::string>& notes, int n, int max_l, const std::optional<Rational>& lambda) {
    const SoPairContext ctx = make_so(n, lambda);
    append(out, verify_so_suite(ctx, max_l));
    if (ctx.formal)
        append(out, verify_nonclosure(ctx, std::min(max_l, 4)));
    else
        notes.push_back("n = " + std::to_string(n) + " commutator checks need formal lambda; skipped");
    out.push_back(hilbert_check(n, 20));
    try {
        DiracReport d = dirac_weights(ctx, std::min(max_l, 8));
        append(out, d.records);
        notes.push_back("n = " + std::to_string(n) + " Dirac weights: LHS " + d.lhs + "; RHS " + join(d.rhs));
    } catch (const usage_error& e) {
        notes.push_back("n = " + std::to_string(n) + " Dirac weight listing skipped: " + e.what());
    }
}

void diag_records(Records& out, int max_l, const DiagContext& ctx) {
    append(out, verify_diag_suite(ctx, max_l));
    VerificationRecord h = hilbert_check(2, 20, "diag-pair/branching-character");
    h.check_id = "diag.hilbert.J20";
    out.push_back(std::move(h));
}

DiagContext make_diag(const RunConfig& c) {
    if (c.lambda.has_value() != c.mu.has_value()) throw usage_error("--lambda and --mu must be given together");
    if (!c.lambda) return DiagContext::make_formal();
    DiagContext ctx = DiagContext::make_specialized(*c.lambda, *c.mu);
    if (auto bad = natural_parameter(ctx)) throw usage_error("precondition failed for the lowering suite: " + *bad);
    return ctx;
}

void branch_records(Records& out, std::vector<std::string>& notes, const RunConfig& c) {
    if (c.N < 0) throw usage_error("--N must be nonnegative");
    if (c.lambda.has_value() != c.mu.has_value()) throw usage_error("--lambda and --mu must be given together");
    const Rational lam = c.lambda.value_or(Rational(1, 2));
    const Rational mu = c.mu.value_or(Rational(2 * c.N - 1, 2));
    if (lam + mu != Rational(c.N)) throw usage_error("lambda + mu = " + to_string(lam + mu) + " differs from N = " + std::to_string(c.N));
    const DiagContext ctx = DiagContext::make_specialized(lam, mu);
    DecompositionReport rep;
    try {
        rep = decomposition_report(ctx, c.cutoff);
    } catch (const algebra_error& e) {
        throw usage_error(e.what());
    }
    append(out, verify_branching(c.N, c.cutoff, ctx));

    std::vector<std::string> generic, special;
    for (const auto& w : generic_decomposition(DiagContext::make_formal(), c.cutoff)) generic.push_back("M(" + w.to_string() + ")");
    for (const auto& s : rep.special_list) special.push_back(s.label());
    auto ints = [](const std::vector<int>& v) {
        std::vector<std::string> r;
        for (int x : v) r.push_back(std::to_string(x));
        return "{" + join(r) + "}";
    };
    notes.push_back("generic: " + join(generic, " + "));
    notes.push_back("lambda = " + to_string(lam) + ", mu = " + to_string(mu) + ": " + join(special, " + "));
    notes.push_back("Lambda_s = " + ints(rep.sets.Lambda_s) + ", iota(Lambda_s) = " + ints(rep.sets.iota_Lambda_s));
    notes.push_back("Lambda_r definitional = " + ints(rep.sets.Lambda_r) + ", displayed = " + ints(rep.sets.Lambda_r_displayed));
    notes.push_back("only definitional = " + ints(rep.sets.only_definitional) + ", only displayed = " + ints(rep.sets.only_displayed));
}

}  // namespace

std::string_view scenario_name(Scenario s) {
    switch (s) {
        case Scenario::so_pair: return "so_pair";
        case Scenario::diag_pair: return "diag_pair";
        case Scenario::branching: return "branching";
        case Scenario::ortho: return "ortho";
        case Scenario::all: return "all";
    }
    return "?";
}

std::vector<Integer> inverse_power_series(int m, int J) {
    std::vector<Integer> c(J + 1, Integer(0));
    c[0] = 1;
    for (int k = 0; k < m; ++k)
        for (int i = 1; i <= J; ++i) c[i] += c[i - 1];
    return c;
}

VerificationRecord hilbert_check(int n, int J, std::string_view anchor) {
    if (n < 2) throw usage_error("hilbert_check needs n >= 2");
    const std::string cid = "so.n" + pad2(n) + ".hilbert.J" + pad2(J);
    if (J < 0) throw usage_error("hilbert_check needs J >= 0");
    const auto restricted = inverse_power_series(n - 1, J);
    const auto whole = inverse_power_series(n, J);
    std::vector<Integer> lhs(J + 1, Integer(0));
    for (int j = 0; j <= J; ++j)
        for (int k = j; k <= J; ++k) lhs[k] += restricted[k - j];
    std::string w;
    for (int k = 0; k <= J; ++k)
        if (lhs[k] != whole[k]) w += "q^" + std::to_string(k) + ": " + lhs[k].get_str() + " vs " + whole[k].get_str() + " ";
    return make_record(cid, anchor, w.empty(), w);
}

DiracReport dirac_weights(const SoPairContext& ctx, int J) {
    const LadderReport lad = verify_sl2(ctx, J);
    for (int l = 0; l <= J; ++l) {
        if (lad.e_constants[l].is_zero()) throw usage_error("lambda is not generic: e_" + std::to_string(l) + " vanishes");
        if (l > 0 && lad.f_constants[l].is_zero()) throw usage_error("lambda is not generic: f_" + std::to_string(l) + " vanishes");
    }
    DiracReport d;
    d.lhs = "(" + shifted_label(ctx, 0) + ", rho(n_-))";
    for (int j = 0; j <= J; ++j) d.rhs.push_back("(" + shifted_label(ctx, j) + ", rho(n_-'))");

    const std::string prefix = "so.n" + pad2(ctx.n) + ".dirac";
    d.records.push_back(make_record(prefix + ".generic.J" + pad2(J), "so-pair/dirac-weights", true, "ladder constants nonzero for l <= " + std::to_string(J)));
    std::string bad;
    for (const auto& r : verify_casimir(ctx, J))
        if (r.check_id.find("ef-plus-fe") != std::string::npos && r.status != Status::pass) bad += r.check_id + " ";
    d.records.push_back(make_record(prefix + ".ef-plus-fe.J" + pad2(J), "so-pair/dirac-weights", bad.empty(), bad));
    d.records.push_back(make_record(prefix + ".labels.J" + pad2(J), "so-pair/dirac-weights", d.rhs.size() == static_cast<std::size_t>(J + 1),
                                    d.lhs + " -> " + join(d.rhs)));
    return d;
}

RunResult run_suite(const RunConfig& c) {
    if (c.max_degree < 1) throw usage_error("--max-degree must be at least 1");
    if (c.cutoff < 1) throw usage_error("--cutoff must be at least 1");
    if (c.n < 2) throw usage_error("--n must be at least 2");

    RunResult res;
    Records& out = res.records;
    switch (c.scenario) {
        case Scenario::so_pair:
            so_records(out, res.notes, c.n, c.max_degree, c.lambda);
            append(out, property_suite(c.seed, c.property_cases));
            break;
        case Scenario::diag_pair:
            diag_records(out, c.max_degree, make_diag(c));
            append(out, property_suite(c.seed, c.property_cases));
            break;
        case Scenario::branching:
            branch_records(out, res.notes, c);
            break;
        case Scenario::ortho:
            append(out, verify_ortho_suite(std::min(c.max_degree, 12), std::min(c.max_degree, 10)));
            break;
        case Scenario::all: {
            for (int n = 2; n <= 6; ++n) so_records(out, res.notes, n, 10, std::nullopt);
            diag_records(out, 10, DiagContext::make_formal());
            for (int N = 0; N <= 6; ++N) {
                RunConfig b = c;
                b.N = N;
                b.cutoff = 10;
                b.lambda.reset();
                b.mu.reset();
                std::vector<std::string> ignored;
                branch_records(out, ignored, b);
            }
            append(out, verify_ortho_suite(12, 10));
            if (!c.golden_dir.empty()) append(out, verify_goldens(c.golden_dir));
            append(out, property_suite(c.seed, c.property_cases));
            break;
        }
    }
    std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.check_id < b.check_id; });
    res.exit_code = any_failed(out) ? 1 : 0;
    return res;
}

std::string report_text(const RunConfig& c, const RunResult& r) {
    std::ostringstream os;
    os << "scenario " << scenario_name(c.scenario) << ", seed " << c.seed << "\n";
    for (const auto& note : r.notes) os << note << "\n";
    int counts[3] = {0, 0, 0};
    for (const auto& rec : r.records) {
        ++counts[static_cast<int>(rec.status)];
        os << status_name(rec.status) << " " << rec.check_id << " [" << rec.anchor << "]";
        if (rec.status != Status::pass && !rec.witness.empty()) os << " " << rec.witness;
        os << "\n";
    }
    os << r.records.size() << " records: " << counts[0] << " pass, " << counts[2] << " discrepancy-reported, " << counts[1] << " fail\n";
    return os.str();
}

std::string report_json(const RunConfig& c, const RunResult& r) {
    nlohmann::json config = {
        {"scenario", scenario_name(c.scenario)},
        {"n", c.n},
        {"max_degree", c.max_degree},
        {"lambda", param_text(c.lambda)},
        {"mu", param_text(c.mu)},
        {"N", c.N},
        {"cutoff", c.cutoff},
        {"property_cases", c.property_cases},
    };
    nlohmann::json records = nlohmann::json::array();
    for (const auto& rec : r.records)
        records.push_back({{"check_id", rec.check_id}, {"anchor", rec.anchor}, {"status", status_name(rec.status)}, {"witness", rec.witness}});
    nlohmann::json doc = {
        {"meta", {{"schema", kSchemaVersion}, {"version", kToolVersion}, {"seed", c.seed}, {"config", config}}},
        {"records", records},
    };
    return doc.dump(2) + "\n";
}

std::optional<Rational> parse_parameter(const std::string& text) {
    if (text == "formal") return std::nullopt;
    mpq_class q;
    if (text.empty() || q.set_str(text, 10) != 0) throw usage_error("not a rational number: " + text);
    if (q.get_den() == 0) throw usage_error("zero denominator: " + text);
    q.canonicalize();
    return q;
}

}  // namespace branchcheck
