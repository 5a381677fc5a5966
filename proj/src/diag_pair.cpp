#include "branchcheck/diag_pair.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace branchcheck {

namespace {

const char* const kFourier = "diag-pair/fourier-operators";
const char* const kFunction = "diag-pair/function-operators";
const char* const kTOps = "diag-pair/t-operators";
const char* const kHomog = "diag-pair/homogenization";
const char* const kSolutions = "diag-pair/jacobi-singular-vectors";
const char* const kLowering = "diag-pair/lowering";
const char* const kRecursion = "diag-pair/recursion";
const char* const kSets = "diag-pair/branching-sets";
const char* const kDecomp = "diag-pair/decomposition";

ParamScalar num(long v) { return ParamScalar(v); }

std::string id(const std::string& what, int l) { return "diag." + what + ".l" + pad2(l); }
std::string id(const std::string& what) { return "diag." + what; }

const VarSet XE = VarSet::xi_eta();
const VarSet XY = VarSet::xy_plane();
const VarSet T = VarSet::t_line();

DiffOp d2(VarSet v, int i) {
    Exponents e(v.arity(), 0);
    e[i] = 2;
    return DiffOp::derivative(v, e);
}

GeoPoly tvar() { return GeoPoly::variable(T, 0); }
GeoPoly tconst(const ParamScalar& c) { return GeoPoly::constant(T, c); }

std::string join(const std::vector<int>& v) {
    std::string s = "{";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
    return s + "}";
}

bool is_natural(const Rational& r) { return r.get_den() == 1 && r >= 0; }

}  // namespace

DiagContext DiagContext::make_formal() { return {ParamScalar::lambda(), ParamScalar::mu(), true}; }

DiagContext DiagContext::make_specialized(const Rational& lambda, const Rational& mu) { return {ParamScalar(lambda), ParamScalar(mu), false}; }

std::optional<std::string> natural_parameter(const DiagContext& ctx) {
    if (ctx.formal) return std::nullopt;
    if (is_natural(ctx.lambda.rational_value())) return "lambda = " + to_string(ctx.lambda.rational_value()) + " lies in N_0";
    if (is_natural(ctx.mu.rational_value())) return "mu = " + to_string(ctx.mu.rational_value()) + " lies in N_0";
    return std::nullopt;
}

DiffOp op_X_fourier(const DiagContext& ctx) {
    const GeoPoly xi = GeoPoly::variable(XE, 0), eta = GeoPoly::variable(XE, 1);
    return DiffOp::partial(XE, 0) * (-ctx.lambda) + DiffOp::mult(xi) * d2(XE, 0) + DiffOp::partial(XE, 1) * (-ctx.mu) + DiffOp::mult(eta) * d2(XE, 1);
}

DiffOp op_F_fourier(const DiagContext& ctx) {
    const GeoPoly xi = GeoPoly::variable(XE, 0), eta = GeoPoly::variable(XE, 1);
    return DiffOp::partial(XE, 0) * (-ctx.lambda) + DiffOp::mult(xi) * d2(XE, 0) + DiffOp::partial(XE, 1) * ctx.mu - DiffOp::mult(eta) * d2(XE, 1);
}

DiffOp op_X_function(const DiagContext& ctx) {
    const GeoPoly x = GeoPoly::variable(XY, 0), y = GeoPoly::variable(XY, 1);
    return DiffOp::mult(x * ctx.lambda) + DiffOp::mult(x * x) * DiffOp::partial(XY, 0) + DiffOp::mult(y * ctx.mu) + DiffOp::mult(y * y) * DiffOp::partial(XY, 1);
}

DiffOp op_F_function(const DiagContext& ctx) {
    const GeoPoly x = GeoPoly::variable(XY, 0), y = GeoPoly::variable(XY, 1);
    return DiffOp::mult(x * ctx.lambda) + DiffOp::mult(x * x) * DiffOp::partial(XY, 0) - DiffOp::mult(y * ctx.mu) - DiffOp::mult(y * y) * DiffOp::partial(XY, 1);
}

DiffOp op_X_t(const DiagContext& ctx, int l) {
    const ParamScalar L = num(l);
    const GeoPoly t = tvar();
    return DiffOp::mult(t * (t + tconst(1))) * d2(T, 0) + DiffOp::mult(t * (ctx.mu - num(2) * (L - num(1))) - tconst(ctx.lambda)) * DiffOp::partial(T, 0) +
           DiffOp::scalar(T, L * (L - num(1) - ctx.mu));
}

DiffOp op_F_t(const DiagContext& ctx, int l) {
    const ParamScalar L = num(l);
    const GeoPoly t = tvar();
    return DiffOp::mult(-(t * (t - tconst(1)))) * d2(T, 0) + DiffOp::mult(t * (num(2) * L - ctx.mu - num(2)) - tconst(ctx.lambda)) * DiffOp::partial(T, 0) +
           DiffOp::scalar(T, L * (ctx.mu - L + num(1)));
}

GeoPoly jacobi_t(const DiagContext& ctx, int l) {
    const ParamScalar a = -ctx.lambda - num(1);
    const ParamScalar b = ctx.mu + ctx.lambda - num(2 * l - 1);
    return substitute_linear(jacobi({l, a, b}), num(2), num(1));
}

GeoPoly singular_vector_Ptilde(const DiagContext& ctx, int l) { return homogenize(jacobi_t(ctx, l), l); }

ParamScalar lowering_constant(const DiagContext& ctx, int l) {
    const ParamScalar L = num(l);
    return num(2) * (L - num(1) - ctx.lambda) * (ctx.mu - L + num(1));
}

Records verify_fourier_operators(const DiagContext& ctx) {
    Records out;
    const DiffOp X = op_X_fourier(ctx), F = op_F_fourier(ctx);
    DiffOp c = commutator(X, F);
    out.push_back(make_record(id("fourier.commute"), kFourier, c.is_zero(), c.to_string()));
    bool lowers = true;
    for (int l = 0; l <= 4; ++l) {
        for (int j = 0; j <= l; ++j) {
            GeoPoly m = GeoPoly::monomial(XE, {j, l - j});
            for (const DiffOp* op : {&X, &F}) {
                GeoPoly img = apply_poly(*op, m);
                lowers = lowers && (img.is_zero() || (img.is_homogeneous() && img.degree() == l - 1));
            }
        }
    }
    out.push_back(make_record(id("fourier.lowers-degree"), kFourier, lowers, "homogeneous inputs of degree <= 4"));

    const DiffOp Xf = op_X_function(ctx), Ff = op_F_function(ctx);
    DiffOp cf = commutator(Xf, Ff);
    out.push_back(make_record(id("function.commute"), kFunction, cf.is_zero(), cf.to_string()));
    GeoPoly X1 = apply_poly(Xf, GeoPoly::constant(XY, num(1)));
    GeoPoly want = GeoPoly::variable(XY, 0) * ctx.lambda + GeoPoly::variable(XY, 1) * ctx.mu;
    out.push_back(make_record(id("function.X-on-1"), kFunction, X1 == want, X1.to_string()));
    DiffOp diff = Xf - Ff;
    const GeoPoly y = GeoPoly::variable(XY, 1);
    DiffOp expect = DiffOp::mult(y * (num(2) * ctx.mu)) + DiffOp::mult(y * y * num(2)) * DiffOp::partial(XY, 1);
    out.push_back(make_record(id("function.X-minus-F"), kFunction, op_equals(diff, expect), diff.to_string()));
    return out;
}

Records verify_annihilation(const DiagContext& ctx, int max_l, int max_l_t) {
    Records out;
    const DiffOp X = op_X_fourier(ctx);
    for (int l = 0; l <= max_l; ++l) {
        GeoPoly P = singular_vector_Ptilde(ctx, l);
        GeoPoly img = apply_poly(X, P);
        bool ok = img.is_zero() && P.is_homogeneous() && P.degree() == l;
        out.push_back(make_record(id("X.annihilates-Ptilde", l), kSolutions, ok, ok ? "" : img.to_string()));
    }
    for (int l = 0; l <= max_l_t; ++l) {
        GeoPoly img = apply_poly(op_X_t(ctx, l), jacobi_t(ctx, l));
        out.push_back(make_record(id("Xt.annihilates-jacobi", l), kTOps, img.is_zero(), img.to_string()));
    }
    return out;
}

Records verify_lowering(const DiagContext& ctx, int max_l) {
    if (max_l < 1) throw algebra_error("verify_lowering: degree bound must be at least 1");
    Records out;
    const DiffOp F = op_F_fourier(ctx);
    for (int l = 1; l <= max_l; ++l) {
        const ParamScalar c = lowering_constant(ctx, l);
        GeoPoly img = apply_poly(F, singular_vector_Ptilde(ctx, l));
        GeoPoly want = singular_vector_Ptilde(ctx, l - 1) * c;
        bool ok = img == want;
        out.push_back(make_record(id("lowering.fourier", l), kLowering, ok, "constant " + c.to_string() + (ok ? "" : "; image " + img.to_string())));

        GeoPoly timg = apply_poly(op_F_t(ctx, l), jacobi_t(ctx, l));
        ok = timg == jacobi_t(ctx, l - 1) * c;
        out.push_back(make_record(id("lowering.t-model", l), kLowering, ok, ok ? "" : timg.to_string()));

        // Coefficient of t^l in F_t(l) t^l: -l(l-1) + l(2l-mu-2) + l(mu-l+1).
        GeoPoly top = apply_poly(op_F_t(ctx, l), GeoPoly::monomial(T, {l}));
        ParamScalar tc = top.coefficient({l});
        out.push_back(make_record(id("lowering.top-cancels", l), kLowering, tc.is_zero(), tc.to_string()));

        if (!ctx.formal && !natural_parameter(ctx)) {
            out.push_back(make_record(id("lowering.constant-nonzero", l), kLowering, !c.is_zero(), c.to_string()));
        }
    }
    // The three displayed instances with their displayed constants.
    const ParamScalar lam = ctx.lambda, mu = ctx.mu;
    const ParamScalar shown[3] = {num(-2) * lam * mu, num(-2) * (lam - num(1)) * (mu - num(1)), num(-2) * (lam - num(2)) * (mu - num(2))};
    for (int l = 1; l <= 3; ++l) {
        GeoPoly timg = apply_poly(op_F_t(ctx, l), jacobi_t(ctx, l));
        bool ok = timg == jacobi_t(ctx, l - 1) * shown[l - 1];
        out.push_back(make_record(id("lowering.displayed", l), kLowering, ok, "displayed constant " + shown[l - 1].to_string()));
    }
    return out;
}

Records verify_model_transport(const DiagContext& ctx, int max_l) {
    Records out;
    const DiffOp X = op_X_fourier(ctx), F = op_F_fourier(ctx);
    for (int l = 1; l <= max_l; ++l) {
        bool okX = true, okF = true;
        for (int j = 0; j <= l; ++j) {
            GeoPoly q = GeoPoly::monomial(T, {j});
            GeoPoly h = homogenize(q, l);
            okX = okX && dehomogenize(apply_poly(X, h), l - 1) == apply_poly(op_X_t(ctx, l), q);
            okF = okF && dehomogenize(apply_poly(F, h), l - 1) == apply_poly(op_F_t(ctx, l), q);
        }
        out.push_back(make_record(id("transport.X", l), kHomog, okX, "basis t^j, j <= l"));
        out.push_back(make_record(id("transport.F", l), kHomog, okF, "basis t^j, j <= l"));
        // Commutation of X and F carried to the t model.
        bool comm = true;
        for (int j = 0; j <= l; ++j) {
            GeoPoly q = GeoPoly::monomial(T, {j});
            GeoPoly a = apply_poly(op_X_t(ctx, l - 1), apply_poly(op_F_t(ctx, l), q));
            GeoPoly b = apply_poly(op_F_t(ctx, l - 1), apply_poly(op_X_t(ctx, l), q));
            comm = comm && a == b;
        }
        out.push_back(make_record(id("t.commute", l), kTOps, comm, "X_t(l-1) F_t(l) = F_t(l-1) X_t(l) on degree <= l"));
    }
    return out;
}

Records recursion_crosscheck(const DiagContext& ctx, int max_l) {
    Records out;
    for (int l = 0; l <= max_l; ++l) {
        GeoPoly P = jacobi_t(ctx, l);
        std::vector<ParamScalar> a = jacobi_recursion_coeffs(l, ctx.lambda, ctx.mu);
        bool ok = true;
        for (int i = 0; i <= l; ++i) ok = ok && P.coefficient({i}) == a[i];
        out.push_back(make_record(id("recursion.matches-jacobi", l), kRecursion, ok, ok ? "" : P.to_string()));

        ok = a[l] == gen_binomial(ctx.mu, l);
        out.push_back(make_record(id("recursion.top-coefficient", l), kRecursion, ok, a[l].to_string()));

        // Image under F_t(l), coefficientwise: [2i(-i+2l-mu-1) + 2l(mu-l+1)] a_i.
        GeoPoly img = apply_poly(op_F_t(ctx, l), P);
        ok = true;
        for (int i = 0; i <= l; ++i) {
            const ParamScalar I = num(i), L = num(l);
            ParamScalar w = num(2) * I * (-I + num(2) * L - ctx.mu - num(1)) + num(2) * L * (ctx.mu - L + num(1));
            ok = ok && img.coefficient({i}) == w * a[i];
        }
        out.push_back(make_record(id("recursion.image-coefficients", l), kRecursion, ok, ok ? "" : img.to_string()));
    }
    // i and l formal: i in the alpha slot, l in the lambda slot.
    const ParamScalar i = ParamScalar::alpha(), L = ParamScalar::lambda(), mu = ParamScalar::mu();
    ParamScalar lhs = i * (i - num(2) * L + mu + num(3)) + (L - num(1)) * (L - mu - num(2));
    ParamScalar rhs = -((i + num(1)) * (-i + num(2) * L - mu - num(2)) + L * (mu - L + num(1)));
    out.push_back(make_record(id("recursion.bracket-identity"), kRecursion, lhs == rhs, "a = i, l = l: " + lhs.to_string()));
    ParamScalar bracket = i * (i - num(2) * L + mu + num(1)) + L * (L - mu - num(1));
    ParamScalar factored = (L - i) * (L - i - num(1) - mu);
    out.push_back(make_record(id("recursion.bracket-factors"), kRecursion, bracket == factored, bracket.to_string()));
    return out;
}

BranchingSets branching_sets(int N, int cutoff) {
    if (N < 0) throw algebra_error("branching_sets: N must be nonnegative");
    if (cutoff < 0) throw algebra_error("branching_sets: cutoff must be nonnegative");
    BranchingSets s;
    s.N = N;
    s.cutoff = cutoff;
    for (int l = 0; l <= cutoff; ++l) s.Lambda.push_back(N - 2 * l);
    for (int l = 0; 2 * l <= N; ++l) s.Lambda_s.push_back(N - 2 * l);
    for (int v : s.Lambda_s) s.iota_Lambda_s.push_back(iota(v));
    std::set<int> removed(s.Lambda_s.begin(), s.Lambda_s.end());
    removed.insert(s.iota_Lambda_s.begin(), s.iota_Lambda_s.end());
    for (int v : s.Lambda)
        if (!removed.count(v)) s.Lambda_r.push_back(v);
    if (N % 2 == 0) s.Lambda_r_displayed.push_back(-1);
    for (int v = -N; v >= s.lowest(); v -= 2) s.Lambda_r_displayed.push_back(v);
    std::sort(s.Lambda_r_displayed.rbegin(), s.Lambda_r_displayed.rend());
    std::set<int> def(s.Lambda_r.begin(), s.Lambda_r.end()), shown(s.Lambda_r_displayed.begin(), s.Lambda_r_displayed.end());
    for (int v : s.Lambda_r)
        if (!shown.count(v)) s.only_definitional.push_back(v);
    for (int v : s.Lambda_r_displayed)
        if (!def.count(v)) s.only_displayed.push_back(v);
    return s;
}

std::string Summand::label() const {
    if (kind == Kind::verma) return "M(" + std::to_string(weight) + ")";
    return "P(" + std::to_string(weight) + ") [0 -> M(" + std::to_string(*sub) + ") -> P -> M(" + std::to_string(*quotient) + ") -> 0]";
}

std::vector<ParamScalar> generic_decomposition(const DiagContext& ctx, int cutoff) {
    std::vector<ParamScalar> r;
    for (int j = 0; j <= cutoff; ++j) r.push_back(ctx.lambda + ctx.mu - num(2 * j));
    return r;
}

DecompositionReport decomposition_report(const DiagContext& ctx, int cutoff) {
    if (ctx.formal) throw algebra_error("decomposition_report: the special case needs rational lambda and mu");
    if (auto bad = natural_parameter(ctx)) throw algebra_error("decomposition_report: " + *bad);
    const Rational sum = ctx.lambda.rational_value() + ctx.mu.rational_value();
    if (!is_natural(sum)) throw algebra_error("decomposition_report: lambda + mu = " + to_string(sum) + " is not in N_0");
    const int N = static_cast<int>(sum.get_num().get_si());

    DecompositionReport rep;
    rep.generic_list = generic_decomposition(ctx, cutoff);
    rep.sets = branching_sets(N, cutoff);
    const int lowest = rep.sets.lowest();
    for (int v : rep.sets.Lambda_s)
        if (v >= lowest) rep.special_list.push_back({Summand::Kind::projective, v, v, iota(v)});
    for (int v : rep.sets.Lambda_r) rep.special_list.push_back({Summand::Kind::verma, v, std::nullopt, std::nullopt});
    std::sort(rep.special_list.begin(), rep.special_list.end(), [](const Summand& a, const Summand& b) { return a.weight > b.weight; });

    for (const Summand& s : rep.special_list) {
        if (s.kind == Summand::Kind::verma) {
            rep.grothendieck.push_back(s.weight);
        } else {
            rep.grothendieck.push_back(*s.sub);
            if (*s.quotient >= lowest) rep.grothendieck.push_back(*s.quotient);
        }
    }
    std::sort(rep.grothendieck.rbegin(), rep.grothendieck.rend());
    rep.grothendieck_matches = rep.grothendieck == rep.sets.Lambda;
    return rep;
}

Records verify_branching(int N, int cutoff, const std::optional<DiagContext>& special) {
    Records out;
    const std::string tag = "N" + pad2(N) + ".c" + pad2(cutoff);
    BranchingSets s = branching_sets(N, cutoff);
    std::string sets = "Lambda_s = " + join(s.Lambda_s) + "; iota(Lambda_s) = " + join(s.iota_Lambda_s) + "; Lambda_r = " + join(s.Lambda_r);
    out.push_back(make_record(id("branching." + tag + ".sets"), kSets, true, sets));

    bool inv = true;
    for (int v : s.Lambda) inv = inv && iota(iota(v)) == v && iota(v) != v;
    bool expect_fixed_free = N % 2 == 0;
    out.push_back(make_record(id("branching." + tag + ".iota"), kSets, !expect_fixed_free || inv, "involution, fixed-point free on Lambda for even N"));

    VerificationRecord diff = make_record(id("branching." + tag + ".Lambda_r-displayed"), kSets, true,
                                          "definitional " + join(s.Lambda_r) + "; displayed " + join(s.Lambda_r_displayed) + "; only definitional " +
                                              join(s.only_definitional) + "; only displayed " + join(s.only_displayed));
    if (!s.only_definitional.empty() || !s.only_displayed.empty()) diff.status = Status::discrepancy_reported;
    out.push_back(std::move(diff));

    // Any lambda, mu off N_0 with lambda + mu = N.
    DiagContext ctx = special ? *special : DiagContext::make_specialized(Rational(1, 2), Rational(2 * N - 1, 2));
    DecompositionReport rep = decomposition_report(ctx, cutoff);
    std::string summands;
    for (const Summand& x : rep.special_list) summands += (summands.empty() ? "" : " + ") + x.label();
    out.push_back(make_record(id("branching." + tag + ".grothendieck"), kDecomp, rep.grothendieck_matches,
                              "summands " + summands + "; expanded " + join(rep.grothendieck) + "; Lambda " + join(rep.sets.Lambda)));
    return out;
}

Records verify_diag_suite(const DiagContext& ctx, int max_l) {
    Records out;
    append(out, verify_fourier_operators(ctx));
    append(out, verify_annihilation(ctx, max_l, std::min(max_l, 8)));
    append(out, verify_lowering(ctx, std::max(1, max_l)));
    append(out, verify_model_transport(ctx, std::min(max_l, 8)));
    append(out, recursion_crosscheck(ctx, max_l));
    return out;
}

}  // namespace branchcheck
