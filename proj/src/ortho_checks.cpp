#include "branchcheck/orthopoly.hpp"

namespace branchcheck {

namespace {

ParamScalar num(long v) { return ParamScalar(v); }

std::string id(const std::string& what, int l) { return "ortho." + what + ".l" + pad2(l); }

const VarSet X = VarSet::x_line();

GeoPoly x_var() { return GeoPoly::variable(X, 0); }
GeoPoly x_const(const ParamScalar& c) { return GeoPoly::constant(X, c); }

}  // namespace

GeoPoly jacobi_gamma_sum(const JacobiSpec& spec) {
    const int l = spec.l;
    const GeoPoly half_minus = (x_var() - x_const(num(1))) * ParamScalar(Rational(1, 2));
    GeoPoly r(X);
    for (int m = 0; m <= l; ++m) {
        ParamScalar c = gen_binomial(num(l), m) * rising(spec.alpha + num(m + 1), l - m) * rising(spec.alpha + spec.beta + num(l + 1), m);
        r += pow(half_minus, m) * c;
    }
    return r * ParamScalar(1 / factorial(l));
}

Records verify_ortho_suite(int max_gegenbauer, int max_jacobi) {
    Records out;
    const ParamScalar a = ParamScalar::alpha();
    const ParamScalar b = ParamScalar::mu();
    const ParamScalar half(Rational(1, 2));
    const GeoPoly one_minus_x_half = (x_const(num(1)) - x_var()) * half;

    bool ok = true;
    for (int l = 0; l <= max_gegenbauer; ++l) {
        const GeoPoly C = gegenbauer({l, a});
        const GeoPoly Cs = gegenbauer({l, a}, GegenbauerMethod::explicit_sum);
        out.push_back(make_record(id("gegenbauer.recurrence-vs-sum", l), "ortho/gegenbauer", C == Cs, C == Cs ? "" : C.to_string() + " vs " + Cs.to_string()));

        GeoPoly ode = apply_poly(gegenbauer_ode(a, l), C);
        out.push_back(make_record(id("gegenbauer.ode", l), "ortho/gegenbauer-ode", ode.is_zero(), ode.to_string()));

        GeoPoly hyp = hypergeom_2f1_terminating(num(-l), num(2) * a + num(l), a + half, one_minus_x_half, l) * (rising(num(2) * a, l) / ParamScalar(factorial(l)));
        out.push_back(make_record(id("gegenbauer.hypergeometric", l), "ortho/gegenbauer", hyp == C, hyp == C ? "" : hyp.to_string()));

        const GeoPoly Cdown = l == 0 ? GeoPoly(X) : gegenbauer({l - 1, a});
        const GeoPoly Cup = gegenbauer({l + 1, a});
        GeoPoly fC = apply_poly(gegenbauer_lowering(l), C);
        GeoPoly eC = apply_poly(gegenbauer_raising(a, l), C);
        ok = fC == Cdown * (num(l) + num(2) * a - num(1)) && eC == Cup * num(-(l + 1));
        out.push_back(make_record(id("gegenbauer.ladder", l), "ortho/gegenbauer-ladder", ok, ok ? "" : fC.to_string() + "; " + eC.to_string()));

        // [e, f] C_l = (e(l-1) f(l) - f(l+1) e(l)) C_l = 2(l + alpha) C_l
        GeoPoly br = apply_poly(gegenbauer_raising(a, l - 1), fC) - apply_poly(gegenbauer_lowering(l + 1), eC);
        ok = br == C * (num(2) * (num(l) + a));
        out.push_back(make_record(id("gegenbauer.ladder-bracket", l), "ortho/gegenbauer-ladder", ok, ok ? "" : br.to_string()));

        // h acts on C_l by h(l) = 2(l + alpha)
        auto h = [&](int k) { return num(2) * (num(k) + a); };
        ok = eC * (h(l + 1) - h(l)) == eC * num(2) && fC * (h(l - 1) - h(l)) == fC * num(-2);
        out.push_back(make_record(id("gegenbauer.ladder-weight", l), "ortho/gegenbauer-ladder", ok));

        const GeoPoly Ct = gegenbauer_tilde({l, a});
        GeoPoly ft = apply_poly(tilde_lowering(l), Ct);
        GeoPoly et = apply_poly(tilde_raising(a, l), Ct);
        ok = ft == gegenbauer_tilde({l - 1, a}) * (num(l) + num(2) * a - num(1)) && et == gegenbauer_tilde({l + 1, a}) * num(-(l + 1));
        out.push_back(make_record(id("gegenbauer.t-ladder", l), "ortho/gegenbauer-ladder", ok, ok ? "" : ft.to_string() + "; " + et.to_string()));
    }

    for (int l = 0; l <= max_jacobi; ++l) {
        const JacobiSpec spec{l, a, b};
        const GeoPoly P = jacobi(spec);
        GeoPoly ode = apply_poly(jacobi_ode(a, b, l), P);
        out.push_back(make_record(id("jacobi.ode", l), "ortho/jacobi-ode", ode.is_zero(), ode.to_string()));

        ParamScalar value(0);
        for (const auto& [e, c] : P.terms()) value += c;
        ParamScalar want = rising(a + num(1), l) / ParamScalar(factorial(l));
        out.push_back(make_record(id("jacobi.value-at-1", l), "ortho/jacobi", value == want && want == gen_binomial(a + num(l), l), value.to_string()));

        GeoPoly hyp = hypergeom_2f1_terminating(num(-l), num(1) + a + b + num(l), a + num(1), one_minus_x_half, l) * gen_binomial(a + num(l), l);
        out.push_back(make_record(id("jacobi.hypergeometric", l), "ortho/hypergeometric", hyp == P, hyp == P ? "" : hyp.to_string()));
        GeoPoly gs = jacobi_gamma_sum(spec);
        out.push_back(make_record(id("jacobi.gamma-sum", l), "ortho/hypergeometric", gs == P, gs == P ? "" : gs.to_string()));

        for (int k = 1; k <= 3; ++k) {
            GeoPoly d = P;
            for (int j = 0; j < k; ++j) d = partial_derive(d, 0);
            GeoPoly f = jacobi_derivative(spec, k);
            out.push_back(make_record(id("jacobi.derivative.k" + pad2(k), l), "ortho/jacobi-derivative", d == f, d == f ? "" : d.to_string()));
        }

        const GeoPoly C = gegenbauer({l, a});
        GeoPoly rel = jacobi({l, a - half, a - half}) * (rising(num(2) * a, l) / rising(a + half, l));
        out.push_back(make_record(id("gegenbauer-jacobi", l), "ortho/gegenbauer-jacobi", rel == C, rel == C ? "" : rel.to_string()));
    }

    for (int pa = 0; pa <= 3; ++pa) {
        for (int pb = 0; pb <= 3; ++pb) {
            ok = true;
            std::string bad;
            for (int k = 0; k <= 5; ++k) {
                for (int l = 0; l <= 5; ++l) {
                    Rational v = orthogonality_integral(k, l, pa, pb);
                    Rational w = k == l ? orthogonality_norm(l, pa, pb) : Rational(0);
                    if (v != w) {
                        ok = false;
                        bad += "(" + std::to_string(k) + "," + std::to_string(l) + ")=" + to_string(v) + " ";
                    }
                }
            }
            out.push_back(make_record("ortho.orthogonality.a" + pad2(pa) + ".b" + pad2(pb), "ortho/orthogonality", ok, bad));
        }
    }
    return out;
}

}  // namespace branchcheck
