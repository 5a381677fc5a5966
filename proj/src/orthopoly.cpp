#include "branchcheck/orthopoly.hpp"

namespace branchcheck {

namespace {

const VarSet X = VarSet::x_line();
const VarSet T = VarSet::t_line();

GeoPoly x_var() { return GeoPoly::variable(X, 0); }
GeoPoly x_const(const ParamScalar& c) { return GeoPoly::constant(X, c); }

Rational integrate_unit_interval(const GeoPoly& p) {
    Rational r = 0;
    for (const auto& [e, c] : p.terms()) {
        if (e[0] % 2 != 0) continue;
        r += c.rational_value() * Rational(2, e[0] + 1);
    }
    return r;
}

}  // namespace

ParamScalar rising(const ParamScalar& z, int k) {
    ParamScalar r(1);
    for (int i = 0; i < k; ++i) r *= z + ParamScalar(static_cast<long>(i));
    return r;
}

ParamScalar falling(const ParamScalar& z, int k) {
    ParamScalar r(1);
    for (int i = 0; i < k; ++i) r *= z - ParamScalar(static_cast<long>(i));
    return r;
}

Rational factorial(int k) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(k));
    return Rational(r);
}

ParamScalar pochhammer(const ParamScalar& z, int l) { return rising(z + ParamScalar(1), l); }

ParamScalar gen_binomial(const ParamScalar& z, int l) {
    if (l < 0) throw algebra_error("gen_binomial: negative lower index");
    return falling(z, l) / ParamScalar(factorial(l));
}

GeoPoly gegenbauer(const GegenbauerSpec& spec, GegenbauerMethod method) {
    const int l = spec.l;
    const ParamScalar& a = spec.alpha;
    if (l < -1) throw algebra_error("gegenbauer: degree below -1");
    if (l == -1) return GeoPoly(X);
    if (method == GegenbauerMethod::explicit_sum) {
        GeoPoly r(X);
        for (int k = 0; 2 * k <= l; ++k) {
            Rational denom = factorial(k) * factorial(l - 2 * k);
            ParamScalar c = rising(a, l - k) / ParamScalar(denom);
            if (k % 2 == 1) c = -c;
            Exponents e{l - 2 * k};
            Integer two_pow;
            mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, static_cast<unsigned long>(l - 2 * k));
            r.add_term(e, c * ParamScalar(Rational(two_pow)));
        }
        return r;
    }
    GeoPoly prev = x_const(ParamScalar(1));
    if (l == 0) return prev;
    GeoPoly cur = x_var() * (ParamScalar(2) * a);
    for (int k = 2; k <= l; ++k) {
        const ParamScalar kk(static_cast<long>(k));
        GeoPoly next = x_var() * cur * (ParamScalar(2) * (kk + a - ParamScalar(1))) - prev * (kk + ParamScalar(2) * a - ParamScalar(2));
        next *= ParamScalar(Rational(1, k));
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

GeoPoly gegenbauer_tilde(const GegenbauerSpec& spec) {
    if (spec.l < 0) return GeoPoly(T);
    return gegen_tilde_convert(gegenbauer(spec), spec.l);
}

GeoPoly jacobi(const JacobiSpec& spec) {
    const int l = spec.l;
    if (l < 0) throw algebra_error("jacobi: negative degree");
    const ParamScalar L(static_cast<long>(l));
    const GeoPoly half_minus = (x_var() - x_const(ParamScalar(1))) * ParamScalar(Rational(1, 2));
    const GeoPoly half_plus = (x_var() + x_const(ParamScalar(1))) * ParamScalar(Rational(1, 2));
    GeoPoly r(X);
    for (int j = 0; j <= l; ++j) {
        ParamScalar c = gen_binomial(L + spec.alpha, j) * gen_binomial(L + spec.beta, l - j);
        if (c.is_zero()) continue;
        r += pow(half_minus, l - j) * pow(half_plus, j) * c;
    }
    return r;
}

std::vector<ParamScalar> jacobi_recursion_coeffs(int l, const ParamScalar& lambda, const ParamScalar& mu) {
    if (l < 0) throw algebra_error("jacobi_recursion_coeffs: negative degree");
    const ParamScalar L(static_cast<long>(l));
    std::vector<ParamScalar> a;
    a.reserve(l + 1);
    a.push_back(gen_binomial(L - lambda - ParamScalar(1), l));
    for (int i = 0; i < l; ++i) {
        const ParamScalar I(static_cast<long>(i));
        ParamScalar divisor = (I - lambda) * (I + ParamScalar(1));
        if (divisor.is_zero()) throw algebra_error("jacobi_recursion_coeffs: zero divisor (i - lambda)(i + 1) at i = " + std::to_string(i));
        ParamScalar bracket = I * (I - ParamScalar(2) * L + mu + ParamScalar(1)) + L * (L - mu - ParamScalar(1));
        a.push_back(-(bracket * a.back()) / divisor);
    }
    return a;
}

GeoPoly jacobi_derivative(const JacobiSpec& spec, int k) {
    if (k < 0) throw algebra_error("jacobi_derivative: negative order");
    if (k > spec.l) return GeoPoly(X);
    const ParamScalar K(static_cast<long>(k));
    ParamScalar c = rising(spec.alpha + spec.beta + ParamScalar(static_cast<long>(spec.l + 1)), k);
    Integer two_pow;
    mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, static_cast<unsigned long>(k));
    c /= ParamScalar(Rational(two_pow));
    return jacobi({spec.l - k, spec.alpha + K, spec.beta + K}) * c;
}

Rational orthogonality_integral(int k, int l, int a, int b) {
    if (a < 0 || b < 0) throw algebra_error("orthogonality_integral: only nonnegative integer parameters are supported");
    const ParamScalar A(static_cast<long>(a)), B(static_cast<long>(b));
    GeoPoly weight = pow(x_const(ParamScalar(1)) - x_var(), a) * pow(x_const(ParamScalar(1)) + x_var(), b);
    GeoPoly integrand = weight * jacobi({k, A, B}) * jacobi({l, A, B});
    return integrate_unit_interval(integrand);
}

Rational orthogonality_norm(int l, int a, int b) {
    Integer two_pow;
    mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, static_cast<unsigned long>(a + b + 1));
    Rational r(two_pow, 2 * l + a + b + 1);
    r.canonicalize();
    r *= factorial(l + a) * factorial(l + b);
    r /= factorial(l + a + b) * factorial(l);
    return r;
}

GeoPoly hypergeom_2f1_terminating(const ParamScalar& a, const ParamScalar& b, const ParamScalar& c, const GeoPoly& arg, int terms) {
    if (terms < 0) throw algebra_error("hypergeom_2f1_terminating: negative term count");
    GeoPoly r = GeoPoly::constant(arg.vars(), ParamScalar(1));
    GeoPoly power = r;
    ParamScalar coeff(1);
    for (int m = 1; m <= terms; ++m) {
        const ParamScalar M1(static_cast<long>(m - 1));
        ParamScalar cc = c + M1;
        if (cc.is_zero()) throw algebra_error("hypergeom_2f1_terminating: zero divisor (c)_" + std::to_string(m));
        coeff *= (a + M1) * (b + M1) / (cc * ParamScalar(static_cast<long>(m)));
        power *= arg;
        if (coeff.is_zero()) break;
        r += power * coeff;
    }
    return r;
}

DiffOp gegenbauer_ode(const ParamScalar& alpha, int l) {
    const GeoPoly one_minus_x2 = x_const(ParamScalar(1)) - x_var() * x_var();
    const ParamScalar L(static_cast<long>(l));
    DiffOp d2 = DiffOp::derivative(X, {2});
    DiffOp d1 = DiffOp::partial(X, 0);
    return DiffOp::mult(one_minus_x2) * d2 - DiffOp::mult(x_var() * (ParamScalar(2) * alpha + ParamScalar(1))) * d1 +
           DiffOp::scalar(X, L * (L + ParamScalar(2) * alpha));
}

DiffOp jacobi_ode(const ParamScalar& alpha, const ParamScalar& beta, int l) {
    const GeoPoly one_minus_x2 = x_const(ParamScalar(1)) - x_var() * x_var();
    const ParamScalar L(static_cast<long>(l));
    GeoPoly first = x_const(beta - alpha) - x_var() * (alpha + beta + ParamScalar(2));
    return DiffOp::mult(one_minus_x2) * DiffOp::derivative(X, {2}) + DiffOp::mult(first) * DiffOp::partial(X, 0) +
           DiffOp::scalar(X, L * (L + alpha + beta + ParamScalar(1)));
}

DiffOp gegenbauer_raising(const ParamScalar& alpha, int l) {
    const GeoPoly one_minus_x2 = x_const(ParamScalar(1)) - x_var() * x_var();
    return DiffOp::mult(one_minus_x2) * DiffOp::partial(X, 0) - DiffOp::mult(x_var() * (ParamScalar(static_cast<long>(l)) + ParamScalar(2) * alpha));
}

DiffOp gegenbauer_lowering(int l) {
    const GeoPoly one_minus_x2 = x_const(ParamScalar(1)) - x_var() * x_var();
    return DiffOp::mult(one_minus_x2) * DiffOp::partial(X, 0) + DiffOp::mult(x_var() * ParamScalar(static_cast<long>(l)));
}

DiffOp tilde_lowering(int l) {
    const GeoPoly t = GeoPoly::variable(T, 0);
    const GeoPoly one = GeoPoly::constant(T, ParamScalar(1));
    return DiffOp::mult((t + one) * ParamScalar(-2)) * DiffOp::partial(T, 0) + DiffOp::scalar(T, ParamScalar(static_cast<long>(l)));
}

DiffOp tilde_raising(const ParamScalar& alpha, int l) {
    const GeoPoly t = GeoPoly::variable(T, 0);
    const GeoPoly one = GeoPoly::constant(T, ParamScalar(1));
    const ParamScalar L(static_cast<long>(l));
    return DiffOp::mult(t * (t + one) * ParamScalar(2)) * DiffOp::partial(T, 0) - DiffOp::mult(t * L) -
           DiffOp::scalar(T, ParamScalar(2) * (L + alpha));
}

}  // namespace branchcheck
