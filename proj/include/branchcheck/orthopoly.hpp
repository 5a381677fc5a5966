#pragma once

#include <vector>

#include "branchcheck/polyring.hpp"
#include "branchcheck/report.hpp"
#include "branchcheck/weylalg.hpp"

namespace branchcheck {

/// z (z+1) ... (z+k-1); 1 for k = 0.
ParamScalar rising(const ParamScalar& z, int k);
/// z (z-1) ... (z-k+1); 1 for k = 0.
ParamScalar falling(const ParamScalar& z, int k);
Rational factorial(int k);

/// Shifted rising factorial (z+1)_l = (z+1)(z+2)...(z+l).
ParamScalar pochhammer(const ParamScalar& z, int l);
/// z (z-1) ... (z-l+1) / l!, the continuation of the binomial coefficient to
/// arbitrary upper argument and nonnegative integer lower argument.
ParamScalar gen_binomial(const ParamScalar& z, int l);

struct GegenbauerSpec {
    int l;  // -1 allowed: C_{-1} = 0
    ParamScalar alpha;
};

struct JacobiSpec {
    int l;
    ParamScalar alpha;
    ParamScalar beta;
};

enum class GegenbauerMethod { recurrence, explicit_sum };

/// C_l^alpha(x) on the x line.
GeoPoly gegenbauer(const GegenbauerSpec& spec, GegenbauerMethod method = GegenbauerMethod::recurrence);
/// The t-line polynomial whose value at -1/t equals x^{-l} C_l(x), x^2 = -1/t.
GeoPoly gegenbauer_tilde(const GegenbauerSpec& spec);

/// P_l^{(alpha, beta)}(x) from the binomial double sum.
GeoPoly jacobi(const JacobiSpec& spec);

/// Coefficients a_0..a_l (in t) of the degree-l solution of the Jacobi
/// equation in the t variable, from the three-term recursion. a_0 starts at
/// binom(l - lambda - 1, l) and the recursion divides by (i - lambda)(i + 1).
std::vector<ParamScalar> jacobi_recursion_coeffs(int l, const ParamScalar& lambda, const ParamScalar& mu);

/// (alpha+beta+l+1)_k / 2^k * P_{l-k}^{(alpha+k, beta+k)}; zero for k > l.
GeoPoly jacobi_derivative(const JacobiSpec& spec, int k);

/// Exact integral over [-1, 1] of (1-x)^a (1+x)^b P_k P_l, integer a, b >= 0.
Rational orthogonality_integral(int k, int l, int a, int b);
/// Closed-form diagonal value 2^{a+b+1}/(2l+a+b+1) (l+a)!(l+b)!/((l+a+b)! l!).
Rational orthogonality_norm(int l, int a, int b);

/// sum_{m=0}^{terms} (a)_m (b)_m / ((c)_m m!) arg^m with rising factorials.
GeoPoly hypergeom_2f1_terminating(const ParamScalar& a, const ParamScalar& b, const ParamScalar& c, const GeoPoly& arg, int terms);

/// (1-x^2) d^2 - (2 alpha + 1) x d + l(l + 2 alpha)
DiffOp gegenbauer_ode(const ParamScalar& alpha, int l);
/// (1-x^2) d^2 + (beta - alpha - (alpha+beta+2) x) d + l(l+alpha+beta+1)
DiffOp jacobi_ode(const ParamScalar& alpha, const ParamScalar& beta, int l);

/// Gegenbauer ladder on the x line: raising e(l) = (1-x^2) d - (l+2 alpha) x,
/// lowering f(l) = (1-x^2) d + l x.
DiffOp gegenbauer_raising(const ParamScalar& alpha, int l);
DiffOp gegenbauer_lowering(int l);

/// The same ladder transported to the t line:
/// -2(t+1) d_t + l and 2t(t+1) d_t - l t - 2(l + alpha).
DiffOp tilde_lowering(int l);
DiffOp tilde_raising(const ParamScalar& alpha, int l);

/// Gamma-ratio form of P_l: (l!)^{-1} sum_{m=0}^{l} binom(l, m) (alpha+m+1)_{l-m}
/// (alpha+beta+l+1)_m ((x-1)/2)^m, rising factorials throughout.
GeoPoly jacobi_gamma_sum(const JacobiSpec& spec);

/// Orthogonal polynomial identities with formal parameters: alpha in the `a` slot,
/// beta in the `m` slot.
Records verify_ortho_suite(int max_gegenbauer = 12, int max_jacobi = 10);

}  // namespace branchcheck
