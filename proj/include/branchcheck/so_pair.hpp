#pragma once

#include <optional>
#include <vector>

#include "branchcheck/orthopoly.hpp"
#include "branchcheck/report.hpp"
#include "branchcheck/weylalg.hpp"

namespace branchcheck {

/// (so(n+1,1), so(n,1)) in the Fourier model on C[xi_1..xi_n].
struct SoPairContext {
    int n;
    ParamScalar lambda;
    ParamScalar alpha;  // -lambda - (n-1)/2
    VarSet vars;
    bool formal;

    static SoPairContext make_formal(int n);
    static SoPairContext make_specialized(int n, const Rational& lambda);

    GeoPoly xi(int i) const { return GeoPoly::variable(vars, i); }
    GeoPoly xn() const { return xi(n - 1); }
    /// sum_{i<n} xi_i^2
    GeoPoly s_prime() const { return sum_of_squares(vars, n - 1); }
    /// sum_i xi_i^2
    GeoPoly s_full() const { return sum_of_squares(vars, n); }
    GeoPoly constant(const ParamScalar& c) const { return GeoPoly::constant(vars, c); }
    /// Specializes lambda in a formal-lambda result; identity when formal.
    GeoPoly specialize(const GeoPoly& p) const;
};

struct SingularVector {
    int l;
    GeoPoly poly;
};

/// xi_n^d sum_k g_k (S'/xi_n^2)^k for g = sum_k g_k t^k on the t line.
GeoPoly lift_from_t(const SoPairContext& ctx, const GeoPoly& g, int d);
/// Inverse of lift_from_t: reads the coefficient of xi_1^{2k} xi_n^{d-2k}.
/// Returns nullopt when p is not of the lifted shape.
std::optional<GeoPoly> drop_to_t(const SoPairContext& ctx, const GeoPoly& p, int d);

/// xi_n^l C~_l(-1/t), no rescaling.
GeoPoly singular_vector_unnormalized(const SoPairContext& ctx, int l);
/// Coefficient of xi_n^{l-2k} S'^k (k = floor(l/2)) in the unnormalized vector
/// divided by l!/(2^k k!), formal in lambda.
ParamScalar normalization_divisor(const SoPairContext& ctx, int l);
/// Rational lambda values at which some divisor with l <= max_l vanishes, i.e.
/// where rescaling the specialized unnormalized vector is impossible.
std::vector<Rational> normalization_poles(int n, int max_l);
/// Normalized F_l, computed for formal lambda and then specialized. Throws
/// when a coefficient of the formal vector has a pole at the chosen lambda.
SingularVector singular_vector_F(const SoPairContext& ctx, int l);

/// P-shaped operator with d_{xi_m} in place of d_{xi_n}
/// (m is a 0-based index; m = n-1 gives P).
DiffOp op_P_direction(const SoPairContext& ctx, int m);
/// 1/2 xi_n Box + (lambda - E) d_n (global factor i dropped).
DiffOp op_P(const SoPairContext& ctx);
/// S' P - (lambda - E + 2)(n + 2 lambda - 2E + 1) xi_n
DiffOp op_Q(const SoPairContext& ctx);

/// True iff every primed operator annihilates v and v is invariant under the
/// rotations of xi_1..xi_{n-1}.
bool verify_singular(const SoPairContext& ctx, const GeoPoly& v);

struct LadderOps {
    DiffOp e, f, h;
};
/// Integer-shifted ladder at level l (l may be -1 for the e(l-1) factor).
LadderOps ladder_ops(const SoPairContext& ctx, int l);
/// -S d_n - (E - 1 + 2 alpha) xi_n, the level-free form of e.
DiffOp e_euler_form(const SoPairContext& ctx);

struct LadderReport {
    std::vector<ParamScalar> e_constants;  // e(l) F_l = e_l F_{l+1}
    std::vector<ParamScalar> f_constants;  // f(l) F_l = f_l F_{l-1}; f_0 = 0
    Records records;
};
LadderReport verify_sl2(const SoPairContext& ctx, int max_l);

/// f(l+1)e(l) + e(l-1)f(l) + h(l)^2/2 as a composed operator.
DiffOp casimir_op(const SoPairContext& ctx, int l);
/// The displayed closed form with E kept as the Euler operator.
DiffOp casimir_closed_form(const SoPairContext& ctx, int l);
Records verify_casimir(const SoPairContext& ctx, int max_l);

/// Commutator [P, Q] and [e_euler_form, P], plus the transcribed right-hand sides.
DiffOp commutator_PQ(const SoPairContext& ctx);
DiffOp commutator_eP(const SoPairContext& ctx);
DiffOp displayed_PQ(const SoPairContext& ctx);
DiffOp displayed_eP(const SoPairContext& ctx);
Records verify_nonclosure(const SoPairContext& ctx, int max_l = 4);

Records t_model_check(const SoPairContext& ctx, int max_l);

/// e f - f e on F_{2k+1} from the ladder constants, against h and against the
/// displayed weight 2 alpha + 4k - 2.
Records verify_ladder_weight(const SoPairContext& ctx, const LadderReport& ladder);

/// The singular-vector and operator-membership suite for one n.
Records verify_so_suite(const SoPairContext& ctx, int max_l);

}  // namespace branchcheck
