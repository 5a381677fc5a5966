#pragma once

#include <optional>
#include <string>
#include <vector>

#include "branchcheck/orthopoly.hpp"
#include "branchcheck/report.hpp"
#include "branchcheck/weylalg.hpp"

namespace branchcheck {

/// sl(2) x sl(2) over its diagonal, with characters (lambda, mu).
struct DiagContext {
    ParamScalar lambda;
    ParamScalar mu;
    bool formal;

    static DiagContext make_formal();
    static DiagContext make_specialized(const Rational& lambda, const Rational& mu);
};

/// -lambda d_xi + xi d_xi^2 - mu d_eta + eta d_eta^2 (factor i dropped).
DiffOp op_X_fourier(const DiagContext& ctx);
/// -lambda d_xi + xi d_xi^2 + mu d_eta - eta d_eta^2 (factor i dropped).
DiffOp op_F_fourier(const DiagContext& ctx);
/// lambda x + x^2 d_x + mu y + y^2 d_y
DiffOp op_X_function(const DiagContext& ctx);
/// lambda x + x^2 d_x - mu y - y^2 d_y
DiffOp op_F_function(const DiagContext& ctx);
/// t(t+1) d^2 + (t(mu - 2(l-1)) - lambda) d + l(l-1-mu)
DiffOp op_X_t(const DiagContext& ctx, int l);
/// -t(t-1) d^2 + (t(2l-mu-2) - lambda) d + l(mu-l+1)
DiffOp op_F_t(const DiagContext& ctx, int l);

/// P_l^{(-lambda-1, mu+lambda-2l+1)}(2t+1) on the t line.
GeoPoly jacobi_t(const DiagContext& ctx, int l);
/// eta^l times jacobi_t at t = xi/eta.
GeoPoly singular_vector_Ptilde(const DiagContext& ctx, int l);

/// 2(l-1-lambda)(mu-l+1)
ParamScalar lowering_constant(const DiagContext& ctx, int l);

Records verify_fourier_operators(const DiagContext& ctx);
Records verify_annihilation(const DiagContext& ctx, int max_l, int max_l_t);
Records verify_lowering(const DiagContext& ctx, int max_l);
Records verify_model_transport(const DiagContext& ctx, int max_l);
Records recursion_crosscheck(const DiagContext& ctx, int max_l);

struct BranchingSets {
    int N;
    int cutoff;           // Lambda materialized for l = 0..cutoff
    std::vector<int> Lambda;
    std::vector<int> Lambda_s;
    std::vector<int> iota_Lambda_s;
    std::vector<int> Lambda_r;            // from the set definitions
    std::vector<int> Lambda_r_displayed;  // from the displayed case analysis
    std::vector<int> only_definitional;
    std::vector<int> only_displayed;

    int lowest() const { return N - 2 * cutoff; }
};

inline int iota(int nu) { return -nu - 2; }

BranchingSets branching_sets(int N, int cutoff);

struct Summand {
    enum class Kind { verma, projective } kind;
    int weight;
    // Projective summands: sub-module and quotient labels of the extension.
    std::optional<int> sub, quotient;
    std::string label() const;
};

struct DecompositionReport {
    std::vector<ParamScalar> generic_list;  // lambda + mu - 2j, j = 0..cutoff
    std::vector<Summand> special_list;
    BranchingSets sets;
    std::vector<int> grothendieck;  // expanded Verma weights, descending
    bool grothendieck_matches;
};

/// Generic branching list, symbolic in the context's parameters.
std::vector<ParamScalar> generic_decomposition(const DiagContext& ctx, int cutoff);
/// Special case lambda + mu = N in N_0, lambda, mu not in N_0. Throws
/// algebra_error naming the failed integrality condition.
DecompositionReport decomposition_report(const DiagContext& ctx, int cutoff);

/// Set bookkeeping plus the Grothendieck check, the latter at `special`
/// (default lambda = 1/2, mu = N - 1/2).
Records verify_branching(int N, int cutoff, const std::optional<DiagContext>& special = std::nullopt);

/// Everything above for one context.
Records verify_diag_suite(const DiagContext& ctx, int max_l);

/// Precondition shared by the special decomposition and the lowering
/// nonvanishing: lambda, mu not in N_0. Returns the name of the failing
/// parameter, if any.
std::optional<std::string> natural_parameter(const DiagContext& ctx);

}  // namespace branchcheck
