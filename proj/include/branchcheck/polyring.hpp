#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "branchcheck/scalars.hpp"

namespace branchcheck {

/// Geometric variable sets. `xy_plane` hosts the function-model operators of
/// the diagonal pair.
enum class VarKind { xi_n, xi_eta, t_line, x_line, xy_plane };

class VarSet {
   public:
    static VarSet xi(int n);
    static VarSet xi_eta() { return VarSet(VarKind::xi_eta, 2); }
    static VarSet t_line() { return VarSet(VarKind::t_line, 1); }
    static VarSet x_line() { return VarSet(VarKind::x_line, 1); }
    static VarSet xy_plane() { return VarSet(VarKind::xy_plane, 2); }

    VarKind kind() const noexcept { return kind_; }
    int arity() const noexcept { return arity_; }
    std::string name(int i) const;
    std::optional<int> index_of(std::string_view name) const;
    std::string describe() const;

    friend bool operator==(const VarSet& a, const VarSet& b) = default;

   private:
    VarSet(VarKind k, int arity) : kind_(k), arity_(arity) {}
    VarKind kind_;
    int arity_;
};

using Exponents = std::vector<int>;

/// Graded lexicographic, larger first, first variable most significant (so
/// the distinguished last variable xi_n / eta is least significant).
struct GradedOrder {
    bool operator()(const Exponents& a, const Exponents& b) const noexcept;
};

int total_degree(const Exponents& e) noexcept;

class GeoPoly {
   public:
    using Terms = std::map<Exponents, ParamScalar, GradedOrder>;

    explicit GeoPoly(VarSet vars) : vars_(vars) {}
    static GeoPoly constant(VarSet vars, const ParamScalar& c);
    static GeoPoly variable(VarSet vars, int i);
    static GeoPoly monomial(VarSet vars, Exponents e, const ParamScalar& c = ParamScalar(1));

    const VarSet& vars() const noexcept { return vars_; }
    const Terms& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept;
    /// -1 for the zero polynomial.
    int degree() const noexcept;
    int degree_in(int var) const noexcept;
    bool is_homogeneous() const noexcept;
    ParamScalar coefficient(const Exponents& e) const;
    const Exponents& leading_exponent() const { return terms_.begin()->first; }
    const ParamScalar& leading_coefficient() const { return terms_.begin()->second; }

    GeoPoly& operator+=(const GeoPoly& o);
    GeoPoly& operator-=(const GeoPoly& o);
    GeoPoly& operator*=(const GeoPoly& o);
    GeoPoly& operator*=(const ParamScalar& c);
    GeoPoly operator-() const;

    friend GeoPoly operator+(GeoPoly a, const GeoPoly& b) { return a += b; }
    friend GeoPoly operator-(GeoPoly a, const GeoPoly& b) { return a -= b; }
    friend GeoPoly operator*(const GeoPoly& a, const GeoPoly& b);
    friend GeoPoly operator*(GeoPoly a, const ParamScalar& c) { return a *= c; }
    friend GeoPoly operator*(const ParamScalar& c, GeoPoly a) { return a *= c; }
    friend bool operator==(const GeoPoly& a, const GeoPoly& b);

    void add_term(const Exponents& e, const ParamScalar& c);

    /// Apply a parameter substitution to every coefficient.
    GeoPoly substitute_params(const ParamScalar::Bindings& b) const;

    std::string to_string() const;

   private:
    void check_same(const GeoPoly& o) const;
    VarSet vars_;
    Terms terms_;
};

GeoPoly pow(const GeoPoly& p, int k);

enum class RingOp { add, sub, mul };
GeoPoly poly_arith(const GeoPoly& p, const GeoPoly& q, RingOp kind);

GeoPoly partial_derive(const GeoPoly& p, int var);
GeoPoly partial_derive(const GeoPoly& p, const Exponents& multi);

/// p / q when q divides p exactly. Throws on q = 0.
std::optional<GeoPoly> exact_divide(const GeoPoly& p, const GeoPoly& q);

GeoPoly homogeneous_component(const GeoPoly& p, int d);

/// p(x) -> p(scale*t + shift), from the x line to the t line.
GeoPoly substitute_linear(const GeoPoly& p, const ParamScalar& scale, const ParamScalar& shift);

/// eta^l Q(xi/eta) for Q on the t line. Throws when deg Q > l.
GeoPoly homogenize(const GeoPoly& q, int l);
/// Inverse of homogenize on homogeneous degree-l input.
GeoPoly dehomogenize(const GeoPoly& p, int l);

/// For x^{-l} C(x) = sum_k c_k x^{-2k}, returns sum_k c_k (-t)^k.
GeoPoly gegen_tilde_convert(const GeoPoly& c, int l);

/// p = c q with c a parameter scalar; nullopt when not proportional. q != 0.
std::optional<ParamScalar> proportionality(const GeoPoly& p, const GeoPoly& q);

/// Sum of squares of the first `count` variables.
GeoPoly sum_of_squares(VarSet vars, int count);

// ------------------------------------------------------------------ RatCoeff

/// Curated denominators: xi_n, S' = sum_{i<n} xi_i^2, S = sum_i xi_i^2 on
/// xi_n; eta on xi_eta; t on t_line. Other var sets have none.
std::vector<GeoPoly> curated_factors(const VarSet& vars);
std::vector<std::string> curated_factor_names(const VarSet& vars);

/// num / prod f_k^{den[k]} over the curated factors of the var set.
class RatCoeff {
   public:
    explicit RatCoeff(GeoPoly num);
    RatCoeff(GeoPoly num, std::vector<int> den);

    const VarSet& vars() const noexcept { return num_.vars(); }
    const GeoPoly& num() const noexcept { return num_; }
    const std::vector<int>& den() const noexcept { return den_; }
    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_polynomial() const noexcept;
    /// Throws algebra_error unless is_polynomial().
    const GeoPoly& to_poly() const;

    RatCoeff& operator+=(const RatCoeff& o);
    RatCoeff& operator-=(const RatCoeff& o);
    RatCoeff& operator*=(const RatCoeff& o);
    RatCoeff& operator*=(const ParamScalar& c);
    RatCoeff operator-() const;
    friend RatCoeff operator+(RatCoeff a, const RatCoeff& b) { return a += b; }
    friend RatCoeff operator-(RatCoeff a, const RatCoeff& b) { return a -= b; }
    friend RatCoeff operator*(RatCoeff a, const RatCoeff& b) { return a *= b; }
    friend RatCoeff operator*(RatCoeff a, const ParamScalar& c) { return a *= c; }

    RatCoeff derive(int var) const;
    RatCoeff substitute_params(const ParamScalar::Bindings& b) const;

    std::string to_string() const;

   private:
    void reduce();
    GeoPoly num_;
    std::vector<int> den_;
};

// -------------------------------------------------------------------- parser

/// Constants and shorthands available to `parse_poly`. On xi_n the names
/// `xn`, `Sp` and `S` expand to xi_n, S' and S.
struct ParseEnv {
    std::map<std::string, Rational> constants;
};

/// Parses the rendering produced by GeoPoly::to_string (and hand-written
/// expressions over + - * / ^ and parentheses). Parameters are a, l, m.
GeoPoly parse_poly(std::string_view text, VarSet vars, const ParseEnv& env = {});
ParamScalar parse_scalar(std::string_view text, const ParseEnv& env = {});

}  // namespace branchcheck
