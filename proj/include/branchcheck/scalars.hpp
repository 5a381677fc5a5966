#pragma once

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace branchcheck {

class algebra_error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

using Integer = mpz_class;
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);
std::string to_string(const Rational& r);

/// Formal parameters. Rendered as `a`, `l`, `m`.
enum class Param : int { alpha = 0, lambda = 1, mu = 2 };
inline constexpr int num_params = 3;

using ParamExp = std::array<int, num_params>;

/// Graded lexicographic order, larger monomials first (alpha most significant).
struct ParamOrder {
    bool operator()(const ParamExp& a, const ParamExp& b) const noexcept;
};

class ParamPoly {
   public:
    using Terms = std::map<ParamExp, Rational, ParamOrder>;

    ParamPoly() = default;
    ParamPoly(long c);
    ParamPoly(const Rational& c);

    static ParamPoly symbol(Param p);
    static ParamPoly monomial(const ParamExp& e, const Rational& c);

    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept;
    bool is_one() const noexcept;
    /// Constant term (zero when absent).
    Rational constant_term() const;
    /// Requires !is_zero().
    const ParamExp& leading_exponent() const { return terms_.begin()->first; }
    const Rational& leading_coefficient() const { return terms_.begin()->second; }
    int total_degree() const noexcept;
    int degree_in(Param p) const noexcept;

    ParamPoly& operator+=(const ParamPoly& o);
    ParamPoly& operator-=(const ParamPoly& o);
    ParamPoly& operator*=(const ParamPoly& o);
    ParamPoly& operator*=(const Rational& c);
    ParamPoly operator-() const;

    friend ParamPoly operator+(ParamPoly a, const ParamPoly& b) { return a += b; }
    friend ParamPoly operator-(ParamPoly a, const ParamPoly& b) { return a -= b; }
    friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b);
    friend bool operator==(const ParamPoly& a, const ParamPoly& b) { return a.terms_ == b.terms_; }

    /// Simultaneous substitution; unbound symbols stay formal.
    using Bindings = std::array<std::optional<ParamPoly>, num_params>;
    ParamPoly substitute(const Bindings& b) const;
    /// True iff the polynomial vanishes identically after setting p = value.
    bool vanishes_at(Param p, const Rational& value) const;

    std::string to_string() const;

   private:
    void add_term(const ParamExp& e, const Rational& c);
    Terms terms_;
};

/// Exact division in Q[a, l, m]; nullopt when q does not divide p.
std::optional<ParamPoly> exact_divide(const ParamPoly& p, const ParamPoly& q);

/// Element of Q(a, l, m). Canonical form: monic denominator, curated
/// linear factors (symbol + k/2) cancelled.
class ParamScalar {
   public:
    ParamScalar() : num_(), den_(1) {}
    ParamScalar(long c) : num_(c), den_(1) {}
    ParamScalar(const Rational& c) : num_(c), den_(1) {}
    ParamScalar(ParamPoly num) : num_(std::move(num)), den_(1) {}
    ParamScalar(ParamPoly num, ParamPoly den);

    static ParamScalar symbol(Param p) { return ParamScalar(ParamPoly::symbol(p)); }
    static ParamScalar alpha() { return symbol(Param::alpha); }
    static ParamScalar lambda() { return symbol(Param::lambda); }
    static ParamScalar mu() { return symbol(Param::mu); }

    const ParamPoly& num() const noexcept { return num_; }
    const ParamPoly& den() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_polynomial() const noexcept { return den_.is_one(); }
    bool is_rational_constant() const noexcept { return den_.is_one() && num_.is_constant(); }
    /// Requires is_rational_constant().
    Rational rational_value() const;

    ParamScalar& operator+=(const ParamScalar& o);
    ParamScalar& operator-=(const ParamScalar& o);
    ParamScalar& operator*=(const ParamScalar& o);
    ParamScalar& operator/=(const ParamScalar& o);
    ParamScalar operator-() const;
    ParamScalar inverse() const;

    friend ParamScalar operator+(ParamScalar a, const ParamScalar& b) { return a += b; }
    friend ParamScalar operator-(ParamScalar a, const ParamScalar& b) { return a -= b; }
    friend ParamScalar operator*(ParamScalar a, const ParamScalar& b) { return a *= b; }
    friend ParamScalar operator/(ParamScalar a, const ParamScalar& b) { return a /= b; }
    friend bool operator==(const ParamScalar& a, const ParamScalar& b);

    using Bindings = ParamPoly::Bindings;
    /// Throws algebra_error when the denominator vanishes under the binding.
    ParamScalar substitute(const Bindings& b) const;

    std::string to_string() const;

    /// Re-run canonicalization (idempotent).
    ParamScalar normalized() const;

   private:
    void normalize();
    ParamPoly num_;
    ParamPoly den_;
};

enum class ArithKind { add, sub, mul, div };
ParamScalar param_arith(const ParamScalar& a, const ParamScalar& b, ArithKind kind);
ParamScalar substitute_params(const ParamScalar& s, const ParamScalar::Bindings& b);
inline bool is_zero(const ParamScalar& s) { return s.is_zero(); }

ParamScalar::Bindings bind(Param p, const ParamPoly& value);
ParamScalar pow(const ParamScalar& s, int k);

char param_name(Param p);

}  // namespace branchcheck
