#pragma once

#include <map>
#include <string>
#include <vector>

#include "branchcheck/polyring.hpp"

namespace branchcheck {

/// Normal-ordered differential operator: sum of coefficient * d^beta with all
/// coefficients to the left. One coefficient per derivative monomial.
class DiffOp {
   public:
    using Terms = std::map<Exponents, RatCoeff, GradedOrder>;

    explicit DiffOp(VarSet vars) : vars_(vars) {}

    static DiffOp identity(VarSet vars) { return scalar(vars, ParamScalar(1)); }
    static DiffOp scalar(VarSet vars, const ParamScalar& s);
    static DiffOp mult(const GeoPoly& p);
    static DiffOp mult(const RatCoeff& c);
    static DiffOp partial(VarSet vars, int i);
    static DiffOp derivative(VarSet vars, const Exponents& multi);
    /// sum_i x_i d_i
    static DiffOp euler(VarSet vars);
    /// sum_i d_i^2
    static DiffOp laplacian(VarSet vars);

    const VarSet& vars() const noexcept { return vars_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    /// Highest derivative order; -1 for the zero operator.
    int order() const noexcept;

    void add_term(const Exponents& deriv, const RatCoeff& c);

    DiffOp& operator+=(const DiffOp& o);
    DiffOp& operator-=(const DiffOp& o);
    DiffOp& operator*=(const ParamScalar& s);
    DiffOp operator-() const;
    friend DiffOp operator+(DiffOp a, const DiffOp& b) { return a += b; }
    friend DiffOp operator-(DiffOp a, const DiffOp& b) { return a -= b; }
    friend DiffOp operator*(DiffOp a, const ParamScalar& s) { return a *= s; }
    friend DiffOp operator*(const ParamScalar& s, DiffOp a) { return a *= s; }
    /// Composition a o b.
    friend DiffOp operator*(const DiffOp& a, const DiffOp& b);

    DiffOp substitute_params(const ParamScalar::Bindings& b) const;

    /// Renders derivatives as D[i] (1-based on xi_n), D[xi], D[t], ...
    std::string to_string() const;

   private:
    void check_same(const DiffOp& o) const;
    VarSet vars_;
    Terms terms_;
};

/// Exact action on a polynomial. The result keeps curated denominators that
/// fail to divide out; callers check is_polynomial().
RatCoeff apply(const DiffOp& d, const GeoPoly& p);
GeoPoly apply_poly(const DiffOp& d, const GeoPoly& p);

DiffOp compose(const DiffOp& a, const DiffOp& b);
DiffOp commutator(const DiffOp& a, const DiffOp& b);
bool op_equals(const DiffOp& a, const DiffOp& b);

/// Building blocks of operator words. Euler and Laplacian expand to their
/// defining sums over the active variable set.
class OpSymbol {
   public:
    enum class Tag { laplacian, euler, partial, mult, scalar };

    static OpSymbol laplacian() { return OpSymbol(Tag::laplacian); }
    static OpSymbol euler() { return OpSymbol(Tag::euler); }
    static OpSymbol partial(int i);
    static OpSymbol mult(const GeoPoly& p);
    static OpSymbol mult(const RatCoeff& c);
    static OpSymbol scalar(const ParamScalar& s);

    Tag tag() const noexcept { return tag_; }
    int index() const noexcept { return index_; }
    /// Coefficient of a mult symbol; the scalar for a scalar symbol.
    const RatCoeff& coeff() const { return *coeff_; }
    const ParamScalar& scalar_value() const noexcept { return scalar_; }
    DiffOp expand(VarSet vars) const;

   private:
    explicit OpSymbol(Tag t) : tag_(t) {}
    Tag tag_;
    int index_ = 0;
    std::optional<RatCoeff> coeff_;
    ParamScalar scalar_;
};

/// Which out-of-order pair d_i * c the rewriting d_i c -> c d_i + (d_i c)
/// resolves first.
enum class RewriteStrategy { leftmost = 0, rightmost = 1 };

/// Normal form of a product of symbols obtained purely by the rewriting rule.
DiffOp normal_order(const std::vector<OpSymbol>& word, VarSet vars, RewriteStrategy strategy);

}  // namespace branchcheck
