#include "branchcheck/weylalg.hpp"

#include <sstream>

namespace branchcheck {

namespace {

Integer binomial(int n, int k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

std::string derivative_name(const VarSet& vars, int i) {
    if (vars.kind() == VarKind::xi_n) return "D[" + std::to_string(i + 1) + "]";
    return "D[" + vars.name(i) + "]";
}

// Iterates all multi-indices g <= bound componentwise.
template <class F>
void for_each_below(const Exponents& bound, F&& f) {
    Exponents g(bound.size(), 0);
    for (;;) {
        f(g);
        std::size_t i = 0;
        for (; i < g.size(); ++i) {
            if (g[i] < bound[i]) {
                ++g[i];
                break;
            }
            g[i] = 0;
        }
        if (i == g.size()) return;
    }
}

}  // namespace

DiffOp DiffOp::scalar(VarSet vars, const ParamScalar& s) {
    DiffOp d(vars);
    d.add_term(Exponents(vars.arity(), 0), RatCoeff(GeoPoly::constant(vars, s)));
    return d;
}

DiffOp DiffOp::mult(const GeoPoly& p) { return mult(RatCoeff(p)); }

DiffOp DiffOp::mult(const RatCoeff& c) {
    DiffOp d(c.vars());
    d.add_term(Exponents(c.vars().arity(), 0), c);
    return d;
}

DiffOp DiffOp::partial(VarSet vars, int i) {
    Exponents e(vars.arity(), 0);
    e.at(i) = 1;
    return derivative(vars, e);
}

DiffOp DiffOp::derivative(VarSet vars, const Exponents& multi) {
    DiffOp d(vars);
    d.add_term(multi, RatCoeff(GeoPoly::constant(vars, ParamScalar(1))));
    return d;
}

DiffOp DiffOp::euler(VarSet vars) {
    DiffOp d(vars);
    for (int i = 0; i < vars.arity(); ++i) {
        Exponents e(vars.arity(), 0);
        e[i] = 1;
        d.add_term(e, RatCoeff(GeoPoly::variable(vars, i)));
    }
    return d;
}

DiffOp DiffOp::laplacian(VarSet vars) {
    DiffOp d(vars);
    for (int i = 0; i < vars.arity(); ++i) {
        Exponents e(vars.arity(), 0);
        e[i] = 2;
        d.add_term(e, RatCoeff(GeoPoly::constant(vars, ParamScalar(1))));
    }
    return d;
}

int DiffOp::order() const noexcept {
    int r = -1;
    for (const auto& [e, c] : terms_) r = std::max(r, total_degree(e));
    return r;
}

void DiffOp::add_term(const Exponents& deriv, const RatCoeff& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(deriv, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void DiffOp::check_same(const DiffOp& o) const {
    if (!(vars_ == o.vars_)) throw algebra_error("operator variable set mismatch: " + vars_.describe() + " vs " + o.vars_.describe());
}

DiffOp& DiffOp::operator+=(const DiffOp& o) {
    check_same(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

DiffOp& DiffOp::operator-=(const DiffOp& o) {
    check_same(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

DiffOp& DiffOp::operator*=(const ParamScalar& s) {
    if (s.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
}

DiffOp DiffOp::operator-() const {
    DiffOp r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

DiffOp operator*(const DiffOp& a, const DiffOp& b) {
    a.check_same(b);
    const int k = a.vars_.arity();
    DiffOp r(a.vars_);
    for (const auto& [beta, bc] : b.terms_) {
        // d^g of this coefficient, computed lazily per multi-index.
        std::map<Exponents, RatCoeff> cache;
        cache.emplace(Exponents(k, 0), bc);
        auto deriv_of = [&cache](auto& self, const Exponents& g) -> const RatCoeff& {
            if (auto it = cache.find(g); it != cache.end()) return it->second;
            Exponents prev = g;
            int v = 0;
            while (prev[v] == 0) ++v;
            --prev[v];
            RatCoeff d = self(self, prev).derive(v);
            return cache.emplace(g, std::move(d)).first->second;
        };
        for (const auto& [alpha, ac] : a.terms_) {
            for_each_below(alpha, [&](const Exponents& g) {
                const RatCoeff& dg = deriv_of(deriv_of, g);
                if (dg.is_zero()) return;
                Integer mult = 1;
                Exponents out(k);
                for (int i = 0; i < k; ++i) {
                    mult *= binomial(alpha[i], g[i]);
                    out[i] = alpha[i] - g[i] + beta[i];
                }
                RatCoeff c = ac * dg;
                c *= ParamScalar(Rational(mult));
                r.add_term(out, c);
            });
        }
    }
    return r;
}

DiffOp DiffOp::substitute_params(const ParamScalar::Bindings& b) const {
    DiffOp r(vars_);
    for (const auto& [e, c] : terms_) r.add_term(e, c.substitute_params(b));
    return r;
}

std::string DiffOp::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << '(' << c.to_string() << ')';
        for (int i = 0; i < vars_.arity(); ++i) {
            if (e[i] == 0) continue;
            os << '*' << derivative_name(vars_, i);
            if (e[i] > 1) os << '^' << e[i];
        }
    }
    return os.str();
}

RatCoeff apply(const DiffOp& d, const GeoPoly& p) {
    if (!(d.vars() == p.vars())) throw algebra_error("apply: variable set mismatch");
    std::map<std::vector<int>, GeoPoly> by_den;
    for (const auto& [e, c] : d.terms()) {
        GeoPoly dp = partial_derive(p, e);
        if (dp.is_zero()) continue;
        GeoPoly prod = c.num() * dp;
        auto it = by_den.find(c.den());
        if (it == by_den.end()) {
            by_den.emplace(c.den(), std::move(prod));
        } else {
            it->second += prod;
        }
    }
    RatCoeff r(GeoPoly(p.vars()));
    for (auto& [den, num] : by_den) r += RatCoeff(std::move(num), den);
    return r;
}

GeoPoly apply_poly(const DiffOp& d, const GeoPoly& p) { return apply(d, p).to_poly(); }

DiffOp compose(const DiffOp& a, const DiffOp& b) { return a * b; }

DiffOp commutator(const DiffOp& a, const DiffOp& b) { return a * b - b * a; }

bool op_equals(const DiffOp& a, const DiffOp& b) {
    if (!(a.vars() == b.vars())) throw algebra_error("op_equals: variable set mismatch");
    return (a - b).is_zero();
}

// ------------------------------------------------------------------ OpSymbol

OpSymbol OpSymbol::partial(int i) {
    OpSymbol s(Tag::partial);
    s.index_ = i;
    return s;
}

OpSymbol OpSymbol::mult(const GeoPoly& p) { return mult(RatCoeff(p)); }

OpSymbol OpSymbol::mult(const RatCoeff& c) {
    OpSymbol s(Tag::mult);
    s.coeff_ = c;
    return s;
}

OpSymbol OpSymbol::scalar(const ParamScalar& v) {
    OpSymbol s(Tag::scalar);
    s.scalar_ = v;
    return s;
}

DiffOp OpSymbol::expand(VarSet vars) const {
    switch (tag_) {
        case Tag::laplacian: return DiffOp::laplacian(vars);
        case Tag::euler: return DiffOp::euler(vars);
        case Tag::partial: return DiffOp::partial(vars, index_);
        case Tag::mult: return DiffOp::mult(*coeff_);
        case Tag::scalar: return DiffOp::scalar(vars, scalar_);
    }
    throw algebra_error("unknown operator symbol");
}

namespace {

struct Factor {
    bool is_partial;
    int var;
    RatCoeff coeff;
};

using Word = std::vector<Factor>;

std::vector<Word> alternatives(const OpSymbol& s, VarSet vars) {
    const GeoPoly one = GeoPoly::constant(vars, ParamScalar(1));
    std::vector<Word> alts;
    switch (s.tag()) {
        case OpSymbol::Tag::laplacian:
            for (int i = 0; i < vars.arity(); ++i) alts.push_back({{true, i, RatCoeff(one)}, {true, i, RatCoeff(one)}});
            break;
        case OpSymbol::Tag::euler:
            for (int i = 0; i < vars.arity(); ++i) alts.push_back({{false, 0, RatCoeff(GeoPoly::variable(vars, i))}, {true, i, RatCoeff(one)}});
            break;
        case OpSymbol::Tag::partial: alts.push_back({{true, s.index(), RatCoeff(one)}}); break;
        case OpSymbol::Tag::mult:
            if (!(s.coeff().vars() == vars)) throw algebra_error("normal_order: coefficient variable set mismatch");
            alts.push_back({{false, 0, s.coeff()}});
            break;
        case OpSymbol::Tag::scalar: alts.push_back({{false, 0, RatCoeff(GeoPoly::constant(vars, s.scalar_value()))}}); break;
    }
    return alts;
}

}  // namespace

DiffOp normal_order(const std::vector<OpSymbol>& word, VarSet vars, RewriteStrategy strategy) {
    std::vector<Word> pending{Word{}};
    for (const auto& sym : word) {
        std::vector<Word> next;
        for (const auto& alt : alternatives(sym, vars)) {
            for (const auto& w : pending) {
                Word x = w;
                x.insert(x.end(), alt.begin(), alt.end());
                next.push_back(std::move(x));
            }
        }
        pending = std::move(next);
    }
    DiffOp result(vars);
    while (!pending.empty()) {
        Word w = std::move(pending.back());
        pending.pop_back();
        int pos = -1;
        for (int i = 0; i + 1 < static_cast<int>(w.size()); ++i) {
            if (w[i].is_partial && !w[i + 1].is_partial) {
                pos = i;
                if (strategy == RewriteStrategy::leftmost) break;
            }
        }
        if (pos < 0) {
            RatCoeff c(GeoPoly::constant(vars, ParamScalar(1)));
            Exponents e(vars.arity(), 0);
            for (const auto& f : w) {
                if (f.is_partial) {
                    ++e[f.var];
                } else {
                    c *= f.coeff;
                }
            }
            result.add_term(e, c);
            continue;
        }
        // d_i c -> c d_i + (d_i c)
        Word swapped = w;
        std::swap(swapped[pos], swapped[pos + 1]);
        RatCoeff dc = w[pos + 1].coeff.derive(w[pos].var);
        if (!dc.is_zero()) {
            Word rest = w;
            rest[pos + 1].coeff = dc;
            rest.erase(rest.begin() + pos);
            pending.push_back(std::move(rest));
        }
        pending.push_back(std::move(swapped));
    }
    return result;
}

}  // namespace branchcheck
