#include "branchcheck/properties.hpp"

namespace branchcheck {

namespace {

const VarSet V = VarSet::xi(3);

template <class F>
PropertyCounts run(int cases, F&& holds) {
    PropertyCounts c;
    for (int i = 0; i < cases; ++i) {
        ++c.cases;
        if (!holds()) {
            ++c.failures;
            if (c.first_failure < 0) c.first_failure = i;
        }
    }
    return c;
}

}  // namespace

long RandomAlgebra::small(long lo, long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<long>(rng_() % span);
}

Rational RandomAlgebra::rational() {
    Rational r(small(-6, 6), small(1, 4));
    r.canonicalize();
    return r;
}

ParamScalar RandomAlgebra::poly_scalar() {
    static const Param params[] = {Param::alpha, Param::lambda, Param::mu};
    ParamScalar s(rational());
    const int terms = static_cast<int>(small(0, 2));
    for (int i = 0; i < terms; ++i) {
        ParamScalar t(rational());
        const int deg = static_cast<int>(small(1, 2));
        for (int d = 0; d < deg; ++d) t *= ParamScalar::symbol(params[small(0, 2)]);
        s += t;
    }
    return s;
}

ParamScalar RandomAlgebra::scalar() {
    static const Param params[] = {Param::alpha, Param::lambda, Param::mu};
    ParamScalar s = poly_scalar();
    if (small(0, 3) == 0) {
        ParamScalar den = ParamScalar::symbol(params[small(0, 2)]) + ParamScalar(small(-3, 3));
        s /= den;
    }
    return s;
}

ParamScalar RandomAlgebra::nonzero_scalar() {
    for (;;) {
        ParamScalar s = scalar();
        if (!s.is_zero()) return s;
    }
}

GeoPoly RandomAlgebra::poly(const VarSet& vars, int max_degree, int max_terms) {
    GeoPoly p(vars);
    const int terms = static_cast<int>(small(1, max_terms));
    for (int i = 0; i < terms; ++i) {
        Exponents e(vars.arity(), 0);
        int budget = static_cast<int>(small(0, max_degree));
        for (int k = 0; k < budget; ++k) ++e[small(0, vars.arity() - 1)];
        p.add_term(e, poly_scalar());
    }
    return p;
}

DiffOp RandomAlgebra::op(const VarSet& vars, int max_order, int max_terms) {
    DiffOp d(vars);
    const int terms = static_cast<int>(small(1, max_terms));
    for (int i = 0; i < terms; ++i) {
        Exponents e(vars.arity(), 0);
        int order = static_cast<int>(small(0, max_order));
        for (int k = 0; k < order; ++k) ++e[small(0, vars.arity() - 1)];
        d += DiffOp::mult(poly(vars, 2, 2)) * DiffOp::derivative(vars, e);
    }
    return d;
}

std::vector<OpSymbol> RandomAlgebra::word(const VarSet& vars, int max_len) {
    std::vector<OpSymbol> w;
    const int len = static_cast<int>(small(1, max_len));
    for (int i = 0; i < len; ++i) {
        switch (small(0, 5)) {
            case 0: w.push_back(OpSymbol::laplacian()); break;
            case 1: w.push_back(OpSymbol::euler()); break;
            case 2:
            case 3: w.push_back(OpSymbol::partial(static_cast<int>(small(0, vars.arity() - 1)))); break;
            case 4: w.push_back(OpSymbol::mult(poly(vars, 2, 2))); break;
            default: w.push_back(OpSymbol::scalar(scalar())); break;
        }
    }
    return w;
}

PropertyCounts check_associativity(RandomAlgebra& g, int cases) {
    return run(cases, [&] {
        DiffOp a = g.op(V), b = g.op(V), c = g.op(V);
        return op_equals((a * b) * c, a * (b * c));
    });
}

PropertyCounts check_apply_compose(RandomAlgebra& g, int cases) {
    return run(cases, [&] {
        DiffOp a = g.op(V), b = g.op(V);
        GeoPoly p = g.poly(V, 4, 4);
        return apply_poly(a * b, p) == apply_poly(a, apply_poly(b, p));
    });
}

PropertyCounts check_jacobi_identity(RandomAlgebra& g, int cases) {
    return run(cases, [&] {
        DiffOp a = g.op(V), b = g.op(V), c = g.op(V);
        DiffOp s = commutator(a, commutator(b, c)) + commutator(b, commutator(c, a)) + commutator(c, commutator(a, b));
        return s.is_zero();
    });
}

PropertyCounts check_confluence(RandomAlgebra& g, int cases) {
    return run(cases, [&] {
        auto w = g.word(V);
        DiffOp left = normal_order(w, V, RewriteStrategy::leftmost);
        DiffOp right = normal_order(w, V, RewriteStrategy::rightmost);
        DiffOp product = DiffOp::identity(V);
        for (const auto& s : w) product = product * s.expand(V);
        return op_equals(left, right) && op_equals(left, product);
    });
}

PropertyCounts check_field_axioms(RandomAlgebra& g, int cases) {
    return run(cases, [&] {
        ParamScalar a = g.scalar(), b = g.scalar(), c = g.scalar(), d = g.nonzero_scalar();
        const ParamScalar one(1), zero(0);
        return (a + b) + c == a + (b + c) && (a * b) * c == a * (b * c) && a + b == b + a && a * b == b * a &&
               a * (b + c) == a * b + a * c && a + zero == a && a * one == a && a - a == zero && d * d.inverse() == one &&
               (a / d) * d == a;
    });
}

Records property_suite(std::uint64_t seed, int cases) {
    RandomAlgebra g(seed);
    struct Item {
        const char* name;
        const char* anchor;
        PropertyCounts (*fn)(RandomAlgebra&, int);
    };
    const Item items[] = {
        {"associativity", "algebra/weyl-algebra", check_associativity},
        {"apply-compose", "algebra/weyl-algebra", check_apply_compose},
        {"jacobi-identity", "algebra/weyl-algebra", check_jacobi_identity},
        {"normal-order-confluence", "algebra/weyl-algebra", check_confluence},
        {"field-axioms", "algebra/parameter-field", check_field_axioms},
    };
    Records out;
    for (const auto& it : items) {
        PropertyCounts c = it.fn(g, cases);
        std::string w;
        if (c.failures > 0) w = std::to_string(c.failures) + " of " + std::to_string(c.cases) + " cases failed, first at case " + std::to_string(c.first_failure);
        out.push_back(make_record(std::string("prop.") + it.name, it.anchor, c.failures == 0, w));
    }
    return out;
}

}  // namespace branchcheck
