#include "branchcheck/polyring.hpp"

#include <cctype>
#include <numeric>
#include <sstream>

namespace branchcheck {

// -------------------------------------------------------------------- VarSet

VarSet VarSet::xi(int n) {
    if (n < 1) throw algebra_error("xi variable set needs n >= 1");
    return VarSet(VarKind::xi_n, n);
}

std::string VarSet::name(int i) const {
    switch (kind_) {
        case VarKind::xi_n: return "x" + std::to_string(i + 1);
        case VarKind::xi_eta: return i == 0 ? "xi" : "eta";
        case VarKind::t_line: return "t";
        case VarKind::x_line: return "x";
        case VarKind::xy_plane: return i == 0 ? "x" : "y";
    }
    return "?";
}

std::optional<int> VarSet::index_of(std::string_view name) const {
    for (int i = 0; i < arity_; ++i) {
        if (this->name(i) == name) return i;
    }
    return std::nullopt;
}

std::string VarSet::describe() const {
    switch (kind_) {
        case VarKind::xi_n: return "xi_" + std::to_string(arity_);
        case VarKind::xi_eta: return "xi_eta";
        case VarKind::t_line: return "t";
        case VarKind::x_line: return "x";
        case VarKind::xy_plane: return "xy";
    }
    return "?";
}

int total_degree(const Exponents& e) noexcept { return std::accumulate(e.begin(), e.end(), 0); }

bool GradedOrder::operator()(const Exponents& a, const Exponents& b) const noexcept {
    int ta = total_degree(a), tb = total_degree(b);
    if (ta != tb) return ta > tb;
    return a > b;
}

// ------------------------------------------------------------------- GeoPoly

GeoPoly GeoPoly::constant(VarSet vars, const ParamScalar& c) {
    GeoPoly p(vars);
    p.add_term(Exponents(vars.arity(), 0), c);
    return p;
}

GeoPoly GeoPoly::variable(VarSet vars, int i) {
    if (i < 0 || i >= vars.arity()) throw algebra_error("variable index out of range");
    Exponents e(vars.arity(), 0);
    e[i] = 1;
    return monomial(vars, std::move(e));
}

GeoPoly GeoPoly::monomial(VarSet vars, Exponents e, const ParamScalar& c) {
    if (static_cast<int>(e.size()) != vars.arity()) throw algebra_error("exponent arity mismatch");
    GeoPoly p(vars);
    p.add_term(e, c);
    return p;
}

void GeoPoly::add_term(const Exponents& e, const ParamScalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

bool GeoPoly::is_constant() const noexcept { return terms_.empty() || (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0); }

int GeoPoly::degree() const noexcept { return terms_.empty() ? -1 : total_degree(terms_.begin()->first); }

int GeoPoly::degree_in(int var) const noexcept {
    int d = terms_.empty() ? -1 : 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
    return d;
}

bool GeoPoly::is_homogeneous() const noexcept {
    if (terms_.empty()) return true;
    const int d = degree();
    for (const auto& [e, c] : terms_) {
        if (total_degree(e) != d) return false;
    }
    return true;
}

ParamScalar GeoPoly::coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? ParamScalar(0) : it->second;
}

void GeoPoly::check_same(const GeoPoly& o) const {
    if (!(vars_ == o.vars_)) throw algebra_error("variable set mismatch: " + vars_.describe() + " vs " + o.vars_.describe());
}

GeoPoly& GeoPoly::operator+=(const GeoPoly& o) {
    check_same(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

GeoPoly& GeoPoly::operator-=(const GeoPoly& o) {
    check_same(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

GeoPoly& GeoPoly::operator*=(const ParamScalar& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

GeoPoly& GeoPoly::operator*=(const GeoPoly& o) { return *this = *this * o; }

GeoPoly GeoPoly::operator-() const {
    GeoPoly r = *this;
    for (auto& [e, v] : r.terms_) v = -v;
    return r;
}

GeoPoly operator*(const GeoPoly& a, const GeoPoly& b) {
    a.check_same(b);
    GeoPoly r(a.vars_);
    const std::size_t k = a.vars_.arity();
    Exponents e(k);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < k; ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

bool operator==(const GeoPoly& a, const GeoPoly& b) {
    if (!(a.vars_ == b.vars_) || a.terms_.size() != b.terms_.size()) return false;
    auto ia = a.terms_.begin();
    for (auto ib = b.terms_.begin(); ib != b.terms_.end(); ++ia, ++ib) {
        if (ia->first != ib->first || !(ia->second == ib->second)) return false;
    }
    return true;
}

GeoPoly GeoPoly::substitute_params(const ParamScalar::Bindings& b) const {
    GeoPoly r(vars_);
    for (const auto& [e, c] : terms_) r.add_term(e, c.substitute(b));
    return r;
}

std::string GeoPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        std::string mono;
        for (int i = 0; i < vars_.arity(); ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += '*';
            mono += vars_.name(i);
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        if (c.is_rational_constant()) {
            Rational v = c.rational_value();
            Rational mag = abs(v);
            bool neg = v < 0;
            if (first) {
                if (neg) os << '-';
            } else {
                os << (neg ? " - " : " + ");
            }
            if (mono.empty()) {
                os << mag.get_str();
            } else if (mag == 1) {
                os << mono;
            } else {
                os << mag.get_str() << '*' << mono;
            }
        } else {
            if (!first) os << " + ";
            os << '(' << c.to_string() << ')';
            if (!mono.empty()) os << '*' << mono;
        }
        first = false;
    }
    return os.str();
}

GeoPoly pow(const GeoPoly& p, int k) {
    if (k < 0) throw algebra_error("negative power of polynomial");
    GeoPoly r = GeoPoly::constant(p.vars(), ParamScalar(1));
    GeoPoly base = p;
    while (k > 0) {
        if (k & 1) r *= base;
        k >>= 1;
        if (k > 0) base *= base;
    }
    return r;
}

GeoPoly poly_arith(const GeoPoly& p, const GeoPoly& q, RingOp kind) {
    switch (kind) {
        case RingOp::add: return p + q;
        case RingOp::sub: return p - q;
        case RingOp::mul: return p * q;
    }
    throw algebra_error("unknown ring operation");
}

GeoPoly partial_derive(const GeoPoly& p, int var) {
    if (var < 0 || var >= p.vars().arity()) throw algebra_error("derivative variable out of range");
    GeoPoly r(p.vars());
    for (const auto& [e, c] : p.terms()) {
        if (e[var] == 0) continue;
        Exponents d = e;
        d[var] -= 1;
        r.add_term(d, c * ParamScalar(static_cast<long>(e[var])));
    }
    return r;
}

GeoPoly partial_derive(const GeoPoly& p, const Exponents& multi) {
    const int k = p.vars().arity();
    GeoPoly r(p.vars());
    for (const auto& [e, c] : p.terms()) {
        Exponents d = e;
        Integer factor = 1;
        bool dead = false;
        for (int i = 0; i < k && !dead; ++i) {
            if (e[i] < multi[i]) {
                dead = true;
                break;
            }
            for (int j = 0; j < multi[i]; ++j) factor *= e[i] - j;
            d[i] -= multi[i];
        }
        if (dead) continue;
        r.add_term(d, c * ParamScalar(Rational(factor)));
    }
    return r;
}

std::optional<GeoPoly> exact_divide(const GeoPoly& p, const GeoPoly& q) {
    if (!(p.vars() == q.vars())) throw algebra_error("variable set mismatch in division");
    if (q.is_zero()) throw algebra_error("division by the zero polynomial");
    const int k = p.vars().arity();
    if (q.is_constant()) return p * q.leading_coefficient().inverse();
    GeoPoly rem = p;
    GeoPoly quot(p.vars());
    const Exponents lq = q.leading_exponent();
    const ParamScalar cq = q.leading_coefficient();
    const bool unit_lead = cq == ParamScalar(1);
    Exponents shift(k);
    while (!rem.is_zero()) {
        const Exponents& lr = rem.leading_exponent();
        for (int i = 0; i < k; ++i) {
            shift[i] = lr[i] - lq[i];
            if (shift[i] < 0) return std::nullopt;
        }
        ParamScalar c = unit_lead ? rem.leading_coefficient() : rem.leading_coefficient() / cq;
        quot.add_term(shift, c);
        Exponents e(k);
        for (const auto& [eq, cqq] : q.terms()) {
            for (int i = 0; i < k; ++i) e[i] = eq[i] + shift[i];
            rem.add_term(e, -(c * cqq));
        }
    }
    return quot;
}

GeoPoly homogeneous_component(const GeoPoly& p, int d) {
    GeoPoly r(p.vars());
    for (const auto& [e, c] : p.terms()) {
        if (total_degree(e) == d) r.add_term(e, c);
    }
    return r;
}

GeoPoly substitute_linear(const GeoPoly& p, const ParamScalar& scale, const ParamScalar& shift) {
    if (p.vars().arity() != 1) throw algebra_error("substitute_linear expects a univariate polynomial");
    const VarSet t = VarSet::t_line();
    GeoPoly image = GeoPoly::variable(t, 0) * scale + GeoPoly::constant(t, shift);
    GeoPoly r(t);
    GeoPoly power = GeoPoly::constant(t, ParamScalar(1));
    int reached = 0;
    // Terms iterate from the highest degree down; walk them in ascending order.
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const int m = it->first[0];
        while (reached < m) {
            power *= image;
            ++reached;
        }
        r += power * it->second;
    }
    return r;
}

GeoPoly homogenize(const GeoPoly& q, int l) {
    if (q.vars().kind() != VarKind::t_line) throw algebra_error("homogenize expects a polynomial in t");
    if (q.degree() > l) throw algebra_error("homogenize: degree " + std::to_string(q.degree()) + " exceeds " + std::to_string(l));
    GeoPoly r(VarSet::xi_eta());
    for (const auto& [e, c] : q.terms()) r.add_term({e[0], l - e[0]}, c);
    return r;
}

GeoPoly dehomogenize(const GeoPoly& p, int l) {
    if (p.vars().kind() != VarKind::xi_eta) throw algebra_error("dehomogenize expects a polynomial in xi, eta");
    GeoPoly r(VarSet::t_line());
    for (const auto& [e, c] : p.terms()) {
        if (e[0] + e[1] != l) throw algebra_error("dehomogenize: term of degree " + std::to_string(e[0] + e[1]) + " at level " + std::to_string(l));
        r.add_term({e[0]}, c);
    }
    return r;
}

GeoPoly gegen_tilde_convert(const GeoPoly& c, int l) {
    if (c.vars().arity() != 1) throw algebra_error("gegen_tilde_convert expects a univariate polynomial");
    GeoPoly r(VarSet::t_line());
    for (const auto& [e, v] : c.terms()) {
        const int m = e[0];
        if (m > l || (l - m) % 2 != 0) throw algebra_error("gegen_tilde_convert: exponent " + std::to_string(m) + " violates parity of " + std::to_string(l));
        const int k = (l - m) / 2;
        r.add_term({k}, (k % 2 == 0) ? v : -v);
    }
    return r;
}

std::optional<ParamScalar> proportionality(const GeoPoly& p, const GeoPoly& q) {
    if (q.is_zero()) throw algebra_error("proportionality against the zero polynomial");
    if (p.is_zero()) return ParamScalar(0);
    if (p.size() != q.size()) return std::nullopt;
    auto pivot = q.terms().begin();
    for (auto it = q.terms().begin(); it != q.terms().end(); ++it) {
        if (it->second.is_rational_constant()) {
            pivot = it;
            break;
        }
    }
    ParamScalar c = p.coefficient(pivot->first) / pivot->second;
    if (c.is_zero()) return std::nullopt;
    if (!(p == q * c)) return std::nullopt;
    return c;
}

GeoPoly sum_of_squares(VarSet vars, int count) {
    GeoPoly r(vars);
    for (int i = 0; i < count; ++i) {
        Exponents e(vars.arity(), 0);
        e[i] = 2;
        r.add_term(e, ParamScalar(1));
    }
    return r;
}

// ------------------------------------------------------------------ RatCoeff

std::vector<GeoPoly> curated_factors(const VarSet& vars) {
    switch (vars.kind()) {
        case VarKind::xi_n: {
            const int n = vars.arity();
            return {GeoPoly::variable(vars, n - 1), sum_of_squares(vars, n - 1), sum_of_squares(vars, n)};
        }
        case VarKind::xi_eta: return {GeoPoly::variable(vars, 1)};
        case VarKind::t_line: return {GeoPoly::variable(vars, 0)};
        default: return {};
    }
}

std::vector<std::string> curated_factor_names(const VarSet& vars) {
    switch (vars.kind()) {
        case VarKind::xi_n: return {"xn", "Sp", "S"};
        case VarKind::xi_eta: return {"eta"};
        case VarKind::t_line: return {"t"};
        default: return {};
    }
}

namespace {

GeoPoly factor_power(const std::vector<GeoPoly>& f, const std::vector<int>& e, const VarSet& vars) {
    GeoPoly r = GeoPoly::constant(vars, ParamScalar(1));
    for (std::size_t k = 0; k < f.size(); ++k) {
        for (int j = 0; j < e[k]; ++j) r *= f[k];
    }
    return r;
}

}  // namespace

RatCoeff::RatCoeff(GeoPoly num) : num_(std::move(num)), den_(curated_factors(num_.vars()).size(), 0) {}

RatCoeff::RatCoeff(GeoPoly num, std::vector<int> den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.size() != curated_factors(num_.vars()).size()) throw algebra_error("denominator arity mismatch");
    for (int e : den_) {
        if (e < 0) throw algebra_error("negative denominator exponent");
    }
    reduce();
}

bool RatCoeff::is_polynomial() const noexcept {
    for (int e : den_) {
        if (e != 0) return false;
    }
    return true;
}

const GeoPoly& RatCoeff::to_poly() const {
    if (!is_polynomial()) throw algebra_error("rational coefficient does not reduce to a polynomial: " + to_string());
    return num_;
}

void RatCoeff::reduce() {
    if (num_.is_zero()) {
        std::fill(den_.begin(), den_.end(), 0);
        return;
    }
    if (is_polynomial()) return;
    const auto f = curated_factors(num_.vars());
    for (std::size_t k = 0; k < f.size(); ++k) {
        while (den_[k] > 0) {
            auto q = exact_divide(num_, f[k]);
            if (!q) break;
            num_ = std::move(*q);
            --den_[k];
        }
    }
}

RatCoeff& RatCoeff::operator+=(const RatCoeff& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    if (den_ == o.den_) {
        num_ += o.num_;
        reduce();
        return *this;
    }
    const auto f = curated_factors(vars());
    std::vector<int> common(den_.size()), mine(den_.size()), theirs(den_.size());
    for (std::size_t k = 0; k < den_.size(); ++k) {
        common[k] = std::max(den_[k], o.den_[k]);
        mine[k] = common[k] - den_[k];
        theirs[k] = common[k] - o.den_[k];
    }
    num_ = num_ * factor_power(f, mine, vars()) + o.num_ * factor_power(f, theirs, vars());
    den_ = std::move(common);
    reduce();
    return *this;
}

RatCoeff& RatCoeff::operator-=(const RatCoeff& o) { return *this += -o; }

RatCoeff& RatCoeff::operator*=(const RatCoeff& o) {
    num_ *= o.num_;
    for (std::size_t k = 0; k < den_.size(); ++k) den_[k] += o.den_[k];
    reduce();
    return *this;
}

RatCoeff& RatCoeff::operator*=(const ParamScalar& c) {
    num_ *= c;
    if (num_.is_zero()) std::fill(den_.begin(), den_.end(), 0);
    return *this;
}

RatCoeff RatCoeff::operator-() const {
    RatCoeff r = *this;
    r.num_ = -r.num_;
    return r;
}

RatCoeff RatCoeff::derive(int var) const {
    if (is_polynomial()) return RatCoeff(partial_derive(num_, var));
    // d(N/prod f^e) = (N' prod_{e>0} f - N sum_k e_k f_k' prod_{j!=k, e_j>0} f_j) / (D prod_{e>0} f)
    const auto f = curated_factors(vars());
    GeoPoly one = GeoPoly::constant(vars(), ParamScalar(1));
    GeoPoly all = one;
    for (std::size_t k = 0; k < f.size(); ++k) {
        if (den_[k] > 0) all *= f[k];
    }
    GeoPoly numer = partial_derive(num_, var) * all;
    for (std::size_t k = 0; k < f.size(); ++k) {
        if (den_[k] == 0) continue;
        GeoPoly others = one;
        for (std::size_t j = 0; j < f.size(); ++j) {
            if (j != k && den_[j] > 0) others *= f[j];
        }
        numer -= num_ * partial_derive(f[k], var) * others * ParamScalar(static_cast<long>(den_[k]));
    }
    std::vector<int> den = den_;
    for (auto& e : den) {
        if (e > 0) ++e;
    }
    return RatCoeff(std::move(numer), std::move(den));
}

RatCoeff RatCoeff::substitute_params(const ParamScalar::Bindings& b) const {
    return RatCoeff(num_.substitute_params(b), den_);
}

std::string RatCoeff::to_string() const {
    if (is_polynomial()) return num_.to_string();
    const auto names = curated_factor_names(vars());
    std::string den;
    for (std::size_t k = 0; k < den_.size(); ++k) {
        if (den_[k] == 0) continue;
        if (!den.empty()) den += '*';
        den += names[k];
        if (den_[k] > 1) den += "^" + std::to_string(den_[k]);
    }
    return "(" + num_.to_string() + ")/(" + den + ")";
}

// -------------------------------------------------------------------- parser

namespace {

class Parser {
   public:
    Parser(std::string_view text, VarSet vars, const ParseEnv& env) : s_(text), vars_(vars), env_(env) {}

    GeoPoly parse() {
        GeoPoly r = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected trailing input");
        return r;
    }

   private:
    [[noreturn]] void fail(const std::string& why) const {
        throw algebra_error("parse error at offset " + std::to_string(pos_) + ": " + why + " in '" + std::string(s_) + "'");
    }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    GeoPoly expr() {
        GeoPoly r = term();
        for (;;) {
            if (accept('+')) {
                r += term();
            } else if (accept('-')) {
                r -= term();
            } else {
                return r;
            }
        }
    }

    GeoPoly term() {
        GeoPoly r = unary();
        for (;;) {
            if (accept('*')) {
                r *= unary();
            } else if (accept('/')) {
                GeoPoly d = unary();
                if (!d.is_constant() || d.is_zero()) fail("division by a non-constant or zero expression");
                r *= d.leading_coefficient().inverse();
            } else {
                return r;
            }
        }
    }

    GeoPoly unary() {
        if (accept('-')) return -unary();
        if (accept('+')) return unary();
        return power();
    }

    GeoPoly power() {
        GeoPoly base = primary();
        if (accept('^')) {
            skip();
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (start == pos_) fail("expected integer exponent");
            base = pow(base, std::stoi(std::string(s_.substr(start, pos_ - start))));
        }
        return base;
    }

    GeoPoly primary() {
        skip();
        if (accept('(')) {
            GeoPoly r = expr();
            if (!accept(')')) fail("expected ')'");
            return r;
        }
        if (pos_ >= s_.size()) fail("unexpected end of input");
        const char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            Integer v(std::string(s_.substr(start, pos_ - start)));
            return GeoPoly::constant(vars_, ParamScalar(Rational(v)));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
            return identifier(std::string(s_.substr(start, pos_ - start)));
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    GeoPoly identifier(const std::string& id) {
        if (auto i = vars_.index_of(id)) return GeoPoly::variable(vars_, *i);
        if (id == "a") return GeoPoly::constant(vars_, ParamScalar::alpha());
        if (id == "l") return GeoPoly::constant(vars_, ParamScalar::lambda());
        if (id == "m") return GeoPoly::constant(vars_, ParamScalar::mu());
        if (auto it = env_.constants.find(id); it != env_.constants.end()) return GeoPoly::constant(vars_, ParamScalar(it->second));
        if (vars_.kind() == VarKind::xi_n) {
            const int n = vars_.arity();
            if (id == "xn") return GeoPoly::variable(vars_, n - 1);
            if (id == "Sp") return sum_of_squares(vars_, n - 1);
            if (id == "S") return sum_of_squares(vars_, n);
        }
        fail("unknown identifier '" + id + "'");
    }

    std::string_view s_;
    std::size_t pos_ = 0;
    VarSet vars_;
    const ParseEnv& env_;
};

}  // namespace

GeoPoly parse_poly(std::string_view text, VarSet vars, const ParseEnv& env) { return Parser(text, vars, env).parse(); }

ParamScalar parse_scalar(std::string_view text, const ParseEnv& env) {
    GeoPoly p = parse_poly(text, VarSet::t_line(), env);
    if (!p.is_constant()) throw algebra_error("expected a parameter expression: '" + std::string(text) + "'");
    return p.is_zero() ? ParamScalar(0) : p.leading_coefficient();
}

}  // namespace branchcheck
