#include "branchcheck/scalars.hpp"

#include <numeric>
#include <sstream>

namespace branchcheck {

namespace {

// Curated linear factors are (symbol - k/2) for |k| <= this bound.
constexpr int linear_factor_bound = 64;

int total(const ParamExp& e) { return e[0] + e[1] + e[2]; }

Rational rational_pow(const Rational& v, int e) {
    Rational r = 1;
    for (int i = 0; i < e; ++i) r *= v;
    return r;
}

// p / (sym - root), assuming exact.
ParamPoly divide_linear(const ParamPoly& p, Param sym, const Rational& root) {
    ParamPoly lin = ParamPoly::symbol(sym) - ParamPoly(root);
    auto q = exact_divide(p, lin);
    if (!q) throw algebra_error("internal: linear factor does not divide");
    return *q;
}

}  // namespace

Rational make_rational(long num, long den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

char param_name(Param p) {
    switch (p) {
        case Param::alpha: return 'a';
        case Param::lambda: return 'l';
        case Param::mu: return 'm';
    }
    return '?';
}

bool ParamOrder::operator()(const ParamExp& a, const ParamExp& b) const noexcept {
    int ta = total(a), tb = total(b);
    if (ta != tb) return ta > tb;
    return a > b;
}

// ---------------------------------------------------------------- ParamPoly

ParamPoly::ParamPoly(long c) {
    if (c != 0) terms_.emplace(ParamExp{0, 0, 0}, Rational(c));
}

ParamPoly::ParamPoly(const Rational& c) {
    if (c != 0) terms_.emplace(ParamExp{0, 0, 0}, c);
}

ParamPoly ParamPoly::symbol(Param p) {
    ParamPoly r;
    ParamExp e{0, 0, 0};
    e[static_cast<int>(p)] = 1;
    r.terms_.emplace(e, Rational(1));
    return r;
}

ParamPoly ParamPoly::monomial(const ParamExp& e, const Rational& c) {
    ParamPoly r;
    if (c != 0) r.terms_.emplace(e, c);
    return r;
}

bool ParamPoly::is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && total(terms_.begin()->first) == 0);
}

bool ParamPoly::is_one() const noexcept {
    return terms_.size() == 1 && total(terms_.begin()->first) == 0 && terms_.begin()->second == 1;
}

Rational ParamPoly::constant_term() const {
    auto it = terms_.find(ParamExp{0, 0, 0});
    return it == terms_.end() ? Rational(0) : it->second;
}

int ParamPoly::total_degree() const noexcept {
    return terms_.empty() ? -1 : total(terms_.begin()->first);
}

int ParamPoly::degree_in(Param p) const noexcept {
    int d = terms_.empty() ? -1 : 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[static_cast<int>(p)]);
    return d;
}

void ParamPoly::add_term(const ParamExp& e, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

ParamPoly& ParamPoly::operator+=(const ParamPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

ParamPoly& ParamPoly::operator-=(const ParamPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

ParamPoly& ParamPoly::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

ParamPoly& ParamPoly::operator*=(const ParamPoly& o) { return *this = *this * o; }

ParamPoly ParamPoly::operator-() const {
    ParamPoly r = *this;
    for (auto& [e, v] : r.terms_) v = -v;
    return r;
}

ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
    ParamPoly r;
    if (a.is_zero() || b.is_zero()) return r;
    if (b.is_constant()) return ParamPoly(a) *= b.constant_term();
    if (a.is_constant()) return ParamPoly(b) *= a.constant_term();
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            ParamExp e{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]};
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

ParamPoly ParamPoly::substitute(const Bindings& b) const {
    bool any = false;
    for (int i = 0; i < num_params; ++i) {
        if (b[i]) any = true;
    }
    if (!any) return *this;
    ParamPoly r;
    for (const auto& [e, c] : terms_) {
        ParamExp kept = e;
        ParamPoly t(c);
        for (int i = 0; i < num_params; ++i) {
            if (!b[i]) continue;
            kept[i] = 0;
            for (int k = 0; k < e[i]; ++k) t *= *b[i];
        }
        r += t * monomial(kept, Rational(1));
    }
    return r;
}

bool ParamPoly::vanishes_at(Param p, const Rational& value) const {
    const int idx = static_cast<int>(p);
    std::map<ParamExp, Rational> grouped;
    for (const auto& [e, c] : terms_) {
        ParamExp rest = e;
        rest[idx] = 0;
        grouped[rest] += c * rational_pow(value, e[idx]);
    }
    for (const auto& [e, c] : grouped) {
        if (c != 0) return false;
    }
    return true;
}

std::string ParamPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        std::string mono;
        for (int i = 0; i < num_params; ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += '*';
            mono += param_name(static_cast<Param>(i));
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        Rational mag = abs(c);
        bool neg = c < 0;
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
        first = false;
    }
    return os.str();
}

std::optional<ParamPoly> exact_divide(const ParamPoly& p, const ParamPoly& q) {
    if (q.is_zero()) throw algebra_error("division by zero polynomial");
    if (q.is_constant()) return ParamPoly(p) *= 1 / q.constant_term();
    ParamPoly rem = p;
    ParamPoly quot;
    const ParamExp& lq = q.leading_exponent();
    const Rational& cq = q.leading_coefficient();
    while (!rem.is_zero()) {
        const ParamExp lr = rem.leading_exponent();
        ParamExp e;
        for (int i = 0; i < num_params; ++i) {
            e[i] = lr[i] - lq[i];
            if (e[i] < 0) return std::nullopt;
        }
        ParamPoly shift = ParamPoly::monomial(e, rem.leading_coefficient() / cq);
        quot += shift;
        rem -= shift * q;
    }
    return quot;
}

// -------------------------------------------------------------- ParamScalar

ParamScalar::ParamScalar(ParamPoly num, ParamPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw algebra_error("zero denominator in parameter scalar");
    normalize();
}

void ParamScalar::normalize() {
    if (num_.is_zero()) {
        den_ = ParamPoly(1);
        return;
    }
    if (den_.is_constant()) {
        if (!den_.is_one()) {
            num_ *= 1 / den_.constant_term();
            den_ = ParamPoly(1);
        }
        return;
    }
    if (num_.total_degree() > 0) {
        for (int s = 0; s < num_params; ++s) {
            const Param sym = static_cast<Param>(s);
            if (den_.degree_in(sym) <= 0 || num_.degree_in(sym) <= 0) continue;
            for (int k = -linear_factor_bound; k <= linear_factor_bound; ++k) {
                const Rational root = make_rational(k, 2);
                while (den_.degree_in(sym) > 0 && num_.degree_in(sym) > 0 && den_.vanishes_at(sym, root) &&
                       num_.vanishes_at(sym, root)) {
                    den_ = divide_linear(den_, sym, root);
                    num_ = divide_linear(num_, sym, root);
                }
            }
        }
    }
    Rational lead = den_.leading_coefficient();
    if (den_.is_constant()) {
        num_ *= 1 / lead;
        den_ = ParamPoly(1);
        return;
    }
    if (lead != 1) {
        Rational inv = 1 / lead;
        num_ *= inv;
        den_ *= inv;
    }
}

ParamScalar ParamScalar::normalized() const {
    ParamScalar r = *this;
    r.normalize();
    return r;
}

Rational ParamScalar::rational_value() const {
    if (!is_rational_constant()) throw algebra_error("parameter scalar is not a rational constant: " + to_string());
    return num_.constant_term();
}

ParamScalar& ParamScalar::operator+=(const ParamScalar& o) {
    if (o.is_zero()) return *this;
    if (den_.is_one() && o.den_.is_one()) {
        num_ += o.num_;
        return *this;
    }
    if (den_ == o.den_) {
        num_ += o.num_;
    } else {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ = den_ * o.den_;
    }
    normalize();
    return *this;
}

ParamScalar& ParamScalar::operator-=(const ParamScalar& o) { return *this += -o; }

ParamScalar& ParamScalar::operator*=(const ParamScalar& o) {
    if (den_.is_one() && o.den_.is_one()) {
        num_ *= o.num_;
        return *this;
    }
    num_ = num_ * o.num_;
    den_ = den_ * o.den_;
    normalize();
    return *this;
}

ParamScalar ParamScalar::inverse() const {
    if (num_.is_zero()) throw algebra_error("division by zero parameter scalar");
    return ParamScalar(den_, num_);
}

ParamScalar& ParamScalar::operator/=(const ParamScalar& o) {
    if (o.is_zero()) throw algebra_error("division by zero parameter scalar");
    if (o.is_rational_constant()) {
        num_ *= 1 / o.num_.constant_term();
        return *this;
    }
    return *this *= o.inverse();
}

ParamScalar ParamScalar::operator-() const {
    ParamScalar r = *this;
    r.num_ = -r.num_;
    return r;
}

bool operator==(const ParamScalar& a, const ParamScalar& b) {
    if (a.den_.is_one() && b.den_.is_one()) return a.num_ == b.num_;
    return a.num_ * b.den_ == b.num_ * a.den_;
}

ParamScalar ParamScalar::substitute(const Bindings& b) const {
    ParamPoly n = num_.substitute(b);
    ParamPoly d = den_.substitute(b);
    if (d.is_zero()) {
        std::string what;
        for (int i = 0; i < num_params; ++i) {
            if (!b[i]) continue;
            if (!what.empty()) what += ", ";
            what += std::string(1, param_name(static_cast<Param>(i))) + " = " + b[i]->to_string();
        }
        throw algebra_error("denominator " + den_.to_string() + " vanishes under binding " + what);
    }
    return ParamScalar(std::move(n), std::move(d));
}

std::string ParamScalar::to_string() const {
    if (den_.is_one()) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

ParamScalar param_arith(const ParamScalar& a, const ParamScalar& b, ArithKind kind) {
    switch (kind) {
        case ArithKind::add: return a + b;
        case ArithKind::sub: return a - b;
        case ArithKind::mul: return a * b;
        case ArithKind::div: return a / b;
    }
    throw algebra_error("unknown arithmetic kind");
}

ParamScalar substitute_params(const ParamScalar& s, const ParamScalar::Bindings& b) { return s.substitute(b); }

ParamScalar::Bindings bind(Param p, const ParamPoly& value) {
    ParamScalar::Bindings b;
    b[static_cast<int>(p)] = value;
    return b;
}

ParamScalar pow(const ParamScalar& s, int k) {
    ParamScalar r(1);
    for (int i = 0; i < k; ++i) r *= s;
    return r;
}

}  // namespace branchcheck
