#pragma once

#include "branchcheck/polyring.hpp"
#include "branchcheck/weylalg.hpp"

namespace bc_test {

using namespace branchcheck;

inline ParamScalar A() { return ParamScalar::alpha(); }
inline ParamScalar L() { return ParamScalar::lambda(); }
inline ParamScalar M() { return ParamScalar::mu(); }
inline ParamScalar q(long num, long den = 1) { return ParamScalar(make_rational(num, den)); }

inline GeoPoly xi_poly(int n, const char* text) {
    ParseEnv env;
    env.constants["n"] = Rational(n);
    return parse_poly(text, VarSet::xi(n), env);
}
inline GeoPoly t_poly(const char* text) { return parse_poly(text, VarSet::t_line()); }
inline GeoPoly x_poly(const char* text) { return parse_poly(text, VarSet::x_line()); }
inline GeoPoly xe_poly(const char* text) { return parse_poly(text, VarSet::xi_eta()); }

}  // namespace bc_test
