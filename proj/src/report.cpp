#include "branchcheck/report.hpp"

#include <algorithm>
#include <stdexcept>

namespace branchcheck {

std::string_view status_name(Status s) {
    switch (s) {
        case Status::pass: return "pass";
        case Status::fail: return "fail";
        case Status::discrepancy_reported: return "discrepancy-reported";
    }
    return "fail";
}

VerificationRecord make_record(std::string check_id, std::string_view anchor, bool ok, std::string witness) {
    if (!anchor_known(anchor)) throw std::logic_error("unregistered anchor: " + std::string(anchor));
    return {std::move(check_id), std::string(anchor), ok ? Status::pass : Status::fail, std::move(witness)};
}

bool any_failed(const Records& r) {
    return std::any_of(r.begin(), r.end(), [](const VerificationRecord& v) { return v.status == Status::fail; });
}

void append(Records& into, Records from) {
    into.insert(into.end(), std::make_move_iterator(from.begin()), std::make_move_iterator(from.end()));
}

std::string pad2(int k) {
    std::string s = std::to_string(k < 0 ? -k : k);
    if (s.size() < 2) s.insert(0, "0");
    return k < 0 ? "m" + s : s;
}

const std::vector<AnchorEntry>& anchor_registry() {
    static const std::vector<AnchorEntry> reg = {
        {"so-pair/singular-vectors", "normalized singular vectors F_l and their Gegenbauer form"},
        {"so-pair/nprime-annihilation", "singular vectors solve the primed nilradical system"},
        {"so-pair/lowering-P", "root-space operator P and its t-variable form"},
        {"so-pair/t-model", "Gegenbauer ladder transported to the t variable"},
        {"so-pair/raising-Q", "operator Q and its four displayed actions"},
        {"so-pair/PQ-commutator", "long commutator of P and Q"},
        {"so-pair/eP-commutator", "commutator of the Euler form of e with P"},
        {"so-pair/ladder-relations", "sl(2) relations for e, f, h on the singular vectors"},
        {"so-pair/ladder-constants", "ladder constants of the normalized vectors"},
        {"so-pair/ladder-weight", "weight produced by the commutator of the ladder constants"},
        {"so-pair/casimir", "Casimir composition, closed form and eigenvalue"},
        {"so-pair/branching-character", "graded-dimension shadow of the restriction to so(n,1)"},
        {"so-pair/dirac-weights", "generic Dirac cohomology weight labels and ef+fe identity"},
        {"diag-pair/fourier-operators", "Fourier-model operators X and F on C[xi, eta]"},
        {"diag-pair/function-operators", "first order function-model operators on C[x, y]"},
        {"diag-pair/t-operators", "hypergeometric operators in the t variable"},
        {"diag-pair/homogenization", "transport between the Fourier and t models"},
        {"diag-pair/jacobi-singular-vectors", "Jacobi polynomial solutions and their homogenization"},
        {"diag-pair/lowering", "F maps the degree l solution to the degree l-1 solution"},
        {"diag-pair/recursion", "coefficient recursion of the degree l solution"},
        {"diag-pair/branching-sets", "sets Lambda, Lambda_s, Lambda_r and the involution"},
        {"diag-pair/decomposition", "direct sum decomposition and Grothendieck group expansion"},
        {"diag-pair/branching-character", "graded-dimension shadow of the diagonal restriction"},
        {"ortho/gegenbauer", "Gegenbauer recurrence and explicit sum"},
        {"ortho/gegenbauer-ladder", "raising and lowering operators on Gegenbauer polynomials"},
        {"ortho/gegenbauer-ode", "Gegenbauer differential equation"},
        {"ortho/gegenbauer-jacobi", "Gegenbauer polynomials as Jacobi polynomials"},
        {"ortho/jacobi", "Jacobi explicit sum and value at 1"},
        {"ortho/jacobi-ode", "Jacobi differential equation"},
        {"ortho/jacobi-derivative", "derivative formula for Jacobi polynomials"},
        {"ortho/orthogonality", "orthogonality relations and norms"},
        {"ortho/hypergeometric", "Jacobi polynomials as terminating 2F1"},
        {"golden/displays", "displayed polynomials reproduced byte for byte"},
        {"algebra/weyl-algebra", "composition, action and normal ordering of differential operators"},
        {"algebra/parameter-field", "rational functions in the spectral parameters"},
    };
    return reg;
}

bool anchor_known(std::string_view name) {
    const auto& reg = anchor_registry();
    return std::any_of(reg.begin(), reg.end(), [&](const AnchorEntry& e) { return e.name == name; });
}

}  // namespace branchcheck
