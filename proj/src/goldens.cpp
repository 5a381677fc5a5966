#include "branchcheck/goldens.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "branchcheck/diag_pair.hpp"
#include "branchcheck/orthopoly.hpp"
#include "branchcheck/so_pair.hpp"

namespace branchcheck {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> lines_of(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw std::runtime_error("cannot open " + file.string());
    std::vector<std::string> out;
    for (std::string line; std::getline(in, line);) {
        line = trim(line);
        if (line.empty() || line[0] == '#') continue;
        out.push_back(line);
    }
    return out;
}

struct Key {
    std::string family;  // so, ortho, diag
    int n = 0;
    std::string name;
};

Key split_key(const std::string& key) {
    Key k;
    const auto dot = key.find('.');
    k.family = key.substr(0, dot);
    std::string rest = key.substr(dot + 1);
    if (k.family == "so") {
        const auto d2 = rest.find('.');
        k.n = std::stoi(rest.substr(1, d2 - 1));
        rest = rest.substr(d2 + 1);
    }
    k.name = rest;
    return k;
}

int trailing_int(const std::string& s) {
    auto p = s.find_last_not_of("0123456789");
    return std::stoi(s.substr(p + 1));
}

VarSet vars_named(const std::string& v, int n) {
    if (v == "xi") return VarSet::xi(n);
    if (v == "x") return VarSet::x_line();
    if (v == "t") return VarSet::t_line();
    throw std::runtime_error("unknown variable set " + v);
}

}  // namespace

std::vector<Transcription> read_transcriptions(const std::filesystem::path& file) {
    std::vector<Transcription> out;
    for (const auto& line : lines_of(file)) {
        const auto p1 = line.find('|');
        const auto p2 = line.find('|', p1 + 1);
        if (p1 == std::string::npos || p2 == std::string::npos) throw std::runtime_error("malformed transcription: " + line);
        out.push_back({trim(line.substr(0, p1)), trim(line.substr(p1 + 1, p2 - p1 - 1)), trim(line.substr(p2 + 1))});
    }
    return out;
}

std::map<std::string, std::string> read_canonical(const std::filesystem::path& file) {
    std::map<std::string, std::string> out;
    for (const auto& line : lines_of(file)) {
        const auto eq = line.find(" = ");
        if (eq == std::string::npos) throw std::runtime_error("malformed canonical line: " + line);
        out[line.substr(0, eq)] = line.substr(eq + 3);
    }
    return out;
}

std::vector<std::string> golden_keys() {
    std::vector<std::string> keys;
    for (int n : golden_dimensions()) {
        const std::string p = "so.n" + pad2(n) + ".";
        for (int l = 0; l <= 4; ++l) keys.push_back(p + "F" + std::to_string(l));
        for (int l = 0; l <= 3; ++l) keys.push_back(p + "Q.F" + std::to_string(l));
    }
    for (int l = 0; l <= 3; ++l) {
        keys.push_back("ortho.C" + std::to_string(l));
        keys.push_back("ortho.Ctilde" + std::to_string(l));
        keys.push_back("diag.P" + std::to_string(l));
        if (l > 0) keys.push_back("diag.lower.P" + std::to_string(l));
    }
    std::sort(keys.begin(), keys.end());
    return keys;
}

GeoPoly golden_value(const std::string& key) {
    const Key k = split_key(key);
    const int l = trailing_int(k.name);
    if (k.family == "so") {
        const auto ctx = SoPairContext::make_formal(k.n);
        const GeoPoly F = singular_vector_F(ctx, l).poly;
        if (k.name.rfind("Q.", 0) == 0) return apply_poly(op_Q(ctx), F);
        return F;
    }
    if (k.family == "ortho") {
        const GegenbauerSpec spec{l, ParamScalar::alpha()};
        return k.name.rfind("Ctilde", 0) == 0 ? gegenbauer_tilde(spec) : gegenbauer(spec);
    }
    if (k.family == "diag") {
        const auto ctx = DiagContext::make_formal();
        const GeoPoly P = jacobi_t(ctx, l);
        if (k.name.rfind("lower.", 0) == 0) return apply_poly(op_F_t(ctx, l), P);
        return P;
    }
    throw std::runtime_error("unknown golden key " + key);
}

std::string render_canonical() {
    std::ostringstream os;
    for (const auto& key : golden_keys()) os << key << " = " << golden_value(key).to_string() << "\n";
    return os.str();
}

Records verify_goldens(const std::filesystem::path& dir) {
    std::map<std::string, Transcription> trans;
    for (auto& t : read_transcriptions(dir / "displays.txt")) trans[t.name] = t;
    const auto frozen = read_canonical(dir / "canonical.txt");

    Records out;
    for (const auto& key : golden_keys()) {
        const Key k = split_key(key);
        const std::string computed = golden_value(key).to_string();
        std::string witness;
        bool display_off = false;
        auto t = trans.find(k.name);
        if (t == trans.end()) {
            witness = "no transcription for " + k.name;
        } else {
            ParseEnv env;
            if (k.family == "so") env.constants["n"] = Rational(k.n);
            const std::string displayed = parse_poly(t->second.expr, vars_named(t->second.vars, k.n), env).to_string();
            if (displayed != computed) {
                witness = "displayed " + displayed + " computed " + computed;
                // A Jacobi display that is itself no solution of the t-model
                // equation is reported, not failed.
                if (k.family == "diag" && k.name[0] == 'P') {
                    const auto ctx = DiagContext::make_formal();
                    const int l = trailing_int(k.name);
                    const GeoPoly shown = parse_poly(t->second.expr, VarSet::t_line());
                    if (!apply_poly(op_X_t(ctx, l), shown).is_zero()) {
                        display_off = true;
                        witness += "; displayed polynomial is not annihilated by the t-model operator";
                    }
                }
            }
        }
        auto f = frozen.find(key);
        if (f == frozen.end())
            witness += (witness.empty() ? "" : "; ") + std::string("missing from canonical.txt");
        else if (f->second != computed)
            witness += (witness.empty() ? "" : "; ") + std::string("frozen ") + f->second + " computed " + computed;
        const bool frozen_ok = f != frozen.end() && f->second == computed;
        auto rec = make_record("golden." + key, "golden/displays", witness.empty(), witness);
        if (display_off && frozen_ok) rec.status = Status::discrepancy_reported;
        out.push_back(std::move(rec));
    }
    return out;
}

}  // namespace branchcheck
