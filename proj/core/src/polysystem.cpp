#include "cohiggs/polysystem.hpp"

#include <algorithm>
#include <cctype>

#include "cohiggs/errors.hpp"

namespace cohiggs {

PolyVar solverVar(const LatticeVec& degree, std::size_t basisIndex) {
    std::string name = "c[(";
    for (std::size_t i = 0; i < degree.size(); ++i) {
        if (i) name += ",";
        name += degree[i].str();
    }
    name += ")][" + std::to_string(basisIndex) + "]";
    return PolyVar{name};
}

MPoly MPoly::constant(const Rat& c) {
    MPoly p;
    p.addTerm({}, c);
    return p;
}

MPoly MPoly::variable(std::size_t varIndex) {
    MPoly p;
    p.addTerm({{varIndex, 1}}, Rat(1));
    return p;
}

void MPoly::addTerm(const Monomial& m, const Rat& c) {
    if (c.isZero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
        return;
    }
    it->second += c;
    if (it->second.isZero()) terms_.erase(it);
}

MPoly MPoly::operator+(const MPoly& o) const {
    MPoly out = *this;
    for (const auto& [m, c] : o.terms_) out.addTerm(m, c);
    return out;
}

MPoly MPoly::operator-(const MPoly& o) const {
    MPoly out = *this;
    for (const auto& [m, c] : o.terms_) out.addTerm(m, -c);
    return out;
}

namespace {

Monomial mulMono(const Monomial& a, const Monomial& b) {
    Monomial out;
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            out.push_back(b[j++]);
        } else {
            out.emplace_back(a[i].first, a[i].second + b[j].second);
            ++i;
            ++j;
        }
    }
    return out;
}

}  // namespace

MPoly MPoly::operator*(const MPoly& o) const {
    MPoly out;
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_) out.addTerm(mulMono(m1, m2), c1 * c2);
    return out;
}

MPoly MPoly::operator*(const Rat& c) const {
    MPoly out;
    for (const auto& [m, v] : terms_) out.addTerm(m, v * c);
    return out;
}

MPoly MPoly::substitute(const std::vector<MPoly>& images) const {
    MPoly out;
    for (const auto& [m, c] : terms_) {
        MPoly term = MPoly::constant(c);
        for (const auto& [var, exp] : m) {
            if (var >= images.size()) throw Error("substitution misses a variable");
            for (unsigned k = 0; k < exp; ++k) term = term * images[var];
        }
        out = out + term;
    }
    return out;
}

MPoly MPoly::normalized() const {
    if (terms_.empty()) return *this;
    return *this * terms_.rbegin()->second.inverse();
}

std::string MPoly::str(const std::vector<PolyVar>& vars) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        std::string mono;
        for (const auto& [var, exp] : m) {
            if (!mono.empty()) mono += "*";
            mono += var < vars.size() ? vars[var].name : ("v" + std::to_string(var));
            if (exp != 1) mono += "^" + std::to_string(exp);
        }
        Rat coeff = c;
        std::string sign = coeff.sign() < 0 ? " - " : " + ";
        if (out.empty()) sign = coeff.sign() < 0 ? "-" : "";
        coeff = coeff.abs();
        std::string cs = coeff.str();
        if (mono.empty())
            out += sign + cs;
        else if (cs == "1")
            out += sign + mono;
        else
            out += sign + cs + "*" + mono;
    }
    return out;
}

std::size_t PolySystem::indexOf(const PolyVar& v) const {
    for (std::size_t i = 0; i < vars.size(); ++i)
        if (vars[i] == v) return i;
    throw Error("unknown system variable " + v.name);
}

std::string casAlias(const PolyVar& v) {
    std::string out;
    for (char ch : v.name) {
        if (std::isalnum(static_cast<unsigned char>(ch))) {
            out += ch;
        } else if (ch == '-') {
            out += 'm';
        } else if (ch == ',' || ch == '[') {
            if (!out.empty() && out.back() != '_') out += '_';
        }
        // '(', ')', ']' dropped
    }
    while (!out.empty() && out.back() == '_') out.pop_back();
    return out;
}

std::string PolySystem::casText() const {
    std::string out;
    for (const auto& v : vars) out += "// " + casAlias(v) + " = " + v.name + "\n";
    std::vector<PolyVar> aliases;
    aliases.reserve(vars.size());
    for (const auto& v : vars) aliases.push_back(PolyVar{casAlias(v)});
    for (const auto& p : polys) out += p.str(aliases) + "\n";
    return out;
}

bool substituteWitness(const PolySystem& sys, const std::map<PolyVar, MPoly>& assignment) {
    std::vector<MPoly> images(sys.vars.size());
    for (std::size_t i = 0; i < sys.vars.size(); ++i) {
        auto it = assignment.find(sys.vars[i]);
        if (it == assignment.end()) throw Error("witness misses variable " + sys.vars[i].name);
        images[i] = it->second;
    }
    for (const auto& p : sys.polys)
        if (!p.substitute(images).isZero()) return false;
    return true;
}

}  // namespace cohiggs
