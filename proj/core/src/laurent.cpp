#include "cohiggs/laurent.hpp"

#include <algorithm>

#include "cohiggs/errors.hpp"

namespace cohiggs {

LaurentPoly LaurentPoly::constant(std::size_t rank, const Rat& c) {
    LaurentPoly p(rank);
    p.addTerm(LatticeVec(rank, Int(0)), c);
    return p;
}

LaurentPoly LaurentPoly::monomial(const LatticeVec& exponent, const Rat& coeff) {
    LaurentPoly p(exponent.size());
    p.addTerm(exponent, coeff);
    return p;
}

void LaurentPoly::addTerm(const LatticeVec& exponent, const Rat& coeff) {
    if (exponent.size() != rank_) throw Error("laurent term rank mismatch");
    if (coeff.isZero()) return;
    auto it = terms_.find(exponent);
    if (it == terms_.end()) {
        terms_.emplace(exponent, coeff);
        return;
    }
    it->second += coeff;
    if (it->second.isZero()) terms_.erase(it);
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    if (rank_ != o.rank_) throw Error("laurent sum rank mismatch");
    LaurentPoly out = *this;
    for (const auto& [e, c] : o.terms_) out.addTerm(e, c);
    return out;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    if (rank_ != o.rank_) throw Error("laurent difference rank mismatch");
    LaurentPoly out = *this;
    for (const auto& [e, c] : o.terms_) out.addTerm(e, -c);
    return out;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    if (rank_ != o.rank_) throw Error("laurent product rank mismatch");
    LaurentPoly out(rank_);
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) out.addTerm(addLv(e1, e2), c1 * c2);
    return out;
}

LaurentPoly LaurentPoly::operator*(const Rat& c) const {
    LaurentPoly out(rank_);
    for (const auto& [e, v] : terms_) out.addTerm(e, v * c);
    return out;
}

LaurentPoly LaurentPoly::operator-() const { return *this * Rat(-1); }

Rat LaurentPoly::evalAt(const std::vector<Rat>& t) const {
    if (t.size() != rank_) throw Error("evaluation point rank mismatch");
    for (const auto& x : t)
        if (x.isZero()) throw Error("laurent evaluation at a zero coordinate");
    Rat acc;
    for (const auto& [e, c] : terms_) {
        Rat term = c;
        for (std::size_t i = 0; i < rank_; ++i) {
            Int k = e[i];
            Rat base = k < 0 ? t[i].inverse() : t[i];
            Int n = k < 0 ? Int(-k) : k;
            for (Int j = 0; j < n; ++j) term *= base;
        }
        acc += term;
    }
    return acc;
}

std::optional<LaurentPoly> LaurentPoly::sqrt() const {
    if (isZero()) return LaurentPoly(rank_);
    // Greedy leading-term extraction in the lex order: the lex-maximal term of
    // d*d is the square of the lex-maximal term of d.
    const auto& [le, lc] = *terms_.rbegin();
    auto rootCoeff = lc.sqrt();
    if (!rootCoeff) return std::nullopt;
    LatticeVec he(rank_);
    for (std::size_t i = 0; i < rank_; ++i) {
        if (le[i] % 2 != 0) return std::nullopt;
        he[i] = le[i] / 2;
    }
    LaurentPoly d = LaurentPoly::monomial(he, *rootCoeff);
    std::size_t guard = (termCount() + 2) * (termCount() + 2);
    while (true) {
        LaurentPoly rem = *this - d * d;
        if (rem.isZero()) return d;
        if (guard-- == 0) return std::nullopt;
        const auto& [re, rc] = *rem.terms_.rbegin();
        // The next term t of d satisfies 2 * lead(d) * t = lead(rem), and must
        // be lex-smaller than the terms found so far.
        LatticeVec te = subLv(re, he);
        if (!LvLess{}(te, he)) return std::nullopt;
        d = d + LaurentPoly::monomial(te, rc / (Rat(2) * *rootCoeff));
    }
}

std::optional<LaurentPoly> LaurentPoly::divideExact(const LaurentPoly& divisor) const {
    if (rank_ != divisor.rank_) throw Error("laurent division rank mismatch");
    if (divisor.isZero()) throw Error("laurent division by zero");
    if (isZero()) return LaurentPoly(rank_);
    const auto& [de, dc] = *divisor.terms_.rbegin();
    // Any exact quotient has exponents in the componentwise box
    // [min(p) - min(div), max(p) - max(div)]; leaving it means not divisible,
    // and the lex-decreasing leading terms make the loop finite inside it.
    LatticeVec lo(rank_), hi(rank_);
    auto boxOf = [this](const LaurentPoly& q, LatticeVec& mn, LatticeVec& mx) {
        mn = mx = q.terms().begin()->first;
        for (const auto& [e, c] : q.terms())
            for (std::size_t i = 0; i < rank_; ++i) {
                mn[i] = std::min(mn[i], e[i]);
                mx[i] = std::max(mx[i], e[i]);
            }
    };
    LatticeVec pLo, pHi, dLo, dHi;
    boxOf(*this, pLo, pHi);
    boxOf(divisor, dLo, dHi);
    lo = subLv(pLo, dLo);
    hi = subLv(pHi, dHi);

    LaurentPoly rem = *this;
    LaurentPoly quot(rank_);
    while (!rem.isZero()) {
        const auto& [re, rc] = *rem.terms_.rbegin();
        LatticeVec te = subLv(re, de);
        for (std::size_t i = 0; i < rank_; ++i)
            if (te[i] < lo[i] || te[i] > hi[i]) return std::nullopt;
        LaurentPoly t = LaurentPoly::monomial(te, rc / dc);
        quot = quot + t;
        rem = rem - t * divisor;
    }
    return quot;
}

std::string LaurentPoly::str() const {
    if (isZero()) return "0";
    auto varName = [](std::size_t i) -> std::string {
        static const char* names[] = {"x", "y", "z"};
        if (i < 3) return names[i];
        return "t" + std::to_string(i);
    };
    std::string out;
    // Lex-descending display.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        std::string mono;
        for (std::size_t i = 0; i < rank_; ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += varName(i);
            if (e[i] != 1) mono += "^" + e[i].str();
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

std::optional<LaurentPoly> isMinusPerfectSquare(const LaurentPoly& p) {
    return (-p).sqrt();
}

}  // namespace cohiggs
