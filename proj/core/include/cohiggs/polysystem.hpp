#pragma once

#include <map>
#include <string>
#include <vector>

#include "cohiggs/lattice.hpp"
#include "cohiggs/rational.hpp"

namespace cohiggs {

/// A named unknown of a polynomial system. Solver-generated unknowns follow
/// the pattern c[(rx,ry)][i]: degree r in M and basis index i.
struct PolyVar {
    std::string name;
    auto operator<=>(const PolyVar&) const = default;
};

PolyVar solverVar(const LatticeVec& degree, std::size_t basisIndex);

/// Sparse monomial: variable index -> positive exponent, sorted by index.
using Monomial = std::vector<std::pair<std::size_t, unsigned>>;

/// Polynomial with rational coefficients in an externally-declared variable
/// list; variables are referenced by index.
class MPoly {
public:
    MPoly() = default;

    static MPoly constant(const Rat& c);
    static MPoly variable(std::size_t varIndex);

    const std::map<Monomial, Rat>& terms() const { return terms_; }
    bool isZero() const { return terms_.empty(); }

    void addTerm(const Monomial& m, const Rat& c);

    MPoly operator+(const MPoly& o) const;
    MPoly operator-(const MPoly& o) const;
    MPoly operator*(const MPoly& o) const;
    MPoly operator*(const Rat& c) const;
    bool operator==(const MPoly& o) const = default;

    /// Substitute each variable by the polynomial at its index (over a new
    /// variable list).
    MPoly substitute(const std::vector<MPoly>& images) const;

    /// Divides by the leading coefficient so the lex-leading term is monic.
    MPoly normalized() const;

    std::string str(const std::vector<PolyVar>& vars) const;

private:
    std::map<Monomial, Rat> terms_;
};

/// A list of polynomials in declared unknowns, as produced by the
/// integrability generator. Homogeneous of degree 2 in that case.
struct PolySystem {
    std::vector<PolyVar> vars;
    std::vector<MPoly> polys;

    std::size_t indexOf(const PolyVar& v) const;

    /// Plain-text form: one polynomial per line with ^ for powers, preceded by
    /// comment lines mapping safe variable aliases back to declared names.
    std::string casText() const;
};

/// True iff every polynomial becomes identically zero after substituting the
/// assignment, each image being a polynomial in a fresh parameter list.
/// Throws if some variable of the system has no image.
bool substituteWitness(const PolySystem& sys, const std::map<PolyVar, MPoly>& assignment);

/// CAS-safe variable alias, e.g. c[(-2,1)][0] -> c_m2_1_0.
std::string casAlias(const PolyVar& v);

}  // namespace cohiggs
