#pragma once

#include <optional>

#include "cohiggs/laurent.hpp"
#include "cohiggs/polysystem.hpp"
#include "cohiggs/prehiggs.hpp"

namespace cohiggs {

/// Matrix with Laurent polynomial entries (elements of End(E) tensor Q[M]).
class LaurentMat {
public:
    LaurentMat() : rows_(0), cols_(0) {}
    LaurentMat(std::size_t rows, std::size_t cols, std::size_t rank)
        : rows_(rows), cols_(cols), e_(rows * cols, LaurentPoly(rank)) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    LaurentPoly& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const LaurentPoly& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }
    bool isZero() const;

    LaurentMat operator*(const LaurentMat& o) const;
    LaurentMat operator-(const LaurentMat& o) const;

private:
    std::size_t rows_, cols_;
    std::vector<LaurentPoly> e_;
};

/// Finite sum of homogeneous components phi^r tensor chi^r. Every stored term
/// lies in the admissible space of its degree; construction validates this.
class HiggsField {
public:
    static HiggsField make(const ToricSheaf& sheaf,
                           std::map<LatticeVec, std::vector<Rat>, LvLess> terms);
    /// Skips admissibility validation; for terms already known admissible.
    static HiggsField makeUnchecked(const ToricSheaf& sheaf,
                                    std::map<LatticeVec, std::vector<Rat>, LvLess> terms);

    const ToricSheaf& sheaf() const { return sheaf_; }
    const std::map<LatticeVec, std::vector<Rat>, LvLess>& terms() const { return terms_; }
    bool isZero() const { return terms_.empty(); }
    std::size_t rankE() const { return sheaf_.rankE; }
    std::size_t q() const { return sheaf_.fan.rank(); }

private:
    ToricSheaf sheaf_;
    std::map<LatticeVec, std::vector<Rat>, LvLess> terms_;  // flattened tensors
};

/// Phi_s = sum_r (phi^r_s) chi^r as a matrix over Q[M].
LaurentMat contractField(const HiggsField& phi, const LatticeVec& s);

/// Phi_s specialised at a rational torus point.
Mat contractFieldAt(const HiggsField& phi, const LatticeVec& s, const std::vector<Rat>& t);

struct IntegrabilityResult {
    bool integrable = false;
    /// On failure: degree and matrix of the first nonzero graded component of
    /// some basis commutator.
    std::optional<std::pair<LatticeVec, Mat>> certificate;
};

/// Checks [Phi_{s_k}, Phi_{s_l}] = 0 for all pairs from the standard lattice
/// basis of M; bilinearity makes that equivalent to all s, s'.
IntegrabilityResult isIntegrable(const HiggsField& phi);

/// Convex hull of the support; empty for the zero field.
LatticePolytope higgsPolytope(const HiggsField& phi);

/// Keeps exactly the terms with degree inside the given polytope.
HiggsField restrictToFace(const HiggsField& phi, const LatticePolytope& face);

struct IntegrabilitySystem {
    PolySystem system;
    /// For each variable, the (degree, basis index) it parametrises.
    std::vector<std::pair<LatticeVec, std::size_t>> varKeys;
    HiggsRange range;
};

/// One unknown per admissible degree and basis vector; emits the quadratic
/// coefficients of every graded component of the basis commutators of the
/// generic field. Degrees outside `filter` (when given) carry no unknowns.
IntegrabilitySystem generateIntegrabilitySystem(const ToricSheaf& e, bool traceFreeMode,
                                                const std::optional<LatticePolytope>& filter = {});

/// Delegates to substituteWitness.
bool checkWitnessFamily(const PolySystem& sys, const std::map<PolyVar, MPoly>& assignment);

/// Characteristic data of a rank-2 field on a surface: the trace as an
/// N-valued Laurent polynomial and the determinant as a quadratic form on the
/// N-coordinates, plus a certificate det = -(square) when one exists.
struct HitchinData {
    std::vector<LaurentPoly> traceComponents;       // length q
    LaurentPoly det20, det11, det02;                // det = d20 n1^2 + d11 n1 n2 + d02 n2^2
    std::optional<std::vector<LaurentPoly>> minusSquareRoot;  // d with det = -(d.n)^2
};

HitchinData hitchinData(const HiggsField& phi);

/// Minimal polynomial of Phi_s(t), monic, coefficients ascending in z.
std::vector<Rat> minPolyAtPoint(const HiggsField& phi, const LatticeVec& s,
                                const std::vector<Rat>& t);

std::string polyStr(const std::vector<Rat>& coeffs, const std::string& var = "z");

}  // namespace cohiggs
