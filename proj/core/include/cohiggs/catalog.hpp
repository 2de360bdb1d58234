#pragma once

#include <array>
#include <map>
#include <string>

#include "cohiggs/higgs.hpp"
#include "cohiggs/lattice.hpp"

namespace cohiggs {

/// Built-in surface identifiers. Hirz and Pa carry the family parameter a.
struct SurfaceId {
    enum class Kind { P1, P2, Pa, Hirz, P1xP1, P2p, P2pp, P2ppp };
    Kind kind = Kind::P2;
    Int a = 1;

    static SurfaceId parse(const std::string& s);
    std::string str() const;
};

/// Fan of a built-in surface, rays in the reference order. All catalog fans
/// are complete; all except Pa(a >= 2) are smooth.
Fan makeSurface(const SurfaceId& id);

std::vector<std::string> catalogNames();

/// Subdivides the selected maximal cone of a smooth surface fan by the sum of
/// its two rays. The new ray is appended to the ray list.
Fan blowUp(const Fan& f, std::size_t coneIndex);

/// Index of the maximal cone spanned by the two given rays.
std::size_t coneIndexOf(const Fan& f, const LatticeVec& r1, const LatticeVec& r2);

/// Symmetric 3x3 presentation of trace-free endomorphisms of N for the
/// projective-plane (a = 1) and Hirzebruch (a >= 2) families: N is the
/// quotient of Z^3 by (1,1,a), generators A0(a), A1(a), A2.
struct SymEncoding {
    Int a;
    LatticeVec kernelVec;                    // (1,1,a)
    Mat embed;                               // 3x2 section of project
    Mat project;                             // 2x3, project*embed = id
    Mat A0, A1, A2;                          // 3x3 representatives
    std::array<LatticeVec, 3> encodedRays;   // rho0(a), rho1, rho2 in Z^2

    /// View a 3x3 representative as the 2x2 matrix of the endomorphism.
    Mat to2x2(const Mat& m3) const;
    /// Canonical 3x3 representative (zero diagonal) of a 2x2 endomorphism.
    Mat toSymmetric3(const Mat& m2) const;
};

SymEncoding symEncoding(const Int& a);

/// Endomorphism classes attached to a ray.
enum class RayClass {
    Preserving,  // phi(rho) in span(rho)
    Nilpotent,   // im phi in span(rho) in ker phi
};

/// Basis (canonical, as 3x3 representatives) of the trace-free endomorphisms
/// of the given class at an encoded ray.
std::vector<Mat> classBasis(const SymEncoding& enc, const LatticeVec& rho, RayClass cls);

/// Flattened tensor sum of (3x3 representative, N-leg) pairs in the 2x2
/// solver coordinates.
std::vector<Rat> makeTensor(const SymEncoding& enc,
                            const std::vector<std::pair<Mat, LatticeVec>>& pairs);

/// Reference basis of the trace-free admissible maps on the projective plane,
/// per degree, with the variable names used for the 18-unknown system.
struct NamedBasisElement {
    std::string name;
    std::vector<Rat> tensor;
};
using NamedBasis = std::map<LatticeVec, std::vector<NamedBasisElement>, LvLess>;

NamedBasis namedVariableMap();

/// Translates an assignment of the reference names into an assignment of the
/// generator's own variables, via the per-degree change of basis.
std::map<PolyVar, MPoly> toSolverAssignment(const NamedBasis& basis,
                                            const IntegrabilitySystem& sys,
                                            const std::map<std::string, MPoly>& namedAssign);

/// The three degree-zero fields on the hexagonal del Pezzo.
std::vector<HiggsField> hexagonDelPezzoFields();

/// The three-parameter family on the degree-seven del Pezzo.
HiggsField degree7DelPezzoField(const Rat& e, const Rat& d12, const Rat& c21);

}  // namespace cohiggs
