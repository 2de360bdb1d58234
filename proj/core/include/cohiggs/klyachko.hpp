#pragma once

#include <vector>

#include "cohiggs/lattice.hpp"
#include "cohiggs/polytope.hpp"
#include "cohiggs/subspace.hpp"

namespace cohiggs {

/// Decreasing Z-filtration of Q^ambientDim. Stored as breakpoints
/// (level, space) with E^l = space_i for level_i <= l < level_{i+1},
/// E^l = full below the first breakpoint. The chain is strictly decreasing
/// and its last space is zero.
class Filtration {
public:
    Filtration() : ambient_(0) {}
    Filtration(std::size_t ambientDim, std::vector<std::pair<Int, Subspace>> breakpoints);

    std::size_t ambientDim() const { return ambient_; }
    const std::vector<std::pair<Int, Subspace>>& breakpoints() const { return steps_; }

    Subspace at(const Int& level) const;

    /// Largest l with E^l = E.
    Int fullLevel() const;
    /// Smallest l with E^l = 0.
    Int zeroLevel() const;

    /// Shift all levels by delta (tensoring with a rank-1 filtration).
    Filtration shifted(const Int& delta) const;

    /// The value/level pairs to check when constraining a map out of this
    /// filtration: for each constancy interval, its value together with the
    /// last level of the interval. The zero tail is omitted.
    std::vector<std::pair<Subspace, Int>> constraintIntervals() const;

    bool operator==(const Filtration& o) const = default;

private:
    std::size_t ambient_;
    std::vector<std::pair<Int, Subspace>> steps_;
};

/// Toric reflexive sheaf in Klyachko form: one filtration of Q^rankE per ray.
struct ToricSheaf {
    Fan fan;
    std::size_t rankE = 0;
    std::vector<Filtration> filtrations;  // indexed like fan.rays()

    ToricSheaf() = default;
    ToricSheaf(Fan f, std::size_t rank, std::vector<Filtration> filts);

    bool operator==(const ToricSheaf& o) const = default;
};

ToricSheaf tangentSheaf(const Fan& f);
ToricSheaf cotangentSheaf(const Fan& f);
ToricSheaf lineBundle(const Fan& f, const std::vector<Int>& coeffs);
ToricSheaf tensorLineBundle(const ToricSheaf& s, const std::vector<Int>& coeffs);

/// Global sections of degree r: the intersection of E_rho^{-<r,rho>}.
Subspace sectionSpace(const ToricSheaf& s, const LatticeVec& r);

/// Basis of linear maps E -> F with phi(E_rho^l) inside F_rho^{l - <r,rho>}
/// for every ray and level. Maps are flattened row-major (target index major).
struct MapSpace {
    LatticeVec degree;
    std::size_t dimFrom = 0;
    std::size_t dimTo = 0;
    Subspace basis;  // subspace of Q^{dimTo * dimFrom}

    std::size_t dim() const { return basis.dim(); }
    Mat matrix(std::size_t basisIndex) const;
};

MapSpace homSpace(const ToricSheaf& e, const ToricSheaf& f, const LatticeVec& r);

/// Degrees that can possibly carry nonzero maps E -> F, from the per-ray
/// bound <r,rho> >= fullLevel_E - zeroLevel_F + 1. Throws UnboundedRegion on
/// non-complete fans.
HalfSpaceRegion homDegreeRegion(const ToricSheaf& e, const ToricSheaf& f);
std::vector<LatticeVec> homDegreeCandidates(const ToricSheaf& e, const ToricSheaf& f);

/// Degrees that can possibly carry nonzero sections.
std::vector<LatticeVec> sectionDegreeCandidates(const ToricSheaf& s);

/// Parses the sheaf DSL: `tangent`, `cotangent`, `O(l1,...,ln)` with per-ray
/// integers in fan ray order, and `<base>*O(...)` twists.
ToricSheaf parseSheafSpec(const Fan& f, const std::string& spec);

}  // namespace cohiggs
