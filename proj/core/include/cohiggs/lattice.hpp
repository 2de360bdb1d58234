#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "cohiggs/rational.hpp"

namespace cohiggs {

/// Integer lattice vector; lives in N or in the dual lattice M depending on use.
using LatticeVec = std::vector<Int>;

Int pairing(const LatticeVec& r, const LatticeVec& n);

LatticeVec addLv(const LatticeVec& a, const LatticeVec& b);
LatticeVec subLv(const LatticeVec& a, const LatticeVec& b);
LatticeVec negLv(const LatticeVec& a);
bool isZeroLv(const LatticeVec& a);
Int gcdLv(const LatticeVec& a);
LatticeVec primitive(const LatticeVec& a);
std::string lvStr(const LatticeVec& a);

std::vector<Rat> toRatVec(const LatticeVec& a);

/// Lex order, used everywhere a deterministic order on lattice vectors is needed.
struct LvLess {
    bool operator()(const LatticeVec& a, const LatticeVec& b) const;
};

/// For primitive rho, a dual vector s with <s, rho> = 1 plus a lattice basis
/// of the sublattice rho^perp of M. Built from an extended-gcd column reduction.
struct DualData {
    LatticeVec sOne;                 // <sOne, rho> = 1
    std::vector<LatticeVec> sPerp;   // q-1 vectors spanning rho^perp over Z
};
DualData dualDataFor(const LatticeVec& rho);

/// Complete description of a fan: ray list plus maximal cones as index sets.
/// For rank 2 the maximal cones are the consecutive ray pairs in angular order.
class Fan {
public:
    Fan() : rank_(0) {}
    Fan(std::size_t rank, std::vector<LatticeVec> rays,
        std::vector<std::vector<std::size_t>> maxCones = {});

    std::size_t rank() const { return rank_; }
    const std::vector<LatticeVec>& rays() const { return rays_; }
    const LatticeVec& ray(std::size_t i) const { return rays_[i]; }
    std::size_t rayCount() const { return rays_.size(); }
    const std::vector<std::vector<std::size_t>>& maxCones() const { return maxCones_; }

    /// True iff the rays positively span R^rank.
    bool isComplete() const;
    /// Rank-2 only: every maximal cone is spanned by a Z^2-basis.
    bool isSmooth() const;

    std::size_t rayIndex(const LatticeVec& rho) const;

    bool operator==(const Fan& o) const { return rank_ == o.rank_ && rays_ == o.rays_; }

private:
    std::size_t rank_;
    std::vector<LatticeVec> rays_;
    std::vector<std::vector<std::size_t>> maxCones_;
};

/// GL_2(Z)-equivalence of rank-2 fans (bijection on ray sets).
bool fansEquivalent(const Fan& a, const Fan& b);

/// {h : <rho, h> >= 0 for all rho} = {0}, any rank. Defined with the
/// half-space machinery.
bool raysPositivelySpan(const std::vector<LatticeVec>& rays, std::size_t rank);

}  // namespace cohiggs
