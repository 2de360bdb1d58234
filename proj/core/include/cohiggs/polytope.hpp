#pragma once

#include <optional>
#include <vector>

#include "cohiggs/lattice.hpp"

namespace cohiggs {

/// Lattice polytope given by its vertex set, canonically ordered.
/// Rank 2: vertices in counterclockwise cyclic order starting at the
/// lexicographically smallest one. Rank 1: sorted endpoints. May be empty.
class LatticePolytope {
public:
    LatticePolytope() : rank_(0) {}
    LatticePolytope(std::size_t rank, std::vector<LatticeVec> canonicalVertices)
        : rank_(rank), vertices_(std::move(canonicalVertices)) {}

    std::size_t rank() const { return rank_; }
    const std::vector<LatticeVec>& vertices() const { return vertices_; }
    bool isEmpty() const { return vertices_.empty(); }

    bool containsPoint(const LatticeVec& p) const;
    std::vector<LatticeVec> latticePoints() const;

    bool operator==(const LatticePolytope& o) const = default;

private:
    std::size_t rank_;
    std::vector<LatticeVec> vertices_;
};

/// Convex hull of lattice points, ranks 1 and 2.
LatticePolytope convexHull2D(std::size_t rank, const std::vector<LatticeVec>& pts);

struct Face {
    LatticePolytope face;
    LatticeVec normal;  // primitive, realises face = argmin <., normal>
};

/// All vertices (0-faces) and edges (1-faces) of a rank-2 polytope.
/// A segment lists its single edge once per supporting normal.
std::vector<Face> faces2D(const LatticePolytope& p);

/// Intersection of half-spaces {r : <r, normal> >= bound}.
class HalfSpaceRegion {
public:
    HalfSpaceRegion() : rank_(0) {}
    explicit HalfSpaceRegion(std::size_t rank) : rank_(rank) {}

    void add(const LatticeVec& normal, const Int& bound);
    std::size_t rank() const { return rank_; }
    const std::vector<std::pair<LatticeVec, Int>>& constraints() const { return constraints_; }

    bool contains(const LatticeVec& p) const;
    /// True iff the recession cone is {0}.
    bool isBounded() const;
    /// All lattice points, lexicographic order. Throws UnboundedRegion.
    std::vector<LatticeVec> latticePoints() const;

private:
    std::size_t rank_;
    std::vector<std::pair<LatticeVec, Int>> constraints_;
};

}  // namespace cohiggs
