#pragma once

#include <map>
#include <optional>

#include "cohiggs/klyachko.hpp"

namespace cohiggs {

/// Space of maps phi : E -> E tensor N (or E tensor M for the cotangent
/// variant) admissible at a fixed degree. Coordinates x_{i,j,k} with
/// phi(e_j) = sum_{i,k} x_{i,j,k} e_i tensor n_k, flattened in lexicographic
/// (i,j,k) order; the basis is the RREF over these coordinates.
struct GradedMapSpace {
    LatticeVec degree;
    std::size_t rankE = 0;
    std::size_t q = 0;
    Subspace basis;  // subspace of Q^{rankE * rankE * q}

    std::size_t dim() const { return basis.dim(); }
    std::vector<Rat> basisTensor(std::size_t index) const { return basis.basis().row(index); }

    /// The contraction phi_s as a rankE x rankE matrix, for a flattened tensor.
    static Mat contract(const std::vector<Rat>& tensor, std::size_t rankE, std::size_t q,
                        const LatticeVec& s);
};

std::size_t tensorIndex(std::size_t rankE, std::size_t q, std::size_t i, std::size_t j,
                        std::size_t k);

/// Filtration of E tensor T_X at a ray: E^l tensor N + E^{l-1} tensor span(rho)
/// on the ambient space of dimension rankE * q, flattened as (i,k).
Filtration tensorTangentFiltration(const ToricSheaf& e, std::size_t rayIndex);

/// All phi : E -> E tensor N whose contractions phi_s respect the per-ray
/// containments at degree r: jump -<r,rho> for s in rho-perp and
/// jump -1-<r,rho> for an s with <s,rho> = 1.
GradedMapSpace preHiggsSpace(const ToricSheaf& e, const LatticeVec& r);

/// The Omega^1 variant: psi : E -> E tensor M with psi_b(E_a^l) inside
/// E_a^{l - <r,a> + delta_ab} for all ray pairs (a, b).
GradedMapSpace preHiggsSpaceCotangent(const ToricSheaf& e, const LatticeVec& r);

/// Splits a space of maps N -> N tensor N into its trace-free part and the
/// pure-trace part id tensor v. Requires rankE == q.
std::pair<GradedMapSpace, GradedMapSpace> traceSplit(const GradedMapSpace& v);

struct RangeEntry {
    GradedMapSpace space;                      // full space V_r
    std::optional<GradedMapSpace> traceFree;   // set when rankE == q
    std::size_t dim() const { return space.dim(); }
    std::size_t dimTraceFree() const { return traceFree ? traceFree->dim() : 0; }
};

/// All degrees admitting a nonzero (trace-free, if requested) map, with their
/// spaces, plus the convex hull of those degrees for surfaces.
struct HiggsRange {
    bool traceFreeMode = false;
    std::size_t q = 0;
    std::map<LatticeVec, RangeEntry, LvLess> points;
    LatticePolytope hull;  // rank 1 or 2; empty for empty ranges

    std::vector<LatticeVec> degrees() const;
    /// The space the range was filtered by: trace-free part in trace-free
    /// mode, the full space otherwise.
    const GradedMapSpace& effectiveSpace(const LatticeVec& r) const;
};

HiggsRange higgsRange(const ToricSheaf& e, bool traceFreeMode);

}  // namespace cohiggs
