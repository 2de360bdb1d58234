#pragma once

#include <vector>

#include "cohiggs/prehiggs.hpp"

namespace testsupport {

using namespace cohiggs;

/// Every nonzero dual vector with coordinates in [-bound, bound].
inline std::vector<LatticeVec> spanningDuals(std::size_t q, long long bound) {
    std::vector<LatticeVec> out;
    if (q == 1) {
        for (long long s = -bound; s <= bound; ++s)
            if (s != 0) out.push_back({Int(s)});
        return out;
    }
    std::vector<long long> idx(q, -bound);
    while (true) {
        LatticeVec v(q);
        bool zero = true;
        for (std::size_t i = 0; i < q; ++i) {
            v[i] = Int(idx[i]);
            zero = zero && idx[i] == 0;
        }
        if (!zero) out.push_back(v);
        std::size_t i = q;
        while (i > 0) {
            --i;
            if (idx[i] < bound) {
                ++idx[i];
                for (std::size_t j = i + 1; j < q; ++j) idx[j] = -bound;
                break;
            }
            if (i == 0) return out;
        }
    }
}

/// Rebuilds the containment conditions from scratch: for every ray, every
/// level in a window around the breakpoints and every dual vector in a
/// spanning set, with the strong target for vectors orthogonal to the ray.
/// Deliberately redundant; serves as the independent solver.
inline GradedMapSpace bruteForcePreHiggs(const ToricSheaf& e, const LatticeVec& r) {
    const std::size_t q = e.fan.rank();
    const std::size_t n = e.rankE;
    Mat rows(0, n * n * q);
    auto duals = spanningDuals(q, 3);

    for (std::size_t ri = 0; ri < e.fan.rayCount(); ++ri) {
        const LatticeVec& rho = e.fan.ray(ri);
        const Filtration& filt = e.filtrations[ri];
        Int c = pairing(r, rho);
        Int lo = filt.fullLevel() - 2;
        Int hi = filt.zeroLevel() + 2;
        for (Int level = lo; level <= hi; ++level) {
            Subspace value = filt.at(level);
            if (value.isZero()) continue;
            for (const auto& s : duals) {
                Int jump = pairing(s, rho) == 0 ? Int(-c) : Int(-c - 1);
                Subspace target = filt.at(level + jump);
                if (target.isFull()) continue;
                Subspace k = target.complement();
                for (std::size_t vi = 0; vi < value.dim(); ++vi) {
                    auto v = value.basis().row(vi);
                    for (std::size_t ki = 0; ki < k.dim(); ++ki) {
                        auto kr = k.basis().row(ki);
                        std::vector<Rat> cond(n * n * q, Rat(0));
                        for (std::size_t i = 0; i < n; ++i)
                            for (std::size_t j = 0; j < n; ++j)
                                for (std::size_t kk = 0; kk < q; ++kk)
                                    cond[tensorIndex(n, q, i, j, kk)] +=
                                        kr[i] * v[j] * Rat(s[kk]);
                        rows.appendRow(cond);
                    }
                }
            }
        }
    }
    GradedMapSpace out;
    out.degree = r;
    out.rankE = n;
    out.q = q;
    out.basis = rows.rows() ? Subspace::kernel(rows) : Subspace::full(n * n * q);
    return out;
}

/// Raw containment re-verification of a single tensor against one dual vector.
inline bool satisfiesContainments(const ToricSheaf& e, const LatticeVec& r,
                                  const std::vector<Rat>& tensor, const LatticeVec& s) {
    const std::size_t q = e.fan.rank();
    const std::size_t n = e.rankE;
    for (std::size_t ri = 0; ri < e.fan.rayCount(); ++ri) {
        const LatticeVec& rho = e.fan.ray(ri);
        const Filtration& filt = e.filtrations[ri];
        Int c = pairing(r, rho);
        Int jump = pairing(s, rho) == 0 ? Int(-c) : Int(-c - 1);
        Mat phiS = GradedMapSpace::contract(tensor, n, q, s);
        Int lo = filt.fullLevel() - 1;
        Int hi = filt.zeroLevel() + 1;
        for (Int level = lo; level <= hi; ++level) {
            Subspace value = filt.at(level);
            Subspace target = filt.at(level + jump);
            for (std::size_t vi = 0; vi < value.dim(); ++vi)
                if (!target.contains(phiS.apply(value.basis().row(vi)))) return false;
        }
    }
    return true;
}

}  // namespace testsupport
