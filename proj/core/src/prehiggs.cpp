#include "cohiggs/prehiggs.hpp"

#include "cohiggs/errors.hpp"

namespace cohiggs {

std::size_t tensorIndex(std::size_t rankE, std::size_t q, std::size_t i, std::size_t j,
                        std::size_t k) {
    return (i * rankE + j) * q + k;
}

Mat GradedMapSpace::contract(const std::vector<Rat>& tensor, std::size_t rankE, std::size_t q,
                             const LatticeVec& s) {
    if (s.size() != q) throw Error("contraction vector rank mismatch");
    Mat m(rankE, rankE);
    for (std::size_t i = 0; i < rankE; ++i)
        for (std::size_t j = 0; j < rankE; ++j) {
            Rat acc;
            for (std::size_t k = 0; k < q; ++k)
                acc += tensor[tensorIndex(rankE, q, i, j, k)] * Rat(s[k]);
            m.at(i, j) = acc;
        }
    return m;
}

Filtration tensorTangentFiltration(const ToricSheaf& e, std::size_t rayIndex) {
    if (rayIndex >= e.fan.rayCount()) throw Error("unknown ray index");
    const std::size_t q = e.fan.rank();
    const std::size_t n = e.rankE;
    const Filtration& filt = e.filtrations[rayIndex];
    const LatticeVec& rho = e.fan.ray(rayIndex);

    auto tensorSpace = [&](const Subspace& eur, const Subspace& prev) {
        // E^l tensor N + E^{l-1} tensor span(rho) inside Q^{n*q}, flat (i,k).
        Mat rows(0, n * q);
        for (std::size_t vi = 0; vi < eur.dim(); ++vi) {
            auto v = eur.basis().row(vi);
            for (std::size_t k = 0; k < q; ++k) {
                std::vector<Rat> row(n * q, Rat(0));
                for (std::size_t i = 0; i < n; ++i) row[i * q + k] = v[i];
                rows.appendRow(row);
            }
        }
        for (std::size_t vi = 0; vi < prev.dim(); ++vi) {
            auto v = prev.basis().row(vi);
            std::vector<Rat> row(n * q, Rat(0));
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t k = 0; k < q; ++k) row[i * q + k] = v[i] * Rat(rho[k]);
            rows.appendRow(row);
        }
        return Subspace::span(n * q, rows);
    };

    // Breakpoints of the tensor filtration lie among the E levels and their
    // shifts by one.
    std::vector<Int> candidates;
    for (const auto& [l, sp] : filt.breakpoints()) {
        candidates.push_back(l);
        candidates.push_back(l + 1);
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    std::vector<std::pair<Int, Subspace>> steps;
    for (const auto& l : candidates)
        steps.push_back({l, tensorSpace(filt.at(l), filt.at(l - 1))});
    return Filtration(n * q, std::move(steps));
}

namespace {

// Accumulates the linear conditions "contract(phi, s) maps value into target"
// on the flattened tensor coordinates.
void addContractionConstraints(Mat& rows, std::size_t n, std::size_t q, const LatticeVec& s,
                               const Subspace& value, const Subspace& target) {
    if (target.isFull()) return;
    Subspace k = target.complement();
    for (std::size_t vi = 0; vi < value.dim(); ++vi) {
        auto v = value.basis().row(vi);
        for (std::size_t ki = 0; ki < k.dim(); ++ki) {
            auto kr = k.basis().row(ki);
            std::vector<Rat> cond(n * n * q, Rat(0));
            for (std::size_t i = 0; i < n; ++i) {
                if (kr[i].isZero()) continue;
                for (std::size_t j = 0; j < n; ++j) {
                    if (v[j].isZero()) continue;
                    for (std::size_t kk = 0; kk < q; ++kk)
                        cond[tensorIndex(n, q, i, j, kk)] += kr[i] * v[j] * Rat(s[kk]);
                }
            }
            rows.appendRow(cond);
        }
    }
}

GradedMapSpace solve(const ToricSheaf& e, const LatticeVec& r, const Mat& rows) {
    GradedMapSpace out;
    out.degree = r;
    out.rankE = e.rankE;
    out.q = e.fan.rank();
    const std::size_t unknowns = e.rankE * e.rankE * e.fan.rank();
    out.basis = rows.rows() ? Subspace::kernel(rows) : Subspace::full(unknowns);
    return out;
}

}  // namespace

GradedMapSpace preHiggsSpace(const ToricSheaf& e, const LatticeVec& r) {
    const std::size_t q = e.fan.rank();
    const std::size_t n = e.rankE;
    if (r.size() != q) throw Error("degree rank mismatch");

    Mat rows(0, n * n * q);
    for (std::size_t ri = 0; ri < e.fan.rayCount(); ++ri) {
        const LatticeVec& rho = e.fan.ray(ri);
        const Filtration& filt = e.filtrations[ri];
        Int c = pairing(r, rho);
        DualData dual = dualDataFor(rho);
        for (const auto& [value, lEnd] : filt.constraintIntervals()) {
            for (const auto& s : dual.sPerp)
                addContractionConstraints(rows, n, q, s, value, filt.at(lEnd - c));
            addContractionConstraints(rows, n, q, dual.sOne, value, filt.at(lEnd - 1 - c));
        }
    }
    return solve(e, r, rows);
}

GradedMapSpace preHiggsSpaceCotangent(const ToricSheaf& e, const LatticeVec& r) {
    const std::size_t q = e.fan.rank();
    const std::size_t n = e.rankE;
    if (r.size() != q) throw Error("degree rank mismatch");

    Mat rows(0, n * n * q);
    for (std::size_t ai = 0; ai < e.fan.rayCount(); ++ai) {
        const LatticeVec& a = e.fan.ray(ai);
        const Filtration& filt = e.filtrations[ai];
        Int c = pairing(r, a);
        for (std::size_t bi = 0; bi < e.fan.rayCount(); ++bi) {
            Int jump = -c + (ai == bi ? 1 : 0);
            // The contraction of E tensor M by the ray b in N.
            const LatticeVec& b = e.fan.ray(bi);
            for (const auto& [value, lEnd] : filt.constraintIntervals())
                addContractionConstraints(rows, n, q, b, value, filt.at(lEnd + jump));
        }
    }
    return solve(e, r, rows);
}

std::pair<GradedMapSpace, GradedMapSpace> traceSplit(const GradedMapSpace& v) {
    const std::size_t n = v.rankE;
    const std::size_t q = v.q;
    if (n != q) throw Error("trace split requires rankE == q");

    Mat tfRows(0, n * n * q);
    Mat ptRows(0, n * n * q);
    for (std::size_t b = 0; b < v.dim(); ++b) {
        auto x = v.basisTensor(b);
        std::vector<Rat> pure(n * n * q, Rat(0));
        for (std::size_t k = 0; k < q; ++k) {
            Rat tr;
            for (std::size_t i = 0; i < n; ++i) tr += x[tensorIndex(n, q, i, i, k)];
            tr /= Rat(Int(q));
            for (std::size_t i = 0; i < n; ++i) pure[tensorIndex(n, q, i, i, k)] = tr;
        }
        std::vector<Rat> tf(n * n * q);
        for (std::size_t idx = 0; idx < x.size(); ++idx) tf[idx] = x[idx] - pure[idx];
        tfRows.appendRow(tf);
        ptRows.appendRow(pure);
    }
    GradedMapSpace tf{v.degree, n, q, Subspace::span(n * n * q, tfRows)};
    GradedMapSpace pt{v.degree, n, q, Subspace::span(n * n * q, ptRows)};
    return {tf, pt};
}

std::vector<LatticeVec> HiggsRange::degrees() const {
    std::vector<LatticeVec> out;
    out.reserve(points.size());
    for (const auto& [r, entry] : points) out.push_back(r);
    return out;
}

const GradedMapSpace& HiggsRange::effectiveSpace(const LatticeVec& r) const {
    auto it = points.find(r);
    if (it == points.end()) throw Error("degree not in range: " + lvStr(r));
    return traceFreeMode ? *it->second.traceFree : it->second.space;
}

HiggsRange higgsRange(const ToricSheaf& e, bool traceFreeMode) {
    const std::size_t q = e.fan.rank();
    HiggsRange range;
    range.traceFreeMode = traceFreeMode;
    range.q = q;
    if (e.rankE == 0) return range;
    if (traceFreeMode && e.rankE != q)
        throw Error("trace-free mode requires rankE == q");

    // Candidate degrees: <r,rho> >= full - zero per ray; bounded for complete
    // fans, UnboundedRegion otherwise.
    HalfSpaceRegion region(q);
    for (std::size_t i = 0; i < e.fan.rayCount(); ++i)
        region.add(e.fan.ray(i),
                   e.filtrations[i].fullLevel() - e.filtrations[i].zeroLevel());

    std::vector<LatticeVec> admissible;
    for (const auto& r : region.latticePoints()) {
        GradedMapSpace v = preHiggsSpace(e, r);
        if (v.dim() == 0) continue;
        RangeEntry entry;
        entry.space = v;
        if (e.rankE == q) {
            auto [tf, pt] = traceSplit(v);
            entry.traceFree = tf;
        }
        if (traceFreeMode && entry.dimTraceFree() == 0) continue;
        admissible.push_back(r);
        range.points.emplace(r, std::move(entry));
    }
    if (q <= 2 && !admissible.empty()) range.hull = convexHull2D(q, admissible);
    return range;
}

}  // namespace cohiggs
