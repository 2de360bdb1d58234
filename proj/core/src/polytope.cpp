#include "cohiggs/polytope.hpp"

#include <algorithm>
#include <set>

#include "cohiggs/errors.hpp"

namespace cohiggs {

namespace {

Int cross(const LatticeVec& o, const LatticeVec& a, const LatticeVec& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

// Rational linear inequalities a.x >= c used by the Fourier-Motzkin passes.
struct Ineq {
    std::vector<Rat> a;
    Rat c;
};

// Eliminates variable `var` from the system, keeping exactness.
std::vector<Ineq> eliminate(const std::vector<Ineq>& sys, std::size_t var) {
    std::vector<Ineq> pos, neg, out;
    for (const auto& q : sys) {
        int s = q.a[var].sign();
        if (s > 0) pos.push_back(q);
        else if (s < 0) neg.push_back(q);
        else out.push_back(q);
    }
    for (const auto& p : pos)
        for (const auto& n : neg) {
            // p scaled by -n_var plus n scaled by p_var cancels `var`.
            Rat sp = -n.a[var];
            Rat sn = p.a[var];
            Ineq q;
            q.a.resize(p.a.size());
            for (std::size_t i = 0; i < p.a.size(); ++i) q.a[i] = p.a[i] * sp + n.a[i] * sn;
            q.c = p.c * sp + n.c * sn;
            out.push_back(q);
        }
    return out;
}

bool feasible(std::vector<Ineq> sys, std::size_t nvars) {
    for (std::size_t v = 0; v < nvars; ++v) sys = eliminate(sys, v);
    for (const auto& q : sys)
        if (Rat(0) < q.c) return false;  // 0 >= c violated
    return true;
}

// Exact bounds of x[var] over the region; nullopt = unbounded on that side.
struct VarBounds {
    std::optional<Rat> lo, hi;
};

VarBounds boundsOf(const std::vector<Ineq>& sys, std::size_t nvars, std::size_t var) {
    std::vector<Ineq> s = sys;
    for (std::size_t v = 0; v < nvars; ++v)
        if (v != var) s = eliminate(s, v);
    VarBounds b;
    for (const auto& q : s) {
        int sg = q.a[var].sign();
        if (sg == 0) continue;
        Rat bound = q.c / q.a[var];
        if (sg > 0) {
            if (!b.lo || bound > *b.lo) b.lo = bound;
        } else {
            if (!b.hi || bound < *b.hi) b.hi = bound;
        }
    }
    return b;
}

std::vector<Ineq> toIneqs(const std::vector<std::pair<LatticeVec, Int>>& cs) {
    std::vector<Ineq> sys;
    sys.reserve(cs.size());
    for (const auto& [n, b] : cs) {
        Ineq q;
        q.a.reserve(n.size());
        for (const auto& x : n) q.a.push_back(Rat(x));
        q.c = Rat(b);
        sys.push_back(std::move(q));
    }
    return sys;
}

Int ceilRat(const Rat& r) {
    Int q = r.num() / r.den();
    if (r.num() > q * r.den()) ++q;
    return q;
}

Int floorRat(const Rat& r) {
    Int q = r.num() / r.den();
    if (r.num() < q * r.den()) --q;
    return q;
}

}  // namespace

bool LatticePolytope::containsPoint(const LatticeVec& p) const {
    if (vertices_.empty()) return false;
    if (p.size() != vertices_[0].size()) throw Error("point rank mismatch");
    if (vertices_.size() == 1) return p == vertices_[0];
    if (rank_ == 1) return vertices_[0][0] <= p[0] && p[0] <= vertices_[1][0];
    if (vertices_.size() == 2) {
        // Segment: collinear and within the bounding box.
        const auto& a = vertices_[0];
        const auto& b = vertices_[1];
        if (cross(a, b, p) != 0) return false;
        Int dot = (p[0] - a[0]) * (b[0] - a[0]) + (p[1] - a[1]) * (b[1] - a[1]);
        Int len2 = (b[0] - a[0]) * (b[0] - a[0]) + (b[1] - a[1]) * (b[1] - a[1]);
        return dot >= 0 && dot <= len2;
    }
    for (std::size_t k = 0; k < vertices_.size(); ++k) {
        const auto& a = vertices_[k];
        const auto& b = vertices_[(k + 1) % vertices_.size()];
        if (cross(a, b, p) < 0) return false;  // vertices are counterclockwise
    }
    return true;
}

std::vector<LatticeVec> LatticePolytope::latticePoints() const {
    if (vertices_.empty()) return {};
    HalfSpaceRegion box(vertices_[0].size());
    for (std::size_t i = 0; i < vertices_[0].size(); ++i) {
        Int lo = vertices_[0][i], hi = vertices_[0][i];
        for (const auto& v : vertices_) {
            lo = std::min(lo, v[i]);
            hi = std::max(hi, v[i]);
        }
        LatticeVec e(vertices_[0].size(), Int(0));
        e[i] = 1;
        box.add(e, lo);
        e[i] = -1;
        box.add(e, -hi);
    }
    std::vector<LatticeVec> out;
    for (const auto& p : box.latticePoints())
        if (containsPoint(p)) out.push_back(p);
    return out;
}

LatticePolytope convexHull2D(std::size_t rank, const std::vector<LatticeVec>& pts) {
    if (rank != 1 && rank != 2) throw Error("convex hull implemented for rank 1 and 2 only");
    if (pts.empty()) return LatticePolytope(rank, {});
    for (const auto& p : pts)
        if (p.size() != rank) throw Error("point rank mismatch");

    std::set<LatticeVec, LvLess> uniq(pts.begin(), pts.end());
    std::vector<LatticeVec> v(uniq.begin(), uniq.end());

    if (rank == 1) {
        if (v.size() == 1) return LatticePolytope(1, {v.front()});
        return LatticePolytope(1, {v.front(), v.back()});
    }
    if (v.size() == 1) return LatticePolytope(2, v);

    // Andrew monotone chain; collinear points are dropped.
    auto build = [&](bool lower) {
        std::vector<LatticeVec> chain;
        auto scan = [&](const LatticeVec& p) {
            while (chain.size() >= 2 && cross(chain[chain.size() - 2], chain.back(), p) <= 0)
                chain.pop_back();
            chain.push_back(p);
        };
        if (lower)
            for (const auto& p : v) scan(p);
        else
            for (auto it = v.rbegin(); it != v.rend(); ++it) scan(*it);
        return chain;
    };
    auto lower = build(true);
    auto upper = build(false);
    std::vector<LatticeVec> hull(lower.begin(), lower.end() - 1);
    hull.insert(hull.end(), upper.begin(), upper.end() - 1);
    if (hull.size() == 1) {
        // All points collinear: keep the two extreme ones.
        hull = {v.front(), v.back()};
        if (hull[0] == hull[1]) hull.pop_back();
    }
    // The chain starts at the lexicographically smallest point and runs
    // counterclockwise already.
    return LatticePolytope(2, hull);
}

std::vector<Face> faces2D(const LatticePolytope& p) {
    if (p.rank() != 2) throw Error("faces2D expects rank 2");
    if (p.isEmpty()) throw Error("faces of an empty polytope");
    const auto& vs = p.vertices();
    std::vector<Face> out;

    if (vs.size() == 1) {
        out.push_back({LatticePolytope(2, {vs[0]}), LatticeVec{1, 0}});
        return out;
    }

    auto edgeNormal = [](const LatticeVec& a, const LatticeVec& b) {
        // Inner normal of the directed edge a -> b of a counterclockwise polygon.
        LatticeVec d = subLv(b, a);
        return primitive(LatticeVec{-d[1], d[0]});
    };

    if (vs.size() == 2) {
        LatticeVec d = primitive(subLv(vs[1], vs[0]));
        out.push_back({LatticePolytope(2, {vs[0]}), d});
        out.push_back({LatticePolytope(2, {vs[1]}), negLv(d)});
        LatticeVec n{-d[1], d[0]};
        out.push_back({p, n});
        out.push_back({p, negLv(n)});
        return out;
    }

    const std::size_t n = vs.size();
    for (std::size_t k = 0; k < n; ++k) {
        // Vertex normal: interior of the normal cone at vs[k].
        LatticeVec prev = edgeNormal(vs[(k + n - 1) % n], vs[k]);
        LatticeVec next = edgeNormal(vs[k], vs[(k + 1) % n]);
        out.push_back({LatticePolytope(2, {vs[k]}), primitive(addLv(prev, next))});
    }
    for (std::size_t k = 0; k < n; ++k) {
        const auto& a = vs[k];
        const auto& b = vs[(k + 1) % n];
        std::vector<LatticeVec> edge{a, b};
        std::sort(edge.begin(), edge.end(), LvLess{});
        out.push_back({LatticePolytope(2, edge), edgeNormal(a, b)});
    }
    return out;
}

void HalfSpaceRegion::add(const LatticeVec& normal, const Int& bound) {
    if (normal.size() != rank_) throw Error("constraint rank mismatch");
    constraints_.emplace_back(normal, bound);
}

bool HalfSpaceRegion::contains(const LatticeVec& p) const {
    for (const auto& [n, b] : constraints_)
        if (pairing(p, n) < b) return false;
    return true;
}

bool HalfSpaceRegion::isBounded() const {
    // Bounded iff the recession cone {v : <v, n> >= 0 for all n} is {0}.
    std::vector<Ineq> cone = toIneqs(constraints_);
    for (auto& q : cone) q.c = Rat(0);
    for (std::size_t i = 0; i < rank_; ++i) {
        for (int sgn : {1, -1}) {
            // Probe the slice v_i = sgn: feasibility means a nonzero recession
            // direction exists.
            std::vector<Ineq> probe = cone;
            Ineq lo, hi;
            lo.a.assign(rank_, Rat(0));
            hi.a.assign(rank_, Rat(0));
            lo.a[i] = 1;
            lo.c = Rat(sgn);
            hi.a[i] = -1;
            hi.c = Rat(-sgn);
            probe.push_back(lo);
            probe.push_back(hi);
            if (feasible(std::move(probe), rank_)) return false;
        }
    }
    return true;
}

std::vector<LatticeVec> HalfSpaceRegion::latticePoints() const {
    if (rank_ == 0) throw Error("lattice points of a rank-0 region");
    std::vector<Ineq> sys = toIneqs(constraints_);
    if (!feasible(sys, rank_)) return {};
    if (!isBounded()) throw UnboundedRegion();

    // Exact bounding box per coordinate, then a filtered scan.
    std::vector<Int> lo(rank_), hi(rank_);
    for (std::size_t i = 0; i < rank_; ++i) {
        VarBounds b = boundsOf(sys, rank_, i);
        if (!b.lo || !b.hi) throw UnboundedRegion();
        lo[i] = ceilRat(*b.lo);
        hi[i] = floorRat(*b.hi);
        if (lo[i] > hi[i]) return {};
    }
    std::vector<LatticeVec> out;
    LatticeVec p(lo.begin(), lo.end());
    while (true) {
        if (contains(p)) out.push_back(p);
        std::size_t i = rank_;
        while (i > 0) {
            --i;
            if (p[i] < hi[i]) {
                ++p[i];
                for (std::size_t j = i + 1; j < rank_; ++j) p[j] = lo[j];
                break;
            }
            if (i == 0) return out;
        }
    }
}

bool raysPositivelySpan(const std::vector<LatticeVec>& rays, std::size_t rank) {
    if (rays.empty()) return false;
    std::vector<Ineq> cone;
    for (const auto& r : rays) {
        Ineq q;
        for (const auto& x : r) q.a.push_back(Rat(x));
        q.c = Rat(0);
        cone.push_back(std::move(q));
    }
    for (std::size_t i = 0; i < rank; ++i) {
        for (int sgn : {1, -1}) {
            std::vector<Ineq> probe = cone;
            Ineq lo, hi;
            lo.a.assign(rank, Rat(0));
            hi.a.assign(rank, Rat(0));
            lo.a[i] = 1;
            lo.c = Rat(sgn);
            hi.a[i] = -1;
            hi.c = Rat(-sgn);
            probe.push_back(lo);
            probe.push_back(hi);
            if (feasible(std::move(probe), rank)) return false;
        }
    }
    return true;
}

}  // namespace cohiggs
