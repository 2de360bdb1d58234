#include "cohiggs/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "cohiggs/errors.hpp"
#include "cohiggs/matrix.hpp"

namespace cohiggs {

namespace mp = boost::multiprecision;

Int pairing(const LatticeVec& r, const LatticeVec& n) {
    if (r.size() != n.size()) throw Error("pairing: rank mismatch");
    Int acc = 0;
    for (std::size_t i = 0; i < r.size(); ++i) acc += r[i] * n[i];
    return acc;
}

LatticeVec addLv(const LatticeVec& a, const LatticeVec& b) {
    if (a.size() != b.size()) throw Error("lattice vector sum: rank mismatch");
    LatticeVec c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
    return c;
}

LatticeVec subLv(const LatticeVec& a, const LatticeVec& b) {
    if (a.size() != b.size()) throw Error("lattice vector difference: rank mismatch");
    LatticeVec c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
    return c;
}

LatticeVec negLv(const LatticeVec& a) {
    LatticeVec c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = -a[i];
    return c;
}

bool isZeroLv(const LatticeVec& a) {
    return std::all_of(a.begin(), a.end(), [](const Int& x) { return x == 0; });
}

Int gcdLv(const LatticeVec& a) {
    Int g = 0;
    for (const auto& x : a) g = mp::gcd(g, x < 0 ? Int(-x) : x);
    return g;
}

LatticeVec primitive(const LatticeVec& a) {
    Int g = gcdLv(a);
    if (g <= 1) return a;
    LatticeVec c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] / g;
    return c;
}

std::string lvStr(const LatticeVec& a) {
    std::string s = "(";
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i) s += ",";
        s += a[i].str();
    }
    return s + ")";
}

std::vector<Rat> toRatVec(const LatticeVec& a) {
    std::vector<Rat> v(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) v[i] = Rat(a[i]);
    return v;
}

bool LvLess::operator()(const LatticeVec& a, const LatticeVec& b) const {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

DualData dualDataFor(const LatticeVec& rho) {
    const std::size_t q = rho.size();
    if (q == 0 || isZeroLv(rho)) throw Error("dual data of zero vector");
    if (gcdLv(rho) != 1) throw Error("dual data requires a primitive vector");

    // Column-reduce rho to (1, 0, ..., 0) while tracking the inverse moves on
    // the standard dual basis. U starts as the identity on M.
    std::vector<LatticeVec> u(q);
    for (std::size_t i = 0; i < q; ++i) {
        u[i] = LatticeVec(q, Int(0));
        u[i][i] = 1;
    }
    LatticeVec w = rho;
    // Reduce pairs (w[0], w[j]) by extended gcd.
    for (std::size_t j = 1; j < q; ++j) {
        Int a = w[0], b = w[j];
        if (b == 0) continue;
        // Extended gcd over the pair.
        Int x0 = 1, y0 = 0, x1 = 0, y1 = 1;
        while (b != 0) {
            Int qt = a / b;
            Int r = a - qt * b;
            Int nx = x0 - qt * x1, ny = y0 - qt * y1;
            a = b; b = r;
            x0 = x1; y0 = y1;
            x1 = nx; y1 = ny;
        }
        // a = gcd, x0*w0 + y0*wj = a. Replace the dual pair accordingly.
        Int w0 = w[0], wj = w[j];
        LatticeVec u0 = u[0], uj = u[j];
        LatticeVec nu0(q), nuj(q);
        Int p = w0 / a, t = wj / a;
        for (std::size_t k = 0; k < q; ++k) {
            nu0[k] = x0 * u0[k] + y0 * uj[k];
            nuj[k] = -t * u0[k] + p * uj[k];
        }
        u[0] = nu0;
        u[j] = nuj;
        w[0] = a;
        w[j] = 0;
    }
    if (w[0] < 0) {
        for (auto& x : u[0]) x = -x;
        w[0] = -w[0];
    }
    DualData d;
    d.sOne = u[0];
    d.sPerp.assign(u.begin() + 1, u.end());
    if (pairing(d.sOne, rho) != 1) throw Error("dual data construction failed");
    for (const auto& s : d.sPerp)
        if (pairing(s, rho) != 0) throw Error("dual data construction failed");
    return d;
}

namespace {

// Angular comparison without floating point: classify by half-plane, then by
// cross product within the half-plane. Order starts at angle 0 (positive x).
int halfPlane(const LatticeVec& v) {
    if (v[1] > 0 || (v[1] == 0 && v[0] > 0)) return 0;
    return 1;
}

bool angleLess(const LatticeVec& a, const LatticeVec& b) {
    int ha = halfPlane(a), hb = halfPlane(b);
    if (ha != hb) return ha < hb;
    Int cross = a[0] * b[1] - a[1] * b[0];
    return cross > 0;
}

}  // namespace

Fan::Fan(std::size_t rank, std::vector<LatticeVec> rays,
         std::vector<std::vector<std::size_t>> maxCones)
    : rank_(rank), rays_(std::move(rays)), maxCones_(std::move(maxCones)) {
    std::set<LatticeVec, LvLess> seen;
    for (const auto& r : rays_) {
        if (r.size() != rank_) throw Error("ray rank mismatch");
        if (isZeroLv(r)) throw Error("zero ray");
        if (gcdLv(r) != 1) throw Error("ray generators must be primitive");
        if (!seen.insert(r).second) throw Error("duplicate ray");
    }
    if (maxCones_.empty()) {
        if (rank_ == 1) {
            for (std::size_t i = 0; i < rays_.size(); ++i) maxCones_.push_back({i});
        } else if (rank_ == 2 && rays_.size() >= 2) {
            std::vector<std::size_t> order(rays_.size());
            std::iota(order.begin(), order.end(), 0);
            std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
                return angleLess(rays_[i], rays_[j]);
            });
            for (std::size_t k = 0; k < order.size(); ++k)
                maxCones_.push_back({order[k], order[(k + 1) % order.size()]});
        }
    }
}

bool Fan::isComplete() const {
    if (rays_.empty()) return false;
    if (rank_ == 1) {
        bool pos = false, neg = false;
        for (const auto& r : rays_) (r[0] > 0 ? pos : neg) = true;
        return pos && neg;
    }
    if (rank_ == 2) {
        // Positively spanning iff every cyclic angular gap is < pi,
        // i.e. cross(a, b) > 0 for all angularly consecutive pairs.
        if (rays_.size() < 3) return false;
        std::vector<LatticeVec> sorted = rays_;
        std::sort(sorted.begin(), sorted.end(), angleLess);
        for (std::size_t k = 0; k < sorted.size(); ++k) {
            const auto& a = sorted[k];
            const auto& b = sorted[(k + 1) % sorted.size()];
            if (a[0] * b[1] - a[1] * b[0] <= 0) return false;
        }
        return true;
    }
    return raysPositivelySpan(rays_, rank_);
}

bool Fan::isSmooth() const {
    if (rank_ == 1) return true;
    if (rank_ != 2) throw Error("smoothness check implemented for rank <= 2 only");
    for (const auto& cone : maxCones_) {
        if (cone.size() != 2) return false;
        const auto& a = rays_[cone[0]];
        const auto& b = rays_[cone[1]];
        Int d = a[0] * b[1] - a[1] * b[0];
        if (d != 1 && d != -1) return false;
    }
    return !maxCones_.empty();
}

std::size_t Fan::rayIndex(const LatticeVec& rho) const {
    for (std::size_t i = 0; i < rays_.size(); ++i)
        if (rays_[i] == rho) return i;
    throw Error("unknown ray " + lvStr(rho));
}

bool fansEquivalent(const Fan& a, const Fan& b) {
    if (a.rank() != 2 || b.rank() != 2) throw Error("fan equivalence implemented for rank 2");
    if (a.rayCount() != b.rayCount()) return false;
    if (a.rayCount() < 2) return a.rays() == b.rays();

    std::set<LatticeVec, LvLess> target(b.rays().begin(), b.rays().end());
    const auto& r0 = a.ray(0);
    // Find a second ray independent from the first.
    std::size_t second = 1;
    while (second < a.rayCount() && r0[0] * a.ray(second)[1] - r0[1] * a.ray(second)[0] == 0)
        ++second;
    if (second == a.rayCount()) return false;
    const auto& r1 = a.ray(second);
    Int dr = r0[0] * r1[1] - r0[1] * r1[0];

    for (const auto& u : b.rays()) {
        for (const auto& v : b.rays()) {
            if (u == v) continue;
            // Solve T r0 = u, T r1 = v over Q; accept integral T with |det| = 1.
            // T = [u v] [r0 r1]^{-1}, all 2x2.
            Int t00n = u[0] * r1[1] - v[0] * r0[1];
            Int t01n = v[0] * r0[0] - u[0] * r1[0];
            Int t10n = u[1] * r1[1] - v[1] * r0[1];
            Int t11n = v[1] * r0[0] - u[1] * r1[0];
            if (t00n % dr != 0 || t01n % dr != 0 || t10n % dr != 0 || t11n % dr != 0) continue;
            Int t00 = t00n / dr, t01 = t01n / dr, t10 = t10n / dr, t11 = t11n / dr;
            Int dt = t00 * t11 - t01 * t10;
            if (dt != 1 && dt != -1) continue;
            bool ok = true;
            std::set<LatticeVec, LvLess> image;
            for (const auto& r : a.rays()) {
                LatticeVec m{t00 * r[0] + t01 * r[1], t10 * r[0] + t11 * r[1]};
                if (!target.count(m) || !image.insert(m).second) {
                    ok = false;
                    break;
                }
            }
            if (ok) return true;
        }
    }
    return false;
}

}  // namespace cohiggs
