#include "cohiggs/klyachko.hpp"

#include <algorithm>
#include <cctype>

#include "cohiggs/errors.hpp"

namespace cohiggs {

Filtration::Filtration(std::size_t ambientDim, std::vector<std::pair<Int, Subspace>> breakpoints)
    : ambient_(ambientDim), steps_(std::move(breakpoints)) {
    std::sort(steps_.begin(), steps_.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    // Drop steps that do not change the value; the implicit first value is full.
    std::vector<std::pair<Int, Subspace>> cleaned;
    Subspace prev = Subspace::full(ambient_);
    for (auto& [l, sp] : steps_) {
        if (sp.ambientDim() != ambient_) throw Error("filtration step ambient mismatch");
        if (sp == prev) continue;
        if (!cleaned.empty() && cleaned.back().first == l) throw Error("duplicate filtration level");
        if (!prev.contains(sp)) throw Error("filtration must be decreasing");
        cleaned.push_back({l, sp});
        prev = sp;
    }
    steps_ = std::move(cleaned);
    if (ambient_ > 0 && (steps_.empty() || !steps_.back().second.isZero()))
        throw Error("filtration must eventually be zero");
}

Subspace Filtration::at(const Int& level) const {
    Subspace cur = Subspace::full(ambient_);
    for (const auto& [l, sp] : steps_) {
        if (level < l) break;
        cur = sp;
    }
    return cur;
}

Int Filtration::fullLevel() const {
    if (steps_.empty()) return 0;
    return steps_.front().first - 1;
}

Int Filtration::zeroLevel() const {
    if (steps_.empty()) return 0;
    return steps_.back().first;
}

Filtration Filtration::shifted(const Int& delta) const {
    std::vector<std::pair<Int, Subspace>> moved = steps_;
    for (auto& [l, sp] : moved) l += delta;
    Filtration out;
    out.ambient_ = ambient_;
    out.steps_ = std::move(moved);
    return out;
}

std::vector<std::pair<Subspace, Int>> Filtration::constraintIntervals() const {
    std::vector<std::pair<Subspace, Int>> out;
    Subspace prev = Subspace::full(ambient_);
    for (const auto& [l, sp] : steps_) {
        if (!prev.isZero()) out.push_back({prev, l - 1});
        prev = sp;
    }
    return out;
}

ToricSheaf::ToricSheaf(Fan f, std::size_t rank, std::vector<Filtration> filts)
    : fan(std::move(f)), rankE(rank), filtrations(std::move(filts)) {
    if (filtrations.size() != fan.rayCount())
        throw Error("one filtration per ray required");
    for (const auto& filt : filtrations)
        if (filt.ambientDim() != rankE) throw Error("filtration ambient dim must equal rank");
}

ToricSheaf tangentSheaf(const Fan& f) {
    const std::size_t q = f.rank();
    std::vector<Filtration> filts;
    for (const auto& rho : f.rays()) {
        Mat row(0, q);
        row.appendRow(toRatVec(rho));
        filts.emplace_back(q, std::vector<std::pair<Int, Subspace>>{
                                  {Int(1), Subspace::span(q, row)},
                                  {Int(2), Subspace::zero(q)},
                              });
    }
    return ToricSheaf(f, q, std::move(filts));
}

ToricSheaf cotangentSheaf(const Fan& f) {
    const std::size_t q = f.rank();
    std::vector<Filtration> filts;
    for (const auto& rho : f.rays()) {
        filts.emplace_back(q, std::vector<std::pair<Int, Subspace>>{
                                  {Int(0), Subspace::kernel(Mat::fromRows({toRatVec(rho)}))},
                                  {Int(1), Subspace::zero(q)},
                              });
    }
    return ToricSheaf(f, q, std::move(filts));
}

ToricSheaf lineBundle(const Fan& f, const std::vector<Int>& coeffs) {
    if (coeffs.size() != f.rayCount()) throw Error("one coefficient per ray required");
    std::vector<Filtration> filts;
    for (const auto& c : coeffs)
        filts.emplace_back(1, std::vector<std::pair<Int, Subspace>>{{c + 1, Subspace::zero(1)}});
    return ToricSheaf(f, 1, std::move(filts));
}

ToricSheaf tensorLineBundle(const ToricSheaf& s, const std::vector<Int>& coeffs) {
    if (coeffs.size() != s.fan.rayCount()) throw Error("one coefficient per ray required");
    std::vector<Filtration> filts;
    for (std::size_t i = 0; i < s.filtrations.size(); ++i)
        filts.push_back(s.filtrations[i].shifted(coeffs[i]));
    return ToricSheaf(s.fan, s.rankE, std::move(filts));
}

Subspace sectionSpace(const ToricSheaf& s, const LatticeVec& r) {
    if (r.size() != s.fan.rank()) throw Error("degree rank mismatch");
    Subspace acc = Subspace::full(s.rankE);
    for (std::size_t i = 0; i < s.fan.rayCount(); ++i)
        acc = intersect(acc, s.filtrations[i].at(-pairing(r, s.fan.ray(i))));
    return acc;
}

Mat MapSpace::matrix(std::size_t basisIndex) const {
    Mat m(dimTo, dimFrom);
    auto row = basis.basis().row(basisIndex);
    for (std::size_t a = 0; a < dimTo; ++a)
        for (std::size_t j = 0; j < dimFrom; ++j) m.at(a, j) = row[a * dimFrom + j];
    return m;
}

MapSpace homSpace(const ToricSheaf& e, const ToricSheaf& f, const LatticeVec& r) {
    if (!(e.fan == f.fan)) throw Error("hom space requires a common fan");
    if (r.size() != e.fan.rank()) throw Error("degree rank mismatch");
    const std::size_t n = e.rankE;   // source dim
    const std::size_t m = f.rankE;   // target dim
    const std::size_t unknowns = m * n;

    // Linear conditions K (psi v) = 0 accumulated over all rays and intervals,
    // with K the complement rows of the target space.
    Mat rows(0, unknowns);
    for (std::size_t ri = 0; ri < e.fan.rayCount(); ++ri) {
        Int c = pairing(r, e.fan.ray(ri));
        for (const auto& [value, lEnd] : e.filtrations[ri].constraintIntervals()) {
            Subspace target = f.filtrations[ri].at(lEnd - c);
            if (target.isFull()) continue;
            Subspace k = target.complement();
            for (std::size_t vi = 0; vi < value.dim(); ++vi) {
                auto v = value.basis().row(vi);
                for (std::size_t ki = 0; ki < k.dim(); ++ki) {
                    auto kr = k.basis().row(ki);
                    std::vector<Rat> cond(unknowns, Rat(0));
                    for (std::size_t a = 0; a < m; ++a) {
                        if (kr[a].isZero()) continue;
                        for (std::size_t j = 0; j < n; ++j)
                            cond[a * n + j] += kr[a] * v[j];
                    }
                    rows.appendRow(cond);
                }
            }
        }
    }
    MapSpace out;
    out.degree = r;
    out.dimFrom = n;
    out.dimTo = m;
    out.basis = rows.rows() ? Subspace::kernel(rows) : Subspace::full(unknowns);
    return out;
}

HalfSpaceRegion homDegreeRegion(const ToricSheaf& e, const ToricSheaf& f) {
    if (!(e.fan == f.fan)) throw Error("hom degree region requires a common fan");
    HalfSpaceRegion region(e.fan.rank());
    for (std::size_t i = 0; i < e.fan.rayCount(); ++i) {
        // A nonzero map needs phi(E) inside a nonzero step of F at the full
        // level of E, i.e. <r,rho> >= full_E - zero_F + 1.
        Int bound = e.filtrations[i].fullLevel() - f.filtrations[i].zeroLevel() + 1;
        region.add(e.fan.ray(i), bound);
    }
    return region;
}

std::vector<LatticeVec> homDegreeCandidates(const ToricSheaf& e, const ToricSheaf& f) {
    return homDegreeRegion(e, f).latticePoints();
}

std::vector<LatticeVec> sectionDegreeCandidates(const ToricSheaf& s) {
    HalfSpaceRegion region(s.fan.rank());
    for (std::size_t i = 0; i < s.fan.rayCount(); ++i)
        region.add(s.fan.ray(i), Int(1) - s.filtrations[i].zeroLevel());
    return region.latticePoints();
}

ToricSheaf parseSheafSpec(const Fan& f, const std::string& spec) {
    auto parseCoeffs = [&](const std::string& body) {
        std::vector<Int> coeffs;
        std::string cur;
        auto push = [&] {
            try {
                coeffs.emplace_back(cur);
            } catch (const std::exception&) {
                throw Error("bad integer in sheaf spec: " + cur);
            }
            cur.clear();
        };
        for (char ch : body) {
            if (ch == ',') {
                push();
            } else if (!std::isspace(static_cast<unsigned char>(ch))) {
                cur += ch;
            }
        }
        if (!cur.empty()) push();
        if (coeffs.size() != f.rayCount())
            throw Error("sheaf spec needs one coefficient per ray (" +
                        std::to_string(f.rayCount()) + ")");
        return coeffs;
    };

    std::string base = spec;
    std::string twist;
    auto star = spec.find('*');
    if (star != std::string::npos) {
        base = spec.substr(0, star);
        twist = spec.substr(star + 1);
    }

    ToricSheaf sheaf;
    if (base == "tangent") {
        sheaf = tangentSheaf(f);
    } else if (base == "cotangent") {
        sheaf = cotangentSheaf(f);
    } else if (base.rfind("O(", 0) == 0 && base.back() == ')') {
        sheaf = lineBundle(f, parseCoeffs(base.substr(2, base.size() - 3)));
    } else {
        throw Error("unknown sheaf spec: " + spec);
    }
    if (!twist.empty()) {
        if (twist.rfind("O(", 0) != 0 || twist.back() != ')')
            throw Error("twist must be O(...): " + spec);
        sheaf = tensorLineBundle(sheaf, parseCoeffs(twist.substr(2, twist.size() - 3)));
    }
    return sheaf;
}

}  // namespace cohiggs
