#include "cohiggs/catalog.hpp"

#include <algorithm>

#include "cohiggs/errors.hpp"

namespace cohiggs {

SurfaceId SurfaceId::parse(const std::string& s) {
    auto withParam = [&](const std::string& prefix) -> std::optional<Int> {
        if (s.rfind(prefix + ":", 0) != 0) return std::nullopt;
        try {
            return Int(s.substr(prefix.size() + 1));
        } catch (const std::exception&) {
            throw Error("bad surface parameter in " + s);
        }
    };
    if (s == "P1") return {Kind::P1};
    if (s == "P2") return {Kind::P2};
    if (s == "P1xP1") return {Kind::P1xP1};
    if (s == "P2'") return {Kind::P2p};
    if (s == "P2''") return {Kind::P2pp};
    if (s == "P2'''") return {Kind::P2ppp};
    if (auto a = withParam("Hirz")) return {Kind::Hirz, *a};
    if (auto a = withParam("Pa")) return {Kind::Pa, *a};
    throw Error("unknown surface id: " + s);
}

std::string SurfaceId::str() const {
    switch (kind) {
        case Kind::P1: return "P1";
        case Kind::P2: return "P2";
        case Kind::Pa: return "Pa:" + a.str();
        case Kind::Hirz: return "Hirz:" + a.str();
        case Kind::P1xP1: return "P1xP1";
        case Kind::P2p: return "P2'";
        case Kind::P2pp: return "P2''";
        case Kind::P2ppp: return "P2'''";
    }
    return "?";
}

std::vector<std::string> catalogNames() {
    return {"P1", "P2", "Hirz:a", "P1xP1", "P2'", "P2''", "P2'''", "Pa:a"};
}

namespace {

Fan p2Fan() {
    return Fan(2, {{Int(1), Int(0)}, {Int(0), Int(1)}, {Int(-1), Int(-1)}});
}

}  // namespace

Fan makeSurface(const SurfaceId& id) {
    using K = SurfaceId::Kind;
    Fan f;
    switch (id.kind) {
        case K::P1:
            f = Fan(1, {{Int(1)}, {Int(-1)}});
            break;
        case K::P2:
            f = p2Fan();
            break;
        case K::Pa:
            if (id.a < 1) throw Error("Pa requires a >= 1");
            f = Fan(2, {{Int(-1), -id.a}, {Int(1), Int(0)}, {Int(0), Int(1)}});
            break;
        case K::Hirz:
            if (id.a < 1) throw Error("Hirzebruch surface requires a >= 1");
            f = Fan(2, {{Int(-1), -id.a}, {Int(1), Int(0)}, {Int(0), Int(1)}, {Int(0), Int(-1)}});
            break;
        case K::P1xP1:
            f = Fan(2, {{Int(1), Int(0)}, {Int(0), Int(1)}, {Int(-1), Int(0)}, {Int(0), Int(-1)}});
            break;
        case K::P2p:
        case K::P2pp:
        case K::P2ppp: {
            // Blow-up chain fixed by the reference figures: corners of P2 in
            // the order (c,a), then (b,c), then (a,b).
            f = p2Fan();
            LatticeVec a{Int(1), Int(0)}, b{Int(0), Int(1)}, c{Int(-1), Int(-1)};
            f = blowUp(f, coneIndexOf(f, c, a));
            if (id.kind != K::P2p) f = blowUp(f, coneIndexOf(f, b, c));
            if (id.kind == K::P2ppp) f = blowUp(f, coneIndexOf(f, a, b));
            break;
        }
    }
    if (!f.isComplete()) throw Error("catalog fan is not complete");
    if (id.kind != K::Pa && f.rank() == 2 && !f.isSmooth())
        throw Error("catalog fan is not smooth");
    return f;
}

Fan blowUp(const Fan& f, std::size_t coneIndex) {
    if (f.rank() != 2) throw Error("blow-up implemented for surfaces");
    if (coneIndex >= f.maxCones().size()) throw Error("invalid cone index");
    const auto& cone = f.maxCones()[coneIndex];
    if (cone.size() != 2) throw Error("blow-up needs a two-dimensional cone");
    const auto& rho = f.ray(cone[0]);
    const auto& tau = f.ray(cone[1]);
    Int d = rho[0] * tau[1] - rho[1] * tau[0];
    if (d != 1 && d != -1) throw Error("blow-up requires a smooth cone");
    std::vector<LatticeVec> rays = f.rays();
    rays.push_back(addLv(rho, tau));
    return Fan(2, std::move(rays));
}

std::size_t coneIndexOf(const Fan& f, const LatticeVec& r1, const LatticeVec& r2) {
    std::size_t i1 = f.rayIndex(r1), i2 = f.rayIndex(r2);
    for (std::size_t k = 0; k < f.maxCones().size(); ++k) {
        const auto& c = f.maxCones()[k];
        if (c.size() == 2 && ((c[0] == i1 && c[1] == i2) || (c[0] == i2 && c[1] == i1)))
            return k;
    }
    throw Error("no maximal cone spanned by the given rays");
}

SymEncoding symEncoding(const Int& a) {
    if (a < 1) throw Error("encoding family requires a >= 1");
    SymEncoding enc;
    enc.a = a;
    enc.kernelVec = {Int(1), Int(1), a};
    enc.embed = Mat{{Rat(0), Rat(0)}, {Rat(1), Rat(0)}, {Rat(0), Rat(1)}};
    enc.project = Mat{{Rat(-1), Rat(1), Rat(0)}, {Rat(Int(-a)), Rat(0), Rat(1)}};
    Rat ra{a};
    enc.A0 = Mat{{Rat(0), ra, Rat(-1)}, {Rat(0), Rat(0), Rat(0)}, {Rat(0), Rat(0), Rat(0)}};
    enc.A1 = Mat{{Rat(0), Rat(0), Rat(0)}, {-ra, Rat(0), Rat(1)}, {Rat(0), Rat(0), Rat(0)}};
    enc.A2 = Mat{{Rat(0), Rat(0), Rat(0)}, {Rat(0), Rat(0), Rat(0)}, {Rat(1), Rat(-1), Rat(0)}};
    enc.encodedRays = {LatticeVec{Int(-1), -a}, LatticeVec{Int(1), Int(0)},
                       LatticeVec{Int(0), Int(1)}};

    // Representatives must kill the kernel vector and stay trace-free.
    for (const Mat* m : {&enc.A0, &enc.A1, &enc.A2}) {
        auto image = m->apply(toRatVec(enc.kernelVec));
        for (const auto& x : image)
            if (!x.isZero()) throw Error("encoding generator does not descend to N");
        if (!trace(enc.to2x2(*m)).isZero()) throw Error("encoding generator is not trace-free");
    }
    if (!(enc.project * enc.embed == Mat::identity(2)))
        throw Error("encoding projection is not split");
    return enc;
}

Mat SymEncoding::to2x2(const Mat& m3) const { return project * m3 * embed; }

Mat SymEncoding::toSymmetric3(const Mat& m2) const {
    if (m2.rows() != 2 || m2.cols() != 2) throw Error("toSymmetric3 expects a 2x2 matrix");
    Mat lift = embed * m2 * project;
    // Add kernelVec * v^T to zero out the diagonal; that leaves the induced
    // endomorphism of N unchanged.
    std::vector<Rat> kv = toRatVec(kernelVec);
    std::vector<Rat> v(3);
    for (std::size_t j = 0; j < 3; ++j) v[j] = -lift.at(j, j) / kv[j];
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) lift.at(i, j) += kv[i] * v[j];
    return lift;
}

std::vector<Mat> classBasis(const SymEncoding& enc, const LatticeVec& rho, RayClass cls) {
    if (std::find(enc.encodedRays.begin(), enc.encodedRays.end(), rho) == enc.encodedRays.end())
        throw Error("ray " + lvStr(rho) + " is not encoded in this family");

    Mat g0 = enc.to2x2(enc.A0), g1 = enc.to2x2(enc.A1), g2 = enc.to2x2(enc.A2);
    std::vector<Rat> rv = toRatVec(rho);
    auto crossWithRho = [&](const std::vector<Rat>& w) { return w[0] * rv[1] - w[1] * rv[0]; };

    // Linear conditions on the coefficients (x, y, z) of x A0 + y A1 + z A2.
    Mat rows(0, 3);
    auto addParallelCondition = [&](const std::vector<Rat>& v) {
        std::vector<Rat> row(3);
        row[0] = crossWithRho(g0.apply(v));
        row[1] = crossWithRho(g1.apply(v));
        row[2] = crossWithRho(g2.apply(v));
        rows.appendRow(row);
    };
    if (cls == RayClass::Preserving) {
        addParallelCondition(rv);
    } else {
        // Image inside span(rho) and rho in the kernel.
        addParallelCondition({Rat(1), Rat(0)});
        addParallelCondition({Rat(0), Rat(1)});
        for (std::size_t coord = 0; coord < 2; ++coord) {
            std::vector<Rat> row(3);
            row[0] = g0.apply(rv)[coord];
            row[1] = g1.apply(rv)[coord];
            row[2] = g2.apply(rv)[coord];
            rows.appendRow(row);
        }
    }
    Subspace sol = Subspace::kernel(rows);
    std::vector<Mat> out;
    for (std::size_t i = 0; i < sol.dim(); ++i) {
        auto c = sol.basis().row(i);
        out.push_back(enc.A0 * c[0] + enc.A1 * c[1] + enc.A2 * c[2]);
    }
    return out;
}

std::vector<Rat> makeTensor(const SymEncoding& enc,
                            const std::vector<std::pair<Mat, LatticeVec>>& pairs) {
    const std::size_t n = 2, q = 2;
    std::vector<Rat> tensor(n * n * q, Rat(0));
    for (const auto& [m3, leg] : pairs) {
        Mat b = enc.to2x2(m3);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < q; ++k)
                    tensor[tensorIndex(n, q, i, j, k)] += b.at(i, j) * Rat(leg[k]);
    }
    return tensor;
}

NamedBasis namedVariableMap() {
    SymEncoding enc = symEncoding(1);
    const Mat& A0 = enc.A0;
    const Mat& A1 = enc.A1;
    const Mat& A2 = enc.A2;
    const LatticeVec& rho0 = enc.encodedRays[0];
    const LatticeVec& rho1 = enc.encodedRays[1];
    const LatticeVec& rho2 = enc.encodedRays[2];
    // Second basis vectors of the edge-interior degrees, one per facet.
    Mat K0 = A1 + A2 - A0;
    Mat K1 = A0 + A2 - A1;
    Mat K2 = A0 + A1 - A2;

    auto lv = [](int x, int y) { return LatticeVec{Int(x), Int(y)}; };
    auto el = [&](const std::string& name, std::vector<std::pair<Mat, LatticeVec>> pairs) {
        return NamedBasisElement{name, makeTensor(enc, std::move(pairs))};
    };

    NamedBasis basis;
    basis[lv(1, 1)] = {el("c00", {{A0, rho0}})};
    basis[lv(0, 1)] = {el("c10", {{A0, rho1}}), el("d10", {{K2, rho0}})};
    basis[lv(-1, 1)] = {el("c20", {{A1, rho0}}), el("d20", {{K2, rho1}})};
    basis[lv(-2, 1)] = {el("c30", {{A1, rho1}})};
    basis[lv(-1, 0)] = {el("c21", {{A1, rho2}}), el("d21", {{K0, rho1}})};
    basis[lv(0, -1)] = {el("c12", {{A2, rho1}}), el("d12", {{K0, rho2}})};
    basis[lv(1, -2)] = {el("c03", {{A2, rho2}})};
    basis[lv(1, -1)] = {el("c02", {{A2, rho0}}), el("d02", {{K1, rho2}})};
    basis[lv(1, 0)] = {el("c01", {{A0, rho2}}), el("d01", {{K1, rho0}})};
    basis[lv(0, 0)] = {el("e0", {{A2, rho1}, {A1, rho2}}), el("e1", {{A0, rho2}, {A2, rho0}}),
                       el("e2", {{A1, rho0}, {A0, rho1}})};
    return basis;
}

std::map<PolyVar, MPoly> toSolverAssignment(const NamedBasis& basis,
                                            const IntegrabilitySystem& sys,
                                            const std::map<std::string, MPoly>& namedAssign) {
    std::map<PolyVar, MPoly> out;
    for (std::size_t v = 0; v < sys.system.vars.size(); ++v) out[sys.system.vars[v]] = MPoly();

    std::map<LatticeVec, std::vector<std::size_t>, LvLess> varsByDegree;
    for (std::size_t v = 0; v < sys.varKeys.size(); ++v)
        varsByDegree[sys.varKeys[v].first].push_back(v);

    for (const auto& [degree, vars] : varsByDegree) {
        auto it = basis.find(degree);
        if (it == basis.end()) throw Error("no reference basis at degree " + lvStr(degree));
        const GradedMapSpace& space = sys.range.effectiveSpace(degree);
        if (it->second.size() != space.dim())
            throw Error("reference basis dimension mismatch at " + lvStr(degree));
        for (const auto& element : it->second) {
            auto assignIt = namedAssign.find(element.name);
            if (assignIt == namedAssign.end())
                throw Error("assignment misses " + element.name);
            auto coords = space.basis.coordinates(element.tensor);
            if (!coords) throw Error("reference element " + element.name +
                                     " outside the solved space");
            for (std::size_t i = 0; i < vars.size(); ++i) {
                if ((*coords)[i].isZero()) continue;
                PolyVar var = sys.system.vars[vars[i]];
                out[var] = out[var] + assignIt->second * (*coords)[i];
            }
        }
    }
    return out;
}

std::vector<HiggsField> hexagonDelPezzoFields() {
    SymEncoding enc = symEncoding(1);
    ToricSheaf t = tangentSheaf(makeSurface(SurfaceId{SurfaceId::Kind::P2ppp}));
    LatticeVec zero{Int(0), Int(0)};
    auto field = [&](const Mat& m3, const LatticeVec& leg) {
        std::map<LatticeVec, std::vector<Rat>, LvLess> terms;
        terms[zero] = makeTensor(enc, {{m3, leg}});
        return HiggsField::make(t, std::move(terms));
    };
    Mat A0 = enc.A0, A1 = enc.A1, A2 = enc.A2;
    return {
        field(A0 + A1 - A2, enc.encodedRays[2]),
        field(A1 + A2 - A0, enc.encodedRays[0]),
        field(A0 + A2 - A1, enc.encodedRays[1]),
    };
}

HiggsField degree7DelPezzoField(const Rat& e, const Rat& d12, const Rat& c21) {
    SymEncoding enc = symEncoding(1);
    ToricSheaf t = tangentSheaf(makeSurface(SurfaceId{SurfaceId::Kind::P2pp}));
    const LatticeVec& rho2 = enc.encodedRays[2];
    Mat A0 = enc.A0, A1 = enc.A1, A2 = enc.A2;
    std::map<LatticeVec, std::vector<Rat>, LvLess> terms;
    terms[LatticeVec{Int(0), Int(0)}] = makeTensor(enc, {{(A0 + A1 - A2) * e, rho2}});
    terms[LatticeVec{Int(0), Int(-1)}] = makeTensor(enc, {{(A1 + A2 - A0) * d12, rho2}});
    terms[LatticeVec{Int(-1), Int(0)}] = makeTensor(enc, {{A1 * c21, rho2}});
    return HiggsField::make(t, std::move(terms));
}

}  // namespace cohiggs
