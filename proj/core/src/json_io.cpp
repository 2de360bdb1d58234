#include "cohiggs/json_io.hpp"

#include <fstream>

#include "cohiggs/errors.hpp"

namespace cohiggs {

Json ratToJson(const Rat& r) { return r.str(); }

Rat ratFromJson(const Json& j) {
    if (j.is_number_integer()) return Rat(Int(j.get<long long>()));
    if (j.is_string()) return Rat::parse(j.get<std::string>());
    throw Error("expected rational as string or integer");
}

Json matToJson(const Mat& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(ratToJson(m.at(i, j)));
        rows.push_back(row);
    }
    return rows;
}

Json latticeVecToJson(const LatticeVec& v) {
    Json out = Json::array();
    for (const auto& x : v) {
        if (x >= std::numeric_limits<long long>::min() &&
            x <= std::numeric_limits<long long>::max())
            out.push_back(x.convert_to<long long>());
        else
            out.push_back(x.str());
    }
    return out;
}

LatticeVec latticeVecFromJson(const Json& j, std::size_t rank) {
    if (!j.is_array() || (rank != 0 && j.size() != rank))
        throw Error("expected a lattice vector of rank " + std::to_string(rank));
    LatticeVec v;
    for (const auto& x : j) {
        if (x.is_number_integer())
            v.emplace_back(x.get<long long>());
        else if (x.is_string())
            v.emplace_back(Int(x.get<std::string>()));
        else
            throw Error("lattice coordinate must be an integer");
    }
    return v;
}

Json fanToJson(const Fan& f) {
    Json out;
    out["rank"] = f.rank();
    Json rays = Json::array();
    for (const auto& r : f.rays()) rays.push_back(latticeVecToJson(r));
    out["rays"] = rays;
    Json cones = Json::array();
    for (const auto& c : f.maxCones()) cones.push_back(c);
    out["maxCones"] = cones;
    return out;
}

Fan fanFromJson(const Json& j) {
    if (!j.contains("rays")) throw Error("fan JSON needs a rays array");
    std::vector<LatticeVec> rays;
    for (const auto& r : j["rays"]) rays.push_back(latticeVecFromJson(r, 0));
    if (rays.empty()) throw Error("fan needs at least one ray");
    std::size_t rank = j.contains("rank") ? j["rank"].get<std::size_t>() : rays[0].size();
    std::vector<std::vector<std::size_t>> cones;
    if (j.contains("maxCones"))
        for (const auto& c : j["maxCones"]) cones.push_back(c.get<std::vector<std::size_t>>());
    return Fan(rank, std::move(rays), std::move(cones));
}

Json polytopeToJson(const LatticePolytope& p) {
    Json verts = Json::array();
    for (const auto& v : p.vertices()) verts.push_back(latticeVecToJson(v));
    Json out;
    out["vertices"] = verts;
    return out;
}

LatticePolytope polytopeFromJson(const Json& j) {
    if (!j.contains("vertices")) throw Error("polytope JSON needs a vertices array");
    std::vector<LatticeVec> verts;
    for (const auto& v : j["vertices"]) verts.push_back(latticeVecFromJson(v, 0));
    if (verts.empty()) return LatticePolytope(2, {});
    return convexHull2D(verts[0].size(), verts);
}

Json subspaceToJson(const Subspace& s) {
    Json out;
    out["ambientDim"] = s.ambientDim();
    out["dim"] = s.dim();
    out["basis"] = matToJson(s.basis());
    return out;
}

Json rangeToJson(const HiggsRange& r) {
    Json out;
    Json hull = Json::array();
    for (const auto& v : r.hull.vertices()) hull.push_back(latticeVecToJson(v));
    out["hull"] = hull;
    Json points = Json::array();
    for (const auto& [deg, entry] : r.points) {
        Json p;
        p["degree"] = latticeVecToJson(deg);
        p["dim"] = entry.dim();
        if (entry.traceFree) p["dimTraceFree"] = entry.dimTraceFree();
        points.push_back(p);
    }
    out["points"] = points;
    return out;
}

namespace {

Json tensorToJson(const std::vector<Rat>& tensor, std::size_t n, std::size_t q) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < n; ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < n; ++j) {
            Json legs = Json::array();
            for (std::size_t k = 0; k < q; ++k)
                legs.push_back(ratToJson(tensor[tensorIndex(n, q, i, j, k)]));
            row.push_back(legs);
        }
        rows.push_back(row);
    }
    return rows;
}

std::vector<Rat> tensorFromJson(const Json& j, std::size_t n, std::size_t q) {
    std::vector<Rat> tensor(n * n * q, Rat(0));
    if (!j.is_array() || j.size() != n) throw Error("field map has wrong shape");
    for (std::size_t i = 0; i < n; ++i) {
        if (!j[i].is_array() || j[i].size() != n) throw Error("field map has wrong shape");
        for (std::size_t jj = 0; jj < n; ++jj) {
            const auto& legs = j[i][jj];
            if (!legs.is_array() || legs.size() != q) throw Error("field map has wrong shape");
            for (std::size_t k = 0; k < q; ++k)
                tensor[tensorIndex(n, q, i, jj, k)] = ratFromJson(legs[k]);
        }
    }
    return tensor;
}

}  // namespace

Json fieldToJson(const HiggsField& f, const std::string& surface) {
    Json out;
    out["surface"] = surface;
    Json terms = Json::array();
    for (const auto& [r, tensor] : f.terms()) {
        Json t;
        t["degree"] = latticeVecToJson(r);
        t["map"] = tensorToJson(tensor, f.rankE(), f.q());
        terms.push_back(t);
    }
    out["terms"] = terms;
    return out;
}

HiggsField fieldFromJson(const Json& j) {
    if (!j.contains("surface")) throw Error("field JSON needs a surface");
    Fan fan = j["surface"].is_string() ? resolveSurface(j["surface"].get<std::string>())
                                       : fanFromJson(j["surface"]);
    std::string sheafSpec = j.contains("sheaf") ? j["sheaf"].get<std::string>() : "tangent";
    ToricSheaf sheaf = parseSheafSpec(fan, sheafSpec);
    std::map<LatticeVec, std::vector<Rat>, LvLess> terms;
    if (j.contains("terms"))
        for (const auto& t : j["terms"]) {
            LatticeVec deg = latticeVecFromJson(t.at("degree"), fan.rank());
            auto tensor = tensorFromJson(t.at("map"), sheaf.rankE, fan.rank());
            auto [it, fresh] = terms.emplace(deg, tensor);
            if (!fresh) throw Error("duplicate degree in field file");
        }
    return HiggsField::make(sheaf, std::move(terms));
}

Json systemToJson(const IntegrabilitySystem& s) {
    Json out;
    Json vars = Json::array();
    for (std::size_t i = 0; i < s.system.vars.size(); ++i) {
        Json v;
        v["name"] = s.system.vars[i].name;
        v["alias"] = casAlias(s.system.vars[i]);
        v["degree"] = latticeVecToJson(s.varKeys[i].first);
        v["basisIndex"] = s.varKeys[i].second;
        vars.push_back(v);
    }
    out["vars"] = vars;
    Json polys = Json::array();
    for (const auto& p : s.system.polys) polys.push_back(p.str(s.system.vars));
    out["polys"] = polys;
    return out;
}

Json hitchinToJson(const HitchinData& h) {
    Json out;
    Json tr = Json::array();
    for (const auto& c : h.traceComponents) tr.push_back(c.str());
    out["trace"] = tr;
    out["det"] = Json::object();
    out["det"]["n1^2"] = h.det20.str();
    out["det"]["n1*n2"] = h.det11.str();
    out["det"]["n2^2"] = h.det02.str();
    if (h.minusSquareRoot) {
        Json root = Json::array();
        for (const auto& c : *h.minusSquareRoot) root.push_back(c.str());
        out["minusSquareRoot"] = root;
    } else {
        out["minusSquareRoot"] = nullptr;
    }
    return out;
}

Fan resolveSurface(const std::string& arg) {
    if (arg.size() > 5 && arg.substr(arg.size() - 5) == ".json") {
        std::ifstream in(arg);
        if (!in) throw Error("cannot open surface file " + arg);
        Json j;
        in >> j;
        return fanFromJson(j);
    }
    return makeSurface(SurfaceId::parse(arg));
}

}  // namespace cohiggs
