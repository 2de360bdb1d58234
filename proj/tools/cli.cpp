#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <functional>

#include "cohiggs/errors.hpp"
#include "cohiggs/json_io.hpp"
#include "cohiggs/svg.hpp"

namespace cohiggs::cli {

namespace {

LatticeVec parseIntPair(const std::string& s, std::size_t rank) {
    LatticeVec v;
    std::string cur;
    for (char ch : s) {
        if (ch == ',') {
            v.emplace_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    if (!cur.empty()) v.emplace_back(cur);
    if (v.size() != rank)
        throw Error("expected " + std::to_string(rank) + " comma-separated integers: " + s);
    return v;
}

std::vector<Rat> parseRatTuple(const std::string& s, std::size_t rank) {
    std::vector<Rat> v;
    std::string cur;
    for (char ch : s) {
        if (ch == ',') {
            v.push_back(Rat::parse(cur));
            cur.clear();
        } else {
            cur += ch;
        }
    }
    if (!cur.empty()) v.push_back(Rat::parse(cur));
    if (v.size() != rank)
        throw Error("expected " + std::to_string(rank) + " comma-separated rationals: " + s);
    return v;
}

void writeOrPrint(const std::string& text, const std::string& path, std::ostream& out) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(path);
    if (!f) throw Error("cannot write " + path);
    f << text;
}

Json loadJsonFile(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    Json j;
    in >> j;
    return j;
}

std::string degreeStr(const LatticeVec& v) { return lvStr(v); }

struct FieldArgs {
    std::string surface;
    std::string fieldPath;

    HiggsField load() const {
        Json j = loadJsonFile(fieldPath);
        HiggsField f = fieldFromJson(j);
        if (!surface.empty()) {
            Fan requested = resolveSurface(surface);
            if (!(requested == f.sheaf().fan))
                throw Error("--surface disagrees with the field file's surface");
        }
        return f;
    }
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact computations with homogeneous (pre-)Higgs fields on toric surfaces"};
    app.require_subcommand(1);
    std::function<void()> action;

    // ---- catalog ----------------------------------------------------------
    auto* cmdCatalog = app.add_subcommand("catalog", "list built-in surfaces or show one");
    struct {
        std::string surface;
        bool json = false;
    } catalogArgs;
    cmdCatalog->add_option("--surface", catalogArgs.surface, "catalog id or fan JSON file");
    cmdCatalog->add_flag("--json", catalogArgs.json, "JSON output");
    cmdCatalog->callback([&] {
        action = [&] {
            if (catalogArgs.surface.empty()) {
                for (const auto& name : catalogNames()) out << name << "\n";
                return;
            }
            Fan f = resolveSurface(catalogArgs.surface);
            if (catalogArgs.json) {
                out << fanToJson(f).dump(2) << "\n";
                return;
            }
            out << "rays:";
            for (const auto& r : f.rays()) out << " " << lvStr(r);
            out << "\ncomplete: " << (f.isComplete() ? "true" : "false");
            if (f.rank() == 2) out << "\nsmooth: " << (f.isSmooth() ? "true" : "false");
            out << "\n";
        };
    });

    // ---- range ------------------------------------------------------------
    auto* cmdRange = app.add_subcommand("range", "admissible degrees with multiplicities");
    struct {
        std::string surface, sheaf = "tangent", svgPath, outPath;
        bool traceFree = false, json = false;
    } rangeArgs;
    cmdRange->add_option("--surface", rangeArgs.surface)->required();
    cmdRange->add_option("--sheaf", rangeArgs.sheaf, "sheaf DSL (default tangent)");
    cmdRange->add_flag("--trace-free", rangeArgs.traceFree);
    cmdRange->add_flag("--json", rangeArgs.json);
    cmdRange->add_option("--svg", rangeArgs.svgPath, "write an SVG rendering");
    cmdRange->add_option("--out", rangeArgs.outPath, "write output to a file");
    cmdRange->callback([&] {
        action = [&] {
            Fan fan = resolveSurface(rangeArgs.surface);
            ToricSheaf sheaf = parseSheafSpec(fan, rangeArgs.sheaf);
            HiggsRange range = higgsRange(sheaf, rangeArgs.traceFree);
            if (!rangeArgs.svgPath.empty()) writeOrPrint(rangeSvg(range), rangeArgs.svgPath, out);
            if (rangeArgs.json) {
                writeOrPrint(rangeToJson(range).dump(2) + "\n", rangeArgs.outPath, out);
                return;
            }
            std::string text = "hull:";
            for (const auto& v : range.hull.vertices()) text += " " + degreeStr(v);
            text += "\npoints:\n";
            std::size_t total = 0;
            for (const auto& [r, entry] : range.points) {
                std::size_t d = rangeArgs.traceFree ? entry.dimTraceFree() : entry.dim();
                total += d;
                text += "  " + degreeStr(r) + " dim " + std::to_string(d);
                if (entry.traceFree && !rangeArgs.traceFree)
                    text += " (trace-free " + std::to_string(entry.dimTraceFree()) + ")";
                text += "\n";
            }
            text += "total: " + std::to_string(total) + "\n";
            writeOrPrint(text, rangeArgs.outPath, out);
        };
    });

    // ---- sections ---------------------------------------------------------
    auto* cmdSections = app.add_subcommand("sections", "global section spaces by degree");
    struct {
        std::string surface, sheaf = "tangent", degree;
        bool totalDim = false, json = false;
    } secArgs;
    cmdSections->add_option("--surface", secArgs.surface)->required();
    cmdSections->add_option("--sheaf", secArgs.sheaf);
    cmdSections->add_option("--degree", secArgs.degree, "single degree x,y");
    cmdSections->add_flag("--total-dim", secArgs.totalDim, "sum over all degrees");
    cmdSections->add_flag("--json", secArgs.json);
    cmdSections->callback([&] {
        action = [&] {
            Fan fan = resolveSurface(secArgs.surface);
            ToricSheaf sheaf = parseSheafSpec(fan, secArgs.sheaf);
            if (!secArgs.degree.empty()) {
                LatticeVec r = parseIntPair(secArgs.degree, fan.rank());
                Subspace s = sectionSpace(sheaf, r);
                if (secArgs.json)
                    out << subspaceToJson(s).dump(2) << "\n";
                else
                    out << "dim: " << s.dim() << "\n";
                return;
            }
            std::size_t total = 0;
            Json points = Json::array();
            std::string text;
            for (const auto& r : sectionDegreeCandidates(sheaf)) {
                std::size_t d = sectionSpace(sheaf, r).dim();
                if (d == 0) continue;
                total += d;
                Json p;
                p["degree"] = latticeVecToJson(r);
                p["dim"] = d;
                points.push_back(p);
                text += "  " + degreeStr(r) + " dim " + std::to_string(d) + "\n";
            }
            if (secArgs.totalDim) {
                out << total << "\n";
            } else if (secArgs.json) {
                Json j;
                j["points"] = points;
                j["total"] = total;
                out << j.dump(2) << "\n";
            } else {
                out << "points:\n" << text << "total: " << total << "\n";
            }
        };
    });

    // ---- prehiggs ---------------------------------------------------------
    auto* cmdPre = app.add_subcommand("prehiggs", "admissible maps at a fixed degree");
    struct {
        std::string surface, sheaf = "tangent", degree, outPath;
        bool traceFree = false, json = false, cotangent = false;
    } preArgs;
    cmdPre->add_option("--surface", preArgs.surface)->required();
    cmdPre->add_option("--sheaf", preArgs.sheaf);
    cmdPre->add_option("--degree", preArgs.degree)->required();
    cmdPre->add_flag("--trace-free", preArgs.traceFree);
    cmdPre->add_flag("--cotangent-variant", preArgs.cotangent,
                     "use maps into E tensor the cotangent sheaf");
    cmdPre->add_flag("--json", preArgs.json);
    cmdPre->add_option("--out", preArgs.outPath,
                       "write a field file with the first basis element");
    cmdPre->callback([&] {
        action = [&] {
            Fan fan = resolveSurface(preArgs.surface);
            ToricSheaf sheaf = parseSheafSpec(fan, preArgs.sheaf);
            LatticeVec r = parseIntPair(preArgs.degree, fan.rank());
            GradedMapSpace space = preArgs.cotangent ? preHiggsSpaceCotangent(sheaf, r)
                                                     : preHiggsSpace(sheaf, r);
            if (preArgs.traceFree) space = traceSplit(space).first;
            if (preArgs.json) {
                Json j;
                j["degree"] = latticeVecToJson(r);
                j["dim"] = space.dim();
                j["basis"] = matToJson(space.basis.basis());
                out << j.dump(2) << "\n";
            } else {
                out << "dim: " << space.dim() << "\n";
            }
            if (!preArgs.outPath.empty()) {
                if (space.dim() == 0) throw Error("no admissible map at " + degreeStr(r));
                if (preArgs.cotangent) throw Error("--out applies to the tangent variant");
                std::map<LatticeVec, std::vector<Rat>, LvLess> terms;
                terms[r] = space.basisTensor(0);
                HiggsField f = HiggsField::makeUnchecked(sheaf, std::move(terms));
                std::ofstream fs(preArgs.outPath);
                if (!fs) throw Error("cannot write " + preArgs.outPath);
                fs << fieldToJson(f, preArgs.surface).dump(2) << "\n";
            }
        };
    });

    // ---- system -----------------------------------------------------------
    auto* cmdSystem = app.add_subcommand("system", "quadratic integrability system");
    struct {
        std::string surface, sheaf = "tangent", filterPath, outPath;
        bool traceFree = false, json = false, namedVars = false;
    } sysArgs;
    cmdSystem->add_option("--surface", sysArgs.surface)->required();
    cmdSystem->add_option("--sheaf", sysArgs.sheaf);
    cmdSystem->add_flag("--trace-free", sysArgs.traceFree);
    cmdSystem->add_option("--filter", sysArgs.filterPath, "polytope JSON restricting degrees");
    cmdSystem->add_flag("--json", sysArgs.json);
    cmdSystem->add_flag("--named-vars", sysArgs.namedVars,
                        "append the reference variable table (plane, trace-free)");
    cmdSystem->add_option("--out", sysArgs.outPath);
    cmdSystem->callback([&] {
        action = [&] {
            Fan fan = resolveSurface(sysArgs.surface);
            ToricSheaf sheaf = parseSheafSpec(fan, sysArgs.sheaf);
            std::optional<LatticePolytope> filter;
            if (!sysArgs.filterPath.empty())
                filter = polytopeFromJson(loadJsonFile(sysArgs.filterPath));
            IntegrabilitySystem sys = generateIntegrabilitySystem(sheaf, sysArgs.traceFree, filter);
            std::string text;
            if (sysArgs.json) {
                Json j = systemToJson(sys);
                if (sysArgs.namedVars) {
                    Json table = Json::array();
                    for (const auto& [deg, els] : namedVariableMap())
                        for (std::size_t i = 0; i < els.size(); ++i) {
                            Json row;
                            row["name"] = els[i].name;
                            row["degree"] = latticeVecToJson(deg);
                            row["basisIndex"] = i;
                            table.push_back(row);
                        }
                    j["namedVars"] = table;
                }
                text = j.dump(2) + "\n";
            } else {
                text = sys.system.casText();
                if (sysArgs.namedVars) {
                    text += "// reference basis elements per degree:\n";
                    for (const auto& [deg, els] : namedVariableMap())
                        for (const auto& el : els)
                            text += "//   " + el.name + " at " + degreeStr(deg) + "\n";
                }
            }
            writeOrPrint(text, sysArgs.outPath, out);
        };
    });

    // ---- check ------------------------------------------------------------
    auto* cmdCheck = app.add_subcommand("check", "integrability of a field file");
    FieldArgs checkArgs;
    bool checkJson = false;
    cmdCheck->add_option("--surface", checkArgs.surface, "must match the field file");
    cmdCheck->add_option("--field", checkArgs.fieldPath)->required();
    cmdCheck->add_flag("--json", checkJson);
    cmdCheck->callback([&] {
        action = [&] {
            HiggsField f = checkArgs.load();
            IntegrabilityResult res = isIntegrable(f);
            LatticePolytope poly = higgsPolytope(f);
            if (checkJson) {
                Json j;
                j["integrable"] = res.integrable;
                j["higgsPolytope"] = polytopeToJson(poly);
                if (res.certificate) {
                    j["certificateDegree"] = latticeVecToJson(res.certificate->first);
                    j["certificateMatrix"] = matToJson(res.certificate->second);
                }
                out << j.dump(2) << "\n";
                return;
            }
            Json verts = Json::array();
            for (const auto& v : poly.vertices()) verts.push_back(latticeVecToJson(v));
            out << "integrable: " << (res.integrable ? "true" : "false")
                << "; higgsPolytope: " << verts.dump();
            if (res.certificate)
                out << "; certificate at " << degreeStr(res.certificate->first);
            out << "\n";
        };
    });

    // ---- polytope ---------------------------------------------------------
    auto* cmdPoly = app.add_subcommand("polytope", "Higgs polytope of a field file");
    FieldArgs polyArgs;
    bool polyJson = false;
    std::string polySvg;
    cmdPoly->add_option("--surface", polyArgs.surface);
    cmdPoly->add_option("--field", polyArgs.fieldPath)->required();
    cmdPoly->add_flag("--json", polyJson);
    cmdPoly->add_option("--svg", polySvg);
    cmdPoly->callback([&] {
        action = [&] {
            LatticePolytope poly = higgsPolytope(polyArgs.load());
            if (!polySvg.empty()) writeOrPrint(polytopeSvg(poly), polySvg, out);
            if (polyJson)
                out << polytopeToJson(poly).dump(2) << "\n";
            else {
                Json verts = Json::array();
                for (const auto& v : poly.vertices()) verts.push_back(latticeVecToJson(v));
                out << verts.dump() << "\n";
            }
        };
    });

    // ---- hitchin ----------------------------------------------------------
    auto* cmdHitchin = app.add_subcommand("hitchin", "trace and determinant data of a field");
    FieldArgs hitchinArgs;
    bool hitchinJson = false;
    cmdHitchin->add_option("--surface", hitchinArgs.surface);
    cmdHitchin->add_option("--field", hitchinArgs.fieldPath)->required();
    cmdHitchin->add_flag("--json", hitchinJson);
    cmdHitchin->callback([&] {
        action = [&] {
            HitchinData h = hitchinData(hitchinArgs.load());
            if (hitchinJson) {
                out << hitchinToJson(h).dump(2) << "\n";
                return;
            }
            out << "trace: [" << h.traceComponents[0].str() << ", "
                << h.traceComponents[1].str() << "]\n";
            out << "det: (" << h.det20.str() << ")*n1^2 + (" << h.det11.str()
                << ")*n1*n2 + (" << h.det02.str() << ")*n2^2\n";
            if (h.minusSquareRoot)
                out << "det = -(d)^2 with d = (" << (*h.minusSquareRoot)[0].str() << ")*n1 + ("
                    << (*h.minusSquareRoot)[1].str() << ")*n2\n";
            else
                out << "det is not minus a perfect square\n";
        };
    });

    // ---- minpoly ----------------------------------------------------------
    auto* cmdMin = app.add_subcommand("minpoly",
                                      "minimal polynomial of a contracted field at a point");
    FieldArgs minArgs;
    std::string minS, minAt;
    cmdMin->add_option("--surface", minArgs.surface);
    cmdMin->add_option("--field", minArgs.fieldPath)->required();
    cmdMin->add_option("--degree", minS, "contraction direction s in M, e.g. 1,0")->required();
    cmdMin->add_option("--at", minAt, "torus point, nonzero rationals, e.g. 2,1/3")->required();
    cmdMin->callback([&] {
        action = [&] {
            HiggsField f = minArgs.load();
            LatticeVec s = parseIntPair(minS, f.q());
            std::vector<Rat> t = parseRatTuple(minAt, f.q());
            out << polyStr(minPolyAtPoint(f, s, t)) << "\n";
        };
    });

    // ---- blowup -----------------------------------------------------------
    auto* cmdBlow = app.add_subcommand("blowup", "subdivide a maximal cone");
    struct {
        std::string surface, outPath;
        std::size_t cone = 0;
    } blowArgs;
    cmdBlow->add_option("--surface", blowArgs.surface)->required();
    cmdBlow->add_option("--cone", blowArgs.cone, "maximal cone index")->required();
    cmdBlow->add_option("--out", blowArgs.outPath);
    cmdBlow->callback([&] {
        action = [&] {
            Fan f = blowUp(resolveSurface(blowArgs.surface), blowArgs.cone);
            writeOrPrint(fanToJson(f).dump(2) + "\n", blowArgs.outPath, out);
        };
    });

    std::vector<const char*> argv;
    argv.push_back("cohiggs");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    try {
        if (action) action();
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace cohiggs::cli
