#include "cohiggs/svg.hpp"

#include <algorithm>
#include <sstream>

#include "cohiggs/errors.hpp"

namespace cohiggs {

namespace {

constexpr int kScale = 40;
constexpr int kMargin = 30;

struct Frame {
    long long x0, y0, x1, y1;  // lattice bounding box
    int width, height;

    int px(const Int& x) const { return kMargin + (x.convert_to<long long>() - x0) * kScale; }
    int py(const Int& y) const { return kMargin + (y1 - y.convert_to<long long>()) * kScale; }
};

Frame frameFor(const std::vector<LatticeVec>& pts) {
    Frame f{-2, -2, 2, 2, 0, 0};
    if (!pts.empty()) {
        f.x0 = f.x1 = pts[0][0].convert_to<long long>();
        f.y0 = f.y1 = pts[0][1].convert_to<long long>();
        for (const auto& p : pts) {
            f.x0 = std::min(f.x0, p[0].convert_to<long long>());
            f.x1 = std::max(f.x1, p[0].convert_to<long long>());
            f.y0 = std::min(f.y0, p[1].convert_to<long long>());
            f.y1 = std::max(f.y1, p[1].convert_to<long long>());
        }
        --f.x0; --f.y0; ++f.x1; ++f.y1;
    }
    f.width = 2 * kMargin + (f.x1 - f.x0) * kScale;
    f.height = 2 * kMargin + (f.y1 - f.y0) * kScale;
    return f;
}

void emitHeader(std::ostringstream& os, const Frame& f) {
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << f.width << "\" height=\""
       << f.height << "\" viewBox=\"0 0 " << f.width << " " << f.height << "\">\n";
    os << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    for (long long x = f.x0; x <= f.x1; ++x)
        os << "  <line x1=\"" << f.px(Int(x)) << "\" y1=\"" << f.py(Int(f.y1)) << "\" x2=\""
           << f.px(Int(x)) << "\" y2=\"" << f.py(Int(f.y0))
           << "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
    for (long long y = f.y0; y <= f.y1; ++y)
        os << "  <line x1=\"" << f.px(Int(f.x0)) << "\" y1=\"" << f.py(Int(y)) << "\" x2=\""
           << f.px(Int(f.x1)) << "\" y2=\"" << f.py(Int(y))
           << "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
}

void emitHull(std::ostringstream& os, const LatticePolytope& hull, const Frame& f) {
    if (hull.vertices().size() < 2) return;
    os << "  <polygon points=\"";
    for (std::size_t i = 0; i < hull.vertices().size(); ++i) {
        const auto& v = hull.vertices()[i];
        if (i) os << " ";
        os << f.px(v[0]) << "," << f.py(v[1]);
    }
    os << "\" fill=\"#fff7c0\" fill-opacity=\"0.6\" stroke=\"#c8a800\" stroke-width=\"2\"/>\n";
}

}  // namespace

std::string rangeSvg(const HiggsRange& range) {
    if (range.q != 2) throw Error("SVG emission requires rank-2 data");
    std::vector<LatticeVec> pts = range.degrees();
    Frame f = frameFor(pts);
    std::ostringstream os;
    emitHeader(os, f);
    emitHull(os, range.hull, f);
    os << "  <circle cx=\"" << f.px(Int(0)) << "\" cy=\"" << f.py(Int(0))
       << "\" r=\"6\" fill=\"none\" stroke=\"#2a9d2a\" stroke-width=\"2\"/>\n";
    for (const auto& [deg, entry] : range.points) {
        std::size_t dim = range.traceFreeMode ? entry.dimTraceFree() : entry.dim();
        os << "  <circle cx=\"" << f.px(deg[0]) << "\" cy=\"" << f.py(deg[1])
           << "\" r=\"4\" fill=\"#222222\"/>\n";
        os << "  <text x=\"" << f.px(deg[0]) + 8 << "\" y=\"" << f.py(deg[1]) - 8
           << "\" font-family=\"sans-serif\" font-size=\"14\">" << dim << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

std::string polytopeSvg(const LatticePolytope& p) {
    if (!p.isEmpty() && p.rank() != 2) throw Error("SVG emission requires rank-2 data");
    Frame f = frameFor(p.vertices());
    std::ostringstream os;
    emitHeader(os, f);
    emitHull(os, p, f);
    for (const auto& pt : p.latticePoints())
        os << "  <circle cx=\"" << f.px(pt[0]) << "\" cy=\"" << f.py(pt[1])
           << "\" r=\"4\" fill=\"#222222\"/>\n";
    os << "</svg>\n";
    return os.str();
}

}  // namespace cohiggs
