#include <doctest.h>

#include <map>

#include "cohiggs/catalog.hpp"
#include "cohiggs/errors.hpp"
#include "oracles.hpp"
#include "seed.hpp"

using namespace cohiggs;

namespace {

LatticeVec lv(long long x, long long y) { return {Int(x), Int(y)}; }

ToricSheaf tangentOf(const std::string& id) {
    return tangentSheaf(makeSurface(SurfaceId::parse(id)));
}

std::map<LatticeVec, std::size_t, LvLess> traceFreeDims(const HiggsRange& range) {
    std::map<LatticeVec, std::size_t, LvLess> dims;
    for (const auto& [r, entry] : range.points) dims[r] = entry.dimTraceFree();
    return dims;
}

}  // namespace

TEST_CASE("tensor filtration of E tensor T") {
    // Rank-1 plumbing: the structure sheaf on P1 gives the tangent filtration.
    ToricSheaf o0 = lineBundle(makeSurface(SurfaceId::parse("P1")), {Int(0), Int(0)});
    Filtration f = tensorTangentFiltration(o0, 0);
    CHECK(f.at(Int(1)).isFull());
    CHECK(f.at(Int(2)).isZero());

    // Dimension count dim F^l = q dim E^l + (dim E^{l-1} - dim E^l) on the
    // twisted tangent sheaf of the plane.
    ToricSheaf e = tensorLineBundle(tangentOf("P2"), {Int(1), Int(-1), Int(0)});
    const std::size_t q = 2;
    for (std::size_t ray = 0; ray < 3; ++ray) {
        Filtration f2 = tensorTangentFiltration(e, ray);
        const Filtration& ef = e.filtrations[ray];
        for (Int l = ef.fullLevel() - 1; l <= ef.zeroLevel() + 1; ++l) {
            std::size_t el = ef.at(l).dim();
            std::size_t eprev = ef.at(l - 1).dim();
            CHECK(f2.at(l).dim() == q * el + (eprev - el));
        }
    }
    CHECK_THROWS_AS(tensorTangentFiltration(e, 7), Error);
}

TEST_CASE("solver equals the hom space into E tensor T") {
    for (const std::string id : {"P2", "Hirz:2"}) {
        ToricSheaf e = tangentOf(id);
        const std::size_t n = e.rankE, q = e.fan.rank();
        std::vector<Filtration> filts;
        for (std::size_t i = 0; i < e.fan.rayCount(); ++i)
            filts.push_back(tensorTangentFiltration(e, i));
        ToricSheaf tensor(e.fan, n * q, filts);
        for (long long x = -2; x <= 2; ++x)
            for (long long y = -2; y <= 2; ++y) {
                GradedMapSpace direct = preHiggsSpace(e, lv(x, y));
                MapSpace viaHom = homSpace(e, tensor, lv(x, y));
                REQUIRE(direct.dim() == viaHom.dim());
                // Same space up to the coordinate permutation (i,k,j) -> (i,j,k).
                for (std::size_t b = 0; b < viaHom.dim(); ++b) {
                    auto flat = viaHom.basis.basis().row(b);
                    std::vector<Rat> reordered(n * n * q);
                    for (std::size_t i = 0; i < n; ++i)
                        for (std::size_t k = 0; k < q; ++k)
                            for (std::size_t j = 0; j < n; ++j)
                                reordered[tensorIndex(n, q, i, j, k)] = flat[(i * q + k) * n + j];
                    CHECK(direct.basis.contains(reordered));
                }
            }
    }
}

TEST_CASE("line fields on P1") {
    ToricSheaf t = tangentOf("P1");
    for (long long r = -3; r <= 3; ++r) {
        std::size_t expected = (r >= -1 && r <= 1) ? 1 : 0;
        CHECK(preHiggsSpace(t, {Int(r)}).dim() == expected);
    }
}

TEST_CASE("plane fields match the reference bases") {
    ToricSheaf t = tangentOf("P2");
    NamedBasis basis = namedVariableMap();

    GradedMapSpace vertex = preHiggsSpace(t, lv(1, 1));
    CHECK(vertex.dim() == 1);
    CHECK(vertex.basis.contains(basis.at(lv(1, 1))[0].tensor));

    CHECK(preHiggsSpace(t, lv(0, 0)).dim() == 5);

    // Every reference element is admissible and trace-free spaces match.
    auto range = higgsRange(t, true);
    for (const auto& [deg, elements] : basis) {
        const GradedMapSpace& space = range.effectiveSpace(deg);
        REQUIRE(space.dim() == elements.size());
        for (const auto& el : elements) CHECK(space.basis.contains(el.tensor));
    }
}

TEST_CASE("cotangent-variant spaces vanish") {
    ToricSheaf t = tangentOf("P2");
    for (long long x = -3; x <= 3; ++x)
        for (long long y = -3; y <= 3; ++y)
            CHECK(preHiggsSpaceCotangent(t, lv(x, y)).dim() == 0);

    ToricSheaf o0 = lineBundle(makeSurface(SurfaceId::parse("P1")), {Int(0), Int(0)});
    ToricSheaf p1t = tangentOf("P1");
    for (long long r = -3; r <= 3; ++r) {
        CHECK(preHiggsSpaceCotangent(o0, {Int(r)}).dim() == 0);
        CHECK(preHiggsSpaceCotangent(p1t, {Int(r)}).dim() == 0);
    }
}

TEST_CASE("trace split") {
    ToricSheaf t = tangentOf("P2");

    auto [tf0, pt0] = traceSplit(preHiggsSpace(t, lv(0, 0)));
    CHECK(tf0.dim() == 3);
    CHECK(pt0.dim() == 2);
    CHECK(intersect(tf0.basis, pt0.basis).isZero());

    auto [tfV, ptV] = traceSplit(preHiggsSpace(t, lv(1, 1)));
    CHECK(tfV.dim() == 1);
    CHECK(ptV.dim() == 0);

    // A pure-trace tensor splits onto the second factor.
    SymEncoding enc = symEncoding(1);
    std::vector<Rat> idRho(2 * 2 * 2, Rat(0));
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t k = 0; k < 2; ++k)
            idRho[tensorIndex(2, 2, i, i, k)] = Rat(enc.encodedRays[1][k]);
    Mat rows(0, 8);
    rows.appendRow(idRho);
    GradedMapSpace one{lv(1, 0), 2, 2, Subspace::span(8, rows)};
    auto [tf1, pt1] = traceSplit(one);
    CHECK(tf1.dim() == 0);
    CHECK(pt1.dim() == 1);

    GradedMapSpace bad{lv(0, 0), 1, 2, Subspace::zero(2)};
    CHECK_THROWS_AS(traceSplit(bad), Error);
}

TEST_CASE("range of the plane") {
    ToricSheaf t = tangentOf("P2");
    HiggsRange range = higgsRange(t, true);
    CHECK(range.hull.vertices() ==
          std::vector<LatticeVec>{lv(-2, 1), lv(1, -2), lv(1, 1)});

    std::size_t total = 0, totalFull = 0;
    for (const auto& [r, entry] : range.points) {
        total += entry.dimTraceFree();
        totalFull += entry.dim();
        bool isVertex = false;
        for (const auto& v : range.hull.vertices()) isVertex |= v == r;
        bool isOrigin = r == lv(0, 0);
        if (isVertex) CHECK(entry.dimTraceFree() == 1);
        else if (isOrigin) CHECK(entry.dimTraceFree() == 3);
        else CHECK(entry.dimTraceFree() == 2);
    }
    CHECK(range.points.size() == 10);
    CHECK(total == 18);
    CHECK(totalFull == 26);

    HiggsRange full = higgsRange(t, false);
    std::size_t totalAll = 0;
    for (const auto& [r, entry] : full.points) totalAll += entry.dim();
    CHECK(totalAll == 26);

    // The naive distance-two bound contains every admissible degree.
    for (const auto& [r, entry] : full.points)
        for (const auto& rho : t.fan.rays()) CHECK(pairing(r, rho) >= -2);
}

TEST_CASE("range needs a complete fan") {
    Fan halfPlane(2, {lv(1, 0), lv(0, 1)});
    CHECK_THROWS_AS(higgsRange(tangentSheaf(halfPlane), true), UnboundedRegion);
}

TEST_CASE("trace-free mode outside the tangent case is rejected") {
    Fan p2 = makeSurface(SurfaceId::parse("P2"));
    CHECK_THROWS_AS(higgsRange(lineBundle(p2, {Int(0), Int(0), Int(0)}), true), Error);
    // Rank-1 ranges work fine without trace-free mode.
    HiggsRange r = higgsRange(lineBundle(p2, {Int(1), Int(0), Int(0)}), false);
    CHECK(!r.points.empty());
}

TEST_CASE("Hirzebruch ranges") {
    HiggsRange h2 = higgsRange(tangentOf("Hirz:2"), true);
    CHECK(h2.hull.vertices() ==
          std::vector<LatticeVec>{lv(-1, 0), lv(1, -2), lv(3, -2), lv(1, 0)});
    std::map<LatticeVec, std::size_t, LvLess> expected2{
        {lv(-1, 0), 2}, {lv(1, 0), 2}, {lv(0, 0), 3},  {lv(0, -1), 2}, {lv(1, -1), 3},
        {lv(2, -1), 2}, {lv(1, -2), 1}, {lv(2, -2), 1}, {lv(3, -2), 1}};
    CHECK(traceFreeDims(h2) == expected2);

    HiggsRange h4 = higgsRange(tangentOf("Hirz:4"), true);
    std::map<LatticeVec, std::size_t, LvLess> expected4{
        {lv(-1, 0), 2}, {lv(0, 0), 3},  {lv(1, 0), 2},  {lv(0, -1), 2}, {lv(1, -1), 3},
        {lv(2, -1), 3}, {lv(3, -1), 3}, {lv(4, -1), 2}, {lv(1, -2), 1}, {lv(2, -2), 1},
        {lv(3, -2), 1}, {lv(4, -2), 1}, {lv(5, -2), 1}, {lv(6, -2), 1}, {lv(7, -2), 1}};
    CHECK(traceFreeDims(h4) == expected4);
}

TEST_CASE("solver agrees with the brute-force oracle") {
    for (const std::string id : {"P1", "P2", "Hirz:2"}) {
        ToricSheaf e = tangentOf(id);
        const std::size_t q = e.fan.rank();
        HalfSpaceRegion region(q);
        for (std::size_t i = 0; i < e.fan.rayCount(); ++i)
            region.add(e.fan.ray(i),
                       e.filtrations[i].fullLevel() - e.filtrations[i].zeroLevel());
        for (const auto& r : region.latticePoints()) {
            GradedMapSpace fast = preHiggsSpace(e, r);
            GradedMapSpace slow = testsupport::bruteForcePreHiggs(e, r);
            CHECK(fast.basis == slow.basis);
        }
    }
}

TEST_CASE("solver soundness under random contractions") {
    testsupport::Rng rng(31);
    for (const std::string id : {"P2", "Hirz:3"}) {
        ToricSheaf e = tangentOf(id);
        HiggsRange range = higgsRange(e, false);
        for (const auto& [r, entry] : range.points)
            for (std::size_t b = 0; b < entry.space.dim(); ++b) {
                auto tensor = entry.space.basisTensor(b);
                for (int k = 0; k < 20; ++k) {
                    LatticeVec s = lv(rng.intIn(-6, 6), rng.intIn(-6, 6));
                    CHECK(testsupport::satisfiesContainments(e, r, tensor, s));
                }
            }
    }
}

TEST_CASE("blow-up chain shrinks ranges and spaces") {
    std::vector<std::string> chain{"P2", "P2'", "P2''", "P2'''"};
    std::vector<HiggsRange> ranges;
    for (const auto& id : chain) ranges.push_back(higgsRange(tangentOf(id), true));

    for (std::size_t k = 0; k + 1 < ranges.size(); ++k) {
        const HiggsRange& big = ranges[k];
        const HiggsRange& small = ranges[k + 1];
        for (const auto& [r, entry] : small.points) {
            auto it = big.points.find(r);
            REQUIRE(it != big.points.end());
            CHECK(entry.dim() <= it->second.dim());
            CHECK(entry.dimTraceFree() <= it->second.dimTraceFree());
            // Inclusion of the actual subspaces, not only dimensions.
            CHECK(it->second.space.basis.contains(entry.space.basis));
        }
    }
}

TEST_CASE("Fano ranges") {
    HiggsRange pp = higgsRange(tangentOf("P1xP1"), true);
    std::map<LatticeVec, std::size_t, LvLess> expectedPP{
        {lv(0, 0), 4}, {lv(1, 0), 2}, {lv(-1, 0), 2}, {lv(0, 1), 2}, {lv(0, -1), 2}};
    CHECK(traceFreeDims(pp) == expectedPP);

    HiggsRange p2p = higgsRange(tangentOf("P2'"), true);
    std::map<LatticeVec, std::size_t, LvLess> expectedP2p{
        {lv(1, 0), 2}, {lv(1, -1), 2}, {lv(1, -2), 1},
        {lv(0, -1), 2}, {lv(-1, 0), 2}, {lv(0, 0), 3}};
    CHECK(traceFreeDims(p2p) == expectedP2p);

    HiggsRange p2pp = higgsRange(tangentOf("P2''"), true);
    std::map<LatticeVec, std::size_t, LvLess> expectedP2pp{
        {lv(0, 0), 3}, {lv(-1, 0), 2}, {lv(0, -1), 2}};
    CHECK(traceFreeDims(p2pp) == expectedP2pp);

    HiggsRange p2ppp = higgsRange(tangentOf("P2'''"), true);
    std::map<LatticeVec, std::size_t, LvLess> expectedP2ppp{{lv(0, 0), 3}};
    CHECK(traceFreeDims(p2ppp) == expectedP2ppp);
}

TEST_CASE("rank-zero sheaf has an empty range") {
    Fan p2 = makeSurface(SurfaceId::parse("P2"));
    std::vector<Filtration> filts(3, Filtration(0, {}));
    ToricSheaf zero(p2, 0, filts);
    CHECK(higgsRange(zero, false).points.empty());
}

TEST_CASE("plane multiplicities including the trace part") {
    HiggsRange full = higgsRange(tangentOf("P2"), false);
    std::map<LatticeVec, std::size_t, LvLess> expected{
        {lv(1, 1), 1},  {lv(0, 1), 3},  {lv(-1, 1), 3}, {lv(-2, 1), 1}, {lv(-1, 0), 3},
        {lv(0, 0), 5},  {lv(1, 0), 3},  {lv(0, -1), 3}, {lv(1, -1), 3}, {lv(1, -2), 1}};
    std::map<LatticeVec, std::size_t, LvLess> dims;
    for (const auto& [r, entry] : full.points) dims[r] = entry.dim();
    CHECK(dims == expected);
}

TEST_CASE("pure-trace parts are the global vector fields") {
    // id tensor v is admissible at r exactly when v is a section of the
    // tangent sheaf of degree r.
    for (const std::string id : {"P2", "Hirz:2", "P1xP1"}) {
        ToricSheaf t = tangentOf(id);
        HalfSpaceRegion region(2);
        for (std::size_t i = 0; i < t.fan.rayCount(); ++i)
            region.add(t.fan.ray(i), Int(-2));
        for (const auto& r : region.latticePoints()) {
            auto [tf, pure] = traceSplit(preHiggsSpace(t, r));
            CHECK(pure.dim() == sectionSpace(t, r).dim());
        }
    }
}
