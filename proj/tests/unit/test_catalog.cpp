#include <doctest.h>

#include <algorithm>

#include "cohiggs/catalog.hpp"
#include "cohiggs/errors.hpp"
#include "oracles.hpp"
#include "seed.hpp"

using namespace cohiggs;

namespace {

LatticeVec lv(long long x, long long y) { return {Int(x), Int(y)}; }

MPoly symbolicDet(const SymEncoding& enc) {
    // det of x A0 + y A1 + z A2 in the 2x2 presentation, over vars x, y, z.
    std::array<Mat, 3> g{enc.to2x2(enc.A0), enc.to2x2(enc.A1), enc.to2x2(enc.A2)};
    auto entry = [&](std::size_t i, std::size_t j) {
        MPoly e;
        for (std::size_t v = 0; v < 3; ++v)
            e = e + MPoly::variable(v) * g[v].at(i, j);
        return e;
    };
    return entry(0, 0) * entry(1, 1) - entry(0, 1) * entry(1, 0);
}

Subspace spanOfCoeffs(const SymEncoding& enc, const std::vector<Mat>& combos) {
    // Coefficient span in the (A0, A1, A2) coordinates, read off via to2x2.
    // A 3x3 representative x A0 + y A1 + z A2 has 2x2 entries linear in x,y,z;
    // recover the coefficients from three independent entries.
    Mat rows(0, 3);
    for (const auto& m : combos) {
        Mat b = enc.to2x2(m);
        // For this family: b00 = -a x, b01 = x + y, b10 = -a^2 x - z.
        Rat x = b.at(0, 0) / Rat(-enc.a);
        Rat y = b.at(0, 1) - x;
        Rat z = -b.at(1, 0) - Rat(enc.a * enc.a) * x;
        rows.appendRow({x, y, z});
    }
    return Subspace::span(3, rows);
}

}  // namespace

TEST_CASE("catalog fans") {
    Fan p2 = makeSurface(SurfaceId::parse("P2"));
    CHECK(p2.rays() == std::vector<LatticeVec>{lv(1, 0), lv(0, 1), lv(-1, -1)});

    Fan h2 = makeSurface(SurfaceId::parse("Hirz:2"));
    CHECK(h2.rays() ==
          std::vector<LatticeVec>{lv(-1, -2), lv(1, 0), lv(0, 1), lv(0, -1)});

    CHECK(makeSurface(SurfaceId::parse("P2'")).rayCount() == 4);
    CHECK(makeSurface(SurfaceId::parse("P2''")).rayCount() == 5);
    Fan hexagon = makeSurface(SurfaceId::parse("P2'''"));
    CHECK(hexagon.rayCount() == 6);
    // The hexagon carries +-(1,0), +-(0,1), +-(1,1).
    for (const auto& r : {lv(1, 0), lv(-1, 0), lv(0, 1), lv(0, -1), lv(1, 1), lv(-1, -1)})
        CHECK(std::count(hexagon.rays().begin(), hexagon.rays().end(), r) == 1);

    for (const char* id : {"P2", "Hirz:1", "Hirz:4", "P1xP1", "P2'", "P2''", "P2'''"}) {
        Fan f = makeSurface(SurfaceId::parse(id));
        CHECK(f.isComplete());
        CHECK(f.isSmooth());
    }
    // The weighted family fan is complete but singular for a >= 2.
    Fan pa = makeSurface(SurfaceId::parse("Pa:2"));
    CHECK(pa.isComplete());
    CHECK_FALSE(pa.isSmooth());

    CHECK_THROWS_AS(makeSurface(SurfaceId::parse("Hirz:0")), Error);
    CHECK_THROWS_AS(SurfaceId::parse("P3"), Error);
    CHECK(SurfaceId::parse("P2'''").str() == "P2'''");
}

TEST_CASE("blow-ups") {
    Fan p2 = makeSurface(SurfaceId::parse("P2"));
    Fan h1 = makeSurface(SurfaceId::parse("Hirz:1"));
    for (std::size_t cone = 0; cone < 3; ++cone) {
        Fan up = blowUp(p2, cone);
        CHECK(up.rayCount() == 4);
        CHECK(up.isSmooth());
        CHECK(fansEquivalent(up, h1));
    }

    Fan pp = makeSurface(SurfaceId::parse("P1xP1"));
    Fan once = blowUp(pp, 0);
    Fan twice = blowUp(once, coneIndexOf(once, lv(-1, 0), lv(0, -1)));
    CHECK(twice.rayCount() == 6);
    CHECK(fansEquivalent(once, makeSurface(SurfaceId::parse("P2''"))));

    CHECK_THROWS_AS(blowUp(p2, 9), Error);
    Fan pa = makeSurface(SurfaceId::parse("Pa:2"));
    CHECK_THROWS_AS(blowUp(pa, coneIndexOf(pa, lv(-1, -2), lv(1, 0))), Error);
}

TEST_CASE("symmetric encoding invariants") {
    for (long long a : {1, 2, 3, 4}) {
        SymEncoding enc = symEncoding(Int(a));
        CHECK(enc.project * enc.embed == Mat::identity(2));
        for (const Mat* m : {&enc.A0, &enc.A1, &enc.A2}) {
            for (std::size_t i = 0; i < 3; ++i) CHECK(m->at(i, i).isZero());
            CHECK(trace(enc.to2x2(*m)).isZero());
        }
    }
    // For the plane the representatives have equal row sums.
    SymEncoding p2 = symEncoding(1);
    for (const Mat* m : {&p2.A0, &p2.A1, &p2.A2}) {
        Rat s0 = m->at(0, 0) + m->at(0, 1) + m->at(0, 2);
        for (std::size_t i = 1; i < 3; ++i)
            CHECK(m->at(i, 0) + m->at(i, 1) + m->at(i, 2) == s0);
    }
    CHECK_THROWS_AS(symEncoding(0), Error);
}

TEST_CASE("two-by-two presentation and determinants") {
    SymEncoding p2 = symEncoding(1);
    // x A0 + y A1 + z A2 becomes [[-x, x+y], [-(x+z), x]].
    CHECK(p2.to2x2(p2.A0) == Mat{{Rat(-1), Rat(1)}, {Rat(-1), Rat(1)}});
    CHECK(p2.to2x2(p2.A1) == Mat{{Rat(0), Rat(1)}, {Rat(0), Rat(0)}});
    CHECK(p2.to2x2(p2.A2) == Mat{{Rat(0), Rat(0)}, {Rat(-1), Rat(0)}});

    for (long long a : {1, 2, 3, 4}) {
        SymEncoding enc = symEncoding(Int(a));
        MPoly det = symbolicDet(enc);
        MPoly x = MPoly::variable(0), y = MPoly::variable(1), z = MPoly::variable(2);
        MPoly expected = x * y * Rat(a * a) + y * z + z * x;
        CHECK(det == expected);
    }
}

TEST_CASE("symmetric lift round trip") {
    testsupport::Rng rng(51);
    for (long long a : {1, 2, 3}) {
        SymEncoding enc = symEncoding(Int(a));
        for (int it = 0; it < 20; ++it) {
            Mat c(2, 2);
            for (std::size_t i = 0; i < 2; ++i)
                for (std::size_t j = 0; j < 2; ++j) c.at(i, j) = rng.rat();
            Mat m3 = enc.toSymmetric3(c);
            for (std::size_t i = 0; i < 3; ++i) CHECK(m3.at(i, i).isZero());
            CHECK(enc.to2x2(m3) == c);
            auto kernelImage = m3.apply(toRatVec(enc.kernelVec));
            // The lift maps the kernel vector into its span.
            Mat twoRows(0, 3);
            twoRows.appendRow(kernelImage);
            twoRows.appendRow(toRatVec(enc.kernelVec));
            CHECK(rank(twoRows) <= 1);
        }
    }
}

TEST_CASE("ray class bases match the reference table") {
    SymEncoding p2 = symEncoding(1);
    const auto& rho0 = p2.encodedRays[0];
    auto ii0 = classBasis(p2, rho0, RayClass::Nilpotent);
    REQUIRE(ii0.size() == 1);
    CHECK(spanOfCoeffs(p2, ii0) == spanOfCoeffs(p2, {p2.A0}));
    auto i0 = classBasis(p2, rho0, RayClass::Preserving);
    REQUIRE(i0.size() == 2);
    CHECK(spanOfCoeffs(p2, i0) == spanOfCoeffs(p2, {p2.A0, p2.A2 - p2.A1}));

    for (long long a : {1, 2, 3}) {
        SymEncoding enc = symEncoding(Int(a));
        Rat a2{Int(a * a)};
        std::vector<std::vector<Mat>> expectedI{
            {enc.A0, enc.A1 - enc.A2 * a2},
            {enc.A0 - enc.A2 * a2, enc.A1},
            {enc.A0 - enc.A1, enc.A2},
        };
        std::vector<Mat> expectedII{enc.A0, enc.A1, enc.A2};
        for (std::size_t rayIdx = 0; rayIdx < 3; ++rayIdx) {
            const auto& rho = enc.encodedRays[rayIdx];
            auto i = classBasis(enc, rho, RayClass::Preserving);
            auto ii = classBasis(enc, rho, RayClass::Nilpotent);
            REQUIRE(i.size() == 2);
            REQUIRE(ii.size() == 1);
            CHECK(spanOfCoeffs(enc, i) == spanOfCoeffs(enc, expectedI[rayIdx]));
            CHECK(spanOfCoeffs(enc, ii) == spanOfCoeffs(enc, {expectedII[rayIdx]}));
            // Nilpotent class sits inside the preserving class.
            CHECK(spanOfCoeffs(enc, i).contains(spanOfCoeffs(enc, ii)));

            // Defining conditions hold exactly.
            std::vector<Rat> rv = toRatVec(rho);
            for (const auto& m : i) {
                auto w = enc.to2x2(m).apply(rv);
                CHECK((w[0] * rv[1] - w[1] * rv[0]).isZero());
            }
            for (const auto& m : ii) {
                Mat b = enc.to2x2(m);
                auto w = b.apply(rv);
                CHECK((w[0].isZero() && w[1].isZero()));
                for (std::size_t col = 0; col < 2; ++col) {
                    std::vector<Rat> e(2, Rat(0));
                    e[col] = Rat(1);
                    auto im = b.apply(e);
                    CHECK((im[0] * rv[1] - im[1] * rv[0]).isZero());
                }
            }
        }
        CHECK_THROWS_AS(classBasis(enc, lv(0, -1), RayClass::Preserving), Error);
    }
}

TEST_CASE("facet-class rules reproduce the solver spaces on the plane") {
    // Second route to V_r^0: the per-facet endomorphism classes, with the
    // sharpened rule along each ray's orthogonal direction.
    SymEncoding enc = symEncoding(1);
    ToricSheaf t = tangentSheaf(makeSurface(SurfaceId::parse("P2")));
    HiggsRange range = higgsRange(t, true);

    std::array<Mat, 3> g{enc.to2x2(enc.A0), enc.to2x2(enc.A1), enc.to2x2(enc.A2)};
    std::array<LatticeVec, 3> rays = enc.encodedRays;
    std::array<LatticeVec, 3> sPerp{lv(1, -1), lv(0, 1), lv(-1, 0)};  // s^j in rho_j-perp

    // y-coordinates: phi = sum_{m,k} y[m*2+k] A_m tensor e_k.
    auto conditionRows = [&](const LatticeVec& r) {
        Mat rows(0, 6);
        auto coeffOfS = [&](const LatticeVec& s, std::size_t m) {
            // phi_s = sum_m (sum_k y[m,k] s_k) A_m.
            std::vector<Rat> row(6, Rat(0));
            row[m * 2 + 0] = Rat(s[0]);
            row[m * 2 + 1] = Rat(s[1]);
            return row;
        };
        auto addClassCondition = [&](const LatticeVec& s, std::size_t ray, int level) {
            // level: 0 -> vanish, 1 -> nilpotent class, 2 -> preserving class.
            if (level >= 3) return;
            std::vector<std::vector<Mat>> bases{
                {},
                classBasis(enc, rays[ray], RayClass::Nilpotent),
                classBasis(enc, rays[ray], RayClass::Preserving)};
            Subspace allowed = spanOfCoeffs(enc, bases[level]);
            Subspace k = allowed.complement();
            for (std::size_t ki = 0; ki < k.dim(); ++ki) {
                auto kr = k.basis().row(ki);
                std::vector<Rat> row(6, Rat(0));
                for (std::size_t m = 0; m < 3; ++m) {
                    auto part = coeffOfS(s, m);
                    for (std::size_t c = 0; c < 6; ++c) row[c] += kr[m] * part[c];
                }
                rows.appendRow(row);
            }
        };
        for (std::size_t j = 0; j < 3; ++j) {
            long long c = -pairing(r, rays[j]).convert_to<long long>();
            for (std::size_t sj = 0; sj < 3; ++sj) {
                bool orth = sj == j;
                long long effective = orth ? c : c - 1;
                if (effective >= 2)
                    addClassCondition(sPerp[sj], j, 0);
                else if (effective == 1)
                    addClassCondition(sPerp[sj], j, 1);
                else if (effective == 0)
                    addClassCondition(sPerp[sj], j, 2);
            }
        }
        return rows;
    };

    HalfSpaceRegion region(2);
    for (const auto& rho : t.fan.rays()) region.add(rho, -2);
    for (const auto& r : region.latticePoints()) {
        Mat rows = conditionRows(r);
        Subspace ySol = rows.rows() ? Subspace::kernel(rows) : Subspace::full(6);
        // Convert y-coordinates to flattened tensors and compare.
        Mat tensors(0, 8);
        for (std::size_t b = 0; b < ySol.dim(); ++b) {
            auto y = ySol.basis().row(b);
            std::vector<Rat> x(8, Rat(0));
            for (std::size_t m = 0; m < 3; ++m)
                for (std::size_t k = 0; k < 2; ++k)
                    for (std::size_t i = 0; i < 2; ++i)
                        for (std::size_t j = 0; j < 2; ++j)
                            x[tensorIndex(2, 2, i, j, k)] += y[m * 2 + k] * g[m].at(i, j);
            tensors.appendRow(x);
        }
        Subspace viaClasses = Subspace::span(8, tensors);
        auto it = range.points.find(r);
        Subspace viaSolver =
            it == range.points.end() ? Subspace::zero(8) : it->second.traceFree->basis;
        CHECK(viaClasses == viaSolver);
    }
}

TEST_CASE("reference basis spans the 18 names") {
    NamedBasis basis = namedVariableMap();
    std::size_t count = 0;
    for (const auto& [deg, els] : basis) count += els.size();
    CHECK(count == 18);
    CHECK(basis.size() == 10);
}
