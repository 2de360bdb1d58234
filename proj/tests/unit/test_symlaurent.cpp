#include <doctest.h>

#include "cohiggs/errors.hpp"
#include "cohiggs/laurent.hpp"
#include "cohiggs/polysystem.hpp"
#include "seed.hpp"

using namespace cohiggs;

namespace {

LatticeVec lv(long long x) { return {Int(x)}; }
LatticeVec lv2(long long x, long long y) { return {Int(x), Int(y)}; }

LaurentPoly randomLaurent(testsupport::Rng& rng, std::size_t rank, int maxTerms) {
    LaurentPoly p(rank);
    int n = rng.intIn(0, maxTerms);
    for (int i = 0; i < n; ++i) {
        LatticeVec e(rank);
        for (auto& x : e) x = Int(rng.intIn(-2, 2));
        p.addTerm(e, rng.rat());
    }
    return p;
}

}  // namespace

TEST_CASE("laurent multiplication") {
    auto chi = [](long long a, long long b) { return LaurentPoly::monomial(lv2(a, b), Rat(1)); };
    CHECK(chi(1, 2) * chi(-3, 1) == chi(-2, 3));

    LaurentPoly x = LaurentPoly::monomial(lv(1), Rat(1));
    LaurentPoly xinv = LaurentPoly::monomial(lv(-1), Rat(1));
    CHECK((x + xinv) * (x - xinv) ==
          LaurentPoly::monomial(lv(2), Rat(1)) - LaurentPoly::monomial(lv(-2), Rat(1)));

    // (c0 + c1 x + c-1 x^-1)^2 expanded by hand.
    Rat c0(2), c1(3), cm(5);
    LaurentPoly p = LaurentPoly::constant(1, c0) + x * c1 + xinv * cm;
    LaurentPoly sq = p * p;
    LaurentPoly expected(1);
    expected.addTerm(lv(2), c1 * c1);
    expected.addTerm(lv(1), Rat(2) * c0 * c1);
    expected.addTerm(lv(0), c0 * c0 + Rat(2) * c1 * cm);
    expected.addTerm(lv(-1), Rat(2) * c0 * cm);
    expected.addTerm(lv(-2), cm * cm);
    CHECK(sq == expected);
}

TEST_CASE("laurent evaluation") {
    CHECK(LaurentPoly::constant(2, Rat(1)).evalAt({Rat(7), Rat(-2)}) == Rat(1));
    LaurentPoly x = LaurentPoly::monomial(lv(1), Rat(1));
    LaurentPoly xinv = LaurentPoly::monomial(lv(-1), Rat(1));
    CHECK((x + xinv).evalAt({Rat(2)}) == Rat(Int(5), Int(2)));
    LaurentPoly xy = LaurentPoly::monomial(lv2(1, 0), Rat(1)) * LaurentPoly::monomial(lv2(0, 1), Rat(1));
    CHECK(xy.evalAt({Rat(2), Rat(3)}) == Rat(6));
    CHECK_THROWS_AS(x.evalAt({Rat(0)}), Error);
}

TEST_CASE("evaluation is a ring homomorphism") {
    testsupport::Rng rng(21);
    for (int it = 0; it < 25; ++it) {
        LaurentPoly a = randomLaurent(rng, 2, 4);
        LaurentPoly b = randomLaurent(rng, 2, 4);
        std::vector<Rat> t{rng.rat(1, 4, 3), rng.rat(1, 4, 3)};
        CHECK((a * b).evalAt(t) == a.evalAt(t) * b.evalAt(t));
        CHECK((a + b).evalAt(t) == a.evalAt(t) + b.evalAt(t));
    }
}

TEST_CASE("ring axioms, spot-checked") {
    testsupport::Rng rng(22);
    for (int it = 0; it < 15; ++it) {
        LaurentPoly a = randomLaurent(rng, 2, 3);
        LaurentPoly b = randomLaurent(rng, 2, 3);
        LaurentPoly c = randomLaurent(rng, 2, 3);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * b == b * a);
    }
}

TEST_CASE("minus-perfect-square extraction") {
    LaurentPoly x = LaurentPoly::monomial(lv2(1, 0), Rat(1));
    LaurentPoly y = LaurentPoly::monomial(lv2(0, 1), Rat(1));

    auto d1 = isMinusPerfectSquare(-(x * x));
    REQUIRE(d1.has_value());
    CHECK((*d1 == x || *d1 == -x));

    LaurentPoly s = x + y;
    auto d2 = isMinusPerfectSquare(-(s * s));
    REQUIRE(d2.has_value());
    CHECK((*d2 == s || *d2 == -s));

    CHECK_FALSE(isMinusPerfectSquare(x * y).has_value());
    CHECK_FALSE(isMinusPerfectSquare(x).has_value());
}

TEST_CASE("minus-perfect-square on random small roots") {
    testsupport::Rng rng(23);
    int found = 0;
    for (int it = 0; it < 40; ++it) {
        LaurentPoly d = randomLaurent(rng, 2, 4);
        if (d.isZero()) continue;
        auto back = isMinusPerfectSquare(-(d * d));
        REQUIRE(back.has_value());
        CHECK((*back == d || *back == -d));
        ++found;
    }
    CHECK(found > 20);
}

TEST_CASE("exact laurent division") {
    LaurentPoly x = LaurentPoly::monomial(lv(1), Rat(1));
    LaurentPoly one = LaurentPoly::constant(1, Rat(1));
    // (x^5 - 1) / (x - 1) = x^4 + x^3 + x^2 + x + 1.
    LaurentPoly num = LaurentPoly::monomial(lv(5), Rat(1)) - one;
    auto q = num.divideExact(x - one);
    REQUIRE(q.has_value());
    LaurentPoly expected(1);
    for (int k = 0; k <= 4; ++k) expected.addTerm(lv(k), Rat(1));
    CHECK(*q == expected);
    CHECK_FALSE((x + one).divideExact(x - one).has_value());
}

TEST_CASE("solver variable naming and aliases") {
    PolyVar v = solverVar(lv2(-2, 1), 0);
    CHECK(v.name == "c[(-2,1)][0]");
    CHECK(casAlias(v) == "c_m2_1_0");
}

TEST_CASE("witness substitution") {
    // Twisted cubic relations over vars a,b,c,d.
    PolySystem sys;
    for (const char* n : {"a", "b", "c", "d"}) sys.vars.push_back(PolyVar{n});
    MPoly a = MPoly::variable(0), b = MPoly::variable(1), c = MPoly::variable(2),
          d = MPoly::variable(3);
    sys.polys.push_back(a * d - b * c);
    sys.polys.push_back(b * b - a * c);
    sys.polys.push_back(c * c - b * d);

    // Witness (s^3, s^2 t, s t^2, t^3) in fresh parameters.
    MPoly s = MPoly::variable(0), t = MPoly::variable(1);
    std::map<PolyVar, MPoly> witness{{PolyVar{"a"}, s * s * s},
                                     {PolyVar{"b"}, s * s * t},
                                     {PolyVar{"c"}, s * t * t},
                                     {PolyVar{"d"}, t * t * t}};
    CHECK(substituteWitness(sys, witness));

    witness[PolyVar{"d"}] = s * s * s;
    CHECK_FALSE(substituteWitness(sys, witness));

    std::map<PolyVar, MPoly> zeroAll;
    for (const auto& v : sys.vars) zeroAll[v] = MPoly();
    CHECK(substituteWitness(sys, zeroAll));

    std::map<PolyVar, MPoly> missing{{PolyVar{"a"}, s}};
    CHECK_THROWS_AS(substituteWitness(sys, missing), Error);
}
