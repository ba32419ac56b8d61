#include "hkq/polyhedron.hpp"

#include "hkq/json_io.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace hkq;

namespace {

// the four reference half-space normals with offsets r
Polyhedron triplet_delta(const std::vector<Rational>& r) {
    Polyhedron P(2, {});
    P.add({1, 1}, r[0], Sense::Ge);
    P.add({1, 0}, r[1], Sense::Ge);
    P.add({-1, 0}, r[2], Sense::Ge);
    P.add({0, -1}, r[3], Sense::Ge);
    return P;
}

Polyhedron simplex2() {
    Polyhedron P(2, {});
    P.add({1, 0}, Rational(0), Sense::Ge);
    P.add({0, 1}, Rational(0), Sense::Ge);
    P.add({-1, -1}, Rational(1), Sense::Ge);
    return P;
}

}  // namespace

TEST_CASE("feasibility") {
    Polyhedron P(1, {});
    P.add({1}, Rational(0), Sense::Ge);   // v >= 0
    P.add({1}, Rational(1), Sense::Le);   // v <= -1
    CHECK_FALSE(feasible(P));

    // two parallel hyperplanes as an equality system
    Polyhedron Q(2, {});
    Q.add({1, 0}, Rational(1), Sense::Eq);
    Q.add({-1, 0}, Rational(1), Sense::Eq);
    CHECK_FALSE(feasible(Q));

    Polyhedron D = triplet_delta({Rational(0), Rational(1), Rational(1), Rational(0)});
    CHECK(feasible(D));
    // contains (1/2, -1/4)
    std::vector<Rational> pt = {Rational(1, 2), Rational(-1, 4)};
    for (const auto& c : D.constraints) {
        Rational v = c.offset;
        for (int j = 0; j < 2; ++j) v += Rational(c.normal[static_cast<std::size_t>(j)]) * pt[static_cast<std::size_t>(j)];
        CHECK(v >= 0);
    }

    // the simplex route must agree with Fourier-Motzkin in low dimension
    CHECK(lp_feasible_point({1, {{Rational(1)}, {Rational(-1)}}, {Rational(0), Rational(1)}, {}, {}})
              .has_value() == false);
}

TEST_CASE("boundedness") {
    CHECK(bounded(simplex2()));
    Polyhedron H(2, {});
    H.add({1, 0}, Rational(0), Sense::Ge);
    CHECK_FALSE(bounded(H));
    // the upper-triangle piece Delta_{1,4} of the triplet at (0,1,1,0)
    Polyhedron T(2, {});
    T.add({1, 1}, Rational(0), Sense::Le);
    T.add({1, 0}, Rational(1), Sense::Ge);
    T.add({-1, 0}, Rational(1), Sense::Ge);
    T.add({0, -1}, Rational(0), Sense::Le);
    CHECK(feasible(T));
    CHECK(bounded(T));
    CHECK(volume(T) == Rational(1, 2));
    CHECK_THROWS_AS(bounded(Polyhedron(1, {{{1}, Rational(0), Sense::Ge},
                                           {{1}, Rational(1), Sense::Le}})),
                    precondition_error);
}

TEST_CASE("vertices") {
    Polyhedron D = triplet_delta({Rational(0), Rational(1), Rational(1), Rational(0)});
    auto vs = vertices(D);
    REQUIRE(vs.size() == 3);
    CHECK(vs[0] == std::vector<Rational>{Rational(0), Rational(0)});
    CHECK(vs[1] == std::vector<Rational>{Rational(1), Rational(-1)});
    CHECK(vs[2] == std::vector<Rational>{Rational(1), Rational(0)});

    // unit square
    Polyhedron Sq(2, {});
    Sq.add({1, 0}, Rational(0), Sense::Ge);
    Sq.add({-1, 0}, Rational(1), Sense::Ge);
    Sq.add({0, 1}, Rational(0), Sense::Ge);
    Sq.add({0, -1}, Rational(1), Sense::Ge);
    CHECK(vertices(Sq).size() == 4);

    // a single point
    Polyhedron Pt(2, {});
    Pt.add({1, 0}, Rational(-3), Sense::Eq);
    Pt.add({0, 1}, Rational(2), Sense::Eq);
    auto pv = vertices(Pt);
    REQUIRE(pv.size() == 1);
    CHECK(pv[0] == std::vector<Rational>{Rational(3), Rational(-2)});

    // every vertex satisfies all constraints and has d active ones
    for (const auto& v : vs) {
        int active = 0;
        for (const auto& c : D.constraints) {
            Rational val = c.offset;
            for (int j = 0; j < 2; ++j)
                val += Rational(c.normal[static_cast<std::size_t>(j)]) * v[static_cast<std::size_t>(j)];
            CHECK(val >= 0);
            if (val == 0) ++active;
        }
        CHECK(active >= 2);
    }
}

TEST_CASE("volumes against the shoelace oracle") {
    Polyhedron D = triplet_delta({Rational(0), Rational(1), Rational(1), Rational(0)});
    CHECK(volume(D) == Rational(1, 2));
    Polyhedron T = triplet_delta({Rational(7), Rational(1), Rational(1), Rational(0)});
    CHECK(volume(T) == oracle::shoelace_area(vertices(T)));
    CHECK(volume(T) == Rational(14));

    // lower-dimensional polytope has volume zero
    Polyhedron L(2, {});
    L.add({0, 1}, Rational(0), Sense::Eq);
    L.add({1, 0}, Rational(0), Sense::Ge);
    L.add({-1, 0}, Rational(1), Sense::Ge);
    CHECK(volume(L) == Rational(0));

    // random quadrilaterals against the oracle
    Lcg rng(77);
    for (int t = 0; t < 30; ++t) {
        std::vector<Rational> r = {Rational(rng.range(0, 6)), Rational(1 + rng.range(0, 5)),
                                   Rational(1 + rng.range(0, 5)), Rational(rng.range(0, 4))};
        Polyhedron P = triplet_delta(r);
        if (!feasible(P)) continue;
        CHECK(volume(P) == oracle::shoelace_area(vertices(P)));
    }
}

TEST_CASE("volume of simplices equals |det|/d!") {
    // 3d simplex from four inequality constraints
    Polyhedron S(3, {});
    S.add({1, 0, 0}, Rational(0), Sense::Ge);
    S.add({0, 1, 0}, Rational(0), Sense::Ge);
    S.add({0, 0, 1}, Rational(0), Sense::Ge);
    S.add({-2, -3, -1}, Rational(6), Sense::Ge);  // 2x+3y+z <= 6
    // vertices (0,0,0),(3,0,0),(0,2,0),(0,0,6): det = 3*2*6 = 36, /3! = 6
    CHECK(volume(S) == Rational(6));

    // translation invariance and dilation scaling on a random triangle
    Lcg rng(13);
    for (int t = 0; t < 20; ++t) {
        Polyhedron P(2, {});
        P.add({1, 0}, Rational(rng.range(0, 3)), Sense::Ge);
        P.add({0, 1}, Rational(rng.range(0, 3)), Sense::Ge);
        P.add({-1, -1}, Rational(1 + rng.range(0, 4)), Sense::Ge);
        if (!feasible(P)) continue;
        Rational vol = volume(P);
        Polyhedron Q = P;  // translate by (1, -2): offsets shift by a.t
        Q.constraints[0].offset += Rational(1);
        Q.constraints[1].offset += Rational(-2);
        Q.constraints[2].offset += Rational(1);  // -(1) - (-2) = 1
        CHECK(volume(Q) == vol);
        Polyhedron Dil = P;  // dilate offsets by 3: volume scales by 3^2
        for (auto& c : Dil.constraints) c.offset *= 3;
        CHECK(volume(Dil) == vol * 9);
    }
}

TEST_CASE("interior sampling") {
    auto pts = sample_interior(simplex2(), 1, 0);
    REQUIRE(pts.size() == 1);
    CHECK(pts[0] == std::vector<Rational>{Rational(1, 3), Rational(1, 3)});  // barycenter

    Polyhedron D = triplet_delta({Rational(0), Rational(1), Rational(1), Rational(0)});
    auto three = sample_interior(D, 3, 42);
    REQUIRE(three.size() == 3);
    for (const auto& p : three) {
        for (const auto& c : D.constraints) {
            Rational v = c.offset;
            for (int j = 0; j < 2; ++j)
                v += Rational(c.normal[static_cast<std::size_t>(j)]) * p[static_cast<std::size_t>(j)];
            CHECK(v > 0);  // strictly interior
        }
    }
    CHECK(sample_interior(D, 3, 42) == three);  // deterministic

    Polyhedron Pt(2, {});
    Pt.add({1, 0}, Rational(0), Sense::Eq);
    Pt.add({0, 1}, Rational(0), Sense::Eq);
    CHECK_THROWS_AS(sample_interior(Pt, 1, 0), precondition_error);
}

TEST_CASE("polyhedron JSON round trip") {
    Polyhedron P(2, {});
    P.add({1, 1}, Rational(1, 2), Sense::Ge);
    P.add({-1, 0}, Rational(3), Sense::Le);
    P.add({0, 1}, Rational(-2, 7), Sense::Eq);
    auto j = polyhedron_to_json(P);
    Polyhedron Q = polyhedron_from_json(j);
    CHECK(Q.d == P.d);
    REQUIRE(Q.constraints.size() == P.constraints.size());
    for (std::size_t i = 0; i < P.constraints.size(); ++i) {
        CHECK(Q.constraints[i].normal == P.constraints[i].normal);
        CHECK(Q.constraints[i].offset == P.constraints[i].offset);
        CHECK(Q.constraints[i].sense == P.constraints[i].sense);
    }
    CHECK(polyhedron_to_json(Q) == j);
    CHECK_THROWS_AS(polyhedron_from_json(Json::parse("{\"d\": 2}")), input_error);
}

TEST_CASE("feasible agrees with vertex/ray evidence") {
    Lcg rng(555);
    for (int t = 0; t < 40; ++t) {
        Polyhedron P(2, {});
        int m = 2 + static_cast<int>(rng.below(4));
        for (int c = 0; c < m; ++c) {
            std::vector<long long> a = {rng.range(-2, 2), rng.range(-2, 2)};
            if (a[0] == 0 && a[1] == 0) a[0] = 1;
            P.add(a, Rational(rng.range(-3, 3)), rng.below(2) ? Sense::Ge : Sense::Le);
        }
        bool feas = feasible(P);
        bool evidence = feasible_point(P).has_value();
        CHECK(feas == evidence);
        if (feas) {
            bool evidence2 = !vertices(P).empty() || !bounded(P);
            CHECK(evidence2);
        }
    }
}
