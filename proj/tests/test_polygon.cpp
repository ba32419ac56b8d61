#include "hkq/polygon.hpp"

#include "fixtures.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <set>

using namespace hkq;

namespace {

Poly<Rational> qp(const RingPtr& R, const std::string& s) { return poly_parse<Rational>(R, s); }

Subset mask(std::initializer_list<int> one_based) {
    Subset s = 0;
    for (int i : one_based) s |= Subset{1} << (i - 1);
    return s;
}

}  // namespace

TEST_CASE("validate_alpha") {
    auto fam = validate_alpha(fixtures::alpha11333());
    CHECK(fam.is_short(mask({1, 2})));  // 2 < 9
    CHECK(fam.is_long(mask({3, 4})));
    CHECK(fam.short_prime.size() == 10);  // 7 pairs + 3 triples
    CHECK(fam.all_short.size() == 16);    // exactly half of the 32 subsets

    PolygonSpec tie{{Rational(1), Rational(1), Rational(1), Rational(1)}};
    CHECK_THROWS_WITH_AS(validate_alpha(tie), doctest::Contains("not generic"),
                         precondition_error);

    PolygonSpec neg{{Rational(1), Rational(-1), Rational(1)}};
    CHECK_THROWS_AS(validate_alpha(neg), precondition_error);

    PolygonSpec small{{Rational(1), Rational(2), Rational(4)}};
    auto fam3 = validate_alpha(small);
    CHECK(fam3.short_prime == std::vector<Subset>{mask({1, 2})});
}

TEST_CASE("fixed point report") {
    auto reps = fixed_report(fixtures::alpha11333());
    REQUIRE(reps.size() == 11);  // X plus one CP^{|S|-2} per S in S'
    CHECK(reps[0].is_X);
    CHECK(reps[0].complex_dim == 2);
    std::int64_t euler_tally = 0;
    for (std::size_t i = 1; i < reps.size(); ++i) {
        const auto& c = reps[i];
        CHECK(c.complex_dim == __builtin_popcount(c.S) - 2);
        CHECK(c.poincare == std::vector<std::int64_t>(static_cast<std::size_t>(c.complex_dim) + 1, 1));
        euler_tally += c.complex_dim + 1;
    }
    CHECK(euler_tally == 13);  // sum over S' of (|S| - 1)

    // |S| = 2 components are points
    auto us = us_fixed_report(fixtures::alpha11333(), mask({1, 2}));
    CHECK(us.xs_complex_dim == 1);  // X_S is a projective line
    CHECK(us.xs_edge_lengths == std::vector<Rational>{Rational(3), Rational(3), Rational(3), Rational(2)});
    CHECK(us.point_components.size() == 4);  // M_S and the three T_j
    std::set<Subset> pts(us.point_components.begin(), us.point_components.end());
    CHECK(pts == std::set<Subset>{mask({1, 2}), mask({1, 2, 3}), mask({1, 2, 4}), mask({1, 2, 5})});
}

TEST_CASE("abelian presentation and the restricted 2n-line arrangement") {
    PolygonSpec spec{{Rational(1), Rational(2), Rational(2)}};
    auto R = abelian_presentation(spec);
    // W-invariance: a_i <-> b_i, del -> -del fixes the ideal
    {
        RingPtr A = R.ring;
        std::vector<Poly<Rational>> images;
        for (int i = 0; i < 3; ++i)
            images.push_back(Poly<Rational>::variable(A, static_cast<std::size_t>(3 + i)));
        for (int i = 0; i < 3; ++i)
            images.push_back(Poly<Rational>::variable(A, static_cast<std::size_t>(i)));
        images.push_back(-Poly<Rational>::variable(A, "del"));
        images.push_back(Poly<Rational>::variable(A, "x"));
        std::vector<Poly<Rational>> mapped;
        for (const auto& g : R.relations.gens) mapped.push_back(poly_subst(g, images));
        CHECK(ideal_equal(Ideal<Rational>(A, mapped), R.relations));
    }

    // the hypertoric HS1 presentation of the restricted arrangement agrees
    auto arr = abelian_arrangement(spec);
    auto va = validate(arr);
    CHECK(is_simple(arr));
    auto hs1 = kirwan_presentation(va, KirwanFlavor::HS1);
    auto images = abelian_to_kirwan_images(spec, hs1.ring);
    std::vector<Poly<Rational>> mapped;
    for (const auto& g : R.relations.gens) mapped.push_back(poly_subst(g, images));
    CHECK(ideal_equal(Ideal<Rational>(hs1.ring, mapped), hs1.relations));
}

TEST_CASE("hyperpolygon presentation and the ordinary quotient") {
    auto spec = fixtures::alpha11333();
    auto fam = validate_alpha(spec);
    auto hp = hp_presentation(spec);
    RingPtr R = hp.ring;

    // konno ring Hilbert function, frozen from the dense linear-algebra oracle
    auto konno = konno_presentation(spec);
    auto dims = hilbert_function(konno, 4);
    CHECK(oracle::dense_hilbert(konno, 4) == dims);
    CHECK(dims == std::vector<std::int64_t>{1, 5, 11, 0, 0});
    // top nonzero cohomological degree 2(n-3)
    CHECK(dims[2] != 0);
    CHECK(dims[3] == 0);

    // setting x := 0 in the hyperpolygon ring reproduces the konno ideal
    std::vector<Poly<Rational>> I1 = hp.relations.gens;
    I1.push_back(Poly<Rational>::variable(R, "x"));
    std::vector<Poly<Rational>> I2 = hp_quadratic_relations(R, 5);
    for (const auto& m : monomials_of_degree<Rational>(make_ring(numbered_vars("c", 5)), 3)) {
        Poly<Rational> p(R);
        Monomial big(R->nvars());
        for (int i = 0; i < 5; ++i) big.e[static_cast<std::size_t>(i)] = m.e[static_cast<std::size_t>(i)];
        p.add_term(big, Rational(1));
        I2.push_back(p);
    }
    I2.push_back(Poly<Rational>::variable(R, "x"));
    CHECK(ideal_equal(Ideal<Rational>(R, I1), Ideal<Rational>(R, I2)));

    // e . D_S lies in J for every nonempty short S
    std::vector<Poly<Rational>> jg = hp_quadratic_relations(R, 5);
    for (Subset S : fam.all_short) jg.push_back(hp_CS(R, fam, S));
    auto GJ = groebner(Ideal<Rational>(R, jg));
    Poly<Rational> e = hp_euler(R);
    for (Subset S : fam.all_short) {
        if (S == 0) continue;
        CHECK(ideal_member(e * hp_DS(R, fam, S), GJ));
    }

    // kernel triviality below degree n-2: no nonzero F of degree < 3 with
    // e F in J, checked by linear algebra against the Groebner basis
    for (int deg = 0; deg <= 2; ++deg) {
        auto mons = monomials_of_degree<Rational>(R, deg);
        std::vector<Poly<Rational>> nfs;
        for (const auto& m : mons) {
            Poly<Rational> h(R);
            h.add_term(m, Rational(1));
            nfs.push_back(normal_form(h * e, GJ));
        }
        // collect coordinates
        std::set<Monomial, detail::DrlLess> support;
        for (const auto& p : nfs)
            for (auto& [m, c] : p.terms()) support.insert(m);
        std::vector<Monomial> basis(support.begin(), support.end());
        Matrix<Rational> M;
        for (const auto& p : nfs) {
            std::vector<Rational> row;
            for (const auto& b : basis) row.push_back(p.coeff(b));
            M.append_row(row);
        }
        Matrix<Rational> T(M.cols(), M.rows());
        for (std::size_t i = 0; i < M.rows(); ++i)
            for (std::size_t j = 0; j < M.cols(); ++j) T.at(j, i) = M.at(i, j);
        // the quadratic relations already multiply into J; quotient those out
        Matrix<Rational> rel;
        auto quad = hp_quadratic_relations(R, 5);
        for (const auto& q : quad) {
            if (q.degree() > deg) continue;
            for (const auto& m : monomials_of_degree<Rational>(R, deg - q.degree())) {
                Poly<Rational> p = q.mul_term(m, Rational(1));
                std::vector<Rational> row;
                for (const auto& mm : mons) row.push_back(p.coeff(mm));
                rel.append_row(row);
            }
        }
        std::size_t expected_kernel = rel.rows() == 0 ? 0 : rel.rank();
        CHECK(T.nullspace().size() == expected_kernel);
    }
}

TEST_CASE("hp colon certificates at n = 4 and n = 5") {
    auto rep = verify_hp_colon(fixtures::alpha2348());
    CHECK(rep.memberships);
    CHECK(rep.equal);
    PolygonSpec nearly_equilateral{{Rational(1), Rational(1), Rational(1), Rational(1), Rational(3)}};
    auto rep5 = verify_hp_colon(nearly_equilateral);
    CHECK(rep5.memberships);
    CHECK(rep5.equal);
}

TEST_CASE("core component presentations") {
    auto spec = fixtures::alpha11333();

    // maximal short subset: H^*(U_S) = Q[d1]/<d1^{n-2}>
    {
        auto core = core_presentation(spec, mask({1, 2, 3}), false);
        auto dims = hilbert_function(core.ring, 4);
        CHECK(dims == std::vector<std::int64_t>{1, 1, 1, 0, 0});
    }

    // S = {1,2}: the printed ideal of the blow-up of CP^2 at three points
    {
        auto core = core_presentation(spec, mask({1, 2}), false);
        RingPtr R = core.ring.ring;
        Ideal<Rational> printed(
            R, {qp(R, "d1 - d2"), qp(R, "d3*d1 - d3^2"), qp(R, "d4*d1 - d4^2"),
                qp(R, "d5*d1 - d5^2"), qp(R, "d3*d4"), qp(R, "d3*d5"), qp(R, "d4*d5"),
                qp(R, "d1^2 - d1*d3 - d1*d4"), qp(R, "d1^2 - d1*d3 - d1*d5"),
                qp(R, "d1^2 - d1*d4 - d1*d5")});
        CHECK(ideal_equal(core.ring.relations, printed));
    }

    // S = {1,3}: Q[d1,d2]/<d1^2, d2(d1-d2)>
    {
        auto core = core_presentation(spec, mask({1, 3}), false);
        RingPtr R = core.ring.ring;
        Ideal<Rational> printed(R, {qp(R, "d1^2"), qp(R, "d2*d1 - d2^2"), qp(R, "d1 - d3"),
                                    qp(R, "d4"), qp(R, "d5")});
        CHECK(ideal_equal(core.ring.relations, printed));
    }

    // equivariant and ordinary families match under x := 0
    {
        auto eq = core_presentation(spec, mask({1, 2}), true);
        auto ord = core_presentation(spec, mask({1, 2}), false);
        std::vector<Poly<Rational>> images;
        for (int i = 0; i < 5; ++i)
            images.push_back(Poly<Rational>::variable(ord.ring.ring, static_cast<std::size_t>(i)));
        images.push_back(Poly<Rational>::zero(ord.ring.ring));
        std::vector<Poly<Rational>> mapped;
        for (const auto& g : eq.ring.relations.gens) mapped.push_back(poly_subst(g, images));
        // x:=0 of J_S contains I_S and vice versa... they agree as ideals
        CHECK(ideal_equal(Ideal<Rational>(ord.ring.ring, mapped), ord.ring.relations));
    }

    // relabeling: S without the pivot gets rotated and recorded
    {
        auto core = core_presentation(spec, mask({2, 3}), false);
        CHECK(core.relabel[0] == 1);  // new slot 1 holds old edge 2
        CHECK(core.relabel[1] == 0);
    }

    // long subsets rejected
    CHECK_THROWS_AS(core_presentation(spec, mask({3, 4}), false), precondition_error);
}

TEST_CASE("kernel-intersection lemma") {
    auto spec = fixtures::alpha11333();
    // x-free version: intersection over short T containing S of
    // <d1 - d_i (i in T), d_j (j not in T)> equals the closed form
    auto repf = verify_jt(spec, mask({1, 2}), false);
    CHECK(repf.equal);
    // full equivariant version
    auto rept = verify_jt(spec, mask({1, 2}), true);
    CHECK(rept.equal);
    // |S| = 3 case
    auto rep3 = verify_jt(spec, mask({1, 2, 3}), true);
    CHECK(rep3.equal);
}

TEST_CASE("kernel-intersection lemma at n = 6") {
    PolygonSpec six{{Rational(1), Rational(1), Rational(1), Rational(1), Rational(1), Rational(7)}};
    auto rep = verify_jt(six, mask({1, 2}), true);
    CHECK(rep.equal);
    auto rep3 = verify_jt(six, mask({1, 2, 3}), true);
    CHECK(rep3.equal);
}

TEST_CASE("equivariant kernel equals the face-kernel intersection meet") {
    // J_S = (intersection of the ker phi_T) cap ker phi_emptyset, the
    // containment chain behind the four-family presentation
    auto spec = fixtures::alpha11333();
    auto fam = validate_alpha(spec);
    Subset S = mask({1, 2});
    auto eq = core_presentation(spec, S, true);
    RingPtr R = eq.ring.ring;
    auto dv = [&](int i) { return Poly<Rational>::variable(R, static_cast<std::size_t>(i)); };
    Poly<Rational> d1 = dv(0);
    Poly<Rational> d1x = d1 + Poly<Rational>::variable(R, "x");

    auto jt = verify_jt(spec, S, true);
    REQUIRE(jt.equal);

    // ker phi_emptyset: families 1-3 plus the shifted-product generators
    std::vector<Poly<Rational>> pols;
    for (int i : subset_elements(S, 5))
        if (i != 0) pols.push_back(d1 - dv(i));
    Subset comp = ((Subset{1} << 5) - 1) & ~S;
    for (int j : subset_elements(comp, 5)) pols.push_back(dv(j) * (d1 - dv(j)));
    for (Subset Rset = 1; Rset < (Subset{1} << 5); ++Rset) {
        if ((Rset & S) != 0) continue;
        if (!fam.is_long(Rset | S)) continue;
        Poly<Rational> m = Poly<Rational>::constant(R, Rational(1));
        for (int j : subset_elements(Rset, 5)) m = m * dv(j);
        pols.push_back(m);
    }
    Poly<Rational> head = Poly<Rational>::constant(R, Rational(1));
    for (int k = 0; k < __builtin_popcount(S) - 1; ++k) head = head * d1x;
    for (Subset L = 1; L < (Subset{1} << 5); ++L) {
        if ((L & S) != 0) continue;
        if (!fam.is_long(L)) continue;
        Poly<Rational> shifted = Poly<Rational>::constant(R, Rational(1));
        Poly<Rational> plain = shifted;
        for (int j : subset_elements(L, 5)) {
            shifted = shifted * (dv(j) - d1);
            plain = plain * dv(j);
        }
        pols.push_back(head * poly_divexact(shifted - plain, d1));
    }
    Ideal<Rational> pols_ideal(R, pols);
    auto meet = ideal_intersect(jt.closed_form, pols_ideal);
    CHECK(ideal_equal(meet, eq.ring.relations));
}

TEST_CASE("upsilon triangularity and the coefficient formula") {
    auto spec = fixtures::alpha11333();
    auto rep = upsilon_check(spec);
    CHECK(rep.unit_lower_triangular);
    CHECK(rep.row_sets.size() == 15);

    // expand v_S directly and compare coefficients with the closed
    // binomial formula, for every nonempty short S
    auto fam = validate_alpha(spec);
    const int n = 5;
    RingPtr R = make_ring(numbered_vars("d", n));
    auto dv = [&](int i) { return Poly<Rational>::variable(R, static_cast<std::size_t>(i)); };
    auto reduce_dk = [&](const Poly<Rational>& p) {
        Poly<Rational> out(R);
        for (auto& [m, c] : p.terms()) {
            Monomial r(m.nvars());
            r.e[0] = m.e[0];
            for (std::size_t k = 1; k < m.nvars(); ++k)
                if (m.e[k] > 0) {
                    r.e[0] += m.e[k] - 1;
                    r.e[k] = 1;
                }
            out.add_term(r, c);
        }
        return out;
    };
    for (Subset S : fam.all_short) {
        if (S == 0) continue;
        int ms = min_element(S);
        int ns = min_complement_element(S, n);
        Poly<Rational> v = Poly<Rational>::constant(R, Rational((n % 2 == 0) ? 1 : -1));
        for (int j = 0; j < n; ++j) {
            if (((S >> j) & 1) && j != ms) v = v * (Rational(2) * dv(j) - dv(0));
            if (!((S >> j) & 1) && j != ns) v = v * (dv(j) + dv(ns) - dv(0));
        }
        v = reduce_dk(v);
        // walk over row sets A (subsets of {2..n})
        for (Subset A = 0; A + 1 < (Subset{1} << (n - 1)); ++A) {
            int card = __builtin_popcount(A);
            Monomial m(static_cast<std::size_t>(n));
            m.e[0] = static_cast<std::int32_t>(n - 2 - card);
            for (int k = 0; k < n - 1; ++k)
                if ((A >> k) & 1) m.e[static_cast<std::size_t>(k + 1)] = 1;
            Rational got = Rational((card % 2 == 0) ? 1 : -1) * v.coeff(m);
            Subset Ahat = static_cast<Subset>(A << 1);  // as subset of {2..n}
            Subset Sbar = S & ~(Subset{1} << ms);
            Rational expect(0);
            if (!((S >> 0) & 1)) {
                // 1 in S^c (so n_S = 1): sum over Sbar^c subset A, m_S not in A
                Subset sbarc = (((Subset{1} << n) - 1) & ~S) & ~(Subset{1} << ns);
                bool cond = ((Ahat & sbarc) == sbarc) && !((Ahat >> ms) & 1);
                if (cond) expect = Rational(Integer(1) << __builtin_popcount(Ahat & Sbar));
            } else {
                // 1 in S: sum over A not containing S^c
                Subset sc = ((Subset{1} << n) - 1) & ~S;
                bool cond = (Ahat & sc) != sc;
                if (cond) expect = Rational(Integer(1) << __builtin_popcount(Ahat & Sbar));
            }
            CHECK(got == expect);
        }
    }

    // a random generic n = 4 spec is also unit lower triangular
    PolygonSpec four{{Rational(2), Rational(3), Rational(4), Rational(8)}};
    CHECK(upsilon_check(four).unit_lower_triangular);
}

TEST_CASE("intersection forms at n = 5") {
    auto spec = fixtures::alpha11333();

    auto f12 = intersection_form_n5(spec, mask({1, 2}));
    REQUIRE(f12.basis_labels.size() == 4);
    CHECK(f12.basis_labels[0] == "d1 - d3 - d4 - d5");
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            Rational expect = i != j ? Rational(0) : (i == 0 ? Rational(1) : Rational(-1));
            CHECK(f12.matrix.at(i, j) == expect);
        }

    auto f13 = intersection_form_n5(spec, mask({1, 3}));
    REQUIRE(f13.basis_labels.size() == 2);
    CHECK(f13.basis_labels[0] == "d1 - d2");
    CHECK(f13.basis_labels[1] == "d2");
    CHECK(f13.matrix.at(0, 0) == Rational(-1));
    CHECK(f13.matrix.at(1, 1) == Rational(1));
    CHECK(f13.matrix.at(0, 1) == Rational(0));
    CHECK(f13.matrix.at(1, 0) == Rational(0));

    // unimodular symmetric matrices in both cases
    for (const auto* f : {&f12, &f13}) {
        const auto& M = f->matrix;
        Rational det = determinant(M);
        CHECK((det == 1 || det == -1));
        for (std::size_t i = 0; i < M.rows(); ++i)
            for (std::size_t j = 0; j < M.cols(); ++j) CHECK(M.at(i, j) == M.at(j, i));
    }

    CHECK_THROWS_AS(intersection_form_n5(spec, mask({3, 4})), precondition_error);
}
