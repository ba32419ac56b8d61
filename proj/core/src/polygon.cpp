#include "hkq/polygon.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace hkq {

namespace {

Rational subset_sum(const std::vector<Rational>& alpha, Subset S) {
    Rational s(0);
    for (std::size_t i = 0; i < alpha.size(); ++i)
        if ((S >> i) & 1) s += alpha[i];
    return s;
}

}  // namespace

bool ShortSetFamily::is_short(Subset S) const {
    return std::binary_search(all_short.begin(), all_short.end(), S);
}

ShortSetFamily validate_alpha(const PolygonSpec& spec) {
    const int n = spec.n();
    if (n < 3) throw precondition_error("need at least three edges");
    for (int i = 0; i < n; ++i)
        if (spec.alpha[static_cast<std::size_t>(i)] <= 0)
            throw precondition_error("edge length " + std::to_string(i + 1) + " is not positive");
    Rational total = subset_sum(spec.alpha, (Subset{1} << n) - 1);
    ShortSetFamily fam;
    fam.n = n;
    for (Subset S = 0; S < (Subset{1} << n); ++S) {
        Rational s = subset_sum(spec.alpha, S);
        if (s + s == total)
            throw precondition_error("alpha is not generic: subset " + subset_to_string(S, n) +
                                     " ties with its complement");
        if (s + s < total) {
            fam.all_short.push_back(S);
            if (__builtin_popcount(S) >= 2) fam.short_prime.push_back(S);
        }
    }
    return fam;
}

int min_element(Subset S) {
    if (S == 0) throw internal_error("min_element of empty subset");
    return __builtin_ctz(S);
}

int min_complement_element(Subset S, int n) {
    for (int i = 0; i < n; ++i)
        if (!((S >> i) & 1)) return i;
    throw internal_error("empty complement");
}

std::vector<FixedComponentReport> fixed_report(const PolygonSpec& spec) {
    auto fam = validate_alpha(spec);
    std::vector<FixedComponentReport> out;
    FixedComponentReport X;
    X.is_X = true;
    X.complex_dim = spec.n() - 3;
    out.push_back(std::move(X));
    for (Subset S : fam.short_prime) {
        FixedComponentReport c;
        c.S = S;
        c.complex_dim = __builtin_popcount(S) - 2;
        c.poincare.assign(static_cast<std::size_t>(c.complex_dim) + 1, 1);  // CP^k
        out.push_back(std::move(c));
    }
    return out;
}

USFixedReport us_fixed_report(const PolygonSpec& spec, Subset S) {
    auto fam = validate_alpha(spec);
    if (!fam.is_short(S) || __builtin_popcount(S) < 2)
        throw precondition_error("S must be a short subset of size at least 2");
    USFixedReport rep;
    rep.S = S;
    for (int j = 0; j < spec.n(); ++j)
        if (!((S >> j) & 1)) rep.xs_edge_lengths.push_back(spec.alpha[static_cast<std::size_t>(j)]);
    rep.xs_edge_lengths.push_back(subset_sum(spec.alpha, S));
    rep.xs_complex_dim = static_cast<int>(rep.xs_edge_lengths.size()) - 3;
    rep.point_components.push_back(S);  // M_S itself
    for (Subset T : fam.short_prime)
        if (T != S && (T & S) == S) rep.point_components.push_back(T);
    return rep;
}

// --- abelian quotient --------------------------------------------------------

PresentedRing<Rational> abelian_presentation(const PolygonSpec& spec) {
    auto fam = validate_alpha(spec);
    const int n = spec.n();
    std::vector<std::string> vars = numbered_vars("a", n);
    for (auto& v : numbered_vars("b", n)) vars.push_back(v);
    vars.push_back("del");
    vars.push_back("x");
    RingPtr ring = make_ring(vars);
    auto A = [&](int i) { return Poly<Rational>::variable(ring, static_cast<std::size_t>(i)); };
    auto B = [&](int i) { return Poly<Rational>::variable(ring, static_cast<std::size_t>(n + i)); };
    Poly<Rational> del = Poly<Rational>::variable(ring, "del");
    Poly<Rational> x = Poly<Rational>::variable(ring, "x");

    std::vector<Poly<Rational>> rels;
    for (int i = 0; i < n; ++i) rels.push_back(A(i) - B(i) - del);
    for (int i = 0; i < n; ++i) rels.push_back(A(i) * B(i));
    for (Subset S : fam.all_short) {
        Poly<Rational> AS = Poly<Rational>::constant(ring, Rational(1));
        Poly<Rational> BS = AS;
        for (int i = 0; i < n; ++i) {
            if ((S >> i) & 1) {
                AS = AS * (x - A(i));
                BS = BS * (x - B(i));
            } else {
                AS = AS * B(i);
                BS = BS * A(i);
            }
        }
        rels.push_back(AS);
        rels.push_back(BS);
    }
    return PresentedRing<Rational>{ring, Ideal<Rational>(ring, rels)};
}

Arrangement abelian_arrangement(const PolygonSpec& spec) {
    const int n = spec.n();
    Arrangement arr;
    arr.d = n - 1;
    for (int i = 0; i < n; ++i) {
        std::vector<long long> na(static_cast<std::size_t>(n - 1), 0);
        std::vector<long long> nb(static_cast<std::size_t>(n - 1), 0);
        if (i < n - 1) {
            na[static_cast<std::size_t>(i)] = -1;
            nb[static_cast<std::size_t>(i)] = 1;
        } else {
            std::fill(na.begin(), na.end(), 1);
            std::fill(nb.begin(), nb.end(), -1);
        }
        arr.normals.push_back(na);
        arr.offsets.push_back(spec.alpha[static_cast<std::size_t>(i)]);
        arr.normals.push_back(nb);
        arr.offsets.push_back(spec.alpha[static_cast<std::size_t>(i)]);
    }
    return arr;
}

std::vector<Poly<Rational>> abelian_to_kirwan_images(const PolygonSpec& spec,
                                                     const RingPtr& target) {
    const int n = spec.n();
    std::vector<Poly<Rational>> images;
    for (int i = 0; i < n; ++i)
        images.push_back(Poly<Rational>::variable(target, static_cast<std::size_t>(2 * i)));
    for (int i = 0; i < n; ++i)
        images.push_back(Poly<Rational>::variable(target, static_cast<std::size_t>(2 * i + 1)));
    images.push_back(Poly<Rational>::variable(target, std::size_t{0}) -
                     Poly<Rational>::variable(target, std::size_t{1}));
    images.push_back(Poly<Rational>::variable(target, "x"));
    return images;
}

// --- hyperpolygon presentation ------------------------------------------------

RingPtr hp_ambient(int n) {
    auto vars = numbered_vars("c", n);
    vars.push_back("del");
    vars.push_back("x");
    return make_ring(std::move(vars));
}

std::vector<Poly<Rational>> hp_quadratic_relations(const RingPtr& ring, int n) {
    Poly<Rational> del = Poly<Rational>::variable(ring, "del");
    std::vector<Poly<Rational>> rels;
    for (int i = 0; i < n; ++i) {
        Poly<Rational> ci = Poly<Rational>::variable(ring, static_cast<std::size_t>(i));
        rels.push_back(ci * ci - del * del);
    }
    return rels;
}

Poly<Rational> hp_CS(const RingPtr& ring, const ShortSetFamily& fam, Subset S) {
    const int n = fam.n;
    Poly<Rational> del = Poly<Rational>::variable(ring, "del");
    Poly<Rational> x = Poly<Rational>::variable(ring, "x");
    Rational half(1, 2);
    auto a = [&](int i) {
        return half * (Poly<Rational>::variable(ring, static_cast<std::size_t>(i)) + del);
    };
    auto b = [&](int i) {
        return half * (Poly<Rational>::variable(ring, static_cast<std::size_t>(i)) - del);
    };
    Poly<Rational> AS = Poly<Rational>::constant(ring, Rational(1));
    Poly<Rational> BS = AS;
    for (int i = 0; i < n; ++i) {
        if ((S >> i) & 1) {
            AS = AS * (x - a(i));
            BS = BS * (x - b(i));
        } else {
            AS = AS * b(i);
            BS = BS * a(i);
        }
    }
    Poly<Rational> CS = AS + BS;
    // all odd powers of del cancel
    int di = ring->var_index("del");
    for (auto& [m, c] : CS.terms())
        if (m.e[static_cast<std::size_t>(di)] % 2 != 0)
            throw internal_error("C_S has an odd del power");
    return CS;
}

Poly<Rational> hp_DS(const RingPtr& ring, const ShortSetFamily& fam, Subset S) {
    if (S == 0) throw precondition_error("D_S needs a nonempty short subset");
    const int n = fam.n;
    int ms = min_element(S);
    int ns = min_complement_element(S, n);
    Poly<Rational> x = Poly<Rational>::variable(ring, "x");
    Poly<Rational> cns = Poly<Rational>::variable(ring, static_cast<std::size_t>(ns));
    Poly<Rational> D = Poly<Rational>::constant(ring, Rational(1));
    for (int i = 0; i < n; ++i) {
        Poly<Rational> ci = Poly<Rational>::variable(ring, static_cast<std::size_t>(i));
        if ((S >> i) & 1) {
            if (i != ms) D = D * (ci - x);
        } else {
            if (i != ns) D = D * (cns + ci);
        }
    }
    return D;
}

Poly<Rational> hp_euler(const RingPtr& ring) {
    Poly<Rational> del = Poly<Rational>::variable(ring, "del");
    Poly<Rational> x = Poly<Rational>::variable(ring, "x");
    return del * del * (x * x - del * del);
}

PresentedRing<Rational> hp_presentation(const PolygonSpec& spec) {
    auto fam = validate_alpha(spec);
    RingPtr ring = hp_ambient(spec.n());
    std::vector<Poly<Rational>> rels = hp_quadratic_relations(ring, spec.n());
    for (Subset S : fam.all_short)
        if (S != 0) rels.push_back(hp_DS(ring, fam, S));
    return PresentedRing<Rational>{ring, Ideal<Rational>(ring, rels)};
}

PresentedRing<Rational> konno_presentation(const PolygonSpec& spec) {
    auto fam = validate_alpha(spec);
    const int n = spec.n();
    RingPtr ring = make_ring(numbered_vars("c", n));
    std::vector<Poly<Rational>> rels;
    for (int i = 0; i + 1 < n; ++i) {
        Poly<Rational> ci = Poly<Rational>::variable(ring, static_cast<std::size_t>(i));
        Poly<Rational> cj = Poly<Rational>::variable(ring, static_cast<std::size_t>(i + 1));
        rels.push_back(ci * ci - cj * cj);
    }
    for (const auto& m : monomials_of_degree<Rational>(ring, n - 2)) {
        Poly<Rational> p(ring);
        p.add_term(m, Rational(1));
        rels.push_back(p);
    }
    return PresentedRing<Rational>{ring, Ideal<Rational>(ring, rels)};
}

HpColonReport verify_hp_colon(const PolygonSpec& spec) {
    auto fam = validate_alpha(spec);
    RingPtr ring = hp_ambient(spec.n());
    std::vector<Poly<Rational>> jgens = hp_quadratic_relations(ring, spec.n());
    for (Subset S : fam.all_short) jgens.push_back(hp_CS(ring, fam, S));
    Ideal<Rational> J(ring, jgens);
    Poly<Rational> e = hp_euler(ring);

    HpColonReport rep;
    auto GJ = groebner(J);
    for (Subset S : fam.all_short) {
        if (S == 0) continue;
        if (!ideal_member(e * hp_DS(ring, fam, S), GJ)) rep.memberships = false;
    }
    rep.colon = colon_ideal(J, e);
    std::vector<Poly<Rational>> dgens = hp_quadratic_relations(ring, spec.n());
    for (Subset S : fam.all_short)
        if (S != 0) dgens.push_back(hp_DS(ring, fam, S));
    rep.ds_ideal = Ideal<Rational>(ring, dgens);
    rep.equal = ideal_equal(rep.colon, rep.ds_ideal);
    return rep;
}

// --- core components ----------------------------------------------------------

namespace {

std::vector<Subset> minimal_with(const ShortSetFamily& fam, Subset ambient_mask,
                                 const std::function<bool(Subset)>& pred) {
    // inclusion-minimal subsets of ambient_mask satisfying a monotone predicate
    std::vector<Subset> all;
    std::vector<int> elems = subset_elements(ambient_mask, fam.n);
    for (Subset pick = 0; pick < (Subset{1} << elems.size()); ++pick) {
        Subset R = 0;
        for (std::size_t t = 0; t < elems.size(); ++t)
            if ((pick >> t) & 1) R |= Subset{1} << elems[t];
        if (pred(R)) all.push_back(R);
    }
    std::vector<Subset> minimal;
    for (Subset R : all) {
        bool min = true;
        for (Subset Q : all)
            if (Q != R && (Q & R) == Q) { min = false; break; }
        if (min) minimal.push_back(R);
    }
    std::sort(minimal.begin(), minimal.end());
    return minimal;
}

}  // namespace

CoreComponentRing core_presentation(const PolygonSpec& spec, Subset S, bool equivariant) {
    auto fam0 = validate_alpha(spec);
    const int n = spec.n();
    if (!fam0.is_short(S)) throw precondition_error("core_presentation: S must be short");
    if (__builtin_popcount(S) < 2)
        throw precondition_error("core_presentation: S must have at least two elements");

    CoreComponentRing out;
    out.S = S;
    out.equivariant = equivariant;
    out.relabel.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) out.relabel[static_cast<std::size_t>(i)] = i;
    PolygonSpec relabeled = spec;
    Subset Sr = S;
    if (!((S >> 0) & 1)) {
        int ms = min_element(S);
        std::swap(out.relabel[0], out.relabel[static_cast<std::size_t>(ms)]);
        std::swap(relabeled.alpha[0], relabeled.alpha[static_cast<std::size_t>(ms)]);
        Sr = (S & ~(Subset{1} << ms)) | Subset{1};
    }
    auto fam = validate_alpha(relabeled);

    std::vector<std::string> vars = numbered_vars("d", n);
    if (equivariant) vars.push_back("x");
    RingPtr ring = make_ring(vars);
    auto dv = [&](int i) { return Poly<Rational>::variable(ring, static_cast<std::size_t>(i)); };
    Poly<Rational> d1 = dv(0);
    int ssize = __builtin_popcount(Sr);
    Subset comp = ((Subset{1} << n) - 1) & ~Sr;

    std::vector<Poly<Rational>> rels;
    for (int i : subset_elements(Sr, n))
        if (i != 0) rels.push_back(d1 - dv(i));
    for (int j : subset_elements(comp, n)) rels.push_back(dv(j) * (d1 - dv(j)));
    // family 3: minimal R in S^c with R cup S long
    auto long_with_S = [&](Subset R) { return fam.is_long(R | Sr); };
    for (Subset R : minimal_with(fam, comp, long_with_S)) {
        Poly<Rational> m = Poly<Rational>::constant(ring, Rational(1));
        for (int j : subset_elements(R, n)) m = m * dv(j);
        rels.push_back(m);
    }
    // family 4: minimal long L in S^c
    auto is_long_L = [&](Subset L) { return fam.is_long(L); };
    for (Subset L : minimal_with(fam, comp, is_long_L)) {
        Poly<Rational> prod_shift = Poly<Rational>::constant(ring, Rational(1));
        Poly<Rational> prod_plain = prod_shift;
        for (int j : subset_elements(L, n)) {
            prod_shift = prod_shift * (dv(j) - d1);
            prod_plain = prod_plain * dv(j);
        }
        if (equivariant) {
            Poly<Rational> head = Poly<Rational>::constant(ring, Rational(1));
            Poly<Rational> d1x = d1 + Poly<Rational>::variable(ring, "x");
            for (int k = 0; k < ssize - 1; ++k) head = head * d1x;
            rels.push_back(head * poly_divexact(prod_shift - prod_plain, d1));
        } else {
            Poly<Rational> head = Poly<Rational>::constant(ring, Rational(1));
            for (int k = 0; k < ssize - 2; ++k) head = head * d1;
            rels.push_back(head * prod_shift);
        }
    }
    out.ring = PresentedRing<Rational>{ring, Ideal<Rational>(ring, rels)};
    return out;
}

Ideal<Rational> core_kernel_phi_T(const RingPtr& ring, const ShortSetFamily& fam, Subset S,
                                  Subset T, bool equivariant) {
    const int n = fam.n;
    auto dv = [&](int i) { return Poly<Rational>::variable(ring, static_cast<std::size_t>(i)); };
    Poly<Rational> d1 = dv(0);
    std::vector<Poly<Rational>> gens;
    for (int i : subset_elements(T, n))
        if (i != 0) gens.push_back(d1 - dv(i));
    for (int j = 0; j < n; ++j)
        if (!((T >> j) & 1)) gens.push_back(dv(j));
    if (equivariant) {
        Poly<Rational> d1x = d1 + Poly<Rational>::variable(ring, "x");
        Poly<Rational> head = Poly<Rational>::constant(ring, Rational(1));
        for (int k = 0; k < __builtin_popcount(S) - 1; ++k) head = head * d1x;
        gens.push_back(head);
    }
    return Ideal<Rational>(ring, gens);
}

JtReport verify_jt(const PolygonSpec& spec, Subset S, bool equivariant) {
    auto fam = validate_alpha(spec);
    const int n = spec.n();
    if (!((S >> 0) & 1)) throw precondition_error("verify_jt expects 1 in S");
    std::vector<std::string> vars = numbered_vars("d", n);
    if (equivariant) vars.push_back("x");
    RingPtr ring = make_ring(vars);

    JtReport rep;
    bool first = true;
    for (Subset T : fam.all_short) {
        if ((T & S) != S) continue;
        Ideal<Rational> kt = core_kernel_phi_T(ring, fam, S, T, equivariant);
        if (first) {
            rep.intersection = kt;
            first = false;
        } else {
            rep.intersection = ideal_intersect(rep.intersection, kt);
        }
    }
    if (first) throw precondition_error("no short T containing S");

    auto dv = [&](int i) { return Poly<Rational>::variable(ring, static_cast<std::size_t>(i)); };
    Poly<Rational> d1 = dv(0);
    Subset comp = ((Subset{1} << n) - 1) & ~S;
    std::vector<Poly<Rational>> gens;
    for (int i : subset_elements(S, n))
        if (i != 0) gens.push_back(d1 - dv(i));
    for (int j : subset_elements(comp, n)) gens.push_back(dv(j) * (d1 - dv(j)));
    auto long_with_S = [&](Subset R) { return fam.is_long(R | S); };
    for (Subset R : minimal_with(fam, comp, long_with_S)) {
        Poly<Rational> m = Poly<Rational>::constant(ring, Rational(1));
        for (int j : subset_elements(R, n)) m = m * dv(j);
        gens.push_back(m);
    }
    if (equivariant) {
        Poly<Rational> d1x = d1 + Poly<Rational>::variable(ring, "x");
        Poly<Rational> head = Poly<Rational>::constant(ring, Rational(1));
        for (int k = 0; k < __builtin_popcount(S) - 1; ++k) head = head * d1x;
        gens.push_back(head);
    }
    rep.closed_form = Ideal<Rational>(ring, gens);
    rep.equal = ideal_equal(rep.intersection, rep.closed_form);
    return rep;
}

// --- Upsilon ------------------------------------------------------------------

namespace {

// normal form in Q[d1..dn] / <d_k^2 - d1 d_k : k >= 2>:
// d_k^e -> d1^{e-1} d_k for k >= 2
Poly<Rational> reduce_dk(const Poly<Rational>& p) {
    Poly<Rational> out(p.ring());
    for (auto& [m, c] : p.terms()) {
        Monomial r(m.nvars());
        r.e[0] = m.e[0];
        for (std::size_t k = 1; k < m.nvars(); ++k) {
            if (m.e[k] > 0) {
                r.e[0] += m.e[k] - 1;
                r.e[k] = 1;
            }
        }
        out.add_term(r, c);
    }
    return out;
}

}  // namespace

UpsilonReport upsilon_check(const PolygonSpec& spec) {
    auto fam = validate_alpha(spec);
    const int n = spec.n();
    RingPtr ring = make_ring(numbered_vars("d", n));
    auto dv = [&](int i) { return Poly<Rational>::variable(ring, static_cast<std::size_t>(i)); };
    Poly<Rational> d1 = dv(0);

    UpsilonReport rep;
    // rows: proper subsets of {2..n} in lexicographic order within cardinality
    std::vector<Subset> rows;
    {
        std::vector<std::vector<int>> by_card(static_cast<std::size_t>(n));
        for (Subset A = 0; A < (Subset{1} << (n - 1)); ++A) {
            if (A == (Subset{1} << (n - 1)) - 1) continue;  // proper subsets only
            by_card[static_cast<std::size_t>(__builtin_popcount(A))].push_back(static_cast<int>(A));
        }
        for (auto& cls : by_card) {
            // lexicographic by element lists: {2,3} before {2,4} before {3,4}
            std::sort(cls.begin(), cls.end(), [&](int a, int b) {
                auto ea = subset_elements(static_cast<Subset>(a), n - 1);
                auto eb = subset_elements(static_cast<Subset>(b), n - 1);
                return ea < eb;
            });
            for (int a : cls) rows.push_back(static_cast<Subset>(a));
        }
    }
    rep.row_sets = rows;

    auto shift = [&](Subset A) { return static_cast<Subset>(A << 1); };  // into {2..n} positions

    // S(A): A^c (in {2..n}) when short, else A cup {1}
    for (Subset A : rows) {
        Subset Ac = (((Subset{1} << (n - 1)) - 1) & ~A);
        Subset S = fam.is_short(shift(Ac)) ? shift(Ac) : (shift(A) | Subset{1});
        rep.col_short_sets.push_back(S);
    }

    auto vS = [&](Subset S) {
        int ms = min_element(S);
        int ns = min_complement_element(S, n);
        Poly<Rational> v = Poly<Rational>::constant(ring, Rational((n % 2 == 0) ? 1 : -1));
        for (int j = 0; j < n; ++j) {
            if (((S >> j) & 1) && j != ms) v = v * (Rational(2) * dv(j) - d1);
            if (!((S >> j) & 1) && j != ns) v = v * (dv(j) + dv(ns) - d1);
        }
        return reduce_dk(v);
    };

    // coefficient of d_A (A over {2..n}) in a reduced degree-(n-2) polynomial
    auto coeff_dA = [&](const Poly<Rational>& p, Subset A) {
        Monomial m(static_cast<std::size_t>(n));
        int card = __builtin_popcount(A);
        m.e[0] = static_cast<std::int32_t>(n - 2 - card);
        for (int k : subset_elements(A, n - 1)) m.e[static_cast<std::size_t>(k + 1)] = 1;
        Rational sign((card % 2 == 0) ? 1 : -1);
        return sign * p.coeff(m);
    };

    auto wT = [&](Subset T) {
        // sum over all rows A of 2^{|A cap Tbar|} d_A
        Poly<Rational> w(ring);
        Subset Tbar = T & ~(Subset{1} << min_element(T));  // T minus m_T (= 1)
        for (Subset A : rows) {
            int inter = __builtin_popcount(shift(A) & Tbar);
            Monomial m(static_cast<std::size_t>(n));
            int card = __builtin_popcount(A);
            m.e[0] = static_cast<std::int32_t>(n - 2 - card);
            for (int k : subset_elements(A, n - 1)) m.e[static_cast<std::size_t>(k + 1)] = 1;
            Rational coef(((card % 2 == 0) ? 1 : -1));
            coef *= Rational(Integer(1) << inter);
            w.add_term(m, coef);
        }
        return w;
    };

    auto xS = [&](Subset S) {
        if (!(S & Subset{1})) return vS(S);
        // sum over T with 1 in T subset of S of (-1)^{|S|+|T|} w_T
        Poly<Rational> acc(ring);
        Subset rest = S & ~Subset{1};
        auto elems = subset_elements(rest, n);
        for (Subset pick = 0; pick < (Subset{1} << elems.size()); ++pick) {
            Subset T = Subset{1};
            for (std::size_t t = 0; t < elems.size(); ++t)
                if ((pick >> t) & 1) T |= Subset{1} << elems[t];
            int sign = ((__builtin_popcount(S) + __builtin_popcount(T)) % 2 == 0) ? 1 : -1;
            acc = acc + Rational(sign) * wT(T);
        }
        return acc;
    };

    const std::size_t m = rows.size();
    rep.matrix = Matrix<Rational>(m, m);
    for (std::size_t col = 0; col < m; ++col) {
        Poly<Rational> x = xS(rep.col_short_sets[col]);
        for (std::size_t row = 0; row < m; ++row)
            rep.matrix.at(row, col) = coeff_dA(x, rows[row]);
    }
    rep.unit_lower_triangular = true;
    for (std::size_t i = 0; i < m; ++i) {
        if (rep.matrix.at(i, i) != 1) rep.unit_lower_triangular = false;
        for (std::size_t j = i + 1; j < m; ++j)
            if (rep.matrix.at(i, j) != 0) rep.unit_lower_triangular = false;
    }
    return rep;
}

// --- intersection forms ---------------------------------------------------------

IntersectionForm intersection_form_n5(const PolygonSpec& spec, Subset S) {
    const int n = spec.n();
    if (n != 5) throw precondition_error("intersection_form_n5 expects n = 5");
    auto fam = validate_alpha(spec);
    if (!fam.is_short(S) || __builtin_popcount(S) < 2)
        throw precondition_error("S must lie in the prime short family");
    if (!(S & Subset{1}))
        throw precondition_error("intersection_form_n5 expects 1 in S (relabel first)");

    auto core = core_presentation(spec, S, false);
    const RingPtr& ring = core.ring.ring;
    auto G = groebner(core.ring.relations);

    // top (second) graded piece must be one-dimensional
    std::vector<Monomial> top_std;
    for (const auto& m : monomials_of_degree<Rational>(ring, 2)) {
        bool standard = true;
        for (const auto& g : G.polys)
            if (g.leading_term(G.order).first.divides(m)) { standard = false; break; }
        if (standard) top_std.push_back(m);
    }
    if (top_std.size() != 1)
        throw precondition_error("intersection form: top degree is not one-dimensional");
    Monomial tau = top_std[0];

    auto dv = [&](int i) { return Poly<Rational>::variable(ring, static_cast<std::size_t>(i)); };
    Poly<Rational> d1 = dv(0);

    // J: indices j in S^c with d1 d_j nonzero in the top degree
    std::vector<int> J;
    int j0 = -1;
    for (int j = 0; j < n; ++j) {
        if ((S >> j) & 1) continue;
        Poly<Rational> prod = normal_form(d1 * dv(j), G);
        if (!prod.is_zero() && j0 < 0) j0 = j;
        if (!normal_form(dv(j), G).is_zero()) J.push_back(j);
    }
    if (j0 < 0) throw internal_error("no complement class pairs with d1");

    Rational mu = normal_form(d1 * dv(j0), G).coeff(tau);
    // evaluation convention reproducing the printed matrices: pair against
    // -d1 d_{j0} when d1^2 is nonzero in top degree, +d1 d_{j0} otherwise
    bool d1sq_zero = normal_form(d1 * d1, G).is_zero();
    Rational eps(d1sq_zero ? 1 : -1);
    Rational scale = eps / mu;

    IntersectionForm out;
    out.S = S;
    {
        std::ostringstream os;
        os << (d1sq_zero ? "+" : "-") << "d1*d" << (j0 + 1) << "[U_S] = 1";
        out.normalization = os.str();
    }
    std::vector<Poly<Rational>> basis;
    {
        Poly<Rational> h = d1;
        for (int j : J) h = h - dv(j);
        basis.push_back(h);
        std::string label = "d1";
        for (int j : J) label += " - d" + std::to_string(j + 1);
        out.basis_labels.push_back(label);
        for (int j : J) {
            basis.push_back(dv(j));
            out.basis_labels.push_back("d" + std::to_string(j + 1));
        }
    }
    const std::size_t m = basis.size();
    out.matrix = Matrix<Rational>(m, m);
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b)
            out.matrix.at(a, b) = scale * normal_form(basis[a] * basis[b], G).coeff(tau);
    return out;
}

}  // namespace hkq
