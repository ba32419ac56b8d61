#include "hkq/cogen.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace hkq {

namespace {

Polyhedron delta_A_at(const Arrangement& arr, Subset A, const std::vector<Rational>& r) {
    Arrangement moved = arr;
    moved.offsets = r;
    return delta_A(moved, A);
}

}  // namespace

bool is_admissible(const Arrangement& arr, Subset A) {
    // signed normals positively span R^d iff the dual cone is {0}
    LinearSystem sys;
    sys.n = arr.d;
    for (int i = 0; i < arr.n(); ++i) {
        long long sign = ((A >> i) & 1) ? -1 : 1;
        std::vector<Rational> row;
        for (long long x : arr.normals[static_cast<std::size_t>(i)]) row.emplace_back(sign * x);
        sys.add_ge(row, Rational(0));
    }
    for (int j = 0; j < arr.d; ++j) {
        for (int s : {1, -1}) {
            LinearSystem probe = sys;
            std::vector<Rational> e(static_cast<std::size_t>(arr.d), Rational(0));
            e[static_cast<std::size_t>(j)] = s;
            probe.add_eq(e, Rational(1));
            if (lp_feasible_point(probe)) return false;
        }
    }
    return true;
}

std::vector<Subset> admissible_sets(const ValidatedArrangement& va) {
    std::vector<Subset> out;
    for (Subset A = 0; A < (Subset{1} << va.arr.n()); ++A)
        if (is_admissible(va.arr, A)) out.push_back(A);
    return out;
}

std::vector<Wall> wall_functionals(const Arrangement& arr) {
    // circuits of the normal matroid; each carries a one-dimensional
    // dependency lambda, and the wall is sum lambda_i r_i = 0
    const int n = arr.n();
    std::vector<Wall> walls;
    std::function<void(int, std::vector<int>&)> rec = [&](int start, std::vector<int>& idx) {
        if (idx.size() >= 2) {
            Matrix<Rational> M(static_cast<std::size_t>(arr.d), idx.size());
            for (int j = 0; j < arr.d; ++j)
                for (std::size_t c = 0; c < idx.size(); ++c)
                    M.at(static_cast<std::size_t>(j), c) =
                        Rational(arr.normals[static_cast<std::size_t>(idx[c])][static_cast<std::size_t>(j)]);
            auto null_basis = M.nullspace();
            if (null_basis.size() == 1) {
                // a circuit iff every proper subset is independent, i.e. the
                // dependency has full support
                bool full = true;
                for (const auto& x : null_basis[0])
                    if (x == 0) full = false;
                if (full) {
                    Wall w;
                    w.functional.assign(static_cast<std::size_t>(n), Rational(0));
                    for (std::size_t c = 0; c < idx.size(); ++c) {
                        w.circuit |= Subset{1} << idx[c];
                        w.functional[static_cast<std::size_t>(idx[c])] = null_basis[0][c];
                    }
                    walls.push_back(std::move(w));
                }
            }
            if (null_basis.size() >= 1) return;  // dependent: no circuit extends it
        }
        for (int i = start; i < n; ++i) {
            idx.push_back(i);
            rec(i + 1, idx);
            idx.pop_back();
        }
    };
    std::vector<int> idx;
    rec(0, idx);
    return walls;
}

namespace {

Rational wall_value(const Wall& w, const std::vector<Rational>& r) {
    Rational s(0);
    for (std::size_t i = 0; i < r.size(); ++i) s += w.functional[i] * r[i];
    return s;
}

}  // namespace

bool same_chamber(const Arrangement& arr, const std::vector<Wall>& walls,
                  const std::vector<Rational>& r1, const std::vector<Rational>& r2) {
    (void)arr;
    for (const auto& w : walls) {
        Rational v1 = wall_value(w, r1), v2 = wall_value(w, r2);
        if (v1 == 0 || v2 == 0) return false;  // not simple
        if ((v1 > 0) != (v2 > 0)) return false;
    }
    return true;
}

std::vector<std::vector<Rational>> chambers(const ValidatedArrangement& va) {
    const Arrangement& arr = va.arr;
    auto walls = wall_functionals(arr);
    const int n = arr.n();
    std::vector<std::vector<Rational>> reps;
    if (walls.empty()) {
        // single chamber; any offset is simple
        reps.push_back(std::vector<Rational>(static_cast<std::size_t>(n), Rational(0)));
        return reps;
    }
    // depth-first over sign vectors with LP pruning: walls_i(r) * sign_i >= 1
    std::vector<int> signs(walls.size(), 0);
    std::function<void(std::size_t)> rec = [&](std::size_t k) {
        LinearSystem sys;
        sys.n = n;
        for (std::size_t i = 0; i < k; ++i) {
            std::vector<Rational> row = walls[i].functional;
            if (signs[i] < 0)
                for (auto& x : row) x = -x;
            sys.add_ge(row, Rational(1));
        }
        auto pt = lp_feasible_point(sys);
        if (!pt) return;
        if (k == walls.size()) {
            reps.push_back(*pt);
            return;
        }
        signs[k] = 1;
        rec(k + 1);
        signs[k] = -1;
        rec(k + 1);
        signs[k] = 0;
    };
    rec(0);
    return reps;
}

VolumePolynomial volume_polynomial(const ValidatedArrangement& va, Subset A,
                                   const std::vector<Rational>& r, std::uint64_t seed) {
    const Arrangement& arr = va.arr;
    const int n = arr.n();
    auto walls = wall_functionals(arr);
    for (const auto& w : walls)
        if (wall_value(w, r) == 0)
            throw precondition_error("volume_polynomial: offsets are not simple");

    RingPtr ring = make_ring(numbered_vars("x", n));
    auto monos = monomials_of_degree<Rational>(ring, arr.d);
    const std::size_t m = monos.size();

    // sample offsets in the chamber of r
    Lcg rng(seed * 7919 + 13);
    std::vector<std::vector<Rational>> samples;
    std::vector<Rational> vols;
    std::size_t want = m + 5;
    int guard = 0;
    while (samples.size() < want && guard < 4000) {
        ++guard;
        std::vector<Rational> s = r;
        Rational scale(1, 64);
        for (auto& x : s) {
            long long num = rng.range(-63, 63);
            x += Rational(num) * scale;
        }
        bool ok = true;
        for (const auto& w : walls) {
            Rational v0 = wall_value(w, r), v1 = wall_value(w, s);
            if (v1 == 0 || (v0 > 0) != (v1 > 0)) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        if (std::find(samples.begin(), samples.end(), s) != samples.end()) continue;
        Polyhedron P = delta_A_at(arr, A, s);
        Rational vol(0);
        if (feasible(P)) {
            if (!bounded(P))
                throw precondition_error("volume_polynomial: Delta_A unbounded in this chamber");
            vol = volume(P);
        }
        samples.push_back(std::move(s));
        vols.push_back(std::move(vol));
    }
    if (samples.size() < want)
        throw precondition_error("volume_polynomial: chamber too thin to sample");

    Matrix<Rational> M(m, m);
    std::vector<Rational> b(m);
    for (std::size_t row = 0; row < m; ++row) {
        for (std::size_t col = 0; col < m; ++col) {
            Rational v(1);
            for (int i = 0; i < n; ++i)
                for (std::int32_t k = 0; k < monos[col].e[static_cast<std::size_t>(i)]; ++k)
                    v *= samples[row][static_cast<std::size_t>(i)];
            M.at(row, col) = v;
        }
        b[row] = vols[row];
    }
    auto coeffs = M.solve(b);
    if (!coeffs) throw internal_error("volume_polynomial: interpolation system inconsistent");
    // redundancy guard: rank must be full, and held-out samples must agree
    if (M.rank() != m) {
        // retry with the extra samples appended (rare; richer point set)
        Matrix<Rational> M2;
        for (std::size_t row = 0; row < samples.size(); ++row) {
            std::vector<Rational> rr(m);
            for (std::size_t col = 0; col < m; ++col) {
                Rational v(1);
                for (int i = 0; i < n; ++i)
                    for (std::int32_t k = 0; k < monos[col].e[static_cast<std::size_t>(i)]; ++k)
                        v *= samples[row][static_cast<std::size_t>(i)];
                rr[col] = v;
            }
            M2.append_row(rr);
        }
        auto c2 = M2.solve(vols);
        if (!c2 || M2.rank() != m)
            throw internal_error("volume_polynomial: interpolation inconsistent");
        coeffs = c2;
    }
    VolumePolynomial out;
    out.A = A;
    out.chamber_tag = r;
    out.poly = Poly<Rational>(ring);
    for (std::size_t col = 0; col < m; ++col) out.poly.add_term(monos[col], (*coeffs)[col]);
    // verify on the held-out points
    for (std::size_t row = m; row < samples.size(); ++row) {
        if (poly_eval(out.poly, samples[row]) != vols[row])
            throw internal_error("volume_polynomial: interpolation mismatch on held-out sample");
    }
    return out;
}

std::vector<VolumePolynomial> span_U(const ValidatedArrangement& va,
                                     const std::vector<Rational>& r, std::uint64_t seed) {
    auto adm = admissible_sets(va);
    std::vector<VolumePolynomial> polys;
    for (Subset A : adm) {
        auto vp = volume_polynomial(va, A, r, seed + A);
        if (!vp.poly.is_zero()) polys.push_back(std::move(vp));
    }
    // reduce to a linearly independent subset (row reduce on coefficients)
    RingPtr ring = make_ring(numbered_vars("x", va.arr.n()));
    auto monos = monomials_of_degree<Rational>(ring, va.arr.d);
    std::map<Monomial, std::size_t, detail::DrlLess> colof;
    for (std::size_t i = 0; i < monos.size(); ++i) colof[monos[i]] = i;
    Matrix<Rational> M;
    std::vector<VolumePolynomial> basis;
    for (auto& vp : polys) {
        Matrix<Rational> trial = M;
        std::vector<Rational> row(monos.size(), Rational(0));
        for (auto& [mono, c] : vp.poly.terms()) row[colof.at(mono)] = c;
        trial.append_row(row);
        if (trial.rank() > M.rank()) {
            M.append_row(row);
            basis.push_back(std::move(vp));
        }
    }
    return basis;
}

Ideal<Rational> inverse_system_annihilator(const ValidatedArrangement& va,
                                           const std::vector<Poly<Rational>>& polys) {
    const Arrangement& arr = va.arr;
    const int n = arr.n();
    RingPtr dring = kirwan_ring(n, false);
    RingPtr xring = make_ring(numbered_vars("x", n));
    auto kernel_forms = kernel_linear_forms(arr, dring);

    // validate translation invariance (and homogeneity)
    for (const auto& p : polys) {
        if (p.is_zero()) continue;
        if (!p.is_homogeneous())
            throw precondition_error("inverse_system_annihilator: non-homogeneous input");
        for (const auto& l : kernel_forms) {
            Poly<Rational> lp(xring);
            for (auto& [m, c] : l.terms()) {
                Monomial mm(xring->nvars());
                for (std::size_t i = 0; i < xring->nvars(); ++i) mm.e[i] = m.e[i];
                lp.add_term(mm, c);
            }
            if (!poly_apolar(lp, p).is_zero())
                throw precondition_error(
                    "inverse_system_annihilator: input not translation-invariant");
        }
    }

    std::vector<Poly<Rational>> nonzero;
    for (const auto& p : polys)
        if (!p.is_zero()) nonzero.push_back(p);
    if (nonzero.empty()) {
        // annihilator of the zero space: everything in positive degree
        std::vector<Poly<Rational>> gens;
        for (int i = 0; i < n; ++i)
            gens.push_back(Poly<Rational>::variable(dring, static_cast<std::size_t>(i)));
        return Ideal<Rational>(dring, gens);
    }

    std::int64_t d = 0;
    for (const auto& p : nonzero) d = std::max(d, p.degree());

    std::vector<Poly<Rational>> gens;
    for (std::int64_t k = 1; k <= d + 1; ++k) {
        auto ops = monomials_of_degree<Rational>(dring, k);
        // columns: target monomials across all polys stacked
        Matrix<Rational> M;
        for (std::size_t oi = 0; oi < ops.size(); ++oi) {
            std::vector<Rational> row;
            Poly<Rational> op(dring);
            op.add_term(ops[oi], Rational(1));
            Poly<Rational> opx(xring);
            for (auto& [m, c] : op.terms()) {
                Monomial mm(xring->nvars());
                for (std::size_t i = 0; i < xring->nvars(); ++i) mm.e[i] = m.e[i];
                opx.add_term(mm, c);
            }
            for (const auto& p : nonzero) {
                Poly<Rational> img = poly_apolar(opx, p);
                auto tmon = monomials_of_degree<Rational>(xring, p.degree() - k);
                for (const auto& tm : tmon) row.push_back(img.coeff(tm));
            }
            M.append_row(row);
        }
        // kernel of M^T acting on operator space: operators with zero image
        // = left nullspace of M = nullspace of transpose
        Matrix<Rational> T(M.cols(), M.rows());
        for (std::size_t i = 0; i < M.rows(); ++i)
            for (std::size_t j = 0; j < M.cols(); ++j) T.at(j, i) = M.at(i, j);
        for (const auto& v : T.nullspace()) {
            Poly<Rational> g(dring);
            for (std::size_t oi = 0; oi < ops.size(); ++oi) g.add_term(ops[oi], v[oi]);
            if (!g.is_zero()) gens.push_back(std::move(g));
        }
    }
    auto minimal = minimal_generators(gens, {});
    return Ideal<Rational>(dring, minimal);
}

CharDecomposition char_decompose(const ValidatedArrangement& va,
                                 const std::vector<Rational>& r, Subset A) {
    const Arrangement& arr = va.arr;
    if (!is_admissible(arr, A))
        throw precondition_error("char_decompose: sign subset is not admissible");
    CharDecomposition out;
    out.A = A;
    out.base_offsets = r;
    out.large_values.assign(static_cast<std::size_t>(arr.n()), Rational(0));

    // choose concrete large parameters: beyond every vertex of Delta_A^r
    Polyhedron P = delta_A_at(arr, A, r);
    Rational bound(1);
    if (feasible(P)) {
        for (const auto& v : vertices(P))
            for (int i = 0; i < arr.n(); ++i) {
                Rational s(0);
                for (int j = 0; j < arr.d; ++j)
                    s += Rational(arr.normals[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) *
                         v[static_cast<std::size_t>(j)];
                Rational need = -s;  // offset making the F side touch v
                if (need > bound) bound = need;
            }
    }
    for (const auto& x : r) {
        Rational ax = x < 0 ? -x : x;
        if (ax > bound) bound = ax;
    }
    Rational big = Rational(1000000) * (bound + 1);

    auto elems = subset_elements(A, arr.n());
    std::size_t level = 0;
    std::vector<CharTerm> terms;
    terms.push_back(CharTerm{1, r, A});
    for (int j : elems) {
        Rational Nj = big * (level + 1);
        out.large_values[static_cast<std::size_t>(j)] = Nj;
        std::vector<CharTerm> next;
        for (const auto& t : terms) {
            // 1_{flipped at j} = 1_{pushed at j} - 1_{unflipped at j}
            CharTerm pushed = t;
            pushed.pushed &= ~(Subset{1} << j);
            pushed.offsets[static_cast<std::size_t>(j)] = Nj;
            CharTerm unflipped = t;
            unflipped.pushed &= ~(Subset{1} << j);
            unflipped.eta = -t.eta;
            next.push_back(std::move(pushed));
            next.push_back(std::move(unflipped));
        }
        terms = std::move(next);
        ++level;
    }
    // record which coordinates were pushed symbolically
    for (auto& t : terms) {
        t.pushed = 0;
        for (int j : elems)
            if (t.offsets[static_cast<std::size_t>(j)] != r[static_cast<std::size_t>(j)])
                t.pushed |= Subset{1} << j;
    }
    out.terms = std::move(terms);
    return out;
}

KernelIntersectionReport verify_kernel_intersection(const ValidatedArrangement& va, std::uint64_t seed) {
    KernelIntersectionReport rep;
    auto reps = chambers(va);
    rep.chamber_reps = reps;

    std::optional<Ideal<Rational>> meet;
    std::optional<std::vector<Rational>> first_nonempty;
    for (const auto& r : reps) {
        auto vp = volume_polynomial(va, 0, r, seed);
        std::vector<Poly<Rational>> polys;
        if (!vp.poly.is_zero()) {
            polys.push_back(vp.poly);
            if (!first_nonempty) first_nonempty = r;
        }
        Ideal<Rational> ann = inverse_system_annihilator(va, polys);
        if (!meet) meet = ann;
        else meet = ideal_intersect(*meet, ann);
    }
    if (!first_nonempty)
        throw precondition_error("verify_kernel_intersection: toric quotient empty in every chamber");

    auto U = span_U(va, *first_nonempty, seed);
    std::vector<Poly<Rational>> upolys;
    for (auto& vp : U) upolys.push_back(vp.poly);
    rep.annihilator_of_U = inverse_system_annihilator(va, upolys);
    rep.intersection_of_chamber_kernels = *meet;
    rep.equal = ideal_equal(rep.intersection_of_chamber_kernels, rep.annihilator_of_U);
    return rep;
}

}  // namespace hkq
