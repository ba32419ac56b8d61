// Independent reference computations used to freeze expected test values.
// Everything here deliberately avoids the library's main code paths: areas
// come from the shoelace formula, graded dimensions from dense linear
// algebra, h-vectors from direct independence-complex counting, and so on.
#ifndef HKQ_TEST_ORACLES_HPP
#define HKQ_TEST_ORACLES_HPP

#include "hkq/arrangement.hpp"
#include "hkq/groebner.hpp"
#include "hkq/polyhedron.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <vector>

namespace hkq::oracle {

// Exact area of a convex polygon given by an unordered vertex set: order the
// vertices around their centroid with cross products, then shoelace.
inline Rational shoelace_area(std::vector<std::vector<Rational>> pts) {
    if (pts.size() < 3) return Rational(0);
    Rational cx(0), cy(0);
    for (auto& p : pts) {
        cx += p[0];
        cy += p[1];
    }
    cx /= static_cast<int>(pts.size());
    cy /= static_cast<int>(pts.size());
    auto half = [&](const std::vector<Rational>& p) {
        // 0 for upper half-plane (dy > 0, or dy == 0 and dx > 0), 1 below
        Rational dy = p[1] - cy, dx = p[0] - cx;
        return (dy > 0 || (dy == 0 && dx > 0)) ? 0 : 1;
    };
    std::sort(pts.begin(), pts.end(), [&](const auto& a, const auto& b) {
        int ha = half(a), hb = half(b);
        if (ha != hb) return ha < hb;
        Rational cross = (a[0] - cx) * (b[1] - cy) - (a[1] - cy) * (b[0] - cx);
        return cross > 0;
    });
    Rational twice(0);
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const auto& p = pts[i];
        const auto& q = pts[(i + 1) % pts.size()];
        twice += p[0] * q[1] - q[0] * p[1];
    }
    if (twice < 0) twice = -twice;
    return twice / 2;
}

// Derivative oracle: repeated single-variable differentiation, a different
// route than the contraction rule used by poly_apolar.
inline Poly<Rational> derivative(const Poly<Rational>& f, std::size_t var) {
    Poly<Rational> out(f.ring());
    for (auto& [m, c] : f.terms()) {
        if (m.e[var] == 0) continue;
        Monomial mm = m;
        mm.e[var] -= 1;
        out.add_term(mm, c * m.e[var]);
    }
    return out;
}

inline Poly<Rational> apply_operator(const Poly<Rational>& op, const Poly<Rational>& f) {
    Poly<Rational> acc(f.ring());
    for (auto& [m, c] : op.terms()) {
        Poly<Rational> g = f;
        for (std::size_t v = 0; v < m.e.size(); ++v)
            for (int k = 0; k < m.e[v]; ++k) g = derivative(g, v);
        acc = acc + c * g;
    }
    return acc;
}

// f-vector of the linear independence complex of a set of integer vectors,
// then the h-vector (the matroid h-numbers).
inline std::vector<std::int64_t> matroid_h_vector(const std::vector<std::vector<long long>>& vecs,
                                                  int d) {
    const int n = static_cast<int>(vecs.size());
    std::vector<std::int64_t> f(static_cast<std::size_t>(d) + 1, 0);  // f[k] = #independent k-sets
    f[0] = 1;
    for (std::uint32_t S = 1; S < (1u << n); ++S) {
        int size = __builtin_popcount(S);
        if (size > d) continue;
        Matrix<Rational> M;
        for (int i = 0; i < n; ++i) {
            if (!((S >> i) & 1)) continue;
            std::vector<Rational> row;
            for (long long x : vecs[static_cast<std::size_t>(i)]) row.emplace_back(x);
            M.append_row(row);
        }
        if (static_cast<int>(M.rank()) == size) f[static_cast<std::size_t>(size)] += 1;
    }
    // h_k = sum_i (-1)^{k-i} C(d-i, k-i) f_i
    auto binom = [](std::int64_t a, std::int64_t b) {
        if (b < 0 || b > a) return std::int64_t{0};
        std::int64_t r = 1;
        for (std::int64_t i = 0; i < b; ++i) r = r * (a - i) / (i + 1);
        return r;
    };
    std::vector<std::int64_t> h(static_cast<std::size_t>(d) + 1, 0);
    for (int k = 0; k <= d; ++k)
        for (int i = 0; i <= k; ++i)
            h[static_cast<std::size_t>(k)] +=
                ((k - i) % 2 == 0 ? 1 : -1) * binom(d - i, k - i) * f[static_cast<std::size_t>(i)];
    return h;
}

// Graded quotient dimensions by dense row reduction on the monomial basis,
// independent of any Groebner machinery.
template <class K>
std::vector<std::int64_t> dense_hilbert(const PresentedRing<K>& R, int maxdeg) {
    std::vector<std::int64_t> dims;
    for (int k = 0; k <= maxdeg; ++k) {
        auto mons = monomials_of_degree<K>(R.ring, k);
        std::map<Monomial, std::size_t, detail::DrlLess> pos;
        for (std::size_t i = 0; i < mons.size(); ++i) pos[mons[i]] = i;
        Matrix<K> M;
        for (const auto& g : R.relations.gens) {
            if (g.is_zero() || g.degree() > k) continue;
            if (!g.is_homogeneous()) throw internal_error("dense_hilbert needs graded relations");
            for (const auto& m : monomials_of_degree<K>(R.ring, k - g.degree())) {
                Poly<K> p = g.mul_term(m, field_traits<K>::one());
                std::vector<K> row(mons.size(), field_traits<K>::zero());
                for (auto& [mm, c] : p.terms()) row[pos.at(mm)] = c;
                M.append_row(row);
            }
        }
        std::int64_t rank = M.rows() == 0 ? 0 : static_cast<std::int64_t>(M.rank());
        dims.push_back(static_cast<std::int64_t>(mons.size()) - rank);
    }
    return dims;
}

// Intersection of monomial ideals: pairwise lcms.
template <class K>
std::vector<Monomial> monomial_intersection(const std::vector<Monomial>& I,
                                            const std::vector<Monomial>& J) {
    std::vector<Monomial> out;
    for (const auto& a : I)
        for (const auto& b : J) {
            Monomial l = Monomial::lcm(a, b);
            bool redundant = false;
            for (const auto& c : out)
                if (c.divides(l)) redundant = true;
            if (!redundant) {
                std::erase_if(out, [&](const Monomial& c) { return l.divides(c) && !(l == c); });
                out.push_back(l);
            }
        }
    return out;
}

// Number of chambers of a real arrangement by strict sign-vector search.
inline int chamber_count(const Arrangement& arr) {
    int count = 0;
    std::function<void(int, Polyhedron&)> rec = [&](int i, Polyhedron& P) {
        if (!strict_interior_point(P)) return;
        if (i == arr.n()) {
            ++count;
            return;
        }
        for (Sense s : {Sense::Ge, Sense::Le}) {
            P.add(arr.normals[static_cast<std::size_t>(i)], arr.offsets[static_cast<std::size_t>(i)], s);
            rec(i + 1, P);
            P.constraints.pop_back();
        }
    };
    Polyhedron P(arr.d, {});
    rec(0, P);
    return count;
}

// Whitney numbers (1, n, #double points counted by multiplicity mu) of an
// affine line arrangement in the plane via its intersection poset.
inline std::vector<std::int64_t> planar_whitney(const Arrangement& arr) {
    if (arr.d != 2) throw internal_error("planar_whitney needs d = 2");
    std::map<std::vector<Rational>, int> points;  // point -> #lines through it
    for (int i = 0; i < arr.n(); ++i) {
        for (int j = i + 1; j < arr.n(); ++j) {
            Matrix<Rational> M(2, 2);
            for (int c = 0; c < 2; ++c) {
                M.at(0, static_cast<std::size_t>(c)) =
                    Rational(arr.normals[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)]);
                M.at(1, static_cast<std::size_t>(c)) =
                    Rational(arr.normals[static_cast<std::size_t>(j)][static_cast<std::size_t>(c)]);
            }
            if (M.rank() < 2) continue;
            auto x = M.solve({-arr.offsets[static_cast<std::size_t>(i)],
                              -arr.offsets[static_cast<std::size_t>(j)]});
            points[*x] = 0;
        }
    }
    std::int64_t w2 = 0;
    for (auto& [pt, cnt] : points) {
        int through = 0;
        for (int i = 0; i < arr.n(); ++i) {
            Rational v = arr.offsets[static_cast<std::size_t>(i)];
            for (int c = 0; c < 2; ++c)
                v += Rational(arr.normals[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)]) *
                     pt[static_cast<std::size_t>(c)];
            if (v == 0) ++through;
        }
        w2 += through - 1;  // Moebius value of a rank-2 flat with m atoms is m-1
    }
    return {1, arr.n(), w2};
}

// planar bounded-region count by strict sign vectors + boundedness
inline int planar_bounded_regions(const Arrangement& arr) {
    int count = 0;
    std::function<void(int, Polyhedron&)> rec = [&](int i, Polyhedron& P) {
        if (!strict_interior_point(P)) return;
        if (i == arr.n()) {
            if (bounded(P)) ++count;
            return;
        }
        for (Sense s : {Sense::Ge, Sense::Le}) {
            P.add(arr.normals[static_cast<std::size_t>(i)], arr.offsets[static_cast<std::size_t>(i)], s);
            rec(i + 1, P);
            P.constraints.pop_back();
        }
    };
    Polyhedron P(arr.d, {});
    rec(0, P);
    return count;
}

}  // namespace hkq::oracle

#endif
