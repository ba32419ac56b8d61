#include "hkq/polyhedron.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace hkq {

namespace {

LinearSystem to_system(const Polyhedron& P) {
    LinearSystem sys;
    sys.n = P.d;
    for (const auto& c : P.constraints) {
        std::vector<Rational> a(c.normal.begin(), c.normal.end());
        switch (c.sense) {
            case Sense::Ge:
                sys.add_ge(a, -c.offset);
                break;
            case Sense::Le: {
                for (auto& v : a) v = -v;
                sys.add_ge(a, c.offset);
                break;
            }
            case Sense::Eq:
                sys.add_eq(a, -c.offset);
                break;
        }
    }
    return sys;
}

// Fourier-Motzkin feasibility for small dimension. Rows are (a, b) meaning
// a.x + b >= 0; equalities are split in two.
bool fm_feasible(std::vector<std::vector<Rational>> rows, int d) {
    for (int var = d - 1; var >= 0; --var) {
        std::vector<std::vector<Rational>> lower, upper, rest;
        for (auto& r : rows) {
            if (r[static_cast<std::size_t>(var)] > 0) lower.push_back(r);
            else if (r[static_cast<std::size_t>(var)] < 0) upper.push_back(r);
            else rest.push_back(r);
        }
        std::set<std::vector<Rational>> dedup;
        for (auto& lo : lower) {
            for (auto& up : upper) {
                Rational cl = lo[static_cast<std::size_t>(var)];
                Rational cu = -up[static_cast<std::size_t>(var)];
                std::vector<Rational> nr(static_cast<std::size_t>(d) + 1, Rational(0));
                for (int j = 0; j <= d; ++j) {
                    if (j == var) continue;
                    nr[static_cast<std::size_t>(j)] =
                        lo[static_cast<std::size_t>(j)] * cu +
                        up[static_cast<std::size_t>(j)] * cl;
                }
                dedup.insert(nr);
            }
        }
        rows = std::move(rest);
        rows.insert(rows.end(), dedup.begin(), dedup.end());
    }
    for (auto& r : rows)
        if (r[static_cast<std::size_t>(d)] < 0) return false;
    return true;
}

std::vector<std::vector<Rational>> fm_rows(const Polyhedron& P) {
    std::vector<std::vector<Rational>> rows;
    for (const auto& c : P.constraints) {
        std::vector<Rational> r(static_cast<std::size_t>(P.d) + 1, Rational(0));
        for (int j = 0; j < P.d; ++j) r[static_cast<std::size_t>(j)] = c.normal[static_cast<std::size_t>(j)];
        r[static_cast<std::size_t>(P.d)] = c.offset;
        if (c.sense == Sense::Le || c.sense == Sense::Eq) {
            std::vector<Rational> neg = r;
            for (auto& v : neg) v = -v;
            if (c.sense == Sense::Le) {
                rows.push_back(std::move(neg));
                continue;
            }
            rows.push_back(neg);
        }
        rows.push_back(std::move(r));
    }
    return rows;
}

Rational dot(const std::vector<long long>& a, const std::vector<Rational>& v) {
    Rational s(0);
    for (std::size_t i = 0; i < a.size(); ++i) s += Rational(a[i]) * v[i];
    return s;
}

bool satisfies(const Polyhedron& P, const std::vector<Rational>& v) {
    for (const auto& c : P.constraints) {
        Rational val = dot(c.normal, v) + c.offset;
        if (c.sense == Sense::Ge && val < 0) return false;
        if (c.sense == Sense::Le && val > 0) return false;
        if (c.sense == Sense::Eq && val != 0) return false;
    }
    return true;
}

}  // namespace

bool feasible(const Polyhedron& P) {
    if (P.d <= 3) return fm_feasible(fm_rows(P), P.d);
    return lp_feasible_point(to_system(P)).has_value();
}

std::optional<std::vector<Rational>> feasible_point(const Polyhedron& P) {
    return lp_feasible_point(to_system(P));
}

std::optional<std::vector<Rational>> strict_interior_point(const Polyhedron& P) {
    // Homogenize with a scale variable s so that strictness becomes
    // scale-invariant: seek (x, s) with a.x + r s >= 1 per inequality,
    // a.x + r s = 0 per equality, s >= 1; then x/s is interior.
    LinearSystem sys;
    sys.n = P.d + 1;
    for (const auto& c : P.constraints) {
        std::vector<Rational> a(c.normal.begin(), c.normal.end());
        if (c.sense == Sense::Le)
            for (auto& v : a) v = -v;
        Rational r = c.sense == Sense::Le ? -c.offset : c.offset;
        a.push_back(r);
        if (c.sense == Sense::Eq) sys.add_eq(a, Rational(0));
        else sys.add_ge(a, Rational(1));
    }
    std::vector<Rational> scol(static_cast<std::size_t>(P.d) + 1, Rational(0));
    scol[static_cast<std::size_t>(P.d)] = 1;
    sys.add_ge(scol, Rational(1));
    auto pt = lp_feasible_point(sys);
    if (!pt) return std::nullopt;
    Rational s = pt->back();
    pt->pop_back();
    for (auto& x : *pt) x /= s;
    return pt;
}

bool bounded(const Polyhedron& P) {
    if (!feasible(P)) throw precondition_error("bounded() on infeasible polyhedron");
    // recession cone {u : u.a (sense) 0}; nontrivial iff some +-coordinate
    // direction is reachable with value 1
    for (int j = 0; j < P.d; ++j) {
        for (int sign : {1, -1}) {
            LinearSystem sys;
            sys.n = P.d;
            for (const auto& c : P.constraints) {
                std::vector<Rational> a(c.normal.begin(), c.normal.end());
                if (c.sense == Sense::Ge) sys.add_ge(a, Rational(0));
                else if (c.sense == Sense::Le) {
                    for (auto& v : a) v = -v;
                    sys.add_ge(a, Rational(0));
                } else sys.add_eq(a, Rational(0));
            }
            std::vector<Rational> e(static_cast<std::size_t>(P.d), Rational(0));
            e[static_cast<std::size_t>(j)] = sign;
            sys.add_eq(e, Rational(1));
            if (lp_feasible_point(sys)) return false;
        }
    }
    return true;
}

std::vector<std::vector<Rational>> vertices(const Polyhedron& P) {
    if (!feasible(P)) throw precondition_error("vertices() on infeasible polyhedron");
    const std::size_t m = P.constraints.size();
    const std::size_t d = static_cast<std::size_t>(P.d);
    std::set<std::vector<Rational>> found;

    // enumerate all d-subsets of constraints as candidate active sets
    std::vector<std::size_t> comb;
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
        if (comb.size() == d) {
            Matrix<Rational> A(d, d);
            std::vector<Rational> b(d);
            for (std::size_t i = 0; i < d; ++i) {
                const auto& c = P.constraints[comb[i]];
                for (std::size_t j = 0; j < d; ++j) A.at(i, j) = Rational(c.normal[j]);
                b[i] = -c.offset;
            }
            if (A.rank() == d) {
                auto x = A.solve(b);
                if (x && satisfies(P, *x)) found.insert(*x);
            }
            return;
        }
        for (std::size_t i = start; i < m; ++i) {
            comb.push_back(i);
            rec(i + 1);
            comb.pop_back();
        }
    };
    if (m >= d) rec(0);
    return {found.begin(), found.end()};
}

int affine_dimension(const Polyhedron& P) {
    if (!feasible(P)) return -1;
    auto vs = vertices(P);
    bool has_eq = false;
    for (const auto& c : P.constraints)
        if (c.sense == Sense::Eq) has_eq = true;
    if (!has_eq && strict_interior_point(P)) return P.d;
    // dimension of the affine hull of the vertex set plus recession directions;
    // at this scale the vertex hull is enough for the bounded uses we have
    if (vs.empty()) return -1;
    Matrix<Rational> M;
    for (std::size_t i = 1; i < vs.size(); ++i) {
        std::vector<Rational> row(static_cast<std::size_t>(P.d));
        for (int j = 0; j < P.d; ++j)
            row[static_cast<std::size_t>(j)] = vs[i][static_cast<std::size_t>(j)] - vs[0][static_cast<std::size_t>(j)];
        M.append_row(row);
    }
    return vs.size() <= 1 ? 0 : static_cast<int>(M.rank());
}

namespace {

// Recursive triangulation of a face given by its vertex set. Faces of a
// polytope are exactly the subsets cut out by active constraints, so
// sub-facets are found by adding one more active constraint.
struct Triangulator {
    const Polyhedron& P;
    const std::vector<std::vector<Rational>>& verts;
    std::vector<std::vector<std::size_t>> simplices;  // tuples of vertex ids

    std::vector<std::size_t> active_of(std::size_t v) const {
        std::vector<std::size_t> act;
        for (std::size_t ci = 0; ci < P.constraints.size(); ++ci) {
            const auto& c = P.constraints[ci];
            Rational val(0);
            for (std::size_t j = 0; j < c.normal.size(); ++j)
                val += Rational(c.normal[j]) * verts[v][j];
            if (val + c.offset == 0) act.push_back(ci);
        }
        return act;
    }

    int face_dim(const std::vector<std::size_t>& face) const {
        if (face.empty()) return -1;
        Matrix<Rational> M;
        for (std::size_t i = 1; i < face.size(); ++i) {
            std::vector<Rational> row(static_cast<std::size_t>(P.d));
            for (int j = 0; j < P.d; ++j)
                row[static_cast<std::size_t>(j)] =
                    verts[face[i]][static_cast<std::size_t>(j)] - verts[face[0]][static_cast<std::size_t>(j)];
            M.append_row(row);
        }
        return face.size() == 1 ? 0 : static_cast<int>(M.rank());
    }

    void triangulate(const std::vector<std::size_t>& face, int dim,
                     std::vector<std::size_t>& chain) {
        if (dim == 0) {
            std::vector<std::size_t> simplex = chain;
            simplex.push_back(face[0]);
            simplices.push_back(std::move(simplex));
            return;
        }
        std::size_t anchor = face[0];  // vertex list is sorted, so lex-min
        chain.push_back(anchor);
        // sub-facets: refine by each constraint active on part of the face
        std::set<std::vector<std::size_t>> seen;
        for (std::size_t ci = 0; ci < P.constraints.size(); ++ci) {
            std::vector<std::size_t> sub;
            for (auto v : face) {
                const auto& c = P.constraints[ci];
                Rational val(0);
                for (std::size_t j = 0; j < c.normal.size(); ++j)
                    val += Rational(c.normal[j]) * verts[v][j];
                if (val + c.offset == 0) sub.push_back(v);
            }
            if (sub.empty() || sub.size() == face.size()) continue;
            if (std::find(sub.begin(), sub.end(), anchor) != sub.end()) continue;
            if (face_dim(sub) != dim - 1) continue;
            if (!seen.insert(sub).second) continue;
            triangulate(sub, dim - 1, chain);
        }
        chain.pop_back();
    }
};

}  // namespace

Rational volume(const Polyhedron& P) {
    if (!feasible(P)) throw precondition_error("volume() on infeasible polyhedron");
    if (!bounded(P)) throw precondition_error("volume() on unbounded polyhedron");
    auto vs = vertices(P);
    if (vs.empty()) return Rational(0);
    Triangulator tri{P, vs, {}};
    std::vector<std::size_t> all(vs.size());
    for (std::size_t i = 0; i < vs.size(); ++i) all[i] = i;
    int dim = tri.face_dim(all);
    if (dim < P.d) return Rational(0);
    std::vector<std::size_t> chain;
    tri.triangulate(all, P.d, chain);

    Rational total(0);
    Rational dfact(1);
    for (int k = 2; k <= P.d; ++k) dfact *= k;
    for (const auto& s : tri.simplices) {
        Matrix<Rational> M(static_cast<std::size_t>(P.d), static_cast<std::size_t>(P.d));
        for (int i = 0; i < P.d; ++i)
            for (int j = 0; j < P.d; ++j)
                M.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) =
                    vs[s[static_cast<std::size_t>(i) + 1]][static_cast<std::size_t>(j)] -
                    vs[s[0]][static_cast<std::size_t>(j)];
        Rational det = determinant(M);
        if (det < 0) det = -det;
        total += det;
    }
    return total / dfact;
}

std::vector<std::vector<Rational>> sample_interior(const Polyhedron& P, int count,
                                                   std::uint64_t seed) {
    for (const auto& c : P.constraints)
        if (c.sense == Sense::Eq)
            throw precondition_error("sample_interior: equality constraint, not full-dimensional");
    if (!strict_interior_point(P))
        throw precondition_error("sample_interior: polyhedron is not full-dimensional");
    auto vs = vertices(P);
    if (vs.empty()) throw precondition_error("sample_interior: no vertices");
    std::set<std::vector<Rational>> seen;
    std::vector<std::vector<Rational>> out;
    const std::size_t d = static_cast<std::size_t>(P.d);

    auto combine = [&](const std::vector<Rational>& weights) {
        Rational total(0);
        for (auto& w : weights) total += w;
        std::vector<Rational> pt(d, Rational(0));
        for (std::size_t v = 0; v < vs.size(); ++v)
            for (std::size_t j = 0; j < d; ++j) pt[j] += weights[v] * vs[v][j];
        for (auto& x : pt) x /= total;
        return pt;
    };

    // barycenter first
    {
        std::vector<Rational> w(vs.size(), Rational(1));
        auto pt = combine(w);
        if (seen.insert(pt).second) out.push_back(pt);
    }
    Lcg rng(seed);
    int guard = 0;
    while (static_cast<int>(out.size()) < count && guard < 10000) {
        ++guard;
        std::vector<Rational> w(vs.size());
        for (auto& x : w) x = Rational(1 + static_cast<long long>(rng.below(997)));
        auto pt = combine(w);
        if (seen.insert(pt).second) out.push_back(pt);
    }
    if (static_cast<int>(out.size()) < count)
        throw internal_error("sample_interior: could not produce enough distinct points");
    out.resize(static_cast<std::size_t>(count));
    return out;
}

}  // namespace hkq
