#include "hkq/core_geometry.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace hkq {

namespace {

Rational eval_constraint(const Arrangement& arr, int i, const std::vector<Rational>& v) {
    Rational s = arr.offsets[static_cast<std::size_t>(i)];
    for (int j = 0; j < arr.d; ++j)
        s += Rational(arr.normals[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) *
             v[static_cast<std::size_t>(j)];
    return s;
}

std::vector<long long> functional_of(const Arrangement& arr, Subset A) {
    std::vector<long long> f(static_cast<std::size_t>(arr.d), 0);
    for (int i : subset_elements(A, arr.n()))
        for (int j = 0; j < arr.d; ++j)
            f[static_cast<std::size_t>(j)] += arr.normals[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    return f;
}

Rational dotr(const std::vector<long long>& f, const std::vector<Rational>& v) {
    Rational s(0);
    for (std::size_t i = 0; i < f.size(); ++i) s += Rational(f[i]) * v[i];
    return s;
}

struct UnionFind {
    std::vector<std::size_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), std::size_t{0});
    }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

int affine_dim_of_points(const std::vector<std::vector<Rational>>& pts) {
    if (pts.size() <= 1) return 0;
    Matrix<Rational> M;
    for (std::size_t i = 1; i < pts.size(); ++i) {
        std::vector<Rational> row(pts[0].size());
        for (std::size_t j = 0; j < row.size(); ++j) row[j] = pts[i][j] - pts[0][j];
        M.append_row(row);
    }
    return static_cast<int>(M.rank());
}

}  // namespace

CoreReport extended_core(const ValidatedArrangement& va) {
    const Arrangement& arr = va.arr;
    const int n = arr.n();
    if (!is_simple(arr)) throw precondition_error("extended_core requires a simple arrangement");
    CoreReport report;

    // vertices of the complex
    std::map<std::vector<Rational>, std::size_t> vertex_ids;
    {
        std::vector<int> idx;
        std::function<void(int, int)> rec = [&](int start, int depth) {
            if (depth == arr.d) {
                Matrix<Rational> M(static_cast<std::size_t>(arr.d), static_cast<std::size_t>(arr.d));
                std::vector<Rational> b(static_cast<std::size_t>(arr.d));
                for (int r = 0; r < arr.d; ++r) {
                    for (int c = 0; c < arr.d; ++c)
                        M.at(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) =
                            Rational(arr.normals[static_cast<std::size_t>(idx[static_cast<std::size_t>(r)])]
                                                 [static_cast<std::size_t>(c)]);
                    b[static_cast<std::size_t>(r)] = -arr.offsets[static_cast<std::size_t>(idx[static_cast<std::size_t>(r)])];
                }
                if (M.rank() == static_cast<std::size_t>(arr.d)) {
                    auto x = M.solve(b);
                    if (x && !vertex_ids.count(*x)) {
                        ComplexVertex cv;
                        cv.point = *x;
                        for (int i = 0; i < n; ++i) {
                            Rational val = eval_constraint(arr, i, *x);
                            if (val == 0) cv.active |= Subset{1} << i;
                            else if (val < 0) cv.pattern |= Subset{1} << i;
                        }
                        vertex_ids[*x] = report.complex_vertices.size();
                        report.complex_vertices.push_back(std::move(cv));
                    }
                }
                return;
            }
            for (int i = start; i < n; ++i) {
                idx.push_back(i);
                rec(i + 1, depth + 1);
                idx.pop_back();
            }
        };
        rec(0, 0);
    }

    // Delta boundedness (properness of Phi)
    {
        Polyhedron delta = delta_A(arr, 0);
        if (!feasible(delta)) {
            report.delta_bounded = false;
            report.warnings.push_back("Delta is empty");
        } else if (!bounded(delta)) {
            report.delta_bounded = false;
            report.warnings.push_back(
                "Delta is unbounded: Phi is not proper, core statements do not apply");
        }
    }

    UnionFind uf(report.complex_vertices.size());

    // sweep all sign subsets
    for (Subset A = 0; A < (Subset{1} << n); ++A) {
        CorePiece piece;
        piece.A = A;
        piece.is_X = (A == 0);
        Polyhedron P = delta_A(arr, A);
        if (!feasible(P)) {
            piece.status = PieceStatus::Empty;
            report.pieces.push_back(std::move(piece));
            continue;
        }
        piece.status = bounded(P) ? PieceStatus::Bounded : PieceStatus::Unbounded;
        piece.full_dimensional = strict_interior_point(P).has_value();
        piece.verts = vertices(P);

        auto f = functional_of(arr, A);
        if (piece.status == PieceStatus::Bounded && !piece.verts.empty()) {
            // minimizing face of the functional
            Rational best = dotr(f, piece.verts[0]);
            for (const auto& v : piece.verts) best = std::min(best, dotr(f, v));
            Subset common_active = ~Subset{0};
            std::vector<std::vector<Rational>> face_pts;
            for (std::size_t vi = 0; vi < piece.verts.size(); ++vi) {
                if (dotr(f, piece.verts[vi]) != best) continue;
                piece.min_face_vertices.push_back(vi);
                face_pts.push_back(piece.verts[vi]);
                common_active &= report.complex_vertices[vertex_ids.at(piece.verts[vi])].active;
            }
            piece.min_face_active = common_active == ~Subset{0} ? 0 : common_active;
            piece.min_face_dim = affine_dim_of_points(face_pts);
        }

        // link complex vertices joined by a functional-tied edge of Delta_A
        const auto& vs = piece.verts;
        for (std::size_t p = 0; p < vs.size(); ++p) {
            for (std::size_t q = p + 1; q < vs.size(); ++q) {
                std::size_t idp = vertex_ids.at(vs[p]);
                std::size_t idq = vertex_ids.at(vs[q]);
                Subset common = report.complex_vertices[idp].active &
                                report.complex_vertices[idq].active;
                // edge test: common active rank d-1 and no third vertex on it
                Matrix<Rational> M;
                for (int i : subset_elements(common, n)) {
                    std::vector<Rational> row;
                    for (long long x : arr.normals[static_cast<std::size_t>(i)]) row.emplace_back(x);
                    M.append_row(row);
                }
                if (static_cast<int>(M.rank()) != arr.d - 1) continue;
                bool third = false;
                for (std::size_t t = 0; t < vs.size() && !third; ++t) {
                    if (t == p || t == q) continue;
                    Subset act = report.complex_vertices[vertex_ids.at(vs[t])].active;
                    if ((act & common) == common) third = true;
                }
                if (third) continue;
                if (dotr(f, vs[p]) == dotr(f, vs[q])) uf.unite(idp, idq);
            }
        }
        report.pieces.push_back(std::move(piece));
    }

    // assemble fixed components
    std::map<std::size_t, int> root_to_comp;
    for (std::size_t v = 0; v < report.complex_vertices.size(); ++v) {
        std::size_t root = uf.find(v);
        auto it = root_to_comp.find(root);
        int comp;
        if (it == root_to_comp.end()) {
            comp = static_cast<int>(report.fixed_components.size());
            root_to_comp[root] = comp;
            report.fixed_components.push_back(FixedComponent{});
        } else {
            comp = it->second;
        }
        report.complex_vertices[v].component = comp;
        report.fixed_components[static_cast<std::size_t>(comp)].vertex_ids.push_back(v);
    }
    for (auto& comp : report.fixed_components) {
        std::vector<std::vector<Rational>> pts;
        for (auto vid : comp.vertex_ids) pts.push_back(report.complex_vertices[vid].point);
        comp.dim = affine_dim_of_points(pts);
        // the X component is the one whose vertices carry the all-F pattern
        comp.contains_X = std::any_of(comp.vertex_ids.begin(), comp.vertex_ids.end(),
                                      [&](std::size_t vid) {
                                          return report.complex_vertices[vid].pattern == 0;
                                      });
        const auto& cv = report.complex_vertices[comp.vertex_ids.front()];
        comp.rep_A = comp.contains_X ? 0 : cv.pattern;
        comp.rep_B = cv.active;
    }
    return report;
}

FlowGraph flow_graph(const ValidatedArrangement& va, const CoreReport& report) {
    const Arrangement& arr = va.arr;
    const int n = arr.n();
    FlowGraph g;
    g.nodes = report.fixed_components;

    std::map<std::vector<Rational>, std::size_t> vertex_ids;
    for (std::size_t v = 0; v < report.complex_vertices.size(); ++v)
        vertex_ids[report.complex_vertices[v].point] = v;

    std::set<std::tuple<int, int, Subset>> seen;
    for (const auto& piece : report.pieces) {
        if (piece.status != PieceStatus::Bounded) continue;
        auto f = functional_of(arr, piece.A);
        const auto& vs = piece.verts;
        for (std::size_t p = 0; p < vs.size(); ++p) {
            for (std::size_t q = p + 1; q < vs.size(); ++q) {
                std::size_t idp = vertex_ids.at(vs[p]);
                std::size_t idq = vertex_ids.at(vs[q]);
                Subset common = report.complex_vertices[idp].active &
                                report.complex_vertices[idq].active;
                Matrix<Rational> M;
                for (int i : subset_elements(common, n)) {
                    std::vector<Rational> row;
                    for (long long x : arr.normals[static_cast<std::size_t>(i)]) row.emplace_back(x);
                    M.append_row(row);
                }
                if (static_cast<int>(M.rank()) != arr.d - 1) continue;
                bool third = false;
                for (std::size_t t = 0; t < vs.size() && !third; ++t) {
                    if (t == p || t == q) continue;
                    Subset act = report.complex_vertices[vertex_ids.at(vs[t])].active;
                    if ((act & common) == common) third = true;
                }
                if (third) continue;
                Rational fp = dotr(f, vs[p]);
                Rational fq = dotr(f, vs[q]);
                int cp = report.complex_vertices[idp].component;
                int cq = report.complex_vertices[idq].component;
                if (fp == fq) {
                    if (piece.A != 0 && cp != cq) {
                        std::ostringstream os;
                        os << "tie of the flow functional on an edge of Delta_"
                           << subset_to_string(piece.A, n) << "; edge omitted";
                        g.tie_warnings.push_back(os.str());
                    }
                    continue;
                }
                // Phi = -(functional) + const on the piece, so the lower
                // functional value is the higher Phi end
                int from = fp < fq ? cp : cq;
                int to = fp < fq ? cq : cp;
                if (from == to) continue;
                if (seen.insert({from, to, piece.A}).second)
                    g.edges.push_back(FlowEdge{from, to, piece.A});
            }
        }
    }
    return g;
}

std::string flow_graph_to_dot(const FlowGraph& g, const Arrangement& arr) {
    std::ostringstream os;
    os << "digraph core_flow {\n";
    for (std::size_t i = 0; i < g.nodes.size(); ++i) {
        const auto& c = g.nodes[i];
        os << "  n" << i << " [label=\"";
        if (c.contains_X) os << "X ";
        os << "dim " << c.dim << " A=" << subset_to_string(c.rep_A, arr.n())
           << " B=" << subset_to_string(c.rep_B, arr.n()) << "\"];\n";
    }
    for (const auto& e : g.edges) {
        os << "  n" << e.from_component << " -> n" << e.to_component << " [label=\""
           << subset_to_string(e.within_A, arr.n()) << "\"];\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace hkq
