#include "hkq/arrangement.hpp"

#include <algorithm>
#include <functional>

namespace hkq {

namespace {

Matrix<Rational> normal_matrix(const Arrangement& arr) {
    // d x n, column i = a_i
    Matrix<Rational> M(static_cast<std::size_t>(arr.d), static_cast<std::size_t>(arr.n()));
    for (int j = 0; j < arr.d; ++j)
        for (int i = 0; i < arr.n(); ++i)
            M.at(static_cast<std::size_t>(j), static_cast<std::size_t>(i)) =
                Rational(arr.normals[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
    return M;
}

std::vector<long long> primitive_integer(const std::vector<Rational>& v) {
    Integer lcm_den(1);
    for (const auto& q : v) {
        Integer den = denominator(q);
        lcm_den = lcm_den / gcd(lcm_den, den) * den;
    }
    std::vector<Integer> ints;
    Integer g(0);
    for (const auto& q : v) {
        Integer z = numerator(q) * (lcm_den / denominator(q));
        g = gcd(g, z);
        ints.push_back(z);
    }
    if (g == 0) g = 1;
    std::vector<long long> out;
    for (auto& z : ints) out.push_back(static_cast<long long>(z / g));
    return out;
}

}  // namespace

ValidatedArrangement validate(const Arrangement& arr) {
    if (arr.d < 1) throw input_error("arrangement dimension must be >= 1");
    if (arr.offsets.size() != arr.normals.size())
        throw input_error("offsets/normals length mismatch");
    for (const auto& a : arr.normals) {
        if (static_cast<int>(a.size()) != arr.d)
            throw input_error("normal has wrong dimension");
        if (std::all_of(a.begin(), a.end(), [](long long x) { return x == 0; }))
            throw input_error("zero normal vector");
    }
    Matrix<Rational> M = normal_matrix(arr);
    if (static_cast<int>(M.rank()) != arr.d)
        throw input_error("normals do not span: rank deficiency");
    // integer kernel basis of the n-column matrix
    auto null_basis = M.nullspace();
    std::vector<std::vector<long long>> kernel;
    for (const auto& v : null_basis) kernel.push_back(primitive_integer(v));
    return ValidatedArrangement{arr, kernel};
}

std::vector<int> subset_elements(Subset s, int n) {
    std::vector<int> out;
    for (int i = 0; i < n; ++i)
        if (s & (Subset{1} << i)) out.push_back(i);
    return out;
}

std::string subset_to_string(Subset s, int n) {
    std::string out = "{";
    bool first = true;
    for (int i : subset_elements(s, n)) {
        if (!first) out += ",";
        out += std::to_string(i + 1);
        first = false;
    }
    return out + "}";
}

Polyhedron halfspace_F(const Arrangement& arr, int i) {
    Polyhedron P(arr.d, {});
    P.add(arr.normals[static_cast<std::size_t>(i)], arr.offsets[static_cast<std::size_t>(i)], Sense::Ge);
    return P;
}

Polyhedron halfspace_G(const Arrangement& arr, int i) {
    Polyhedron P(arr.d, {});
    P.add(arr.normals[static_cast<std::size_t>(i)], arr.offsets[static_cast<std::size_t>(i)], Sense::Le);
    return P;
}

Polyhedron delta_A(const Arrangement& arr, Subset A) {
    Polyhedron P(arr.d, {});
    for (int i = 0; i < arr.n(); ++i) {
        bool flipped = (A >> i) & 1;
        P.add(arr.normals[static_cast<std::size_t>(i)], arr.offsets[static_cast<std::size_t>(i)],
              flipped ? Sense::Le : Sense::Ge);
    }
    return P;
}

namespace {

// polyhedron for the equality system cap_{i in S} H_i
Polyhedron equality_system(const Arrangement& arr, Subset S) {
    Polyhedron P(arr.d, {});
    for (int i : subset_elements(S, arr.n()))
        P.add(arr.normals[static_cast<std::size_t>(i)], arr.offsets[static_cast<std::size_t>(i)], Sense::Eq);
    return P;
}

int subset_rank(const Arrangement& arr, Subset S) {
    Matrix<Rational> M;
    for (int i : subset_elements(S, arr.n())) {
        std::vector<Rational> row;
        for (long long x : arr.normals[static_cast<std::size_t>(i)]) row.emplace_back(x);
        M.append_row(row);
    }
    return static_cast<int>(M.rank());
}

void enumerate_subsets_of_size(int n, int k, const std::function<void(Subset)>& visit) {
    std::vector<int> idx(static_cast<std::size_t>(k));
    std::function<void(int, int)> rec = [&](int start, int depth) {
        if (depth == k) {
            Subset s = 0;
            for (int i : idx) s |= Subset{1} << i;
            visit(s);
            return;
        }
        for (int i = start; i < n; ++i) {
            idx[static_cast<std::size_t>(depth)] = i;
            rec(i + 1, depth + 1);
        }
    };
    rec(0, 0);
}

}  // namespace

bool is_simple(const Arrangement& arr) {
    // any m hyperplanes with a common point must have rank m; a violation of
    // rank r is witnessed by some subset of size r+1 <= d+1
    for (int size = 2; size <= arr.d + 1; ++size) {
        bool bad = false;
        enumerate_subsets_of_size(arr.n(), size, [&](Subset S) {
            if (bad) return;
            if (subset_rank(arr, S) < size && feasible(equality_system(arr, S))) bad = true;
        });
        if (bad) return false;
    }
    return true;
}

bool is_smooth(const Arrangement& arr) {
    bool ok = true;
    enumerate_subsets_of_size(arr.n(), arr.d, [&](Subset S) {
        if (!ok) return;
        Matrix<Rational> M;
        for (int i : subset_elements(S, arr.n())) {
            std::vector<Rational> row;
            for (long long x : arr.normals[static_cast<std::size_t>(i)]) row.emplace_back(x);
            M.append_row(row);
        }
        Rational det = determinant(M);
        if (det != 0 && det != 1 && det != -1) ok = false;
    });
    return ok;
}

std::vector<Subset> sr_empty_sets(const Arrangement& arr) {
    std::vector<Subset> minimal;
    auto contains_kept = [&](Subset S) {
        for (Subset m : minimal)
            if ((m & S) == m) return true;
        return false;
    };
    for (int size = 1; size <= arr.d + 2; ++size) {
        enumerate_subsets_of_size(arr.n(), size, [&](Subset S) {
            if (contains_kept(S)) return;
            if (!feasible(equality_system(arr, S))) minimal.push_back(S);
        });
    }
    std::sort(minimal.begin(), minimal.end(), [&](Subset a, Subset b) {
        int ca = __builtin_popcount(a), cb = __builtin_popcount(b);
        return ca != cb ? ca < cb : a < b;
    });
    return minimal;
}

namespace {

Polyhedron pair_system(const Arrangement& arr, Subset S1, Subset S2) {
    Polyhedron P(arr.d, {});
    for (int i : subset_elements(S1, arr.n()))
        P.add(arr.normals[static_cast<std::size_t>(i)], arr.offsets[static_cast<std::size_t>(i)], Sense::Le);
    for (int j : subset_elements(S2, arr.n()))
        P.add(arr.normals[static_cast<std::size_t>(j)], arr.offsets[static_cast<std::size_t>(j)], Sense::Ge);
    return P;
}

}  // namespace

std::vector<std::pair<Subset, Subset>> coor_empty_pairs(const Arrangement& arr) {
    const int n = arr.n();
    std::vector<std::pair<Subset, Subset>> minimal;
    auto dominated = [&](Subset S1, Subset S2) {
        for (auto& [m1, m2] : minimal)
            if ((m1 & S1) == m1 && (m2 & S2) == m2) return true;
        return false;
    };
    // minimal infeasible halfspace systems in R^d have at most d+1 members
    for (int size = 1; size <= arr.d + 1; ++size) {
        enumerate_subsets_of_size(n, size, [&](Subset U) {
            auto elems = subset_elements(U, n);
            // distribute U over (S1, S2)
            for (Subset pick = 0; pick < (Subset{1} << elems.size()); ++pick) {
                Subset S1 = 0, S2 = 0;
                for (std::size_t t = 0; t < elems.size(); ++t) {
                    if ((pick >> t) & 1) S2 |= Subset{1} << elems[t];
                    else S1 |= Subset{1} << elems[t];
                }
                if (dominated(S1, S2)) continue;
                if (!feasible(pair_system(arr, S1, S2))) minimal.emplace_back(S1, S2);
            }
        });
    }
    std::sort(minimal.begin(), minimal.end(), [&](const auto& a, const auto& b) {
        int ca = __builtin_popcount(a.first | a.second);
        int cb = __builtin_popcount(b.first | b.second);
        if (ca != cb) return ca < cb;
        if (a.first != b.first) return a.first < b.first;
        return a.second < b.second;
    });
    return minimal;
}

RingPtr kirwan_ring(int n, bool with_x, FieldTag field) {
    auto vars = numbered_vars("t", n);
    if (with_x) vars.push_back("x");
    return make_ring(std::move(vars), field);
}

std::vector<Poly<Rational>> kernel_linear_forms(const Arrangement& arr, const RingPtr& ring) {
    std::vector<Poly<Rational>> forms;
    for (int j = 0; j < arr.d; ++j) {
        Poly<Rational> f(ring);
        Monomial m(ring->nvars());
        for (int i = 0; i < arr.n(); ++i) {
            long long c = arr.normals[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            if (c == 0) continue;
            Monomial mi(ring->nvars());
            mi.e[static_cast<std::size_t>(i)] = 1;
            f.add_term(mi, Rational(c));
        }
        forms.push_back(std::move(f));
    }
    return forms;
}

PresentedRing<Rational> kirwan_presentation(const ValidatedArrangement& va,
                                            KirwanFlavor flavor) {
    const Arrangement& arr = va.arr;
    if (!is_simple(arr))
        throw precondition_error("kirwan_presentation requires a simple arrangement");
    bool with_x = (flavor == KirwanFlavor::HS1 || flavor == KirwanFlavor::HTdS1);
    bool with_kernel = (flavor == KirwanFlavor::H || flavor == KirwanFlavor::HS1);
    RingPtr ring = kirwan_ring(arr.n(), with_x);
    std::vector<Poly<Rational>> rels;

    if (!with_x) {
        for (Subset S : sr_empty_sets(arr)) {
            Poly<Rational> m = Poly<Rational>::constant(ring, Rational(1));
            for (int i : subset_elements(S, arr.n()))
                m = m * Poly<Rational>::variable(ring, static_cast<std::size_t>(i));
            rels.push_back(m);
        }
    } else {
        Poly<Rational> x = Poly<Rational>::variable(ring, "x");
        for (auto& [S1, S2] : coor_empty_pairs(arr)) {
            Poly<Rational> m = Poly<Rational>::constant(ring, Rational(1));
            for (int i : subset_elements(S1, arr.n()))
                m = m * Poly<Rational>::variable(ring, static_cast<std::size_t>(i));
            for (int j : subset_elements(S2, arr.n()))
                m = m * (x - Poly<Rational>::variable(ring, static_cast<std::size_t>(j)));
            rels.push_back(m);
        }
    }
    if (with_kernel) {
        for (auto& f : kernel_linear_forms(arr, ring)) rels.push_back(f);
    }
    return PresentedRing<Rational>{ring, Ideal<Rational>(ring, rels)};
}

}  // namespace hkq
